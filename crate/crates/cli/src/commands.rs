use std::path::Path;

use serde_json::{json, Map, Value};
use skewgb::binomial::{
    almost_skew_check, classify, equiv_classes, is_skew_2nomial, ordering_sat, same_lm_obstruction, select_basis_reps,
    skew_2nomial_gb, verify_order_axioms, Classification, Implication, Reason, SatWitness, SkewElement,
};
use skewgb::groebner::{check_gb, complete, minimalize, prop26_check};
use skewgb::quotient::{
    build_lh_quotient, build_quotient_with, check_skew_multiplicative, decompose, is_domain_upto, lift_gb_check,
    onesided_gb, NormalQuotient, QuotientAlgebra,
};
use skewgb::rewrite::{divide, DivisionResult};
use skewgb::{ExponentScheme, Poly, Presentation, Scalar, Side, Word};

use crate::{Cli, Command, Failure, Input, QuotientAction, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED};

type Res = Result<(i32, Value), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Presentation, Failure> {
    let path = input.path().ok_or_else(|| Failure::Usage("no presentation file given".into()))?;
    Ok(Presentation::parse(&read(path)?)?)
}

fn side(s: &str) -> Result<Side, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("unknown side '{s}' (left, right or two)")))
}

/// `None` stands for the ambient ordering.
fn scheme(s: &Option<String>) -> Result<Option<Option<ExponentScheme>>, Failure> {
    match s.as_deref() {
        None => Ok(None),
        Some("ambient") => Ok(Some(None)),
        Some(x) => x.parse().map(|s| Some(Some(s))).map_err(|_| Failure::Usage(format!("unknown scheme '{x}'"))),
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

struct Fmt<'a> {
    p: &'a Presentation,
}

impl Fmt<'_> {
    fn w(&self, w: &Word) -> Value {
        Value::String(self.p.render_word(w))
    }

    fn f(&self, f: &Poly) -> Value {
        Value::String(self.p.render(f))
    }

    fn fs(&self, fs: &[Poly]) -> Value {
        Value::Array(fs.iter().map(|f| self.f(f)).collect())
    }

    fn c(&self, c: &Scalar) -> Value {
        Value::String(c.to_string())
    }

    fn term(&self, c: &Scalar, w: &Word) -> Value {
        self.f(&Poly::term(c.clone(), w.clone()))
    }

    fn quotients(&self, r: &DivisionResult) -> Value {
        Value::Array(
            r.quotients
                .iter()
                .map(|q| {
                    json!({
                        "coeff": self.c(&q.coeff),
                        "left": self.w(&q.left),
                        "index": q.index + 1,
                        "right": self.w(&q.right),
                    })
                })
                .collect(),
        )
    }

    fn atom(&self, a: &(Word, Word)) -> Value {
        Value::String(format!("{} < {}", self.p.render_word(&a.0), self.p.render_word(&a.1)))
    }

    fn reason(&self, r: &Reason) -> Value {
        let r_ = |w: &Word| self.p.render_word(w);
        Value::String(match r {
            Reason::Product { left, right, m1, m2, n1, n2 } => format!(
                "{}·({}, {})·{} give multiples of ({}, {})",
                r_(left),
                r_(m1),
                r_(m2),
                r_(right),
                r_(n1),
                r_(n2)
            ),
            Reason::Below { left, right, u, m } => format!("LM({}·{}·{}) = {}", r_(left), r_(u), r_(right), r_(m)),
        })
    }

    fn chain(&self, steps: &[Implication]) -> Value {
        Value::Array(
            steps
                .iter()
                .map(|s| json!({ "from": self.atom(&s.from), "to": self.atom(&s.to), "because": self.reason(&s.reason) }))
                .collect(),
        )
    }

    fn classification(&self, c: &Classification) -> Value {
        let gen = |k: usize| Word::gen(c.perm[k]);
        let slots: Vec<Value> = c
            .slots
            .iter()
            .map(|s| {
                json!({
                    "lead": self.w(&gen(s.j).concat(&gen(s.i))),
                    "lambda": self.c(&s.lambda),
                    "tail": s.tail.as_ref().map(|t| self.w(t)),
                })
            })
            .collect();
        json!({
            "tags": c.tag_names(),
            "permutation": c.perm.iter().map(|&g| self.p.names[g].clone()).collect::<Vec<_>>(),
            "omega": c.omega.iter().map(|w| self.w(w)).collect::<Vec<_>>(),
            "slots": slots,
            "diagnostic": c.diagnostic,
        })
    }
}

fn header(name: &str, cli: &Cli) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(name));
    m.insert("max_deg".into(), json!(cli.max_deg));
    m
}

fn with_lh(p: Presentation, lh: bool) -> Result<Presentation, Failure> {
    if lh {
        Ok(almost_skew_check(&p)?.lh)
    } else {
        Ok(p)
    }
}

fn quotient(p: &Presentation, cli: &Cli, scheme: Option<ExponentScheme>, lh: bool) -> Result<QuotientAlgebra, Failure> {
    if lh {
        Ok(build_lh_quotient(p, cli.max_deg, scheme)?)
    } else {
        Ok(build_quotient_with(p, cli.max_deg, scheme)?)
    }
}

pub fn dispatch(cli: &Cli) -> Res {
    let d = cli.max_deg;
    match &cli.command {
        Command::Nf { input, poly, side: s, trace } => {
            let p = load(input)?;
            let f = p.poly(poly)?;
            let side = side(s)?;
            let r = divide(&f, &p.relations, &p.order, side);
            let fm = Fmt { p: &p };
            let mut m = header("nf", cli);
            m.remove("max_deg");
            m.insert("side".into(), json!(side.name()));
            m.insert("input".into(), fm.f(&f));
            m.insert("remainder".into(), fm.f(&r.remainder));
            m.insert("steps".into(), json!(r.steps));
            if *trace {
                m.insert("quotients".into(), fm.quotients(&r));
            }
            Ok((EXIT_OK, Value::Object(m)))
        }
        Command::CheckGb { input } => {
            let p = load(input)?;
            let r = check_gb(&p.relations, &p.order, d);
            let fm = Fmt { p: &p };
            let mut m = header("check-gb", cli);
            m.insert("verdict".into(), json!(r.verdict().name()));
            m.insert("all_overlaps_examined".into(), json!(r.complete));
            m.insert("overlaps_examined".into(), json!(r.examined));
            m.insert("overlaps_skipped".into(), json!(r.skipped));
            let cert = r.certificate.as_ref().map(|c| {
                json!({
                    "first": c.config.i + 1,
                    "second": c.config.j + 1,
                    "kind": c.config.overlap.kind.name(),
                    "word": fm.w(&c.config.overlap.word),
                    "element": fm.f(&c.element),
                    "remainder": fm.f(&c.remainder),
                })
            });
            m.insert("certificate".into(), json!(cert));
            Ok((r.verdict().exit_code(), Value::Object(m)))
        }
        Command::Complete { input, minimal: _ } => {
            let p = load(input)?;
            let c = complete(&p.relations, &p.order, d);
            let fm = Fmt { p: &p };
            let mut m = header("complete", cli);
            m.insert("truncated".into(), json!(c.truncated));
            m.insert("size".into(), json!(c.basis.len()));
            m.insert("basis".into(), fm.fs(&c.basis));
            Ok((if c.truncated { EXIT_INCONCLUSIVE } else { EXIT_OK }, Value::Object(m)))
        }
        Command::Prop26 { input } => {
            let p = load(input)?;
            let r = prop26_check(&p.relations, &p.order, d)?;
            let fm = Fmt { p: &p };
            let mut m = header("prop26", cli);
            m.insert("is_gb".into(), json!(r.is_gb));
            m.insert("lh_is_gb".into(), json!(r.lh_is_gb));
            m.insert("equivalent".into(), json!(r.is_gb == r.lh_is_gb));
            m.insert("lh".into(), fm.fs(&r.lh));
            m.insert("lh_overlaps_reduce".into(), json!(r.lh_gb.verified));
            m.insert("staircase_ok".into(), json!(r.staircase_ok));
            m.insert("all_overlaps_examined".into(), json!(r.conclusive));
            Ok((code(r.is_gb && r.lh_is_gb), Value::Object(m)))
        }
        Command::Classify { input, lh } => {
            let p = with_lh(load(input)?, *lh)?;
            let gb = check_gb(&p.relations, &p.order, d);
            let basis = minimalize(&p.relations, &p.order);
            let c = classify(&basis, &p.order)?;
            let fm = Fmt { p: &p };
            let mut m = header("classify", cli);
            m.insert("gb".into(), json!(gb.verdict().name()));
            if let Value::Object(x) = fm.classification(&c) {
                m.extend(x);
            }
            Ok((code(!c.is_none()), Value::Object(m)))
        }
        Command::Equiv { input } => {
            let p = load(input)?;
            let nq = NormalQuotient::from_presentation(&p, d);
            let cl = equiv_classes(&nq, d)?;
            let fm = Fmt { p: &p };
            let reps = select_basis_reps(&cl);
            let zero: Vec<Value> = cl.members(0).map(|w| fm.w(w)).collect();
            let classes: Vec<Value> = reps
                .iter()
                .enumerate()
                .map(|(k, (rep, c))| {
                    let members: Vec<Value> = cl
                        .members(k + 1)
                        .map(|w| Value::String(format!("{} = {}", p.render_word(w), p.render(&Poly::term(cl.entry(w).unwrap().scalar.clone(), rep.clone())))))
                        .collect();
                    json!({ "rep": fm.w(rep), "scalar": fm.c(c), "members": members })
                })
                .collect();
            let mut m = header("equiv", cli);
            m.insert("words".into(), json!(cl.entries().len()));
            m.insert("nonzero_classes".into(), json!(reps.len()));
            m.insert("zero_class".into(), Value::Array(zero));
            m.insert("classes".into(), Value::Array(classes));
            Ok((EXIT_OK, Value::Object(m)))
        }
        Command::SkewgbExtract { input } => {
            let p = load(input)?;
            let gb = check_gb(&p.relations, &p.order, d);
            if !gb.verified {
                return Err(Failure::Library(skewgb::Error::Hypothesis("relations are not a Gröbner basis".into())));
            }
            let out = skew_2nomial_gb(&p.relations, &p.order)?;
            let fm = Fmt { p: &p };
            let elems: Vec<Value> = out
                .iter()
                .map(|e| {
                    let kind = match e {
                        SkewElement::Monomial(_) => "monomial",
                        SkewElement::Binomial(_) => "skew 2-nomial",
                    };
                    json!({ "kind": kind, "poly": fm.f(&e.to_poly(p.field)) })
                })
                .collect();
            let polys: Vec<Poly> = out.iter().map(|e| e.to_poly(p.field)).collect();
            let mut m = header("skewgb-extract", cli);
            m.insert("input_skew_2nomial".into(), json!(is_skew_2nomial(&p.relations)));
            m.insert("basis".into(), Value::Array(elems));
            m.insert("gb".into(), json!(check_gb(&polys, &p.order, d).verdict().name()));
            Ok((EXIT_OK, Value::Object(m)))
        }
        Command::Obstruct { input, side: s } => {
            let p = load(input)?;
            let side = side(s)?;
            let nq = NormalQuotient::from_presentation(&p, d);
            let w = same_lm_obstruction(&nq, d, side)?;
            let fm = Fmt { p: &p };
            let mut m = header("obstruct", cli);
            m.insert("side".into(), json!(side.name()));
            m.insert("found".into(), json!(w.is_some()));
            let wit = w.as_ref().map(|w| {
                let prod = |u: &Word, c: &Scalar| {
                    format!("NF({}) = {}", p.render_word(&u.sandwich(&w.left, &w.right)), p.render(&Poly::term(c.clone(), w.m.clone())))
                };
                json!({
                    "left": fm.w(&w.left),
                    "right": fm.w(&w.right),
                    "u1": fm.w(&w.u1),
                    "u2": fm.w(&w.u2),
                    "m": fm.w(&w.m),
                    "products": [prod(&w.u1, &w.c1), prod(&w.u2, &w.c2)],
                })
            });
            m.insert("witness".into(), json!(wit));
            Ok((if w.is_some() { EXIT_REFUTED } else { EXIT_INCONCLUSIVE }, Value::Object(m)))
        }
        Command::SatOrder { input, side: s } => {
            let p = load(input)?;
            let side = side(s)?;
            let nq = NormalQuotient::from_presentation(&p, d);
            let r = ordering_sat(&nq, d, side)?;
            let fm = Fmt { p: &p };
            let mut m = header("sat-order", cli);
            m.insert("side".into(), json!(side.name()));
            m.insert("result".into(), json!(if r.sat { "sat" } else { "unsat" }));
            m.insert("conclusive".into(), json!(!r.sat));
            m.insert("variables".into(), json!(r.variables));
            m.insert("implications".into(), json!(r.clauses));
            let wit = match &r.witness {
                None => Value::Null,
                Some(SatWitness::Cycle { atom, forward, backward }) => json!({
                    "atom": fm.atom(atom),
                    "forward": fm.chain(forward),
                    "backward": fm.chain(backward),
                }),
                Some(SatWitness::Reflexive(reason)) => json!({ "reflexive": fm.reason(reason) }),
            };
            m.insert("witness".into(), wit);
            Ok((code(r.sat), Value::Object(m)))
        }
        Command::Axioms { input, side: s, scheme: sc, lh } => {
            let p = load(input)?;
            let side = side(s)?;
            let chosen = scheme(sc)?;
            let (nq, report, desc) = match chosen {
                Some(None) => {
                    let p = with_lh(p.clone(), *lh)?;
                    let nq = NormalQuotient::from_presentation(&p, d);
                    let r = verify_order_axioms(&nq, &nq.order, d, side)?;
                    let desc = format!("ambient {}", nq.order.kind().name());
                    (nq, r, desc)
                }
                other => {
                    let q = quotient(&p, cli, other.flatten(), *lh)?;
                    let r = verify_order_axioms(&q.base, &q.order, d, side)?;
                    (q.base.clone(), r, q.order.describe())
                }
            };
            let pr = nq.presentation();
            let fm = Fmt { p: &pr };
            let mut m = header("axioms", cli);
            m.insert("side".into(), json!(side.name()));
            m.insert("order".into(), json!(desc));
            m.insert("passed".into(), json!(report.passed));
            m.insert("configurations".into(), json!(report.configs));
            m.insert("comparisons".into(), json!(report.comparisons));
            m.insert("exempt_products".into(), json!(report.skipped));
            let v = report.violation.as_ref().map(|v| {
                json!({
                    "axiom": v.axiom,
                    "left": fm.w(&v.left),
                    "right": fm.w(&v.right),
                    "u1": fm.w(&v.u1),
                    "u2": v.u2.as_ref().map(|u| fm.w(u)),
                    "lm1": fm.w(&v.lm1),
                    "lm2": v.lm2.as_ref().map(|u| fm.w(u)),
                })
            });
            m.insert("violation".into(), json!(v));
            Ok((code(report.passed), Value::Object(m)))
        }
        Command::Almost { input } => {
            let p = load(input)?;
            let r = almost_skew_check(&p)?;
            let fm = Fmt { p: &p };
            let mut m = header("almost", cli);
            m.remove("max_deg");
            m.insert("almost_skew_2nomial".into(), json!(r.almost));
            m.insert("offending_relation".into(), json!(r.offending.map(|k| k + 1)));
            m.insert("lh".into(), fm.fs(&r.lh.relations));
            m.insert("presentation".into(), json!(r.lh.to_text().lines().collect::<Vec<_>>()));
            Ok((code(r.almost), Value::Object(m)))
        }
        Command::Quotient { action: QuotientAction::Build { input, scheme: sc, lh } } => {
            let p = load(input)?;
            let chosen = scheme(sc)?.flatten();
            let q = quotient(&p, cli, chosen, *lh)?;
            let pr = q.base.presentation();
            let fm = Fmt { p: &pr };
            let closure = check_skew_multiplicative(&q.base, d)?;
            let dims: Vec<usize> = (0..=d).map(|k| q.dimension_upto(k) - if k == 0 { 0 } else { q.dimension_upto(k - 1) }).collect();
            let mut m = header("quotient build", cli);
            if let Value::Object(x) = fm.classification(&q.classification) {
                m.extend(x);
            }
            m.insert("order".into(), json!(q.order.describe()));
            m.insert("basis".into(), fm.fs(&q.base.gb));
            m.insert("dimension_by_degree".into(), json!(dims));
            m.insert("skew_multiplicative".into(), json!(closure.is_none()));
            m.insert("normal_words".into(), Value::Array(q.sorted_normal_words().iter().map(|w| fm.w(w)).collect()));
            Ok((code(closure.is_none()), Value::Object(m)))
        }
        Command::Qmul { input, u, v } => {
            let p = load(input)?;
            let (u, v) = (p.word(u)?, p.word(v)?);
            let nq = NormalQuotient::from_presentation(&p, d);
            for w in [&u, &v] {
                if !nq.is_normal(w) {
                    return Err(Failure::Usage(format!("{} is not a normal word", p.render_word(w))));
                }
            }
            let r = nq.mul(&u, &v)?;
            let fm = Fmt { p: &p };
            let mut m = header("qmul", cli);
            m.insert("u".into(), fm.w(&u));
            m.insert("v".into(), fm.w(&v));
            match &r {
                Some((c, w)) => {
                    m.insert("product".into(), fm.term(c, w));
                    m.insert("scalar".into(), fm.c(c));
                    m.insert("word".into(), fm.w(w));
                }
                None => {
                    m.insert("product".into(), json!("0"));
                }
            }
            Ok((EXIT_OK, Value::Object(m)))
        }
        Command::OnesidedGb { input, gens_file, side: s } => {
            let p = load(input)?;
            let side = side(s)?;
            let text = read(gens_file)?;
            let mut gens = Vec::new();
            for line in text.lines() {
                let line = line.split('#').next().unwrap().trim();
                if !line.is_empty() {
                    gens.push(p.poly(line)?);
                }
            }
            let q = quotient(&p, cli, None, false)?;
            let b = onesided_gb(&q, &gens, side, d)?;
            let fm = Fmt { p: &p };
            let mut m = header("onesided-gb", cli);
            m.insert("side".into(), json!(side.name()));
            m.insert("order".into(), json!(q.order.describe()));
            m.insert("span_dimension".into(), json!(b.span));
            m.insert("basis".into(), fm.fs(&b.elements));
            Ok((EXIT_OK, Value::Object(m)))
        }
        Command::Domain { input, lh } => {
            let p = with_lh(load(input)?, *lh)?;
            let nq = NormalQuotient::from_presentation(&p, d);
            let r = is_domain_upto(&nq, d)?;
            let mut m = header("domain", cli);
            m.insert("domain".into(), json!(r.domain));
            m.insert("pairs_checked".into(), json!(r.pairs));
            m.insert(
                "zero_product".into(),
                json!(r.zero_product.as_ref().map(|(u, v)| format!("{}·{} = 0", p.render_word(u), p.render_word(v)))),
            );
            Ok((code(r.domain), Value::Object(m)))
        }
        Command::LiftCheck { input, j_file, samples } => {
            let p = load(input)?;
            let j = Presentation::parse(&read(j_file)?)?;
            if j.names != p.names {
                return Err(Failure::Usage("the two presentations use different generators".into()));
            }
            let nq = NormalQuotient::from_presentation(&p, d);
            let q_lh = build_lh_quotient(&p, d, None)?;
            let r = lift_gb_check(&j.relations, &nq, &q_lh, d, *samples, cli.seed)?;
            let fm = Fmt { p: &p };
            let mut m = header("lift-check", cli);
            m.insert("passed".into(), json!(r.passed));
            m.insert("order".into(), json!(q_lh.order.describe()));
            m.insert("seed".into(), json!(r.seed));
            m.insert("samples".into(), json!(r.samples));
            m.insert("nonzero_samples".into(), json!(r.nonzero));
            m.insert("lifted_basis".into(), fm.fs(&r.lifted));
            m.insert("homogeneous_basis".into(), fm.fs(&r.homogeneous));
            m.insert("completion_truncated".into(), json!(r.completion_truncated));
            m.insert("failure".into(), json!(r.failure.as_ref().map(|f| fm.f(f))));
            Ok((code(r.passed), Value::Object(m)))
        }
        Command::Decompose { input, poly } => {
            let p = load(input)?;
            let f = p.poly(poly)?;
            let nq = NormalQuotient::from_presentation(&p, d);
            let r = decompose(&nq, &f)?;
            let fm = Fmt { p: &p };
            let ideal = f.sub(&r.remainder);
            let mut m = header("decompose", cli);
            m.insert("input".into(), fm.f(&f));
            m.insert("basis".into(), fm.fs(&nq.gb));
            m.insert("ideal_part".into(), fm.f(&ideal));
            m.insert("presentation".into(), fm.quotients(&r));
            m.insert("normal_part".into(), fm.f(&r.remainder));
            m.insert("reconstructs".into(), json!(r.reconstruct(&nq.gb) == f));
            Ok((EXIT_OK, Value::Object(m)))
        }
    }
}
