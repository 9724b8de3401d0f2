//! Acceptance criteria, one PASS/FAIL line each. Arithmetic is exact
//! throughout; nothing is compared with a tolerance.

use std::collections::BTreeSet;
use std::panic;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use skewgb::binomial::{equiv_classes, select_basis_reps, skew_2nomial_gb};
use skewgb::corpus::{self, fixture, q};
use skewgb::groebner::{check_gb, complete, MembershipOracle};
use skewgb::quotient::{check_skew_multiplicative, NormalQuotient};
use skewgb::rewrite::{normal_form, normal_words};
use skewgb::{Field, Poly, Presentation, Scalar, Word};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn corpus_file(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "corpus", &format!("{name}.alg")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch_file(name: &str, text: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> skewgb_cli::Outcome {
    skewgb_cli::run(std::iter::once("skewgb").chain(args.iter().copied()))
}

/// Exit code and parsed JSON report.
fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = cli(&a);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}\n{}", out.stdout));
    (out.code, v)
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9i64..=9);
    }
    let d: i64 = rng.gen_range(1..=5);
    q(&format!("{n}/{d}"))
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut runs = 0;
    for n in [2usize, 3] {
        for p in [2usize, 3] {
            for _ in 0..5 {
                let lambdas: Vec<Scalar> = (0..n * n).map(|_| random_rational(&mut rng)).collect();
                let omega: Vec<usize> = (1..=n).collect();
                let pres = corpus::ex4(n, p, |j, i| lambdas[(j - 1) * n + (i - 1)].clone(), &omega);
                let d = (n * p) as u32;
                let r = check_gb(&pres.relations, &pres.order, d);
                ensure!(r.verified && r.complete, "n={n} p={p}: overlap element failed to reduce: {:?}", r.certificate);
                let count = normal_words(&pres.relations, &pres.order, d).len();
                ensure!(count == p.pow(n as u32), "n={n} p={p}: {count} normal words, expected {}", p.pow(n as u32));
                runs += 1;
            }
            let name = format!("ex4_n{n}_p{p}");
            let (code, v) = json(&["check-gb", &corpus_file(&name)]);
            ensure!(code == 0 && v["verdict"] == "verified", "{name}: check-gb exit {code}");
        }
    }
    Ok(format!("{runs} random instances verified, normal-word counts p^n"))
}

fn criterion_2() -> Check {
    for case in ["ex1_case1", "ex1_case2", "ex1_case3", "ex1_case4", "ex1_case5", "ex1_case5_neg"] {
        let (code, v) = json(&["check-gb", &corpus_file(case)]);
        ensure!(code == 0 && v["verdict"] == "verified", "{case}: exit {code}, verdict {}", v["verdict"]);
    }
    let (code, v) = json(&["check-gb", &corpus_file("ex1_off")]);
    ensure!(code == 1 && v["verdict"] == "refuted", "off-case not refuted (exit {code})");
    let cert = &v["certificate"];
    let pres = fixture("ex1_off").unwrap().presentation();
    let element = pres.poly(cert["element"].as_str().unwrap()).unwrap();
    let remainder = pres.poly(cert["remainder"].as_str().unwrap()).unwrap();
    ensure!(!remainder.is_zero(), "certificate remainder is zero");
    ensure!(normal_form(&element, &pres.relations, &pres.order) == remainder, "certificate does not replay");
    Ok(format!("six cases verified; off-case remainder {}", cert["remainder"].as_str().unwrap()))
}

fn criterion_3() -> Check {
    for case in ["ex2_case1", "ex2_case2", "ex2_case3", "ex2_case4", "ex2_case5", "ex2_case5_neg"] {
        let (code, v) = json(&["check-gb", &corpus_file(case)]);
        ensure!(code == 0 && v["verdict"] == "verified", "{case}: exit {code}");
        let (code, v) = json(&["classify", &corpus_file(case)]);
        ensure!(code == 0 && strs(&v["tags"]) == ["RightType"], "{case}: tags {}", v["tags"]);
    }
    Ok("six cases verified, all RightType".into())
}

fn criterion_4() -> Check {
    for case in ["ex1_case5", "ex2_case5", "ex3"] {
        let (code, v) = json(&["sat-order", &corpus_file(case), "--side", "two", "--max-deg", "4"]);
        ensure!(code == 1 && v["result"] == "unsat", "{case}: two-sided sat-order gave {}", v["result"]);
        ensure!(v["witness"].is_object(), "{case}: no witness");
    }
    let (code, v) = json(&["sat-order", &corpus_file("ex1_case5"), "--side", "left", "--max-deg", "4"]);
    ensure!(code == 0 && v["result"] == "sat", "ex1 left sat-order gave {}", v["result"]);
    let expect = [
        ("ex5_mu0", "X3", "1", "X2", "X2^2", "X3"),
        ("ex6_lambda0", "1", "X1", "X2", "X2^2", "X1"),
        ("ex7_case5", "X3", "1", "X1", "X1^2", "X3"),
    ];
    for (case, left, right, u1, u2, m) in expect {
        let (code, v) = json(&["obstruct", &corpus_file(case), "--side", "two", "--max-deg", "3"]);
        let w = &v["witness"];
        ensure!(code == 1, "{case}: no witness (exit {code})");
        let got = [&w["left"], &w["right"], &w["u1"], &w["u2"], &w["m"]].map(|x| x.as_str().unwrap_or("").to_string());
        ensure!(got == [left, right, u1, u2, m], "{case}: witness {got:?}");
    }
    Ok("three two-sided refutations, left sat, three same-LM witnesses".into())
}

/// `axioms` exit code for one side and scheme.
fn axioms(file: &str, side: &str, scheme: &str, lh: bool) -> i32 {
    let mut a = vec!["axioms", file, "--side", side, "--scheme", scheme, "--max-deg", "6"];
    if lh {
        a.push("--lh");
    }
    cli(&a).code
}

fn criterion_5() -> Check {
    let (_, v) = json(&["classify", &corpus_file("ex1_case5")]);
    ensure!(strs(&v["tags"]) == ["LeftType"], "ex1 tags {}", v["tags"]);
    ensure!(axioms(&corpus_file("ex1_case5"), "left", "deglex", false) == 0, "ex1 left axioms fail");
    ensure!(axioms(&corpus_file("ex1_case5"), "two", "deglex", false) == 1, "ex1 two-sided axioms pass");

    let (_, v) = json(&["classify", &corpus_file("ex2_case5")]);
    ensure!(strs(&v["tags"]) == ["RightType"], "ex2 tags {}", v["tags"]);
    ensure!(axioms(&corpus_file("ex2_case5"), "right", "degrevlex", false) == 0, "ex2 right axioms fail");
    ensure!(axioms(&corpus_file("ex2_case5"), "two", "degrevlex", false) == 1, "ex2 two-sided axioms pass");

    for case in ["ex7_wide", "ex7_downup"] {
        let (_, v) = json(&["classify", &corpus_file(case), "--lh"]);
        ensure!(strs(&v["tags"]).contains(&"TwoSidedType".to_string()), "{case} LH tags {}", v["tags"]);
        ensure!(strs(&v["permutation"]) == ["X2", "X1", "X3"], "{case} permutation {}", v["permutation"]);
        for scheme in ["lex", "deglex", "degrevlex"] {
            ensure!(axioms(&corpus_file(case), "two", scheme, true) == 0, "{case} LH two-sided axioms fail for {scheme}");
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let qs: Vec<Scalar> = (0..16).map(|_| random_rational(&mut rng)).collect();
    let qspace = corpus::quantum_space(4, |j, i| qs[(j - 1) * 4 + (i - 1)].clone());
    let file = scratch_file("qspace_random.alg", &qspace.to_text());
    let (_, v) = json(&["classify", &file]);
    ensure!(strs(&v["tags"]).contains(&"TwoSidedType".to_string()), "quantum space tags {}", v["tags"]);
    for scheme in ["lex", "deglex", "degrevlex"] {
        for side in ["left", "right", "two"] {
            ensure!(axioms(&file, side, scheme, false) == 0, "quantum space {side} axioms fail for {scheme}");
        }
    }
    Ok("Left/Right/TwoSided tags with matching axiom verdicts at degree 6".into())
}

fn criterion_6() -> Check {
    for case in ["ex5_generic", "ex7_wide", "ex7_unit"] {
        let (code, v) = json(&["prop26", &corpus_file(case)]);
        ensure!(code == 0 && v["is_gb"] == true && v["lh_is_gb"] == true, "{case}: is_gb {} lh_is_gb {}", v["is_gb"], v["lh_is_gb"]);
    }
    let file = scratch_file("lh_negative.alg", "gens x y\norder deglex x y\nrel y*x - x\nrel y^2*x\n");
    let (code, v) = json(&["prop26", &file]);
    ensure!(code == 1 && v["is_gb"] == false && v["lh_is_gb"] == false, "negative case: is_gb {} lh_is_gb {}", v["is_gb"], v["lh_is_gb"]);
    Ok("both true on three fixtures, both false on {yx - x, y^2x}".into())
}

fn criterion_7() -> Check {
    let names = [
        "ex1_case1", "ex1_case2", "ex1_case3", "ex1_case4", "ex1_case5", "ex1_case5_neg", "ex2_case1", "ex2_case2", "ex2_case3",
        "ex2_case4", "ex2_case5", "ex2_case5_neg", "ex4_n2_p2", "ex4_n2_p3", "ex4_n3_p2", "ex4_n3_p3", "qplane",
    ];
    for name in names {
        let pres = fixture(name).unwrap().presentation();
        let nq = NormalQuotient::from_presentation(&pres, 5);
        ensure!(check_skew_multiplicative(&nq, 5).unwrap().is_none(), "{name}: product with several terms");
        let out = skew_2nomial_gb(&pres.relations, &pres.order).map_err(|e| format!("{name}: {e}"))?;
        let polys: Vec<Poly> = out.iter().map(|e| e.to_poly(pres.field)).collect();
        ensure!(polys.iter().all(|p| p.len() <= 2), "{name}: extracted member with three terms");
        let lms = |gs: &[Poly]| gs.iter().map(|g| g.lm(&pres.order).unwrap().clone()).collect::<BTreeSet<Word>>();
        ensure!(lms(&polys) == lms(&pres.relations), "{name}: leading monomials changed");
        ensure!(check_gb(&polys, &pres.order, 6).verified, "{name}: extraction is not a Gröbner basis");
    }
    let red = Presentation::parse("gens x y\nrel y*x - 2*x*y\nrel y^2*x - 4*x*y^2 + y*x - 2*x*y\n").unwrap();
    let out: Vec<Poly> = skew_2nomial_gb(&red.relations, &red.order).unwrap().iter().map(|e| e.to_poly(red.field)).collect();
    ensure!(out == red.with_relations(vec![red.poly("y*x - 2*x*y").unwrap(), red.poly("y^2*x - 4*x*y^2").unwrap()]).relations, "redundant basis: {out:?}");

    let ones = corpus::quantum_space(3, |_, _| Field::Rational.one());
    let nq = NormalQuotient::from_presentation(&ones, 5);
    let reps = select_basis_reps(&equiv_classes(&nq, 5).unwrap());
    ensure!(reps.iter().all(|(_, c)| c.is_one()), "a representative scalar differs from 1");
    ensure!(reps.iter().map(|r| &r.0).eq(nq.normal_words().iter()), "representatives differ from normal words");
    Ok(format!("{} fixtures skew multiplicative to degree 5; extraction and unit-scalar reps hold", names.len()))
}

fn random_poly(rng: &mut ChaCha8Rng, pres: &Presentation, in_ideal: bool) -> Poly {
    let g = &pres.grading;
    let ball = skewgb::word::words_upto(g, 6);
    let field = pres.field;
    let mut f = Poly::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let c = field.from_i64(rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 });
        if in_ideal {
            let r = &pres.relations[rng.gen_range(0..pres.relations.len())];
            let budget = 6u32.saturating_sub(r.degree(g).unwrap());
            let fit: Vec<&Word> = ball.iter().filter(|w| w.degree(g) <= budget).collect();
            let v = fit[rng.gen_range(0..fit.len())];
            let fit: Vec<&Word> = fit.iter().copied().filter(|w| w.degree(g) + v.degree(g) <= budget).collect();
            let s = fit[rng.gen_range(0..fit.len())];
            f = f.add(&r.sandwich(v, s).scale(&c));
        } else {
            f = f.add(&Poly::term(c, ball[rng.gen_range(0..ball.len())].clone()));
        }
    }
    f
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut fixtures = 0;
    let (mut zero, mut nonzero) = (0, 0);
    for fx in corpus::corpus() {
        let pres = fx.presentation();
        if !check_gb(&pres.relations, &pres.order, 6).verified {
            continue;
        }
        fixtures += 1;
        let oracle = MembershipOracle::new(&pres.relations, &pres.order, 6);
        for k in 0..50 {
            let f = random_poly(&mut rng, &pres, k % 2 == 0);
            if f.degree(&pres.grading).is_some_and(|d| d > 6) {
                continue;
            }
            let nf_zero = normal_form(&f, &pres.relations, &pres.order).is_zero();
            ensure!(nf_zero == oracle.contains(&f), "{}: NF and oracle disagree on {}", fx.name, pres.render(&f));
            if nf_zero {
                zero += 1;
            } else {
                nonzero += 1;
            }
        }
    }
    Ok(format!("{fixtures} fixtures, {zero} members and {nonzero} non-members agree"))
}

fn criterion_9() -> Check {
    let ex8 = corpus_file("ex8");
    let (code, v) = json(&["check-gb", &ex8]);
    ensure!(code == 0 && v["verdict"] == "verified", "ex8 check-gb exit {code}");
    let (_, v) = json(&["classify", &ex8, "--lh"]);
    ensure!(strs(&v["tags"]) == ["LeftType"], "LH tags {}", v["tags"]);
    ensure!(v["omega"].as_array().unwrap().is_empty(), "LH has monomial relations");
    let slots = v["slots"].as_array().unwrap();
    ensure!(slots.len() == 6 && slots.iter().all(|s| s["lambda"] != "0"), "LH slots {}", v["slots"]);
    let (code, v) = json(&["domain", &ex8, "--lh", "--max-deg", "6"]);
    ensure!(code == 0 && v["domain"] == true, "LH quotient has zero divisor {}", v["zero_product"]);
    let (code, v) = json(&["lift-check", &ex8, "--j-file", &corpus_file("ex8_j"), "--samples", "100", "--seed", "0"]);
    ensure!(code == 0 && v["passed"] == true, "lift check failed on {}", v["failure"]);
    ensure!(strs(&v["lifted_basis"]) == ["X1"], "lifted basis {}", v["lifted_basis"]);
    let mut bad = corpus::ex8_default();
    bad.l41 = q("3");
    ensure!(corpus::ex8(&bad).is_err(), "parameters violating the constraints were accepted");
    Ok(format!("lifted basis {{X1}}, {} nonzero samples", v["nonzero_samples"]))
}

fn criterion_10() -> Check {
    let qplane = corpus_file("qplane");
    let ex1 = corpus_file("ex1_case5");
    let ex8 = corpus_file("ex8");
    let gens = scratch_file("gens_x.txt", "x\n");
    let commands: Vec<Vec<&str>> = vec![
        vec!["nf", &qplane, "--poly", "y*y*x", "--trace"],
        vec!["check-gb", &ex1],
        vec!["complete", &ex1],
        vec!["prop26", &ex1],
        vec!["classify", &ex1],
        vec!["equiv", &qplane, "--max-deg", "3"],
        vec!["skewgb-extract", &ex1],
        vec!["obstruct", &ex1, "--max-deg", "3"],
        vec!["sat-order", &ex1, "--max-deg", "3"],
        vec!["axioms", &ex1, "--side", "left", "--scheme", "deglex"],
        vec!["almost", &ex1],
        vec!["quotient", "build", &qplane],
        vec!["qmul", &qplane, "--u", "x*y", "--v", "x*y"],
        vec!["onesided-gb", &qplane, "--gens-file", &gens, "--side", "left", "--max-deg", "4"],
        vec!["domain", &qplane],
        vec!["lift-check", &ex8, "--j-file", &ex8],
        vec!["decompose", &qplane, "--poly", "y^2*x"],
    ];
    for c in &commands {
        for json in [false, true] {
            let mut a = c.clone();
            if json {
                a.push("--json");
            }
            ensure!(cli(&a) == cli(&a), "{a:?} differs between runs");
        }
    }
    for fx in corpus::corpus() {
        let p = fx.presentation();
        let once = complete(&p.relations, &p.order, 6);
        let twice = complete(&once.basis, &p.order, 6);
        ensure!(once.basis == twice.basis, "{}: completion not idempotent", fx.name);
    }
    Ok(format!("{} commands byte-identical in both formats; completion idempotent on {} fixtures", commands.len(), corpus::corpus().len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("overlap verification on nilpotent quantum relations", criterion_1),
        ("left-type parameter table", criterion_2),
        ("right-type parameter table", criterion_3),
        ("ordering obstructions", criterion_4),
        ("classification and axiom verdicts", criterion_5),
        ("leading homogeneous correspondence", criterion_6),
        ("skew 2-nomial suite", criterion_7),
        ("oracle equivalence", criterion_8),
        ("ordering and basis lifting", criterion_9),
        ("determinism", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let r = panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
