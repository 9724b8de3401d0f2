//! Arithmetic in `R/I` on the basis of normal words, one-sided Gröbner bases
//! inside the quotient, and lifting orderings from the leading homogeneous
//! algebra.

mod normal;

pub use normal::{single_term, NormalQuotient};

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binomial::{almost_skew_check, check_hypothesis, classify, induced_order, multiplier_configs, Classification, TypeTag};
use crate::error::{Error, Result};
use crate::groebner::{check_gb, complete, minimalize};
use crate::order::{ExponentScheme, MonomialOrder, QuotientOrder};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::rewrite::{divide_two_sided, DivisionResult};
use crate::scalar::Scalar;
use crate::word::{words_upto, Side, Word};

/// A skew 2-nomial quotient with the ordering its classification induces
/// on normal words.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub base: NormalQuotient,
    pub classification: Classification,
    pub order: QuotientOrder,
    /// Normal words ascending under `order`.
    sorted: Vec<Word>,
    rank: HashMap<Word, usize>,
}

fn default_scheme(c: &Classification) -> Option<ExponentScheme> {
    if c.has(TypeTag::LeftType) || c.has(TypeTag::TwoSidedType) {
        Some(ExponentScheme::DegLex)
    } else if c.has(TypeTag::RightType) {
        Some(ExponentScheme::DegRevLex)
    } else {
        None
    }
}

pub fn build_quotient(pres: &Presentation, maxdeg: u32) -> Result<QuotientAlgebra> {
    build_quotient_with(pres, maxdeg, None)
}

/// Verify the relations form a Gröbner basis, classify them, check the
/// ordered-word hypothesis and attach the induced ordering (`scheme`, or the
/// default for the classification).
pub fn build_quotient_with(pres: &Presentation, maxdeg: u32, scheme: Option<ExponentScheme>) -> Result<QuotientAlgebra> {
    let gb = check_gb(&pres.relations, &pres.order, maxdeg);
    if let Some(cert) = &gb.certificate {
        return Err(Error::Hypothesis(format!(
            "relations are not a Gröbner basis: an overlap leaves {}",
            pres.render(&cert.remainder)
        )));
    }
    let basis = minimalize(&pres.relations, &pres.order);
    let c = classify(&basis, &pres.order)?;
    if c.is_none() {
        return Err(Error::Hypothesis(format!(
            "relations match none of the left, right or two-sided shapes: {}",
            c.diagnostic.clone().unwrap_or_default()
        )));
    }
    let base = NormalQuotient::new(pres, basis, maxdeg);
    let hyp = check_hypothesis(&base, &c, maxdeg)?;
    if let Some((w, nf)) = &hyp.counterexample {
        return Err(Error::Hypothesis(format!(
            "ordered word {} has normal form {}, neither 0 nor itself",
            base.render_word(w),
            base.render(nf)
        )));
    }
    let order = match (c.has(TypeTag::MonomialOnly), scheme.or_else(|| default_scheme(&c))) {
        (true, None) => QuotientOrder::Ambient(pres.order.clone()),
        (true, Some(s)) => QuotientOrder::Exponent(crate::ExponentOrder { scheme: s, perm: c.perm.clone(), fallback: pres.order.clone() }),
        (false, Some(s)) => QuotientOrder::Exponent(induced_order(&c, s, &pres.order)?),
        (false, None) => unreachable!("tagged classification has a default"),
    };
    Ok(QuotientAlgebra::assemble(base, c, order))
}

/// The quotient by the leading homogeneous parts of the relations, ordered
/// by weighted degree first.
pub fn build_lh_quotient(pres: &Presentation, maxdeg: u32, scheme: Option<ExponentScheme>) -> Result<QuotientAlgebra> {
    let almost = almost_skew_check(pres)?;
    if let Some(k) = almost.offending {
        return Err(Error::Hypothesis(format!(
            "leading homogeneous part of relation {} is not a monomial or skew 2-nomial",
            k + 1
        )));
    }
    Ok(build_quotient_with(&almost.lh, maxdeg, scheme)?.graded())
}

impl QuotientAlgebra {
    fn assemble(base: NormalQuotient, classification: Classification, order: QuotientOrder) -> Self {
        let mut sorted = base.normal_words().to_vec();
        sorted.sort_by(|a, b| order.cmp_words(a, b));
        let rank = sorted.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        QuotientAlgebra { base, classification, order, sorted, rank }
    }

    /// Same algebra, ordered by weighted degree before the current order.
    pub fn graded(self) -> Self {
        if matches!(self.order, QuotientOrder::Graded(..)) {
            return self;
        }
        let g = self.base.order.grading().clone();
        let order = QuotientOrder::Graded(g, Box::new(self.order));
        QuotientAlgebra::assemble(self.base, self.classification, order)
    }

    pub fn maxdeg(&self) -> u32 {
        self.base.maxdeg
    }

    pub fn tags(&self) -> Vec<&'static str> {
        self.classification.tag_names()
    }

    /// Normal words ascending under the quotient ordering.
    pub fn sorted_normal_words(&self) -> &[Word] {
        &self.sorted
    }

    pub fn dimension_upto(&self, d: u32) -> usize {
        let g = self.base.order.grading();
        self.sorted.iter().filter(|w| w.degree(g) <= d).count()
    }

    pub fn rank(&self, w: &Word) -> Option<usize> {
        self.rank.get(w).copied()
    }

    pub fn nf(&self, f: &Poly) -> Result<Poly> {
        self.base.nf(f)
    }

    /// Leading monomial of a polynomial over normal words.
    pub fn lm(&self, f: &Poly) -> Option<Word> {
        f.lm(&self.order).cloned()
    }

    pub fn mul(&self, u: &Word, v: &Word) -> Result<Option<(Scalar, Word)>> {
        for w in [u, v] {
            if !self.base.is_normal(w) && self.base.degree(w) <= self.maxdeg() {
                return Err(Error::Invalid(format!("{} is not a normal word", self.base.render_word(w))));
            }
        }
        self.base.mul(u, v)
    }

    pub fn mul_poly(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.nf(&f.mul(g))
    }

    pub fn render(&self, f: &Poly) -> String {
        self.base.render(f)
    }

    pub fn render_word(&self, w: &Word) -> String {
        self.base.render_word(w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainReport {
    pub domain: bool,
    pub maxdeg: u32,
    pub pairs: usize,
    pub zero_product: Option<(Word, Word)>,
}

/// No two normal words of total degree ≤ `maxdeg` multiply to zero.
pub fn is_domain_upto(nq: &NormalQuotient, maxdeg: u32) -> Result<DomainReport> {
    let g = nq.order.grading();
    let words: Vec<&Word> = nq.normal_words().iter().filter(|w| w.degree(g) <= maxdeg).collect();
    let mut pairs = 0;
    for u in &words {
        for v in &words {
            if u.degree(g) + v.degree(g) > maxdeg {
                continue;
            }
            pairs += 1;
            if nq.mul(u, v)?.is_none() {
                return Ok(DomainReport { domain: false, maxdeg, pairs, zero_product: Some(((*u).clone(), (*v).clone())) });
            }
        }
    }
    Ok(DomainReport { domain: true, maxdeg, pairs, zero_product: None })
}

/// First pair of normal words (total degree ≤ `maxdeg`) whose product has
/// a normal form with two or more terms.
pub fn check_skew_multiplicative(nq: &NormalQuotient, maxdeg: u32) -> Result<Option<(Word, Word)>> {
    let g = nq.order.grading();
    let words: Vec<&Word> = nq.normal_words().iter().filter(|w| w.degree(g) <= maxdeg).collect();
    for u in &words {
        for v in &words {
            if u.degree(g) + v.degree(g) <= maxdeg && nq.product(u, v, &Word::one())?.len() > 1 {
                return Ok(Some(((*u).clone(), (*v).clone())));
            }
        }
    }
    Ok(None)
}

/// Truncated left, right or two-sided Gröbner basis of an ideal of the
/// quotient, as polynomials over normal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSidedBasis {
    pub side: Side,
    pub maxdeg: u32,
    pub elements: Vec<Poly>,
    /// Dimension of the truncated span.
    pub span: usize,
}

/// A row keyed by rank under the quotient ordering.
type Row = BTreeMap<usize, Scalar>;

impl QuotientAlgebra {
    fn row(&self, f: &Poly) -> Row {
        f.terms().map(|(w, c)| (self.rank[w], c.clone())).collect()
    }

    fn unrow(&self, r: &Row) -> Poly {
        Poly::from_terms(r.iter().map(|(&k, c)| (self.sorted[k].clone(), c.clone())))
    }

    /// Multipliers, including `(1, 1)`, for the side.
    fn multipliers(&self, side: Side, budget: u32) -> Vec<(Word, Word)> {
        let mut out = vec![(Word::one(), Word::one())];
        out.extend(multiplier_configs(&self.base, side, budget));
        out
    }

    /// `m` is reached from `u` as the leading monomial of `NF(w·u·s)` for a
    /// multiplier allowed by the side; the first such multiplier.
    fn side_divisor(&self, u: &Word, m: &Word, side: Side) -> Result<Option<(Word, Word, Poly)>> {
        let g = self.base.order.grading();
        let budget = self.maxdeg().saturating_sub(u.degree(g));
        for (w, s) in self.multipliers(side, budget) {
            let p = self.base.product(&w, u, &s)?;
            if self.lm(p).as_ref() == Some(m) {
                return Ok(Some((w, s, p.clone())));
            }
        }
        Ok(None)
    }
}

fn reduce_row(row: &mut Row, pivots: &HashMap<usize, Row>) {
    let mut done: Row = BTreeMap::new();
    while let Some((k, c)) = row.pop_last() {
        match pivots.get(&k) {
            Some(p) => {
                for (&j, a) in p.range(..k) {
                    let e = row.entry(j).or_insert_with(|| c.field().zero());
                    *e = &*e - &(&c * a);
                    if e.is_zero() {
                        row.remove(&j);
                    }
                }
            }
            None => {
                done.insert(k, c);
            }
        }
    }
    *row = done;
}

pub fn onesided_gb(q: &QuotientAlgebra, gens: &[Poly], side: Side, maxdeg: u32) -> Result<OneSidedBasis> {
    let maxdeg = maxdeg.min(q.maxdeg());
    let g = q.base.order.grading();
    let mut pivots: HashMap<usize, Row> = HashMap::new();
    for f in gens {
        let f = q.nf(f)?;
        let Some(d) = f.degree(g) else { continue };
        if d > maxdeg {
            return Err(Error::DegreeOverflow { deg: d, maxdeg });
        }
        for (w, s) in q.multipliers(side, maxdeg - d) {
            let p = q.nf(&f.sandwich(&w, &s))?;
            let mut row = q.row(&p);
            // echelon step: clear known pivots from the top down
            let mut rest: Row = BTreeMap::new();
            while let Some((&k, _)) = row.last_key_value() {
                match pivots.get(&k) {
                    Some(pr) => {
                        let c = row.remove(&k).unwrap();
                        for (&j, a) in pr.range(..k) {
                            let e = row.entry(j).or_insert_with(|| c.field().zero());
                            *e = &*e - &(&c * a);
                            if e.is_zero() {
                                row.remove(&j);
                            }
                        }
                    }
                    None => {
                        let lc = row[&k].inv();
                        for c in row.values_mut() {
                            *c = &*c * &lc;
                        }
                        rest = std::mem::take(&mut row);
                        break;
                    }
                }
            }
            if let Some((&k, _)) = rest.last_key_value() {
                pivots.insert(k, rest);
            }
        }
    }
    // reduced echelon form, smallest pivots first
    let mut keys: Vec<usize> = pivots.keys().copied().collect();
    keys.sort_unstable();
    let mut reduced: HashMap<usize, Row> = HashMap::new();
    for k in &keys {
        let mut row = pivots[k].clone();
        let lead = row.pop_last().unwrap();
        reduce_row(&mut row, &reduced);
        row.insert(lead.0, lead.1);
        reduced.insert(*k, row);
    }
    let span = keys.len();
    let lms: Vec<Word> = keys.iter().map(|&k| q.sorted[k].clone()).collect();
    let mut elements = Vec::new();
    for (a, k) in keys.iter().enumerate() {
        let mut covered = false;
        for (b, u) in lms.iter().enumerate() {
            if b != a && q.side_divisor(u, &lms[a], side)?.is_some() {
                covered = true;
                break;
            }
        }
        if !covered {
            elements.push(q.unrow(&reduced[k]));
        }
    }
    Ok(OneSidedBasis { side, maxdeg, elements, span })
}

/// `f = Σ c·w·b·s + remainder` over normal words, with products taken in
/// the quotient; no remainder term is a side multiple of a basis LM.
pub fn onesided_divide(q: &QuotientAlgebra, f: &Poly, basis: &OneSidedBasis) -> Result<DivisionResult> {
    let mut work = q.row(&q.nf(f)?);
    let mut remainder = Poly::zero();
    let mut quotients = Vec::new();
    let mut steps = 0;
    let lms: Vec<Word> = basis.elements.iter().map(|b| q.lm(b).expect("nonzero basis element")).collect();
    while let Some((&k, _)) = work.last_key_value() {
        let m = q.sorted[k].clone();
        let mut hit = None;
        for (i, u) in lms.iter().enumerate() {
            if let Some((w, s, _)) = q.side_divisor(u, &m, basis.side)? {
                hit = Some((i, w, s));
                break;
            }
        }
        let c = work.remove(&k).unwrap();
        match hit {
            None => remainder.add_term(m, c),
            Some((i, w, s)) => {
                steps += 1;
                let p = q.nf(&basis.elements[i].sandwich(&w, &s))?;
                let (_, lc) = p.lm_lc(&q.order).unwrap();
                let coeff = &c / lc;
                for (t, a) in p.terms() {
                    if *t == m {
                        continue;
                    }
                    let j = q.rank[t];
                    let e = work.entry(j).or_insert_with(|| c.field().zero());
                    *e = &*e - &(&coeff * a);
                    if e.is_zero() {
                        work.remove(&j);
                    }
                }
                quotients.push(crate::rewrite::QuotientTerm { coeff, left: w, index: i, right: s });
            }
        }
    }
    Ok(DivisionResult { quotients, remainder, steps })
}

/// `(ideal part as a Gröbner presentation, normal part)` of `f`.
pub fn decompose(nq: &NormalQuotient, f: &Poly) -> Result<DivisionResult> {
    let g = nq.order.grading();
    if let Some(d) = f.degree(g).filter(|&d| d > nq.maxdeg) {
        return Err(Error::DegreeOverflow { deg: d, maxdeg: nq.maxdeg });
    }
    Ok(divide_two_sided(f, &nq.gb, &nq.order))
}

/// The ordering on normal words of `R/I` transferred verbatim from the
/// leading homogeneous quotient.
pub fn lift_order(q_lh: &QuotientAlgebra) -> QuotientOrder {
    q_lh.order.clone()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub passed: bool,
    pub maxdeg: u32,
    pub seed: u64,
    pub samples: usize,
    pub nonzero: usize,
    /// Basis of the image of J in R/I.
    pub lifted: Vec<Poly>,
    /// Leading homogeneous parts of `lifted`, reduced in the homogeneous quotient.
    pub homogeneous: Vec<Poly>,
    pub completion_truncated: bool,
    pub failure: Option<Poly>,
}

/// For an ideal `J ⊇ I`, check on random elements of `J/I` that their
/// leading monomials under the lifted order are multiples of the leading
/// monomials of the lifted basis.
pub fn lift_gb_check(
    j_gens: &[Poly],
    q: &NormalQuotient,
    q_lh: &QuotientAlgebra,
    maxdeg: u32,
    samples: usize,
    seed: u64,
) -> Result<LiftReport> {
    let maxdeg = maxdeg.min(q.maxdeg).min(q_lh.maxdeg());
    let dom = is_domain_upto(&q_lh.base, maxdeg)?;
    if let Some((u, v)) = &dom.zero_product {
        return Err(Error::Hypothesis(format!(
            "the leading homogeneous quotient is not a domain: {}·{} = 0",
            q_lh.render_word(u),
            q_lh.render_word(v)
        )));
    }
    let order = lift_order(q_lh);
    let grading = q.order.grading();
    let mut all = q.gb.clone();
    all.extend(j_gens.iter().cloned());
    let completion = complete(&all, &q.order, maxdeg);
    let mut lifted: Vec<Poly> = Vec::new();
    for g in &completion.basis {
        if g.lm(&q.order).is_some_and(|m| q.is_normal(m)) {
            let gb = q.nf(g)?;
            if !gb.is_zero() && !lifted.contains(&gb) {
                lifted.push(gb);
            }
        }
    }
    let homogeneous = lifted
        .iter()
        .map(|g| q_lh.nf(&g.lh(grading)?))
        .collect::<Result<Vec<_>>>()?;
    let lms: Vec<Word> = lifted.iter().map(|g| g.lm(&order).unwrap().clone()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ball = words_upto(grading, maxdeg);
    // generators already in I only ever contribute zero
    let mut gens: Vec<&Poly> = Vec::new();
    for g in j_gens {
        if g.degree(grading).is_some_and(|d| d <= maxdeg) && !q.nf(g)?.is_zero() {
            gens.push(g);
        }
    }
    let mut report = LiftReport {
        passed: true,
        maxdeg,
        seed,
        samples,
        nonzero: 0,
        lifted: lifted.clone(),
        homogeneous,
        completion_truncated: completion.truncated,
        failure: None,
    };
    if gens.is_empty() {
        return Ok(report);
    }
    let field = q.field;
    for _ in 0..samples {
        let mut f = Poly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let j = gens[rng.gen_range(0..gens.len())];
            let budget = maxdeg - j.degree(grading).unwrap();
            let left: Vec<&Word> = ball.iter().filter(|w| w.degree(grading) <= budget).collect();
            let w = left[rng.gen_range(0..left.len())];
            let budget = budget - w.degree(grading);
            let right: Vec<&Word> = ball.iter().filter(|w| w.degree(grading) <= budget).collect();
            let s = right[rng.gen_range(0..right.len())];
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-5i64..=5);
            }
            f = f.add(&j.sandwich(w, s).scale(&field.from_i64(c)));
        }
        let fb = q.nf(&f)?;
        let Some(target) = fb.lm(&order).cloned() else { continue };
        report.nonzero += 1;
        let d = target.degree(grading);
        let mut found = false;
        'search: for m in &lms {
            let dm = m.degree(grading);
            if dm > d {
                continue;
            }
            for u in ball.iter().filter(|u| u.degree(grading) + dm <= d) {
                for v in ball.iter().filter(|v| u.degree(grading) + dm + v.degree(grading) == d) {
                    let p = q.product(u, m, v)?;
                    if p.lm(&order) == Some(&target) {
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        if !found {
            report.passed = false;
            report.failure = Some(fb);
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{fixture, q as s};

    fn pres(name: &str) -> Presentation {
        fixture(name).unwrap().presentation()
    }

    #[test]
    fn build_shapes() {
        assert_eq!(build_quotient(&pres("ex1_case5"), 4).unwrap().tags(), vec!["LeftType"]);
        let q = build_quotient(&pres("ex4_n2_p2"), 4).unwrap();
        assert!(q.classification.has(TypeTag::TwoSidedType));
        assert_eq!(q.dimension_upto(4), 4);
        assert!(build_quotient(&pres("qplane"), 4).unwrap().classification.has(TypeTag::TwoSidedType));
        assert!(matches!(build_quotient(&pres("ex3"), 3), Err(Error::Hypothesis(_))));
        assert!(matches!(build_quotient(&pres("ex1_off"), 3), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn quantum_plane_arithmetic() {
        let p = pres("qplane");
        let q = build_quotient(&p, 6).unwrap();
        let xy = p.word("x*y").unwrap();
        assert_eq!(q.mul(&xy, &xy).unwrap(), Some((s("2"), p.word("x^2*y^2").unwrap())));
        assert_eq!(q.mul(&Word::one(), &xy).unwrap(), Some((s("1"), xy.clone())));
        assert_eq!(q.nf(&p.poly("y^2*x").unwrap()).unwrap(), p.poly("4*x*y^2").unwrap());
        assert!(q.nf(&p.relations[0]).unwrap().is_zero());
        assert!(is_domain_upto(&q.base, 6).unwrap().domain);
    }

    #[test]
    fn nilpotent_generators_are_zero_divisors() {
        let q = build_quotient(&pres("ex4_n2_p2"), 4).unwrap();
        let r = is_domain_upto(&q.base, 4).unwrap();
        assert_eq!(r.zero_product, Some((Word::gen(0), Word::gen(0))));
    }

    #[test]
    fn left_ideal_of_x() {
        let p = pres("qplane");
        let q = build_quotient(&p, 4).unwrap();
        let x = p.poly("x").unwrap();
        let b = onesided_gb(&q, &[x.clone()], Side::Left, 4).unwrap();
        assert_eq!(b.elements, vec![x]);
        let r = onesided_divide(&q, &p.poly("y*x").unwrap(), &b).unwrap();
        assert!(r.remainder.is_zero());
        assert_eq!(r.quotients.len(), 1);
        assert_eq!((r.quotients[0].coeff.clone(), r.quotients[0].left.clone()), (s("1"), p.word("y").unwrap()));
        let one = onesided_gb(&q, &[p.poly("1").unwrap()], Side::Left, 4).unwrap();
        assert_eq!(one.elements, vec![p.poly("1").unwrap()]);
        assert!(onesided_gb(&q, &[], Side::Left, 4).unwrap().elements.is_empty());
    }

    #[test]
    fn decomposition_of_y2x() {
        let p = pres("qplane");
        let nq = NormalQuotient::from_presentation(&p, 4);
        let f = p.poly("y^2*x").unwrap();
        let d = decompose(&nq, &f).unwrap();
        assert_eq!(d.quotients.len(), 2);
        assert_eq!(d.remainder, p.poly("4*x*y^2").unwrap());
        assert_eq!(d.reconstruct(&nq.gb), f);
    }
}
