//! Exhaustive check of the monomial-ordering axioms on a truncated quotient
//! basis.

use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::quotient::NormalQuotient;
use crate::word::{Side, Word};

/// Multiplier pairs `(v, s)` acting as `u ↦ v·u·s`, excluding `(1, 1)`,
/// with `deg v + deg s ≤ maxdeg`. Left multiplication only for
/// [`Side::Left`], right only for [`Side::Right`].
pub fn multiplier_configs(nq: &NormalQuotient, side: Side, maxdeg: u32) -> Vec<(Word, Word)> {
    let grading = nq.order.grading();
    let words: Vec<&Word> = nq.normal_words().iter().filter(|w| w.degree(grading) <= maxdeg).collect();
    let one = Word::one();
    let mut out = Vec::new();
    match side {
        Side::Left => out.extend(words.iter().map(|v| ((*v).clone(), one.clone()))),
        Side::Right => out.extend(words.iter().map(|s| (one.clone(), (*s).clone()))),
        Side::Two => {
            for v in &words {
                for s in &words {
                    if v.degree(grading) + s.degree(grading) <= maxdeg {
                        out.push(((*v).clone(), (*s).clone()));
                    }
                }
            }
        }
    }
    out.retain(|(v, s)| !(v.is_one() && s.is_one()));
    out.sort_by_key(|(v, s)| (v.degree(grading) + s.degree(grading), !s.is_one(), nq.order.key(v), nq.order.key(s)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    /// `LMO1`, `LMO2`, `RMO1`, `RMO2`, `MO1` or `MO2`.
    pub axiom: &'static str,
    pub left: Word,
    pub right: Word,
    /// `u1 ≺ u2` but `LM(v·u1·s) ⪰ LM(v·u2·s)`; for the second axiom only
    /// `u1` is set and `LM(v·u1·s) ⪯ u1`.
    pub u1: Word,
    pub u2: Option<Word>,
    pub lm1: Word,
    pub lm2: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub side: Side,
    pub maxdeg: u32,
    pub passed: bool,
    pub configs: usize,
    pub comparisons: usize,
    /// Products that vanish or have leading monomial 1.
    pub skipped: usize,
    pub violation: Option<AxiomViolation>,
}

fn names(side: Side) -> (&'static str, &'static str) {
    match side {
        Side::Left => ("LMO1", "LMO2"),
        Side::Right => ("RMO1", "RMO2"),
        Side::Two => ("MO1", "MO2"),
    }
}

fn lm_of<O: MonomialOrder>(p: &Poly, order: &O) -> Option<Word> {
    p.lm(order).cloned()
}

/// Check, for every multiplier configuration, that `u ↦ LM(v·u·s)` is
/// strictly increasing on normal words and that `u ≺ LM(v·u·s)`. Products
/// that vanish or have leading monomial 1 are exempt.
pub fn verify_order_axioms<O: MonomialOrder>(nq: &NormalQuotient, order: &O, maxdeg: u32, side: Side) -> Result<AxiomReport> {
    let grading = nq.order.grading();
    let mut words: Vec<Word> = nq.normal_words().iter().filter(|w| w.degree(grading) <= maxdeg).cloned().collect();
    words.sort_by(|a, b| order.cmp_words(a, b));
    let configs = multiplier_configs(nq, side, maxdeg);
    let (first, second) = names(side);
    let mut report = AxiomReport {
        side,
        maxdeg,
        passed: true,
        configs: configs.len(),
        comparisons: 0,
        skipped: 0,
        violation: None,
    };
    for (v, s) in &configs {
        let extra = v.degree(grading) + s.degree(grading);
        let mut prev: Option<(&Word, Word)> = None;
        for u in &words {
            if u.degree(grading) + extra > maxdeg {
                continue;
            }
            let p = nq.product(v, u, s)?;
            let Some(m) = lm_of(p, order).filter(|m| !m.is_one()) else {
                report.skipped += 1;
                continue;
            };
            report.comparisons += 1;
            if order.cmp_words(u, &m).is_ge() {
                report.passed = false;
                report.violation = Some(AxiomViolation {
                    axiom: second,
                    left: v.clone(),
                    right: s.clone(),
                    u1: u.clone(),
                    u2: None,
                    lm1: m,
                    lm2: None,
                });
                return Ok(report);
            }
            if let Some((u0, m0)) = &prev {
                if order.cmp_words(m0, &m).is_ge() {
                    report.passed = false;
                    report.violation = Some(AxiomViolation {
                        axiom: first,
                        left: v.clone(),
                        right: s.clone(),
                        u1: (*u0).clone(),
                        u2: Some(u.clone()),
                        lm1: m0.clone(),
                        lm2: Some(m),
                    });
                    return Ok(report);
                }
            }
            prev = Some((u, m));
        }
    }
    Ok(report)
}
