//! Monomial/binomial ("skew 2-nomial") ideals: detection, the equivalence
//! of words modulo the ideal, classification and ordering obstructions.

mod axioms;
mod classify;
mod obstruct;
pub mod twosat;

pub use axioms::{multiplier_configs, verify_order_axioms, AxiomReport, AxiomViolation};
pub use classify::{classify, induced_order, Classification, Slot, TypeTag};
pub use obstruct::{ordering_sat, same_lm_obstruction, Implication, Reason, SameLmWitness, SatOutcome, SatWitness};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::WordOrder;
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::quotient::{single_term, NormalQuotient};
use crate::rewrite::Reducer;
use crate::scalar::Scalar;
use crate::word::{Side, Word};

/// `lead − coeff·tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBinomial {
    pub lead: Word,
    pub tail: Word,
    pub coeff: Scalar,
}

impl SkewBinomial {
    pub fn to_poly(&self) -> Poly {
        let one = self.coeff.field().one();
        Poly::from_terms([(self.lead.clone(), one), (self.tail.clone(), -&self.coeff)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkewElement {
    Monomial(Word),
    Binomial(SkewBinomial),
}

impl SkewElement {
    pub fn lead(&self) -> &Word {
        match self {
            SkewElement::Monomial(w) => w,
            SkewElement::Binomial(b) => &b.lead,
        }
    }

    pub fn to_poly(&self, field: crate::Field) -> Poly {
        match self {
            SkewElement::Monomial(w) => Poly::monomial(w.clone(), field),
            SkewElement::Binomial(b) => b.to_poly(),
        }
    }
}

/// Every generator is a scalar multiple of a word or of `v − λu`.
pub fn is_skew_2nomial(gens: &[Poly]) -> bool {
    gens.iter().all(|g| matches!(g.len(), 1 | 2))
}

/// Replace each member `g` of a Gröbner basis by `LM(g)` when that word lies
/// in the ideal, and by `LM(g) − NF(LM(g))` otherwise.
pub fn skew_2nomial_gb(gens: &[Poly], order: &WordOrder) -> Result<Vec<SkewElement>> {
    let red = Reducer::new(gens, order, Side::Two);
    let mut out = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let Some(lm) = g.lm(order) else { continue };
        let field = g.field().unwrap();
        let r = red.reduce(&Poly::monomial(lm.clone(), field));
        match single_term(&r) {
            Ok(None) => out.push(SkewElement::Monomial(lm.clone())),
            Ok(Some((c, tail))) => out.push(SkewElement::Binomial(SkewBinomial { lead: lm.clone(), tail, coeff: c })),
            Err(()) => {
                return Err(Error::NotSkew2Nomial(format!(
                    "normal form of the leading monomial of member {} has {} terms",
                    k + 1,
                    r.len()
                )))
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    /// 0 is the class of words in the ideal.
    pub class: usize,
    /// `word ≡ scalar · rep` modulo the ideal.
    pub rep: Option<Word>,
    pub scalar: Scalar,
}

/// `u ~ v` when `NF(u)` and `NF(v)` are nonzero multiples of one normal word,
/// or both vanish. Covers all words of degree ≤ `maxdeg`.
#[derive(Debug, Clone)]
pub struct EquivClasses {
    pub maxdeg: u32,
    /// Class `k ≥ 1` is represented by `reps[k - 1]`.
    pub reps: Vec<Word>,
    words: Vec<(Word, ClassEntry)>,
    index: HashMap<Word, usize>,
}

impl EquivClasses {
    pub fn entry(&self, w: &Word) -> Option<&ClassEntry> {
        self.index.get(w).map(|&k| &self.words[k].1)
    }

    pub fn equivalent(&self, u: &Word, v: &Word) -> Option<bool> {
        Some(self.entry(u)?.class == self.entry(v)?.class)
    }

    pub fn in_ideal(&self, w: &Word) -> Option<bool> {
        Some(self.entry(w)?.class == 0)
    }

    /// All words in ascending order with their class data.
    pub fn entries(&self) -> &[(Word, ClassEntry)] {
        &self.words
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(move |(_, e)| e.class == class).map(|(w, _)| w)
    }

    pub fn nclasses(&self) -> usize {
        self.reps.len() + 1
    }
}

pub fn equiv_classes(nq: &NormalQuotient, maxdeg: u32) -> Result<EquivClasses> {
    let grading = nq.order.grading();
    let reps: Vec<Word> = nq.normal_words().iter().filter(|w| w.degree(grading) <= maxdeg).cloned().collect();
    let class_of: HashMap<&Word, usize> = reps.iter().enumerate().map(|(k, w)| (w, k + 1)).collect();
    let mut words = Vec::new();
    for w in crate::word::words_upto(grading, maxdeg) {
        let nf = nq.nf_word(&w)?;
        let entry = match single_term(nf) {
            Ok(None) => ClassEntry { class: 0, rep: None, scalar: nq.field.zero() },
            Ok(Some((c, u))) => ClassEntry { class: class_of[&u], rep: Some(u), scalar: c },
            Err(()) => {
                return Err(Error::NotSkew2Nomial(format!(
                    "ideal not skew 2-nomial: NF({}) has {} terms",
                    nq.render_word(&w),
                    nf.len()
                )))
            }
        };
        words.push((w, entry));
    }
    words.sort_by_key(|(w, _)| nq.order.key(w));
    let index = words.iter().enumerate().map(|(k, (w, _))| (w.clone(), k)).collect();
    Ok(EquivClasses { maxdeg, reps, words, index })
}

/// One representative per nonzero class: the normal word, with the scalar
/// relating the largest member of the class to it.
pub fn select_basis_reps(classes: &EquivClasses) -> Vec<(Word, Scalar)> {
    let mut top: Vec<Option<Scalar>> = vec![None; classes.nclasses()];
    for (_, e) in classes.entries() {
        // entries ascend, so the last write wins
        top[e.class] = Some(e.scalar.clone());
    }
    classes.reps.iter().enumerate().map(|(k, w)| (w.clone(), top[k + 1].clone().unwrap())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub holds: bool,
    pub checked: usize,
    /// An ordered word whose normal form is neither 0 nor itself.
    pub counterexample: Option<(Word, Poly)>,
}

/// Every ordered word `a_ℓ1^α1 ··· a_ℓn^αn` of degree ≤ `maxdeg` is either
/// in the ideal or normal.
pub fn check_hypothesis(nq: &NormalQuotient, c: &Classification, maxdeg: u32) -> Result<HypothesisReport> {
    let grading = nq.order.grading();
    let mut checked = 0;
    for w in crate::word::words_upto(grading, maxdeg) {
        if !c.is_ordered(&w) {
            continue;
        }
        checked += 1;
        let nf = nq.nf_word(&w)?;
        let ok = nf.is_zero() || (nf.len() == 1 && nf.coeff(&w).is_some_and(Scalar::is_one));
        if !ok {
            return Ok(HypothesisReport { holds: false, checked, counterexample: Some((w, nf.clone())) });
        }
    }
    Ok(HypothesisReport { holds: true, checked, counterexample: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostReport {
    pub almost: bool,
    /// First member whose leading homogeneous part has three or more terms.
    pub offending: Option<usize>,
    pub lh: Presentation,
}

/// Whether the leading homogeneous parts of the relations are monomials or
/// homogeneous skew 2-nomials; reports the presentation they define.
pub fn almost_skew_check(pres: &Presentation) -> Result<AlmostReport> {
    let lh: Vec<Poly> = pres.relations.iter().map(|g| g.lh(&pres.grading)).collect::<Result<_>>()?;
    let offending = lh.iter().position(|h| h.len() > 2);
    Ok(AlmostReport { almost: offending.is_none(), offending, lh: pres.with_relations(lh) })
}
