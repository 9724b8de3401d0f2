//! Certificates that no monomial ordering of a given sidedness exists on a
//! quotient basis.

use std::collections::{BTreeMap, HashMap};

use super::axioms::multiplier_configs;
use super::twosat::{neg, TwoSat};
use crate::error::Result;
use crate::quotient::{single_term, NormalQuotient};
use crate::scalar::Scalar;
use crate::word::{Side, Word};

/// `NF(v·u1·s) = c1·m` and `NF(v·u2·s) = c2·m` for distinct `u1`, `u2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameLmWitness {
    pub left: Word,
    pub right: Word,
    pub u1: Word,
    pub u2: Word,
    pub c1: Scalar,
    pub c2: Scalar,
    pub m: Word,
}

/// The single term of `NF(v·u·s)`; `None` when it vanishes or has several
/// terms, whose leading monomial would depend on the ordering sought.
fn single(nq: &NormalQuotient, v: &Word, u: &Word, s: &Word) -> Result<Option<(Scalar, Word)>> {
    Ok(single_term(nq.product(v, u, s)?).unwrap_or(None))
}

fn ball<'a>(nq: &'a NormalQuotient, maxdeg: u32) -> impl Iterator<Item = (usize, &'a Word)> {
    let g = nq.order.grading();
    nq.normal_words().iter().enumerate().filter(move |(_, w)| w.degree(g) <= maxdeg)
}

/// Two distinct nontrivial normal words sent to the same word `m ≠ 1` by one
/// multiplier configuration. Configurations are scanned by total degree,
/// then left before right, then ascending; within one the smallest `m`
/// and its first two preimages are reported.
pub fn same_lm_obstruction(nq: &NormalQuotient, maxdeg: u32, side: Side) -> Result<Option<SameLmWitness>> {
    let grading = nq.order.grading();
    for (v, s) in multiplier_configs(nq, side, maxdeg) {
        let extra = v.degree(grading) + s.degree(grading);
        // keyed by the position of m among the normal words
        let mut groups: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (k, u) in ball(nq, maxdeg) {
            if u.is_one() || u.degree(grading) + extra > maxdeg {
                continue;
            }
            let Some((c, m)) = single(nq, &v, u, &s)? else { continue };
            if m.is_one() {
                continue;
            }
            groups.entry(nq.normal_position(&m).expect("normal form is normal")).or_default().push((k, c));
        }
        if let Some((&mk, members)) = groups.iter().find(|(_, g)| g.len() >= 2) {
            let nw = nq.normal_words();
            let (k1, c1) = members[0].clone();
            let (k2, c2) = members[1].clone();
            return Ok(Some(SameLmWitness { left: v, right: s, u1: nw[k1].clone(), u2: nw[k2].clone(), c1, c2, m: nw[mk].clone() }));
        }
    }
    Ok(None)
}

/// Why an implication between comparisons holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// Multiplying `m1`, `m2` by `(v, s)` gives multiples of `n1`, `n2`.
    Product { left: Word, right: Word, m1: Word, m2: Word, n1: Word, n2: Word },
    /// `u ≺ LM(v·u·s) = m` is forced.
    Below { left: Word, right: Word, u: Word, m: Word },
}

/// `from ⇒ to`, each a comparison `(a, b)` meaning `a ≺ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    pub from: (Word, Word),
    pub to: (Word, Word),
    pub reason: Reason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatWitness {
    /// `a ≺ b` implies `b ≺ a` and conversely.
    Cycle { atom: (Word, Word), forward: Vec<Implication>, backward: Vec<Implication> },
    /// A product forces `u ≺ u`.
    Reflexive(Reason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatOutcome {
    pub side: Side,
    pub maxdeg: u32,
    /// Satisfiable inside the ball; says nothing beyond it.
    pub sat: bool,
    pub variables: usize,
    pub clauses: usize,
    pub witness: Option<SatWitness>,
}

struct Atoms<'a> {
    words: &'a [Word],
    var: HashMap<(usize, usize), usize>,
    pairs: Vec<(usize, usize)>,
    solver: TwoSat,
}

impl Atoms<'_> {
    /// Literal for `words[a] ≺ words[b]`.
    fn lit(&mut self, a: usize, b: usize) -> usize {
        let (x, y) = if a < b { (a, b) } else { (b, a) };
        let v = match self.var.get(&(x, y)) {
            Some(&v) => v,
            None => {
                let v = self.solver.new_var();
                self.var.insert((x, y), v);
                self.pairs.push((x, y));
                v
            }
        };
        if a < b {
            2 * v
        } else {
            2 * v + 1
        }
    }

    fn atom(&self, l: usize) -> (Word, Word) {
        let (x, y) = self.pairs[l / 2];
        if l % 2 == 0 {
            (self.words[x].clone(), self.words[y].clone())
        } else {
            (self.words[y].clone(), self.words[x].clone())
        }
    }
}

/// Encode "some total order on the normal words of degree ≤ `maxdeg` obeys
/// the side's axioms" as 2-SAT over the atoms `m1 ≺ m2`.
pub fn ordering_sat(nq: &NormalQuotient, maxdeg: u32, side: Side) -> Result<SatOutcome> {
    let grading = nq.order.grading();
    let words = nq.normal_words();
    let mut atoms = Atoms { words, var: HashMap::new(), pairs: Vec::new(), solver: TwoSat::new() };
    let mut reasons: Vec<Reason> = Vec::new();
    let mut outcome = SatOutcome { side, maxdeg, sat: true, variables: 0, clauses: 0, witness: None };
    let position: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    for (v, s) in multiplier_configs(nq, side, maxdeg) {
        let extra = v.degree(grading) + s.degree(grading);
        let mut images: Vec<(usize, usize)> = Vec::new();
        for (k, u) in ball(nq, maxdeg) {
            if u.degree(grading) + extra > maxdeg {
                continue;
            }
            let Some((_, m)) = single(nq, &v, u, &s)? else { continue };
            if m.is_one() {
                continue;
            }
            let mk = position[&m];
            let reason = Reason::Below { left: v.clone(), right: s.clone(), u: u.clone(), m: m.clone() };
            if mk == k {
                outcome.sat = false;
                outcome.witness = Some(SatWitness::Reflexive(reason));
                outcome.variables = atoms.solver.nvars();
                outcome.clauses = atoms.solver.nedges();
                return Ok(outcome);
            }
            let l = atoms.lit(k, mk);
            reasons.push(reason);
            atoms.solver.imply(neg(l), l, reasons.len() - 1);
            images.push((k, mk));
        }
        for (a, &(k1, n1)) in images.iter().enumerate() {
            for &(k2, n2) in &images[a + 1..] {
                let reason = Reason::Product {
                    left: v.clone(),
                    right: s.clone(),
                    m1: words[k1].clone(),
                    m2: words[k2].clone(),
                    n1: words[n1].clone(),
                    n2: words[n2].clone(),
                };
                reasons.push(reason);
                let r = reasons.len() - 1;
                let x = atoms.lit(k1, k2);
                if n1 == n2 {
                    atoms.solver.imply(x, neg(x), r);
                    atoms.solver.imply(neg(x), x, r);
                } else {
                    let y = atoms.lit(n1, n2);
                    atoms.solver.imply(x, y, r);
                    atoms.solver.imply(neg(x), neg(y), r);
                }
            }
        }
    }
    outcome.variables = atoms.solver.nvars();
    outcome.clauses = atoms.solver.nedges();
    if let Some(var) = atoms.solver.conflict() {
        let x = 2 * var;
        let chain = |from: usize, to: usize| -> Vec<Implication> {
            atoms
                .solver
                .path(from, to)
                .expect("literals share a component")
                .into_iter()
                .map(|(a, b, r)| Implication { from: atoms.atom(a), to: atoms.atom(b), reason: reasons[r].clone() })
                .collect()
        };
        outcome.sat = false;
        outcome.witness = Some(SatWitness::Cycle { atom: atoms.atom(x), forward: chain(x, neg(x)), backward: chain(neg(x), x) });
    }
    Ok(outcome)
}
