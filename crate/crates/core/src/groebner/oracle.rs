use std::collections::{BTreeMap, HashMap};

use crate::order::{OrderKey, WordOrder};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::word::{words_upto, Word};

/// Row-echelon form of the span of `{w·g·s : deg ≤ maxdeg}`, used to decide
/// truncated ideal membership independently of the division algorithm.
pub struct MembershipOracle {
    order: WordOrder,
    maxdeg: u32,
    // pivot word -> monic row, terms in descending order
    pivots: HashMap<OrderKey, Vec<(OrderKey, Scalar)>>,
}

impl MembershipOracle {
    pub fn new(gens: &[Poly], order: &WordOrder, maxdeg: u32) -> Self {
        let grading = order.grading();
        let ball = words_upto(grading, maxdeg);
        let mut o = MembershipOracle { order: order.clone(), maxdeg, pivots: HashMap::new() };
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let d = g.degree(grading).unwrap();
            if d > maxdeg {
                continue;
            }
            for w in &ball {
                let dw = w.degree(grading);
                if dw + d > maxdeg {
                    continue;
                }
                for s in &ball {
                    if dw + d + s.degree(grading) <= maxdeg {
                        o.insert(&g.sandwich(w, s));
                    }
                }
            }
        }
        o
    }

    fn load(&self, f: &Poly) -> BTreeMap<OrderKey, Scalar> {
        f.terms().map(|(w, c)| (self.order.key(w), c.clone())).collect()
    }

    fn eliminate(work: &mut BTreeMap<OrderKey, Scalar>, row: &[(OrderKey, Scalar)], c: &Scalar) {
        for (k, a) in row {
            let delta = -(c * a);
            match work.get_mut(k) {
                Some(x) => {
                    let s = &*x + &delta;
                    if s.is_zero() {
                        work.remove(k);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    work.insert(k.clone(), delta);
                }
            }
        }
    }

    fn insert(&mut self, f: &Poly) {
        let mut work = self.load(f);
        while let Some((top, c)) = work.last_key_value() {
            let (top, c) = (top.clone(), c.clone());
            match self.pivots.get(&top) {
                Some(row) => {
                    let row = row.clone();
                    Self::eliminate(&mut work, &row, &c);
                }
                None => {
                    let inv = c.inv();
                    let row = work.iter().rev().map(|(k, a)| (k.clone(), a * &inv)).collect();
                    self.pivots.insert(top, row);
                    return;
                }
            }
        }
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Whether `f` lies in the truncated span.
    pub fn contains(&self, f: &Poly) -> bool {
        let mut work = self.load(f);
        while let Some((top, c)) = work.last_key_value() {
            match self.pivots.get(top) {
                Some(row) => {
                    let c = c.clone();
                    Self::eliminate(&mut work, row, &c);
                }
                None => return false,
            }
        }
        true
    }

    /// Leading monomials of elements of the span.
    pub fn pivot_lms(&self) -> impl Iterator<Item = Word> + '_ {
        self.pivots.keys().map(|k| self.order.word(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    #[test]
    fn membership_examples() {
        let p = Presentation::parse("gens x y\nrel y*x - x\nrel y^2*x\n").unwrap();
        let o = MembershipOracle::new(&p.relations, &p.order, 3);
        assert!(o.contains(&p.poly("x").unwrap()));
        assert!(o.contains(&p.relations[0]));
        let q = Presentation::parse("gens x y\nrel y*x - 2*x*y\n").unwrap();
        let o = MembershipOracle::new(&q.relations, &q.order, 4);
        assert!(!o.contains(&q.poly("1").unwrap()));
        assert!(o.contains(&q.poly("y^2*x - 4*x*y^2").unwrap()));
        assert!(!o.contains(&q.poly("y^2*x").unwrap()));
    }
}
