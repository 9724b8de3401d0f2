use std::collections::BTreeMap;

use crate::order::WordOrder;
use crate::poly::Poly;
use crate::rewrite::Reducer;
use crate::word::{Side, Word};

use super::overlap::{overlap_element, pair_overlaps, OverlapConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub basis: Vec<Poly>,
    /// Some overlap exceeded the truncation degree and was not processed.
    pub truncated: bool,
}

/// Drop members whose leading monomial is divisible by another member's;
/// among equal leading monomials the first one is kept.
pub fn minimalize(gens: &[Poly], order: &WordOrder) -> Vec<Poly> {
    let lms: Vec<Option<&Word>> = gens.iter().map(|g| g.lm(order)).collect();
    let mut out = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let Some(u) = lms[k] else { continue };
        let redundant = lms.iter().enumerate().any(|(j, v)| match v {
            Some(v) if j != k => v.divides(u, Side::Two) && (v != &u || j < k),
            _ => false,
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Minimalize, reduce tails against the other members, make monic and sort
/// by leading monomial.
pub fn interreduce(gens: &[Poly], order: &WordOrder) -> Vec<Poly> {
    let mut min = minimalize(gens, order);
    min.sort_by_key(|g| order.key(g.lm(order).unwrap()));
    let mut out = Vec::with_capacity(min.len());
    for k in 0..min.len() {
        let others: Vec<Poly> = min.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
        let r = Reducer::new(&others, order, Side::Two).reduce(&min[k]);
        out.push(r.monic(order));
    }
    out
}

struct State<'a> {
    order: &'a WordOrder,
    maxdeg: u32,
    basis: Vec<Poly>,
    lms: Vec<Word>,
    queue: BTreeMap<(u32, u64), OverlapConfig>,
    seq: u64,
    truncated: bool,
}

impl State<'_> {
    fn add(&mut self, p: Poly) {
        let p = p.monic(self.order);
        self.lms.push(p.lm(self.order).unwrap().clone());
        self.basis.push(p);
        let k = self.basis.len() - 1;
        for i in 0..=k {
            let mut cfgs = pair_overlaps(&self.lms, i, k);
            if i != k {
                cfgs.extend(pair_overlaps(&self.lms, k, i));
            }
            for cfg in cfgs {
                let d = cfg.overlap.word.degree(self.order.grading());
                if d > self.maxdeg {
                    self.truncated = true;
                    continue;
                }
                self.queue.insert((d, self.seq), cfg);
                self.seq += 1;
            }
        }
    }
}

/// Degree-truncated completion: overlaps are processed by ascending degree
/// of the overlap word, first-in first-out within a degree, and every
/// nonzero normal form is adjoined (monic). The result is interreduced.
pub fn complete(gens: &[Poly], order: &WordOrder, maxdeg: u32) -> Completion {
    let mut st = State {
        order,
        maxdeg,
        basis: Vec::new(),
        lms: Vec::new(),
        queue: BTreeMap::new(),
        seq: 0,
        truncated: false,
    };
    for g in gens {
        let r = Reducer::new(&st.basis, order, Side::Two).reduce(g);
        if !r.is_zero() {
            st.add(r);
        }
    }
    let mut red_len = st.basis.len();
    let mut red = Reducer::new(&st.basis, order, Side::Two);
    while let Some((_, cfg)) = st.queue.pop_first() {
        if red_len != st.basis.len() {
            red_len = st.basis.len();
            red = Reducer::new(&st.basis, order, Side::Two);
        }
        let s = overlap_element(&st.basis[cfg.i], &st.basis[cfg.j], &cfg.overlap, order).expect("fresh overlap");
        let r = red.reduce(&s);
        if !r.is_zero() {
            st.add(r);
        }
    }
    Completion { basis: interreduce(&st.basis, order), truncated: st.truncated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::check_gb;
    use crate::presentation::Presentation;

    #[test]
    fn collapses_to_x() {
        let p = Presentation::parse("gens x y\nrel y*x - x\nrel y^2*x\n").unwrap();
        let c = complete(&p.relations, &p.order, 6);
        assert_eq!(c.basis, vec![p.poly("x").unwrap()]);
        assert!(check_gb(&c.basis, &p.order, 6).verified);
    }

    #[test]
    fn minimalize_drops_multiples() {
        let p = Presentation::parse("gens x y\nrel x\nrel y*x - 2*x*y\n").unwrap();
        assert_eq!(minimalize(&p.relations, &p.order), vec![p.poly("x").unwrap()]);
        assert!(minimalize(&[], &p.order).is_empty());
        assert!(complete(&[], &p.order, 4).basis.is_empty());
    }

    #[test]
    fn idempotent_on_quantum_plane() {
        let p = Presentation::parse("gens x y\nrel 3*y*x - 6*x*y\n").unwrap();
        let c = complete(&p.relations, &p.order, 6);
        assert_eq!(c.basis, vec![p.poly("y*x - 2*x*y").unwrap()]);
        assert_eq!(complete(&c.basis, &p.order, 6), c);
    }
}
