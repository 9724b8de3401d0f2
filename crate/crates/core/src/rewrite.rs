//! Division by a list of polynomials from the left, right or both sides.

use std::collections::BTreeMap;

use crate::order::{Grading, OrderKey, WordOrder};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::word::{Side, Word};

/// One step `coeff · left · g[index] · right` of a Gröbner presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTerm {
    pub coeff: Scalar,
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<QuotientTerm>,
    pub remainder: Poly,
    pub steps: usize,
}

impl DivisionResult {
    /// `Σ coeff·left·g·right + remainder`, which must equal the dividend.
    pub fn reconstruct(&self, gens: &[Poly]) -> Poly {
        let mut acc = self.remainder.clone();
        for q in &self.quotients {
            acc = acc.add(&gens[q.index].sandwich(&q.left, &q.right).scale(&q.coeff));
        }
        acc
    }
}

struct Divisor {
    index: usize,
    lm: Word,
    lc_inv: Scalar,
    terms: Vec<(Word, Scalar)>,
}

/// A divisor set prepared for repeated reductions.
pub struct Reducer<'a> {
    order: &'a WordOrder,
    side: Side,
    divs: Vec<Divisor>,
}

impl<'a> Reducer<'a> {
    pub fn new(gens: &[Poly], order: &'a WordOrder, side: Side) -> Self {
        let mut divs: Vec<(OrderKey, Divisor)> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(index, g)| {
                let (lm, lc) = g.lm_lc(order).expect("nonzero");
                let d = Divisor {
                    index,
                    lm: lm.clone(),
                    lc_inv: lc.inv(),
                    terms: g.terms().map(|(w, c)| (w.clone(), c.clone())).collect(),
                };
                (order.key(lm), d)
            })
            .collect();
        // smallest leading monomial first, ties by position in the list
        divs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.index.cmp(&b.1.index)));
        Reducer { order, side, divs: divs.into_iter().map(|x| x.1).collect() }
    }

    pub fn order(&self) -> &WordOrder {
        self.order
    }

    fn find(&self, w: &Word) -> Option<(&Divisor, usize)> {
        self.divs.iter().find_map(|d| d.lm.divides_at(w, self.side).map(|p| (d, p)))
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.find(w).is_some()
    }

    fn run(&self, f: &Poly, record: bool) -> DivisionResult {
        let order = self.order;
        let mut work: BTreeMap<OrderKey, Scalar> = f.terms().map(|(w, c)| (order.key(w), c.clone())).collect();
        let mut remainder = Poly::zero();
        let mut quotients = Vec::new();
        let mut steps = 0;
        while let Some((key, c)) = work.pop_last() {
            let w = order.word(&key);
            match self.find(&w) {
                None => remainder.add_term(w, c),
                Some((d, p)) => {
                    steps += 1;
                    let left = w.subword(0, p);
                    let right = w.subword(p + d.lm.len(), w.len());
                    let q = &c * &d.lc_inv;
                    for (t, a) in &d.terms {
                        if *t == d.lm {
                            continue;
                        }
                        let k = order.key(&t.sandwich(&left, &right));
                        let delta = -(&q * a);
                        match work.get_mut(&k) {
                            Some(x) => {
                                let s = &*x + &delta;
                                if s.is_zero() {
                                    work.remove(&k);
                                } else {
                                    *x = s;
                                }
                            }
                            None => {
                                work.insert(k, delta);
                            }
                        }
                    }
                    if record {
                        quotients.push(QuotientTerm { coeff: q, left, index: d.index, right });
                    }
                }
            }
        }
        DivisionResult { quotients, remainder, steps }
    }

    pub fn divide(&self, f: &Poly) -> DivisionResult {
        self.run(f, true)
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        self.run(f, false).remainder
    }
}

pub fn divide(f: &Poly, gens: &[Poly], order: &WordOrder, side: Side) -> DivisionResult {
    Reducer::new(gens, order, side).divide(f)
}

pub fn divide_two_sided(f: &Poly, gens: &[Poly], order: &WordOrder) -> DivisionResult {
    divide(f, gens, order, Side::Two)
}

pub fn divide_left(f: &Poly, gens: &[Poly], order: &WordOrder) -> DivisionResult {
    divide(f, gens, order, Side::Left)
}

pub fn divide_right(f: &Poly, gens: &[Poly], order: &WordOrder) -> DivisionResult {
    divide(f, gens, order, Side::Right)
}

pub fn normal_form(f: &Poly, gens: &[Poly], order: &WordOrder) -> Poly {
    Reducer::new(gens, order, Side::Two).reduce(f)
}

/// Words of weighted degree ≤ `maxdeg` divisible by no leading monomial,
/// in ascending order.
pub fn normal_words(gens: &[Poly], order: &WordOrder, maxdeg: u32) -> Vec<Word> {
    let lms: Vec<Word> = gens.iter().filter_map(|g| g.lm(order).cloned()).collect();
    normal_words_for(&lms, order.grading(), order, maxdeg)
}

pub fn normal_words_for(lms: &[Word], grading: &Grading, order: &WordOrder, maxdeg: u32) -> Vec<Word> {
    if lms.iter().any(Word::is_one) {
        return Vec::new();
    }
    let n = grading.len();
    let mut out = vec![Word::one()];
    let mut frontier = vec![(Word::one(), 0u32)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, d) in &frontier {
            for g in 0..n {
                let nd = d + grading.weight(g);
                if nd > maxdeg {
                    continue;
                }
                let mut x = w.clone();
                x.push(g);
                // w is normal, so a new occurrence must end at the last letter
                if lms.iter().any(|u| u.is_suffix_of(&x)) {
                    continue;
                }
                out.push(x.clone());
                next.push((x, nd));
            }
        }
        frontier = next;
    }
    out.sort_by_key(|w| order.key(w));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn w(s: &[usize]) -> Word {
        Word::from_letters(s.iter().copied())
    }

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn qplane() -> Poly {
        Poly::from_terms([(w(&[1, 0]), q(1)), (w(&[0, 1]), q(-2))])
    }

    #[test]
    fn quantum_plane_reduction() {
        let o = WordOrder::deglex(2);
        let g = vec![qplane()];
        let f = Poly::term(q(1), w(&[1, 1, 0]));
        let r = divide_two_sided(&f, &g, &o);
        assert_eq!(r.remainder, Poly::term(q(4), w(&[0, 1, 1])));
        assert_eq!(
            r.quotients,
            vec![
                QuotientTerm { coeff: q(1), left: w(&[1]), index: 0, right: Word::one() },
                QuotientTerm { coeff: q(2), left: Word::one(), index: 0, right: w(&[1]) },
            ]
        );
        assert_eq!(r.reconstruct(&g), f);
    }

    #[test]
    fn example4_overlap_presentation() {
        // G = {X1^2, X2^2, X2X1 - 3X1X2}
        let o = WordOrder::deglex(2);
        let g = vec![
            Poly::term(q(1), w(&[0, 0])),
            Poly::term(q(1), w(&[1, 1])),
            Poly::from_terms([(w(&[1, 0]), q(1)), (w(&[0, 1]), q(-3))]),
        ];
        let f = Poly::term(q(-3), w(&[0, 1, 0]));
        let r = divide_two_sided(&f, &g, &o);
        assert!(r.remainder.is_zero());
        assert_eq!(
            r.quotients,
            vec![
                QuotientTerm { coeff: q(-3), left: w(&[0]), index: 2, right: Word::one() },
                QuotientTerm { coeff: q(-9), left: Word::one(), index: 0, right: w(&[1]) },
            ]
        );
    }

    #[test]
    fn one_sided_division() {
        let o = WordOrder::deglex(2);
        let g = vec![qplane()];
        let f = qplane().sandwich(&w(&[0]), &Word::one());
        let r = divide_left(&f, &g, &o);
        assert!(r.remainder.is_zero());
        assert_eq!(r.quotients.len(), 1);
        assert_eq!(r.quotients[0].left, w(&[0]));
        // (yx - 2xy)·x: y x^2 has no suffix yx, x y x does
        let f = qplane().sandwich(&Word::one(), &w(&[0]));
        let r = divide_left(&f, &g, &o);
        assert_eq!(r.reconstruct(&g), f);
        assert!(r.remainder.coeff(&w(&[1, 0, 0])).is_some());
        let r = divide_right(&f, &g, &o);
        assert_eq!(r.reconstruct(&g), f);
        assert!(r.remainder.words().all(|x| !w(&[1, 0]).is_prefix_of(x)));
    }

    #[test]
    fn normal_word_enumeration() {
        let o = WordOrder::deglex(2);
        let nw = normal_words(&[qplane()], &o, 2);
        assert_eq!(nw, vec![Word::one(), w(&[0]), w(&[1]), w(&[0, 0]), w(&[0, 1]), w(&[1, 1])]);
        assert_eq!(normal_words(&[], &o, 2).len(), 7);
    }

    #[test]
    fn normal_form_basics() {
        let o = WordOrder::deglex(2);
        let g = vec![qplane()];
        assert_eq!(normal_form(&Poly::term(q(1), w(&[1, 0])), &g, &o), Poly::term(q(2), w(&[0, 1])));
        assert!(normal_form(&qplane(), &g, &o).is_zero());
        let x2 = Poly::term(q(1), w(&[0, 0]));
        assert_eq!(normal_form(&x2, &g, &o), x2);
    }
}
