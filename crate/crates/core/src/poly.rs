//! Sparse polynomials in the free algebra.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::order::{Grading, MonomialOrder};
use crate::scalar::{Field, Scalar};
use crate::word::Word;

/// Finite map from words to nonzero scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn monomial(w: Word, field: Field) -> Self {
        Poly::term(field.one(), w)
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(c, Word::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn field(&self) -> Option<Field> {
        self.terms.values().next().map(|c| c.field())
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (w, c) in other.terms() {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (w, c) in other.terms() {
            p.add_term(w.clone(), -c);
        }
        p
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Poly {
        Poly { terms: self.terms.iter().map(|(w, c)| (w.sandwich(left, right), c.clone())).collect() }
    }

    pub fn lm<O: MonomialOrder>(&self, order: &O) -> Option<&Word> {
        self.terms.keys().max_by(|a, b| order.cmp_words(a, b))
    }

    pub fn lm_lc<O: MonomialOrder>(&self, order: &O) -> Option<(&Word, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp_words(a.0, b.0))
    }

    /// Leading monomial, coefficient and term.
    pub fn lm_lc_lt<O: MonomialOrder>(&self, order: &O) -> Result<(Word, Scalar, Poly)> {
        let (w, c) = self.lm_lc(order).ok_or(Error::ZeroPolynomial)?;
        Ok((w.clone(), c.clone(), Poly::term(c.clone(), w.clone())))
    }

    pub fn monic<O: MonomialOrder>(&self, order: &O) -> Poly {
        match self.lm_lc(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => Poly::zero(),
        }
    }

    /// Terms sorted in descending order.
    pub fn sorted_terms<O: MonomialOrder>(&self, order: &O) -> Vec<(&Word, &Scalar)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp_words(b.0, a.0));
        t
    }

    pub fn degree(&self, grading: &Grading) -> Option<u32> {
        self.terms.keys().map(|w| w.degree(grading)).max()
    }

    /// Sum of the terms of maximal weighted degree.
    pub fn lh(&self, grading: &Grading) -> Result<Poly> {
        let d = self.degree(grading).ok_or(Error::ZeroPolynomial)?;
        Ok(Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree(grading) == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn is_homogeneous(&self, grading: &Grading) -> bool {
        let mut ds = self.terms.keys().map(|w| w.degree(grading));
        match ds.next() {
            Some(d) => ds.all(|e| e == d),
            None => true,
        }
    }
}
