use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{check_gb, complete, minimalize};
use crate::order::WordOrder;
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::rewrite::{normal_words, Reducer};
use crate::scalar::{Field, Scalar};
use crate::word::{words_upto, Side, Word};

/// `R/I` seen through a (truncated) Gröbner basis: normal words up to the
/// truncation degree and the normal form of every word in that ball.
#[derive(Debug, Clone)]
pub struct NormalQuotient {
    pub field: Field,
    pub names: Vec<String>,
    pub order: WordOrder,
    pub gb: Vec<Poly>,
    pub maxdeg: u32,
    normal: Vec<Word>,
    normal_index: HashMap<Word, usize>,
    nf: HashMap<Word, Poly>,
}

impl NormalQuotient {
    /// `gb` is taken to be a Gröbner basis up to `maxdeg`.
    pub fn new(pres: &Presentation, gb: Vec<Poly>, maxdeg: u32) -> Self {
        let order = pres.order.clone();
        let normal = normal_words(&gb, &order, maxdeg);
        let normal_index = normal.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let red = Reducer::new(&gb, &order, Side::Two);
        let nf = words_upto(order.grading(), maxdeg)
            .into_iter()
            .map(|w| {
                let f = red.reduce(&Poly::monomial(w.clone(), pres.field));
                (w, f)
            })
            .collect();
        NormalQuotient {
            field: pres.field,
            names: pres.names.clone(),
            order,
            gb,
            maxdeg,
            normal,
            normal_index,
            nf,
        }
    }

    /// Use the relations when they already form a Gröbner basis up to
    /// `maxdeg`, otherwise their truncated completion.
    pub fn from_presentation(pres: &Presentation, maxdeg: u32) -> Self {
        let gb = if check_gb(&pres.relations, &pres.order, maxdeg).verified {
            minimalize(&pres.relations, &pres.order)
        } else {
            complete(&pres.relations, &pres.order, maxdeg).basis
        };
        NormalQuotient::new(pres, gb, maxdeg)
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            field: self.field,
            names: self.names.clone(),
            grading: self.order.grading().clone(),
            order: self.order.clone(),
            relations: self.gb.clone(),
        }
    }

    /// Normal words in ascending ambient order.
    pub fn normal_words(&self) -> &[Word] {
        &self.normal
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.normal_index.contains_key(w)
    }

    pub fn normal_position(&self, w: &Word) -> Option<usize> {
        self.normal_index.get(w).copied()
    }

    pub fn degree(&self, w: &Word) -> u32 {
        w.degree(self.order.grading())
    }

    pub fn nf_word(&self, w: &Word) -> Result<&Poly> {
        self.nf
            .get(w)
            .ok_or(Error::DegreeOverflow { deg: self.degree(w), maxdeg: self.maxdeg })
    }

    pub fn nf(&self, f: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero();
        for (w, c) in f.terms() {
            acc = acc.add(&self.nf_word(w)?.scale(c));
        }
        Ok(acc)
    }

    /// `NF(v·u·s)` for words.
    pub fn product(&self, v: &Word, u: &Word, s: &Word) -> Result<&Poly> {
        self.nf_word(&u.sandwich(v, s))
    }

    /// The single term `λ·w` of `NF(u·v)`, or `None` when the product
    /// vanishes.
    pub fn mul(&self, u: &Word, v: &Word) -> Result<Option<(Scalar, Word)>> {
        let p = self.nf_word(&u.concat(v))?;
        single_term(p).map_err(|_| {
            Error::NotSkewMultiplicative(format!(
                "NF({}·{}) has {} terms",
                u.render(&self.names),
                v.render(&self.names),
                p.len()
            ))
        })
    }

    pub fn render(&self, f: &Poly) -> String {
        crate::parse::render_poly(f, &self.names, &self.order)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.names)
    }
}

/// `Ok(None)` for zero, `Ok(Some)` for one term, `Err(())` otherwise.
pub fn single_term(p: &Poly) -> std::result::Result<Option<(Scalar, Word)>, ()> {
    match p.len() {
        0 => Ok(None),
        1 => {
            let (w, c) = p.terms().next().unwrap();
            Ok(Some((c.clone(), w.clone())))
        }
        _ => Err(()),
    }
}
