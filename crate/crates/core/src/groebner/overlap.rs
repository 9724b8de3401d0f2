//! Overlaps between leading monomials and the induced overlap elements.

use crate::error::{Error, Result};
use crate::order::WordOrder;
use crate::poly::Poly;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `u = AB`, `v = BC` with `A`, `B`, `C` nonempty.
    Proper,
    /// `v = A·u·C`.
    Inclusion,
}

impl OverlapKind {
    pub fn name(self) -> &'static str {
        match self {
            OverlapKind::Proper => "proper",
            OverlapKind::Inclusion => "inclusion",
        }
    }
}

/// A way for `u` (first) and `v` (second) to meet inside one word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub a: Word,
    /// Shared middle piece; empty for inclusions.
    pub b: Word,
    pub c: Word,
    pub word: Word,
}

/// An overlap between the leading monomials of basis members `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverlapConfig {
    pub i: usize,
    pub j: usize,
    pub overlap: Overlap,
}

/// All proper overlaps and inclusions of `u` into `v`, excluding the
/// trivial coincidence `u = v`. Sorted by overlap-word length, then
/// lexicographically.
pub fn overlaps(u: &Word, v: &Word) -> Vec<Overlap> {
    let mut out = Vec::new();
    if u.is_empty() || v.is_empty() {
        return out;
    }
    let (lu, lv) = (u.len(), v.len());
    for k in 1..lu.min(lv) {
        if u.letters()[lu - k..] == v.letters()[..k] {
            let a = u.subword(0, lu - k);
            let b = u.subword(lu - k, lu);
            let c = v.subword(k, lv);
            let word = a.concat(&v);
            out.push(Overlap { kind: OverlapKind::Proper, a, b, c, word });
        }
    }
    if lu < lv {
        for p in u.occurrences_in(v) {
            out.push(Overlap {
                kind: OverlapKind::Inclusion,
                a: v.subword(0, p),
                b: Word::one(),
                c: v.subword(p + lu, lv),
                word: v.clone(),
            });
        }
    }
    out.sort_by(|x, y| {
        (x.word.len(), &x.word, x.kind, x.a.len()).cmp(&(y.word.len(), &y.word, y.kind, y.a.len()))
    });
    out
}

/// The LC-normalised combination in which the overlap word cancels.
pub fn overlap_element(g1: &Poly, g2: &Poly, ov: &Overlap, order: &WordOrder) -> Result<Poly> {
    let (u, c1) = g1.lm_lc(order).ok_or(Error::ZeroPolynomial)?;
    let (v, c2) = g2.lm_lc(order).ok_or(Error::ZeroPolynomial)?;
    let one = Word::one();
    match ov.kind {
        OverlapKind::Proper => {
            if ov.a.concat(&ov.b) != *u || ov.b.concat(&ov.c) != *v {
                return Err(Error::StaleOverlap);
            }
            let p = g1.sandwich(&one, &ov.c).scale(&c1.inv());
            let q = g2.sandwich(&ov.a, &one).scale(&c2.inv());
            Ok(p.sub(&q))
        }
        OverlapKind::Inclusion => {
            if u.sandwich(&ov.a, &ov.c) != *v {
                return Err(Error::StaleOverlap);
            }
            let p = g2.scale(&c2.inv());
            let q = g1.sandwich(&ov.a, &ov.c).scale(&c1.inv());
            Ok(p.sub(&q))
        }
    }
}

/// Overlaps between every ordered pair of basis members (self-overlaps
/// included); members sharing a leading monomial get the plain inclusion.
pub fn pair_overlaps(lms: &[Word], i: usize, j: usize) -> Vec<OverlapConfig> {
    let mut out: Vec<OverlapConfig> =
        overlaps(&lms[i], &lms[j]).into_iter().map(|overlap| OverlapConfig { i, j, overlap }).collect();
    if i < j && lms[i] == lms[j] {
        out.push(OverlapConfig {
            i,
            j,
            overlap: Overlap {
                kind: OverlapKind::Inclusion,
                a: Word::one(),
                b: Word::one(),
                c: Word::one(),
                word: lms[j].clone(),
            },
        });
    }
    out
}

pub fn basis_overlaps(lms: &[Word], order: &WordOrder) -> Vec<OverlapConfig> {
    let mut out = Vec::new();
    for i in 0..lms.len() {
        for j in 0..lms.len() {
            out.extend(pair_overlaps(lms, i, j));
        }
    }
    out.sort_by(|x, y| {
        let kx = (x.overlap.word.degree(order.grading()), order.key(&x.overlap.word), x.i, x.j, x.overlap.a.len());
        let ky = (y.overlap.word.degree(order.grading()), order.key(&y.overlap.word), y.i, y.j, y.overlap.a.len());
        kx.cmp(&ky)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Scalar};

    fn w(s: &[usize]) -> Word {
        Word::from_letters(s.iter().copied())
    }

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn overlap_patterns() {
        let o = overlaps(&w(&[1, 0]), &w(&[0, 0]));
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].b, w(&[0]));
        assert_eq!(o[0].word, w(&[1, 0, 0]));
        assert!(overlaps(&w(&[1, 0]), &w(&[1, 0])).is_empty());
        let o = overlaps(&w(&[1, 0]), &w(&[0, 1]));
        assert_eq!(o[0].word, w(&[1, 0, 1]));
        // x^2 with itself overlaps once, at offset 1
        assert_eq!(overlaps(&w(&[0, 0]), &w(&[0, 0])).len(), 1);
        let inc = overlaps(&w(&[1, 0]), &w(&[0, 1, 0, 1]));
        assert!(inc.iter().any(|x| x.kind == OverlapKind::Inclusion && x.a == w(&[0]) && x.c == w(&[1])));
    }

    #[test]
    fn element_cancels_overlap_word() {
        let ord = WordOrder::deglex(3);
        // Example 4 shape, n = 3: g_{jl} X_t - X_j g_{lt}
        let g21 = Poly::from_terms([(w(&[1, 0]), q(1)), (w(&[0, 1]), q(-2))]);
        let g10 = Poly::from_terms([(w(&[2, 1]), q(1)), (w(&[1, 2]), q(-5))]);
        let ov = &overlaps(&w(&[2, 1]), &w(&[1, 0]))[0];
        let s = overlap_element(&g10, &g21, ov, &ord).unwrap();
        let expect = Poly::from_terms([(w(&[2, 0, 1]), q(2)), (w(&[1, 2, 0]), q(-5))]);
        assert_eq!(s, expect);
        assert!(overlap_element(&g21, &g10, ov, &ord).is_err());
    }
}
