//! Gradings and monomial orderings on words and exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Positive integer weight per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<u32>,
}

impl Grading {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidOrder("generator weights must be at least 1".into()));
        }
        Ok(Grading { weights })
    }

    pub fn uniform(n: usize) -> Self {
        Grading { weights: vec![1; n] }
    }

    pub fn weight(&self, g: usize) -> u32 {
        self.weights[g]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

/// Anything that totally orders words.
pub trait MonomialOrder {
    fn cmp_words(&self, u: &Word, v: &Word) -> Ordering;

    fn max_word<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Option<&'a Word>
    where
        Self: Sized,
    {
        words.into_iter().max_by(|a, b| self.cmp_words(a, b))
    }
}

impl<T: MonomialOrder + ?Sized> MonomialOrder for &T {
    fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        (**self).cmp_words(u, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordOrderKind {
    DegLex,
    DegRevLex,
}

impl WordOrderKind {
    pub fn name(self) -> &'static str {
        match self {
            WordOrderKind::DegLex => "deglex",
            WordOrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl std::str::FromStr for WordOrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deglex" | "grlex" => Ok(WordOrderKind::DegLex),
            "degrevlex" | "grevlex" => Ok(WordOrderKind::DegRevLex),
            // y > xy > x^2y > ... is an infinite descending chain
            "lex" => Err(Error::InvalidOrder(
                "pure lex is not a well-ordering on words; use deglex or degrevlex".into(),
            )),
            _ => Err(Error::InvalidOrder(format!("unknown word ordering '{s}'"))),
        }
    }
}

/// Sort key whose natural `Ord` coincides with the word ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderKey {
    deg: u32,
    seq: Vec<u8>,
}

/// Degree-first ordering on the free monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordOrder {
    kind: WordOrderKind,
    precedence: Vec<usize>,
    rank: Vec<u8>,
    grading: Grading,
}

impl WordOrder {
    /// `precedence` lists generator indices from smallest to largest.
    pub fn new(kind: WordOrderKind, precedence: Vec<usize>, grading: Grading) -> Result<Self> {
        let n = grading.len();
        let mut rank = vec![u8::MAX; n];
        if precedence.len() != n {
            return Err(Error::InvalidOrder("precedence must list every generator once".into()));
        }
        for (r, &g) in precedence.iter().enumerate() {
            if g >= n || rank[g] != u8::MAX {
                return Err(Error::InvalidOrder("precedence must be a permutation of the generators".into()));
            }
            rank[g] = r as u8;
        }
        Ok(WordOrder { kind, precedence, rank, grading })
    }

    pub fn deglex(n: usize) -> Self {
        WordOrder::new(WordOrderKind::DegLex, (0..n).collect(), Grading::uniform(n)).unwrap()
    }

    pub fn kind(&self) -> WordOrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn rank(&self, g: usize) -> usize {
        self.rank[g] as usize
    }

    pub fn nvars(&self) -> usize {
        self.rank.len()
    }

    pub fn with_grading(&self, grading: Grading) -> Result<Self> {
        WordOrder::new(self.kind, self.precedence.clone(), grading)
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        let deg = w.degree(&self.grading);
        let seq = match self.kind {
            WordOrderKind::DegLex => w.letters().iter().map(|&g| self.rank[g as usize]).collect(),
            WordOrderKind::DegRevLex => {
                let top = (self.rank.len() - 1) as u8;
                w.letters().iter().rev().map(|&g| top - self.rank[g as usize]).collect()
            }
        };
        OrderKey { deg, seq }
    }

    pub fn word(&self, key: &OrderKey) -> Word {
        match self.kind {
            WordOrderKind::DegLex => Word::from_letters(key.seq.iter().map(|&r| self.precedence[r as usize])),
            WordOrderKind::DegRevLex => {
                let top = (self.rank.len() - 1) as u8;
                Word::from_letters(key.seq.iter().rev().map(|&r| self.precedence[(top - r) as usize]))
            }
        }
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        let (du, dv) = (u.degree(&self.grading), v.degree(&self.grading));
        if du != dv {
            return du.cmp(&dv);
        }
        match self.kind {
            WordOrderKind::DegLex => {
                for (a, b) in u.letters().iter().zip(v.letters()) {
                    if a != b {
                        return self.rank[*a as usize].cmp(&self.rank[*b as usize]);
                    }
                }
                u.len().cmp(&v.len())
            }
            WordOrderKind::DegRevLex => {
                for (a, b) in u.letters().iter().rev().zip(v.letters().iter().rev()) {
                    if a != b {
                        return self.rank[*b as usize].cmp(&self.rank[*a as usize]);
                    }
                }
                u.len().cmp(&v.len())
            }
        }
    }
}

impl MonomialOrder for WordOrder {
    fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        self.compare(u, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentScheme {
    Lex,
    DegLex,
    DegRevLex,
}

impl ExponentScheme {
    pub fn name(self) -> &'static str {
        match self {
            ExponentScheme::Lex => "lex",
            ExponentScheme::DegLex => "deglex",
            ExponentScheme::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for ExponentScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ExponentScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(ExponentScheme::Lex),
            "deglex" | "grlex" => Ok(ExponentScheme::DegLex),
            "degrevlex" | "grevlex" => Ok(ExponentScheme::DegRevLex),
            _ => Err(Error::InvalidOrder(format!("unknown exponent ordering '{s}'"))),
        }
    }
}

/// Compare exponent vectors `(α1,…,αn)` with respect to a permuted
/// alphabet `a_ℓ1, …, a_ℓn`.
pub fn compare_exponents(scheme: ExponentScheme, a: &[u32], b: &[u32]) -> Ordering {
    let total = |v: &[u32]| v.iter().map(|&x| x as u64).sum::<u64>();
    match scheme {
        ExponentScheme::Lex => a.cmp(b),
        ExponentScheme::DegLex => total(a).cmp(&total(b)).then_with(|| a.cmp(b)),
        ExponentScheme::DegRevLex => total(a).cmp(&total(b)).then_with(|| {
            for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }),
    }
}

/// An ordering on (ordered) words read as exponent vectors in the
/// alphabet `perm`; ties between distinct words with equal exponents
/// fall back to `fallback` so the comparator stays total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentOrder {
    pub scheme: ExponentScheme,
    pub perm: Vec<usize>,
    pub fallback: WordOrder,
}

impl ExponentOrder {
    pub fn exponents(&self, w: &Word) -> Vec<u32> {
        let e = w.exponents(self.perm.len());
        self.perm.iter().map(|&g| e[g]).collect()
    }
}

impl MonomialOrder for ExponentOrder {
    fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        compare_exponents(self.scheme, &self.exponents(u), &self.exponents(v))
            .then_with(|| self.fallback.compare(u, v))
    }
}

/// Orders used on normal words of a quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientOrder {
    Ambient(WordOrder),
    Exponent(ExponentOrder),
    /// Weighted degree first, then the inner order.
    Graded(Grading, Box<QuotientOrder>),
}

impl QuotientOrder {
    pub fn describe(&self) -> String {
        match self {
            QuotientOrder::Ambient(o) => format!("ambient {}", o.kind().name()),
            QuotientOrder::Exponent(e) => format!("{} on exponents", e.scheme),
            QuotientOrder::Graded(_, inner) => format!("graded {}", inner.describe()),
        }
    }
}

impl MonomialOrder for QuotientOrder {
    fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        match self {
            QuotientOrder::Ambient(o) => o.compare(u, v),
            QuotientOrder::Exponent(e) => e.cmp_words(u, v),
            QuotientOrder::Graded(g, inner) => u
                .degree(g)
                .cmp(&v.degree(g))
                .then_with(|| inner.cmp_words(u, v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_upto;

    fn w(s: &[usize]) -> Word {
        Word::from_letters(s.iter().copied())
    }

    #[test]
    fn deglex_basics() {
        let o = WordOrder::deglex(2);
        assert_eq!(o.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        assert_eq!(o.compare(&w(&[0, 0]), &w(&[1])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree_dominates() {
        let g = Grading::new(vec![1, 1, 3]).unwrap();
        let o = WordOrder::new(WordOrderKind::DegLex, vec![1, 0, 2], g).unwrap();
        assert_eq!(o.compare(&w(&[2, 1]), &w(&[0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_reads_from_the_right() {
        let o = WordOrder::new(WordOrderKind::DegRevLex, vec![0, 1], Grading::uniform(2)).unwrap();
        // last letters differ: x < y, so the word ending in x is larger
        assert_eq!(o.compare(&w(&[1, 0]), &w(&[0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&w(&[0, 0]), &w(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_on_words_rejected() {
        assert!("lex".parse::<WordOrderKind>().is_err());
        assert!(Grading::new(vec![1, 0]).is_err());
    }

    #[test]
    fn keys_agree_with_compare() {
        for kind in [WordOrderKind::DegLex, WordOrderKind::DegRevLex] {
            let g = Grading::new(vec![1, 2, 1]).unwrap();
            let o = WordOrder::new(kind, vec![2, 0, 1], g.clone()).unwrap();
            let ws = words_upto(&g, 4);
            for a in &ws {
                assert_eq!(&o.word(&o.key(a)), a);
                for b in &ws {
                    assert_eq!(o.key(a).cmp(&o.key(b)), o.compare(a, b));
                }
            }
        }
    }

    #[test]
    fn exponent_schemes() {
        let a = [1, 0, 2];
        let b = [0, 3, 0];
        assert_eq!(compare_exponents(ExponentScheme::DegLex, &b, &a), Ordering::Less);
        assert_eq!(compare_exponents(ExponentScheme::DegRevLex, &a, &b), Ordering::Less);
        assert_eq!(compare_exponents(ExponentScheme::Lex, &a, &a), Ordering::Equal);
    }
}
