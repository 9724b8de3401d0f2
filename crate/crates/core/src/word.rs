//! Words of the free monoid on `n` generators.

use std::fmt;

use crate::order::Grading;

/// Which side a divisor may sit on when dividing a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Two,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Two => "two",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two" | "two-sided" => Ok(Side::Two),
            _ => Err(format!("unknown side '{s}' (expected left, right or two)")),
        }
    }
}

/// A sequence of generator indices (0-based). The empty word is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub const fn one() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        Word(letters.into_iter().map(|i| i as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, grading: &Grading) -> u32 {
        self.0.iter().map(|&g| grading.weight(g as usize)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn pow(&self, e: usize) -> Word {
        Word(self.0.repeat(e))
    }

    pub fn push(&mut self, g: usize) {
        self.0.push(g as u8);
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn is_prefix_of(&self, v: &Word) -> bool {
        v.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, v: &Word) -> bool {
        v.0.ends_with(&self.0)
    }

    /// Start positions of every occurrence of `self` inside `v`.
    pub fn occurrences_in<'a>(&'a self, v: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let (n, m) = (v.len(), self.len());
        (0..=n.saturating_sub(m))
            .filter(move |&p| m <= n && v.0[p..p + m] == self.0[..])
    }

    /// Leftmost position where `self` divides `v` from the given side.
    pub fn divides_at(&self, v: &Word, side: Side) -> Option<usize> {
        match side {
            Side::Two => self.occurrences_in(v).next(),
            Side::Left => self.is_suffix_of(v).then(|| v.len() - self.len()),
            Side::Right => self.is_prefix_of(v).then_some(0),
        }
    }

    pub fn divides(&self, v: &Word, side: Side) -> bool {
        self.divides_at(v, side).is_some()
    }

    /// Number of occurrences of each generator, indexed by generator.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        for &g in &self.0 {
            e[g as usize] += 1;
        }
        e
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            let name = &names[g as usize];
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(|g| format!("X{}", g + 1)).collect();
        write!(f, "{}", s.join(""))
    }
}

/// All `(w, s)` with `v = w·u·s`, leftmost occurrence first.
pub fn word_divisions(u: &Word, v: &Word) -> Vec<(Word, Word)> {
    u.occurrences_in(v)
        .map(|p| (v.subword(0, p), v.subword(p + u.len(), v.len())))
        .collect()
}

/// Every word of weighted degree at most `maxdeg`, grouped by length
/// then in index order.
pub fn words_upto(grading: &Grading, maxdeg: u32) -> Vec<Word> {
    let n = grading.len();
    let mut out = vec![Word::one()];
    let mut frontier = vec![(Word::one(), 0u32)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, d) in &frontier {
            for g in 0..n {
                let nd = d + grading.weight(g);
                if nd <= maxdeg {
                    let mut x = w.clone();
                    x.push(g);
                    out.push(x.clone());
                    next.push((x, nd));
                }
            }
        }
        frontier = next;
    }
    out
}
