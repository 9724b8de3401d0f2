//! Sorting a binomial Gröbner basis into the left / right / two-sided shapes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::{ExponentOrder, ExponentScheme, WordOrder};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::word::{Side, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    LeftType,
    RightType,
    TwoSidedType,
    MonomialOnly,
    None,
}

impl TypeTag {
    pub fn name(self) -> &'static str {
        match self {
            TypeTag::LeftType => "LeftType",
            TypeTag::RightType => "RightType",
            TypeTag::TwoSidedType => "TwoSidedType",
            TypeTag::MonomialOnly => "MonomialOnly",
            TypeTag::None => "None",
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relation slot for the pair `a_ℓj·a_ℓi` (positions `j > i` in ℓ, 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub j: usize,
    pub i: usize,
    /// Zero when the slot is the monomial `a_ℓj·a_ℓi ∈ Ω`.
    pub lambda: Scalar,
    pub tail: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `perm[k]` is the generator `a_ℓ(k+1)`.
    pub perm: Vec<usize>,
    pub omega: Vec<Word>,
    pub slots: Vec<Slot>,
    pub tags: BTreeSet<TypeTag>,
    pub diagnostic: Option<String>,
}

impl Classification {
    pub fn has(&self, t: TypeTag) -> bool {
        self.tags.contains(&t)
    }

    pub fn is_none(&self) -> bool {
        self.tags.contains(&TypeTag::None)
    }

    /// `a_ℓ1^α1 ··· a_ℓn^αn`.
    pub fn ordered_word(&self, alpha: &[u32]) -> Word {
        let mut w = Word::one();
        for (k, &e) in alpha.iter().enumerate() {
            for _ in 0..e {
                w.push(self.perm[k]);
            }
        }
        w
    }

    /// Whether `w` is of the form `a_ℓ1^α1 ··· a_ℓn^αn`.
    pub fn is_ordered(&self, w: &Word) -> bool {
        let mut pos = vec![0; self.perm.len()];
        for (k, &g) in self.perm.iter().enumerate() {
            pos[g] = k;
        }
        w.letters().windows(2).all(|p| pos[p[0] as usize] <= pos[p[1] as usize])
    }

    pub fn tag_names(&self) -> Vec<&'static str> {
        self.tags.iter().map(|t| t.name()).collect()
    }
}

fn none(perm: Vec<usize>, omega: Vec<Word>, slots: Vec<Slot>, msg: String) -> Classification {
    Classification { perm, omega, slots, tags: [TypeTag::None].into(), diagnostic: Some(msg) }
}

/// Classify a minimal Gröbner basis made of monomials and binomials.
pub fn classify(gens: &[Poly], order: &WordOrder) -> Result<Classification> {
    let n = order.nvars();
    let mut omega = Vec::new();
    let mut binomials: Vec<(Word, Word, Scalar)> = Vec::new();
    let mut lms = Vec::new();
    for g in gens {
        let g = g.monic(order);
        let lm = g.lm(order).ok_or(Error::ZeroPolynomial)?.clone();
        match g.len() {
            1 => omega.push(lm.clone()),
            2 => {
                let (tail, c) = g.terms().find(|(w, _)| **w != lm).unwrap();
                binomials.push((lm.clone(), tail.clone(), -c));
            }
            k => return Err(Error::NotSkew2Nomial(format!("member with {k} terms"))),
        }
        lms.push(lm);
    }
    for (a, u) in lms.iter().enumerate() {
        for (b, v) in lms.iter().enumerate() {
            if a != b && u.divides(v, Side::Two) {
                return Err(Error::NotLmReduced(format!("LM of member {} divides LM of member {}", a + 1, b + 1)));
            }
        }
    }

    // x beats y when xy is a slot leading monomial
    let mut beats = vec![vec![false; n]; n];
    let two_letters = |w: &Word| w.len() == 2 && w.letters()[0] != w.letters()[1];
    for w in omega.iter().filter(|w| two_letters(w)) {
        beats[w.letters()[0] as usize][w.letters()[1] as usize] = true;
    }
    let mut odd = None;
    for (lead, _, _) in &binomials {
        if two_letters(lead) {
            beats[lead.letters()[0] as usize][lead.letters()[1] as usize] = true;
        } else if odd.is_none() {
            odd = Some(format!("binomial leading monomial {lead:?} is not a product of two distinct generators"));
        }
    }
    let identity: Vec<usize> = order.precedence().to_vec();
    if let Some(msg) = odd {
        return Ok(none(identity, omega, Vec::new(), msg));
    }
    for x in 0..n {
        for y in x + 1..n {
            match (beats[x][y], beats[y][x]) {
                (true, true) => {
                    return Ok(none(identity, omega, Vec::new(), format!("both X{}X{} and X{}X{} lead", x + 1, y + 1, y + 1, x + 1)))
                }
                (false, false) if !binomials.is_empty() => {
                    return Ok(none(identity, omega, Vec::new(), format!("no relation for the pair X{}, X{}", x + 1, y + 1)))
                }
                _ => {}
            }
        }
    }
    let wins: Vec<usize> = (0..n).map(|x| beats[x].iter().filter(|&&b| b).count()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&x| (wins[x], order.rank(x)));
    let transitive = perm.iter().enumerate().all(|(k, &x)| wins[x] == k);
    if binomials.is_empty() {
        let perm = if transitive { perm } else { identity };
        return Ok(Classification {
            perm,
            omega,
            slots: Vec::new(),
            tags: [TypeTag::MonomialOnly].into(),
            diagnostic: None,
        });
    }
    if !transitive {
        return Ok(none(identity, omega, Vec::new(), "leading monomials do not determine a linear order of the generators".into()));
    }
    let mut pos = vec![0; n];
    for (k, &x) in perm.iter().enumerate() {
        pos[x] = k;
    }

    let zero = order_field_zero(&binomials);
    let mut slots = Vec::new();
    for w in omega.iter().filter(|w| two_letters(w)) {
        let (a, b) = (w.letters()[0] as usize, w.letters()[1] as usize);
        slots.push(Slot { j: pos[a], i: pos[b], lambda: zero.clone(), tail: None });
    }
    let mut tags: BTreeSet<TypeTag> = [TypeTag::LeftType, TypeTag::RightType, TypeTag::TwoSidedType].into();
    let mut diagnostic = None;
    for (lead, tail, lambda) in &binomials {
        let (j, i) = (pos[lead.letters()[0] as usize], pos[lead.letters()[1] as usize]);
        let mut mine = BTreeSet::new();
        if tail.len() == 2 {
            let (q, r) = (pos[tail.letters()[0] as usize], pos[tail.letters()[1] as usize]);
            if q == i && r > i {
                mine.insert(TypeTag::LeftType);
            }
            if r == j && q < j {
                mine.insert(TypeTag::RightType);
            }
            if q == i && r == j {
                mine.insert(TypeTag::TwoSidedType);
            }
        }
        if mine.is_empty() && diagnostic.is_none() {
            diagnostic = Some(format!("tail {tail:?} of {lead:?} fits no pattern"));
        }
        tags = tags.intersection(&mine).copied().collect();
        slots.push(Slot { j, i, lambda: lambda.clone(), tail: Some(tail.clone()) });
    }
    slots.sort_by_key(|s| (s.j, s.i));
    if tags.is_empty() {
        tags.insert(TypeTag::None);
        if diagnostic.is_none() {
            diagnostic = Some("binomial tails mix incompatible patterns".into());
        }
    }
    Ok(Classification { perm, omega, slots, tags, diagnostic })
}

fn order_field_zero(binomials: &[(Word, Word, Scalar)]) -> Scalar {
    let c = &binomials[0].2;
    c.field().zero()
}

/// The exponent-vector ordering a classification supports.
pub fn induced_order(c: &Classification, scheme: ExponentScheme, ambient: &WordOrder) -> Result<ExponentOrder> {
    let ok = if c.has(TypeTag::TwoSidedType) {
        true
    } else if c.has(TypeTag::LeftType) {
        matches!(scheme, ExponentScheme::Lex | ExponentScheme::DegLex)
    } else if c.has(TypeTag::RightType) {
        scheme == ExponentScheme::DegRevLex
    } else {
        false
    };
    if !ok {
        let why = if c.has(TypeTag::LeftType) {
            "left-type presentations induce lex or deglex on exponent vectors"
        } else if c.has(TypeTag::RightType) {
            "right-type presentations induce degrevlex on exponent vectors"
        } else {
            "no induced ordering without a left, right or two-sided classification"
        };
        return Err(Error::Hypothesis(format!("{scheme} not available: {why}")));
    }
    Ok(ExponentOrder { scheme, perm: c.perm.clone(), fallback: ambient.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture;

    fn tags(name: &str) -> Vec<&'static str> {
        let p = fixture(name).unwrap().presentation();
        classify(&p.relations, &p.order).unwrap().tag_names()
    }

    #[test]
    fn fixture_shapes() {
        assert_eq!(tags("ex1_case5"), vec!["LeftType"]);
        assert_eq!(tags("ex2_case5"), vec!["RightType"]);
        assert_eq!(tags("qplane"), vec!["LeftType", "RightType", "TwoSidedType"]);
        assert_eq!(tags("ex3"), vec!["None"]);
        assert_eq!(tags("ex4_n3_p2"), vec!["LeftType", "RightType", "TwoSidedType"]);
    }

    #[test]
    fn degenerate_slots_become_monomials() {
        let p = fixture("ex2_case2").unwrap().presentation();
        let c = classify(&p.relations, &p.order).unwrap();
        assert_eq!(c.tag_names(), vec!["RightType"]);
        assert_eq!(c.omega.len(), 2);
        assert_eq!(c.slots.iter().filter(|s| s.lambda.is_zero()).count(), 2);
    }

    #[test]
    fn rejects_three_terms_and_non_reduced() {
        let p = crate::Presentation::parse("gens x y\nrel y*x - x*y - x^2\n").unwrap();
        assert!(classify(&p.relations, &p.order).is_err());
        let p = crate::Presentation::parse("gens x y\nrel y*x - x*y\nrel y*x*x\n").unwrap();
        assert!(matches!(classify(&p.relations, &p.order), Err(Error::NotLmReduced(_))));
    }

    #[test]
    fn scheme_must_fit_tag() {
        let p = fixture("ex1_case5").unwrap().presentation();
        let c = classify(&p.relations, &p.order).unwrap();
        assert!(induced_order(&c, ExponentScheme::DegLex, &p.order).is_ok());
        assert!(induced_order(&c, ExponentScheme::DegRevLex, &p.order).is_err());
    }
}
