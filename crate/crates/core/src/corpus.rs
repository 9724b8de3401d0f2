//! Bundled presentations of the worked examples and their generators.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::order::{Grading, WordOrder, WordOrderKind};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::scalar::{Field, Scalar};
use crate::word::Word;

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
}

impl Fixture {
    pub fn presentation(&self) -> Presentation {
        Presentation::parse(self.text).expect("bundled fixture parses")
    }
}

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        &[$(Fixture { name: $name, text: include_str!(concat!("../corpus/", $name, ".alg")) }),*]
    };
}

static CORPUS: &[Fixture] = fixtures![
    "qplane",
    "ex1_case1",
    "ex1_case2",
    "ex1_case3",
    "ex1_case4",
    "ex1_case5",
    "ex1_case5_neg",
    "ex1_off",
    "ex2_case1",
    "ex2_case2",
    "ex2_case3",
    "ex2_case4",
    "ex2_case5",
    "ex2_case5_neg",
    "ex3",
    "ex4_n2_p2",
    "ex4_n2_p3",
    "ex4_n3_p2",
    "ex4_n3_p3",
    "ex5_generic",
    "ex5_mu0",
    "ex6_generic",
    "ex6_lambda0",
    "ex7_wide",
    "ex7_unit",
    "ex7_case5",
    "ex7_downup",
    "ex8",
    "ex8_j",
    "qspace4",
];

pub fn corpus() -> &'static [Fixture] {
    CORPUS
}

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    CORPUS.iter().find(|f| f.name == name)
}

/// Scalar parsed from `"3"`, `"-1/2"`, ...
pub fn q(s: &str) -> Scalar {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().expect("integer numerator");
    let d: BigInt = d.parse().expect("integer denominator");
    Scalar::Q(BigRational::new(n, d))
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Polynomial from `(coefficient, 1-based letters)` pairs.
fn rel(terms: &[(Scalar, &[usize])]) -> Poly {
    Poly::from_terms(terms.iter().map(|(c, w)| (Word::from_letters(w.iter().map(|i| i - 1)), c.clone())))
}

fn one() -> Scalar {
    q("1")
}

fn neg(c: &Scalar) -> Scalar {
    -c
}

fn build(names: Vec<String>, weights: Vec<u32>, precedence: Vec<usize>, rels: Vec<Poly>) -> Presentation {
    let grading = Grading::new(weights).expect("positive weights");
    let order = WordOrder::new(WordOrderKind::DegLex, precedence, grading).expect("permutation");
    let rels = rels.into_iter().filter(|r| !r.is_zero()).collect();
    Presentation::new(Field::Rational, names, order, rels).expect("consistent fixture")
}

pub fn qplane(qq: &Scalar) -> Presentation {
    build(
        vec!["x".into(), "y".into()],
        vec![1, 1],
        vec![0, 1],
        vec![rel(&[(one(), &[2, 1]), (neg(qq), &[1, 2])])],
    )
}

/// g21 = X2X1 − λX1X3, g31 = X3X1 − μX1X2, g32 = X3X2 − γX2X3.
pub fn ex1(l: &Scalar, m: &Scalar, g: &Scalar) -> Presentation {
    build(
        names("X", 3),
        vec![1; 3],
        vec![0, 1, 2],
        vec![
            rel(&[(one(), &[2, 1]), (neg(l), &[1, 3])]),
            rel(&[(one(), &[3, 1]), (neg(m), &[1, 2])]),
            rel(&[(one(), &[3, 2]), (neg(g), &[2, 3])]),
        ],
    )
}

/// g21 = X2X1 − λX1X2, g31 = X3X1 − μX2X3, g32 = X3X2 − γX1X3.
pub fn ex2(l: &Scalar, m: &Scalar, g: &Scalar) -> Presentation {
    build(
        names("X", 3),
        vec![1; 3],
        vec![0, 1, 2],
        vec![
            rel(&[(one(), &[2, 1]), (neg(l), &[1, 2])]),
            rel(&[(one(), &[3, 1]), (neg(m), &[2, 3])]),
            rel(&[(one(), &[3, 2]), (neg(g), &[1, 3])]),
        ],
    )
}

pub fn ex3() -> Presentation {
    let b = |a: &[usize], t: &[usize]| rel(&[(one(), a), (q("-1"), t)]);
    build(
        names("X", 4),
        vec![1; 4],
        vec![0, 1, 2, 3],
        vec![
            b(&[2, 1], &[1, 2]),
            b(&[3, 1], &[2, 4]),
            b(&[3, 2], &[1, 4]),
            b(&[4, 1], &[2, 3]),
            b(&[4, 2], &[1, 3]),
            b(&[4, 3], &[3, 4]),
        ],
    )
}

/// Ω ∪ {X_jX_i − λ_ji X_iX_j}; `lambda(j, i)` for 1 ≤ i < j ≤ n, `omega`
/// lists the i with X_i^p ∈ Ω.
pub fn ex4(n: usize, p: usize, lambda: impl Fn(usize, usize) -> Scalar, omega: &[usize]) -> Presentation {
    let mut rels = Vec::new();
    for &i in omega {
        let w = vec![i; p];
        rels.push(rel(&[(one(), &w)]));
    }
    for j in 2..=n {
        for i in 1..j {
            rels.push(rel(&[(one(), &[j, i]), (neg(&lambda(j, i)), &[i, j])]));
        }
    }
    build(names("X", n), vec![1; n], (0..n).collect(), rels)
}

/// g21 = X2X1 − λX1X3 + αX1, g31 = X3X1, g32 = X3X2 − μX2X3 + αX3.
pub fn ex5(l: &Scalar, m: &Scalar, a: &Scalar) -> Presentation {
    build(
        names("X", 3),
        vec![1; 3],
        vec![0, 1, 2],
        vec![
            rel(&[(one(), &[2, 1]), (neg(l), &[1, 3]), (a.clone(), &[1])]),
            rel(&[(one(), &[3, 1])]),
            rel(&[(one(), &[3, 2]), (neg(m), &[2, 3]), (a.clone(), &[3])]),
        ],
    )
}

/// g21 = X2X1 − λX1X2 + αX1, g31 = X3X1, g32 = X3X2 − μX1X3 + αX3.
pub fn ex6(l: &Scalar, m: &Scalar, a: &Scalar) -> Presentation {
    build(
        names("X", 3),
        vec![1; 3],
        vec![0, 1, 2],
        vec![
            rel(&[(one(), &[2, 1]), (neg(l), &[1, 2]), (a.clone(), &[1])]),
            rel(&[(one(), &[3, 1])]),
            rel(&[(one(), &[3, 2]), (neg(m), &[1, 3]), (a.clone(), &[3])]),
        ],
    )
}

/// g31 = X3X1 − λX1X3 + γX3, g12 = X1X2 − λX2X1 + γX2,
/// g32 = X3X2 − ωX2X3 + f(X1), with `f[k]` the coefficient of X1^k and
/// deglex X2 ≺ X1 ≺ X3. X3 gets weight deg f once that reaches 3.
pub fn ex7(l: &Scalar, g: &Scalar, w: &Scalar, f: &[Scalar]) -> Presentation {
    let df = f.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    let d3 = if df >= 3 { df as u32 } else { 1 };
    let mut g32: Vec<(Scalar, Vec<usize>)> = vec![(one(), vec![3, 2]), (neg(w), vec![2, 3])];
    for (k, c) in f.iter().enumerate() {
        g32.push((c.clone(), vec![1; k]));
    }
    let g32: Vec<(Scalar, &[usize])> = g32.iter().map(|(c, v)| (c.clone(), v.as_slice())).collect();
    build(
        names("X", 3),
        vec![1, 1, d3],
        vec![1, 0, 2],
        vec![
            rel(&[(one(), &[3, 1]), (neg(l), &[1, 3]), (g.clone(), &[3])]),
            rel(&[(one(), &[1, 2]), (neg(l), &[2, 1]), (g.clone(), &[2])]),
            rel(&g32),
        ],
    )
}

/// Parameters of the four-generator family with g43, g32, g42, g31, g41,
/// g21; only the free ones are stored, the rest are derived.
#[derive(Debug, Clone)]
pub struct Ex8Params {
    pub l21: Scalar,
    pub l31: Scalar,
    pub l41: Scalar,
    pub l43: Scalar,
    pub alpha: Scalar,
}

impl Ex8Params {
    pub fn beta(&self) -> Scalar {
        &self.l21 * &self.alpha
    }
    pub fn gamma(&self) -> Scalar {
        &self.l31 * &self.beta()
    }
    pub fn l42(&self) -> Scalar {
        self.l43.inv()
    }
    pub fn l32(&self) -> Scalar {
        self.l43.clone()
    }

    /// λ21α = β, λ31β = γ, λ41γ = α, λ43λ42 = 1, λ43 = λ32, all nonzero.
    pub fn validate(&self) -> Result<()> {
        let all = [&self.l21, &self.l31, &self.l41, &self.l43, &self.alpha];
        if all.iter().any(|c| c.is_zero()) {
            return Err(Error::Invalid("all parameters must be nonzero".into()));
        }
        if &self.l41 * &self.gamma() != self.alpha {
            return Err(Error::Invalid("parameters violate λ41·γ = α".into()));
        }
        Ok(())
    }
}

pub fn ex8(p: &Ex8Params) -> Result<Presentation> {
    p.validate()?;
    Ok(build(
        names("X", 4),
        vec![1; 4],
        vec![0, 1, 2, 3],
        vec![
            rel(&[(one(), &[4, 3]), (neg(&p.l43), &[3, 4]), (neg(&p.alpha), &[2])]),
            rel(&[(one(), &[3, 2]), (neg(&p.l32()), &[2, 3]), (neg(&p.gamma()), &[4])]),
            rel(&[(one(), &[4, 2]), (neg(&p.l42()), &[2, 4]), (p.beta(), &[3])]),
            rel(&[(one(), &[3, 1]), (neg(&p.l31), &[1, 4])]),
            rel(&[(one(), &[4, 1]), (neg(&p.l41), &[1, 2])]),
            rel(&[(one(), &[2, 1]), (neg(&p.l21), &[1, 3])]),
        ],
    ))
}

pub fn ex8_default() -> Ex8Params {
    Ex8Params { l21: q("2"), l31: q("1/2"), l41: q("1"), l43: q("2"), alpha: q("1") }
}

/// z_j z_i − q_ji z_i z_j for i < j.
pub fn quantum_space(n: usize, qij: impl Fn(usize, usize) -> Scalar) -> Presentation {
    let mut rels = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            rels.push(rel(&[(one(), &[j, i]), (neg(&qij(j, i)), &[i, j])]));
        }
    }
    build(names("z", n), vec![1; n], (0..n).collect(), rels)
}

fn ex4_lambda(j: usize, i: usize) -> Scalar {
    const L: [&str; 3] = ["3", "-1/2", "5/3"];
    q(L[(i + j) % 3])
}

fn ex8_j() -> Presentation {
    let base = ex8(&ex8_default()).expect("valid parameters");
    let mut rels = base.relations.clone();
    rels.push(rel(&[(one(), &[1])]));
    base.with_relations(rels)
}

/// The generator calls behind each bundled file.
pub fn generate(name: &str) -> Option<Presentation> {
    let s = |x: &str| q(x);
    Some(match name {
        "qplane" => qplane(&s("2")),
        "ex1_case1" => ex1(&s("0"), &s("3"), &s("5")),
        "ex1_case2" => ex1(&s("2"), &s("0"), &s("5")),
        "ex1_case3" => ex1(&s("2"), &s("0"), &s("0")),
        "ex1_case4" => ex1(&s("0"), &s("3"), &s("0")),
        "ex1_case5" => ex1(&s("2"), &s("3"), &s("1")),
        "ex1_case5_neg" => ex1(&s("2"), &s("3"), &s("-1")),
        "ex1_off" => ex1(&s("1"), &s("1"), &s("2")),
        "ex2_case1" => ex2(&s("0"), &s("0"), &s("5")),
        "ex2_case2" => ex2(&s("0"), &s("3"), &s("0")),
        "ex2_case3" => ex2(&s("2"), &s("0"), &s("5")),
        "ex2_case4" => ex2(&s("2"), &s("3"), &s("0")),
        "ex2_case5" => ex2(&s("1"), &s("3"), &s("5")),
        "ex2_case5_neg" => ex2(&s("-1"), &s("3"), &s("5")),
        "ex3" => ex3(),
        "ex4_n2_p2" => ex4(2, 2, ex4_lambda, &[1, 2]),
        "ex4_n2_p3" => ex4(2, 3, ex4_lambda, &[1, 2]),
        "ex4_n3_p2" => ex4(3, 2, ex4_lambda, &[1, 2, 3]),
        "ex4_n3_p3" => ex4(3, 3, ex4_lambda, &[1, 2, 3]),
        "ex5_generic" => ex5(&s("2"), &s("3"), &s("1")),
        "ex5_mu0" => ex5(&s("2"), &s("0"), &s("1")),
        "ex6_generic" => ex6(&s("2"), &s("3"), &s("1")),
        "ex6_lambda0" => ex6(&s("0"), &s("3"), &s("1")),
        "ex7_wide" => ex7(&s("2"), &s("1"), &s("3"), &[s("0"), s("0"), s("0"), s("1")]),
        "ex7_unit" => ex7(&s("2"), &s("1"), &s("3"), &[s("0"), s("1"), s("1")]),
        "ex7_case5" => ex7(&s("0"), &s("1"), &s("3"), &[s("0"), s("1")]),
        // down-up algebra A(5, -6, 1): λ, ω roots of x^2 - 5x + 6
        "ex7_downup" => ex7(&s("2"), &s("1"), &s("3"), &[s("0"), s("1")]),
        "ex8" => ex8(&ex8_default()).expect("valid parameters"),
        "ex8_j" => ex8_j(),
        "qspace4" => {
            const Q: [&str; 6] = ["2", "-3", "1/2", "5", "-1/3", "7/2"];
            quantum_space(4, |j, i| q(Q[(j - 1) * (j - 2) / 2 + (i - 1)]))
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn files_match_generators() {
        let bless = std::env::var_os("SKEWGB_BLESS").is_some();
        for f in corpus() {
            let g = generate(f.name).expect("generator for every fixture");
            if bless {
                let path = format!("{}/corpus/{}.alg", env!("CARGO_MANIFEST_DIR"), f.name);
                std::fs::write(path, g.to_text()).unwrap();
                continue;
            }
            assert_eq!(f.presentation(), g, "{}", f.name);
            assert_eq!(f.text, g.to_text(), "{}", f.name);
        }
    }

    #[test]
    fn ex8_constraints_enforced() {
        let mut p = ex8_default();
        assert!(ex8(&p).is_ok());
        p.l41 = q("3");
        assert!(ex8(&p).is_err());
    }
}
