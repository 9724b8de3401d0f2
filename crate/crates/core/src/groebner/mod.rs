//! Gröbner-basis verification and truncated completion.

mod complete;
mod oracle;
mod overlap;

pub use complete::{complete, interreduce, minimalize, Completion};
pub use oracle::MembershipOracle;
pub use overlap::{basis_overlaps, overlap_element, overlaps, pair_overlaps, Overlap, OverlapConfig, OverlapKind};

use crate::error::Result;
use crate::order::WordOrder;
use crate::poly::Poly;
use crate::rewrite::Reducer;
use crate::word::{Side, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted,
    /// Verified only up to the truncation degree.
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "verified up to truncation",
        }
    }
}

/// An overlap whose element does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub config: OverlapConfig,
    pub element: Poly,
    pub remainder: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBReport {
    pub verified: bool,
    pub maxdeg: u32,
    pub certificate: Option<Certificate>,
    /// Every overlap was examined, so the verdict holds in all degrees.
    pub complete: bool,
    pub examined: usize,
    pub skipped: usize,
}

impl GBReport {
    pub fn verdict(&self) -> Verdict {
        match (self.verified, self.complete) {
            (false, _) => Verdict::Refuted,
            (true, true) => Verdict::Verified,
            (true, false) => Verdict::Inconclusive,
        }
    }
}

/// Check that every overlap element with overlap word of weighted degree
/// ≤ `maxdeg` reduces to zero. Zero members of `gens` are ignored.
pub fn check_gb(gens: &[Poly], order: &WordOrder, maxdeg: u32) -> GBReport {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let lms: Vec<Word> = gens.iter().map(|g| g.lm(order).unwrap().clone()).collect();
    let red = Reducer::new(&gens, order, Side::Two);
    let mut report = GBReport { verified: true, maxdeg, certificate: None, complete: true, examined: 0, skipped: 0 };
    for cfg in basis_overlaps(&lms, order) {
        if cfg.overlap.word.degree(order.grading()) > maxdeg {
            report.skipped += 1;
            report.complete = false;
            continue;
        }
        report.examined += 1;
        let element = overlap_element(&gens[cfg.i], &gens[cfg.j], &cfg.overlap, order).expect("fresh overlap");
        let remainder = red.reduce(&element);
        if !remainder.is_zero() {
            report.verified = false;
            report.certificate = Some(Certificate { config: cfg, element, remainder });
            return report;
        }
    }
    report
}

/// Outcome of comparing a basis with the leading homogeneous parts of its
/// members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhReport {
    pub is_gb: bool,
    pub lh_is_gb: bool,
    pub gb: GBReport,
    pub lh: Vec<Poly>,
    pub lh_gb: GBReport,
    /// Leading monomials of the truncated span of the ideal all lie in
    /// the monomial ideal generated by the LM(g).
    pub staircase_ok: bool,
    pub conclusive: bool,
}

/// `is_gb`: G is a Gröbner basis. `lh_is_gb`: LH(G) is a Gröbner basis of
/// the ideal of leading homogeneous parts of ⟨G⟩. The latter amounts to
/// LH(G) being a Gröbner basis of what it generates together with
/// LM(⟨G⟩) = ⟨LM(G)⟩; the second half is checked on the truncated span.
pub fn prop26_check(gens: &[Poly], order: &WordOrder, maxdeg: u32) -> Result<LhReport> {
    let grading = order.grading();
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let lh: Vec<Poly> = gens.iter().map(|g| g.lh(grading)).collect::<Result<_>>()?;
    let gb = check_gb(&gens, order, maxdeg);
    let lh_gb = check_gb(&lh, order, maxdeg);
    let lms: Vec<Word> = gens.iter().map(|g| g.lm(order).unwrap().clone()).collect();
    let oracle = MembershipOracle::new(&gens, order, maxdeg);
    let staircase_ok = oracle.pivot_lms().all(|m| lms.iter().any(|u| u.divides(&m, Side::Two)));
    Ok(LhReport {
        is_gb: gb.verified,
        lh_is_gb: lh_gb.verified && staircase_ok,
        conclusive: gb.complete && lh_gb.complete,
        gb,
        lh,
        lh_gb,
        staircase_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn pres(rels: &[&str]) -> Presentation {
        let mut text = String::from("gens x y\norder deglex x y\n");
        for r in rels {
            text.push_str(&format!("rel {r}\n"));
        }
        Presentation::parse(&text).unwrap()
    }

    #[test]
    fn single_binomial_is_gb() {
        let p = pres(&["y*x - 2*x*y"]);
        let r = check_gb(&p.relations, &p.order, 6);
        assert!(r.verified && r.complete);
        assert_eq!(r.examined, 0);
    }

    #[test]
    fn non_gb_gives_certificate() {
        let p = pres(&["y*x - x", "y^2*x"]);
        let r = check_gb(&p.relations, &p.order, 4);
        assert!(!r.verified);
        let c = r.certificate.unwrap();
        assert!(!c.remainder.is_zero());
        assert_eq!(crate::rewrite::normal_form(&c.element, &p.relations, &p.order), c.remainder);
    }

    #[test]
    fn lh_correspondence_negative() {
        let p = pres(&["y*x - x", "y^2*x"]);
        let r = prop26_check(&p.relations, &p.order, 3).unwrap();
        assert!(!r.is_gb);
        assert!(!r.lh_is_gb);
        assert!(r.lh_gb.verified, "LH(G) is monomial, hence a GB of its own ideal");
    }
}
