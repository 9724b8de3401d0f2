//! Worked instances: each fixture or relation set below is checked against
//! values computed by hand.

use skewgb::binomial::{almost_skew_check, classify, skew_2nomial_gb, SkewElement, TypeTag};
use skewgb::corpus::{self, fixture, q};
use skewgb::groebner::{check_gb, complete, prop26_check};
use skewgb::quotient::{build_lh_quotient, build_quotient, decompose, is_domain_upto, lift_order, NormalQuotient};
use skewgb::rewrite::{divide_left, divide_two_sided, normal_words};
use skewgb::{MonomialOrder, Presentation, QuotientTerm, Word};

fn pres(name: &str) -> Presentation {
    fixture(name).unwrap().presentation()
}

#[test]
fn every_fixture_round_trips() {
    for fx in corpus::corpus() {
        let p = fx.presentation();
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p, "{}", fx.name);
    }
}

#[test]
fn claimed_bases_verify() {
    for fx in corpus::corpus() {
        let p = fx.presentation();
        let r = check_gb(&p.relations, &p.order, 6);
        assert_eq!(r.verified, fx.name != "ex1_off", "{}", fx.name);
    }
}

#[test]
fn division_by_the_relation_itself() {
    let p = pres("qplane");
    let g = &p.relations[0];
    let r = divide_two_sided(g, &p.relations, &p.order);
    assert!(r.remainder.is_zero());
    assert_eq!(r.quotients, vec![QuotientTerm { coeff: q("1"), left: Word::one(), index: 0, right: Word::one() }]);
    let f = p.poly("x*y*x - 2*x^2*y").unwrap();
    let r = divide_left(&f, &p.relations, &p.order);
    assert!(r.remainder.is_zero());
    assert_eq!(r.quotients[0].left, p.word("x").unwrap());
}

#[test]
fn lh_of_example_5() {
    let r = almost_skew_check(&pres("ex5_generic")).unwrap();
    assert!(r.almost);
    let want = Presentation::parse("gens X1 X2 X3\nrel X2*X1 - 2*X1*X3\nrel X3*X1\nrel X3*X2 - 3*X2*X3\n").unwrap();
    assert_eq!(r.lh.relations, want.relations);
    assert!(almost_skew_check(&pres("ex7_wide")).unwrap().almost);
    let p = Presentation::parse("gens x y\nrel y*x - x*y - x^2\n").unwrap();
    assert!(!almost_skew_check(&p).unwrap().almost);
}

#[test]
fn example_7_lh_shape() {
    let q = build_lh_quotient(&pres("ex7_wide"), 6, None).unwrap();
    assert!(q.classification.has(TypeTag::TwoSidedType));
    assert_eq!(q.classification.perm, vec![1, 0, 2]);
    let r = prop26_check(&pres("ex7_unit").relations, &pres("ex7_unit").order, 6).unwrap();
    assert!(r.is_gb && r.lh_is_gb);
}

#[test]
fn quotient_products() {
    let p = corpus::ex1(&q("1"), &q("1"), &q("1"));
    let nq = NormalQuotient::from_presentation(&p, 4);
    assert_eq!(nq.mul(&Word::gen(1), &Word::gen(0)).unwrap(), Some((q("1"), p.word("X1*X3").unwrap())));
}

#[test]
fn nilpotent_quantum_dimension() {
    for (n, pp) in [(2u32, 2usize), (2, 3), (3, 2), (3, 3)] {
        let p = pres(&format!("ex4_n{n}_p{pp}"));
        assert_eq!(normal_words(&p.relations, &p.order, 9).len(), pp.pow(n));
    }
    let q = build_quotient(&pres("ex4_n3_p2"), 6).unwrap();
    assert_eq!(q.dimension_upto(6), 8);
}

#[test]
fn commutative_polynomials_are_a_domain() {
    let p = corpus::quantum_space(3, |_, _| q("1"));
    assert!(is_domain_upto(&NormalQuotient::from_presentation(&p, 5), 5).unwrap().domain);
}

#[test]
fn decomposition_edge_cases() {
    let p = pres("qplane");
    let nq = NormalQuotient::from_presentation(&p, 4);
    let f = p.poly("x*y^2 + 3").unwrap();
    let d = decompose(&nq, &f).unwrap();
    assert!(d.quotients.is_empty());
    assert_eq!(d.remainder, f);
    let d = decompose(&nq, &p.relations[0]).unwrap();
    assert!(d.remainder.is_zero());
    assert!(decompose(&nq, &p.poly("x^5").unwrap()).is_err());
}

#[test]
fn lifted_order_is_the_homogeneous_order() {
    let q_lh = build_lh_quotient(&pres("ex8"), 4, None).unwrap();
    let o = lift_order(&q_lh);
    let words = q_lh.sorted_normal_words();
    for u in words.iter().take(20) {
        for v in words.iter().take(20) {
            assert_eq!(o.cmp_words(u, v), q_lh.order.cmp_words(u, v));
        }
    }
}

#[test]
fn monomial_relation_is_kept() {
    let p = pres("ex5_generic");
    let c = complete(&p.relations, &p.order, 6);
    assert!(!c.truncated);
    let lh = almost_skew_check(&p).unwrap().lh;
    let out = skew_2nomial_gb(&lh.relations, &lh.order).unwrap();
    assert!(out.contains(&SkewElement::Monomial(p.word("X3*X1").unwrap())));
    let c = classify(&lh.relations, &lh.order).unwrap();
    assert_eq!(c.omega, vec![p.word("X3*X1").unwrap()]);
    assert!(c.has(TypeTag::LeftType));
}
