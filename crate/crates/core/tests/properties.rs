use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;

use kronecker_qh::chow::{ChowClass, RANK};
use kronecker_qh::poly::{Monomial, MonomialOrder, MultiPoly};
use kronecker_qh::quantum::{QClass, QuantumRing};
use kronecker_qh::rational::{frac, Rational};
use kronecker_qh::unipoly::UniPoly;

fn ring() -> &'static QuantumRing {
    static RING: OnceLock<QuantumRing> = OnceLock::new();
    RING.get_or_init(|| QuantumRing::new().unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..=5, 0u32..=3, 0u32..=3, 0u32..=2).prop_map(|(a, b, c, d)| Monomial::new(a, b, c, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(MultiPoly::from_terms)
}

fn qclass() -> impl Strategy<Value = QClass> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), RANK).prop_map(|coords| {
        QClass::from_coords(coords.iter().map(|c| UniPoly::from_ints(c)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_is_idempotent(p in poly()) {
        let nf = ring().normal_form(&p);
        prop_assert_eq!(ring().normal_form(&nf), nf.clone());
        let gb = ring().presentation().groebner_basis();
        for (m, _) in nf.terms() {
            prop_assert!(gb.is_standard(m));
        }
    }

    #[test]
    fn normal_form_is_linear(a in poly(), b in poly(), x in rational(), y in rational()) {
        let lhs = ring().normal_form(&(&a.scale(&x) + &b.scale(&y)));
        let rhs = &ring().normal_form(&a).scale(&x) + &ring().normal_form(&b).scale(&y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_absorbs_generator_multiples(a in poly(), b in poly(), i in 0usize..5) {
        let g = &ring().presentation().relations()[i].cleared;
        prop_assert_eq!(ring().normal_form(&(&(&a * g) + &b)), ring().normal_form(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quantum_product_is_associative(x in qclass(), y in qclass(), z in qclass()) {
        let r = ring();
        prop_assert_eq!(r.qmul(&r.qmul(&x, &y), &z), r.qmul(&x, &r.qmul(&y, &z)));
        prop_assert_eq!(r.qmul(&x, &y), r.qmul(&y, &x));
    }

    #[test]
    fn monomial_order_is_total_and_multiplicative(a in monomial(), b in monomial(), c in monomial()) {
        let o = MonomialOrder::default();
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        if a.weighted_degree() != b.weighted_degree() {
            prop_assert_eq!(ab, a.weighted_degree().cmp(&b.weighted_degree()));
        }
        prop_assert!(o.cmp(&a, &Monomial::ONE) != Ordering::Less);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gw_is_symmetric(a in 0usize..RANK, b in 0usize..RANK, c in 0usize..RANK, n in 0u32..=2) {
        let r = ring();
        let (x, y, z) = (ChowClass::basis(a), ChowClass::basis(b), ChowClass::basis(c));
        let v = r.gw(&x, &y, &z, n).unwrap();
        for (p, q, s) in [(&x, &z, &y), (&y, &x, &z), (&y, &z, &x), (&z, &x, &y), (&z, &y, &x)] {
            prop_assert_eq!(r.gw(p, q, s, n).unwrap(), v.clone());
        }
    }
}

#[test]
fn quantum_unit_law() {
    let r = ring();
    for i in 0..RANK {
        assert_eq!(r.qmul(&QClass::basis(0), &QClass::basis(i)), QClass::basis(i));
    }
}
