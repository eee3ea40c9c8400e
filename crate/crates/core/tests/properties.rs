//! Property tests for the algebraic invariants: field axioms on the scalar
//! tower, associativity of the straightened product, multiplicativity of
//! specialization, and the Leibniz rule of the coadjoint derivations.

use loopn::qca::{central_lift, derivation_lift, CentralName};
use loopn::rootcenter::specialize_tensor;
use loopn::scalar::{GenericQ, LaurentPoly, RatFunc, ScalarOps};
use loopn::suite::SmallRng;
use loopn::uqsl2::{EpsAlgebra, GenAlgebra};
use proptest::prelude::*;

fn laurent(seed: u64) -> LaurentPoly {
    let mut rng = SmallRng::new(seed);
    let mut p = LaurentPoly::zero();
    for _ in 0..=rng.below(3) {
        let e = rng.below(9) as i64 - 4;
        let c = rng.below(7) as i64 - 3;
        p = p.add(&LaurentPoly::monomial(e, loopn::scalar::Q::from_integer(c.into())));
    }
    p
}

fn ratfunc(seed: u64) -> RatFunc {
    let num = laurent(seed);
    let mut den = laurent(seed.wrapping_mul(0x9e3779b97f4a7c15));
    if den.is_zero() {
        den = LaurentPoly::one();
    }
    RatFunc::new(num, den)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in 1u64..5000, b in 1u64..5000, c in 1u64..5000) {
        let (f, g, h) = (ratfunc(a), ratfunc(b), ratfunc(c));
        // commutativity, associativity, distributivity
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        // inverses
        if !f.is_zero() {
            prop_assert!(f.mul(&f.inv().unwrap()).is_one());
        }
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn pbw_product_associative(a in 1u64..2000, b in 1u64..2000, c in 1u64..2000) {
        let alg = GenAlgebra::global();
        let mut ra = SmallRng::new(a);
        let mut rb = SmallRng::new(b.wrapping_mul(31));
        let mut rc = SmallRng::new(c.wrapping_mul(17));
        let (u, v, w) = (
            ra.pbw_element(2, 2),
            rb.pbw_element(2, 2),
            rc.pbw_element(2, 2),
        );
        prop_assert_eq!(
            alg.mul(&alg.mul(&u, &v), &w),
            alg.mul(&u, &alg.mul(&v, &w))
        );
    }

    #[test]
    fn specialization_multiplicative(a in 1u64..2000, b in 1u64..2000) {
        let alg = GenAlgebra::global();
        let eps = EpsAlgebra::for_l(3);
        let mut ra = SmallRng::new(a.wrapping_mul(97));
        let mut rb = SmallRng::new(b.wrapping_mul(13));
        let (u, v) = (ra.pbw_element(2, 2), rb.pbw_element(2, 2));
        let lhs = loopn::rootcenter::specialize_pbw(&eps, &alg.mul(&u, &v)).unwrap();
        let rhs = eps.mul(
            &loopn::rootcenter::specialize_pbw(&eps, &u).unwrap(),
            &loopn::rootcenter::specialize_pbw(&eps, &v).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_satisfies_leibniz(a in 1u64..800, b in 1u64..800) {
        let alg = GenAlgebra::global();
        let eps = EpsAlgebra::for_l(3);
        let mut ra = SmallRng::new(a.wrapping_mul(7919));
        let mut rb = SmallRng::new(b.wrapping_mul(104729));
        let u = alg.to_tensor1(&ra.pbw_element(2, 2));
        let w = alg.to_tensor1(&rb.pbw_element(2, 2));
        let x = central_lift(CentralName::X, 3, 0, 1);
        // D(u w) = D(u) w + u D(w), compared after specialization
        let lhs = derivation_lift(3, &x, &alg.tensor_mul(&u, &w));
        let rhs = alg.tensor_add(
            &alg.tensor_mul(&derivation_lift(3, &x, &u), &w),
            &alg.tensor_mul(&u, &derivation_lift(3, &x, &w)),
        );
        let diff = specialize_tensor(&eps, &alg.tensor_sub(&lhs, &rhs)).unwrap();
        prop_assert!(diff.is_zero(), "Leibniz residual: {}", diff);
    }

    #[test]
    fn counit_is_multiplicative(a in 1u64..2000, b in 1u64..2000) {
        use loopn::uqsl2::Hopf;
        let alg = GenAlgebra::global();
        let ops = GenericQ;
        let mut ra = SmallRng::new(a.wrapping_mul(3));
        let mut rb = SmallRng::new(b.wrapping_mul(5));
        let (u, v) = (ra.pbw_element(2, 2), rb.pbw_element(2, 2));
        let lhs = alg.counit(&alg.mul(&u, &v));
        let rhs = ops.mul(&alg.counit(&u), &alg.counit(&v));
        prop_assert_eq!(lhs, rhs);
    }
}
