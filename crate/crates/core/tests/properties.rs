//! Algebraic invariants over randomly generated inputs.

use braidrep_core::linalg::{embed, SparseMat};
use braidrep_core::scalars::{Field, Jet, Poly, RatFunc, Ring};
use braidrep_core::slnjets::rhat;
use braidrep_core::uqsl2::{braiding, braiding_inverse, Gen, Rep};
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        proptest::collection::vec(-9i64..10, 0..4),
        proptest::collection::vec(-9i64..10, 1..3),
    )
        .prop_filter_map("nonzero denominator", |(n, d)| {
            RatFunc::new(Poly::from_i64s(&n), Poly::from_i64s(&d)).ok()
        })
}

fn arb_matrix(dim: usize) -> impl Strategy<Value = SparseMat<RatFunc>> {
    proptest::collection::vec((0..dim, 0..dim, arb_ratfunc()), 0..8).prop_map(move |t| {
        let mut m = SparseMat::zeros(dim, dim);
        for (r, c, x) in t {
            m.set(r, c, x);
        }
        m
    })
}

fn arb_point() -> impl Strategy<Value = BigRational> {
    (2i64..40, 1i64..7).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_functions_form_a_field(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), RatFunc::zero());
        if let Some(inv) = a.inv() {
            prop_assert!(a.mul(&inv).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_ratfunc(), b in arb_ratfunc(), x in arb_point()) {
        if let (Ok(ea), Ok(eb), Ok(eab), Ok(esum)) = (a.eval(&x), b.eval(&x), a.mul(&b).eval(&x), a.add(&b).eval(&x)) {
            prop_assert_eq!(eab, &ea * &eb);
            prop_assert_eq!(esum, ea + eb);
        }
    }

    #[test]
    fn jet_exp_and_log_are_inverse(a in arb_ratfunc(), b in arb_ratfunc()) {
        let j = Jet::new(3, vec![RatFunc::zero(), a, b]);
        let e = j.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), j.clone());
        let inv = e.try_inv().unwrap();
        prop_assert_eq!(e.mul(&inv), Jet::constant(3, RatFunc::one()));
    }

    #[test]
    fn matrix_products_are_associative(a in arb_matrix(3), b in arb_matrix(3), c in arb_matrix(3)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.compose(&b).unwrap().transpose(), b.transpose().compose(&a.transpose()).unwrap());
    }

    #[test]
    fn kronecker_mixed_product(a in arb_matrix(2), b in arb_matrix(3), c in arb_matrix(2), d in arb_matrix(3)) {
        let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn braiding_is_invertible_and_natural(a in 0usize..4, b in 0usize..4) {
        let (x, y) = (Rep::irrep(a), Rep::irrep(b));
        let c = braiding(&x, &y);
        prop_assert!(c.compose(&braiding_inverse(&x, &y)).unwrap().is_identity());
        for g in Gen::ALL {
            prop_assert_eq!(
                c.compose(&x.coproduct_action(&y, g)).unwrap(),
                y.coproduct_action(&x, g).compose(&c).unwrap()
            );
        }
    }

    #[test]
    fn evaluated_sl_n_r_matrix_satisfies_braid_relation(n in 2usize..4, u in arb_point()) {
        let r = rhat(n).rhat.eval(&u).unwrap();
        let a = embed(&r, 1, n);
        let b = embed(&r, n, 1);
        let l = a.compose(&b).unwrap().compose(&a).unwrap();
        let rr = b.compose(&a).unwrap().compose(&b).unwrap();
        prop_assert_eq!(l, rr);
    }
}
