mod common;

use common::{operator, qt, qtx};
use dgal_core::ore::{q_linear_basis, wronskian_annihilator, OreOperator};
use dgal_core::rational::RatFuncT;
use proptest::collection::vec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_application(l1 in operator(3, 2), l2 in operator(3, 2), u in qt(2)) {
        prop_assert_eq!(l1.mul(&l2).apply_t(&u), l1.apply_t(&l2.apply_t(&u)));
    }

    #[test]
    fn composition_on_x_functions(l1 in operator(2, 1), l2 in operator(2, 1), f in qtx()) {
        let composed = l1.mul(&l2).apply(&f);
        prop_assert_eq!(&composed, &l1.apply(&l2.apply(&f)));
        prop_assert!(l1.mul(&l2).apply_equals(&f, &composed));
    }

    #[test]
    fn orders_add(l1 in operator(4, 3), l2 in operator(4, 3)) {
        let prod = l1.mul(&l2);
        match (l1.order(), l2.order()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.order(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn associative(a in operator(2, 2), b in operator(2, 2), c in operator(2, 2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributive(a in operator(3, 2), b in operator(3, 2), c in operator(3, 2)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)));
    }

    #[test]
    fn commutation_rule(a in qt(3)) {
        // Dt a = a Dt + a'
        let lhs = OreOperator::dt().mul(&OreOperator::multiplication(a.clone()));
        let rhs = OreOperator::monomial(a.clone(), 1).add(&OreOperator::multiplication(a.d_t()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn right_division(l1 in operator(4, 3), l2 in operator(4, 3)) {
        prop_assume!(!l2.is_zero());
        let (q, r) = l1.right_divide(&l2).unwrap();
        prop_assert_eq!(q.mul(&l2).add(&r), l1);
        if let Some(k) = r.order() {
            prop_assert!(k < l2.order().unwrap());
        }
    }

    #[test]
    fn annihilator_kills_span(alphas in vec(qt(2), 0..4), coeffs in vec(-3i64..=3, 4)) {
        let c = wronskian_annihilator(&alphas);
        prop_assert!(c.verify());
        prop_assert_eq!(c.operator.order(), Some(q_linear_basis(&alphas).len()));
        let combo = alphas
            .iter()
            .zip(&coeffs)
            .fold(RatFuncT::zero(), |acc, (a, &k)| acc.add(&a.mul(&RatFuncT::from_rat(dgal_core::rational::rat(k)))));
        prop_assert!(c.operator.apply_t(&combo).is_zero());
    }
}

#[test]
fn division_by_zero_operator_is_an_error() {
    let err = OreOperator::dt().right_divide(&OreOperator::zero()).unwrap_err();
    assert_eq!(err.kind(), "DivisorZero");
}
