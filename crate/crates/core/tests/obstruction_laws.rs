mod common;

use common::{location, qtx, small_rat, t_polynomial};
use dgal_core::obstruction::{
    build_system, r_sequence, rational_first_order_kernel, solve_obstruction, verify_obstruction,
    ObstructionOutcome, ObstructionProblem,
};
use dgal_core::rational::{cleared, Poly, RatFuncT, RatFuncXT};
use dgal_core::residue::split_partial_fractions;
use proptest::collection::vec;
use proptest::prelude::*;

/// `(A, B)` as the x- and t-log-derivatives of
/// `exp(s x + k/(x - r0)) · c · Π (x - r_i)^{e_i}`, which makes them
/// integrable by construction. Also returns the rational part `c Π ...`.
fn integrable_pair() -> impl Strategy<Value = (RatFuncXT, RatFuncXT, RatFuncXT, bool)> {
    (
        vec((location(), prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]), 1..=2),
        t_polynomial(2).prop_filter("nonzero", |c| !c.is_zero()),
        prop_oneof![Just(RatFuncT::zero()), t_polynomial(1)],
        prop_oneof![Just(None), (small_rat(), location()).prop_map(Some)],
    )
        .prop_map(|(factors, c, s, essential)| {
            let mut f = RatFuncXT::from_t(c);
            let mut seen = Vec::new();
            for (r, e) in factors {
                if !seen.contains(&r) {
                    f = f.mul(&RatFuncXT::from_poly(Poly::linear_root(&r)).pow(e).unwrap());
                    seen.push(r);
                }
            }
            // exponent g with ∂x w / w = ∂x g + ∂x f / f and likewise for t
            let mut g = RatFuncXT::x().mul(&RatFuncXT::from_t(s));
            if let Some((k, r0)) = &essential {
                if *k != dgal_core::rational::rat(0) {
                    let pole = RatFuncXT::from_poly(Poly::linear_root(r0));
                    g = g.add(&RatFuncXT::from_rat(k.clone()).mul(&pole.inv().unwrap()));
                }
            }
            let inv_f = f.inv().unwrap();
            let a = g.d_x().add(&f.d_x().mul(&inv_f));
            let b = g.d_t().add(&f.d_t().mul(&inv_f));
            (a, b, f, g.is_zero())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dimension_count((a, b, _, _) in integrable_pair()) {
        let prob = ObstructionProblem::new(a, b).unwrap();
        prop_assume!(prob.a.as_t().is_none());
        let sys = build_system(&prob).unwrap();
        let (n, p, m, big_n) = (sys.n, sys.p, sys.m, sys.big_n);
        prop_assert!(m > n * p && big_n > n * (m - 1));
        prop_assert_eq!(sys.rows(), p * (n + big_n) + 1);
        prop_assert_eq!(sys.cols(), m + big_n * p + 2);
        prop_assert!(sys.cols() >= sys.rows() + 2);
    }

    #[test]
    fn r_sequence_pole_orders((a, b, _, _) in integrable_pair()) {
        let prob = ObstructionProblem::new(a, b.clone()).unwrap();
        let rs = r_sequence(&b, 4);
        for (i, r) in rs.iter().enumerate() {
            let pf = split_partial_fractions(r).unwrap();
            prop_assert!(pf.polynomial.deg0() <= i * prob.n);
            for pole in &pf.poles {
                prop_assert!(prob.poles.contains(&pole.location));
                prop_assert!(pole.order() <= i * prob.n);
            }
        }
        // R_{i+1} d^2 b_d = (∂t n d - n ∂t d) b_d + b_n n d, by cross-multiplication
        let (bn, bd) = cleared::clear_frac(&b);
        for w in rs.windows(2) {
            let (n, d) = cleared::clear_frac(&w[0]);
            let rhs = cleared::d_t(&n)
                .mul(&d)
                .sub(&n.mul(&cleared::d_t(&d)))
                .mul(&bd)
                .add(&bn.mul(&n).mul(&d));
            let (next_n, next_d) = cleared::clear_frac(&w[1]);
            prop_assert!(cleared::same_fraction(&next_n, &next_d, &rhs, &d.mul(&d).mul(&bd)));
        }
    }

    #[test]
    fn certificates_verify((a, b, _, _) in integrable_pair()) {
        let prob = ObstructionProblem::new(a, b).unwrap();
        match solve_obstruction(&prob).unwrap() {
            ObstructionOutcome::Certificate(c) => {
                prop_assert!(!c.operator.is_zero());
                prop_assert!(verify_obstruction(&c));
            }
            ObstructionOutcome::Degenerate(d) => {
                prop_assert!(!d.h0.is_zero());
                prop_assert!(d.h0.d_x().add(&prob.a.mul(&d.h0)).is_zero());
            }
        }
    }

    #[test]
    fn first_order_kernel((a, _, f, rational) in integrable_pair()) {
        let h0 = rational_first_order_kernel(&a).unwrap();
        if rational {
            // 1/f solves ∂x h + A h = 0, so h0 must be a Q(t)-multiple of it
            let h0 = h0.expect("rational kernel exists");
            prop_assert!(h0.d_x().add(&a.mul(&h0)).is_zero());
            prop_assert!(h0.mul(&f).as_t().is_some());
        } else if let Some(h0) = h0 {
            prop_assert!(h0.d_x().add(&a.mul(&h0)).is_zero());
        }
    }

    #[test]
    fn integrability_is_necessary(a in qtx(), b in qtx()) {
        prop_assume!(a.d_t() != b.d_x());
        let err = ObstructionProblem::new(a, b).unwrap_err();
        prop_assert_eq!(err.kind(), "IntegrabilityViolation");
    }
}
