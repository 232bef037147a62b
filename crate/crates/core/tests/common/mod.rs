//! Strategies shared by the property suites.
#![allow(dead_code)]

use dgal_core::ore::OreOperator;
use dgal_core::rational::{ratio, Poly, Rat, RatFuncT, RatFuncXT};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn t_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn nonzero_t_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    t_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Elements of Q(t) with small numerator and denominator.
pub fn qt(max_deg: usize) -> impl Strategy<Value = RatFuncT> {
    (t_poly(max_deg), nonzero_t_poly(max_deg)).prop_map(|(n, d)| RatFuncT::new(n, d))
}

pub fn t_polynomial(max_deg: usize) -> impl Strategy<Value = RatFuncT> {
    t_poly(max_deg).prop_map(RatFuncT::from_poly)
}

pub fn x_poly(max_deg: usize, coeff_deg: usize) -> impl Strategy<Value = Poly<RatFuncT>> {
    vec(t_polynomial(coeff_deg), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

/// Elements of Q(t)(x) with small degrees in both variables.
pub fn qtx() -> impl Strategy<Value = RatFuncXT> {
    (x_poly(2, 1), x_poly(2, 1).prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFuncXT::new(n, d))
}

/// Pole locations in Q(t): constants, linear polynomials, `t^2`, `t + 1`.
pub fn location() -> impl Strategy<Value = RatFuncT> {
    prop_oneof![
        small_rat().prop_map(RatFuncT::from_rat),
        (small_rat(), small_rat()).prop_map(|(a, b)| RatFuncT::from_poly(Poly::from_coeffs(vec![a, b]))),
        Just(RatFuncT::t().mul(&RatFuncT::t())),
        Just(RatFuncT::t().add(&RatFuncT::one())),
        Just(RatFuncT::t()),
    ]
}

/// A denominator that splits over Q(t): up to `max_poles` distinct roots of
/// order up to `max_order`, over a numerator of degree up to `num_deg`.
pub fn split_function(max_poles: usize, max_order: u32, num_deg: usize) -> impl Strategy<Value = RatFuncXT> {
    (
        vec((location(), 1..=max_order), 1..=max_poles),
        x_poly(num_deg, 1).prop_filter("nonzero", |p| !p.is_zero()),
    )
        .prop_map(|(poles, num)| {
            let mut seen: Vec<RatFuncT> = Vec::new();
            let mut den = Poly::one();
            for (r, m) in poles {
                if !seen.contains(&r) {
                    den = den.mul(&Poly::linear_root(&r).pow(m));
                    seen.push(r);
                }
            }
            RatFuncXT::new(num, den)
        })
}

pub fn operator(max_order: usize, coeff_deg: usize) -> impl Strategy<Value = OreOperator> {
    vec(t_polynomial(coeff_deg), 1..=max_order + 1).prop_map(OreOperator::new)
}
