//! Integer bivariate polynomials Z[t][x] for gcd-free identity checks.
//!
//! A fraction in Q(t)(x) is turned into a pair of numerator and denominator
//! polynomials with integer coefficients, scaled by the same factor. Two such
//! pairs describe the same function iff their cross products agree, which is
//! decided by ring operations alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Poly, Rat, RatFuncT, RatFuncXT, Ring};

pub type ZPoly = Poly<BigInt>;
pub type ZPoly2 = Poly<ZPoly>;

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

/// Multiplies every member of `items` by one common element of Q(t) so that
/// all become polynomials in Z[t]. Returns the cleared numerators and the
/// common denominator `d`, so `items[i] = nums[i] / d`.
pub fn clear_t(items: &[&RatFuncT]) -> (Vec<ZPoly>, ZPoly) {
    let mut l = Poly::<Rat>::one();
    for c in items {
        if !c.den().is_constant() {
            let g = l.gcd(c.den());
            l = l.mul(&c.den().exquo(&g));
        }
    }
    let scaled: Vec<Poly<Rat>> = items.iter().map(|c| c.num().mul(&l.exquo(c.den()))).collect();
    let mut z = <BigInt as One>::one();
    for p in scaled.iter().chain(std::iter::once(&l)) {
        for q in p.coeffs() {
            z = z.lcm(q.denom());
        }
    }
    let to_z = |p: &Poly<Rat>| -> ZPoly {
        p.map_coeffs(|q| (q * Rat::from_integer(z.clone())).to_integer())
    };
    (scaled.iter().map(to_z).collect(), to_z(&l))
}

/// A Q(t)-multiple of `p` in Z[t][x].
pub fn clear_poly(p: &Poly<RatFuncT>) -> ZPoly2 {
    let items: Vec<&RatFuncT> = p.coeffs().iter().collect();
    Poly::from_coeffs(clear_t(&items).0)
}

/// `(n, d)` in Z[t][x] with `f = n/d`.
pub fn clear_frac(f: &RatFuncXT) -> (ZPoly2, ZPoly2) {
    let items: Vec<&RatFuncT> = f.num().coeffs().iter().chain(f.den().coeffs()).collect();
    let (mut all, _) = clear_t(&items);
    let den = all.split_off(f.num().coeffs().len());
    (Poly::from_coeffs(all), Poly::from_coeffs(den))
}

/// ∂t on Z[t][x].
pub fn d_t(p: &ZPoly2) -> ZPoly2 {
    p.map_coeffs(ZPoly::derivative)
}

/// ∂x on Z[t][x].
pub fn d_x(p: &ZPoly2) -> ZPoly2 {
    p.derivative()
}

pub fn constant(c: ZPoly) -> ZPoly2 {
    Poly::constant(c)
}

pub fn product<'a>(items: impl IntoIterator<Item = &'a ZPoly2>) -> ZPoly2 {
    items.into_iter().fold(Poly::one(), |acc, p| acc.mul(p))
}

/// `a/b == c/d` for nonzero `b`, `d`.
pub fn same_fraction(a: &ZPoly2, b: &ZPoly2, c: &ZPoly2, d: &ZPoly2) -> bool {
    a.mul(d) == c.mul(b)
}

/// Exact quotient in Z[t]; the division must leave no remainder.
pub fn exquo_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.lc().unwrap().clone();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let Some(da) = a.degree() else {
        return Poly::zero();
    };
    if da < db {
        debug_assert!(false, "inexact division in Z[t]");
        return Poly::zero();
    }
    let mut q = vec![<BigInt as Zero>::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &r[k + db];
        if Zero::is_zero(c) {
            continue;
        }
        let (qk, rem) = c.div_rem(&lb);
        debug_assert!(Zero::is_zero(&rem), "inexact division in Z[t]");
        for (j, bj) in b.coeffs().iter().enumerate() {
            if !Zero::is_zero(bj) {
                r[k + j] -= &qk * bj;
            }
        }
        q[k] = qk;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact division in Z[t]");
    Poly::from_coeffs(q)
}

pub fn to_q(p: &ZPoly) -> Poly<Rat> {
    p.map_coeffs(|c| Rat::from_integer(c.clone()))
}

pub fn to_qt(p: &ZPoly) -> RatFuncT {
    RatFuncT::from_poly(to_q(p))
}

/// The canonical element `n/d` of Q(t)(x) for `n, d` in Z[t][x] that are
/// already coprime as polynomials in x over Q(t).
pub fn coprime_to_frac(n: &ZPoly2, d: &ZPoly2) -> RatFuncXT {
    let lc = d.lc().expect("zero denominator");
    let den = d.map_coeffs(|c| RatFuncT::new(to_q(c), to_q(lc)));
    let num = n.map_coeffs(|c| RatFuncT::new(to_q(c), to_q(lc)));
    super::Frac::from_monic_coprime(num, den)
}
