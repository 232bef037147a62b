//! Exact arithmetic on the tower Q ⊂ Q(t) ⊂ Q(t)(x).
//!
//! Everything is built from two generic pieces: dense univariate
//! polynomials [`Poly`] over a ring, and reduced fractions [`Frac`] of such
//! polynomials over a field. `Q(t)` is `Frac<Rat>` and `Q(t)(x)` is
//! `Frac<RatFuncT>`; the two derivations are the main-variable derivative
//! (`d_x` on the outer level, `d_t` on the inner one) and the coefficient-wise
//! lift of `d_t` to the outer level.

pub mod cleared;
mod frac;
mod matrix;
mod modular;
mod nullmod;
mod poly;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use frac::{Frac, RatFuncT, RatFuncXT};
pub(crate) use frac::{primitive_part, to_bivariate};
pub use matrix::QtMatrix;
pub use poly::Poly;

/// Elements of Q: arbitrary precision, always reduced with positive denominator.
pub type Rat = BigRational;

/// Minimal commutative ring interface used by [`Poly`].
///
/// Method names are deliberately distinct from `std::ops` so that types which
/// implement both never produce ambiguous calls.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A commutative field. `inverse` panics on zero; callers check first.
pub trait Field: Ring {
    fn inverse(&self) -> Self;

    fn over(&self, other: &Self) -> Self {
        self.times(&other.inverse())
    }
}

/// Fields whose univariate polynomial rings know how to compute a monic gcd.
///
/// The default is the plain monic Euclidean algorithm; `RatFuncT` overrides
/// it with a primitive remainder sequence over Q[t][x], which keeps the
/// coefficient growth in check.
pub trait PolyGcd: Field {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.euclid_gcd(b)
    }

    /// Cheap exact proof that `a` and `b` are coprime, when one is available.
    /// Returning `false` means "unknown", never "not coprime".
    fn certainly_coprime(_a: &Poly<Self>, _b: &Poly<Self>) -> bool {
        false
    }
}

impl Ring for Rat {
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
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for Rat {
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
}

impl PolyGcd for Rat {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        modular::modular_gcd(a, b)
    }

    fn certainly_coprime(a: &Poly<Self>, b: &Poly<Self>) -> bool {
        modular::coprime_mod_p(a, b)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p` or `p/q` (sign included).
pub(crate) fn fmt_rat(q: &Rat) -> String {
    if One::is_one(q.denom()) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when the term `q` has a negative sign to pull out in front.
pub(crate) fn rat_is_negative(q: &Rat) -> bool {
    q.is_negative()
}

/// Total order on coefficient sequences: length first, then entries from the
/// top degree down. Used only to make outputs deterministic.
pub(crate) fn cmp_rat_seq(a: &[Rat], b: &[Rat]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}
