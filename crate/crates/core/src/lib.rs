//! Exact differential algebra over the tower Q ⊂ Q(t) ⊂ Q(t)(x), with the
//! commuting derivations ∂x and ∂t.
//!
//! The crate produces three kinds of certificates, each re-checkable by
//! differentiation alone:
//!
//! * telescoping certificates `(L, g)` with `L(f) = ∂x g` ([`telescope`]),
//! * obstruction certificates `(L, h)` with `Σ αᵢ Rᵢ = ∂x h + A h`
//!   ([`obstruction`]),
//! * wronskian annihilators `R` with `R(αᵢ) = 0` ([`ore`]),
//!
//! plus a structural criterion for linear algebraic groups and Kolchin-dense
//! generator witnesses ([`group`]).

pub mod error;
pub mod expr;
pub mod group;
pub mod obstruction;
pub mod ore;
pub mod rational;
pub mod residue;
pub mod telescope;

pub use error::{Error, Result};
