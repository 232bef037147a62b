//! Operators `L = Σ α_i ∂t^i` over Q(t) and rational `h` with
//! `Σ α_i R_i = ∂x h + A h`, where `R_0 = 1` and `R_{i+1} = ∂t R_i + B R_i`.
//!
//! `A` and `B` play the role of the x- and t-log-derivatives of one function,
//! so they satisfy `∂t A = ∂x B`. The unknowns are the `α_i` and the
//! coefficients `β` of an ansatz for `h` with bounded pole orders; comparing
//! partial fraction coefficients on both sides gives a homogeneous linear
//! system over Q(t) with more unknowns than equations.

use std::fmt;

use crate::error::{Error, Result};
use crate::ore::OreOperator;
use crate::rational::{Poly, QtMatrix, RatFuncT, RatFuncXT};
use num_bigint::BigInt;

use crate::rational::cleared::{self, ZPoly, ZPoly2};
use crate::residue::{linear_factors, split_over_roots, PartialFractionForm, PolePart};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionProblem {
    pub a: RatFuncXT,
    pub b: RatFuncXT,
    /// Finite poles of `A` and `B`, in canonical order. Infinity is implicit.
    pub poles: Vec<RatFuncT>,
    /// Bound on the pole order of `A` and `B` at every pole, infinity included.
    pub n: usize,
    /// `(M, N)`; `None` means [`default_bounds`].
    pub bounds: Option<(usize, usize)>,
}

impl ObstructionProblem {
    /// Collects the poles of `A` and `B` and the smallest valid `n`.
    /// Rejects pairs that violate `∂t A = ∂x B`.
    pub fn new(a: RatFuncXT, b: RatFuncXT) -> Result<Self> {
        let dt_a = a.d_t();
        let dx_b = b.d_x();
        if dt_a != dx_b {
            return Err(Error::IntegrabilityViolation {
                dt_a: dt_a.to_string(),
                dx_b: dx_b.to_string(),
            });
        }
        let mut poles: Vec<(RatFuncT, usize)> = Vec::new();
        for f in [&a, &b] {
            for (r, m) in linear_factors(f.den())? {
                match poles.iter_mut().find(|(s, _)| *s == r) {
                    Some(entry) => entry.1 = entry.1.max(m),
                    None => poles.push((r, m)),
                }
            }
        }
        poles.sort_by(|x, y| x.0.canonical_cmp(&y.0));
        let n = poles
            .iter()
            .map(|(_, m)| *m)
            .chain([order_at_infinity(&a), order_at_infinity(&b)])
            .max()
            .unwrap_or(0);
        Ok(ObstructionProblem {
            a,
            b,
            poles: poles.into_iter().map(|(r, _)| r).collect(),
            n,
            bounds: None,
        })
    }

    /// Replaces `n` by a larger bound.
    pub fn with_pole_order(mut self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidProblem(format!(
                "pole order bound {n} is below the actual order {}",
                self.n
            )));
        }
        self.n = n;
        Ok(self)
    }

    /// Overrides `(M, N)`; they must satisfy `M > n p` and `N > n (M - 1)`.
    pub fn with_bounds(mut self, m: usize, big_n: usize) -> Result<Self> {
        let (n, p) = (self.n.max(1), self.p());
        if m <= n * p {
            return Err(Error::InvalidProblem(format!("M = {m} must exceed n*p = {}", n * p)));
        }
        if big_n <= n * (m - 1) {
            return Err(Error::InvalidProblem(format!(
                "N = {big_n} must exceed n*(M-1) = {}",
                n * (m - 1)
            )));
        }
        self.bounds = Some((m, big_n));
        Ok(self)
    }

    /// Number of poles counting infinity.
    pub fn p(&self) -> usize {
        self.poles.len() + 1
    }

    pub fn effective_bounds(&self) -> (usize, usize) {
        self.bounds.unwrap_or_else(|| default_bounds(self.n.max(1), self.p()))
    }
}

/// Pole order at infinity: how far the numerator degree exceeds the
/// denominator degree.
fn order_at_infinity(f: &RatFuncXT) -> usize {
    f.num().deg0().saturating_sub(f.den().deg0())
}

/// The smallest `(M, N)` with `M > n p` and `N > n (M - 1)`.
pub fn default_bounds(n: usize, p: usize) -> (usize, usize) {
    let m = n * p + 1;
    (m, n * (m - 1) + 1)
}

/// `R_0, ..., R_M`.
pub fn r_sequence(b: &RatFuncXT, m: usize) -> Vec<RatFuncXT> {
    match crate::residue::split_partial_fractions(b) {
        Ok(pf) => r_sequence_pf(&pf, m).iter().map(PartialFractionForm::reassemble).collect(),
        Err(_) => {
            let mut out = vec![RatFuncXT::one()];
            for _ in 0..m {
                let last = out.last().unwrap();
                out.push(last.d_t().add(&b.mul(last)));
            }
            out
        }
    }
}

/// The same recursion kept in partial fractions, avoiding gcds in Q(t)[x].
fn r_sequence_pf(b: &PartialFractionForm, m: usize) -> Vec<PartialFractionForm> {
    let mut out = vec![PartialFractionForm::one()];
    for _ in 0..m {
        let last = out.last().unwrap();
        out.push(last.d_t().add(&b.mul(last)));
    }
    out
}

/// One unknown of the system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Unknown {
    /// `α_r`, the coefficient of `∂t^r` in `L`.
    Alpha(usize),
    /// `β_{p,k}`, the coefficient of `x^k` in `h`.
    BetaPoly(usize),
    /// `β_{i,j}`, the coefficient of `1/(x - x_i)^j` in `h`, `i` counted from 1.
    BetaPole(usize, usize),
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unknown::Alpha(r) => write!(f, "alpha_{r}"),
            Unknown::BetaPoly(k) => write!(f, "beta_p_{k}"),
            Unknown::BetaPole(i, j) => write!(f, "beta_{i}_{j}"),
        }
    }
}

/// One compared coefficient.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equation {
    /// Coefficient of `x^k`.
    Power(usize),
    /// Coefficient of `1/(x - x_i)^j`, `i` counted from 1.
    Pole(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionSystem {
    pub n: usize,
    pub p: usize,
    pub m: usize,
    pub big_n: usize,
    /// Columns follow `unknowns`, rows follow `equations`.
    pub matrix: QtMatrix,
    pub unknowns: Vec<Unknown>,
    pub equations: Vec<Equation>,
}

impl ObstructionSystem {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }
}

/// The basis function of `h` that the unknown multiplies.
fn h_basis(u: Unknown, poles: &[RatFuncT]) -> PartialFractionForm {
    match u {
        Unknown::Alpha(_) => unreachable!("alpha has no h basis element"),
        Unknown::BetaPoly(k) => PartialFractionForm {
            polynomial: Poly::monomial(RatFuncT::one(), k),
            poles: Vec::new(),
        },
        Unknown::BetaPole(i, j) => {
            let mut coeffs = vec![RatFuncT::zero(); j];
            coeffs[j - 1] = RatFuncT::one();
            PartialFractionForm {
                polynomial: Poly::zero(),
                poles: vec![PolePart {
                    location: poles[i - 1].clone(),
                    coeffs,
                }],
            }
        }
    }
}

/// Assembles the comparison `Σ α_i R_i - (∂x h + A h) = 0`.
pub fn build_system(prob: &ObstructionProblem) -> Result<ObstructionSystem> {
    if prob.a.as_t().is_some() {
        return Err(Error::InvalidProblem("A is free of x; no system is needed".into()));
    }
    let (n, p) = (prob.n, prob.p());
    let (m, big_n) = prob.effective_bounds();
    let top = n + big_n;

    let mut unknowns: Vec<Unknown> = (0..=m).map(Unknown::Alpha).collect();
    unknowns.extend((0..=big_n).map(Unknown::BetaPoly));
    for i in 1..p {
        unknowns.extend((1..=big_n).map(|j| Unknown::BetaPole(i, j)));
    }
    let mut equations: Vec<Equation> = (0..=top).map(Equation::Power).collect();
    for i in 1..p {
        equations.extend((1..=top).map(|j| Equation::Pole(i, j)));
    }

    let split = |f: &RatFuncXT, what: &str| {
        split_over_roots(f, &prob.poles).ok_or_else(|| Error::Internal(format!("{what} has a pole outside the pole set")))
    };
    let (a_pf, b_pf) = (split(&prob.a, "A")?, split(&prob.b, "B")?);
    let rs = r_sequence_pf(&b_pf, m);
    let mut matrix = QtMatrix::zeros(equations.len(), unknowns.len());
    for (col, &u) in unknowns.iter().enumerate() {
        let pf = match u {
            Unknown::Alpha(r) => rs[r].clone(),
            _ => {
                let e = h_basis(u, &prob.poles);
                e.d_x().add(&a_pf.mul(&e)).scale(&RatFuncT::one().neg())
            }
        };
        place_column(&mut matrix, col, &pf, &prob.poles, top, u)?;
    }
    Ok(ObstructionSystem {
        n,
        p,
        m,
        big_n,
        matrix,
        unknowns,
        equations,
    })
}

fn place_column(
    matrix: &mut QtMatrix,
    col: usize,
    pf: &PartialFractionForm,
    poles: &[RatFuncT],
    top: usize,
    u: Unknown,
) -> Result<()> {
    let overflow = || Error::Internal(format!("{u} exceeds the pole order bounds"));
    for (k, c) in pf.polynomial.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if k > top {
            return Err(overflow());
        }
        matrix.set(k, col, c.clone());
    }
    for (k, j, c) in pf.terms() {
        if j > top {
            return Err(overflow());
        }
        let i = poles
            .iter()
            .position(|r| *r == pf.poles[k].location)
            .expect("split_over_roots only reports listed poles");
        matrix.set(top + 1 + i * top + (j - 1), col, c.clone());
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionCertificate {
    pub a: RatFuncXT,
    pub b: RatFuncXT,
    pub operator: OreOperator,
    pub h: RatFuncXT,
    /// `None` when a closed form made the linear system unnecessary.
    pub system: Option<SystemShape>,
}

/// Dimensions of a solved system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SystemShape {
    pub n: usize,
    pub p: usize,
    pub m: usize,
    pub big_n: usize,
    pub rows: usize,
    pub cols: usize,
}

impl From<&ObstructionSystem> for SystemShape {
    fn from(s: &ObstructionSystem) -> Self {
        SystemShape {
            n: s.n,
            p: s.p,
            m: s.m,
            big_n: s.big_n,
            rows: s.rows(),
            cols: s.cols(),
        }
    }
}

/// Every solution of the system had `L = 0`: then `h₀ ≠ 0` with
/// `∂x h₀ + A h₀ = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenerateReport {
    pub a: RatFuncXT,
    pub b: RatFuncXT,
    pub h0: RatFuncXT,
    pub system: SystemShape,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ObstructionOutcome {
    Certificate(ObstructionCertificate),
    Degenerate(DegenerateReport),
}

/// Solves the problem. Among the nullspace solutions with some `α_r ≠ 0` the
/// one of least operator order is taken, normalized to a monic `L`.
pub fn solve_obstruction(prob: &ObstructionProblem) -> Result<ObstructionOutcome> {
    if let Some(a) = prob.a.as_t() {
        let (operator, h) = if a.is_zero() {
            (OreOperator::identity(), RatFuncXT::x())
        } else {
            (OreOperator::multiplication(a), RatFuncXT::one())
        };
        return Ok(ObstructionOutcome::Certificate(ObstructionCertificate {
            a: prob.a.clone(),
            b: prob.b.clone(),
            operator,
            h,
            system: None,
        }));
    }
    let system = build_system(prob)?;
    let shape = SystemShape::from(&system);
    // β columns first, so pivots go to β and the free α of least index gives
    // the solution of least order.
    let alpha_count = system.m + 1;
    let order: Vec<usize> = (alpha_count..system.cols()).chain(0..alpha_count).collect();
    let basis = system.matrix.permute_columns(&order).nullspace();
    let vector_of = |v: &[RatFuncT]| {
        let mut out = vec![RatFuncT::zero(); v.len()];
        for (k, &orig) in order.iter().enumerate() {
            out[orig] = v[k].clone();
        }
        out
    };
    let solutions: Vec<Vec<RatFuncT>> = basis.iter().map(|v| vector_of(v)).collect();
    let chosen = solutions
        .iter()
        .filter_map(|v| {
            let alphas = OreOperator::new(v[..alpha_count].to_vec());
            alphas.order().map(|k| (k, v))
        })
        .min_by_key(|(k, _)| *k);
    let assemble_h = |v: &[RatFuncT]| {
        system
            .unknowns
            .iter()
            .zip(v)
            .skip(alpha_count)
            .filter(|(_, c)| !c.is_zero())
            .fold(PartialFractionForm::zero(), |acc, (&u, c)| acc.add(&h_basis(u, &prob.poles).scale(c)))
            .reassemble()
    };
    match chosen {
        Some((_, v)) => {
            let operator = OreOperator::new(v[..alpha_count].to_vec());
            let lc = operator.leading_coeff().unwrap().inv().unwrap();
            let cert = ObstructionCertificate {
                a: prob.a.clone(),
                b: prob.b.clone(),
                operator: operator.scale_left(&lc),
                h: assemble_h(v).scale(&lc),
                system: Some(shape),
            };
            if !verify_obstruction(&cert) {
                return Err(Error::Internal("obstruction certificate failed its own check".into()));
            }
            Ok(ObstructionOutcome::Certificate(cert))
        }
        None => {
            let v = solutions
                .first()
                .ok_or_else(|| Error::Internal("the system has a trivial nullspace".into()))?;
            let h0 = assemble_h(v);
            if h0.is_zero() || !h0.d_x().add(&prob.a.mul(&h0)).is_zero() {
                return Err(Error::Internal("degenerate solution is not a kernel element".into()));
            }
            Ok(ObstructionOutcome::Degenerate(DegenerateReport {
                a: prob.a.clone(),
                b: prob.b.clone(),
                h0,
                system: shape,
            }))
        }
    }
}

/// A nonzero rational `h₀` with `∂x h₀ + A h₀ = 0`, if one exists. This
/// happens exactly when `A = -Σ m_i/(x - x_i)` with integers `m_i`.
pub fn rational_first_order_kernel(a: &RatFuncXT) -> Result<Option<RatFuncXT>> {
    let pf = crate::residue::split_partial_fractions(a)?;
    if !pf.polynomial.is_zero() {
        return Ok(None);
    }
    let mut h0 = RatFuncXT::one();
    for pole in &pf.poles {
        if pole.order() != 1 {
            return Ok(None);
        }
        let Some(m) = pole.residue().neg().as_constant() else {
            return Ok(None);
        };
        if !m.is_integer() {
            return Ok(None);
        }
        let Ok(e) = i64::try_from(m.to_integer()) else {
            return Ok(None);
        };
        let lin = RatFuncXT::from_poly(Poly::linear_root(&pole.location));
        h0 = h0.mul(&lin.pow(e).expect("nonzero base"));
    }
    Ok(Some(h0))
}

/// Recomputes `Σ α_i R_i` and `∂x h + A h` from `A`, `B`, `L`, `h` alone.
///
/// Works on unreduced fractions in Z[t][x]: with `B = b/d`, `R_i = N_i/d^i`
/// where `N_{i+1} = ∂t N_i d - i N_i ∂t d + b N_i`.
pub fn verify_obstruction(c: &ObstructionCertificate) -> bool {
    let Some(order) = c.operator.order() else {
        return false;
    };
    let (bn, bd) = cleared::clear_frac(&c.b);
    let dt_bd = cleared::d_t(&bd);
    let mut ns = vec![ZPoly2::one()];
    for i in 0..order {
        let last = ns.last().unwrap();
        let i_z = cleared::constant(ZPoly::constant(BigInt::from(i)));
        let next = cleared::d_t(last)
            .mul(&bd)
            .sub(&i_z.mul(last).mul(&dt_bd))
            .add(&bn.mul(last));
        ns.push(next);
    }
    let coeffs: Vec<&RatFuncT> = c.operator.coeffs().iter().collect();
    let (alphas, delta) = cleared::clear_t(&coeffs);
    let mut lhs = ZPoly2::zero();
    let mut bd_pow = ZPoly2::one();
    for i in (0..=order).rev() {
        if let Some(a) = alphas.get(i) {
            if !a.is_zero() {
                lhs = lhs.add(&ns[i].mul(&bd_pow).scale(a));
            }
        }
        bd_pow = bd_pow.mul(&bd);
    }
    let lhs_den = bd.pow(order as u32).scale(&delta);
    let (hn, hd) = cleared::clear_frac(&c.h);
    let (an, ad) = cleared::clear_frac(&c.a);
    let rhs = cleared::d_x(&hn)
        .mul(&hd)
        .sub(&hn.mul(&cleared::d_x(&hd)))
        .mul(&ad)
        .add(&an.mul(&hn).mul(&hd));
    let rhs_den = hd.mul(&hd).mul(&ad);
    cleared::same_fraction(&lhs, &lhs_den, &rhs, &rhs_den)
}
