//! Partial fractions over split denominators, residues at finite poles and
//! at infinity, the residue/derivation commutation check, and integration
//! in x of residue-free functions.

mod hermite;
mod roots;
mod series;

use std::fmt;

pub use hermite::hermite_integrate;
pub(crate) use roots::linear_factors;

use crate::error::{Error, Result};
use crate::rational::cleared::{self, ZPoly, ZPoly2};
use crate::rational::{Poly, RatFuncT, RatFuncXT};
use series::div_trunc;

/// A place of the x-line over Q(t).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PoleSpec {
    Finite(RatFuncT),
    Infinity,
}

impl fmt::Display for PoleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleSpec::Finite(r) => write!(f, "x = {r}"),
            PoleSpec::Infinity => f.write_str("infinity"),
        }
    }
}

/// The principal part of `f` at one finite pole: `Σ coeffs[j-1] / (x - location)^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolePart {
    pub location: RatFuncT,
    /// Indexed by order minus one; the last entry is nonzero.
    pub coeffs: Vec<RatFuncT>,
}

impl PolePart {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn residue(&self) -> RatFuncT {
        self.coeffs[0].clone()
    }

    pub fn coeff(&self, order: usize) -> RatFuncT {
        order
            .checked_sub(1)
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_else(RatFuncT::zero)
    }
}

/// `polynomial + Σ_i Σ_j c_ij / (x - x_i)^j` with distinct `x_i` in Q(t).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractionForm {
    pub polynomial: Poly<RatFuncT>,
    /// Sorted by [`RatFuncT::canonical_cmp`] on the location.
    pub poles: Vec<PolePart>,
}

impl PartialFractionForm {
    /// Nonzero terms as `(pole index, order, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &RatFuncT)> {
        self.poles.iter().enumerate().flat_map(|(i, p)| {
            p.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j + 1, c))
        })
    }

    /// Recombines into a single reduced fraction.
    ///
    /// Over the common denominator `Π (x - x_i)^{m_i}` the numerator is
    /// coprime to every factor because each top coefficient is nonzero, so no
    /// gcd is needed.
    pub fn reassemble(&self) -> RatFuncXT {
        // Work in Z[t][x]: x - a/b becomes b x - a, and every coefficient
        // shares one denominator.
        let mut items: Vec<&RatFuncT> = self.polynomial.coeffs().iter().collect();
        for p in &self.poles {
            items.extend(&p.coeffs);
        }
        let (nums, delta) = cleared::clear_t(&items);
        let (poly_part, mut rest) = nums.split_at(self.polynomial.coeffs().len());
        let mut lins = Vec::new();
        let mut factors = Vec::new();
        for p in &self.poles {
            let (a, b) = cleared::clear_t(&[&p.location]);
            let lin: ZPoly2 = Poly::from_coeffs(vec![a[0].neg(), b.clone()]);
            factors.push(lin.pow(p.order() as u32));
            lins.push((lin, b));
        }
        // prefix[i] * suffix[i + 1] is the product of all factors but the i-th
        let mut prefix = vec![ZPoly2::one()];
        for f in &factors {
            prefix.push(prefix.last().unwrap().mul(f));
        }
        let mut suffix = vec![ZPoly2::one(); factors.len() + 1];
        for k in (0..factors.len()).rev() {
            suffix[k] = factors[k].mul(&suffix[k + 1]);
        }
        let den_x = prefix.last().unwrap().clone();
        let mut num = Poly::from_coeffs(poly_part.to_vec()).mul(&den_x);
        for (i, p) in self.poles.iter().enumerate() {
            let (c, tail) = rest.split_at(p.coeffs.len());
            rest = tail;
            let (lin, b) = &lins[i];
            // Σ_j c_j b^j ℓ^{m - j}
            let mut local = ZPoly2::zero();
            let mut b_pow = ZPoly::one();
            let mut twisted = Vec::with_capacity(c.len());
            for cj in c {
                b_pow = b_pow.mul(b);
                twisted.push(cj.mul(&b_pow));
            }
            for cj in twisted {
                local = local.mul(lin).add(&Poly::constant(cj));
            }
            num = num.add(&local.mul(&prefix[i]).mul(&suffix[i + 1]));
        }
        cleared::coprime_to_frac(&num, &den_x.scale(&delta))
    }

    pub fn zero() -> Self {
        PartialFractionForm {
            polynomial: Poly::zero(),
            poles: Vec::new(),
        }
    }

    pub fn one() -> Self {
        PartialFractionForm {
            polynomial: Poly::one(),
            poles: Vec::new(),
        }
    }

    fn normalized(mut self) -> Self {
        for p in &mut self.poles {
            while p.coeffs.last().is_some_and(RatFuncT::is_zero) {
                p.coeffs.pop();
            }
        }
        self.poles.retain(|p| !p.coeffs.is_empty());
        self
    }

    pub fn scale(&self, c: &RatFuncT) -> Self {
        PartialFractionForm {
            polynomial: self.polynomial.scale(c),
            poles: self
                .poles
                .iter()
                .map(|p| PolePart {
                    location: p.location.clone(),
                    coeffs: p.coeffs.iter().map(|a| a.mul(c)).collect(),
                })
                .collect(),
        }
        .normalized()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut poles = self.poles.clone();
        for q in &other.poles {
            match poles.iter_mut().find(|p| p.location == q.location) {
                Some(p) => {
                    if p.coeffs.len() < q.coeffs.len() {
                        p.coeffs.resize(q.coeffs.len(), RatFuncT::zero());
                    }
                    for (a, b) in p.coeffs.iter_mut().zip(&q.coeffs) {
                        *a = a.add(b);
                    }
                }
                None => poles.push(q.clone()),
            }
        }
        poles.sort_by(|a, b| a.location.canonical_cmp(&b.location));
        PartialFractionForm {
            polynomial: self.polynomial.add(&other.polynomial),
            poles,
        }
        .normalized()
    }

    /// ∂t term by term: `∂t(c/(x-r)^j) = c'/(x-r)^j + j c r'/(x-r)^{j+1}`.
    pub fn d_t(&self) -> Self {
        let poles = self
            .poles
            .iter()
            .map(|p| {
                let dr = p.location.d_t();
                let mut coeffs = vec![RatFuncT::zero(); p.order() + 1];
                for (k, c) in p.coeffs.iter().enumerate() {
                    coeffs[k] = coeffs[k].add(&c.d_t());
                    if !dr.is_zero() {
                        let j = RatFuncT::from_rat(crate::rational::rat(k as i64 + 1));
                        coeffs[k + 1] = coeffs[k + 1].add(&j.mul(c).mul(&dr));
                    }
                }
                PolePart {
                    location: p.location.clone(),
                    coeffs,
                }
            })
            .collect();
        PartialFractionForm {
            polynomial: self.polynomial.map_coeffs(RatFuncT::d_t),
            poles,
        }
        .normalized()
    }

    /// ∂x term by term: `∂x(c/(x-r)^j) = -j c/(x-r)^{j+1}`.
    pub fn d_x(&self) -> Self {
        let poles = self
            .poles
            .iter()
            .map(|p| {
                let mut coeffs = vec![RatFuncT::zero()];
                for (k, c) in p.coeffs.iter().enumerate() {
                    coeffs.push(c.scale(&crate::rational::rat(-(k as i64) - 1)));
                }
                PolePart {
                    location: p.location.clone(),
                    coeffs,
                }
            })
            .collect();
        PartialFractionForm {
            polynomial: self.polynomial.derivative(),
            poles,
        }
        .normalized()
    }

    fn principal_at(&self, a: &RatFuncT) -> &[RatFuncT] {
        self.poles
            .iter()
            .find(|p| &p.location == a)
            .map_or(&[], |p| p.coeffs.as_slice())
    }

    /// First `len` Taylor coefficients at `x = a` of everything except the
    /// principal part at `a`, in powers of `u = x - a`.
    fn regular_expansion(&self, a: &RatFuncT, len: usize) -> Vec<RatFuncT> {
        let mut out = vec![RatFuncT::zero(); len];
        for (m, c) in self.polynomial.taylor_shift(a).coeffs().iter().take(len).enumerate() {
            out[m] = c.clone();
        }
        for p in self.poles.iter().filter(|p| &p.location != a) {
            // 1/(u + d)^k = Σ_m C(k+m-1, m) (-1)^m d^{-k-m} u^m
            let dinv = a.sub(&p.location).inv().expect("distinct poles");
            let minus_dinv = dinv.neg();
            let mut dk = RatFuncT::one();
            for (k0, c) in p.coeffs.iter().enumerate() {
                let k = k0 as i64 + 1;
                dk = dk.mul(&dinv);
                if c.is_zero() {
                    continue;
                }
                let mut term = c.mul(&dk);
                for (m, slot) in out.iter_mut().enumerate() {
                    if m > 0 {
                        let ratio = crate::rational::ratio(k + m as i64 - 1, m as i64);
                        term = term.mul(&minus_dinv).scale(&ratio);
                    }
                    *slot = slot.add(&term);
                }
            }
        }
        out
    }

    /// Product, computed pole by pole from Laurent expansions so that no
    /// gcd in Q(t)[x] is taken.
    pub fn mul(&self, other: &Self) -> Self {
        let mut locations: Vec<&RatFuncT> = self.poles.iter().chain(&other.poles).map(|p| &p.location).collect();
        locations.sort_by(|a, b| a.canonical_cmp(b));
        locations.dedup();
        let mut poles = Vec::new();
        for a in locations {
            let (fp, gp) = (self.principal_at(a), other.principal_at(a));
            let fr = self.regular_expansion(a, gp.len());
            let gr = other.regular_expansion(a, fp.len());
            let mut coeffs = vec![RatFuncT::zero(); fp.len() + gp.len()];
            for (i, f) in fp.iter().enumerate() {
                for (k, g) in gp.iter().enumerate() {
                    coeffs[i + k + 1] = coeffs[i + k + 1].add(&f.mul(g));
                }
                // u^{-(i+1)} u^m lands on order i + 1 - m
                for (m, g) in gr.iter().enumerate().take(i + 1) {
                    coeffs[i - m] = coeffs[i - m].add(&f.mul(g));
                }
            }
            for (k, g) in gp.iter().enumerate() {
                for (m, f) in fr.iter().enumerate().take(k + 1) {
                    coeffs[k - m] = coeffs[k - m].add(&f.mul(g));
                }
            }
            poles.push(PolePart {
                location: a.clone(),
                coeffs,
            });
        }
        // only polynomial × principal part reaches the polynomial part
        let mut polynomial = self.polynomial.mul(&other.polynomial);
        for (poly, pf) in [(&self.polynomial, other), (&other.polynomial, self)] {
            if poly.is_zero() {
                continue;
            }
            for p in &pf.poles {
                let lin = Poly::linear_root(&p.location);
                let local = p
                    .coeffs
                    .iter()
                    .fold(Poly::zero(), |acc: Poly<RatFuncT>, c| acc.mul(&lin).add(&Poly::constant(c.clone())));
                let (q, _) = poly.mul(&local).div_rem(&lin.pow(p.order() as u32));
                polynomial = polynomial.add(&q);
            }
        }
        PartialFractionForm { polynomial, poles }.normalized()
    }

    /// Term-wise antiderivative in x with zero constant term. Fails on the
    /// first pole carrying a nonzero residue.
    pub fn integrate_x(&self) -> Result<Self> {
        let mut poles = Vec::new();
        for p in &self.poles {
            if !p.residue().is_zero() {
                return Err(Error::NonzeroResidue {
                    pole: PoleSpec::Finite(p.location.clone()).to_string(),
                    residue: p.residue().to_string(),
                });
            }
            let coeffs = (2..=p.order())
                .map(|j| p.coeff(j).scale(&crate::rational::ratio(-1, j as i64 - 1)))
                .collect();
            poles.push(PolePart {
                location: p.location.clone(),
                coeffs,
            });
        }
        Ok(PartialFractionForm {
            polynomial: hermite::antiderivative(&self.polynomial),
            poles,
        }
        .normalized())
    }

    pub fn residues(&self, at_infinity: RatFuncT) -> ResidueList {
        ResidueList {
            finite: self.poles.iter().map(|p| (p.location.clone(), p.residue())).collect(),
            infinity: at_infinity,
        }
    }

    pub fn residue_at(&self, location: &RatFuncT) -> RatFuncT {
        self.poles
            .iter()
            .find(|p| &p.location == location)
            .map_or_else(RatFuncT::zero, PolePart::residue)
    }
}

/// Residues of `f dx` at every finite pole, plus the one at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueList {
    pub finite: Vec<(RatFuncT, RatFuncT)>,
    pub infinity: RatFuncT,
}

impl ResidueList {
    /// The finite residues that are nonzero, in pole order.
    pub fn nonzero_finite(&self) -> Vec<RatFuncT> {
        self.finite.iter().filter(|(_, r)| !r.is_zero()).map(|(_, r)| r.clone()).collect()
    }

    pub fn sum_is_zero(&self) -> bool {
        self.finite
            .iter()
            .fold(self.infinity.clone(), |acc, (_, r)| acc.add(r))
            .is_zero()
    }
}

/// Splits `f` over the roots of its denominator in Q(t).
pub fn split_partial_fractions(f: &RatFuncXT) -> Result<PartialFractionForm> {
    let (polynomial, proper) = f.num().div_rem(f.den());
    let mut roots = linear_factors(f.den())?;
    roots.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let poles = roots
        .into_iter()
        .map(|(r, m)| PolePart {
            coeffs: laurent_principal_part(&proper, f.den(), &r, m),
            location: r,
        })
        .collect();
    Ok(PartialFractionForm { polynomial, poles })
}

/// Splits `f` when its poles are known to lie in `roots`; no root finding.
/// `None` if the denominator has a factor outside `roots`.
pub(crate) fn split_over_roots(f: &RatFuncXT, roots: &[RatFuncT]) -> Option<PartialFractionForm> {
    let (polynomial, proper) = f.num().div_rem(f.den());
    let mut rest = f.den().clone();
    let mut poles = Vec::new();
    for r in roots {
        let lin = Poly::linear_root(r);
        let mut m = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        if m > 0 {
            poles.push(PolePart {
                coeffs: laurent_principal_part(&proper, f.den(), r, m),
                location: r.clone(),
            });
        }
    }
    if rest.deg0() > 0 {
        return None;
    }
    poles.sort_by(|a, b| a.location.canonical_cmp(&b.location));
    Some(PartialFractionForm { polynomial, poles }.normalized())
}

/// Principal part at `x = r` of `p/d`, where `r` is a root of `d` of
/// multiplicity `m`: expand in `u = x - r`, `d = u^m e(u)` with `e(0) ≠ 0`.
fn laurent_principal_part(p: &Poly<RatFuncT>, d: &Poly<RatFuncT>, r: &RatFuncT, m: usize) -> Vec<RatFuncT> {
    let shifted_d = d.taylor_shift(r);
    let e = &shifted_d.coeffs()[m..];
    let shifted_p = p.taylor_shift(r);
    let series = div_trunc(shifted_p.coeffs(), e, m);
    let mut coeffs: Vec<RatFuncT> = (1..=m).map(|j| series.get(m - j).cloned().unwrap_or_else(RatFuncT::zero)).collect();
    coeffs.truncate(m);
    coeffs
}

/// Residue of `f dx` at infinity, read off the proper part directly:
/// `-[x^{n-1}] p` where `p/d` is the proper part with monic `d` of degree `n`.
/// No splitting is needed.
pub fn residue_at_infinity(f: &RatFuncXT) -> RatFuncT {
    let n = f.den().deg0();
    if n == 0 {
        return RatFuncT::zero();
    }
    let proper = f.num().rem(f.den());
    proper.coeff(n - 1).neg()
}

/// Residue of `f dx` at `pole`. Finite poles need `f` to split.
pub fn residue(f: &RatFuncXT, pole: &PoleSpec) -> Result<RatFuncT> {
    match pole {
        PoleSpec::Infinity => Ok(residue_at_infinity(f)),
        PoleSpec::Finite(r) => Ok(split_partial_fractions(f)?.residue_at(r)),
    }
}

pub fn residues(f: &RatFuncXT) -> Result<ResidueList> {
    Ok(split_partial_fractions(f)?.residues(residue_at_infinity(f)))
}

/// One row of a [`ChevalleyReport`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChevalleyEntry {
    pub pole: PoleSpec,
    /// The residue of `∂t f` at the pole.
    pub residue_of_derivative: RatFuncT,
    /// `∂t` of the residue of `f` at the pole.
    pub derivative_of_residue: RatFuncT,
    pub holds: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChevalleyReport {
    pub entries: Vec<ChevalleyEntry>,
}

impl ChevalleyReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// Checks `res_P(∂t f) = ∂t res_P(f)` at every pole of `f` and of `∂t f`,
/// splitting both functions independently.
pub fn chevalley_check(f: &RatFuncXT) -> Result<ChevalleyReport> {
    // ∂t f is taken termwise on the split form and, for the residue at
    // infinity, as the unreduced pair `(∂t n d - n ∂t d) / d^2`; reducing it
    // would need a gcd over Q(t)[x]
    let pf = split_partial_fractions(f)?;
    let pdf = pf.d_t();
    let dt = |p: &Poly<RatFuncT>| p.map_coeffs(RatFuncT::d_t);
    let (n, d) = (f.num(), f.den());
    let (dn, dd) = (dt(n).mul(d).sub(&n.mul(&dt(d))), d.mul(d));
    let mut locations: Vec<RatFuncT> = pf.poles.iter().map(|p| p.location.clone()).collect();
    for p in &pdf.poles {
        if !locations.contains(&p.location) {
            locations.push(p.location.clone());
        }
    }
    locations.sort_by(|a, b| a.canonical_cmp(b));
    let mut entries: Vec<ChevalleyEntry> = locations
        .into_iter()
        .map(|r| {
            let lhs = pdf.residue_at(&r);
            let rhs = pf.residue_at(&r).d_t();
            ChevalleyEntry {
                holds: lhs == rhs,
                pole: PoleSpec::Finite(r),
                residue_of_derivative: lhs,
                derivative_of_residue: rhs,
            }
        })
        .collect();
    let df_pole = !dn.is_zero() && dn.deg0() + 2 > dd.deg0();
    if has_pole_at_infinity(f) || df_pole {
        let lhs = infinity_of_pair(&dn, &dd);
        let rhs = residue_at_infinity(f).d_t();
        entries.push(ChevalleyEntry {
            holds: lhs == rhs,
            pole: PoleSpec::Infinity,
            residue_of_derivative: lhs,
            derivative_of_residue: rhs,
        });
    }
    Ok(ChevalleyReport { entries })
}

/// Residue at infinity of `num/den` dx, neither reduced nor monic.
fn infinity_of_pair(num: &Poly<RatFuncT>, den: &Poly<RatFuncT>) -> RatFuncT {
    let n = den.deg0();
    if n == 0 || num.is_zero() {
        return RatFuncT::zero();
    }
    let proper = num.rem(den);
    proper.coeff(n - 1).div(den.lc().expect("nonzero denominator")).expect("nonzero").neg()
}

/// `f dx` has a pole at infinity unless `f` vanishes there to order two.
fn has_pole_at_infinity(f: &RatFuncXT) -> bool {
    !f.is_zero() && f.num().deg0() + 2 > f.den().deg0()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_rational, parse_t};

    fn q(s: &str) -> RatFuncXT {
        parse_rational(s).unwrap()
    }

    fn tq(s: &str) -> RatFuncT {
        parse_t(s).unwrap()
    }

    #[test]
    fn product_and_d_x_match_fraction_arithmetic() {
        let cases = [
            ("x^2 + 1/(x-t)^2 - t/(x-1)", "3*x - 1/(x-t) + 2/(x+t)^3"),
            ("1/(x-t)", "1/(x-t)"),
            ("x^3 + t", "1/(x-t^2)^2 + x"),
            ("1/(x-1)", "(x-1)^2"),
        ];
        for (f, g) in cases {
            let (f, g) = (q(f), q(g));
            let (pf, pg) = (split_partial_fractions(&f).unwrap(), split_partial_fractions(&g).unwrap());
            assert_eq!(pf.mul(&pg).reassemble(), f.mul(&g), "{f} * {g}");
            assert_eq!(pf.d_x().reassemble(), f.d_x(), "d/dx {f}");
        }
    }

    #[test]
    fn split_examples() {
        let f = q("(2*x-t-1)/((x-t)*(x-1))");
        let pf = split_partial_fractions(&f).unwrap();
        assert!(pf.polynomial.is_zero());
        assert_eq!(pf.poles.len(), 2);
        for p in &pf.poles {
            assert_eq!(p.coeffs, vec![RatFuncT::one()]);
        }
        assert_eq!(pf.reassemble(), f);

        let pf = split_partial_fractions(&q("x^2")).unwrap();
        assert!(pf.poles.is_empty());
        assert_eq!(pf.reassemble(), q("x^2"));

        assert!(matches!(
            split_partial_fractions(&q("1/(x^2+1)")),
            Err(crate::Error::NonSplitDenominator { .. })
        ));
    }

    #[test]
    fn split_higher_orders() {
        let f = q("(x^4 + t)/((x-t)^3*(x-t^2)*(x+1/2))");
        let pf = split_partial_fractions(&f).unwrap();
        assert_eq!(pf.poles.iter().map(PolePart::order).collect::<Vec<_>>(), vec![1, 3, 1]);
        assert_eq!(pf.reassemble(), f);
    }

    #[test]
    fn form_arithmetic_matches_canonical() {
        let f = q("(x^2 + t)/((x-t)^2*(x-t^2)) + t*x");
        let h = q("1/(x+1) - t/(x-t)^3");
        let pf = split_partial_fractions(&f).unwrap();
        let ph = split_partial_fractions(&h).unwrap();
        assert_eq!(pf.d_t().reassemble(), f.d_t());
        assert_eq!(pf.add(&ph).reassemble(), f.add(&h));
        assert_eq!(pf.scale(&tq("t+3")).reassemble(), f.scale(&tq("t+3")));
        assert!(pf.add(&pf.scale(&tq("-1"))).reassemble().is_zero());
        let g = q("(x^2 + t)/((x-t)^2*(x-t^2)^2) + t*x");
        let pg = split_partial_fractions(&g.d_x()).unwrap();
        assert_eq!(pg.integrate_x().unwrap().reassemble(), g);
    }

    #[test]
    fn residue_examples() {
        let at_t = PoleSpec::Finite(RatFuncT::t());
        assert_eq!(residue(&q("1/(x-t)"), &at_t).unwrap(), RatFuncT::one());
        assert!(residue(&q("t^2/(x-t)^2"), &at_t).unwrap().is_zero());
        assert_eq!(residue(&q("1/(x-t)"), &PoleSpec::Infinity).unwrap(), RatFuncT::one().neg());
    }

    #[test]
    fn residue_theorem_on_example() {
        let list = residues(&q("(3*x^3 - t)/((x-t)^2*(x+t)*(x-1))")).unwrap();
        assert!(list.sum_is_zero());
    }

    #[test]
    fn chevalley_examples() {
        let report = chevalley_check(&q("(t^2+1)/(x-t)")).unwrap();
        assert!(report.all_hold());
        let at_t = report.entries.iter().find(|e| e.pole == PoleSpec::Finite(RatFuncT::t())).unwrap();
        assert_eq!(at_t.residue_of_derivative, tq("2*t"));

        let report = chevalley_check(&q("x^3 + t*x")).unwrap();
        assert!(report.entries.iter().all(|e| e.pole == PoleSpec::Infinity));
        assert!(report.all_hold());

        let f = q("1/(x-t^2)");
        let report = chevalley_check(&f).unwrap();
        assert!(report.all_hold());
        assert_eq!(f.d_t(), q("2*t/(x-t^2)^2"));
        assert!(residue(&f.d_t(), &PoleSpec::Finite(tq("t^2"))).unwrap().is_zero());
    }
}
