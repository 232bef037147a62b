//! The Ore ring Q(t)[∂t]: operators `Σ aᵢ ∂tⁱ` with the commutation rule
//! `∂t·a = a·∂t + ∂t(a)`, their action on Q(t)(x), right Euclidean division,
//! and wronskian annihilators of finite families in Q(t).

mod annihilator;

pub use annihilator::{q_linear_basis, wronskian_annihilator, AnnihilatorCertificate};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::cleared::{self, ZPoly, ZPoly2};
use crate::rational::{Poly, RatFuncT, RatFuncXT};

/// `Σ coeffs[i] ∂tⁱ`. Invariant: no trailing zero coefficients, so the zero
/// operator is the empty sequence and a nonzero operator has a nonzero
/// leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OreOperator {
    coeffs: Vec<RatFuncT>,
}

impl OreOperator {
    pub fn new(mut coeffs: Vec<RatFuncT>) -> Self {
        while coeffs.last().is_some_and(RatFuncT::is_zero) {
            coeffs.pop();
        }
        OreOperator { coeffs }
    }

    pub fn zero() -> Self {
        OreOperator { coeffs: Vec::new() }
    }

    /// The order-0 operator 1.
    pub fn identity() -> Self {
        Self::multiplication(RatFuncT::one())
    }

    /// ∂t.
    pub fn dt() -> Self {
        Self::monomial(RatFuncT::one(), 1)
    }

    /// Multiplication by `a` (order 0).
    pub fn multiplication(a: RatFuncT) -> Self {
        Self::new(vec![a])
    }

    /// `a ∂tᵏ`.
    pub fn monomial(a: RatFuncT, k: usize) -> Self {
        let mut coeffs = vec![RatFuncT::zero(); k];
        coeffs.push(a);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[RatFuncT] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFuncT {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFuncT::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&RatFuncT> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| *c == RatFuncT::one())
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale_left(&lc.inv().unwrap()),
        }
    }

    /// `c · self`.
    pub fn scale_left(&self, c: &RatFuncT) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul(a)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    /// `∂t · self`, from `∂t·(a ∂tʲ) = ∂t(a) ∂tʲ + a ∂tʲ⁺¹`.
    fn dt_times(&self) -> Self {
        let mut out = vec![RatFuncT::zero(); self.coeffs.len() + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            out[j] = out[j].add(&a.d_t());
            out[j + 1] = out[j + 1].add(a);
        }
        Self::new(out)
    }

    /// Ore product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        let mut power = other.clone(); // ∂tⁱ · other
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.dt_times();
            }
            if !a.is_zero() {
                acc = acc.add(&power.scale_left(a));
            }
        }
        acc
    }

    /// Right Euclidean division: `self = q · divisor + r`, `order(r) < order(divisor)`.
    pub fn right_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.order().ok_or(Error::DivisorZero)?;
        let inv_lc = divisor.leading_coeff().unwrap().inv().unwrap();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(k) = r.order() {
            if k < d {
                break;
            }
            let term = Self::monomial(r.leading_coeff().unwrap().mul(&inv_lc), k - d);
            r = r.sub(&term.mul(divisor));
            q = q.add(&term);
        }
        Ok((q, r))
    }

    /// `Σ aᵢ ∂tⁱ(f)` for `f` in Q(t)(x), in canonical form.
    ///
    /// Computed from [`OreOperator::apply_unreduced`]; the only x-factors that
    /// can cancel are the square-free factors of the denominator of `f`, so
    /// each is removed by a gcd against that small factor alone.
    pub fn apply(&self, f: &RatFuncXT) -> RatFuncXT {
        if self.is_zero() || f.is_zero() {
            return RatFuncXT::zero();
        }
        let (tower, num, den) = self.apply_with_tower(f);
        let mut num = from_z2(&num);
        let mut den = from_z2(&den);
        if num.is_zero() {
            return RatFuncXT::zero();
        }
        for (s, _) in &tower.factors {
            let mut cand = from_z2(s);
            loop {
                let g = num.rem(&cand).gcd(&cand);
                if g.deg0() == 0 {
                    break;
                }
                num = num.exquo(&g);
                den = den.exquo(&g);
                cand = g;
            }
        }
        crate::rational::Frac::from_coprime(num, den)
    }

    /// `L(f)` as an unreduced pair `(n, d)` over Z[t][x], computed without
    /// any gcd in Q(t)[x].
    ///
    /// Write `f = N / D` with `D = μ(t) Π sₖᵏ` from the square-free
    /// decomposition in x, and let `rad` be the product of the distinct
    /// square-free factors of `μ` and of the `sₖ`. Then `E = ∂t(D)·rad/D` is a
    /// polynomial and `∂tᵏ f = Nₖ / (D radᵏ)` with
    /// `Nₖ₊₁ = ∂t(Nₖ)·rad - Nₖ·(E + k ∂t rad)`.
    pub fn apply_unreduced(&self, f: &RatFuncXT) -> (ZPoly2, ZPoly2) {
        if self.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let (_, n, d) = self.apply_with_tower(f);
        (n, d)
    }

    fn apply_with_tower(&self, f: &RatFuncXT) -> (DerivativeTower, ZPoly2, ZPoly2) {
        let s = self.order().expect("nonzero operator");
        let tower = DerivativeTower::new(f, s);
        let items: Vec<&RatFuncT> = self.coeffs.iter().collect();
        let (alphas, delta) = cleared::clear_t(&items);
        let mut num = ZPoly2::zero();
        let mut rad_power = ZPoly2::one();
        for i in (0..=s).rev() {
            if !alphas[i].is_zero() {
                let term = tower.nums[i].mul(&rad_power).mul(&cleared::constant(alphas[i].clone()));
                num = num.add(&term);
            }
            if i > 0 {
                rad_power = rad_power.mul(&tower.rad);
            }
        }
        let den = tower.den.mul(&rad_power).mul(&cleared::constant(delta));
        (tower, num, den)
    }

    /// Decides `L(f) = rhs` exactly by cross-multiplication over Z[t][x].
    pub fn apply_equals(&self, f: &RatFuncXT, rhs: &RatFuncXT) -> bool {
        let (n, d) = self.apply_unreduced(f);
        let (rn, rd) = cleared::clear_frac(rhs);
        cleared::same_fraction(&n, &d, &rn, &rd)
    }

    /// `Σ aᵢ ∂tⁱ(u)` for `u` in Q(t).
    pub fn apply_t(&self, u: &RatFuncT) -> RatFuncT {
        let mut acc = RatFuncT::zero();
        let mut deriv = u.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                deriv = deriv.d_t();
            }
            acc = acc.add(&a.mul(&deriv));
        }
        acc
    }

    /// The coefficient sequence as a polynomial in a commuting placeholder.
    pub fn as_poly(&self) -> Poly<RatFuncT> {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

struct DerivativeTower {
    /// `nums[k]` is the numerator of `∂tᵏ f` over `den · radᵏ`.
    nums: Vec<ZPoly2>,
    den: ZPoly2,
    rad: ZPoly2,
    /// Square-free factors in x of the denominator, with multiplicity.
    factors: Vec<(ZPoly2, usize)>,
}

impl DerivativeTower {
    fn new(f: &RatFuncXT, order: usize) -> Self {
        // x-part: D_monic = Π Sₖᵏ, and Π sₖᵏ = ν·D_monic with sₖ in Z[t][x]
        let factors: Vec<(ZPoly2, usize)> = f
            .den()
            .squarefree_decomposition()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.deg0() > 0)
            .map(|(k, p)| (cleared::clear_poly(p), k + 1))
            .collect();
        let p_poly = factors.iter().fold(ZPoly2::one(), |acc, (s, k)| acc.mul(&s.pow(*k as u32)));
        let nu = cleared::to_qt(p_poly.lc().unwrap());
        let scaled: Vec<RatFuncT> = f.num().coeffs().iter().map(|c| c.mul(&nu)).collect();
        let (n0, mu) = cleared::clear_t(&scaled.iter().collect::<Vec<_>>());

        // t-part: μ = κ Π qᵢ^fᵢ
        let mu_factors: Vec<(ZPoly, usize)> = cleared::to_q(&mu)
            .squarefree_decomposition()
            .iter()
            .enumerate()
            .filter(|(_, q)| q.deg0() > 0)
            .map(|(i, q)| (cleared::clear_t(&[&RatFuncT::from_poly(q.clone())]).0.remove(0), i + 1))
            .collect();
        let r_mu = mu_factors.iter().fold(ZPoly::one(), |acc, (q, _)| acc.mul(q));
        let r_p = factors.iter().fold(ZPoly2::one(), |acc, (s, _)| acc.mul(s));
        let rad = r_p.mul(&cleared::constant(r_mu.clone()));

        // E = R_P Σ fᵢ qᵢ' Π_{j≠i} q_j + R_μ Σ k sₖ' Π_{j≠k} s_j
        let mut e_mu = ZPoly::zero();
        for (i, (q, fi)) in mu_factors.iter().enumerate() {
            let others = mu_factors
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(ZPoly::one(), |acc, (_, (qj, _))| acc.mul(qj));
            e_mu = e_mu.add(&q.derivative().mul(&others).scale(&BigInt::from(*fi)));
        }
        let mut e_p = ZPoly2::zero();
        for (i, (s, k)) in factors.iter().enumerate() {
            let others = factors
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(ZPoly2::one(), |acc, (_, (sj, _))| acc.mul(sj));
            e_p = e_p.add(&cleared::d_t(s).mul(&others).scale(&ZPoly::constant(BigInt::from(*k))));
        }
        let e = r_p
            .mul(&cleared::constant(e_mu))
            .add(&e_p.mul(&cleared::constant(r_mu)));
        let d_rad = cleared::d_t(&rad);

        let mut nums = vec![Poly::from_coeffs(n0)];
        for k in 0..order {
            let nk = &nums[k];
            let factor = e.add(&d_rad.scale(&ZPoly::constant(BigInt::from(k))));
            let next = cleared::d_t(nk).mul(&rad).sub(&nk.mul(&factor));
            nums.push(next);
        }
        DerivativeTower {
            nums,
            den: p_poly.mul(&cleared::constant(mu)),
            rad,
            factors,
        }
    }
}

fn from_z2(p: &ZPoly2) -> Poly<RatFuncT> {
    p.map_coeffs(cleared::to_qt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_operator, parse_rational, parse_t};

    fn op(s: &str) -> OreOperator {
        parse_operator(s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let f = parse_rational("1/(x-t)").unwrap();
        assert_eq!(OreOperator::dt().apply(&f), parse_rational("1/(x-t)^2").unwrap());
        assert_eq!(OreOperator::identity().apply(&f), f);
        let t2 = parse_rational("t^2").unwrap();
        assert!(op("Dt - 2/t").apply(&t2).is_zero());
    }

    /// Reference: repeated canonical ∂t and canonical sums.
    fn naive_apply(l: &OreOperator, f: &RatFuncXT) -> RatFuncXT {
        let mut acc = RatFuncXT::zero();
        let mut d = f.clone();
        for (i, a) in l.coeffs().iter().enumerate() {
            if i > 0 {
                d = d.d_t();
            }
            acc = acc.add(&d.scale(a));
        }
        acc
    }

    #[test]
    fn apply_matches_naive() {
        let fs = ["(t*x^2 + 1)/((x-t)^2*(x-t^2))", "x^3*t + 1/(t*x - 1)", "(x+t)/(x-t)^2 - 1/x", "t/(t^2+1)"];
        for fs in fs {
            let f = parse_rational(fs).unwrap();
            for s in ["Dt^2 - t*Dt + 1/(t+1)", "Dt", "t"] {
                let l = op(s);
                assert_eq!(l.apply(&f), naive_apply(&l, &f), "{s} on {fs}");
            }
        }
        let f = parse_rational("(x+t)/(x-t)^2").unwrap();
        let l = op("Dt^3 + Dt^1/t^2");
        assert_eq!(l.apply(&f), naive_apply(&l, &f));
        // cancellation
        let f = parse_rational("t/(x-t)").unwrap();
        assert_eq!(op("Dt - 1/t").apply(&f), parse_rational("t/(x-t)^2").unwrap());
    }

    #[test]
    fn unreduced_apply_agrees() {
        let f = parse_rational("(t*x^2 + 1)/((x-t)^2*(t*x+1)*(x-t^2)^3) + x/(t^2-1)").unwrap();
        for s in ["Dt^3 - t*Dt + 1/(t+1)", "Dt", "7", "(t^2+1)*Dt^2 - Dt^1/t"] {
            let l = op(s);
            assert!(l.apply_equals(&f, &l.apply(&f)), "{s}");
            assert!(!l.apply_equals(&f, &l.apply(&f).add(&RatFuncXT::x())), "{s}");
        }
        assert!(OreOperator::zero().apply_equals(&f, &RatFuncXT::zero()));
    }

    #[test]
    fn multiply_examples() {
        let t = OreOperator::multiplication(RatFuncT::t());
        assert_eq!(OreOperator::dt().mul(&t), op("t*Dt + 1"));
        let l = op("t*Dt^2 - 1/t");
        assert_eq!(l.mul(&OreOperator::identity()), l);
        let dt = OreOperator::dt();
        assert_eq!(dt.mul(&t).mul(&dt), dt.mul(&t.mul(&dt)));
        assert_eq!(dt.mul(&t).mul(&dt), op("t*Dt^2 + Dt"));
    }

    #[test]
    fn right_divide_examples() {
        let (q, r) = op("Dt^2").right_divide(&op("Dt")).unwrap();
        assert_eq!((q, r), (op("Dt"), OreOperator::zero()));

        let l2 = op("Dt - 2/t");
        let (q, r) = OreOperator::dt().right_divide(&l2).unwrap();
        assert_eq!(q, OreOperator::identity());
        assert_eq!(r, OreOperator::multiplication(parse_t("2/t").unwrap()));
        assert_eq!(q.mul(&l2).add(&r), OreOperator::dt());

        let l1 = op("t^2 + 1");
        let (q, r) = l1.right_divide(&OreOperator::dt()).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, l1);

        assert_eq!(l1.right_divide(&OreOperator::zero()), Err(Error::DivisorZero));
    }
}
