use super::{Field, PolyGcd, Ring};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial is the
/// empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The polynomial variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `X - r`.
    pub fn linear_root(r: &R) -> Self {
        Self::from_coeffs(vec![r.negate(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for bounds.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negate(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::negate).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Formal derivative in the polynomial variable.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&R::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// `P(X + r)`, by repeated synthetic division.
    pub fn taylor_shift(&self, r: &R) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].times(r);
                c[j] = c[j].plus(&t);
            }
        }
        Self::from_coeffs(c)
    }

    /// Truncation mod `X^k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(k).cloned().collect())
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let inv_lc = divisor.coeffs[dd].inverse();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].times(&inv_lc);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k - dd + j] = rem[k - dd + j].minus(&q.times(d));
                }
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Quotient of an exact division; debug builds assert the remainder is zero.
    pub fn exquo(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse()),
        }
    }

    /// Monic gcd by the plain Euclidean algorithm.
    pub fn euclid_gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Extended Euclid: returns `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let u = u0.sub(&q.mul(&u1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            u0 = std::mem::replace(&mut u1, u);
        }
        match r0.lc().cloned() {
            None => (r0, s0, u0),
            Some(lc) => {
                let inv = lc.inverse();
                (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
            }
        }
    }

    /// Solves `s*a + u*b = c` with `deg s < deg b`, assuming `gcd(a, b) = 1`.
    pub fn solve_bezout(a: &Self, b: &Self, c: &Self) -> (Self, Self) {
        let (g, s0, _) = a.ext_gcd(b);
        debug_assert!(g.is_constant() && !g.is_zero(), "bezout inputs not coprime");
        let s = s0.mul(c).rem(b);
        let u = c.sub(&s.mul(a)).exquo(b);
        (s, u)
    }
}

impl<F: PolyGcd> Poly<F> {
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        F::poly_gcd(self, other)
    }

    /// Yun's square-free decomposition of a nonzero polynomial: returns monic
    /// `s_1, s_2, ...` (possibly constant 1) with `self = lc * prod s_k^k`.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let f = self.monic();
        if f.deg0() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exquo(&a);
        let mut d = df.exquo(&a).sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let s = b.gcd(&d);
            b = b.exquo(&s);
            d = d.exquo(&s).sub(&b.derivative());
            out.push(s);
            if b.deg0() == 0 {
                break;
            }
        }
        while out.last().is_some_and(|s| s.deg0() == 0) {
            out.pop();
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        let f = self.monic();
        f.exquo(&f.gcd(&f.derivative()))
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(c.iter().map(|&k| rat(k)).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[1, 2, 3, 4, 5]);
        let b = p(&[-1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap() < 2);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = p(&[-3, 1]);
        let a = common.mul(&p(&[1, 1]));
        let b = common.mul(&p(&[5, 0, 1]));
        assert_eq!(a.gcd(&b), common);
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let a = p(&[2, -1, 0, 3]);
        let shifted = a.taylor_shift(&rat(2));
        for k in -3..4 {
            assert_eq!(shifted.eval(&rat(k)), a.eval(&rat(k + 2)));
        }
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let a = p(&[-1, 1]);
        let b = p(&[2, 1]);
        let c = p(&[1, 0, 1]);
        let f = a.mul(&b.pow(2)).mul(&c.pow(3)).scale(&rat(7));
        let sf = f.squarefree_decomposition();
        assert_eq!(sf, vec![a, b, c]);
    }

    #[test]
    fn bezout_solution() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 0, 1]);
        let c = p(&[5, 4, 3, 2]);
        let (s, u) = Poly::solve_bezout(&a, &b, &c);
        assert!(s.deg0() < 2);
        assert_eq!(s.mul(&a).add(&u.mul(&b)), c);
    }
}
