use super::{Field, PolyGcd, Poly, Rat, Ring};

/// A reduced fraction of polynomials over a field.
///
/// Invariants: `gcd(num, den) = 1`, `den` is monic, zero is `0/1`. These make
/// the representation canonical, so derived equality decides equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Q(t).
pub type RatFuncT = Frac<Rat>;

/// Q(t)(x), with coefficients of the x-polynomials in Q(t).
pub type RatFuncXT = Frac<RatFuncT>;

impl<F: PolyGcd> Frac<F> {
    /// Builds and normalizes `num/den`. Panics on a zero denominator; fallible
    /// callers check with [`Frac::checked_new`].
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        Self::checked_new(num, den).expect("zero denominator")
    }

    pub fn checked_new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        if den.is_constant() || F::certainly_coprime(&num, &den) {
            return Some(Self::from_coprime(num, den));
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            Some(Self::from_coprime(num, den))
        } else {
            Some(Self::from_coprime(num.exquo(&g), den.exquo(&g)))
        }
    }

    /// Normalizes the leading coefficient of an already coprime pair.
    pub(crate) fn from_coprime(num: Poly<F>, den: Poly<F>) -> Self {
        let lc = den.lc().expect("zero denominator").clone();
        if lc.is_one() {
            Frac { num, den }
        } else {
            let inv = lc.inverse();
            Frac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Wraps a pair known to be coprime with monic denominator.
    pub(crate) fn from_monic_coprime(num: Poly<F>, den: Poly<F>) -> Self {
        debug_assert!(den.lc().is_some_and(Ring::is_one));
        Frac { num, den }
    }

    pub fn zero() -> Self {
        Frac {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Frac {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }

    /// The main variable.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when the fraction does not involve the main variable.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as an element of the coefficient field, if it is one.
    pub fn as_constant(&self) -> Option<F> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        // Henrici: only factors of gcd(b, d) can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_constant() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::from_coprime(num, self.den.mul(&other.den));
        }
        let b1 = self.den.exquo(&g);
        let d1 = other.den.exquo(&g);
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&d1);
        let h = num.gcd(&g);
        if h.is_constant() {
            Self::from_coprime(num, den)
        } else {
            Self::from_coprime(num.exquo(&h), den.exquo(&h))
        }
    }

    pub fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = if g1.is_constant() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.exquo(&g1), other.den.exquo(&g1))
        };
        let (c, b) = if g2.is_constant() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.exquo(&g2), self.den.exquo(&g2))
        };
        Self::from_coprime(a.mul(&c), b.mul(&d))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Frac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `None` when `self` is zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::from_coprime(self.den.clone(), self.num.clone()))
        }
    }

    /// `None` on division by zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs()).expect("exponent too large");
        Some(Frac {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Derivative in the main variable.
    ///
    /// With `g = gcd(d, d')` the quotient `(n' d/g - n d'/g) / (d d/g)` is
    /// already reduced in characteristic zero, so only one gcd is needed.
    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            let inv = self.den.coeff(0).inverse();
            return Self::from_poly(self.num.derivative().scale(&inv));
        }
        let dd = self.den.derivative();
        let g = self.den.gcd(&dd);
        let (d_red, dd_red) = if g.is_constant() {
            (self.den.clone(), dd)
        } else {
            (self.den.exquo(&g), dd.exquo(&g))
        };
        let num = self.num.derivative().mul(&d_red).sub(&self.num.mul(&dd_red));
        if num.is_zero() {
            return Self::zero();
        }
        Self::from_coprime(num, self.den.mul(&d_red))
    }

    /// Lifts a derivation of the coefficient field to the fraction field by
    /// acting on coefficients; the main variable is a constant for it.
    pub fn coefficient_derivation(&self, delta: impl Fn(&F) -> F) -> Self {
        let dn = self.num.map_coeffs(&delta);
        if self.is_polynomial() {
            // den is the constant 1
            return Self::from_poly(dn);
        }
        let dd = self.den.map_coeffs(&delta);
        if dd.is_zero() {
            return Self::new(dn, self.den.clone());
        }
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        Self::new(num, self.den.mul(&self.den))
    }
}

impl<F: PolyGcd> Ring for Frac<F> {
    fn zero() -> Self {
        Frac::zero()
    }
    fn one() -> Self {
        Frac::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
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
        Frac::constant(F::from_int(n))
    }
}

impl<F: PolyGcd> Field for Frac<F> {
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
}

impl RatFuncT {
    /// t as an element of Q(t).
    pub fn t() -> Self {
        Self::var()
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::constant(q)
    }

    /// ∂t.
    pub fn d_t(&self) -> Self {
        self.derivative()
    }

    /// `None` when the denominator vanishes at `t0`.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if Ring::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    /// Logarithmic derivative `∂t(u)/u`; `None` for `u = 0`.
    pub fn log_derivative(&self) -> Option<Self> {
        self.d_t().div(self)
    }

    /// Sort key for deterministic output: degree, then coefficients.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da = self.num.deg0().max(self.den.deg0());
        let db = other.num.deg0().max(other.den.deg0());
        da.cmp(&db)
            .then_with(|| super::cmp_rat_seq(self.num.coeffs(), other.num.coeffs()))
            .then_with(|| super::cmp_rat_seq(self.den.coeffs(), other.den.coeffs()))
    }

    /// Sign of the leading numerator coefficient; zero counts as positive.
    pub fn is_negative(&self) -> bool {
        self.num.lc().is_some_and(super::rat_is_negative)
    }
}

impl PolyGcd for RatFuncT {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let mut u = primitive_part(&to_bivariate(a));
        let mut v = primitive_part(&to_bivariate(b));
        if u.deg0() < v.deg0() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_zero() {
            let r = pseudo_rem(&u, &v);
            u = v;
            v = primitive_part(&r);
        }
        from_bivariate(&u).monic()
    }

    fn certainly_coprime(a: &Poly<Self>, b: &Poly<Self>) -> bool {
        // If the specializations at one t0 keep their degrees and are coprime,
        // the generic gcd is 1: its specialization would divide both.
        const PROBES: [i64; 2] = [7, -11];
        for &t in &PROBES {
            let t0 = Rat::from_int(t);
            let (Some(sa), Some(sb)) = (specialize(a, &t0), specialize(b, &t0)) else {
                continue;
            };
            if sa.degree() != a.degree() || sb.degree() != b.degree() {
                continue;
            }
            return sa.euclid_gcd(&sb).is_constant();
        }
        false
    }
}

/// Substitutes `t = t0` in every coefficient; `None` if some denominator vanishes.
pub(crate) fn specialize(p: &Poly<RatFuncT>, t0: &Rat) -> Option<Poly<Rat>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        out.push(c.eval(t0)?);
    }
    Some(Poly::from_coeffs(out))
}

/// Clears t-denominators: the result is a scalar multiple (in Q(t)) of `p`.
pub(crate) fn to_bivariate(p: &Poly<RatFuncT>) -> Poly<Poly<Rat>> {
    let mut l = Poly::<Rat>::one();
    for c in p.coeffs() {
        if !c.den.is_constant() {
            let g = l.gcd(&c.den);
            l = l.mul(&c.den.exquo(&g));
        }
    }
    p.map_coeffs(|c| c.num.mul(&l.exquo(&c.den)))
}

pub(crate) fn from_bivariate(p: &Poly<Poly<Rat>>) -> Poly<RatFuncT> {
    p.map_coeffs(|c| RatFuncT::from_poly(c.clone()))
}

pub(crate) fn primitive_part(p: &Poly<Poly<Rat>>) -> Poly<Poly<Rat>> {
    let mut content = Poly::<Rat>::zero();
    for c in p.coeffs() {
        content = content.gcd(c);
        if content.is_constant() {
            break;
        }
    }
    if content.is_zero() {
        return p.clone();
    }
    if content.is_constant() {
        // normalize the rational scale so that the leading t-coefficient is monic
        let s = p.lc().and_then(|c| c.lc()).cloned().unwrap_or_else(Rat::one);
        let inv = s.inverse();
        return p.map_coeffs(|c| c.scale(&inv));
    }
    let q = p.map_coeffs(|c| c.exquo(&content));
    let s = q.lc().and_then(|c| c.lc()).cloned().unwrap_or_else(Rat::one);
    let inv = s.inverse();
    q.map_coeffs(|c| c.scale(&inv))
}

/// `lc(b)^k * a mod b` over a coefficient ring without division.
fn pseudo_rem<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    let db = b.degree().expect("pseudo remainder by zero");
    let lb = b.lc().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.lc().unwrap().clone();
        r = r.scale(&lb).sub(&b.scale(&lr).shift_up(dr - db));
    }
    r
}

impl RatFuncXT {
    /// x as an element of Q(t)(x).
    pub fn x() -> Self {
        Self::var()
    }

    /// t as an element of Q(t)(x).
    pub fn t() -> Self {
        Self::constant(RatFuncT::t())
    }

    pub fn from_t(c: RatFuncT) -> Self {
        Self::constant(c)
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::constant(RatFuncT::from_rat(q))
    }

    /// ∂x: the main-variable derivative.
    pub fn d_x(&self) -> Self {
        self.derivative()
    }

    /// ∂t: the coefficient-wise derivation, x being a ∂t-constant.
    pub fn d_t(&self) -> Self {
        self.coefficient_derivation(RatFuncT::d_t)
    }

    /// The element of Q(t) this is, if it does not involve x.
    pub fn as_t(&self) -> Option<RatFuncT> {
        self.as_constant()
    }

    /// Exact evaluation at a rational point. Both sides are first cleared to
    /// polynomials in (x, t); a vanishing cleared denominator is a pole.
    pub fn eval_at(&self, x0: &Rat, t0: &Rat) -> Result<Rat, crate::Error> {
        let mut l = Poly::<Rat>::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            let g = l.gcd(c.den());
            l = l.mul(&c.den().exquo(&g));
        }
        let clear = |p: &Poly<RatFuncT>| -> Poly<Rat> {
            let q = p.map_coeffs(|c| c.num().mul(&l.exquo(c.den())).eval(t0));
            q
        };
        let d = clear(&self.den).eval(x0);
        if Ring::is_zero(&d) {
            return Err(crate::Error::PoleAtPoint {
                x: super::fmt_rat(x0),
                t: super::fmt_rat(t0),
            });
        }
        Ok(clear(&self.num).eval(x0) / d)
    }
}

impl From<RatFuncT> for RatFuncXT {
    fn from(c: RatFuncT) -> Self {
        Self::constant(c)
    }
}

impl From<Rat> for RatFuncT {
    fn from(q: Rat) -> Self {
        Self::constant(q)
    }
}

macro_rules! frac_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                Frac::add(self, rhs)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                Frac::sub(self, rhs)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                Frac::mul(self, rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                Frac::neg(self)
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                Frac::add(&self, &rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                Frac::sub(&self, &rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                Frac::mul(&self, &rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                Frac::neg(&self)
            }
        }
    };
}

frac_ops!(RatFuncT);
frac_ops!(RatFuncXT);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn tpoly(c: &[i64]) -> RatFuncT {
        RatFuncT::from_poly(Poly::from_coeffs(c.iter().map(|&k| rat(k)).collect()))
    }

    fn x_minus(c: RatFuncT) -> RatFuncXT {
        RatFuncXT::from_poly(Poly::linear_root(&c))
    }

    #[test]
    fn inverse_cancels() {
        let d = x_minus(RatFuncT::t());
        let f = d.inv().unwrap();
        assert_eq!(f.mul(&d), RatFuncXT::one());
        assert_eq!(f.add(&RatFuncXT::zero()), f);
    }

    #[test]
    fn power_of_quotient() {
        let f = RatFuncXT::t().div(&RatFuncXT::x()).unwrap();
        let sq = f.pow(2).unwrap();
        assert_eq!(sq.num(), &Poly::constant(tpoly(&[0, 0, 1])));
        assert_eq!(sq.den(), &Poly::monomial(RatFuncT::one(), 2));
    }

    #[test]
    fn derivations_on_simple_pole() {
        let f = x_minus(RatFuncT::t()).inv().unwrap();
        let sq = f.mul(&f);
        assert_eq!(f.d_x(), sq.neg());
        assert_eq!(f.d_t(), sq);
        let x5 = RatFuncXT::x().pow(5).unwrap();
        assert!(x5.d_t().is_zero());
        assert!(RatFuncXT::t().pow(3).unwrap().d_x().is_zero());
        assert_eq!(
            RatFuncXT::x().pow(2).unwrap().d_x(),
            RatFuncXT::x().scale(&RatFuncT::from_int(2))
        );
    }

    #[test]
    fn derivations_commute_on_example() {
        let f = RatFuncXT::t().div(&x_minus(RatFuncT::t())).unwrap();
        assert_eq!(f.d_x().d_t(), f.d_t().d_x());
    }

    #[test]
    fn log_derivative_cases() {
        let t2 = tpoly(&[0, 0, 1]);
        assert_eq!(
            t2.log_derivative().unwrap(),
            RatFuncT::from_int(2).div(&RatFuncT::t()).unwrap()
        );
        assert!(RatFuncT::one().log_derivative().unwrap().is_zero());
        assert!(RatFuncT::zero().log_derivative().is_none());
        let a = RatFuncT::t();
        let b = tpoly(&[1, 1]);
        assert_eq!(
            a.mul(&b).log_derivative().unwrap(),
            a.log_derivative().unwrap().add(&b.log_derivative().unwrap())
        );
    }

    #[test]
    fn eval_at_points() {
        let f = x_minus(RatFuncT::t()).inv().unwrap();
        assert_eq!(f.eval_at(&rat(2), &rat(1)).unwrap(), rat(1));
        let g = RatFuncXT::t().div(&RatFuncXT::x()).unwrap();
        assert_eq!(g.eval_at(&rat(3), &rat(6)).unwrap(), rat(2));
        let h = RatFuncXT::x().div(&x_minus(RatFuncT::t())).unwrap();
        assert!(matches!(
            h.eval_at(&rat(1), &rat(1)),
            Err(crate::Error::PoleAtPoint { .. })
        ));
    }

    #[test]
    fn gcd_over_qt_finds_moving_root() {
        let r = RatFuncT::t().div(&tpoly(&[1, 1])).unwrap();
        let common = Poly::linear_root(&r);
        let a = common.mul(&Poly::linear_root(&RatFuncT::from_rat(ratio(1, 2))));
        let b = common.mul(&Poly::linear_root(&tpoly(&[0, 0, 1])));
        assert_eq!(a.gcd(&b), common);
    }
}
