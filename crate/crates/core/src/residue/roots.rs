//! Roots in Q(t) of polynomials with coefficients in Q(t).
//!
//! Square-free factors of degree one are solved directly. For a higher
//! degree factor `q(x, t)` (made primitive in Q[t][x]) a root `a/b` in lowest
//! terms has `a | q(0, t)` and `b | lc_x(q)`, which bounds its degrees. The
//! factor is specialized at a `t0` where it stays square-free, the rational
//! roots of the specialization are found p-adically, and each one is lifted
//! to a power series in `t - t0` and recovered by Padé approximation. Every
//! candidate is checked exactly, so a spurious rational root at `t0` is
//! simply discarded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::series::{div_trunc, mul_trunc};
use crate::error::{Error, Result};
use crate::rational::{primitive_part, rat, to_bivariate, Poly, Rat, RatFuncT, RatFuncXT};

/// All roots of `p` in Q(t) with multiplicities, provided `p` splits into
/// linear factors. Otherwise reports the part that does not split.
pub(crate) fn linear_factors(p: &Poly<RatFuncT>) -> Result<Vec<(RatFuncT, usize)>> {
    let mut out = Vec::new();
    for (i, s) in p.squarefree_decomposition().iter().enumerate() {
        if s.deg0() == 0 {
            continue;
        }
        let roots = squarefree_roots(s);
        if roots.len() < s.deg0() {
            let mut rest = s.clone();
            for r in &roots {
                rest = rest.exquo(&Poly::linear_root(r));
            }
            return Err(Error::NonSplitDenominator {
                factor: RatFuncXT::from_poly(rest).to_string(),
            });
        }
        out.extend(roots.into_iter().map(|r| (r, i + 1)));
    }
    Ok(out)
}

/// Distinct roots in Q(t) of a square-free polynomial.
pub(crate) fn squarefree_roots(s: &Poly<RatFuncT>) -> Vec<RatFuncT> {
    match s.deg0() {
        0 => Vec::new(),
        1 => vec![s.coeff(0).neg().div(&s.coeff(1)).unwrap()],
        _ if s.coeff(0).is_zero() => {
            let mut roots = vec![RatFuncT::zero()];
            roots.extend(squarefree_roots(&Poly::from_coeffs(s.coeffs()[1..].to_vec())));
            roots
        }
        _ => higher_degree_roots(s),
    }
}

fn higher_degree_roots(s: &Poly<RatFuncT>) -> Vec<RatFuncT> {
    let q = primitive_part(&to_bivariate(s));
    let num_bound = q.coeff(0).deg0();
    let den_bound = q.lc().unwrap().deg0();
    let precision = num_bound + den_bound + 1;

    let (t0, q0) = good_specialization(&q);
    let shifted: Poly<Poly<Rat>> = q.map_coeffs(|c| c.taylor_shift(&t0));
    let dq = shifted.derivative();

    let mut roots: Vec<RatFuncT> = Vec::new();
    for x0 in rational_roots(&q0) {
        let series = newton_lift(&shifted, &dq, x0, precision);
        let Some((a, b)) = pade(&series, num_bound, den_bound) else {
            continue;
        };
        let minus_t0 = -t0.clone();
        let cand = RatFuncT::new(a.taylor_shift(&minus_t0), b.taylor_shift(&minus_t0));
        if s.eval(&cand).is_zero() && !roots.contains(&cand) {
            roots.push(cand);
        }
    }
    roots
}

/// First `t0` in 0, 1, -1, 2, -2, ... keeping the x-degree and square-freeness.
fn good_specialization(q: &Poly<Poly<Rat>>) -> (Rat, Poly<Rat>) {
    let d = q.deg0();
    for k in 0i64.. {
        for t in [k, -k] {
            if k == 0 && t < 0 {
                continue;
            }
            let t0 = rat(t);
            let q0 = q.map_coeffs(|c| c.eval(&t0));
            if q0.deg0() == d && q0.gcd(&q0.derivative()).is_constant() {
                return (t0, q0);
            }
        }
    }
    unreachable!()
}

/// Power series root of `q(x, s)` through `x0` at `s = 0`, to `n` terms.
fn newton_lift(q: &Poly<Poly<Rat>>, dq: &Poly<Poly<Rat>>, x0: Rat, n: usize) -> Vec<Rat> {
    let mut r = vec![x0];
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        r.resize(prec, Rat::zero());
        let f = eval_series(q, &r, prec);
        let df = eval_series(dq, &r, prec);
        let step = div_trunc(&f, &df, prec);
        for (ri, si) in r.iter_mut().zip(step) {
            *ri -= si;
        }
    }
    r
}

fn eval_series(q: &Poly<Poly<Rat>>, r: &[Rat], n: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); n];
    for c in q.coeffs().iter().rev() {
        acc = mul_trunc(&acc, r, n);
        for (a, ci) in acc.iter_mut().zip(c.coeffs()) {
            *a += ci;
        }
    }
    acc
}

/// `a/b ≡ series (mod sⁿ)` with `deg a ≤ na`, `deg b ≤ nb`, `b(0) ≠ 0`.
fn pade(series: &[Rat], na: usize, nb: usize) -> Option<(Poly<Rat>, Poly<Rat>)> {
    let n = series.len();
    let mut r0 = Poly::monomial(Rat::one(), n);
    let mut r1 = Poly::from_coeffs(series.to_vec());
    let mut t0 = Poly::<Rat>::zero();
    let mut t1 = Poly::<Rat>::one();
    while !r1.is_zero() && r1.deg0() > na {
        let (quo, rem) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, rem);
        let next = t0.sub(&quo.mul(&t1));
        t0 = std::mem::replace(&mut t1, next);
    }
    if t1.deg0() > nb || t1.coeff(0).is_zero() {
        return None;
    }
    Some((r1, t1))
}

/// Rational roots of a square-free polynomial over Q.
///
/// With `y = c_d x` the integer polynomial becomes monic, so rational roots
/// are integer roots bounded by the Cauchy bound. Those are found as simple
/// roots modulo a small prime and Hensel-lifted past twice the bound.
pub(crate) fn rational_roots(p: &Poly<Rat>) -> Vec<Rat> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    if p.coeff(0).is_zero() {
        let mut out = vec![Rat::zero()];
        out.extend(rational_roots(&Poly::from_coeffs(p.coeffs()[1..].to_vec())));
        return out;
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let c: Vec<BigInt> = p.coeffs().iter().map(|q| (q * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let lead = c[d].clone();
    if d == 1 {
        return vec![Rat::new(-c[0].clone(), c[1].clone())];
    }
    // monic m(y) = lead^(d-1) p(y / lead)
    let mut m = vec![BigInt::zero(); d + 1];
    let mut power = BigInt::one();
    for k in (0..d).rev() {
        m[k] = &c[k] * &power;
        power *= &lead;
    }
    m[d] = BigInt::one();
    let bound = BigInt::one() + m.iter().map(|v| v.abs()).max().unwrap();

    let p = small_prime_for(&m);
    let pb = BigInt::from(p);
    let mut out = Vec::new();
    for y0 in roots_mod_p(&m, p) {
        let dm_inv = inv_mod(eval_mod(&derivative(&m), y0, p), p);
        let mut y = BigInt::from(y0);
        let mut modulus = pb.clone();
        while modulus <= &bound * 2 {
            // y + modulus * k with k = -(m(y)/modulus) / m'(y0) mod p
            let v = eval_big(&m, &y);
            let quotient = (v / &modulus).mod_floor(&pb).to_u64().unwrap();
            let k = (p - quotient % p) % p * dm_inv % p;
            y += &modulus * BigInt::from(k);
            modulus *= &pb;
        }
        y = y.mod_floor(&modulus);
        if &y * 2 > modulus {
            y -= &modulus;
        }
        if eval_big(&m, &y).is_zero() {
            out.push(Rat::new(y, lead.clone()));
        }
    }
    out
}

fn derivative(m: &[BigInt]) -> Vec<BigInt> {
    m.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

fn eval_big(m: &[BigInt], y: &BigInt) -> BigInt {
    m.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

fn reduce(m: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = m.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn eval_mod(m: &[BigInt], y: u64, p: u64) -> u64 {
    reduce(m, p).iter().rev().fold(0, |acc, c| (acc * y + c) % p)
}

fn roots_mod_p(m: &[BigInt], p: u64) -> Vec<u64> {
    let v = reduce(m, p);
    (0..p).filter(|&y| v.iter().rev().fold(0, |acc, c| (acc * y + c) % p) == 0).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Smallest odd prime modulo which the monic `m` stays square-free.
fn small_prime_for(m: &[BigInt]) -> u64 {
    (3u64..)
        .step_by(2)
        .filter(|&p| (3..).step_by(2).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .find(|&p| {
            let f = reduce(m, p);
            let df = reduce(&derivative(m), p);
            !df.is_empty() && gcd_mod(f, df, p).len() == 1
        })
        .unwrap()
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let f = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (k, bk) in b.iter().enumerate() {
                a[shift + k] = (a[shift + k] + p - f * bk % p) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}
