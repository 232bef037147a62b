//! Modular gcd in Q[t].
//!
//! Images of the gcd modulo word-size primes are combined by the Chinese
//! remainder theorem and lifted back to Q by rational reconstruction; the
//! candidate is accepted only after exact division checks. A gcd of degree
//! zero modulo one good prime already proves coprimality.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Poly, Rat};

pub(super) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < 256 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Integer multiple of `p` with no common denominator left.
fn to_integer(p: &Poly<Rat>) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut v);
    v
}

pub(super) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(super) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut e, mut base, mut r) = (p - 2, a % p, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Monic gcd over F_p.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let f = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (k, bk) in b.iter().enumerate() {
                a[shift + k] = (a[shift + k] + p - f * bk % p) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in &mut a {
            *c = *c * inv % p;
        }
    }
    a
}

/// `r/s ≡ u (mod m)` with `|r|, s ≤ sqrt(m/2)`.
pub(super) fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    Some(Rat::new(r1, s1))
}

/// Primes from the table that divide neither leading coefficient.
fn usable_primes<'a>(a: &'a [BigInt], b: &'a [BigInt]) -> impl Iterator<Item = u64> + 'a {
    primes().iter().copied().filter(move |&p| {
        let pb = BigInt::from(p);
        !a.last().unwrap().mod_floor(&pb).is_zero() && !b.last().unwrap().mod_floor(&pb).is_zero()
    })
}

/// True when some good prime shows `gcd(a, b) = 1`; `false` means unknown.
pub(crate) fn coprime_mod_p(a: &Poly<Rat>, b: &Poly<Rat>) -> bool {
    let (ia, ib) = (to_integer(a), to_integer(b));
    let first = usable_primes(&ia, &ib).next();
    first.is_some_and(|p| gcd_mod(reduce(&ia, p), reduce(&ib, p), p).len() == 1)
}

/// Monic gcd of two nonzero, non-constant polynomials.
pub(crate) fn modular_gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    let (ia, ib) = (to_integer(a), to_integer(b));
    let mut best_deg = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Poly<Rat>> = None;
    for p in usable_primes(&ia, &ib) {
        let g = gcd_mod(reduce(&ia, p), reduce(&ib, p), p);
        let deg = g.len() - 1;
        if deg == 0 {
            return Poly::one();
        }
        if deg > best_deg {
            continue; // unlucky prime
        }
        let pb = BigInt::from(p);
        if deg < best_deg {
            best_deg = deg;
            residues = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            last = None;
            continue;
        }
        // CRT: x ≡ residues (mod modulus), x ≡ g (mod p)
        let m_inv = BigInt::from(inv_mod((&modulus % &pb).to_u64().unwrap(), p));
        for (r, &c) in residues.iter_mut().zip(&g) {
            let diff = (BigInt::from(c) - &*r).mod_floor(&pb);
            *r += &modulus * ((diff * &m_inv) % &pb);
        }
        modulus *= &pb;
        let cand: Option<Vec<Rat>> = residues.iter().map(|r| rational_reconstruction(r, &modulus)).collect();
        let Some(cand) = cand.map(Poly::from_coeffs) else {
            continue;
        };
        if last.as_ref() == Some(&cand) && a.rem(&cand).is_zero() && b.rem(&cand).is_zero() {
            return cand;
        }
        last = Some(cand);
    }
    // prime table exhausted: fall back to the Euclidean algorithm
    a.euclid_gcd(b)
}
