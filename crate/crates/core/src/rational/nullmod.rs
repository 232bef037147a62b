//! Nullspace over Q(t) by evaluation and reconstruction.
//!
//! The matrix is specialized at points `t = τ` modulo word-size primes and
//! row reduced there. Every entry of the reduced-echelon nullspace basis is a
//! rational function of `t`: images at enough points recover it modulo `p`
//! by rational function reconstruction, and images modulo several primes
//! recover its rational coefficients. The cost follows the size of the answer
//! rather than that of the intermediate minors. A candidate is returned only
//! after an exact check that each vector lies in the nullspace; since their
//! number is at least the true nullity, passing the check also proves the
//! basis complete.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cleared::ZPoly;
use super::modular::{inv_mod, primes, rational_reconstruction, trim};
use super::{Poly, Rat, RatFuncT};

/// Dense polynomial over F_p, low degree first, no trailing zeros.
type Fp = Vec<u64>;

/// Points tried per prime before giving up on reconstruction.
const MAX_POINTS: usize = 4096;
/// Extra points each reconstruction must predict.
const CHECKS: usize = 3;

fn eval(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (acc * x + a) % p)
}

fn add(a: &[u64], b: &[u64], p: u64) -> Fp {
    let neg: Fp = b.iter().map(|c| (p - c) % p).collect();
    sub(a, &neg, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, o) in out.iter_mut().enumerate() {
        let (x, y) = (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0));
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let f = r.last().unwrap() * inv % p;
        let shift = r.len() - b.len();
        q[shift] = f;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = (r[shift + k] + p - f * bk % p) % p;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    trim(&mut q);
    (q, r)
}

/// `n/d` with `d` monic, `2 deg n < K` and `2 deg d <= K` through the `K`
/// samples; `None` when no such fraction exists.
fn reconstruct(xs: &[u64], ys: &[u64], p: u64) -> Option<(Fp, Fp)> {
    let k = xs.len();
    // Newton interpolation, accumulating m = Π (t - x_i) alongside
    let mut u: Fp = Vec::new();
    let mut m: Fp = vec![1];
    for (&x, &y) in xs.iter().zip(ys) {
        let gap = (y + p - eval(&u, x, p)) % p;
        let scale = gap * inv_mod(eval(&m, x, p), p) % p;
        let mut term: Fp = m.iter().map(|c| c * scale % p).collect();
        trim(&mut term);
        u = add(&u, &term, p);
        m = mul(&m, &[(p - x) % p, 1], p);
    }
    let (mut r0, mut r1) = (m, u);
    let (mut s0, mut s1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() && 2 * (r1.len() - 1) >= k {
        let (q, r2) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r1.is_empty() {
        return Some((Vec::new(), vec![1]));
    }
    if 2 * (s1.len() - 1) > k || xs.iter().any(|&x| eval(&s1, x, p) == 0) {
        return None;
    }
    let inv = inv_mod(*s1.last().unwrap(), p);
    let monic = |v: &Fp| -> Fp { v.iter().map(|c| c * inv % p).collect() };
    Some((monic(&r1), monic(&s1)))
}

/// Pivot columns and the reduced rows over F_p.
fn rref(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(k) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(k, r);
        let inv = inv_mod(a[r][c], p);
        for e in a[r].iter_mut() {
            *e = *e * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (e, &v) in row.iter_mut().zip(&pivot_row).skip(c) {
                *e = (*e + p - f * v % p) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (pivots, a)
}

/// Generic rank profiles dominate specialized ones: higher rank first, then
/// earlier pivots.
fn better(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}

/// Deterministic, well-spread evaluation points.
fn point(i: usize, p: u64) -> u64 {
    let mut z = (i as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    (z ^ (z >> 31)) % p
}

/// For every free column, the entries of its basis vector at the pivot
/// columns, as fractions over F_p.
struct Image {
    pivots: Vec<usize>,
    entries: Vec<Vec<(Fp, Fp)>>,
}

fn image_mod(rows: &[Vec<Fp>], cols: usize, p: u64) -> Option<Image> {
    let mut pivots: Option<Vec<usize>> = None;
    let mut xs = Vec::new();
    // samples[sample][free][pivot]
    let mut samples: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut want = 4;
    let mut seen = std::collections::HashSet::new();
    let mut i = 0;
    while i < MAX_POINTS {
        while samples.len() < want + CHECKS && i < MAX_POINTS {
            let x = point(i, p);
            i += 1;
            if !seen.insert(x) {
                continue;
            }
            let at: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|c| eval(c, x, p)).collect()).collect();
            let (piv, red) = rref(at, cols, p);
            match &pivots {
                Some(best) if best == &piv => {}
                Some(best) if !better(&piv, best) => continue,
                _ => {
                    pivots = Some(piv.clone());
                    xs.clear();
                    samples.clear();
                }
            }
            let free = (0..cols).filter(|c| !piv.contains(c));
            let values = free.map(|f| red.iter().map(|row| (p - row[f]) % p).collect()).collect();
            xs.push(x);
            samples.push(values);
        }
        if samples.len() < want + CHECKS {
            return None;
        }
        let pivots = pivots.clone().unwrap();
        let free_count = cols - pivots.len();
        let fit = (0..free_count)
            .map(|f| {
                (0..pivots.len())
                    .map(|k| {
                        let ys: Vec<u64> = samples.iter().map(|s| s[f][k]).collect();
                        let (n, d) = reconstruct(&xs[..want], &ys[..want], p)?;
                        let predicts = xs[want..]
                            .iter()
                            .zip(&ys[want..])
                            .all(|(&x, &y)| eval(&n, x, p) == y * eval(&d, x, p) % p);
                        predicts.then_some((n, d))
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>();
        if let Some(entries) = fit {
            return Some(Image { pivots, entries });
        }
        want *= 2;
    }
    None
}

/// Coefficients of every reconstructed fraction, numerator then
/// denominator, flattened in a fixed order.
fn shape(img: &Image) -> Vec<(usize, usize)> {
    img.entries.iter().flatten().map(|(n, d)| (n.len(), d.len())).collect()
}

fn flatten(img: &Image) -> Vec<u64> {
    img.entries
        .iter()
        .flatten()
        .flat_map(|(n, d)| n.iter().chain(d).copied())
        .collect()
}

fn reduce_row(row: &[ZPoly], p: u64) -> Vec<Fp> {
    let pb = BigInt::from(p);
    row.iter()
        .map(|e| {
            let mut c: Fp = e.coeffs().iter().map(|a| a.mod_floor(&pb).to_u64().unwrap()).collect();
            trim(&mut c);
            c
        })
        .collect()
}

/// Rebuilds the basis from reconstructed coefficients.
fn assemble(pivots: &[usize], shape: &[(usize, usize)], coeffs: &[Rat], cols: usize) -> Vec<Vec<(Poly<Rat>, Poly<Rat>)>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut at = 0;
    let mut s = shape.iter();
    free.iter()
        .map(|&f| {
            let mut v = vec![(Poly::zero(), Poly::one()); cols];
            v[f] = (Poly::one(), Poly::one());
            for &pc in pivots {
                let &(ln, ld) = s.next().unwrap();
                let n = Poly::from_coeffs(coeffs[at..at + ln].to_vec());
                let d = Poly::from_coeffs(coeffs[at + ln..at + ln + ld].to_vec());
                at += ln + ld;
                v[pc] = (n, d);
            }
            v
        })
        .collect()
}

/// `Σ_j row_j v_j = 0` for every row, over a common denominator.
fn in_nullspace(rows: &[Vec<ZPoly>], v: &[(Poly<Rat>, Poly<Rat>)]) -> bool {
    let mut common = Poly::<Rat>::one();
    for (n, d) in v {
        if !n.is_zero() && !d.is_constant() {
            common = common.mul(&d.exquo(&common.gcd(d)));
        }
    }
    let w: Vec<Poly<Rat>> = v
        .iter()
        .map(|(n, d)| if n.is_zero() { Poly::zero() } else { n.mul(&common.exquo(d)) })
        .collect();
    rows.iter().all(|row| {
        row.iter()
            .zip(&w)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Poly::<Rat>::zero(), |acc, (a, b)| acc.add(&super::cleared::to_q(a).mul(b)))
            .is_zero()
    })
}

/// The reduced-echelon nullspace basis of the matrix with rows `rows`, one
/// vector per non-pivot column; `None` if the prime table runs out.
pub(super) fn nullspace(rows: &[Vec<ZPoly>], cols: usize) -> Option<Vec<Vec<RatFuncT>>> {
    let mut best: Option<(Vec<usize>, Vec<(usize, usize)>)> = None;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut last: Option<Vec<Rat>> = None;
    for &p in primes() {
        let reduced: Vec<Vec<Fp>> = rows.iter().map(|r| reduce_row(r, p)).collect();
        let Some(img) = image_mod(&reduced, cols, p) else {
            continue;
        };
        let key = (img.pivots.clone(), shape(&img));
        let values = flatten(&img);
        let pb = BigInt::from(p);
        match &best {
            Some((piv, sh)) if *piv == key.0 && *sh == key.1 => {
                let m_inv = BigInt::from(inv_mod((&modulus % &pb).to_u64().unwrap(), p));
                for (r, &c) in residues.iter_mut().zip(&values) {
                    let diff = (BigInt::from(c) - &*r).mod_floor(&pb);
                    *r += &modulus * ((diff * &m_inv) % &pb);
                }
                modulus *= &pb;
            }
            Some((piv, sh)) if better(piv, &key.0) || (*piv == key.0 && total(sh) > total(&key.1)) => {
                continue; // unlucky prime
            }
            _ => {
                best = Some(key);
                residues = values.into_iter().map(BigInt::from).collect();
                modulus = pb;
                last = None;
                continue;
            }
        }
        let cand: Option<Vec<Rat>> = residues.iter().map(|r| rational_reconstruction(r, &modulus)).collect();
        let Some(cand) = cand else {
            continue;
        };
        if last.as_ref() == Some(&cand) {
            let (piv, sh) = best.as_ref().unwrap();
            let basis = assemble(piv, sh, &cand, cols);
            if basis.iter().all(|v| in_nullspace(rows, v)) {
                return Some(
                    basis
                        .into_iter()
                        .map(|v| v.into_iter().map(|(n, d)| RatFuncT::new(n, d)).collect())
                        .collect(),
                );
            }
        }
        last = Some(cand);
    }
    None
}

fn total(shape: &[(usize, usize)]) -> usize {
    shape.iter().map(|(a, b)| a + b).sum()
}
