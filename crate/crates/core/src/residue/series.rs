//! Truncated power series as plain coefficient vectors, lowest order first.

use crate::rational::Field;

pub(crate) fn mul_trunc<F: Field>(a: &[F], b: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].plus(&x.times(y));
            }
        }
    }
    out
}

/// Inverse modulo `sⁿ`; `a[0]` must be nonzero.
pub(crate) fn inv_trunc<F: Field>(a: &[F], n: usize) -> Vec<F> {
    let inv0 = a[0].inverse();
    let mut out: Vec<F> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            out.push(inv0.clone());
            continue;
        }
        let mut acc = F::zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() {
                acc = acc.plus(&a[j].times(&out[k - j]));
            }
        }
        out.push(acc.negate().times(&inv0));
    }
    out
}

/// `a / b` modulo `sⁿ`.
pub(crate) fn div_trunc<F: Field>(a: &[F], b: &[F], n: usize) -> Vec<F> {
    mul_trunc(a, &inv_trunc(b, n), n)
}
