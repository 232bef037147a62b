use super::roots::linear_factors;
use crate::error::{Error, Result};
use crate::rational::{ratio, Frac, Poly, Rat, RatFuncT, RatFuncXT, Ring};

/// Antiderivative in x of a function whose residues all vanish, with the
/// integration constant fixed to zero.
///
/// Hermite reduction on the square-free decomposition `d = Π dᵢ^i` needs no
/// splitting: while some `V = dᵢ` has exponent `j > 1`, with `U` the rest of
/// the denominator, solve `s·U·V' + u·V = a / (1 - j)` and use
/// `a/(U V^j) = ∂x(s / V^{j-1}) + ((1-j) u - U s') / (U V^{j-1})`.
/// What is left has a square-free denominator and vanishes iff every
/// residue does.
pub fn hermite_integrate(f: &RatFuncXT) -> Result<RatFuncXT> {
    let (poly, mut a) = f.num().div_rem(f.den());
    let mut g = RatFuncXT::from_poly(antiderivative(&poly));
    if a.is_zero() {
        return Ok(g);
    }
    let factors = f.den().squarefree_decomposition();
    let mut exps: Vec<usize> = (1..=factors.len()).collect();
    for i in (1..factors.len()).rev() {
        let v = &factors[i];
        if v.deg0() == 0 {
            continue;
        }
        let dv = v.derivative();
        while exps[i] > 1 {
            let j = exps[i];
            let u_poly = factors
                .iter()
                .zip(&exps)
                .enumerate()
                .filter(|(k, _)| *k != i)
                .fold(Poly::one(), |acc, (_, (p, &e))| acc.mul(&p.pow(e as u32)));
            let scale = RatFuncT::from_rat(Rat::from_int(1 - j as i64)).inv().unwrap();
            let (s, u) = Poly::solve_bezout(&u_poly.mul(&dv), v, &a.scale(&scale));
            g = g.add(&RatFuncXT::new(s.clone(), v.pow(j as u32 - 1)));
            a = u
                .scale(&RatFuncT::from_rat(Rat::from_int(1 - j as i64)))
                .sub(&u_poly.mul(&s.derivative()));
            exps[i] = j - 1;
        }
    }
    if a.is_zero() {
        return Ok(g);
    }
    let star = factors.iter().fold(Poly::one(), |acc, p| acc.mul(p));
    let rest = Frac::new(a, star.clone());
    let dstar = star.derivative();
    for (r, _) in linear_factors(rest.den())? {
        let res = rest.num().eval(&r).div(&dstar.eval(&r)).unwrap();
        if !res.is_zero() {
            return Err(Error::NonzeroResidue {
                pole: format!("x = {r}"),
                residue: res.to_string(),
            });
        }
    }
    unreachable!("square-free remainder with all residues zero")
}

/// Term-wise antiderivative with zero constant term.
pub(crate) fn antiderivative(p: &Poly<RatFuncT>) -> Poly<RatFuncT> {
    let mut c = vec![RatFuncT::zero()];
    for (k, a) in p.coeffs().iter().enumerate() {
        c.push(a.scale(&ratio(1, k as i64 + 1)));
    }
    Poly::from_coeffs(c)
}
