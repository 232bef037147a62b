//! Canonical text form.
//!
//! Polynomials print by descending degree. A coefficient is written bare
//! when it is a single monomial over Q (`3*t^2`, `-1/2`) and parenthesized
//! otherwise; signs are pulled out into the surrounding sum. Every string
//! produced here parses back to the identical canonical value.

use std::fmt;

use crate::ore::OreOperator;
use crate::rational::{fmt_rat, Poly, Rat, RatFuncT, RatFuncXT, Ring};
use num_traits::{One, Signed};

fn var_pow(var: &str, k: usize, always_exponent: bool) -> String {
    if k == 1 && !always_exponent {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

/// Joins signed terms into a sum; terms are `(negative, body)`.
fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn qt_poly_terms(p: &Poly<Rat>, var: &str) -> Vec<(bool, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| {
            let mag = c.abs();
            let body = if k == 0 {
                fmt_rat(&mag)
            } else if One::is_one(&mag) {
                var_pow(var, k, false)
            } else {
                format!("{}*{}", fmt_rat(&mag), var_pow(var, k, false))
            };
            (c.is_negative(), body)
        })
        .collect()
}

/// True when the value prints as a single monomial over Q, so it can
/// multiply a power without parentheses.
fn is_simple(c: &RatFuncT) -> bool {
    c.den().is_one() && c.num().term_count() <= 1
}

fn fmt_qt(c: &RatFuncT) -> String {
    let num = join_terms(qt_poly_terms(c.num(), "t"));
    if c.den().is_one() {
        return num;
    }
    let num = if c.num().term_count() > 1 { format!("({num})") } else { num };
    let den = join_terms(qt_poly_terms(c.den(), "t"));
    let den = if c.den().term_count() > 1 { format!("({den})") } else { den };
    format!("{num}/{den}")
}

/// Terms of `Σ c_k var^k` with coefficients in Q(t).
fn qtx_terms(coeffs: &[RatFuncT], var: &str, always_exponent: bool) -> Vec<(bool, String)> {
    coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            let power = (k > 0 || always_exponent).then(|| var_pow(var, k, always_exponent));
            let coeff = if is_simple(&mag) {
                fmt_qt(&mag)
            } else {
                format!("({})", fmt_qt(&mag))
            };
            let body = match power {
                None => coeff,
                Some(pw) if mag == RatFuncT::one() => pw,
                Some(pw) => format!("{coeff}*{pw}"),
            };
            (neg, body)
        })
        .collect()
}

impl fmt::Display for RatFuncT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_qt(self))
    }
}

impl fmt::Display for RatFuncXT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_terms = qtx_terms(self.num().coeffs(), "x", false);
        let num_multi = num_terms.len() > 1;
        let num = join_terms(num_terms);
        if self.is_polynomial() {
            return f.write_str(&num);
        }
        let den_terms = qtx_terms(self.den().coeffs(), "x", false);
        let den_multi = den_terms.len() > 1;
        let den = join_terms(den_terms);
        let num = if num_multi { format!("({num})") } else { num };
        let den = if den_multi { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Display for OreOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(qtx_terms(self.coeffs(), "Dt", true)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_operator, parse_rational, parse_t};
    use crate::ore::OreOperator;

    #[test]
    fn display_examples() {
        for (src, want) in [
            ("2/(x-t)", "2/(x - t)"),
            ("-1/(x-t)", "-1/(x - t)"),
            ("x^3/3", "1/3*x^3"),
            ("t^2/x^2", "t^2/x^2"),
            ("(t+1)*x/(x-1)", "(t + 1)*x/(x - 1)"),
            ("x - 1/t", "x - (1/t)"),
            ("-(t+1)/(x-2)", "-(t + 1)/(x - 2)"),
            ("x/(x^2 + 1)", "x/(x^2 + 1)"),
            ("(x+1)/(2*t*x+3)", "((1/2/t)*x + (1/2/t))/(x + (3/2/t))"),
            ("0", "0"),
        ] {
            let v = parse_rational(src).unwrap();
            assert_eq!(v.to_string(), want, "{src}");
            assert_eq!(parse_rational(want).unwrap(), v, "round trip {want}");
        }
        assert_eq!(parse_t("(t^2+1)/(2*t)").unwrap().to_string(), "(1/2*t^2 + 1/2)/t");
    }

    #[test]
    fn operator_display() {
        let op = parse_operator("t*Dt^2 + Dt - 3").unwrap();
        assert_eq!(op.to_string(), "t*Dt^2 + Dt^1 - 3*Dt^0");
        assert_eq!(parse_operator(&op.to_string()).unwrap(), op);
        assert_eq!(OreOperator::identity().to_string(), "Dt^0");
    }
}
