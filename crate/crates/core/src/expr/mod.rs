//! Textual frontend: a small recursive-descent parser for rational
//! expressions in `x` and `t`, conversion to canonical field elements, and
//! the deterministic text format every domain value is serialized in.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' int)?
//! base   := 'x' | 't' | int | '(' expr ')' | '-' factor
//! ```
//!
//! Operators use the same grammar with the extra symbol `Dt`, written as sums
//! of `c*Dt^k` terms.

mod ast;
mod format;
mod parser;

pub use ast::{Expr, Variable};
pub use parser::{parse_expr, parse_operator_ast};

use crate::error::{Error, Result};
use crate::ore::OreOperator;
use crate::rational::{Rat, RatFuncT, RatFuncXT};

/// Converts an AST to its canonical element of Q(t)(x).
pub fn to_canonical(ast: &Expr) -> Result<RatFuncXT> {
    eval(ast, false)
}

/// Parses and canonicalizes in one step.
pub fn parse_rational(text: &str) -> Result<RatFuncXT> {
    to_canonical(&parse_expr(text)?)
}

/// Parses an element of Q(t): the expression must not involve x.
pub fn parse_t(text: &str) -> Result<RatFuncT> {
    parse_rational(text)?
        .as_t()
        .ok_or_else(|| Error::InvalidInput(format!("`{text}` depends on x")))
}

/// Parses a rational constant.
pub fn parse_rat(text: &str) -> Result<Rat> {
    parse_t(text)?
        .as_constant()
        .ok_or_else(|| Error::InvalidInput(format!("`{text}` is not a rational constant")))
}

/// Parses an operator written as a sum of `c*Dt^k` terms.
///
/// Coefficients are written to the left of the `Dt` power, so reading `Dt`
/// as a commuting symbol recovers exactly the normal form `Σ c_k ∂t^k`.
pub fn parse_operator(text: &str) -> Result<OreOperator> {
    let ast = parse_operator_ast(text)?;
    if ast.mentions(Variable::X) {
        return Err(Error::InvalidInput(format!(
            "operator `{text}` mentions x; coefficients live in Q(t)"
        )));
    }
    let as_poly = eval(&ast, true)?;
    if !as_poly.is_polynomial() {
        return Err(Error::InvalidInput(format!(
            "operator `{text}` has Dt in a denominator"
        )));
    }
    Ok(OreOperator::new(as_poly.num().coeffs().to_vec()))
}

/// Canonical text of any domain value.
pub fn serialize<V: std::fmt::Display + ?Sized>(value: &V) -> String {
    value.to_string()
}

/// `dt_as_main`: evaluate `Dt` as the main variable (operator parsing).
fn eval(ast: &Expr, dt_as_main: bool) -> Result<RatFuncXT> {
    Ok(match ast {
        Expr::Int(n) => RatFuncXT::from_rat(Rat::from_integer(n.clone())),
        Expr::Var(Variable::X) => RatFuncXT::x(),
        Expr::Var(Variable::T) => RatFuncXT::t(),
        Expr::Var(Variable::Dt) => {
            if !dt_as_main {
                return Err(Error::InvalidInput("Dt outside an operator".into()));
            }
            RatFuncXT::x()
        }
        Expr::Neg(e) => eval(e, dt_as_main)?.neg(),
        Expr::Sum(terms) => {
            let mut acc = RatFuncXT::zero();
            for e in terms {
                acc = acc.add(&eval(e, dt_as_main)?);
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = RatFuncXT::one();
            for e in factors {
                acc = acc.mul(&eval(e, dt_as_main)?);
            }
            acc
        }
        Expr::Quotient(n, d) => {
            let d = eval(d, dt_as_main)?;
            eval(n, dt_as_main)?.div(&d).ok_or(Error::ZeroDenominator)?
        }
        Expr::Power(b, e) => eval(b, dt_as_main)?.pow(*e).ok_or(Error::ZeroDenominator)?,
    })
}
