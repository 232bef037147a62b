use num_bigint::BigInt;

use super::ast::{Expr, Variable};
use crate::error::{Error, Result};

/// Parses an expression in x and t.
pub fn parse_expr(text: &str) -> Result<Expr> {
    Parser::new(text, false).parse_all()
}

/// Parses with the additional symbol `Dt` enabled.
pub fn parse_operator_ast(text: &str) -> Result<Expr> {
    Parser::new(text, true).parse_all()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_dt: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, allow_dt: bool) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            allow_dt,
        }
    }

    fn error<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<Expr> {
        let e = self.expr()?;
        match self.peek() {
            None => Ok(e),
            Some(c) => self.error(self.pos, format!("unexpected `{}`", c as char)),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                terms.push(Expr::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.factor()?;
                acc = match acc {
                    Expr::Product(mut fs) => {
                        fs.push(rhs);
                        Expr::Product(fs)
                    }
                    other => Expr::Product(vec![other, rhs]),
                };
            } else if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let den_at = self.pos;
                let rhs = self.factor()?;
                if rhs.is_literal_zero() {
                    return Err(Error::DivisionByZeroLiteral { offset: den_at });
                }
                acc = Expr::Quotient(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        self.skip_ws();
        let base_at = self.pos;
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            if e < 0 && base.is_literal_zero() {
                return Err(Error::DivisionByZeroLiteral { offset: base_at });
            }
            return Ok(Expr::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat(b'-');
        self.skip_ws();
        let digits_at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.error(digits_at, "expected an integer exponent");
        }
        let magnitude: i64 = match digits.parse() {
            Ok(v) => v,
            Err(_) => return self.error(start, "exponent out of range"),
        };
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        // ASCII digits are valid UTF-8
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn base(&mut self) -> Result<Expr> {
        let at = self.pos;
        match self.peek() {
            None => self.error(at, "unexpected end of input"),
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::Var(Variable::X))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::Var(Variable::T))
            }
            Some(b'D') if self.allow_dt && self.src.get(self.pos + 1) == Some(&b't') => {
                self.pos += 2;
                Ok(Expr::Var(Variable::Dt))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                Ok(Expr::Int(digits.parse::<BigInt>().expect("digit run")))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    let here = self.pos;
                    return self.error(here, "expected `)`");
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(c) => self.error(at, format!("unexpected `{}`", c as char)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(v: Variable) -> Expr {
        Expr::Var(v)
    }

    #[test]
    fn simple_pole() {
        let e = parse_expr("1/(x-t)").unwrap();
        assert_eq!(
            e,
            Expr::Quotient(
                Box::new(Expr::int(1)),
                Box::new(Expr::Sum(vec![
                    var(Variable::X),
                    Expr::Neg(Box::new(var(Variable::T)))
                ]))
            )
        );
    }

    #[test]
    fn gamma_coefficient() {
        let e = parse_expr("(t-1-x)/x").unwrap();
        let Expr::Quotient(n, d) = e else {
            panic!("expected quotient")
        };
        assert_eq!(*d, var(Variable::X));
        assert_eq!(
            *n,
            Expr::Sum(vec![
                var(Variable::T),
                Expr::Neg(Box::new(Expr::int(1))),
                Expr::Neg(Box::new(var(Variable::X)))
            ])
        );
    }

    #[test]
    fn negative_exponent() {
        assert_eq!(
            parse_expr("x^-2").unwrap(),
            Expr::Power(Box::new(var(Variable::X)), -2)
        );
    }

    #[test]
    fn precedence_and_whitespace() {
        let a = parse_expr(" - x ^ 2 * t ").unwrap();
        let b = parse_expr("-x^2*t").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            b,
            Expr::Product(vec![
                Expr::Neg(Box::new(Expr::Power(Box::new(var(Variable::X)), 2))),
                var(Variable::T)
            ])
        );
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_expr("x + * t"),
            Err(Error::Syntax {
                offset: 4,
                message: "unexpected `*`".into()
            })
        );
        assert!(matches!(parse_expr("(x"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_expr("x y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr("Dt"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_expr("x^"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr("é"), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn literal_zero_denominators() {
        assert_eq!(
            parse_expr("1/0"),
            Err(Error::DivisionByZeroLiteral { offset: 2 })
        );
        assert_eq!(
            parse_expr("x / (0)"),
            Err(Error::DivisionByZeroLiteral { offset: 4 })
        );
        assert!(matches!(
            parse_expr("0^-1"),
            Err(Error::DivisionByZeroLiteral { offset: 0 })
        ));
        // not literal: left to canonicalization
        assert!(parse_expr("1/(x-x)").is_ok());
    }

    #[test]
    fn big_literals() {
        let e = parse_expr("123456789012345678901234567890").unwrap();
        assert_eq!(
            e,
            Expr::Int("123456789012345678901234567890".parse().unwrap())
        );
    }
}
