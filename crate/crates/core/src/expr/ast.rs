use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    T,
    /// The operator symbol ∂t; only produced by the operator parser.
    Dt,
}

/// Parsed expression. Sums and products always have at least two children;
/// subtraction is a sum with a negated term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
    Neg(Box<Expr>),
    Var(Variable),
    Int(BigInt),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Int(BigInt::from(n))
    }

    pub fn mentions(&self, v: Variable) -> bool {
        match self {
            Expr::Var(w) => *w == v,
            Expr::Int(_) => false,
            Expr::Neg(e) | Expr::Power(e, _) => e.mentions(v),
            Expr::Quotient(a, b) => a.mentions(v) || b.mentions(v),
            Expr::Sum(es) | Expr::Product(es) => es.iter().any(|e| e.mentions(v)),
        }
    }

    /// A literal zero, possibly negated.
    pub(crate) fn is_literal_zero(&self) -> bool {
        match self {
            Expr::Int(n) => n.sign() == num_bigint::Sign::NoSign,
            Expr::Neg(e) => e.is_literal_zero(),
            _ => false,
        }
    }
}
