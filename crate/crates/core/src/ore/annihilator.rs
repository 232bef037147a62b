use super::OreOperator;
use crate::rational::{Poly, QtMatrix, Rat, RatFuncT, Ring};

/// A monic operator killing every input, built from a Q-basis of their span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnnihilatorCertificate {
    pub inputs: Vec<RatFuncT>,
    pub basis: Vec<RatFuncT>,
    pub operator: OreOperator,
}

impl AnnihilatorCertificate {
    /// `operator` is monic of order `basis.len()` and kills all inputs.
    pub fn verify(&self) -> bool {
        self.operator.is_monic()
            && self.operator.order() == Some(self.basis.len())
            && self.inputs.iter().all(|a| self.operator.apply_t(a).is_zero())
    }
}

/// Greedy Q-basis of the Q-span of `alphas`, in input order.
///
/// Over a common denominator every input becomes a coefficient vector in Q^n;
/// an input joins the basis when it is not reduced to zero by the rows kept
/// so far.
pub fn q_linear_basis(alphas: &[RatFuncT]) -> Vec<RatFuncT> {
    let mut common = Poly::<Rat>::one();
    for a in alphas {
        let g = common.gcd(a.den());
        common = common.mul(&a.den().exquo(&g));
    }
    let vectors: Vec<Vec<Rat>> = alphas
        .iter()
        .map(|a| a.num().mul(&common.exquo(a.den())).into_coeffs())
        .collect();
    let width = vectors.iter().map(Vec::len).max().unwrap_or(0);
    // reduced rows with their pivot index
    let mut rows: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut basis = Vec::new();
    for (a, mut v) in alphas.iter().zip(vectors) {
        if a.is_zero() {
            continue;
        }
        v.resize(width, Rat::zero());
        for (p, row) in &rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (k, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        v[k] = v[k].minus(&f.times(r));
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            let inv = v[p].recip();
            let row = v.iter().map(|c| c.times(&inv)).collect();
            rows.push((p, row));
            basis.push(a.clone());
        }
    }
    basis
}

/// The monic normalization of `wr(Y, β₁, …, β_s)` for a Q-basis `β` of the
/// span of `alphas`.
///
/// The wronskian is expanded along its first column: the coefficient of
/// `∂tⁱY` is the signed minor with row `i` and column 0 removed.
pub fn wronskian_annihilator(alphas: &[RatFuncT]) -> AnnihilatorCertificate {
    let basis = q_linear_basis(alphas);
    let s = basis.len();
    // derivs[i][j] = ∂tⁱ βⱼ for i = 0..=s
    let mut derivs: Vec<Vec<RatFuncT>> = vec![basis.clone()];
    for i in 0..s {
        let next = derivs[i].iter().map(RatFuncT::d_t).collect();
        derivs.push(next);
    }
    let coeffs: Vec<RatFuncT> = (0..=s)
        .map(|i| {
            let minor: Vec<Vec<RatFuncT>> = (0..=s).filter(|&r| r != i).map(|r| derivs[r].clone()).collect();
            let det = if s == 0 {
                RatFuncT::one()
            } else {
                QtMatrix::from_rows(minor).unwrap().determinant()
            };
            if i % 2 == 0 {
                det
            } else {
                det.neg()
            }
        })
        .collect();
    let operator = OreOperator::new(coeffs).monic();
    debug_assert_eq!(operator.order(), Some(s));
    AnnihilatorCertificate {
        inputs: alphas.to_vec(),
        basis,
        operator,
    }
}
