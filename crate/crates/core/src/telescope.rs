//! Telescopers for rational functions of x over Q(t): a nonzero operator `L`
//! in t and a rational `g` with `L(f) = ∂x g`.
//!
//! `L` is the wronskian annihilator of the nonzero finite residues of
//! `f dx`. Since taking residues commutes with ∂t, `L(f)` is residue-free and
//! so has a rational antiderivative. All intermediate work happens on the
//! partial fraction form of `f`, whose poles stay fixed under ∂t.

use crate::error::{Error, Result};
use crate::ore::{wronskian_annihilator, AnnihilatorCertificate, OreOperator};
use crate::rational::RatFuncXT;
use crate::residue::{residue_at_infinity, split_partial_fractions, PartialFractionForm, ResidueList};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TelescopeCertificate {
    pub input: RatFuncXT,
    pub residues: ResidueList,
    pub annihilator: AnnihilatorCertificate,
    pub operator: OreOperator,
    pub integral: RatFuncXT,
}

pub fn telescope(f: &RatFuncXT) -> Result<TelescopeCertificate> {
    let pf = split_partial_fractions(f)?;
    let residues = pf.residues(residue_at_infinity(f));
    let annihilator = wronskian_annihilator(&residues.nonzero_finite());
    let operator = annihilator.operator.clone();

    let mut image = PartialFractionForm::zero();
    let mut deriv = pf;
    for (i, a) in operator.coeffs().iter().enumerate() {
        if i > 0 {
            deriv = deriv.d_t();
        }
        if !a.is_zero() {
            image = image.add(&deriv.scale(a));
        }
    }
    let integral = image.integrate_x()?.reassemble();
    let cert = TelescopeCertificate {
        input: f.clone(),
        residues,
        annihilator,
        operator,
        integral,
    };
    if !verify_telescope(&cert) {
        return Err(Error::Internal("telescoping certificate failed its own check".into()));
    }
    Ok(cert)
}

/// Recomputes `L(f) - ∂x g` from the stored `f`, `L`, `g` alone.
pub fn verify_telescope(c: &TelescopeCertificate) -> bool {
    !c.operator.is_zero() && c.operator.apply_equals(&c.input, &c.integral.d_x())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_operator, parse_rational};
    use crate::residue::hermite_integrate;

    fn q(s: &str) -> RatFuncXT {
        parse_rational(s).unwrap()
    }

    #[test]
    fn examples() {
        let c = telescope(&q("x^2 + t*x")).unwrap();
        assert_eq!(c.operator, OreOperator::identity());
        assert_eq!(c.integral, q("x^3/3 + t*x^2/2"));

        let c = telescope(&q("1/(x-t)")).unwrap();
        assert_eq!(c.operator, OreOperator::dt());
        assert_eq!(c.integral, q("-1/(x-t)"));

        let c = telescope(&q("t/(x-t)")).unwrap();
        assert_eq!(c.operator, parse_operator("Dt - 1/t").unwrap());
        assert_eq!(c.integral, q("-t/(x-t)"));
        assert!(verify_telescope(&c));
    }

    #[test]
    fn integral_agrees_with_hermite() {
        let f = q("(t*x + 1)/((x-t)^2*(x-t^2)*(x+1/2))");
        let c = telescope(&f).unwrap();
        assert!(verify_telescope(&c));
        assert_eq!(hermite_integrate(&c.operator.apply(&f)).unwrap(), c.integral);
        assert_eq!(c.operator.order(), Some(c.annihilator.basis.len()));
    }

    #[test]
    fn tampering_is_detected() {
        let mut c = telescope(&q("1/(x-t)")).unwrap();
        c.integral = c.integral.add(&RatFuncXT::x());
        assert!(!verify_telescope(&c));

        let hand = TelescopeCertificate {
            input: q("1/(x-t)"),
            residues: c.residues.clone(),
            annihilator: c.annihilator.clone(),
            operator: OreOperator::dt(),
            integral: q("-1/(x-t)"),
        };
        assert!(verify_telescope(&hand));
    }
}
