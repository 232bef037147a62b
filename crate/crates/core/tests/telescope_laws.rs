mod common;

use common::split_function;
use dgal_core::ore::q_linear_basis;
use dgal_core::residue::residues;
use dgal_core::telescope::{telescope, verify_telescope};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn certificates_verify(f in split_function(3, 3, 3)) {
        let c = telescope(&f).unwrap();
        prop_assert!(verify_telescope(&c));
        prop_assert_eq!(&c.operator.apply(&f), &c.integral.d_x());
        let span = q_linear_basis(&residues(&f).unwrap().nonzero_finite()).len();
        prop_assert_eq!(c.operator.order(), Some(span));
    }
}
