mod common;

use common::{qtx, split_function};
use dgal_core::residue::{chevalley_check, hermite_integrate, residues, split_partial_fractions};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partial_fractions_reassemble(f in split_function(4, 3, 3)) {
        let pf = split_partial_fractions(&f).unwrap();
        prop_assert_eq!(pf.reassemble(), f);
    }

    #[test]
    fn residue_theorem(f in split_function(4, 3, 4)) {
        prop_assert!(residues(&f).unwrap().sum_is_zero());
    }

    #[test]
    fn residues_commute_with_dt(f in split_function(3, 3, 3)) {
        let report = chevalley_check(&f).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report);
    }

    #[test]
    fn partial_fraction_dt_matches(f in split_function(3, 2, 2)) {
        let pf = split_partial_fractions(&f).unwrap();
        prop_assert_eq!(pf.d_t().reassemble(), f.d_t());
    }

    #[test]
    fn hermite_inverts_dx(g in qtx()) {
        // derivatives of rational functions are residue-free
        let f = g.d_x();
        prop_assume!(!f.is_zero());
        let h = hermite_integrate(&f).unwrap();
        prop_assert_eq!(h.d_x(), f);
    }
}
