//! Rows where exact computation disagrees with the printed residue tables.
//! Each test pins the computed truth so the disagreement stays documented.

use super::*;
use crate::arith::{alpha, alpha_sign, Sign};
use crate::qseries::borwein_coeffs;

fn sign(c: &rug::Integer) -> Sign {
    Sign::of_integer(c)
}

#[test]
fn t3_m4_residue_two_is_positive() {
    assert_eq!(alpha_sign(3, 4, 2), Sign::Positive);
    let s = pnz_sets(3, 4);
    assert_eq!((s.p, s.n, s.z), (vec![0, 2], vec![1], vec![]));
    let c = borwein_coeffs(3, 4, 300);
    assert!((2..=300).step_by(3).all(|n| sign(c.coeff(n)) == Sign::Positive));
}

#[test]
fn t8_m2_even_residues_vanish_but_coefficients_do_not() {
    for r in (0..8).step_by(2) {
        assert!(alpha(8, 2, r).is_zero(), "alpha_8^(2)({r})");
    }
    let s = pnz_sets(8, 2);
    assert_eq!((s.p, s.n, s.z), (vec![3, 5], vec![1, 7], vec![0, 2, 4, 6]));
    let c = borwein_coeffs(8, 2, 4);
    assert_eq!((c.coeff(0).to_i64(), c.coeff(2).to_i64(), c.coeff(4).to_i64()), (Some(1), Some(-1), Some(1)));
}

#[test]
fn t22_m1_residue_twelve_turns_positive_late() {
    assert_eq!(alpha_sign(22, 1, 12), Sign::Positive);
    // n = 22k + 12: negative through n = 3114 (k = 141), positive from n = 3136 on
    let c = borwein_coeffs(22, 1, 22 * 400 + 12);
    let at = |k: usize| sign(c.coeff(22 * k + 12));
    assert!((0..=141).all(|k| at(k) == Sign::Negative));
    assert!((142..=400).all(|k| at(k) == Sign::Positive));
}

#[test]
fn t3_m6_to_m8_constant_term_is_not_exceptional() {
    for m in 6..=8 {
        let s = pnz_sets(3, m);
        assert!(s.p.contains(&0));
        assert_eq!(borwein_coeffs(3, m as usize, 0).coeff(0).to_i64(), Some(1));
        assert_eq!(exceptional_set(3, m).unwrap().e.unwrap(), Vec::<u64>::new());
    }
}

#[test]
fn t5_m5_index_thirty_lies_on_a_zero_residue() {
    assert!(pnz_sets(5, 5).z.contains(&0));
    let c = borwein_coeffs(5, 5, 35);
    assert_eq!(c.coeff(30).to_i64(), Some(-1));
    assert_eq!(SpecialCase::SC3.refined_sign(30), Some(Sign::Negative));
    assert_eq!(exceptional_set(5, 5).unwrap().e.unwrap(), Vec::<u64>::new());
}

#[test]
fn t5_m5_pattern_breaks_at_thirty_five() {
    let c5 = borwein_coeffs(5, 5, 35);
    let c1 = borwein_coeffs(5, 1, 7);
    assert_eq!(c5.coeff(35), c1.coeff(7));
    assert_eq!(c5.coeff(35).to_i64(), Some(0));
    let report = zero_residue_check(5, 5, 2000).unwrap();
    assert_eq!(report.violations.iter().map(|v| v.n).collect::<Vec<_>>(), vec![35]);
}

#[test]
fn t11_exceptional_sets_are_not_empty() {
    let c = borwein_coeffs(11, 1, 26);
    assert_eq!((c.coeff(4).to_i64(), c.coeff(26).to_i64()), (Some(0), Some(0)));
    assert_eq!(exceptional_set(11, 1).unwrap().e.unwrap(), vec![4, 26]);
    assert_eq!(exceptional_set(11, 2).unwrap().e.unwrap(), vec![7, 13, 15, 18, 40]);
}

