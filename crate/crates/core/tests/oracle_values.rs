//! Expected values from an independent brute-force implementation (plain
//! set-based closure over all affine maps, no lattice machinery) and from
//! the published table of s(2k).

use num_bigint::BigInt;
use strong_dichotomies::affine_lattice::LatticeSummary;
use strong_dichotomies::dichotomy::{strong_count_bruteforce, strong_count_formula};
use strong_dichotomies::inventory::{qrig_bruteforce, qrig_via_moebius, qrig_via_tom, IntegerPolynomial};
use strong_dichotomies::lattice::LatticeLimits;

#[test]
fn subgroup_counts_match_independent_enumeration() {
    for (n, count) in [(4, 10), (6, 16), (8, 58), (10, 40), (12, 120)] {
        let s = LatticeSummary::compute(n, LatticeLimits::default()).unwrap();
        assert_eq!(s.subgroup_count, count, "n = {n}");
    }
}

#[test]
fn rigid_inventories_match_independent_enumeration() {
    let cases: [(u64, &[i64]); 7] = [
        (2, &[0, 1]),
        (4, &[]),
        (6, &[0, 0, 0, 1]),
        (8, &[0, 0, 0, 0, 1]),
        (10, &[0, 0, 0, 2, 3, 5, 3, 2]),
        (12, &[0, 0, 0, 2, 5, 10, 10, 10, 5, 2]),
        (14, &[0, 0, 0, 3, 8, 21, 30, 37, 30, 21, 8, 3]),
    ];
    for (n, coeffs) in cases {
        let expected = IntegerPolynomial::from_i64(coeffs);
        assert_eq!(qrig_via_moebius(n).unwrap(), expected, "moebius, n = {n}");
        assert_eq!(qrig_via_tom(n).unwrap(), expected, "tom, n = {n}");
        assert_eq!(qrig_bruteforce(n).unwrap(), expected, "brute force, n = {n}");
    }
}

#[test]
fn small_strong_counts_match_independent_enumeration() {
    for (k, s) in [(1u64, 1u64), (3, 1), (5, 3), (7, 9), (9, 40)] {
        assert_eq!(strong_count_bruteforce(k).unwrap(), BigInt::from(s), "k = {k}");
        assert_eq!(strong_count_formula(k).unwrap(), BigInt::from(s), "k = {k}");
    }
}

#[test]
fn published_rows_within_default_cap() {
    // Group orders 972 and 1624; the default cap admits both.
    for (k, s) in [(27u64, 3_864_448u64), (29, 9_916_395)] {
        assert_eq!(strong_count_formula(k).unwrap(), BigInt::from(s), "k = {k}");
    }
}
