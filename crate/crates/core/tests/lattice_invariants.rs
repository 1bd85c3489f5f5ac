//! Structural identities of the subgroup lattice, class table and table of
//! marks of Aff(Z/nZ), each checked against a second route to the same value.

use num_bigint::BigInt;
use num_rational::BigRational;
use strong_dichotomies::affine_lattice::AffineLattice;
use strong_dichotomies::inventory::{qrig_via_moebius_from, qrig_via_moebius_full};
use strong_dichotomies::lattice::{bottom_moebius_full, invert_marks, normalizer_orders, LatticeLimits};

fn lattice(n: u64) -> AffineLattice {
    AffineLattice::new(n, LatticeLimits::default()).unwrap()
}

#[test]
fn class_grouped_sum_equals_subgroup_sum() {
    for n in [2, 4, 6, 8, 10, 12, 14] {
        let aff = lattice(n);
        let summary = aff.summary().unwrap();
        assert_eq!(
            qrig_via_moebius_from(&summary).unwrap(),
            qrig_via_moebius_full(&aff).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn class_moebius_matches_poset_moebius() {
    for n in 2..=14 {
        let aff = lattice(n);
        let full = bottom_moebius_full(&aff.lattice).unwrap();
        for (i, &m) in full.iter().enumerate() {
            assert_eq!(aff.mu(i), m, "n = {n}, subgroup {i}");
        }
    }
}

#[test]
fn class_lengths_sum_to_subgroup_count() {
    for n in 1..=16 {
        let aff = lattice(n);
        assert_eq!(aff.classes.lengths.iter().sum::<u64>(), aff.lattice.len() as u64, "n = {n}");
    }
}

#[test]
fn marks_from_containment_counts() {
    // |G_i| m(i, j) = |N(G_j)| · #{conjugates of G_j inside G_i}.
    for n in [6, 8, 10, 12, 18] {
        let aff = lattice(n);
        let tom = aff.marks().unwrap();
        let norm = normalizer_orders(&aff.classes, aff.group_order());
        for i in 0..tom.len() {
            for j in 0..tom.len() {
                assert_eq!(
                    aff.classes.orders[i] * tom.mark(i, j),
                    norm[j] * aff.classes.nrsubs(i, j),
                    "n = {n}, ({i}, {j})"
                );
            }
        }
    }
}

#[test]
fn inverse_trivial_column_is_scaled_moebius() {
    for n in [4, 6, 10, 14, 22] {
        let aff = lattice(n);
        let tom = aff.marks().unwrap();
        let inv = invert_marks(&tom).unwrap();
        let g = BigInt::from(aff.group_order());
        for j in 0..tom.len() {
            let expected = BigRational::new(BigInt::from(aff.classes.lengths[j]) * aff.class_mu[j], g.clone());
            assert_eq!(inv.get(j, 0), &expected, "n = {n}, class {j}");
        }
    }
}

#[test]
fn k0_has_index_two() {
    for k in 1..=12 {
        let aff = lattice(2 * k);
        let idx = aff.k0_index().unwrap();
        assert_eq!(2 * aff.lattice.order(idx) as u64, aff.group_order());
    }
}
