//! The counting lemmas behind the strong-dichotomy formula, checked by
//! direct enumeration.

use num_bigint::BigInt;
use strong_dichotomies::affine::{affine_group, k0_subgroup};
use strong_dichotomies::affine_lattice::AffineLattice;
use strong_dichotomies::dichotomy::{
    even_orbits_iff_outside_k0, is_rigid, mq_elements, mq_h_count, mq_h_count_direct, strong_count_bruteforce,
    strong_representatives, Dichotomy,
};
use strong_dichotomies::inventory::{eval_at_minus_one, even_orbit_total, outside_k0_total, qrig_via_moebius_from};
use strong_dichotomies::lattice::LatticeLimits;

fn lattice(n: u64) -> AffineLattice {
    AffineLattice::new(n, LatticeLimits::default()).unwrap()
}

#[test]
fn even_orbits_exactly_outside_k0() {
    for k in [1, 3, 5, 7, 9] {
        let aff = lattice(2 * k);
        let k0 = k0_subgroup(2 * k).unwrap();
        for i in 0..aff.lattice.len() {
            assert!(even_orbits_iff_outside_k0(&aff.lattice.subgroup(i), &k0).unwrap(), "k = {k}, subgroup {i}");
        }
    }
}

#[test]
fn fixed_dichotomy_counts() {
    for k in [3, 5, 7] {
        let aff = lattice(2 * k);
        let k0 = k0_subgroup(2 * k).unwrap();
        for (q, _) in &aff.quasipolarities {
            for i in 0..aff.lattice.len() {
                let h = aff.lattice.subgroup(i);
                let direct = mq_h_count_direct(q, &h).unwrap();
                assert_eq!(direct, mq_h_count(q, &h, &k0).unwrap(), "k = {k}, q = {q:?}, subgroup {i}");
                if !aff.in_k0(i).unwrap() {
                    assert_eq!(direct, BigInt::from(0));
                }
            }
        }
    }
}

#[test]
fn black_side_matches_brute_force() {
    for k in [1, 3, 5, 7, 9] {
        let aff = lattice(2 * k);
        let s = strong_count_bruteforce(k).unwrap();
        assert_eq!(aff.black_side_total().unwrap(), s * aff.group_order(), "k = {k}");
    }
}

#[test]
fn white_side_and_inventory_sums() {
    for k in [1, 3, 5, 7, 9, 11, 13] {
        let summary = lattice(2 * k).summary().unwrap();
        let g = BigInt::from(summary.group_order);
        let s = strong_count_bruteforce(k).unwrap();
        let outside = outside_k0_total(&summary).unwrap();
        assert_eq!(outside, -(&s * &g), "k = {k}");
        assert_eq!(even_orbit_total(&summary), outside, "k = {k}");
        let q = qrig_via_moebius_from(&summary).unwrap();
        assert_eq!(eval_at_minus_one(&q) * &g, even_orbit_total(&summary), "k = {k}");
    }
}

#[test]
fn inventories_are_palindromic() {
    for n in 1..=18 {
        let summary = lattice(n).summary().unwrap();
        assert!(qrig_via_moebius_from(&summary).unwrap().is_palindromic(n as usize), "n = {n}");
    }
}

#[test]
fn c_of_l_identities() {
    for n in [6, 10] {
        let aff = lattice(n);
        let k0 = aff.k0_index().unwrap();
        for l in 0..aff.lattice.len() {
            if aff.in_k0(l).unwrap() {
                continue;
            }
            assert_eq!(aff.c_of_l(l).unwrap(), -aff.mu(l), "n = {n}, L = {l}");
            let meet_trivial = aff.lattice.meet_index(l, k0) == aff.lattice.trivial_index();
            assert_eq!(aff.c_cumulative(l).unwrap(), i64::from(meet_trivial), "n = {n}, L = {l}");
        }
    }
}

#[test]
fn strong_classes_are_conjugation_invariant() {
    for k in [3, 5, 7, 9] {
        let n = 2 * k;
        let g = affine_group(n).unwrap();
        let reps = strong_representatives(k).unwrap();
        assert_eq!(BigInt::from(reps.len()), strong_count_bruteforce(k).unwrap(), "k = {k}");
        for d in &reps {
            assert!(is_rigid(d, &g).unwrap());
            for t in g.elements() {
                let moved = Dichotomy::from_mask(n, t.image_of_mask(d.mask())).unwrap();
                assert!(is_rigid(&moved, &g).unwrap());
                // The image is still exchanged with its complement by t q t⁻¹.
                let q = d.quasipolarity().unwrap().to_perm().conjugate_by(t).unwrap();
                assert_eq!(q.image_of_mask(moved.mask()), moved.complement_mask());
            }
        }
    }
}

#[test]
fn mq_has_two_to_the_k_members() {
    for k in 1..=8u64 {
        let aff = lattice(2 * k);
        for (q, _) in &aff.quasipolarities {
            let members: Vec<_> = mq_elements(q).unwrap().collect();
            assert_eq!(members.len(), 1 << k);
            for d in members {
                assert_eq!(q.to_perm().image_of_mask(d.mask()), d.complement_mask());
            }
        }
    }
}
