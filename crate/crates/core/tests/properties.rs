//! Randomized invariants of permutations, affine maps and finite posets.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use strong_dichotomies::affine::{affine_group, affine_to_perm, is_quasipolarity, quasipolarities, AffineMap};
use strong_dichotomies::perm::{generate_group, Permutation};
use strong_dichotomies::poset::{convolve, identity, moebius, moebius_invert, zeta, IncidenceFunction};

mod common;
use common::random_poset;

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn affine_map() -> impl Strategy<Value = AffineMap> {
    (2u64..=24).prop_flat_map(|n| {
        let units: Vec<u64> = (1..n).filter(|&v| num_integer::gcd(v, n) == 1).collect();
        (Just(n), 0..n, proptest::sample::select(units))
            .prop_map(|(n, u, v)| AffineMap::new(n, u, v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn generated_groups_are_closed_and_satisfy_lagrange(
        a in permutation(6), b in permutation(6), c in permutation(6),
    ) {
        let g = generate_group(6, &[a.clone(), b.clone()]).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                prop_assert!(g.contains(&x.compose(y).unwrap()));
            }
            prop_assert!(g.contains(&x.inverse()));
        }
        prop_assert_eq!(720 % g.order(), 0);
        let h = generate_group(6, &[a]).unwrap();
        prop_assert!(g.is_subgroup(&h).unwrap());
        prop_assert_eq!(g.order() % h.order(), 0);
        // Conjugation preserves order.
        prop_assert_eq!(g.conjugate(&c).unwrap().order(), g.order());
    }

    #[test]
    fn orbits_partition_points_and_divide_order(a in permutation(6), b in permutation(6)) {
        let g = generate_group(6, &[a, b]).unwrap();
        let sizes = g.orbit_sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), 6);
        for s in sizes {
            prop_assert_eq!(g.order() % s, 0);
        }
    }

    #[test]
    fn stabilizer_of_complement_and_conjugates(mask in 0u64..(1 << 8), x in 0usize..32) {
        let g = affine_group(8).unwrap();
        let set: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
        let comp: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 0).collect();
        let stab = g.setwise_stabilizer(&set).unwrap();
        prop_assert_eq!(&stab, &g.setwise_stabilizer(&comp).unwrap());
        // Stab(gA) = g Stab(A) g^-1.
        let t = &g.elements()[x];
        let moved = t.image_of_set(&set);
        prop_assert_eq!(g.setwise_stabilizer(&moved).unwrap(), stab.conjugate(t).unwrap());
    }

    #[test]
    fn affine_to_perm_is_a_homomorphism(a in affine_map(), seed in any::<u64>()) {
        let n = a.modulus();
        let mut rng = StdRng::seed_from_u64(seed);
        let units: Vec<u64> = (1..n).filter(|&v| num_integer::gcd(v, n) == 1).collect();
        let b = AffineMap::new(n, rng.gen_range(0..n), units[rng.gen_range(0..units.len())]).unwrap();
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(affine_to_perm(&ab), affine_to_perm(&a).compose(&affine_to_perm(&b)).unwrap());
        for x in 0..n {
            prop_assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
    }
}

#[test]
fn quasipolarities_are_fixed_point_free_involutions() {
    for k in 1..=12u64 {
        let n = 2 * k;
        let qs = quasipolarities(n).unwrap();
        assert!(!qs.is_empty(), "n = {n}");
        let g = affine_group(n).unwrap();
        for q in &qs {
            let p = q.to_perm();
            assert!(is_quasipolarity(q));
            assert!(p.compose(&p).unwrap().is_identity());
            assert_eq!(p.fixed_points(), 0);
            if k % 2 == 1 {
                assert_eq!(q.translation() % 2, 1, "odd k forces odd translation, n = {n}");
            }
            // Closed under conjugation by the whole group.
            for t in g.elements().iter().step_by(3) {
                let c = p.conjugate_by(t).unwrap();
                assert!(qs.iter().any(|r| r.to_perm() == c));
            }
        }
    }
}

#[test]
fn random_posets_satisfy_incidence_identities() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let p = random_poset(&mut rng, 8);
        let (mu, z, id) = (moebius(&p), zeta(&p), identity(&p));
        assert_eq!(convolve(&mu, &z, &p).unwrap(), id);
        assert_eq!(convolve(&z, &mu, &p).unwrap(), id);

        // α ↦ αζ ↦ (αζ)μ recovers α.
        let alpha = IncidenceFunction::from_fn(&p, |_, _| {
            BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4)))
        });
        let beta = convolve(&alpha, &z, &p).unwrap();
        assert_eq!(moebius_invert(&beta, &p).unwrap(), alpha);
    }
}
