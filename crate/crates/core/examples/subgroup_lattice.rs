//! Enumerate the subgroups of Aff(Z/nZ) up to conjugacy, with μ(1, H).
//!
//! cargo run --example subgroup_lattice -- 10

use strong_dichotomies::affine_lattice::AffineLattice;
use strong_dichotomies::lattice::LatticeLimits;

fn main() -> strong_dichotomies::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let aff = AffineLattice::new(n, LatticeLimits::default())?;
    let classes = &aff.classes;

    println!(
        "Aff(Z/{n}Z): order {}, {} subgroups in {} classes",
        aff.group_order(),
        aff.lattice.len(),
        classes.len()
    );
    println!("{:>6} {:>6} {:>6}  orbits", "order", "length", "mu");
    for c in 0..classes.len() {
        let rep = classes.representatives[c];
        println!(
            "{:>6} {:>6} {:>6}  {:?}",
            classes.orders[c],
            classes.lengths[c],
            aff.class_mu[c],
            aff.lattice.orbit_sizes(rep)
        );
    }
    Ok(())
}
