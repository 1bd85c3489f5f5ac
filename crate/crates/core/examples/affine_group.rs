//! Build Aff(Z/nZ) as a permutation group and list its quasipolarities.
//!
//! cargo run --example affine_group -- 12

use strong_dichotomies::affine::{affine_group, k0_subgroup, quasipolarities, AffineMap};

fn main() -> strong_dichotomies::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);

    let g = affine_group(n)?;
    let k0 = k0_subgroup(n)?;
    println!("|Aff(Z/{n}Z)| = {}, |K0| = {}", g.order(), k0.order());

    // x -> 5x composed after x -> x + 1.
    let a = AffineMap::new(n, 0, 5)?;
    let b = AffineMap::new(n, 1, 1)?;
    let c = a.compose(&b)?;
    println!("(x -> 5x) . (x -> x+1) = x -> {}x + {}", c.multiplier(), c.translation());

    let qs = quasipolarities(n)?;
    println!("{} quasipolarities:", qs.len());
    for q in qs {
        println!("  x -> {}x + {}", q.multiplier(), q.translation());
    }
    Ok(())
}
