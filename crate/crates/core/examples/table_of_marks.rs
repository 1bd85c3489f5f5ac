//! Table of marks of Aff(Z/nZ) and its exact rational inverse.
//!
//! cargo run --example table_of_marks -- 6

use strong_dichotomies::affine_lattice::AffineLattice;
use strong_dichotomies::lattice::{invert_marks, Convention, LatticeLimits};

fn main() -> strong_dichotomies::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let aff = AffineLattice::new(n, LatticeLimits::default())?;
    let tom = aff.marks()?;
    let inv = invert_marks(&tom)?;

    println!("marks, {}:", Convention::Descending.label());
    for row in tom.rows(Convention::Descending) {
        println!("  {row:?}");
    }
    println!("inverse:");
    for row in inv.rows(Convention::Descending) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    println!("M * M^-1 = I: {}", inv.is_inverse_of(&tom));
    Ok(())
}
