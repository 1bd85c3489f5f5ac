//! Cold and warm runs through the on-disk lattice cache.

use strong_dichotomies::cache::load_or_compute;
use strong_dichotomies::dichotomy::strong_count_formula_from;
use strong_dichotomies::lattice::LatticeLimits;

fn main() -> strong_dichotomies::Result<()> {
    let dir = std::env::temp_dir().join("strong-dichotomies-example-cache");
    for _ in 0..2 {
        let t = std::time::Instant::now();
        let (summary, status) = load_or_compute(54, LatticeLimits::default(), Some(&dir))?;
        println!(
            "n = 54: cache {:<4} s = {}  ({:?})",
            status.label(),
            strong_count_formula_from(&summary)?,
            t.elapsed()
        );
    }
    Ok(())
}
