//! Möbius function of a finite poset and Möbius inversion in its incidence
//! algebra, on the divisors of 36.

use num_bigint::BigInt;
use num_rational::BigRational;
use strong_dichotomies::poset::{convolve, identity, moebius, moebius_invert, zeta, FinitePoset, IncidenceFunction};

fn main() -> strong_dichotomies::Result<()> {
    let divisors: Vec<u64> = (1..=36).filter(|d| 36 % d == 0).collect();
    let p = FinitePoset::new(divisors.len(), |x, y| divisors[y] % divisors[x] == 0)?;

    let row = p.moebius_row(0);
    for (d, m) in divisors.iter().zip(&row) {
        println!("mu(1, {d:>2}) = {m}");
    }

    let mz = convolve(&moebius(&p), &zeta(&p), &p)?;
    println!("mu * zeta = identity: {}", mz == identity(&p));

    // β(x, y) = number of divisors in [x, y]; inverting recovers the constant 1.
    let beta = IncidenceFunction::from_fn(&p, |x, y| {
        let count = (0..divisors.len()).filter(|&z| p.leq(x, z) && p.leq(z, y)).count();
        BigRational::from_integer(BigInt::from(count))
    });
    let alpha = moebius_invert(&beta, &p)?;
    println!("inverting the interval-count recovers zeta: {}", alpha == zeta(&p));
    Ok(())
}
