//! Orbit index monomials and the rigid pattern-inventory polynomial
//! `Q_rig(x) = Σ_{A rigid, up to G} x^|A|`.
//!
//! Three routes to `Q_rig`:
//!
//! * Möbius expansion over subgroups:
//!   `Q_rig = (1/|G|) Σ_H μ(1,H) Π_{O ∈ S/H} (1 + x^|O|)`.
//! * Table of marks: the multiplicity of the regular orbit type in the
//!   G-set of subsets, read off the marks inverse.
//! * Brute force: scan all `2^n` subsets and keep one representative per
//!   orbit of rigid subsets.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::affine::affine_group_capped;
use crate::affine_lattice::{AffineLattice, LatticeSummary};
use crate::error::{Error, Result};
use crate::lattice::{bottom_moebius_full, invert_marks, LatticeLimits};
use crate::perm::PermutationGroup;

/// Default largest `n` for the brute-force oracle.
pub const DEFAULT_BRUTE_FORCE_CUTOFF: u64 = 14;

/// Exponent vector of `Π_d z_d^{e_d}`, `e_d` = number of orbits of size `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitIndexMonomial {
    /// `exponents[d - 1]` is the number of orbits of size `d`, for `d = 1..=n`.
    exponents: Vec<u64>,
}

impl OrbitIndexMonomial {
    pub fn from_orbit_sizes(n: usize, sizes: &[usize]) -> Result<Self> {
        let mut exponents = vec![0u64; n];
        for &s in sizes {
            if s == 0 || s > n {
                return Err(Error::Inconsistency(format!("orbit size {s} outside 1..={n}")));
            }
            exponents[s - 1] += 1;
        }
        let total: usize = sizes.iter().sum();
        if total != n {
            return Err(Error::Inconsistency(format!(
                "orbit sizes sum to {total}, expected {n}"
            )));
        }
        Ok(OrbitIndexMonomial { exponents })
    }

    pub fn degree(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `z_d`.
    pub fn exponent(&self, d: usize) -> u64 {
        self.exponents[d - 1]
    }

    /// The image under `z_r ↦ 1 + x^r`.
    pub fn substitute(&self) -> IntegerPolynomial {
        let mut p = IntegerPolynomial::one();
        for (i, &e) in self.exponents.iter().enumerate() {
            let factor = IntegerPolynomial::one_plus_x_pow(i + 1);
            for _ in 0..e {
                p = &p * &factor;
            }
        }
        p
    }
}

impl fmt::Display for OrbitIndexMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z_{}", i + 1)?;
            } else {
                write!(f, "z_{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntegerPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 + x^r`.
    pub fn one_plus_x_pow(r: usize) -> Self {
        let mut c = vec![BigInt::zero(); r + 1];
        c[0] += 1;
        c[r] += 1;
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `x^d` (zero beyond the degree).
    pub fn coefficient(&self, d: usize) -> BigInt {
        self.coefficients.get(d).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: &BigInt, what: &'static str) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::Divisibility {
                    what,
                    total: c.to_string(),
                    divisor: d.to_string(),
                });
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Whether the coefficient of `x^d` equals that of `x^(n-d)` for all `d`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        (0..=n).all(|d| self.coefficient(d) == self.coefficient(n - d))
    }
}

impl std::ops::Add<&IntegerPolynomial> for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        IntegerPolynomial::new((0..len).map(|d| self.coefficient(d) + rhs.coefficient(d)).collect())
    }
}

impl std::ops::Mul<&IntegerPolynomial> for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(c)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (d, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{a}x^{d}")?,
            }
        }
        Ok(())
    }
}

pub fn orbit_index_monomial(h: &PermutationGroup) -> OrbitIndexMonomial {
    OrbitIndexMonomial::from_orbit_sizes(h.degree(), &h.orbit_sizes())
        .expect("orbits partition the points")
}

/// `Σ_{A : HA = A} x^|A| = Π_{O ∈ S/H} (1 + x^|O|)`.
pub fn invariant_subset_poly(h: &PermutationGroup) -> IntegerPolynomial {
    poly_from_orbit_sizes(&h.orbit_sizes())
}

pub fn poly_from_orbit_sizes(sizes: &[usize]) -> IntegerPolynomial {
    sizes.iter().fold(IntegerPolynomial::one(), |acc, &s| {
        &acc * &IntegerPolynomial::one_plus_x_pow(s)
    })
}

/// Exact alternating coefficient sum.
pub fn eval_at_minus_one(p: &IntegerPolynomial) -> BigInt {
    p.coefficients()
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (d, c)| if d % 2 == 0 { acc + c } else { acc - c })
}

fn even_modulus_or_err(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::ZeroModulus),
        _ => Ok(()),
    }
}

/// `Q_rig` for `Aff(Z/nZ)` by Möbius expansion, computing the lattice.
pub fn qrig_via_moebius(n: u64) -> Result<IntegerPolynomial> {
    even_modulus_or_err(n)?;
    qrig_via_moebius_from(&LatticeSummary::compute(n, LatticeLimits::default())?)
}

/// Möbius expansion grouped by conjugacy class:
/// `(1/|G|) Σ_i length_i μ(1,H_i) Π (1 + x^|O|)`.
pub fn qrig_via_moebius_from(summary: &LatticeSummary) -> Result<IntegerPolynomial> {
    let total = summary
        .classes
        .par_iter()
        .filter(|c| c.mu != 0)
        .map(|c| poly_from_orbit_sizes(&c.orbit_sizes).scale(&(BigInt::from(c.length) * c.mu)))
        .reduce(IntegerPolynomial::zero, |a, b| &a + &b);
    total.div_exact(&BigInt::from(summary.group_order), "Möbius inventory sum")
}

/// Möbius expansion over every individual subgroup, with `μ` taken from the
/// containment poset. Small lattices only.
pub fn qrig_via_moebius_full(lattice: &AffineLattice) -> Result<IntegerPolynomial> {
    let mu = bottom_moebius_full(&lattice.lattice)?;
    let total = (0..lattice.lattice.len())
        .filter(|&i| mu[i] != 0)
        .map(|i| poly_from_orbit_sizes(&lattice.lattice.orbit_sizes(i)).scale(&BigInt::from(mu[i])))
        .fold(IntegerPolynomial::zero(), |a, b| &a + &b);
    total.div_exact(&BigInt::from(lattice.group_order()), "full-lattice Möbius inventory sum")
}

/// `Q_rig` from the table of marks, computing the lattice.
pub fn qrig_via_tom(n: u64) -> Result<IntegerPolynomial> {
    even_modulus_or_err(n)?;
    qrig_via_tom_from(&LatticeSummary::compute(n, LatticeLimits::default())?)
}

/// For a G-set `X` with fixed-point counts `φ(j) = |X^{G_j}|`, the orbit-type
/// multiplicities `a` satisfy `φ = a · M` (ascending marks `M`, row `i`
/// being the G-set `G/G_i`), so `a = φ · M⁻¹`. The rigid orbits are those of
/// type `G/1`, whose multiplicity is `Σ_j φ(j) M⁻¹(j, trivial)`. With `φ(j)`
/// the x-weighted count of `G_j`-invariant subsets this is `Q_rig`.
pub fn qrig_via_tom_from(summary: &LatticeSummary) -> Result<IntegerPolynomial> {
    let inverse = invert_marks(&summary.marks)?;
    let trivial = summary.trivial_class();
    let n = summary.n as usize;
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (j, class) in summary.classes.iter().enumerate() {
        let b = inverse.get(j, trivial);
        if b.is_zero() {
            continue;
        }
        let p = poly_from_orbit_sizes(&class.orbit_sizes);
        for (d, c) in p.coefficients().iter().enumerate() {
            coeffs[d] += b * c;
        }
    }
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Inconsistency(format!(
                "table-of-marks inventory produced the non-count coefficient {c}; \
                 marks inverse orientation is wrong"
            )));
        }
        out.push(c.to_integer());
    }
    Ok(IntegerPolynomial::new(out))
}

/// Brute-force `Q_rig` for `Aff(Z/nZ)`, `n ≤ cutoff`.
pub fn qrig_bruteforce(n: u64) -> Result<IntegerPolynomial> {
    qrig_bruteforce_with(n, DEFAULT_BRUTE_FORCE_CUTOFF)
}

pub fn qrig_bruteforce_with(n: u64, cutoff: u64) -> Result<IntegerPolynomial> {
    even_modulus_or_err(n)?;
    if n > cutoff || n > 30 {
        return Err(Error::BudgetExceeded {
            what: "brute-force modulus n",
            value: n,
            limit: cutoff.min(30),
        });
    }
    let group = affine_group_capped(n, usize::MAX)?;
    let others: Vec<_> = group.elements().iter().filter(|g| !g.is_identity()).collect();
    let all: Vec<_> = group.elements().iter().collect();
    let size = 1u64 << n;
    // (orbit representatives by size, rigid subsets by size)
    let (reps, raw) = (0..size)
        .into_par_iter()
        .fold(
            || (vec![0u64; n as usize + 1], vec![0u64; n as usize + 1]),
            |(mut reps, mut raw), mask| {
                if others.iter().all(|g| g.image_of_mask(mask) != mask) {
                    let d = mask.count_ones() as usize;
                    raw[d] += 1;
                    if all.iter().all(|g| g.image_of_mask(mask) >= mask) {
                        reps[d] += 1;
                    }
                }
                (reps, raw)
            },
        )
        .reduce(
            || (vec![0u64; n as usize + 1], vec![0u64; n as usize + 1]),
            |(mut a, mut b), (c, d)| {
                for i in 0..a.len() {
                    a[i] += c[i];
                    b[i] += d[i];
                }
                (a, b)
            },
        );
    let order = group.order() as u64;
    for (d, (&r, &w)) in reps.iter().zip(&raw).enumerate() {
        if w != r * order {
            return Err(Error::Inconsistency(format!(
                "rigid {d}-subsets: {w} sets but {r} orbits of size {order}"
            )));
        }
    }
    Ok(IntegerPolynomial::new(reps.into_iter().map(BigInt::from).collect()))
}

/// `Σ_{H ∈ ℰ} μ(1,H) 2^{|S/H|}` over subgroups whose orbits are all even,
/// before division by `|G|`.
pub fn even_orbit_total(summary: &LatticeSummary) -> BigInt {
    summary
        .classes
        .iter()
        .filter(|c| c.all_orbits_even())
        .map(|c| BigInt::from(c.length) * c.mu * (BigInt::one() << c.orbit_count()))
        .sum()
}

/// `Σ_{H ≰ K0} μ(1,H) 2^{|S/H|}`, before division by `|G|`.
pub fn outside_k0_total(summary: &LatticeSummary) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for c in &summary.classes {
        match c.in_k0 {
            None => return Err(Error::OddModulus(summary.n)),
            Some(true) => {}
            Some(false) => total += BigInt::from(c.length) * c.mu * (BigInt::one() << c.orbit_count()),
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{affine_to_perm, AffineMap};
    use crate::perm::generate_group;

    fn group6(u: u64) -> PermutationGroup {
        generate_group(6, &[affine_to_perm(&AffineMap::new(6, u, 1).unwrap())]).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let m = orbit_index_monomial(&PermutationGroup::trivial(2));
        assert_eq!(m.exponent(1), 2);
        assert_eq!(m.to_string(), "z_1^2");
        let m = orbit_index_monomial(&group6(1));
        assert_eq!(m.to_string(), "z_6");
        let m = orbit_index_monomial(&group6(2));
        assert_eq!(m.exponent(3), 2);
        assert_eq!(m.substitute(), invariant_subset_poly(&group6(2)));
        assert!(OrbitIndexMonomial::from_orbit_sizes(4, &[1, 2]).is_err());
    }

    #[test]
    fn invariant_subset_examples() {
        assert_eq!(
            invariant_subset_poly(&PermutationGroup::trivial(2)),
            IntegerPolynomial::from_i64(&[1, 2, 1])
        );
        assert_eq!(invariant_subset_poly(&group6(1)), IntegerPolynomial::from_i64(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(invariant_subset_poly(&group6(2)), IntegerPolynomial::from_i64(&[1, 0, 0, 2, 0, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_at_minus_one(&IntegerPolynomial::from_i64(&[0, 1])), BigInt::from(-1));
        assert_eq!(eval_at_minus_one(&IntegerPolynomial::from_i64(&[1, 0, 0, 0, 0, 0, 1])), BigInt::from(2));
        let p = IntegerPolynomial::from_i64(&[3, -1, 4, 1, -5]);
        assert_eq!(eval_at_minus_one(&p), p.eval(&BigInt::from(-1)));
    }

    #[test]
    fn polynomial_display_and_trim() {
        let p = IntegerPolynomial::from_i64(&[1, -2, 0, 3, 0, 0]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "1 - 2x + 3x^3");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn div_exact_reports_failure() {
        let p = IntegerPolynomial::from_i64(&[2, 3]);
        assert!(matches!(
            p.div_exact(&BigInt::from(2), "test"),
            Err(Error::Divisibility { .. })
        ));
    }

    #[test]
    fn n2_all_routes() {
        let x = IntegerPolynomial::from_i64(&[0, 1]);
        assert_eq!(qrig_bruteforce(2).unwrap(), x);
        assert_eq!(qrig_via_moebius(2).unwrap(), x);
        assert_eq!(qrig_via_tom(2).unwrap(), x);
    }

    #[test]
    fn n6_routes_agree() {
        let bf = qrig_bruteforce(6).unwrap();
        assert_eq!(qrig_via_moebius(6).unwrap(), bf);
        assert_eq!(qrig_via_tom(6).unwrap(), bf);
        let lat = AffineLattice::new(6, LatticeLimits::default()).unwrap();
        assert_eq!(qrig_via_moebius_full(&lat).unwrap(), bf);
        assert!(bf.is_palindromic(6));
    }

    #[test]
    fn brute_force_cutoff() {
        assert!(matches!(qrig_bruteforce(16), Err(Error::BudgetExceeded { .. })));
    }
}
