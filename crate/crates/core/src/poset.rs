//! Incidence algebra of a finite poset: zeta, Möbius, identity, convolution
//! and Möbius inversion, all with exact rational values.
//!
//! Poset elements are the indices `0..len`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    len: usize,
    leq: Vec<bool>,
    /// A linear extension: if `x < y` then `x` precedes `y`.
    order: Vec<usize>,
}

impl FinitePoset {
    /// Builds a poset from its order relation, verifying reflexivity,
    /// antisymmetry and transitivity.
    pub fn new(len: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut table = vec![false; len * len];
        for x in 0..len {
            for y in 0..len {
                table[x * len + y] = leq(x, y);
            }
        }
        Self::from_table(len, table)
    }

    /// `table[x * len + y]` is `x ≤ y`.
    pub fn from_table(len: usize, table: Vec<bool>) -> Result<Self> {
        if table.len() != len * len {
            return Err(Error::InvalidPoset(format!(
                "relation table has {} entries, expected {}",
                table.len(),
                len * len
            )));
        }
        let at = |x: usize, y: usize| table[x * len + y];
        for x in 0..len {
            if !at(x, x) {
                return Err(Error::InvalidPoset(format!("not reflexive at ({x}, {x})")));
            }
        }
        for x in 0..len {
            for y in (x + 1)..len {
                if at(x, y) && at(y, x) {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric: {x} ≤ {y} and {y} ≤ {x}"
                    )));
                }
            }
        }
        for x in 0..len {
            for y in 0..len {
                if !at(x, y) {
                    continue;
                }
                for z in 0..len {
                    if at(y, z) && !at(x, z) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive: {x} ≤ {y} ≤ {z} but not {x} ≤ {z}"
                        )));
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..len).collect();
        let below: Vec<usize> = (0..len)
            .map(|y| (0..len).filter(|&x| at(x, y)).count())
            .collect();
        order.sort_by_key(|&y| (below[y], y));
        Ok(FinitePoset { len, leq: table, order })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len + y]
    }

    /// Elements in an order compatible with `≤`.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    /// `μ(x, ·)` for a single `x`, by the defining recursion.
    pub fn moebius_row(&self, x: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); self.len];
        // Elements z with x ≤ z, in linear extension order.
        let above: Vec<usize> = self.order.iter().copied().filter(|&z| self.leq(x, z)).collect();
        for (i, &y) in above.iter().enumerate() {
            if y == x {
                row[y] = BigInt::one();
                continue;
            }
            let mut s = BigInt::zero();
            for &z in &above[..i] {
                if self.leq(z, y) {
                    s += &row[z];
                }
            }
            row[y] = -s;
        }
        row
    }
}

/// A function on pairs supported on `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceFunction {
    len: usize,
    values: Vec<BigRational>,
}

impl IncidenceFunction {
    /// Builds `f` from values on comparable pairs; `value` is only called
    /// for `x ≤ y`.
    pub fn from_fn(poset: &FinitePoset, mut value: impl FnMut(usize, usize) -> BigRational) -> Self {
        let len = poset.len();
        let mut values = vec![BigRational::zero(); len * len];
        for x in 0..len {
            for y in 0..len {
                if poset.leq(x, y) {
                    values[x * len + y] = value(x, y);
                }
            }
        }
        IncidenceFunction { len, values }
    }

    /// Rejects values on incomparable pairs.
    pub fn from_table(poset: &FinitePoset, values: Vec<BigRational>) -> Result<Self> {
        let len = poset.len();
        if values.len() != len * len {
            return Err(Error::InvalidPoset("value table has the wrong size".into()));
        }
        for x in 0..len {
            for y in 0..len {
                if !poset.leq(x, y) && !values[x * len + y].is_zero() {
                    return Err(Error::InvalidPoset(format!(
                        "incidence function is nonzero on the incomparable pair ({x}, {y})"
                    )));
                }
            }
        }
        Ok(IncidenceFunction { len, values })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> &BigRational {
        &self.values[x * self.len + y]
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `I(x, y) = [x = y]`.
pub fn identity(poset: &FinitePoset) -> IncidenceFunction {
    IncidenceFunction::from_fn(poset, |x, y| int((x == y) as i64))
}

/// `ζ(x, y) = [x ≤ y]`.
pub fn zeta(poset: &FinitePoset) -> IncidenceFunction {
    IncidenceFunction::from_fn(poset, |_, _| int(1))
}

/// The Möbius function, one row per lower endpoint.
pub fn moebius(poset: &FinitePoset) -> IncidenceFunction {
    let len = poset.len();
    let mut values = vec![BigRational::zero(); len * len];
    for x in 0..len {
        for (y, m) in poset.moebius_row(x).into_iter().enumerate() {
            values[x * len + y] = BigRational::from_integer(m);
        }
    }
    IncidenceFunction { len, values }
}

/// `(αβ)(x, y) = Σ_z α(x, z) β(z, y)`.
pub fn convolve(
    alpha: &IncidenceFunction,
    beta: &IncidenceFunction,
    poset: &FinitePoset,
) -> Result<IncidenceFunction> {
    let len = poset.len();
    if alpha.len != len || beta.len != len {
        return Err(Error::InvalidPoset(
            "incidence functions belong to a different poset".into(),
        ));
    }
    let mut values = vec![BigRational::zero(); len * len];
    for x in 0..len {
        for z in 0..len {
            let a = alpha.get(x, z);
            if a.is_zero() {
                continue;
            }
            for y in 0..len {
                let b = beta.get(z, y);
                if !b.is_zero() {
                    values[x * len + y] += a * b;
                }
            }
        }
    }
    Ok(IncidenceFunction { len, values })
}

/// Solves `αζ = β` for `α`, i.e. returns `βμ`.
pub fn moebius_invert(beta: &IncidenceFunction, poset: &FinitePoset) -> Result<IncidenceFunction> {
    convolve(beta, &moebius(poset), poset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(m: usize) -> FinitePoset {
        FinitePoset::new(m, |x, y| x <= y).unwrap()
    }

    fn q(v: i64) -> BigRational {
        int(v)
    }

    #[test]
    fn rejects_non_posets() {
        assert!(FinitePoset::new(2, |x, y| x != y || x == 0).is_err());
        assert!(FinitePoset::new(2, |_, _| true).is_err());
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2
        let err = FinitePoset::new(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2));
        assert!(matches!(err, Err(Error::InvalidPoset(msg)) if msg.contains("transitive")));
    }

    #[test]
    fn zeta_examples() {
        let anti = FinitePoset::new(3, |x, y| x == y).unwrap();
        assert_eq!(zeta(&anti), identity(&anti));
        let c = chain(2);
        assert_eq!(*zeta(&c).get(0, 1), q(1));
        assert!((0..2).all(|x| *zeta(&c).get(x, x) == q(1)));
    }

    #[test]
    fn moebius_examples() {
        let c = chain(3);
        let mu = moebius(&c);
        assert_eq!(*mu.get(0, 1), q(-1));
        assert_eq!(*mu.get(0, 2), q(0));

        // Boolean lattice on {a, b} as bitmasks 0..4
        let b2 = FinitePoset::new(4, |x, y| x & y == x).unwrap();
        assert_eq!(*moebius(&b2).get(0, 3), q(1));

        let divisors: Vec<usize> = (1..=12).filter(|d| 12 % d == 0).collect();
        let div = FinitePoset::new(divisors.len(), |x, y| divisors[y] % divisors[x] == 0).unwrap();
        let mu = moebius(&div);
        let classical = |d: usize| -> i64 {
            match d {
                1 => 1,
                2 | 3 => -1,
                6 => 1,
                _ => 0,
            }
        };
        for (i, &d) in divisors.iter().enumerate() {
            assert_eq!(*mu.get(0, i), q(classical(d)), "d={d}");
        }
    }

    #[test]
    fn convolution_examples() {
        let c = chain(3);
        let (i, z, mu) = (identity(&c), zeta(&c), moebius(&c));
        let alpha = IncidenceFunction::from_fn(&c, |x, y| q((x * 3 + y) as i64 - 2));
        assert_eq!(convolve(&i, &alpha, &c).unwrap(), alpha);
        assert_eq!(convolve(&mu, &z, &c).unwrap(), i);
        assert_eq!(convolve(&z, &mu, &c).unwrap(), i);
    }

    #[test]
    fn inversion_examples() {
        let c = chain(4);
        assert_eq!(moebius_invert(&zeta(&c), &c).unwrap(), identity(&c));
        assert_eq!(moebius_invert(&identity(&c), &c).unwrap(), moebius(&c));
    }

    #[test]
    fn from_table_rejects_off_support_values() {
        let anti = FinitePoset::new(2, |x, y| x == y).unwrap();
        let vals = vec![q(1), q(1), q(0), q(1)];
        assert!(IncidenceFunction::from_table(&anti, vals).is_err());
    }
}
