//! The subgroup lattice of `Aff(Z/nZ)` together with the data the counting
//! formulas need: `K0`, quasipolarities, class table, marks and `μ(1, H)`.
//!
//! [`LatticeSummary`] is the class-level digest that the formulas consume
//! and that the disk cache stores.

use crate::affine::{affine_group_capped, k0_subgroup_capped, quasipolarities, AffineMap};
use crate::error::{Error, Result};
use crate::group_table::ElementSet;
use crate::lattice::{
    bottom_moebius, conjugacy_classes, enumerate_subgroups_with, table_of_marks, ConjugacyClassTable,
    LatticeLimits, SubgroupLattice, TableOfMarks,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSummary {
    pub order: u64,
    pub length: u64,
    /// `μ(1, H)` for any member `H`.
    pub mu: i64,
    /// Orbit sizes on `Z/nZ`, listed by least point.
    pub orbit_sizes: Vec<usize>,
    /// `H ≤ K0`; `None` for odd `n`, where `K0` is undefined.
    pub in_k0: Option<bool>,
}

impl ClassSummary {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    pub fn all_orbits_even(&self) -> bool {
        self.orbit_sizes.iter().all(|s| s % 2 == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSummary {
    pub n: u64,
    pub group_order: u64,
    pub subgroup_count: u64,
    /// Ascending class order, as in [`ConjugacyClassTable`].
    pub classes: Vec<ClassSummary>,
    pub marks: TableOfMarks,
}

impl LatticeSummary {
    pub fn compute(n: u64, limits: LatticeLimits) -> Result<Self> {
        AffineLattice::new(n, limits)?.summary()
    }

    pub fn trivial_class(&self) -> usize {
        0
    }
}

#[derive(Clone, Debug)]
pub struct AffineLattice {
    pub n: u64,
    pub lattice: SubgroupLattice,
    pub classes: ConjugacyClassTable,
    /// `μ(1, H)` per class.
    pub class_mu: Vec<i64>,
    /// `K0` as an element set; `None` for odd `n`.
    pub k0: Option<ElementSet>,
    /// Quasipolarities with their element indices; empty for odd `n`.
    pub quasipolarities: Vec<(AffineMap, u32)>,
}

impl AffineLattice {
    pub fn new(n: u64, limits: LatticeLimits) -> Result<Self> {
        let group = affine_group_capped(n, limits.max_order)?;
        let lattice = enumerate_subgroups_with(&group, limits)?;
        let classes = conjugacy_classes(&lattice);
        let class_mu = bottom_moebius(&classes);
        let (k0, quasipolarities) = if n % 2 == 0 {
            let k0 = lattice.table().set_of(&k0_subgroup_capped(n, limits.max_order)?)?;
            let qs = quasipolarities(n)?
                .into_iter()
                .map(|q| {
                    let idx = lattice.table().index_of(&q.to_perm()).ok_or(Error::NotInGroup)?;
                    Ok((q, idx))
                })
                .collect::<Result<Vec<_>>>()?;
            (Some(k0), qs)
        } else {
            (None, Vec::new())
        };
        Ok(AffineLattice {
            n,
            lattice,
            classes,
            class_mu,
            k0,
            quasipolarities,
        })
    }

    pub fn group_order(&self) -> u64 {
        self.lattice.table().order() as u64
    }

    /// `μ(1, H_i)` for lattice subgroup `i`.
    pub fn mu(&self, i: usize) -> i64 {
        self.class_mu[self.classes.class_of[i]]
    }

    pub fn in_k0(&self, i: usize) -> Result<bool> {
        let k0 = self.k0.as_ref().ok_or(Error::OddModulus(self.n))?;
        Ok(self.lattice.is_inside(i, k0))
    }

    /// Lattice index of `K0`.
    pub fn k0_index(&self) -> Result<usize> {
        let k0 = self.k0.as_ref().ok_or(Error::OddModulus(self.n))?;
        self.lattice
            .index_of_set(k0)
            .ok_or_else(|| Error::Inconsistency("K0 missing from the lattice".into()))
    }

    pub fn marks(&self) -> Result<TableOfMarks> {
        table_of_marks(&self.lattice, &self.classes)
    }

    pub fn summary(&self) -> Result<LatticeSummary> {
        let marks = self.marks()?;
        let classes = (0..self.classes.len())
            .map(|c| {
                let rep = self.classes.representatives[c];
                Ok(ClassSummary {
                    order: self.classes.orders[c],
                    length: self.classes.lengths[c],
                    mu: self.class_mu[c],
                    orbit_sizes: self.lattice.orbit_sizes(rep),
                    in_k0: match self.k0 {
                        Some(_) => Some(self.in_k0(rep)?),
                        None => None,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticeSummary {
            n: self.n,
            group_order: self.group_order(),
            subgroup_count: self.lattice.len() as u64,
            classes,
            marks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_for_small_n() {
        let s = LatticeSummary::compute(6, LatticeLimits::default()).unwrap();
        assert_eq!(s.group_order, 12);
        assert_eq!(s.classes.iter().map(|c| c.length).sum::<u64>(), s.subgroup_count);
        assert_eq!(s.classes[0].order, 1);
        assert_eq!(s.classes[0].mu, 1);
        assert_eq!(s.classes.last().unwrap().order, 12);
        assert_eq!(s.classes[0].in_k0, Some(true));
        assert_eq!(s.classes.last().unwrap().in_k0, Some(false));
    }

    #[test]
    fn odd_modulus_has_no_k0() {
        let a = AffineLattice::new(5, LatticeLimits::default()).unwrap();
        assert!(a.k0.is_none());
        assert!(a.quasipolarities.is_empty());
        assert!(matches!(a.in_k0(0), Err(Error::OddModulus(5))));
        let s = a.summary().unwrap();
        assert!(s.classes.iter().all(|c| c.in_k0.is_none()));
    }
}
