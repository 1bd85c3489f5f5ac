//! Indexed multiplication table for a small permutation group.
//!
//! Element `i` is the `i`-th entry of the group's sorted element list, so
//! subsets of the group can be stored as bitsets over `0..order` and the
//! lexicographic order of sorted index lists matches the lexicographic order
//! of sorted permutation lists.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

pub type ElementSet = FixedBitSet;

#[derive(Clone, Debug)]
pub struct GroupTable {
    group: PermutationGroup,
    mult: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
    index: HashMap<Permutation, u32>,
}

impl GroupTable {
    pub fn new(group: PermutationGroup) -> Self {
        let elements = group.elements();
        let m = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mult: Vec<u32> = (0..m)
            .into_par_iter()
            .flat_map_iter(|a| {
                let index = &index;
                (0..m).map(move |b| index[&elements[a].compose_unchecked(&elements[b])])
            })
            .collect();
        let identity = index[&Permutation::identity(group.degree())];
        let mut inv = vec![0u32; m];
        for a in 0..m {
            for b in 0..m {
                if mult[a * m + b] == identity {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        GroupTable {
            group,
            mult,
            inv,
            identity,
            index,
        }
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inv.len()
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        self.identity
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.inv.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `x a x⁻¹`.
    #[inline]
    pub fn conj(&self, x: u32, a: u32) -> u32 {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.group.elements()[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.order())
    }

    pub fn trivial_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert(self.identity as usize);
        s
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> ElementSet {
        let mut set = self.trivial_set();
        let mut list = vec![self.identity];
        let mut i = 0;
        while i < list.len() {
            let e = list[i];
            for &g in gens {
                let next = self.mul(e, g);
                if !set.put(next as usize) {
                    list.push(next);
                }
            }
            i += 1;
        }
        set
    }

    /// `⟨base, extra⟩`, using every element of `base` as a generator.
    pub fn join(&self, base: &ElementSet, extra: &[u32]) -> ElementSet {
        let mut gens: Vec<u32> = base.ones().map(|e| e as u32).collect();
        gens.extend_from_slice(extra);
        self.closure(&gens)
    }

    /// `x S x⁻¹`.
    pub fn conjugate_set(&self, set: &ElementSet, x: u32) -> ElementSet {
        let mut out = self.empty_set();
        let xi = self.inv(x);
        for e in set.ones() {
            out.insert(self.mul(self.mul(x, e as u32), xi) as usize);
        }
        out
    }

    /// `{x : x S x⁻¹ = S}` for a subgroup `S` generated by `gens`.
    pub fn normalizer(&self, set: &ElementSet, gens: &[u32]) -> ElementSet {
        let mut out = self.empty_set();
        for x in 0..self.order() as u32 {
            if gens.iter().all(|&g| set.contains(self.conj(x, g) as usize)) {
                out.insert(x as usize);
            }
        }
        out
    }

    pub fn to_group(&self, set: &ElementSet) -> PermutationGroup {
        let elements: Vec<Permutation> = set.ones().map(|i| self.element(i as u32).clone()).collect();
        PermutationGroup::from_sorted_elements(self.group.degree(), elements)
    }

    /// Element-set of a subgroup of the table's group.
    pub fn set_of(&self, h: &PermutationGroup) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for p in h.elements() {
            s.insert(self.index_of(p).ok_or(Error::NotInGroup)? as usize);
        }
        Ok(s)
    }

    /// Derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut current: Vec<u32> = (0..self.order() as u32).collect();
        loop {
            if current.len() == 1 {
                return true;
            }
            let mut comms: Vec<u32> = Vec::new();
            let mut seen = self.empty_set();
            for &a in &current {
                for &b in &current {
                    let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                    if !seen.put(c as usize) {
                        comms.push(c);
                    }
                }
            }
            let derived = self.closure(&comms);
            if derived.count_ones(..) == current.len() {
                return false;
            }
            current = derived.ones().map(|e| e as u32).collect();
        }
    }

    /// Sizes of the orbits on points of the subgroup generated by `gens`,
    /// listed by least point.
    pub fn orbit_sizes(&self, gens: &[u32]) -> Vec<usize> {
        let n = self.group.degree();
        let mut label = vec![false; n];
        let mut sizes = Vec::new();
        for start in 0..n {
            if label[start] {
                continue;
            }
            label[start] = true;
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &g in gens {
                    let y = self.element(g).apply(x);
                    if !label[y] {
                        label[y] = true;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }
}

/// Lexicographic comparison of the sorted index lists of two sets.
pub fn lex_cmp(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    a.ones().cmp(b.ones())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::affine_group;
    use crate::perm::generate_group;

    #[test]
    fn table_agrees_with_composition() {
        let g = affine_group(10).unwrap();
        let t = GroupTable::new(g.clone());
        for a in 0..t.order() as u32 {
            assert_eq!(t.mul(a, t.inv(a)), t.identity());
            for b in 0..t.order() as u32 {
                let p = t.element(a).compose(t.element(b)).unwrap();
                assert_eq!(t.element(t.mul(a, b)), &p);
            }
        }
    }

    #[test]
    fn solvability() {
        assert!(GroupTable::new(affine_group(12).unwrap()).is_solvable());
        let p = |v: Vec<u32>| Permutation::new(v).unwrap();
        let a5 = generate_group(5, &[p(vec![1, 2, 3, 4, 0]), p(vec![1, 2, 0, 3, 4])]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!GroupTable::new(a5).is_solvable());
    }

    #[test]
    fn join_is_the_generated_subgroup() {
        let t = GroupTable::new(affine_group(12).unwrap());
        for a in (0..t.order() as u32).step_by(5) {
            let base = t.closure(&[a]);
            for b in (0..t.order() as u32).step_by(7) {
                assert_eq!(t.join(&base, &[b]), t.closure(&[a, b]));
            }
        }
    }
}
