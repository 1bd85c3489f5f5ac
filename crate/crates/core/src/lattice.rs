//! Subgroup lattices, conjugacy classes of subgroups, the table of marks and
//! bottom Möbius values `μ(1, H)`.
//!
//! Storage convention is ascending: subgroups and classes are sorted by
//! order, then lexicographically by their sorted element lists, so the
//! trivial subgroup comes first and the whole group last. Descending views
//! are available where a matrix is exported.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_table::{lex_cmp, ElementSet, GroupTable};
use crate::perm::{Permutation, PermutationGroup, DEFAULT_MAX_ORDER};
use crate::poset::FinitePoset;

/// Row/column ordering of an exported matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Trivial subgroup first.
    Ascending,
    /// Whole group first.
    Descending,
}

impl Convention {
    pub fn label(self) -> &'static str {
        match self {
            Convention::Ascending => "ascending",
            Convention::Descending => "descending",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    table: GroupTable,
    subgroups: Vec<ElementSet>,
    generators: Vec<Vec<u32>>,
    orders: Vec<usize>,
    index: HashMap<ElementSet, usize>,
}

impl SubgroupLattice {
    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn group(&self) -> &PermutationGroup {
        self.table.group()
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn full_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.subgroups[i]
    }

    pub fn generators(&self, i: usize) -> &[u32] {
        &self.generators[i]
    }

    /// Materializes subgroup `i` as a permutation group.
    pub fn subgroup(&self, i: usize) -> PermutationGroup {
        self.table.to_group(&self.subgroups[i])
    }

    pub fn index_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn index_of(&self, h: &PermutationGroup) -> Option<usize> {
        let set = self.table.set_of(h).ok()?;
        self.index_of_set(&set)
    }

    /// `sub ≤ sup`.
    #[inline]
    pub fn is_contained(&self, sub: usize, sup: usize) -> bool {
        self.orders[sup] % self.orders[sub] == 0 && self.subgroups[sub].is_subset(&self.subgroups[sup])
    }

    /// Index of `⟨H_i, extra⟩`.
    pub fn join_index(&self, i: usize, extra: &[u32]) -> usize {
        let mut gens = self.generators[i].clone();
        gens.extend_from_slice(extra);
        let set = self.table.closure(&gens);
        self.index[&set]
    }

    /// Index of `H_i ∩ H_j`.
    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        let mut set = self.subgroups[i].clone();
        set.intersect_with(&self.subgroups[j]);
        self.index[&set]
    }

    pub fn orbit_sizes(&self, i: usize) -> Vec<usize> {
        self.table.orbit_sizes(&self.generators[i])
    }

    /// Whether every element of `H_i` lies in `k`.
    pub fn is_inside(&self, i: usize, k: &ElementSet) -> bool {
        self.subgroups[i].is_subset(k)
    }

    /// The containment order as a poset over subgroup indices. Quadratic in
    /// the number of subgroups (cubic to verify); intended for small groups.
    pub fn containment_poset(&self) -> Result<FinitePoset> {
        let m = self.len();
        let table: Vec<bool> = (0..m * m)
            .into_par_iter()
            .map(|p| self.is_contained(p / m, p % m))
            .collect();
        FinitePoset::from_table(m, table)
    }
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug)]
pub struct LatticeLimits {
    pub max_order: usize,
}

impl Default for LatticeLimits {
    fn default() -> Self {
        LatticeLimits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

pub fn enumerate_subgroups(group: &PermutationGroup) -> Result<SubgroupLattice> {
    enumerate_subgroups_with(group, LatticeLimits::default())
}

/// All subgroups of `group`, each exactly once.
///
/// For solvable groups every nontrivial subgroup `H` has a normal subgroup
/// `N` of prime index, so `H = ⟨N, x⟩` with `x` normalizing `N` and `xN` of
/// prime order. Starting from the trivial group this reaches every subgroup,
/// and each extension is a union of `p` cosets of `N`. Non-solvable groups
/// fall back to joining every known subgroup with every element.
pub fn enumerate_subgroups_with(group: &PermutationGroup, limits: LatticeLimits) -> Result<SubgroupLattice> {
    if group.order() > limits.max_order {
        return Err(Error::OrderCapExceeded {
            cap: limits.max_order,
            reached: group.order(),
        });
    }
    let table = GroupTable::new(group.clone());
    let solvable = table.is_solvable();

    let mut index: HashMap<ElementSet, usize> = HashMap::new();
    let mut subgroups: Vec<ElementSet> = Vec::new();
    let mut generators: Vec<Vec<u32>> = Vec::new();

    let trivial = table.trivial_set();
    index.insert(trivial.clone(), 0);
    subgroups.push(trivial);
    generators.push(Vec::new());

    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let found: Vec<Vec<(ElementSet, Vec<u32>)>> = frontier
            .par_iter()
            .map(|&i| {
                if solvable {
                    prime_extensions(&table, &subgroups[i], &generators[i])
                } else {
                    all_extensions(&table, &subgroups[i], &generators[i])
                }
            })
            .collect();
        let mut next = Vec::new();
        for (set, gens) in found.into_iter().flatten() {
            if index.contains_key(&set) {
                continue;
            }
            let id = subgroups.len();
            index.insert(set.clone(), id);
            subgroups.push(set);
            generators.push(gens);
            next.push(id);
        }
        frontier = next;
    }

    // Canonical ascending order.
    let orders: Vec<usize> = subgroups.iter().map(|s| s.count_ones(..)).collect();
    let mut perm: Vec<usize> = (0..subgroups.len()).collect();
    perm.sort_by(|&a, &b| {
        orders[a]
            .cmp(&orders[b])
            .then_with(|| lex_cmp(&subgroups[a], &subgroups[b]))
    });
    let subgroups: Vec<ElementSet> = perm.iter().map(|&i| subgroups[i].clone()).collect();
    let generators: Vec<Vec<u32>> = perm.iter().map(|&i| generators[i].clone()).collect();
    let orders: Vec<usize> = perm.iter().map(|&i| orders[i]).collect();
    let index = subgroups.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

    Ok(SubgroupLattice {
        table,
        subgroups,
        generators,
        orders,
        index,
    })
}

fn is_prime(r: usize) -> bool {
    r >= 2 && (2..).take_while(|d| d * d <= r).all(|d| r % d != 0)
}

fn prime_extensions(table: &GroupTable, set: &ElementSet, gens: &[u32]) -> Vec<(ElementSet, Vec<u32>)> {
    let normalizer = table.normalizer(set, gens);
    let mut covered = set.clone();
    let members: Vec<u32> = set.ones().map(|e| e as u32).collect();
    let mut out = Vec::new();
    for x in normalizer.ones() {
        if covered.contains(x) {
            continue;
        }
        let x = x as u32;
        let mut power = x;
        let mut r = 1;
        while !set.contains(power as usize) {
            power = table.mul(power, x);
            r += 1;
        }
        if !is_prime(r) {
            continue;
        }
        let mut ext = set.clone();
        let mut coset_rep = x;
        for _ in 1..r {
            for &h in &members {
                ext.insert(table.mul(coset_rep, h) as usize);
            }
            coset_rep = table.mul(coset_rep, x);
        }
        covered.union_with(&ext);
        let mut new_gens = gens.to_vec();
        new_gens.push(x);
        out.push((ext, new_gens));
    }
    out
}

fn all_extensions(table: &GroupTable, set: &ElementSet, gens: &[u32]) -> Vec<(ElementSet, Vec<u32>)> {
    let mut out: Vec<(ElementSet, Vec<u32>)> = Vec::new();
    let mut seen: std::collections::HashSet<ElementSet> = std::collections::HashSet::new();
    for x in 0..table.order() as u32 {
        if set.contains(x as usize) {
            continue;
        }
        let mut new_gens = gens.to_vec();
        new_gens.push(x);
        let ext = table.closure(&new_gens);
        if seen.insert(ext.clone()) {
            out.push((ext, new_gens));
        }
    }
    out
}

/// Conjugacy classes of subgroups with containment multiplicities.
#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    /// Lattice index of each class's canonical representative, which is the
    /// lexicographically smallest member.
    pub representatives: Vec<usize>,
    pub lengths: Vec<u64>,
    pub orders: Vec<u64>,
    /// Class of every lattice subgroup.
    pub class_of: Vec<usize>,
    /// For class `i`: `(j, c)` where `c` members of class `j` lie inside the
    /// representative of `i`. Includes `(i, 1)`. Sorted by `j`.
    pub subs: Vec<Vec<(usize, u64)>>,
}

impl ConjugacyClassTable {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    /// `c` such that `c` members of class `j` lie in representative `i`.
    pub fn nrsubs(&self, i: usize, j: usize) -> u64 {
        self.subs[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map(|p| self.subs[i][p].1)
            .unwrap_or(0)
    }
}

pub fn conjugacy_classes(lattice: &SubgroupLattice) -> ConjugacyClassTable {
    let table = lattice.table();
    let m = lattice.len();
    let mut class_of = vec![usize::MAX; m];
    let mut representatives = Vec::new();
    let mut lengths = Vec::new();
    let mut orders = Vec::new();

    // Lattice order is ascending and lexicographic, so the first member of a
    // class met in this scan is its smallest.
    for i in 0..m {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        let conjugates: Vec<usize> = (0..table.order() as u32)
            .into_par_iter()
            .map(|x| lattice.index[&table.conjugate_set(lattice.set(i), x)])
            .collect();
        let mut length = 0u64;
        for j in conjugates {
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                length += 1;
            }
        }
        representatives.push(i);
        lengths.push(length);
        orders.push(lattice.order(i) as u64);
    }

    let subs: Vec<Vec<(usize, u64)>> = representatives
        .par_iter()
        .map(|&r| {
            let mut counts: Vec<(usize, u64)> = Vec::new();
            for k in 0..m {
                if lattice.order(k) > lattice.order(r) {
                    break;
                }
                if lattice.is_contained(k, r) {
                    let c = class_of[k];
                    match counts.binary_search_by_key(&c, |&(j, _)| j) {
                        Ok(p) => counts[p].1 += 1,
                        Err(p) => counts.insert(p, (c, 1)),
                    }
                }
            }
            counts
        })
        .collect();

    ConjugacyClassTable {
        representatives,
        lengths,
        orders,
        class_of,
        subs,
    }
}

/// Marks matrix over conjugacy classes, ascending convention:
/// `mark(i, j)` is the number of cosets in `G/G_i` fixed by `G_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    size: usize,
    group_order: u64,
    orders: Vec<u64>,
    marks: Vec<u64>,
}

impl TableOfMarks {
    pub fn from_marks(group_order: u64, orders: Vec<u64>, marks: Vec<Vec<u64>>) -> Result<Self> {
        let size = orders.len();
        if marks.len() != size || marks.iter().any(|r| r.len() != size) {
            return Err(Error::Inconsistency("marks matrix is not square".into()));
        }
        Ok(TableOfMarks {
            size,
            group_order,
            orders,
            marks: marks.into_iter().flatten().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Ascending indices.
    #[inline]
    pub fn mark(&self, i: usize, j: usize) -> u64 {
        self.marks[i * self.size + j]
    }

    pub fn rows(&self, convention: Convention) -> Vec<Vec<u64>> {
        let n = self.size;
        let map = |i: usize| match convention {
            Convention::Ascending => i,
            Convention::Descending => n - 1 - i,
        };
        (0..n)
            .map(|i| (0..n).map(|j| self.mark(map(i), map(j))).collect())
            .collect()
    }
}

/// Marks by counting, for each pair of classes, the `x ∈ G` with
/// `x⁻¹ G_j x ≤ G_i`; that count is `|G_i|` times the number of fixed cosets.
pub fn table_of_marks(lattice: &SubgroupLattice, classes: &ConjugacyClassTable) -> Result<TableOfMarks> {
    let table = lattice.table();
    let size = classes.len();
    let reps = &classes.representatives;
    let rows: Vec<Result<Vec<u64>>> = (0..size)
        .into_par_iter()
        .map(|i| {
            let big = lattice.set(reps[i]);
            let big_order = lattice.order(reps[i]) as u64;
            let mut row = vec![0u64; size];
            for (j, slot) in row.iter_mut().enumerate() {
                let small_order = lattice.order(reps[j]) as u64;
                if big_order % small_order != 0 {
                    continue;
                }
                let gens = lattice.generators(reps[j]);
                let mut count = 0u64;
                for x in 0..table.order() as u32 {
                    let xi = table.inv(x);
                    if gens.iter().all(|&g| big.contains(table.conj(xi, g) as usize)) {
                        count += 1;
                    }
                }
                if count % big_order != 0 {
                    return Err(Error::Divisibility {
                        what: "fixed coset count",
                        total: count.to_string(),
                        divisor: big_order.to_string(),
                    });
                }
                *slot = count / big_order;
            }
            Ok(row)
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    TableOfMarks::from_marks(table.order() as u64, classes.orders.clone(), rows)
}

/// Exact inverse of a marks matrix, ascending convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksInverse {
    size: usize,
    entries: Vec<BigRational>,
}

impl MarksInverse {
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self, convention: Convention) -> Vec<Vec<BigRational>> {
        let n = self.size;
        let map = |i: usize| match convention {
            Convention::Ascending => i,
            Convention::Descending => n - 1 - i,
        };
        (0..n)
            .map(|i| (0..n).map(|j| self.get(map(i), map(j)).clone()).collect())
            .collect()
    }

    /// Whether `marks · self` is exactly the identity.
    pub fn is_inverse_of(&self, tom: &TableOfMarks) -> bool {
        let n = self.size;
        if tom.len() != n {
            return false;
        }
        (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                let mut s = BigRational::zero();
                for k in 0..n {
                    let m = tom.mark(i, k);
                    if m != 0 {
                        s += self.get(k, j) * BigInt::from(m);
                    }
                }
                s == if i == j { BigRational::one() } else { BigRational::zero() }
            })
        })
    }
}

/// Forward substitution on the lower-triangular ascending marks matrix.
pub fn invert_marks(tom: &TableOfMarks) -> Result<MarksInverse> {
    let n = tom.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if tom.mark(i, j) != 0 {
                return Err(Error::Inconsistency(format!(
                    "marks matrix is not triangular at ({i}, {j})"
                )));
            }
        }
        if tom.mark(i, i) == 0 {
            return Err(Error::Inconsistency(format!("zero diagonal mark at {i}")));
        }
    }
    // Columns are independent: X[i][j] for i ≥ j.
    let columns: Vec<Vec<BigRational>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut col = vec![BigRational::zero(); n];
            for i in j..n {
                let mut s = if i == j { BigRational::one() } else { BigRational::zero() };
                for (k, x) in col.iter().enumerate().take(i).skip(j) {
                    let m = tom.mark(i, k);
                    if m != 0 && !x.is_zero() {
                        s -= x * BigInt::from(m);
                    }
                }
                col[i] = s / BigInt::from(tom.mark(i, i));
            }
            col
        })
        .collect();
    let mut entries = vec![BigRational::zero(); n * n];
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            entries[i * n + j] = v;
        }
    }
    Ok(MarksInverse { size: n, entries })
}

/// `μ(1, H_i)` per class by recursion over classes in ascending order:
/// `μ(1, H) = -Σ_{K < H} μ(1, K)`, grouping the proper subgroups of each
/// representative by class.
pub fn bottom_moebius(classes: &ConjugacyClassTable) -> Vec<i64> {
    let mut mu = vec![0i64; classes.len()];
    for i in 0..classes.len() {
        if classes.orders[i] == 1 {
            mu[i] = 1;
            continue;
        }
        let s: i64 = classes.subs[i]
            .iter()
            .filter(|&&(j, _)| j != i)
            .map(|&(j, c)| c as i64 * mu[j])
            .sum();
        mu[i] = -s;
    }
    mu
}

/// `μ(1, H)` for every subgroup, from the Möbius function of the
/// containment poset. Builds the dense poset, so use on small lattices.
pub fn bottom_moebius_full(lattice: &SubgroupLattice) -> Result<Vec<i64>> {
    let poset = lattice.containment_poset()?;
    poset
        .moebius_row(lattice.trivial_index())
        .into_iter()
        .map(|m| {
            i64::try_from(m).map_err(|e| Error::Inconsistency(format!("Möbius value overflow: {e}")))
        })
        .collect()
}

/// `|N_G(H)| = |G| / length` for each class.
pub fn normalizer_orders(classes: &ConjugacyClassTable, group_order: u64) -> Vec<u64> {
    classes.lengths.iter().map(|&l| group_order / l).collect()
}

/// Looks up the canonical class of a subgroup given as a permutation group.
pub fn class_of_group(
    lattice: &SubgroupLattice,
    classes: &ConjugacyClassTable,
    h: &PermutationGroup,
) -> Option<usize> {
    lattice.index_of(h).map(|i| classes.class_of[i])
}

/// Element indices of a list of permutations in the lattice's group table.
pub fn element_indices(lattice: &SubgroupLattice, perms: &[Permutation]) -> Result<Vec<u32>> {
    perms
        .iter()
        .map(|p| lattice.table().index_of(p).ok_or(Error::NotInGroup))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::affine_group;
    use crate::perm::generate_group;

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn c2() -> PermutationGroup {
        generate_group(2, &[p(&[1, 0])]).unwrap()
    }

    fn s3() -> PermutationGroup {
        affine_group(3).unwrap()
    }

    #[test]
    fn small_lattices() {
        assert_eq!(enumerate_subgroups(&c2()).unwrap().len(), 2);
        let l = enumerate_subgroups(&s3()).unwrap();
        assert_eq!(l.len(), 6);
        let orders: Vec<usize> = (0..l.len()).map(|i| l.order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn non_solvable_fallback() {
        // A5 has 59 subgroups.
        let a5 = generate_group(5, &[p(&[1, 2, 3, 4, 0]), p(&[1, 2, 0, 3, 4])]).unwrap();
        let l = enumerate_subgroups(&a5).unwrap();
        assert_eq!(l.len(), 59);
        let cl = conjugacy_classes(&l);
        assert_eq!(cl.len(), 9);
    }

    #[test]
    fn order_cap() {
        let g = affine_group(12).unwrap();
        let err = enumerate_subgroups_with(&g, LatticeLimits { max_order: 40 });
        assert!(matches!(err, Err(Error::OrderCapExceeded { cap: 40, .. })));
    }

    #[test]
    fn s3_classes() {
        let l = enumerate_subgroups(&s3()).unwrap();
        let cl = conjugacy_classes(&l);
        assert_eq!(cl.lengths, vec![1, 3, 1, 1]);
        assert_eq!(cl.orders, vec![1, 2, 3, 6]);
        assert_eq!(cl.nrsubs(3, 1), 3);
        assert_eq!(cl.nrsubs(1, 0), 1);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let t = generate_group(12, &[crate::affine::affine_to_perm(&crate::affine::AffineMap::new(12, 1, 1).unwrap())])
            .unwrap();
        let l = enumerate_subgroups(&t).unwrap();
        let cl = conjugacy_classes(&l);
        assert!(cl.lengths.iter().all(|&x| x == 1));
        assert_eq!(l.len(), 6);
    }

    #[test]
    fn c2_marks_and_inverse() {
        let l = enumerate_subgroups(&c2()).unwrap();
        let cl = conjugacy_classes(&l);
        let tom = table_of_marks(&l, &cl).unwrap();
        assert_eq!(tom.rows(Convention::Descending), vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(tom.rows(Convention::Ascending), vec![vec![2, 0], vec![1, 1]]);
        let inv = invert_marks(&tom).unwrap();
        let half = |a: i64| BigRational::new(BigInt::from(a), BigInt::from(2));
        assert_eq!(
            inv.rows(Convention::Descending),
            vec![vec![half(2), half(-1)], vec![half(0), half(1)]]
        );
        assert!(inv.is_inverse_of(&tom));
    }

    #[test]
    fn s3_marks() {
        // Rows G/1, G/C2, G/C3, G/S3 against columns 1, C2, C3, S3,
        // by counting fixed cosets by hand.
        let l = enumerate_subgroups(&s3()).unwrap();
        let cl = conjugacy_classes(&l);
        let tom = table_of_marks(&l, &cl).unwrap();
        assert_eq!(
            tom.rows(Convention::Ascending),
            vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]]
        );
        let inv = invert_marks(&tom).unwrap();
        assert!(inv.is_inverse_of(&tom));
        for i in 0..4 {
            assert_eq!(
                *inv.get(i, i),
                BigRational::new(BigInt::one(), BigInt::from(tom.mark(i, i)))
            );
        }
    }

    #[test]
    fn bottom_moebius_examples() {
        let l = enumerate_subgroups(&s3()).unwrap();
        let cl = conjugacy_classes(&l);
        assert_eq!(bottom_moebius(&cl), vec![1, -1, -1, 3]);

        // Klein four group inside S4 acting on 4 points.
        let v4 = generate_group(4, &[p(&[1, 0, 3, 2]), p(&[2, 3, 0, 1])]).unwrap();
        let l = enumerate_subgroups(&v4).unwrap();
        let cl = conjugacy_classes(&l);
        let mu = bottom_moebius(&cl);
        assert_eq!(mu[0], 1);
        assert_eq!(*mu.last().unwrap(), 2);
        assert_eq!(bottom_moebius_full(&l).unwrap().last().copied(), Some(2));
    }

    #[test]
    fn full_and_class_moebius_agree() {
        for n in [6u64, 8, 10] {
            let l = enumerate_subgroups(&affine_group(n).unwrap()).unwrap();
            let cl = conjugacy_classes(&l);
            let by_class = bottom_moebius(&cl);
            let full = bottom_moebius_full(&l).unwrap();
            for (i, &m) in full.iter().enumerate() {
                assert_eq!(m, by_class[cl.class_of[i]], "n={n} subgroup {i}");
            }
        }
    }
}
