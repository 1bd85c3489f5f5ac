//! Permutations of `{0, .., n-1}` and small permutation groups.
//!
//! Composition convention: `p.compose(&q)` is `p ∘ q`, i.e. the map
//! `x ↦ p(q(x))`. The right-hand factor acts first, everywhere in this crate.
//!
//! Groups are materialized as their complete sorted element list. Two groups
//! are equal exactly when their element lists are equal; generators are only
//! bookkeeping.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the order of any group built by closure.
pub const DEFAULT_MAX_ORDER: usize = 2000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::NotAPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::NotAPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// `g p g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Image of a point set, returned sorted.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut img: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        img.sort_unstable();
        img
    }

    /// Image of a point set given as a bitmask (degree ≤ 64).
    #[inline]
    pub fn image_of_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            out |= 1u64 << self.images[x];
            m &= m - 1;
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// `p ∘ q` (apply `q` first).
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl std::hash::Hash for PermutationGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted lexicographically by image list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Builds a group from a complete element list, checking closure.
    /// A small generating set is chosen greedily.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        for p in &elements {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        let lookup: HashSet<&Permutation> = elements.iter().collect();
        if !lookup.contains(&Permutation::identity(degree)) {
            return Err(Error::Inconsistency("element list lacks the identity".into()));
        }
        for a in &elements {
            for b in &elements {
                if !lookup.contains(&a.compose_unchecked(b)) {
                    return Err(Error::Inconsistency(
                        "element list is not closed under composition".into(),
                    ));
                }
            }
        }
        drop(lookup);
        Ok(Self::from_sorted_elements(degree, elements))
    }

    /// `elements` must already be a sorted, closed subgroup.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut generators = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = closure(degree, &generators, usize::MAX)
                    .expect("uncapped closure")
                    .into_iter()
                    .collect();
            }
        }
        PermutationGroup {
            degree,
            generators,
            elements,
        }
    }

    /// H-orbits on `{0, .., n-1}`, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut orbit = vec![start];
            label[start] = id;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits().iter().map(Vec::len).collect()
    }

    /// `{g ∈ self : g(set) = set}`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermutationGroup> {
        let mut target: Vec<usize> = set.to_vec();
        target.sort_unstable();
        target.dedup();
        if let Some(&bad) = target.iter().find(|&&x| x >= self.degree) {
            return Err(Error::NotAPermutation(format!(
                "point {bad} outside 0..{}",
                self.degree
            )));
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| g.image_of_set(&target) == target)
            .cloned()
            .collect();
        Ok(Self::from_sorted_elements(self.degree, elements))
    }

    /// True iff every element of `h` lies in `self`.
    pub fn is_subgroup(&self, h: &PermutationGroup) -> Result<bool> {
        if self.degree != h.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: h.degree,
            });
        }
        Ok(h.order() <= self.order() && h.elements.iter().all(|e| self.contains(e)))
    }

    /// `⟨h, extra⟩`, which must lie inside `self`.
    pub fn join(&self, h: &PermutationGroup, extra: &[Permutation]) -> Result<PermutationGroup> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: h.degree,
            });
        }
        for p in extra {
            if p.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: p.degree(),
                });
            }
            if !self.contains(p) {
                return Err(Error::NotInGroup);
            }
        }
        let mut gens = h.generators.clone();
        gens.extend(extra.iter().filter(|p| !p.is_identity()).cloned());
        generate_group_capped(self.degree, &gens, self.order())
    }

    /// `x ∘ self ∘ x⁻¹` element for element.
    pub fn conjugate(&self, x: &Permutation) -> Result<PermutationGroup> {
        let xi = x.inverse();
        let mut elements = Vec::with_capacity(self.order());
        for e in &self.elements {
            elements.push(x.compose(e)?.compose_unchecked(&xi));
        }
        elements.sort();
        let generators = self
            .generators
            .iter()
            .map(|g| x.compose_unchecked(g).compose_unchecked(&xi))
            .collect();
        Ok(PermutationGroup {
            degree: self.degree,
            generators,
            elements,
        })
    }
}

fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let next = g.compose_unchecked(&e);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::OrderCapExceeded {
                        cap,
                        reached: seen.len() + 1,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `⟨gens⟩` with the default order cap.
pub fn generate_group(degree: usize, gens: &[Permutation]) -> Result<PermutationGroup> {
    generate_group_capped(degree, gens, DEFAULT_MAX_ORDER)
}

/// `⟨gens⟩`, failing once the closure grows beyond `cap` elements.
pub fn generate_group_capped(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<PermutationGroup> {
    if degree == 0 {
        return Err(Error::NotAPermutation("degree must be at least 1".into()));
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let generators: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let elements = closure(degree, &generators, cap)?;
    Ok(PermutationGroup {
        degree,
        generators,
        elements,
    })
}
