//! The affine group `Aff(Z/nZ)` as a permutation group on residues.
//!
//! `AffineMap { u, v }` is the map `x ↦ v·x + u`, written `e^u.v`.
//! Composition follows the crate convention (right factor first):
//! `e^u.v ∘ e^s.t = e^(u + v·s).(v·t)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::{generate_group_capped, Permutation, PermutationGroup, DEFAULT_MAX_ORDER};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    modulus: u64,
    u: u64,
    v: u64,
}

impl AffineMap {
    pub fn new(modulus: u64, u: u64, v: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let (u, v) = (u % modulus, v % modulus);
        if v.gcd(&modulus) != 1 {
            return Err(Error::NotAUnit { n: modulus, v });
        }
        Ok(AffineMap { modulus, u, v })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Translation part `u`.
    pub fn translation(&self) -> u64 {
        self.u
    }

    /// Multiplier `v`.
    pub fn multiplier(&self) -> u64 {
        self.v
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        (self.v * x + self.u) % self.modulus
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.modulus != other.modulus {
            return Err(Error::DegreeMismatch {
                left: self.modulus as usize,
                right: other.modulus as usize,
            });
        }
        let n = self.modulus;
        Ok(AffineMap {
            modulus: n,
            u: (self.u + self.v * other.u) % n,
            v: (self.v * other.v) % n,
        })
    }

    pub fn to_perm(&self) -> Permutation {
        affine_to_perm(self)
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{}.{} (mod {})", self.u, self.v, self.modulus)
    }
}

/// The permutation `x ↦ (v·x + u) mod n` of the residues `0..n`.
pub fn affine_to_perm(m: &AffineMap) -> Permutation {
    Permutation::from_images_unchecked((0..m.modulus).map(|x| m.apply(x) as u32).collect())
}

/// Units of `Z/nZ` in increasing order.
pub fn units(n: u64) -> Vec<u64> {
    (0..n).filter(|v| v.gcd(&n) == 1).collect()
}

/// Euler's totient by counting units.
pub fn euler_phi(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    units(n).len() as u64
}

fn unit_generators(n: u64) -> Vec<Permutation> {
    units(n)
        .into_iter()
        .map(|v| affine_to_perm(&AffineMap { modulus: n, u: 0, v }))
        .collect()
}

/// All `n·φ(n)` maps `e^u.v`, sorted by `(u, v)`.
pub fn all_affine_maps(n: u64) -> Vec<AffineMap> {
    let us = units(n);
    (0..n)
        .flat_map(|u| us.iter().map(move |&v| AffineMap { modulus: n, u, v }))
        .collect()
}

pub fn affine_group(n: u64) -> Result<PermutationGroup> {
    affine_group_capped(n, DEFAULT_MAX_ORDER)
}

/// `Aff(Z/nZ) = ⟨e^1.1, e^0.v : v a unit⟩`.
pub fn affine_group_capped(n: u64, cap: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut gens = vec![affine_to_perm(&AffineMap { modulus: n, u: 1 % n, v: 1 % n })];
    gens.extend(unit_generators(n));
    generate_group_capped(n as usize, &gens, cap)
}

pub fn k0_subgroup(n: u64) -> Result<PermutationGroup> {
    k0_subgroup_capped(n, DEFAULT_MAX_ORDER)
}

/// `K0 = ⟨e^2.1, e^0.v⟩`: the maps with even translation part.
pub fn k0_subgroup_capped(n: u64, cap: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n % 2 == 1 {
        return Err(Error::OddModulus(n));
    }
    let mut gens = vec![affine_to_perm(&AffineMap { modulus: n, u: 2 % n, v: 1 % n })];
    gens.extend(unit_generators(n));
    generate_group_capped(n as usize, &gens, cap)
}

/// Affine involutions without fixed points, sorted by `(u, v)`.
pub fn quasipolarities(n: u64) -> Result<Vec<AffineMap>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n % 2 == 1 {
        return Err(Error::OddModulus(n));
    }
    Ok(all_affine_maps(n)
        .into_iter()
        .filter(|m| {
            let p = affine_to_perm(m);
            p.fixed_points() == 0 && p.compose_unchecked(&p).is_identity()
        })
        .collect())
}

pub fn is_quasipolarity(m: &AffineMap) -> bool {
    let p = affine_to_perm(m);
    p.fixed_points() == 0 && p.compose_unchecked(&p).is_identity()
}

/// Recovers `(u, v)` from an affine permutation: `u = p(0)`, `v = p(1) - p(0)`.
pub fn perm_to_affine(p: &Permutation) -> Option<AffineMap> {
    let n = p.degree() as u64;
    let u = p.apply(0) as u64;
    let v = if n == 1 { 0 } else { (p.apply(1) as u64 + n - u) % n };
    let m = AffineMap::new(n, u, v).ok()?;
    (affine_to_perm(&m) == *p).then_some(m)
}
