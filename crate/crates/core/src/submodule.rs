//! Submodules as canonical membership masks.
//!
//! Closure under addition already gives closure under the Z/nZ scalar
//! action, since the action of r is r-fold repeated addition. Closures are
//! therefore computed as subgroup closures.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::module::FiniteModule;
use crate::ring::Ideal;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    module: FiniteModule,
    mask: Mask,
}

impl Submodule {
    pub fn zero(module: &FiniteModule) -> Self {
        Submodule {
            module: module.clone(),
            mask: Mask::singleton(module.order(), 0),
        }
    }

    pub fn whole(module: &FiniteModule) -> Self {
        Submodule {
            module: module.clone(),
            mask: Mask::full(module.order()),
        }
    }

    /// Wraps a mask that is already known to be closed.
    pub(crate) fn from_mask_unchecked(module: &FiniteModule, mask: Mask) -> Self {
        debug_assert!(mask.test(0));
        debug_assert!(is_closed_mask(module, &mask));
        Submodule {
            module: module.clone(),
            mask,
        }
    }

    /// Smallest submodule containing the given elements.
    pub fn generated_by<I: IntoIterator<Item = u16>>(module: &FiniteModule, gens: I) -> Self {
        let mut seed = Mask::empty(module.order());
        for g in gens {
            seed.insert(g as usize);
        }
        Submodule {
            module: module.clone(),
            mask: closure_mask(module, &seed),
        }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn order(&self) -> usize {
        self.mask.count()
    }

    pub fn is_zero(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.module.order()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.mask.test(x as usize)
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        self.mask.is_subset_of(&other.mask)
    }

    fn check_owner(&self, other: &Submodule) -> Result<()> {
        if self.module != other.module {
            return Err(Error::OwnerMismatch);
        }
        Ok(())
    }

    /// Smallest submodule containing both operands.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_owner(other)?;
        let seed = self.mask.union(&other.mask);
        Ok(Submodule {
            module: self.module.clone(),
            mask: closure_mask(&self.module, &seed),
        })
    }

    /// Largest submodule contained in both operands.
    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        self.check_owner(other)?;
        Ok(Submodule {
            module: self.module.clone(),
            mask: self.mask.intersection(&other.mask),
        })
    }

    /// Image of self under the scalar action of r; again a submodule.
    pub fn scalar_image(&self, r: u64) -> Submodule {
        let mut img = Mask::empty(self.module.order());
        for x in self.mask.iter_ones() {
            img.insert(self.module.scalar_mul(r, x as u16) as usize);
        }
        Submodule {
            module: self.module.clone(),
            mask: img,
        }
    }

    /// The full annihilator {r : rN = 0} as an ideal; its generator is the
    /// least positive scalar killing N (the exponent of N).
    pub fn annihilator(&self) -> Ideal {
        let module = &self.module;
        let exp = module.exponent();
        for e in 1..=exp {
            if exp % e != 0 {
                continue;
            }
            if self
                .mask
                .iter_ones()
                .all(|x| module.scalar_mul(e, x as u16) == 0)
            {
                return module.ring().ideal_generated_by(e);
            }
        }
        // exp kills everything, so the loop always returns.
        unreachable!("module exponent annihilates every submodule")
    }

    /// (K :_M I) = {m : Im ⊆ K}. For principal I = (d) this is (K :_M d).
    pub fn colon_by_ideal(&self, ideal: &Ideal) -> Submodule {
        self.colon_by_scalar(ideal.generator())
    }

    /// (K :_M r) = {m : rm ∈ K}.
    pub fn colon_by_scalar(&self, r: u64) -> Submodule {
        let module = &self.module;
        let mut mask = Mask::empty(module.order());
        for x in 0..module.order() as u16 {
            if self.mask.test(module.scalar_mul(r, x) as usize) {
                mask.insert(x as usize);
            }
        }
        Submodule {
            module: module.clone(),
            mask,
        }
    }

    /// (N :_R M) = {r : rM ⊆ N} as an ideal of the ring.
    pub fn colon_in_ring(&self) -> Ideal {
        let module = &self.module;
        let exp = module.exponent();
        for e in 1..=exp {
            if exp % e != 0 {
                continue;
            }
            let ok = (0..module.order() as u16).all(|x| self.mask.test(module.scalar_mul(e, x) as usize));
            if ok {
                return module.ring().ideal_generated_by(e);
            }
        }
        unreachable!("module exponent maps everything to zero")
    }

    /// Member coordinates in enumeration order.
    pub fn element_tuples(&self) -> Vec<Vec<u64>> {
        self.mask
            .iter_ones()
            .map(|x| self.module.coords(x as u16))
            .collect()
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mask.cmp(&other.mask)
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{:?} ≤ {}⟩", self.mask, self.module.descriptor())
    }
}

/// Subgroup closure of a seed set (always contains 0).
pub(crate) fn closure_mask(module: &FiniteModule, seed: &Mask) -> Mask {
    let order = module.order();
    let mut result = Mask::empty(order);
    result.insert(0);
    let mut members: Vec<u16> = vec![0];
    let mut pending: Vec<u16> = seed.iter_ones().map(|x| x as u16).collect();
    while let Some(x) = pending.pop() {
        if result.test(x as usize) {
            continue;
        }
        result.insert(x as usize);
        // Sums with earlier members; later members pick up x when they land.
        for i in 0..members.len() {
            let s = module.add(x, members[i]);
            if !result.test(s as usize) {
                pending.push(s);
            }
        }
        let dbl = module.add(x, x);
        if !result.test(dbl as usize) {
            pending.push(dbl);
        }
        members.push(x);
    }
    result
}

/// Closure of an already-closed mask extended by one generator:
/// S + ⟨x⟩ = ∪_k (S + kx).
pub(crate) fn extend_closed_mask(module: &FiniteModule, closed: &Mask, x: u16) -> Mask {
    let mut result = closed.clone();
    let mut shift = x;
    while !closed.test(shift as usize) {
        for y in closed.iter_ones() {
            result.insert(module.add(shift, y as u16) as usize);
        }
        shift = module.add(shift, x);
    }
    result
}

/// Definitional closure check, used by oracles and debug assertions.
pub fn is_closed_mask(module: &FiniteModule, mask: &Mask) -> bool {
    if !mask.test(0) {
        return false;
    }
    let members: Vec<u16> = mask.iter_ones().map(|x| x as u16).collect();
    for &a in &members {
        for &b in &members {
            if !mask.test(module.add(a, b) as usize) {
                return false;
            }
        }
    }
    for r in 0..module.exponent() {
        for &a in &members {
            if !mask.test(module.scalar_mul(r, a) as usize) {
                return false;
            }
        }
    }
    true
}
