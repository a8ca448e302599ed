//! Module homomorphisms between finite Z/nZ-modules over the same ring.
//!
//! A homomorphism is fixed by one image per canonical source generator e_i;
//! it is well defined exactly when d_i * images[i] = 0 in the target. The
//! whole value table is materialized at construction, so images, preimages
//! and kernels are cheap scans.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::module::FiniteModule;
use crate::submodule::Submodule;

#[derive(Clone)]
pub struct ModuleHom {
    source: FiniteModule,
    target: FiniteModule,
    images: Vec<u16>,
    table: Vec<u16>,
    kernel: Mask,
    image: Mask,
}

impl ModuleHom {
    pub fn new(source: &FiniteModule, target: &FiniteModule, images: &[u16]) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if images.len() != source.factors().len() {
            return Err(Error::IllDefinedHom(format!(
                "expected {} generator images, got {}",
                source.factors().len(),
                images.len()
            )));
        }
        for (i, (&d, &img)) in source.factors().iter().zip(images).enumerate() {
            if img as usize >= target.order() {
                return Err(Error::IllDefinedHom(format!(
                    "image {img} out of range for the target"
                )));
            }
            if target.scalar_mul(d, img) != 0 {
                return Err(Error::IllDefinedHom(format!(
                    "generator {i} has order dividing {d} but its image does not"
                )));
            }
        }
        let mut table = vec![0u16; source.order()];
        for x in 0..source.order() as u16 {
            let coords = source.coords(x);
            let mut y = 0u16;
            for (i, &c) in coords.iter().enumerate() {
                y = target.add(y, target.scalar_mul(c, images[i]));
            }
            table[x as usize] = y;
        }
        let mut kernel = Mask::empty(source.order());
        let mut image = Mask::empty(target.order());
        for x in 0..source.order() {
            if table[x] == 0 {
                kernel.insert(x);
            }
            image.insert(table[x] as usize);
        }
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            images: images.to_vec(),
            table,
            kernel,
            image,
        })
    }

    pub fn identity(module: &FiniteModule) -> Self {
        let images: Vec<u16> = (0..module.factors().len())
            .map(|i| module.generator(i))
            .collect();
        ModuleHom::new(module, module, &images).expect("identity is well defined")
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn generator_images(&self) -> &[u16] {
        &self.images
    }

    pub fn apply(&self, x: u16) -> u16 {
        self.table[x as usize]
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.count() == 1
    }

    pub fn kernel(&self) -> Submodule {
        Submodule::from_mask_unchecked(&self.source, self.kernel.clone())
    }

    pub fn image(&self) -> Submodule {
        Submodule::from_mask_unchecked(&self.target, self.image.clone())
    }

    pub fn image_mask(&self) -> &Mask {
        &self.image
    }

    /// f(N) for N ≤ source.
    pub fn image_of(&self, n: &Submodule) -> Result<Submodule> {
        if n.module() != &self.source {
            return Err(Error::OwnerMismatch);
        }
        let mut mask = Mask::empty(self.target.order());
        for x in n.mask().iter_ones() {
            mask.insert(self.table[x] as usize);
        }
        Ok(Submodule::from_mask_unchecked(&self.target, mask))
    }

    /// f^{-1}(K) for K ≤ target.
    pub fn preimage_of(&self, k: &Submodule) -> Result<Submodule> {
        if k.module() != &self.target {
            return Err(Error::OwnerMismatch);
        }
        let mut mask = Mask::empty(self.source.order());
        for x in 0..self.source.order() {
            if k.mask().test(self.table[x] as usize) {
                mask.insert(x);
            }
        }
        Ok(Submodule::from_mask_unchecked(&self.source, mask))
    }
}

/// All homomorphisms source → target, in a deterministic order (generator
/// image tuples enumerated lexicographically).
pub fn all_homs(source: &FiniteModule, target: &FiniteModule) -> Result<Vec<ModuleHom>> {
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    let choices: Vec<Vec<u16>> = source
        .factors()
        .iter()
        .map(|&d| {
            target
                .torsion_mask(d)
                .iter_ones()
                .map(|x| x as u16)
                .collect()
        })
        .collect();
    let mut homs = Vec::new();
    let k = choices.len();
    let mut picks = vec![0usize; k];
    loop {
        let images: Vec<u16> = picks.iter().enumerate().map(|(i, &p)| choices[i][p]).collect();
        homs.push(ModuleHom::new(source, target, &images).expect("torsion-checked images"));
        // Odometer increment over the choice lists.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(homs);
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < choices[i].len() {
                break;
            }
            picks[i] = 0;
        }
    }
}

/// All injective homomorphisms source → target.
pub fn monomorphisms(source: &FiniteModule, target: &FiniteModule) -> Result<Vec<ModuleHom>> {
    Ok(all_homs(source, target)?
        .into_iter()
        .filter(|h| h.is_injective())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_z2_into_z4() {
        let z2 = FiniteModule::from_descriptor("Z4[2]").unwrap();
        let z4 = FiniteModule::from_descriptor("Z4[4]").unwrap();
        let f = ModuleHom::new(&z2, &z4, &[2]).unwrap();
        assert!(f.is_injective());
        assert_eq!(f.image().element_tuples(), vec![vec![0], vec![2]]);
        // 1 ↦ 1 is not well defined: 2·1 ≠ 0
        assert!(matches!(
            ModuleHom::new(&z2, &z4, &[1]),
            Err(Error::IllDefinedHom(_))
        ));
    }

    #[test]
    fn identity_hom() {
        let m = FiniteModule::from_descriptor("Z6[6]").unwrap();
        let id = ModuleHom::identity(&m);
        assert!(id.is_injective());
        assert!(id.image().is_whole());
        for x in 0..6u16 {
            assert_eq!(id.apply(x), x);
        }
    }

    #[test]
    fn image_and_preimage() {
        let z2 = FiniteModule::from_descriptor("Z4[2]").unwrap();
        let z4 = FiniteModule::from_descriptor("Z4[4]").unwrap();
        let f = ModuleHom::new(&z2, &z4, &[2]).unwrap();
        let img = f.image_of(&Submodule::whole(&z2)).unwrap();
        assert_eq!(img.element_tuples(), vec![vec![0], vec![2]]);
        let pre = f.preimage_of(&img).unwrap();
        assert!(pre.is_whole());
    }

    #[test]
    fn doubling_on_z6_has_kernel_two() {
        let m = FiniteModule::from_descriptor("Z6[6]").unwrap();
        let f = ModuleHom::new(&m, &m, &[2]).unwrap();
        assert!(!f.is_injective());
        let pre = f.preimage_of(&Submodule::zero(&m)).unwrap();
        assert_eq!(pre.element_tuples(), vec![vec![0], vec![3]]);
    }

    #[test]
    fn preimage_cardinality_law() {
        let m = FiniteModule::from_descriptor("Z6[6]").unwrap();
        let f = ModuleHom::new(&m, &m, &[2]).unwrap();
        let lat = crate::lattice::SubmoduleLattice::enumerate(&m, &Default::default()).unwrap();
        for k in lat.iter() {
            let pre = f.preimage_of(k).unwrap();
            let im_cap = k.intersection(&f.image()).unwrap();
            assert_eq!(pre.order(), im_cap.order() * f.kernel().order());
        }
    }

    #[test]
    fn hom_enumeration_counts() {
        let z22 = FiniteModule::from_descriptor("Z2[2,2]").unwrap();
        // Hom(Z2^2, Z2^2) = all 2x2 matrices over F2
        assert_eq!(all_homs(&z22, &z22).unwrap().len(), 16);
        // GL(2,2) has order 6
        assert_eq!(monomorphisms(&z22, &z22).unwrap().len(), 6);
        let z2 = FiniteModule::from_descriptor("Z2[2]").unwrap();
        assert_eq!(monomorphisms(&z2, &z22).unwrap().len(), 3);
    }

    #[test]
    fn cross_ring_homs_are_rejected() {
        let a = FiniteModule::from_descriptor("Z2[2]").unwrap();
        let b = FiniteModule::from_descriptor("Z4[4]").unwrap();
        assert!(matches!(all_homs(&a, &b), Err(Error::RingMismatch)));
    }
}
