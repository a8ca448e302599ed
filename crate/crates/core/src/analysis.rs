//! Per-module analysis context: lattice, spectrum, topologies and flags
//! computed once and shared by every consumer.

use crate::classify::{classify, ClassificationFlags};
use crate::error::Result;
use crate::lattice::{Caps, SubmoduleLattice};
use crate::module::FiniteModule;
use crate::spectrum::{prime_submodules, socle, SecondSpectrum};
use crate::submodule::Submodule;
use crate::topology::{patch_topology, psi_map, second_zariski, FiniteTopology, PsiMap};
use std::sync::OnceLock;

pub struct ModuleAnalysis {
    module: FiniteModule,
    caps: Caps,
    lattice: SubmoduleLattice,
    spectrum: SecondSpectrum,
    zariski: OnceLock<FiniteTopology>,
    patch: OnceLock<FiniteTopology>,
    flags: OnceLock<ClassificationFlags>,
    primes: OnceLock<Vec<usize>>,
    psi: OnceLock<Result<PsiMap>>,
}

impl ModuleAnalysis {
    pub fn new(module: &FiniteModule, caps: &Caps) -> Result<Self> {
        let lattice = SubmoduleLattice::enumerate(module, caps)?;
        let spectrum = SecondSpectrum::compute(&lattice);
        Ok(ModuleAnalysis {
            module: module.clone(),
            caps: *caps,
            lattice,
            spectrum,
            zariski: OnceLock::new(),
            patch: OnceLock::new(),
            flags: OnceLock::new(),
            primes: OnceLock::new(),
            psi: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn spectrum(&self) -> &SecondSpectrum {
        &self.spectrum
    }

    pub fn zariski(&self) -> &FiniteTopology {
        self.zariski
            .get_or_init(|| second_zariski(&self.lattice, &self.spectrum))
    }

    pub fn patch(&self) -> &FiniteTopology {
        self.patch.get_or_init(|| patch_topology(self.zariski()))
    }

    pub fn flags(&self) -> &ClassificationFlags {
        self.flags
            .get_or_init(|| classify(&self.lattice, &self.spectrum))
    }

    /// Lattice indices of the prime submodules.
    pub fn primes(&self) -> &[usize] {
        self.primes
            .get_or_init(|| prime_submodules(&self.lattice))
    }

    pub fn psi(&self) -> &Result<PsiMap> {
        self.psi
            .get_or_init(|| psi_map(&self.spectrum, &self.caps))
    }

    pub fn socle_of_module(&self) -> Submodule {
        socle(&Submodule::whole(&self.module), &self.spectrum)
    }
}
