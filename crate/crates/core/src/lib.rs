//! Second spectra of finite modules over Z/nZ.
//!
//! The crate enumerates submodule lattices of finite Z/nZ-modules, computes
//! their second spectra, builds the second classical Zariski topology and
//! the finer patch topology as finite topologies, decides the associated
//! module-theoretic and topological predicates, and replays a registry of
//! structural theorems over exhaustive corpora of small modules.

pub mod classify;
pub mod error;
pub mod hom;
pub mod lattice;
pub mod mask;
pub mod module;
pub mod ring;
pub mod spectrum;
pub mod submodule;
pub mod topology;

pub use classify::{classify, ClassificationFlags};
pub use error::{Error, Result};
pub use hom::ModuleHom;
pub use lattice::{Caps, SubmoduleLattice};
pub use mask::Mask;
pub use module::{parse_descriptor, FiniteModule};
pub use ring::{CyclicRing, Ideal};
pub use spectrum::{is_second, is_second_via_colon, socle, PointSet, SecondSpectrum};
pub use submodule::Submodule;
pub use topology::{
    is_continuous, lemma31_bijection_check, nu_map, patch_topology, psi_map, second_zariski,
    FiniteTopology, PointMap, Provenance, SeparationFlags, SpectralReport,
};
