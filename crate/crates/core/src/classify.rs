//! Module classification predicates, each computed by literal
//! quantification over the lattice and spectrum.

use crate::lattice::SubmoduleLattice;
use crate::mask::Mask;
use crate::spectrum::{is_second, prime_submodules, socle, SecondSpectrum};
use crate::submodule::Submodule;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub is_second_module: bool,
    pub is_semisimple: bool,
    pub is_cosemisimple: bool,
    pub is_comultiplication: bool,
    pub is_weak_comultiplication: bool,
    pub is_cotop: bool,
    pub satisfies_star: bool,
    pub satisfies_star_star: bool,
    pub is_fully_semisecond: bool,
    pub is_fully_semiprime: bool,
    pub is_cocyclic: bool,
    /// True by construction for every finite module; kept for report fidelity.
    pub is_finitely_cogenerated: bool,
}

/// N = (0 :_M Ann(N)).
fn is_comultiplication_witnessed(n: &Submodule) -> bool {
    let ann = n.annihilator();
    let back = Submodule::zero(n.module()).colon_by_ideal(&ann);
    back == *n
}

/// rN = r²N for every scalar r.
fn is_semisecond(n: &Submodule) -> bool {
    let module = n.module();
    let exp = module.exponent();
    (0..exp).all(|r| {
        let rn = n.scalar_image(r);
        let r2n = rn.scalar_image(r);
        rn == r2n
    })
}

/// P is semiprime: I²N ⊆ P forces IN ⊆ P, for every ideal I and N ≤ M.
fn is_semiprime(p: &Submodule, lattice: &SubmoduleLattice) -> bool {
    let ring = p.module().ring().clone();
    for ideal in ring.iter_ideals() {
        let sq = ideal.product(&ideal);
        if sq == ideal {
            // I²N = IN, nothing to check.
            continue;
        }
        for n in lattice.iter() {
            let i2n = n.scalar_image(sq.generator());
            if i2n.mask().is_subset_of(p.mask()) {
                let in_ = n.scalar_image(ideal.generator());
                if !in_.mask().is_subset_of(p.mask()) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn classify(lattice: &SubmoduleLattice, spectrum: &SecondSpectrum) -> ClassificationFlags {
    let module = lattice.module();
    let whole = Submodule::whole(module);

    let is_second_module = is_second(&whole);

    // M equals the sum of its minimal submodules.
    let minimal = lattice.minimal_nonzero();
    let classical_socle = {
        let mut seed = Mask::empty(module.order());
        seed.insert(0);
        for &i in &minimal {
            seed.union_with(lattice.get(i).mask());
        }
        Submodule::from_mask_unchecked(module, crate::submodule::closure_mask(module, &seed))
    };
    let is_semisimple = classical_socle.is_whole();

    // Every proper submodule is an intersection of maximal submodules.
    let maximal = lattice.maximal_proper();
    let is_cosemisimple = lattice.iter().filter(|n| !n.is_whole()).all(|n| {
        let mut meet = Mask::full(module.order());
        for &mi in &maximal {
            let m = lattice.get(mi);
            if n.mask().is_subset_of(m.mask()) {
                meet.intersect_with(m.mask());
            }
        }
        meet == *n.mask()
    });

    let is_comultiplication = lattice.iter().all(is_comultiplication_witnessed);
    let is_weak_comultiplication = spectrum.points().iter().all(is_comultiplication_witnessed);

    // (**): N ↦ V^{s*}(N) is injective on the lattice.
    let satisfies_star_star = {
        let mut seen: HashMap<Mask, usize> = HashMap::new();
        let mut ok = true;
        for (i, n) in lattice.iter().enumerate() {
            let v = spectrum.v_star(n);
            if seen.insert(v.mask().clone(), i).is_some() {
                ok = false;
                break;
            }
        }
        ok
    };

    // (*): N ↦ V(N) over prime submodules is injective on the lattice.
    let primes = prime_submodules(lattice);
    let satisfies_star = {
        let mut seen: HashMap<Mask, usize> = HashMap::new();
        let mut ok = true;
        for (i, n) in lattice.iter().enumerate() {
            let mut v = Mask::empty(primes.len());
            for (pi, &p) in primes.iter().enumerate() {
                if n.mask().is_subset_of(lattice.get(p).mask()) {
                    v.insert(pi);
                }
            }
            if seen.insert(v, i).is_some() {
                ok = false;
                break;
            }
        }
        ok
    };

    // {V^{s*}(N)} closed under pairwise unions.
    let is_cotop = {
        let mut v_masks: Vec<Mask> = lattice.iter().map(|n| spectrum.v_star(n).mask().clone()).collect();
        v_masks.sort();
        v_masks.dedup();
        let family: std::collections::HashSet<&Mask> = v_masks.iter().collect();
        let mut ok = true;
        'outer: for i in 0..v_masks.len() {
            for j in i + 1..v_masks.len() {
                let u = v_masks[i].union(&v_masks[j]);
                if !family.contains(&u) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };

    let is_fully_semisecond = lattice
        .iter()
        .filter(|n| !n.is_zero())
        .all(is_semisecond);

    let is_fully_semiprime = lattice
        .iter()
        .filter(|n| !n.is_whole())
        .all(|p| is_semiprime(p, lattice));

    // Classical socle simple and contained in every nonzero submodule.
    let is_cocyclic = {
        let simple = !classical_socle.is_zero()
            && lattice
                .iter()
                .filter(|k| !k.is_zero() && k.mask().is_subset_of(classical_socle.mask()))
                .count()
                == 1;
        simple
            && lattice
                .iter()
                .filter(|k| !k.is_zero())
                .all(|k| classical_socle.mask().is_subset_of(k.mask()))
    };

    ClassificationFlags {
        is_second_module,
        is_semisimple,
        is_cosemisimple,
        is_comultiplication,
        is_weak_comultiplication,
        is_cotop,
        satisfies_star,
        satisfies_star_star,
        is_fully_semisecond,
        is_fully_semiprime,
        is_cocyclic,
        is_finitely_cogenerated: true,
    }
}

/// soc(N) = N for every nonzero N; equivalent to (**) by the socle
/// characterization and used as its independent second route.
pub fn every_nonzero_is_socle(lattice: &SubmoduleLattice, spectrum: &SecondSpectrum) -> bool {
    lattice
        .iter()
        .filter(|n| !n.is_zero())
        .all(|n| socle(n, spectrum) == *n)
}
