//! Finite topologies over spectrum points, plus the spectrum-specific
//! constructions: the second classical Zariski topology, the finer patch
//! topology, the ring-spectrum target of ψ, and the point maps ψ and ν.
//!
//! A finite topology is determined by its specialization preorder
//! x ≤ y ⟺ x ∈ cl({y}): the closed sets are exactly the down-closed point
//! sets, and cl({y}) is the intersection of the sub-basic closed sets
//! containing y. The engine therefore stores `below[y] = cl({y})` and
//! answers every predicate from it; the explicit closed family is
//! materialized on top when it fits the requested cap, since its size is
//! exponential in the width of the preorder.

use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::lattice::{Caps, SubmoduleLattice};
use crate::mask::Mask;
use crate::ring::{CyclicRing, Ideal};
use crate::spectrum::SecondSpectrum;
use crate::submodule::Submodule;
use serde::Serialize;
use std::collections::HashMap;

/// Families up to this size are materialized eagerly during analysis;
/// explicit generation accepts any cap from [`Caps`].
const AUTO_FAMILY_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    SecondZariski,
    Patch,
    RingSpectrum,
    Custom,
}

#[derive(Clone)]
pub struct FiniteTopology {
    ground: usize,
    provenance: Provenance,
    below: Vec<Mask>,
    below_count: Vec<usize>,
    family: Option<Vec<Mask>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationFlags {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub discrete: bool,
    pub cofinite: bool,
}

#[derive(Clone, Debug)]
pub struct IrreducibleClosed {
    pub set: Mask,
    pub generic_points: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum SpectralFailure {
    T0Violation(usize, usize),
    MissingGenericPoint(Mask),
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub is_t0: bool,
    pub irreducible_closed: Vec<IrreducibleClosed>,
    pub is_spectral: bool,
    pub failure_witness: Option<SpectralFailure>,
    /// Quasi-compactness of the space and of a basis of opens holds
    /// automatically on finite ground sets; recorded, not recomputed.
    pub quasi_compactness_automatic: bool,
}

fn below_from_closed_subbasis(ground: usize, subbasis: &[Mask]) -> Vec<Mask> {
    // Empty intersection convention: points in no sub-basic set close up to
    // the whole space.
    let mut below = vec![Mask::full(ground); ground];
    for b in subbasis {
        for y in b.iter_ones() {
            below[y].intersect_with(b);
        }
    }
    below
}

/// All down-closed sets of the preorder, or None when there are more than
/// `limit`. Equivalence classes (x ≤ y ≤ x) are collapsed first so cyclic
/// preorders enumerate correctly.
fn enumerate_downsets(below: &[Mask], limit: usize) -> Option<Vec<Mask>> {
    let ground = below.len();
    if ground == 0 {
        return Some(vec![Mask::empty(0)]);
    }
    // x ≡ y ⟺ identical closures.
    let mut class_ids: HashMap<&Mask, usize> = HashMap::new();
    let mut class_rep: Vec<usize> = Vec::new();
    let mut class_of = vec![0usize; ground];
    for x in 0..ground {
        let next = class_rep.len();
        let id = *class_ids.entry(&below[x]).or_insert(next);
        if id == next {
            class_rep.push(x);
        }
        class_of[x] = id;
    }
    let nc = class_rep.len();
    let mut class_order: Vec<usize> = (0..nc).collect();
    // Ascending closure size is a linear extension of the quotient poset.
    class_order.sort_by(|&a, &b| below[class_rep[a]].cmp(&below[class_rep[b]]));

    let mut class_bits = vec![Mask::empty(ground); nc];
    for x in 0..ground {
        class_bits[class_of[x]].insert(x);
    }

    // req[c] = classes strictly below c, as a mask over class positions in
    // `class_order`.
    let mut pos_of_class = vec![0usize; nc];
    for (pos, &c) in class_order.iter().enumerate() {
        pos_of_class[c] = pos;
    }
    let mut req = vec![Mask::empty(nc); nc];
    for (pos, &c) in class_order.iter().enumerate() {
        for x in below[class_rep[c]].iter_ones() {
            let cx = class_of[x];
            if cx != c {
                req[pos].insert(pos_of_class[cx]);
            }
        }
    }

    // Prefix doubling: after step i, `sets` holds the down-sets of the
    // first i classes.
    let mut sets: Vec<Mask> = vec![Mask::empty(nc)];
    for pos in 0..nc {
        let mut extended = Vec::new();
        for s in &sets {
            if req[pos].is_subset_of(s) {
                let mut t = s.clone();
                t.insert(pos);
                extended.push(t);
            }
        }
        sets.extend(extended);
        if sets.len() > limit {
            return None;
        }
    }

    let mut family: Vec<Mask> = sets
        .into_iter()
        .map(|class_mask| {
            let mut m = Mask::empty(ground);
            for pos in class_mask.iter_ones() {
                m.union_with(&class_bits[class_order[pos]]);
            }
            m
        })
        .collect();
    family.sort();
    family.dedup();
    Some(family)
}

impl FiniteTopology {
    /// Explicit generation from a closed sub-basis: the smallest closed
    /// family containing the sub-basis, ∅ and the full set, closed under
    /// pairwise unions and intersections. Errors when the family would
    /// exceed `caps.max_closed_sets`.
    pub fn generate(
        ground: usize,
        closed_subbasis: &[Mask],
        caps: &Caps,
        provenance: Provenance,
    ) -> Result<Self> {
        for b in closed_subbasis {
            if b.len() != ground {
                return Err(Error::GroundMismatch);
            }
        }
        let below = below_from_closed_subbasis(ground, closed_subbasis);
        let family = enumerate_downsets(&below, caps.max_closed_sets).ok_or(Error::Capacity {
            what: "closed family size",
            limit: caps.max_closed_sets,
        })?;
        let below_count = below.iter().map(Mask::count).collect();
        Ok(FiniteTopology {
            ground,
            provenance,
            below,
            below_count,
            family: Some(family),
        })
    }

    /// Generation for internal analyses: never fails, materializing the
    /// family only when it stays small.
    pub fn from_closed_subbasis(
        ground: usize,
        closed_subbasis: &[Mask],
        provenance: Provenance,
    ) -> Self {
        let below = below_from_closed_subbasis(ground, closed_subbasis);
        Self::from_below(ground, below, provenance)
    }

    fn from_below(ground: usize, below: Vec<Mask>, provenance: Provenance) -> Self {
        let family = enumerate_downsets(&below, AUTO_FAMILY_LIMIT);
        let below_count = below.iter().map(Mask::count).collect();
        FiniteTopology {
            ground,
            provenance,
            below,
            below_count,
            family,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// cl({x}).
    pub fn below(&self, x: usize) -> &Mask {
        &self.below[x]
    }

    /// The explicit closed family, when materialized.
    pub fn closed_family(&self) -> Option<&[Mask]> {
        self.family.as_deref()
    }

    /// Materializes the closed family up to `limit`, regardless of the
    /// automatic threshold.
    pub fn materialize_family(&self, limit: usize) -> Result<Vec<Mask>> {
        match &self.family {
            Some(f) if f.len() <= limit => Ok(f.clone()),
            _ => enumerate_downsets(&self.below, limit).ok_or(Error::Capacity {
                what: "closed family size",
                limit,
            }),
        }
    }

    /// Smallest closed set containing Y: the union of the point closures.
    pub fn closure(&self, y: &Mask) -> Mask {
        let mut c = Mask::empty(self.ground);
        for p in y.iter_ones() {
            c.union_with(&self.below[p]);
        }
        c
    }

    pub fn is_closed(&self, y: &Mask) -> bool {
        y.iter_ones().all(|p| self.below[p].is_subset_of(y))
    }

    pub fn is_open(&self, y: &Mask) -> bool {
        self.is_closed(&y.complement())
    }

    /// Minimal open neighbourhoods: up(x) = {a : x ∈ cl({a})}.
    fn ups(&self) -> Vec<Mask> {
        let mut ups = vec![Mask::empty(self.ground); self.ground];
        for a in 0..self.ground {
            for x in self.below[a].iter_ones() {
                ups[x].insert(a);
            }
        }
        ups
    }

    pub fn separation_profile(&self) -> SeparationFlags {
        let g = self.ground;
        // T0: distinct points have distinct closures.
        let mut seen: HashMap<&Mask, usize> = HashMap::new();
        let mut t0 = true;
        for x in 0..g {
            if seen.insert(&self.below[x], x).is_some() {
                t0 = false;
                break;
            }
        }
        // T1: all singletons closed.
        let t1 = (0..g).all(|x| self.below[x].count() == 1);
        // Hausdorff: minimal open neighbourhoods pairwise disjoint.
        let ups = self.ups();
        let mut hausdorff = true;
        'pairs: for x in 0..g {
            for y in x + 1..g {
                if ups[x].intersects(&ups[y]) {
                    hausdorff = false;
                    break 'pairs;
                }
            }
        }
        // Discrete: every singleton is clopen.
        let discrete = (0..g).all(|x| {
            let s = Mask::singleton(g, x);
            self.is_closed(&s) && self.is_closed(&s.complement())
        });
        // Cofinite: every proper subset closed; on a finite ground this
        // reduces to the co-singletons, since smaller sets are their
        // intersections.
        let cofinite = (0..g).all(|x| self.is_closed(&Mask::singleton(g, x).complement()));
        SeparationFlags {
            t0,
            t1,
            hausdorff,
            discrete,
            cofinite,
        }
    }

    /// Y is irreducible iff Y ≠ ∅ and cl(Y) is a point closure, i.e. some
    /// z ∈ cl(Y) dominates all of Y. On a finite space this is equivalent
    /// to the covering-pair definition; `is_irreducible_literal` is the
    /// definitional form used as a test oracle.
    pub fn is_irreducible(&self, y: &Mask) -> bool {
        if y.is_empty() {
            return false;
        }
        let cl = self.closure(y);
        // z ∈ cl(Y) has below[z] ⊆ cl(Y), so domination reduces to a
        // cardinality match.
        let target = cl.count();
        let found = cl.iter_ones().any(|z| self.below_count[z] == target);
        found
    }

    /// [`Self::is_irreducible`] for a set already known to be closed,
    /// skipping the closure computation.
    pub fn is_irreducible_closed(&self, y: &Mask) -> bool {
        debug_assert!(self.is_closed(y));
        let target = y.count();
        target > 0 && y.iter_ones().any(|z| self.below_count[z] == target)
    }

    /// Quantifies over covering pairs from the materialized closed family.
    pub fn is_irreducible_literal(&self, y: &Mask) -> Result<bool> {
        let family = self.family.as_ref().ok_or(Error::Capacity {
            what: "closed family size",
            limit: AUTO_FAMILY_LIMIT,
        })?;
        if y.is_empty() {
            return Ok(false);
        }
        for a in family {
            for b in family {
                if y.is_subset_of(&a.union(b)) && !y.is_subset_of(a) && !y.is_subset_of(b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Generic points of a closed set Y: all y with cl({y}) = Y.
    pub fn generic_points(&self, y: &Mask) -> Result<Vec<usize>> {
        if !self.is_closed(y) {
            return Err(Error::NotClosed);
        }
        Ok(self.generic_points_of_closed(y))
    }

    fn generic_points_of_closed(&self, y: &Mask) -> Vec<usize> {
        // p ∈ Y closed gives below[p] ⊆ Y, so equality is a count match.
        let target = y.count();
        y.iter_ones()
            .filter(|&p| self.below_count[p] == target)
            .collect()
    }

    /// Hochster's criterion specialized to finite spaces: T0 plus a generic
    /// point for every irreducible closed set. The irreducible closed sets
    /// of a finite space are exactly the distinct point closures; when the
    /// family is materialized they are found by scanning it instead.
    pub fn spectral_check(&self) -> SpectralReport {
        let mut t0_witness = None;
        let mut seen: HashMap<&Mask, usize> = HashMap::new();
        for x in 0..self.ground {
            if let Some(&prev) = seen.get(&self.below[x]) {
                if t0_witness.is_none() {
                    t0_witness = Some((prev, x));
                }
            } else {
                seen.insert(&self.below[x], x);
            }
        }
        let is_t0 = t0_witness.is_none();

        let candidates: Vec<Mask> = match &self.family {
            Some(family) => family
                .iter()
                .filter(|c| self.is_irreducible(c))
                .cloned()
                .collect(),
            None => {
                let mut closures: Vec<Mask> = self.below.clone();
                closures.sort();
                closures.dedup();
                closures
            }
        };

        let mut irreducible_closed = Vec::new();
        let mut missing: Option<Mask> = None;
        for set in candidates {
            let generic_points = self.generic_points_of_closed(&set);
            if generic_points.is_empty() && missing.is_none() {
                missing = Some(set.clone());
            }
            irreducible_closed.push(IrreducibleClosed {
                set,
                generic_points,
            });
        }

        let is_spectral = is_t0 && missing.is_none();
        let failure_witness = if let Some((a, b)) = t0_witness {
            Some(SpectralFailure::T0Violation(a, b))
        } else {
            missing.map(SpectralFailure::MissingGenericPoint)
        };
        SpectralReport {
            is_t0,
            irreducible_closed,
            is_spectral,
            failure_witness,
            quasi_compactness_automatic: true,
        }
    }

    /// Every closed set of `coarse` is closed here. Via the preorders:
    /// fine closures must refine coarse closures.
    pub fn refines(&self, coarse: &FiniteTopology) -> Result<bool> {
        if self.ground != coarse.ground {
            return Err(Error::GroundMismatch);
        }
        Ok((0..self.ground).all(|x| self.below[x].is_subset_of(&coarse.below[x])))
    }

    /// Subspace topology on the points of `subset`, reindexed in ascending
    /// order.
    pub fn subspace(&self, subset: &Mask) -> FiniteTopology {
        let points: Vec<usize> = subset.iter_ones().collect();
        let reindex: HashMap<usize, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let below = points
            .iter()
            .map(|&p| {
                let mut m = Mask::empty(points.len());
                for q in self.below[p].iter_ones() {
                    if let Some(&i) = reindex.get(&q) {
                        m.insert(i);
                    }
                }
                m
            })
            .collect();
        FiniteTopology::from_below(points.len(), below, Provenance::Custom)
    }

    pub fn same_topology(&self, other: &FiniteTopology) -> bool {
        self.ground == other.ground && self.below == other.below
    }
}

/// The second classical Zariski topology on Spec^s(M): closed sub-basis
/// {V^{s*}(N) : N in the lattice}.
pub fn second_zariski(lattice: &SubmoduleLattice, spectrum: &SecondSpectrum) -> FiniteTopology {
    let mut subbasis: Vec<Mask> = lattice
        .iter()
        .map(|n| spectrum.v_star(n).mask().clone())
        .collect();
    subbasis.sort();
    subbasis.dedup();
    FiniteTopology::from_closed_subbasis(spectrum.len(), &subbasis, Provenance::SecondZariski)
}

/// The finer patch topology: open sub-basis {V^{s*}(N) ∩ W^s(K)}, i.e.
/// closed sub-basis {W^s(N) ∪ V^{s*}(K)}. For points x ≠ y the sub-basic
/// closed sets W^s(x) ∪ V^{s*}(0) and W^s(M) ∪ V^{s*}(y) witness that the
/// patch specialization preorder is the Zariski preorder intersected with
/// its transpose, which is how it is computed here.
pub fn patch_topology(zariski: &FiniteTopology) -> FiniteTopology {
    let g = zariski.ground_size();
    let ups = zariski.ups();
    let below = (0..g)
        .map(|x| zariski.below[x].intersection(&ups[x]))
        .collect();
    FiniteTopology::from_below(g, below, Provenance::Patch)
}

/// Literal patch construction from the deduplicated sub-basis; quadratic in
/// the number of distinct V^{s*} masks, used on small spectra and by tests.
pub fn patch_topology_literal(
    lattice: &SubmoduleLattice,
    spectrum: &SecondSpectrum,
) -> FiniteTopology {
    let mut v_masks: Vec<Mask> = lattice
        .iter()
        .map(|n| spectrum.v_star(n).mask().clone())
        .collect();
    v_masks.sort();
    v_masks.dedup();
    let mut subbasis = Vec::new();
    for v in &v_masks {
        for w in &v_masks {
            subbasis.push(w.complement().union(v));
        }
    }
    subbasis.sort();
    subbasis.dedup();
    FiniteTopology::from_closed_subbasis(spectrum.len(), &subbasis, Provenance::Patch)
}

/// Spec(R/I) for an ideal I = (d) of R = Z/nZ: the points are the primes
/// (p) ⊇ I, i.e. p | d, and the closed sets are V((a)) = {(p) : p | a} for
/// divisors a of n.
pub struct RingSpectrumSpace {
    pub primes: Vec<u64>,
    pub topology: FiniteTopology,
}

pub fn ring_spectrum_space(ring: &CyclicRing, modulo: &Ideal, caps: &Caps) -> Result<RingSpectrumSpace> {
    let d = modulo.generator();
    let primes: Vec<u64> = ring
        .spectrum()
        .iter()
        .map(|i| i.generator())
        .filter(|&p| d % p == 0)
        .collect();
    let subbasis: Vec<Mask> = ring
        .divisors()
        .iter()
        .map(|&a| {
            Mask::from_bits(
                primes.len(),
                primes
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| a % p == 0)
                    .map(|(i, _)| i),
            )
        })
        .collect();
    let topology = FiniteTopology::generate(primes.len(), &subbasis, caps, Provenance::RingSpectrum)?;
    Ok(RingSpectrumSpace { primes, topology })
}

/// A total assignment of target points to source points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    source_ground: usize,
    target_ground: usize,
    assignment: Vec<usize>,
}

impl PointMap {
    pub fn new(source_ground: usize, target_ground: usize, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source_ground || assignment.iter().any(|&t| t >= target_ground) {
            return Err(Error::Internal(
                "point map assignment must be total and in range".into(),
            ));
        }
        Ok(PointMap {
            source_ground,
            target_ground,
            assignment,
        })
    }

    pub fn source_ground(&self) -> usize {
        self.source_ground
    }

    pub fn target_ground(&self) -> usize {
        self.target_ground
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn preimage(&self, target_set: &Mask) -> Mask {
        Mask::from_bits(
            self.source_ground,
            (0..self.source_ground).filter(|&x| target_set.test(self.assignment[x])),
        )
    }
}

/// Continuity: preimages of closed sets are closed. On finite spaces this
/// is equivalent to monotonicity for the specialization preorders, which
/// is what gets evaluated; `is_continuous_literal` quantifies over a
/// materialized closed family instead.
pub fn is_continuous(map: &PointMap, src: &FiniteTopology, dst: &FiniteTopology) -> bool {
    debug_assert_eq!(map.source_ground(), src.ground_size());
    debug_assert_eq!(map.target_ground(), dst.ground_size());
    (0..src.ground_size()).all(|x| {
        let fx = map.apply(x);
        src.below[x]
            .iter_ones()
            .all(|y| dst.below[fx].test(map.apply(y)))
    })
}

pub fn is_continuous_literal(
    map: &PointMap,
    src: &FiniteTopology,
    dst: &FiniteTopology,
) -> Result<bool> {
    let family = dst.closed_family().ok_or(Error::Capacity {
        what: "closed family size",
        limit: AUTO_FAMILY_LIMIT,
    })?;
    Ok(family.iter().all(|c| src.is_closed(&map.preimage(c))))
}

/// ψ_M : X^s(M) → Spec(R/I_M), S ↦ Ann(S)/I_M, with I_M = Ann(soc M).
pub struct PsiMap {
    pub annihilator_of_socle: Ideal,
    pub space: RingSpectrumSpace,
    pub map: PointMap,
}

pub fn psi_map(spectrum: &SecondSpectrum, caps: &Caps) -> Result<PsiMap> {
    let module = spectrum.module();
    let soc = crate::spectrum::socle(&Submodule::whole(module), spectrum);
    let i_m = soc.annihilator();
    let space = ring_spectrum_space(module.ring(), &i_m, caps)?;
    let mut assignment = Vec::with_capacity(spectrum.len());
    for s in spectrum.points() {
        let ann = s.annihilator();
        if !ann.is_prime() {
            return Err(Error::Internal(format!(
                "annihilator {ann} of a second submodule is not prime"
            )));
        }
        let idx = space
            .primes
            .iter()
            .position(|&p| p == ann.generator())
            .ok_or_else(|| {
                Error::Internal(format!("annihilator {ann} does not contain Ann(soc M)"))
            })?;
        assignment.push(idx);
    }
    let map = PointMap::new(spectrum.len(), space.primes.len(), assignment)?;
    Ok(PsiMap {
        annihilator_of_socle: i_m,
        space,
        map,
    })
}

/// ν : X^s(M') → X^s(M), S ↦ f(S), for a monomorphism f.
pub fn nu_map(
    h: &ModuleHom,
    source_spectrum: &SecondSpectrum,
    target_spectrum: &SecondSpectrum,
) -> Result<PointMap> {
    if !h.is_injective() {
        return Err(Error::NotInjective);
    }
    let mut assignment = Vec::with_capacity(source_spectrum.len());
    for s in source_spectrum.points() {
        let image = h.image_of(s)?;
        let idx = target_spectrum.position(image.mask()).ok_or_else(|| {
            Error::Internal(
                "image of a second submodule under a monomorphism is not second".into(),
            )
        })?;
        assignment.push(idx);
    }
    PointMap::new(source_spectrum.len(), target_spectrum.len(), assignment)
}

/// Extensional check that S ↦ f^{-1}(S) is a bijection
/// V^{s*}(N) → V^{s*}(f^{-1}(N)) for N inside the image of the
/// monomorphism. A false return signals an engine defect, never a valid
/// outcome on correct inputs.
pub fn lemma31_bijection_check(
    h: &ModuleHom,
    n: &Submodule,
    source_spectrum: &SecondSpectrum,
    target_spectrum: &SecondSpectrum,
) -> Result<bool> {
    if !h.is_injective() {
        return Err(Error::NotInjective);
    }
    if !n.mask().is_subset_of(h.image_mask()) {
        return Err(Error::NotInImage);
    }
    let v_target = target_spectrum.v_star(n);
    let pulled = h.preimage_of(n)?;
    let v_source = source_spectrum.v_star(&pulled);
    let mut hit = Mask::empty(source_spectrum.len());
    for i in v_target.iter() {
        let pre = h.preimage_of(target_spectrum.point(i))?;
        match source_spectrum.position(pre.mask()) {
            Some(j) => {
                if !v_source.contains(j) || hit.test(j) {
                    return Ok(false);
                }
                hit.insert(j);
            }
            None => return Ok(false),
        }
    }
    Ok(hit.count() == v_source.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;

    fn analyze(desc: &str) -> (FiniteModule, SubmoduleLattice, SecondSpectrum) {
        let m = FiniteModule::from_descriptor(desc).unwrap();
        let l = SubmoduleLattice::enumerate(&m, &Caps::default()).unwrap();
        let s = SecondSpectrum::compute(&l);
        (m, l, s)
    }

    #[test]
    fn generation_examples() {
        let caps = Caps::default();
        // Two closed singletons on two points: discrete.
        let sub = vec![Mask::singleton(2, 0), Mask::singleton(2, 1)];
        let t = FiniteTopology::generate(2, &sub, &caps, Provenance::Custom).unwrap();
        assert_eq!(t.closed_family().unwrap().len(), 4);

        // The Klein four-group V-sets: all subsets of the three lines plus
        // the full set.
        let sub = vec![
            Mask::empty(4),
            Mask::singleton(4, 0),
            Mask::singleton(4, 1),
            Mask::singleton(4, 2),
            Mask::full(4),
        ];
        let t = FiniteTopology::generate(4, &sub, &caps, Provenance::Custom).unwrap();
        assert_eq!(t.closed_family().unwrap().len(), 9);

        // Empty ground set.
        let t = FiniteTopology::generate(0, &[], &caps, Provenance::Custom).unwrap();
        assert_eq!(t.closed_family().unwrap().len(), 1);
    }

    #[test]
    fn generation_capacity_is_reported() {
        let caps = Caps {
            max_closed_sets: 8,
            ..Caps::default()
        };
        let sub: Vec<Mask> = (0..4).map(|i| Mask::singleton(4, i)).collect();
        assert!(matches!(
            FiniteTopology::generate(4, &sub, &caps, Provenance::Custom),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn zariski_on_z6_is_discrete() {
        let (_, l, s) = analyze("Z6[6]");
        let t = second_zariski(&l, &s);
        let flags = t.separation_profile();
        assert!(flags.t0 && flags.t1 && flags.hausdorff && flags.discrete && flags.cofinite);
        assert_eq!(t.closed_family().unwrap().len(), 4);
        assert!(t.spectral_check().is_spectral);
        assert!(!t.is_irreducible(&Mask::full(2)));
    }

    #[test]
    fn zariski_on_klein_four() {
        let (m, l, s) = analyze("Z2[2,2]");
        let t = second_zariski(&l, &s);
        assert_eq!(t.closed_family().unwrap().len(), 9);
        let flags = t.separation_profile();
        assert!(flags.t0);
        assert!(!flags.t1 && !flags.hausdorff && !flags.discrete && !flags.cofinite);
        // Closure of the whole-module point is everything.
        let whole_idx = s.position(Submodule::whole(&m).mask()).unwrap();
        assert_eq!(t.closure(&Mask::singleton(4, whole_idx)).count(), 4);
        // Closure of a line is itself.
        assert_eq!(t.closure(&Mask::singleton(4, 0)).count(), 1);
        assert_eq!(t.closure(&Mask::empty(4)).count(), 0);
        // The full space is irreducible with the whole module as the unique
        // generic point.
        assert!(t.is_irreducible(&Mask::full(4)));
        assert_eq!(t.generic_points(&Mask::full(4)).unwrap(), vec![whole_idx]);
        // A two-line set is reducible and has no generic point.
        let two = Mask::from_bits(4, [0, 1]);
        assert!(!t.is_irreducible(&two));
        assert!(t.generic_points(&two).unwrap().is_empty());
        let report = t.spectral_check();
        assert!(report.is_spectral);
        assert!(report.quasi_compactness_automatic);
    }

    #[test]
    fn zariski_on_zero_module() {
        let (_, l, s) = analyze("Z1[]");
        let t = second_zariski(&l, &s);
        assert_eq!(t.ground_size(), 0);
        let flags = t.separation_profile();
        assert!(flags.t0 && flags.t1 && flags.hausdorff && flags.discrete && flags.cofinite);
        assert!(t.spectral_check().is_spectral);
        assert!(!t.is_irreducible(&Mask::empty(0)));
    }

    #[test]
    fn non_t0_custom_space_is_not_spectral() {
        let t = FiniteTopology::generate(2, &[], &Caps::default(), Provenance::Custom).unwrap();
        assert_eq!(t.closed_family().unwrap().len(), 2);
        let report = t.spectral_check();
        assert!(!report.is_t0);
        assert!(!report.is_spectral);
        assert!(matches!(
            report.failure_witness,
            Some(SpectralFailure::T0Violation(0, 1))
        ));
    }

    #[test]
    fn irreducible_matches_literal_definition() {
        for desc in ["Z6[6]", "Z2[2,2]", "Z4[4]", "Z12[12]", "Z2[2,2,2]"] {
            let (_, l, s) = analyze(desc);
            let t = second_zariski(&l, &s);
            if t.closed_family().is_none() || s.len() > 10 {
                continue;
            }
            let g = s.len();
            for bits in 0u32..(1 << g) {
                let y = Mask::from_bits(g, (0..g).filter(|i| bits >> i & 1 == 1));
                assert_eq!(
                    t.is_irreducible(&y),
                    t.is_irreducible_literal(&y).unwrap(),
                    "irreducibility mismatch on {desc} at {y:?}"
                );
            }
        }
    }

    #[test]
    fn patch_is_discrete_and_refines_zariski() {
        for desc in ["Z6[6]", "Z2[2,2]", "Z4[4,2]", "Z12[12]"] {
            let (_, l, s) = analyze(desc);
            let z = second_zariski(&l, &s);
            let p = patch_topology(&z);
            assert!(p.refines(&z).unwrap());
            assert!(p.separation_profile().discrete);
            // The shortcut construction equals the literal sub-basis one.
            let literal = patch_topology_literal(&l, &s);
            assert!(p.same_topology(&literal), "patch mismatch on {desc}");
        }
    }

    #[test]
    fn refines_examples() {
        let (_, l, s) = analyze("Z2[2,2]");
        let z = second_zariski(&l, &s);
        assert!(z.refines(&z).unwrap());
        let discrete = patch_topology(&z);
        assert!(discrete.refines(&z).unwrap());
        assert!(!z.refines(&discrete).unwrap());
    }

    #[test]
    fn continuity_basics() {
        let (_, l, s) = analyze("Z2[2,2]");
        let z = second_zariski(&l, &s);
        let id = PointMap::new(4, 4, vec![0, 1, 2, 3]).unwrap();
        assert!(is_continuous(&id, &z, &z));
        assert_eq!(is_continuous_literal(&id, &z, &z).unwrap(), true);
        // Constant map from the discrete space.
        let discrete = patch_topology(&z);
        let c = PointMap::new(4, 4, vec![0, 0, 0, 0]).unwrap();
        assert!(is_continuous(&c, &discrete, &z));
        // Sending a closed point onto the generic point while fixing the
        // rest is not continuous.
        let whole_idx = 3;
        let bad = PointMap::new(4, 4, vec![whole_idx, 1, 2, whole_idx]).unwrap();
        assert_eq!(
            is_continuous(&bad, &z, &z),
            is_continuous_literal(&bad, &z, &z).unwrap()
        );
    }

    #[test]
    fn psi_on_small_modules() {
        let caps = Caps::default();
        let (_, _, s) = analyze("Z6[6]");
        let psi = psi_map(&s, &caps).unwrap();
        assert_eq!(psi.annihilator_of_socle.generator(), 6);
        assert_eq!(psi.space.primes, vec![2, 3]);
        // Points sorted by cardinality: {0,3} then {0,2,4}.
        assert_eq!(psi.map.assignment(), &[2 - 2, 3 - 2]);
        let z = {
            let (_, l, s2) = analyze("Z6[6]");
            drop(s2);
            let s2 = SecondSpectrum::compute(&l);
            second_zariski(&l, &s2)
        };
        assert!(is_continuous(&psi.map, &z, &psi.space.topology));

        let (_, _, s) = analyze("Z12[12]");
        let psi = psi_map(&s, &caps).unwrap();
        assert_eq!(psi.annihilator_of_socle.generator(), 6);
        assert_eq!(psi.space.primes, vec![2, 3]);
        // Points: {0,6} (Ann = (2)) then {0,4,8} (Ann = (3)).
        assert_eq!(psi.map.assignment(), &[0, 1]);

        let (_, _, s) = analyze("Z4[4]");
        let psi = psi_map(&s, &caps).unwrap();
        assert_eq!(psi.space.primes, vec![2]);
        assert_eq!(psi.map.assignment(), &[0]);

        // Empty spectrum: empty map into the empty space.
        let (_, _, s) = analyze("Z1[]");
        let psi = psi_map(&s, &caps).unwrap();
        assert!(psi.space.primes.is_empty());
        assert!(psi.map.assignment().is_empty());
    }

    #[test]
    fn nu_on_small_monos() {
        let z6 = FiniteModule::from_descriptor("Z6[6]").unwrap();
        let z3 = FiniteModule::from_descriptor("Z6[3]").unwrap();
        let caps = Caps::default();
        let l6 = SubmoduleLattice::enumerate(&z6, &caps).unwrap();
        let s6 = SecondSpectrum::compute(&l6);
        let l3 = SubmoduleLattice::enumerate(&z3, &caps).unwrap();
        let s3 = SecondSpectrum::compute(&l3);
        let f = ModuleHom::new(&z3, &z6, &[2]).unwrap();
        let nu = nu_map(&f, &s3, &s6).unwrap();
        assert_eq!(nu.assignment().len(), 1);
        let target = s6.point(nu.apply(0));
        assert_eq!(target.element_tuples(), vec![vec![0], vec![2], vec![4]]);
        let t3 = second_zariski(&l3, &s3);
        let t6 = second_zariski(&l6, &s6);
        assert!(is_continuous(&nu, &t3, &t6));

        let id = ModuleHom::identity(&z6);
        let nu = nu_map(&id, &s6, &s6).unwrap();
        assert_eq!(nu.assignment(), &[0, 1]);

        let g = ModuleHom::new(&z6, &z6, &[2]).unwrap();
        assert!(matches!(nu_map(&g, &s6, &s6), Err(Error::NotInjective)));
    }

    #[test]
    fn lemma31_small_cases() {
        let z2 = FiniteModule::from_descriptor("Z4[2]").unwrap();
        let z4 = FiniteModule::from_descriptor("Z4[4]").unwrap();
        let caps = Caps::default();
        let l2 = SubmoduleLattice::enumerate(&z2, &caps).unwrap();
        let s2 = SecondSpectrum::compute(&l2);
        let l4 = SubmoduleLattice::enumerate(&z4, &caps).unwrap();
        let s4 = SecondSpectrum::compute(&l4);
        let f = ModuleHom::new(&z2, &z4, &[2]).unwrap();
        let n = Submodule::generated_by(&z4, [2]);
        assert!(lemma31_bijection_check(&f, &n, &s2, &s4).unwrap());
        let zero = Submodule::zero(&z4);
        assert!(lemma31_bijection_check(&f, &zero, &s2, &s4).unwrap());
        let whole = Submodule::whole(&z4);
        assert!(matches!(
            lemma31_bijection_check(&f, &whole, &s2, &s4),
            Err(Error::NotInImage)
        ));
    }

    #[test]
    fn subspace_topology_restricts_preorder() {
        let (m, l, s) = analyze("Z2[2,2]");
        let z = second_zariski(&l, &s);
        let whole_idx = s.position(Submodule::whole(&m).mask()).unwrap();
        let sub = z.subspace(&Mask::from_bits(4, [0, whole_idx]));
        assert_eq!(sub.ground_size(), 2);
        assert_eq!(sub.below(1).count(), 2);
        assert_eq!(sub.below(0).count(), 1);
    }
}
