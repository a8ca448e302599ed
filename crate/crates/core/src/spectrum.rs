//! Second submodules and the second spectrum.
//!
//! A nonzero submodule S is second when every scalar acts on it either
//! surjectively or as zero; over a finite S surjective means rS = S. The
//! spectrum keeps its points in lattice order and precomputes the point
//! inclusion relation, which doubles as V^{s*} on points.

use crate::lattice::SubmoduleLattice;
use crate::mask::Mask;
use crate::module::FiniteModule;
use crate::submodule::Submodule;
use std::collections::HashMap;
use std::sync::Arc;

/// rN = N or rN = 0 for every scalar r. Equality to N replaces surjectivity,
/// which is equivalent on finite modules.
pub fn is_second(n: &Submodule) -> bool {
    if n.is_zero() {
        return false;
    }
    let exp = n.module().exponent();
    (0..exp).all(|r| {
        let img = n.scalar_image(r);
        img.is_zero() || img == *n
    })
}

/// The residual criterion: S ≠ 0 and for every scalar r and submodule K,
/// rS ⊆ K implies rS = 0 or S ⊆ K. Evaluated literally as an independent
/// oracle for [`is_second`]; the two must agree everywhere.
pub fn is_second_via_colon(n: &Submodule, lattice: &SubmoduleLattice) -> bool {
    if n.is_zero() {
        return false;
    }
    let exp = n.module().exponent();
    for r in 0..exp {
        let rs = n.scalar_image(r);
        let rs_zero = rs.is_zero();
        for k in lattice.iter() {
            if rs.mask().is_subset_of(k.mask()) && !rs_zero && !n.mask().is_subset_of(k.mask()) {
                return false;
            }
        }
    }
    true
}

struct SpectrumData {
    module: FiniteModule,
    points: Vec<Submodule>,
    lattice_index: Vec<usize>,
    index: HashMap<Mask, usize>,
    /// contained[i] = point-set mask of the points included in points[i];
    /// this is V^{s*}(points[i]) and the Zariski closure of {i}.
    contained: Vec<Mask>,
}

#[derive(Clone)]
pub struct SecondSpectrum {
    data: Arc<SpectrumData>,
}

impl SecondSpectrum {
    pub fn compute(lattice: &SubmoduleLattice) -> Self {
        let mut points = Vec::new();
        let mut lattice_index = Vec::new();
        for (i, s) in lattice.iter().enumerate() {
            if is_second(s) {
                points.push(s.clone());
                lattice_index.push(i);
            }
        }
        let p = points.len();
        let index: HashMap<Mask, usize> = points
            .iter()
            .enumerate()
            .map(|(i, s)| (s.mask().clone(), i))
            .collect();
        let mut contained = vec![Mask::empty(p); p];
        for i in 0..p {
            for j in 0..p {
                if points[j].mask().is_subset_of(points[i].mask()) {
                    contained[i].insert(j);
                }
            }
        }
        SecondSpectrum {
            data: Arc::new(SpectrumData {
                module: lattice.module().clone(),
                points,
                lattice_index,
                index,
                contained,
            }),
        }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.data.module
    }

    pub fn len(&self) -> usize {
        self.data.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.points.is_empty()
    }

    pub fn points(&self) -> &[Submodule] {
        &self.data.points
    }

    pub fn point(&self, i: usize) -> &Submodule {
        &self.data.points[i]
    }

    /// Index of the point within the enclosing lattice enumeration.
    pub fn lattice_index(&self, i: usize) -> usize {
        self.data.lattice_index[i]
    }

    pub fn position(&self, mask: &Mask) -> Option<usize> {
        self.data.index.get(mask).copied()
    }

    /// Point-set mask of the points contained in point `i` (= V^{s*} of it).
    pub fn points_below(&self, i: usize) -> &Mask {
        &self.data.contained[i]
    }

    /// V^{s*}(N): the points contained in N.
    pub fn v_star(&self, n: &Submodule) -> PointSet {
        let mut mask = Mask::empty(self.len());
        for (i, p) in self.data.points.iter().enumerate() {
            if p.mask().is_subset_of(n.mask()) {
                mask.insert(i);
            }
        }
        PointSet {
            spectrum: self.clone(),
            mask,
        }
    }

    /// W^s(N) = Spec^s(M) - V^{s*}(N).
    pub fn w_s(&self, n: &Submodule) -> PointSet {
        let v = self.v_star(n);
        PointSet {
            spectrum: self.clone(),
            mask: v.mask.complement(),
        }
    }

    pub fn point_set(&self, mask: Mask) -> PointSet {
        debug_assert_eq!(mask.len(), self.len());
        PointSet {
            spectrum: self.clone(),
            mask,
        }
    }

    pub fn empty_set(&self) -> PointSet {
        self.point_set(Mask::empty(self.len()))
    }

    pub fn full_set(&self) -> PointSet {
        self.point_set(Mask::full(self.len()))
    }

    /// T(Y) = Σ_{S ∈ Y} S; the zero submodule for empty Y.
    pub fn t_sum(&self, y: &Mask) -> Submodule {
        let module = &self.data.module;
        let mut seed = Mask::empty(module.order());
        seed.insert(0);
        for i in y.iter_ones() {
            seed.union_with(self.data.points[i].mask());
        }
        Submodule::from_mask_unchecked(module, crate::submodule::closure_mask(module, &seed))
    }

    /// Longest strict chain length among the points; -1 for an empty
    /// spectrum, 0 for an antichain.
    pub fn second_dim(&self) -> i64 {
        if self.is_empty() {
            return -1;
        }
        // Points are sorted by cardinality, so inclusions point backwards.
        let p = self.len();
        let mut depth = vec![0i64; p];
        let mut best = 0;
        for i in 0..p {
            for j in self.data.contained[i].iter_ones() {
                if j != i && depth[j] + 1 > depth[i] {
                    depth[i] = depth[j] + 1;
                }
            }
            best = best.max(depth[i]);
        }
        best
    }
}

/// A subset of the spectrum points.
#[derive(Clone)]
pub struct PointSet {
    spectrum: SecondSpectrum,
    mask: Mask,
}

impl PointSet {
    pub fn spectrum(&self) -> &SecondSpectrum {
        &self.spectrum
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.test(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter_ones()
    }

    pub fn t_sum(&self) -> Submodule {
        self.spectrum.t_sum(&self.mask)
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for PointSet {}

/// soc(N): the sum of all second submodules contained in N; the zero
/// submodule when there are none.
pub fn socle(n: &Submodule, spectrum: &SecondSpectrum) -> Submodule {
    let v = spectrum.v_star(n);
    spectrum.t_sum(v.mask())
}

/// Prime submodules by the literal definition: P proper such that rm ∈ P
/// forces m ∈ P or rM ⊆ P.
pub fn prime_submodules(lattice: &SubmoduleLattice) -> Vec<usize> {
    let module = lattice.module();
    let exp = module.exponent();
    let order = module.order();
    let mut primes = Vec::new();
    'outer: for (idx, p) in lattice.iter().enumerate() {
        if p.is_whole() {
            continue;
        }
        for r in 0..exp {
            let r_in_colon = (0..order as u16).all(|m| p.contains(module.scalar_mul(r, m)));
            if r_in_colon {
                continue;
            }
            for m in 0..order as u16 {
                if p.contains(module.scalar_mul(r, m)) && !p.contains(m) {
                    continue 'outer;
                }
            }
        }
        primes.push(idx);
    }
    primes
}
