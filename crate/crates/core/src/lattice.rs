//! Exhaustive submodule lattice enumeration.
//!
//! Breadth-first lattice growth: start at the zero submodule and repeatedly
//! extend each known submodule by one generator, deduplicating by mask,
//! until a fixpoint. Every submodule is reachable by adding generators one
//! at a time, so the enumeration is complete. Capacity overruns are
//! reported, never truncated.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::module::FiniteModule;
use crate::submodule::{extend_closed_mask, Submodule};
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_order: usize,
    pub max_submodules: usize,
    pub max_closed_sets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 256,
            max_submodules: 100_000,
            max_closed_sets: 1 << 20,
        }
    }
}

pub struct SubmoduleLattice {
    module: FiniteModule,
    subs: Vec<Submodule>,
    index: HashMap<Mask, usize>,
}

impl SubmoduleLattice {
    pub fn enumerate(module: &FiniteModule, caps: &Caps) -> Result<Self> {
        if module.order() > caps.max_order {
            return Err(Error::Capacity {
                what: "module order",
                limit: caps.max_order,
            });
        }
        let order = module.order();
        let mut seen: HashMap<Mask, ()> = HashMap::new();
        let mut queue: VecDeque<Mask> = VecDeque::new();
        let zero = Mask::singleton(order, 0);
        seen.insert(zero.clone(), ());
        queue.push_back(zero);
        while let Some(mask) = queue.pop_front() {
            for x in 0..order as u16 {
                if mask.test(x as usize) {
                    continue;
                }
                let bigger = extend_closed_mask(module, &mask, x);
                if !seen.contains_key(&bigger) {
                    if seen.len() >= caps.max_submodules {
                        return Err(Error::Capacity {
                            what: "submodule count",
                            limit: caps.max_submodules,
                        });
                    }
                    seen.insert(bigger.clone(), ());
                    queue.push_back(bigger);
                }
            }
        }
        let mut masks: Vec<Mask> = seen.into_keys().collect();
        masks.sort();
        let index: HashMap<Mask, usize> = masks
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let subs = masks
            .into_iter()
            .map(|m| Submodule::from_mask_unchecked(module, m))
            .collect();
        Ok(SubmoduleLattice {
            module: module.clone(),
            subs,
            index,
        })
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.subs[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Submodule> {
        self.subs.iter()
    }

    pub fn position(&self, mask: &Mask) -> Option<usize> {
        self.index.get(mask).copied()
    }

    /// Index of the zero submodule (first in sorted order).
    pub fn zero_index(&self) -> usize {
        0
    }

    /// Index of the whole module (last in sorted order).
    pub fn whole_index(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        self.subs[i].mask().is_subset_of(self.subs[j].mask())
    }

    /// Inclusion-minimal nonzero submodules.
    pub fn minimal_nonzero(&self) -> Vec<usize> {
        let mut minimal: Vec<usize> = Vec::new();
        for i in 1..self.subs.len() {
            if self.subs[i].is_zero() {
                continue;
            }
            // Non-minimal submodules strictly contain an earlier minimal one.
            let dominated = minimal
                .iter()
                .any(|&m| self.is_subset(m, i) && m != i);
            if !dominated {
                minimal.push(i);
            }
        }
        minimal
    }

    /// Inclusion-maximal proper submodules.
    pub fn maximal_proper(&self) -> Vec<usize> {
        let whole = self.whole_index();
        let mut maximal: Vec<usize> = Vec::new();
        for i in (0..self.subs.len()).rev() {
            if i == whole && !self.subs[i].is_whole() {
                unreachable!();
            }
            if self.subs[i].is_whole() {
                continue;
            }
            let dominated = maximal.iter().any(|&m| self.is_subset(i, m) && m != i);
            if !dominated {
                maximal.push(i);
            }
        }
        maximal.reverse();
        maximal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(desc: &str) -> SubmoduleLattice {
        let m = FiniteModule::from_descriptor(desc).unwrap();
        SubmoduleLattice::enumerate(&m, &Caps::default()).unwrap()
    }

    #[test]
    fn cyclic_lattices_match_divisor_counts() {
        assert_eq!(lattice("Z4[4]").len(), 3);
        assert_eq!(lattice("Z6[6]").len(), 4);
        assert_eq!(lattice("Z12[12]").len(), 6);
    }

    #[test]
    fn klein_four_has_five_submodules() {
        assert_eq!(lattice("Z2[2,2]").len(), 5);
    }

    #[test]
    fn vector_space_counts_are_galois_numbers() {
        assert_eq!(lattice("Z2[2,2,2]").len(), 16);
        assert_eq!(lattice("Z2[2,2,2,2]").len(), 67);
        assert_eq!(lattice("Z3[3,3]").len(), 6);
    }

    #[test]
    fn order_is_deterministic_and_by_cardinality() {
        let l = lattice("Z6[6]");
        let orders: Vec<usize> = l.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(l.get(l.zero_index()).is_zero());
        assert!(l.get(l.whole_index()).is_whole());
    }

    #[test]
    fn closed_under_sum_and_intersection() {
        let l = lattice("Z4[4,2]");
        for a in l.iter() {
            for b in l.iter() {
                let s = a.sum(b).unwrap();
                let i = a.intersection(b).unwrap();
                assert!(l.position(s.mask()).is_some());
                assert!(l.position(i.mask()).is_some());
            }
        }
    }

    #[test]
    fn minimal_and_maximal() {
        let l = lattice("Z6[6]");
        let mins: Vec<usize> = l.minimal_nonzero();
        assert_eq!(mins.len(), 2);
        assert_eq!(l.get(mins[0]).order(), 2);
        assert_eq!(l.get(mins[1]).order(), 3);
        let maxes = l.maximal_proper();
        assert_eq!(maxes.len(), 2);

        let l4 = lattice("Z4[4]");
        assert_eq!(l4.minimal_nonzero().len(), 1);

        let l22 = lattice("Z2[2,2]");
        assert_eq!(l22.minimal_nonzero().len(), 3);
        assert_eq!(l22.maximal_proper().len(), 3);
    }

    #[test]
    fn zero_module_lattice() {
        let l = lattice("Z1[]");
        assert_eq!(l.len(), 1);
        assert!(l.get(0).is_zero() && l.get(0).is_whole());
        assert!(l.minimal_nonzero().is_empty());
        assert!(l.maximal_proper().is_empty());
    }

    #[test]
    fn capacity_errors_are_reported() {
        let m = FiniteModule::from_descriptor("Z2[2,2,2]").unwrap();
        let tight = Caps {
            max_submodules: 5,
            ..Caps::default()
        };
        assert!(matches!(
            SubmoduleLattice::enumerate(&m, &tight),
            Err(Error::Capacity { .. })
        ));
        let small_order = Caps {
            max_order: 4,
            ..Caps::default()
        };
        assert!(matches!(
            SubmoduleLattice::enumerate(&m, &small_order),
            Err(Error::Capacity { .. })
        ));
    }
}
