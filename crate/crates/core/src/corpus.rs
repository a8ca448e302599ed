//! Deterministic corpora of small modules.
//!
//! A corpus enumerates every (n, factor multiset) with product up to
//! `max_order`, at most `max_factors` factors, and each factor dividing n.
//! Multisets are kept in descending order; enumeration is by ascending
//! product, then descending-lexicographic factor list, then ascending ring
//! modulus. The zero module (empty factor list) is always included.

use crate::error::Result;
use crate::module::FiniteModule;
use crate::ring::{lcm, CyclicRing};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RingPolicy {
    /// n = lcm of the factors (1 for the zero module).
    Exponent,
    /// A fixed modulus; factor multisets must divide it.
    Fixed(u64),
    /// Every compatible modulus up to max_order.
    AllCompatible,
}

impl RingPolicy {
    pub fn parse(text: &str) -> Option<RingPolicy> {
        match text {
            "exponent" => Some(RingPolicy::Exponent),
            "all" => Some(RingPolicy::AllCompatible),
            other => other
                .strip_prefix("fixed:")
                .and_then(|n| n.parse().ok())
                .map(RingPolicy::Fixed),
        }
    }
}

impl std::fmt::Display for RingPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingPolicy::Exponent => write!(f, "exponent"),
            RingPolicy::Fixed(n) => write!(f, "fixed:{n}"),
            RingPolicy::AllCompatible => write!(f, "all"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSpec {
    pub max_order: usize,
    pub max_factors: usize,
    pub ring_policy: RingPolicy,
}

impl CorpusSpec {
    pub fn new(max_order: usize, ring_policy: RingPolicy) -> Self {
        CorpusSpec {
            max_order,
            max_factors: 8,
            ring_policy,
        }
    }
}

/// Factor multisets (descending) with product at most `max_order`, grouped
/// by product, ordered descending-lexicographically within a product.
fn multisets_by_product(max_order: usize, max_factors: usize) -> Vec<Vec<Vec<u64>>> {
    let mut by_product: Vec<Vec<Vec<u64>>> = vec![Vec::new(); max_order + 1];
    // Depth-first with nonincreasing factors; the visit order within a
    // product is already descending-lexicographic.
    fn descend(
        prefix: &mut Vec<u64>,
        product: usize,
        bound: u64,
        max_order: usize,
        max_factors: usize,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if prefix.len() >= max_factors {
            return;
        }
        let mut d = bound.min((max_order / product) as u64);
        while d >= 2 {
            prefix.push(d);
            let p = product * d as usize;
            out[p].push(prefix.clone());
            descend(prefix, p, d, max_order, max_factors, out);
            prefix.pop();
            d -= 1;
        }
    }
    if max_order >= 1 {
        by_product[1].push(Vec::new());
        let mut prefix = Vec::new();
        descend(
            &mut prefix,
            1,
            max_order as u64,
            max_order,
            max_factors,
            &mut by_product,
        );
        // DFS emits [8] before [4,2] only for the first factor choice;
        // within one product the full descending-lex order needs a sort.
        for bucket in by_product.iter_mut() {
            bucket.sort_by(|a, b| b.cmp(a));
        }
    }
    by_product
}

/// Descriptors (modulus, descending factors) in deterministic order.
pub fn generate_descriptors(spec: &CorpusSpec) -> Vec<(u64, Vec<u64>)> {
    let mut out = Vec::new();
    for bucket in multisets_by_product(spec.max_order, spec.max_factors) {
        for factors in bucket {
            let exponent = factors.iter().fold(1u64, |acc, &d| lcm(acc, d));
            match &spec.ring_policy {
                RingPolicy::Exponent => out.push((exponent, factors.clone())),
                RingPolicy::Fixed(n) => {
                    if *n % exponent == 0 {
                        out.push((*n, factors.clone()));
                    }
                }
                RingPolicy::AllCompatible => {
                    let mut n = exponent;
                    while n <= spec.max_order as u64 {
                        out.push((n, factors.clone()));
                        n += exponent;
                    }
                }
            }
        }
    }
    out
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<FiniteModule>> {
    generate_descriptors(spec)
        .into_iter()
        .map(|(n, factors)| {
            let ring = CyclicRing::new(n)?;
            FiniteModule::new(ring, &factors)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn descs(spec: &CorpusSpec) -> Vec<String> {
        generate_corpus(spec)
            .unwrap()
            .iter()
            .map(|m| m.descriptor())
            .collect()
    }

    #[test]
    fn exponent_corpus_up_to_eight() {
        let spec = CorpusSpec::new(8, RingPolicy::Exponent);
        let got = descs(&spec);
        assert_eq!(
            got,
            vec![
                "Z1[]", "Z2[2]", "Z3[3]", "Z4[4]", "Z2[2,2]", "Z5[5]", "Z6[6]", "Z6[3,2]",
                "Z7[7]", "Z8[8]", "Z4[4,2]", "Z2[2,2,2]",
            ]
        );
    }

    #[test]
    fn zero_module_only_for_order_one() {
        let spec = CorpusSpec::new(1, RingPolicy::Exponent);
        assert_eq!(descs(&spec), vec!["Z1[]"]);
    }

    #[test]
    fn fixed_ring_corpus() {
        let spec = CorpusSpec::new(4, RingPolicy::Fixed(4));
        assert_eq!(descs(&spec), vec!["Z4[]", "Z4[2]", "Z4[4]", "Z4[2,2]"]);
    }

    #[test]
    fn all_compatible_includes_non_faithful_actions() {
        let spec = CorpusSpec::new(4, RingPolicy::AllCompatible);
        let got = descs(&spec);
        assert!(got.contains(&"Z4[2]".to_string()));
        assert!(got.contains(&"Z2[2]".to_string()));
        assert!(got.contains(&"Z1[]".to_string()));
        assert!(got.contains(&"Z4[2,2]".to_string()));
    }

    #[test]
    fn descriptors_are_unique_and_deterministic() {
        for policy in [RingPolicy::Exponent, RingPolicy::AllCompatible] {
            let spec = CorpusSpec::new(16, policy);
            let a = descs(&spec);
            let b = descs(&spec);
            assert_eq!(a, b);
            let mut sorted = a.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), a.len());
        }
    }

    #[test]
    fn max_factors_limits_depth() {
        let spec = CorpusSpec {
            max_order: 16,
            max_factors: 2,
            ring_policy: RingPolicy::Exponent,
        };
        let got = descs(&spec);
        assert!(got.contains(&"Z4[4,2]".to_string()));
        assert!(!got.iter().any(|d| d.matches(',').count() >= 2));
    }
}
