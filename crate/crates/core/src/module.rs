//! Finite Z/nZ-modules presented as direct sums of cyclic groups.
//!
//! A module is a factor list (d_1,...,d_k) with each d_i >= 2 dividing n.
//! Elements are mixed-radix tuples enumerated row-major (first coordinate
//! most significant), so index order equals lexicographic tuple order and
//! index 0 is the zero element. Addition and the scalar action are table
//! driven; the scalar action factors through Z/exponent, which is what the
//! scalar table is keyed on.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::ring::{lcm, CyclicRing};
use std::fmt;
use std::sync::Arc;

/// Hard representational limit; the configurable enumeration cap in
/// [`crate::lattice::Caps`] is what callers normally hit first.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug)]
struct ModuleData {
    ring: CyclicRing,
    factors: Vec<u64>,
    order: usize,
    exponent: u64,
    strides: Vec<usize>,
    add: Vec<u16>,
    scalar: Vec<u16>,
}

/// A finite module over Z/nZ. Cheap to clone; identity is (n, sorted factors).
#[derive(Clone)]
pub struct FiniteModule {
    data: Arc<ModuleData>,
}

impl FiniteModule {
    pub fn new(ring: CyclicRing, factors: &[u64]) -> Result<Self> {
        let n = ring.modulus();
        let mut factors = factors.to_vec();
        for &d in &factors {
            if d < 2 {
                return Err(Error::FactorTooSmall(d));
            }
            if n % d != 0 {
                return Err(Error::FactorNotDividing {
                    factor: d,
                    modulus: n,
                });
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        let mut order: usize = 1;
        for &d in &factors {
            order = order
                .checked_mul(d as usize)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or(Error::Capacity {
                    what: "module order",
                    limit: MAX_ORDER,
                })?;
        }
        let exponent = factors.iter().fold(1u64, |acc, &d| lcm(acc, d));
        let k = factors.len();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }

        let decode = |x: usize| -> Vec<u64> {
            let mut coords = Vec::with_capacity(k);
            let mut rest = x;
            for i in 0..k {
                coords.push((rest / strides[i]) as u64);
                rest %= strides[i];
            }
            coords
        };

        let mut add = vec![0u16; order * order];
        for x in 0..order {
            let cx = decode(x);
            for y in 0..=x {
                let cy = decode(y);
                let mut idx = 0usize;
                for i in 0..k {
                    idx += (((cx[i] + cy[i]) % factors[i]) as usize) * strides[i];
                }
                add[x * order + y] = idx as u16;
                add[y * order + x] = idx as u16;
            }
        }

        let mut scalar = vec![0u16; exponent as usize * order];
        for r in 0..exponent {
            for x in 0..order {
                let cx = decode(x);
                let mut idx = 0usize;
                for i in 0..k {
                    idx += ((r * cx[i] % factors[i]) as usize) * strides[i];
                }
                scalar[r as usize * order + x] = idx as u16;
            }
        }

        Ok(FiniteModule {
            data: Arc::new(ModuleData {
                ring,
                factors,
                order,
                exponent,
                strides,
                add,
                scalar,
            }),
        })
    }

    pub fn from_descriptor(text: &str) -> Result<Self> {
        let (ring, factors) = parse_descriptor(text)?;
        FiniteModule::new(ring, &factors)
    }

    pub fn ring(&self) -> &CyclicRing {
        &self.data.ring
    }

    /// Factors in descending order.
    pub fn factors(&self) -> &[u64] {
        &self.data.factors
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn is_zero_module(&self) -> bool {
        self.data.order == 1
    }

    /// lcm of the factors; the scalar action of r depends only on r mod this.
    pub fn exponent(&self) -> u64 {
        self.data.exponent
    }

    pub fn zero(&self) -> u16 {
        0
    }

    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.data.add[x as usize * self.data.order + y as usize]
    }

    pub fn scalar_mul(&self, r: u64, x: u16) -> u16 {
        let r = (r % self.data.exponent) as usize;
        self.data.scalar[r * self.data.order + x as usize]
    }

    pub fn coords(&self, x: u16) -> Vec<u64> {
        let mut coords = Vec::with_capacity(self.data.factors.len());
        let mut rest = x as usize;
        for &s in &self.data.strides {
            coords.push((rest / s) as u64);
            rest %= s;
        }
        coords
    }

    pub fn index_of(&self, coords: &[u64]) -> Result<u16> {
        if coords.len() != self.data.factors.len() {
            return Err(Error::Internal(format!(
                "coordinate arity {} does not match factor count {}",
                coords.len(),
                self.data.factors.len()
            )));
        }
        let mut idx = 0usize;
        for (i, (&c, &d)) in coords.iter().zip(&self.data.factors).enumerate() {
            if c >= d {
                return Err(Error::Internal(format!(
                    "coordinate {c} out of range for factor {d}"
                )));
            }
            idx += c as usize * self.data.strides[i];
        }
        Ok(idx as u16)
    }

    /// The i-th canonical generator e_i (coordinate tuple with 1 in slot i).
    pub fn generator(&self, i: usize) -> u16 {
        self.data.strides[i] as u16
    }

    /// Elements x with d*x = 0.
    pub fn torsion_mask(&self, d: u64) -> Mask {
        let mut m = Mask::empty(self.order());
        for x in 0..self.order() as u16 {
            if self.scalar_mul(d, x) == 0 {
                m.insert(x as usize);
            }
        }
        m
    }

    /// Canonical `Z<n>[d1,d2,...]` form, factors descending.
    pub fn descriptor(&self) -> String {
        let factors: Vec<String> = self.data.factors.iter().map(|d| d.to_string()).collect();
        format!("Z{}[{}]", self.ring().modulus(), factors.join(","))
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring() && self.factors() == other.factors()
    }
}

impl Eq for FiniteModule {}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

/// Parses `Z<n>[d1,d2,...]`, whitespace-insensitive. An empty bracket list
/// denotes the zero module. Syntax errors and divisibility violations are
/// reported as distinct error variants.
pub fn parse_descriptor(text: &str) -> Result<(CyclicRing, Vec<u64>)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact
        .strip_prefix('Z')
        .ok_or_else(|| Error::DescriptorSyntax(format!("expected leading 'Z' in {text:?}")))?;
    let open = rest
        .find('[')
        .ok_or_else(|| Error::DescriptorSyntax(format!("expected '[' in {text:?}")))?;
    let (mod_str, bracket) = rest.split_at(open);
    let inner = bracket
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::DescriptorSyntax(format!("expected closing ']' in {text:?}")))?;
    let n: u64 = mod_str
        .parse()
        .map_err(|_| Error::DescriptorSyntax(format!("bad modulus {mod_str:?} in {text:?}")))?;
    let ring = CyclicRing::new(n)?;
    let mut factors = Vec::new();
    if !inner.is_empty() {
        for part in inner.split(',') {
            let d: u64 = part.parse().map_err(|_| {
                Error::DescriptorSyntax(format!("bad factor {part:?} in {text:?}"))
            })?;
            factors.push(d);
        }
    }
    // Divisibility is validated here too so parse failures carry the
    // distinct error before any module is built.
    for &d in &factors {
        if d < 2 {
            return Err(Error::FactorTooSmall(d));
        }
        if n % d != 0 {
            return Err(Error::FactorNotDividing {
                factor: d,
                modulus: n,
            });
        }
    }
    Ok((ring, factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six() {
        let m = FiniteModule::from_descriptor("Z6[6]").unwrap();
        assert_eq!(m.order(), 6);
        assert_eq!(m.exponent(), 6);
        assert_eq!(m.add(4, 5), 3);
        assert_eq!(m.scalar_mul(2, 4), 2);
        assert_eq!(m.descriptor(), "Z6[6]");
    }

    #[test]
    fn direct_sum_enumeration() {
        let m = FiniteModule::from_descriptor("Z2[2,2]").unwrap();
        assert_eq!(m.order(), 4);
        assert_eq!(m.coords(0), vec![0, 0]);
        assert_eq!(m.coords(1), vec![0, 1]);
        assert_eq!(m.coords(2), vec![1, 0]);
        assert_eq!(m.coords(3), vec![1, 1]);
        assert_eq!(m.add(1, 2), 3);
        assert_eq!(m.add(3, 3), 0);
        assert_eq!(m.generator(0), 2);
        assert_eq!(m.generator(1), 1);
    }

    #[test]
    fn factors_are_canonicalized_descending() {
        let m = FiniteModule::from_descriptor("Z4[2,4]").unwrap();
        assert_eq!(m.factors(), &[4, 2]);
        assert_eq!(m.descriptor(), "Z4[4,2]");
        let same = FiniteModule::from_descriptor("Z4[4,2]").unwrap();
        assert_eq!(m, same);
    }

    #[test]
    fn zero_module() {
        let m = FiniteModule::from_descriptor("Z1[]").unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.exponent(), 1);
        assert_eq!(m.add(0, 0), 0);
        assert!(m.is_zero_module());
    }

    #[test]
    fn rejects_bad_factor() {
        assert!(matches!(
            FiniteModule::from_descriptor("Z4[3]"),
            Err(Error::FactorNotDividing {
                factor: 3,
                modulus: 4
            })
        ));
        assert!(matches!(
            FiniteModule::from_descriptor("Z4[1]"),
            Err(Error::FactorTooSmall(1))
        ));
    }

    #[test]
    fn descriptor_syntax_errors_are_distinct() {
        assert!(matches!(
            parse_descriptor("Q6[6]"),
            Err(Error::DescriptorSyntax(_))
        ));
        assert!(matches!(
            parse_descriptor("Z6(6)"),
            Err(Error::DescriptorSyntax(_))
        ));
        assert!(matches!(
            parse_descriptor("Z6[6"),
            Err(Error::DescriptorSyntax(_))
        ));
        assert!(matches!(
            parse_descriptor(" Z 6 [ 6 ] "),
            Ok((ring, f)) if ring.modulus() == 6 && f == vec![6]
        ));
    }

    #[test]
    fn torsion_mask_of_z4() {
        let m = FiniteModule::from_descriptor("Z4[4]").unwrap();
        let t = m.torsion_mask(2);
        assert_eq!(t.iter_ones().collect::<Vec<_>>(), vec![0, 2]);
    }
}
