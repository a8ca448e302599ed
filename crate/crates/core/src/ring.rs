//! The coefficient ring Z/nZ and its divisor-indexed ideals.
//!
//! Every ideal of Z/nZ is principal with a unique generator d dividing n,
//! so ideal arithmetic reduces to gcd/lcm bookkeeping on divisors. The zero
//! ideal is (n) and the whole ring is (1); for n = 1 the two coincide.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub(crate) fn is_prime(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    if d % 2 == 0 {
        return d == 2;
    }
    let mut p = 3;
    while p * p <= d {
        if d % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[derive(Debug)]
struct RingData {
    modulus: u64,
    divisors: Vec<u64>,
}

/// The ring Z/nZ, n >= 1. Cheap to clone.
#[derive(Clone, Debug)]
pub struct CyclicRing {
    data: Arc<RingData>,
}

impl CyclicRing {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(CyclicRing {
            data: Arc::new(RingData {
                modulus: n,
                divisors: divisors(n),
            }),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.data.modulus
    }

    /// Divisors of n in ascending order; in bijection with the ideals.
    pub fn divisors(&self) -> &[u64] {
        &self.data.divisors
    }

    /// The ideal with generator `d`; `d` must divide n.
    pub fn ideal(&self, d: u64) -> Result<Ideal> {
        if d == 0 || self.modulus() % d != 0 {
            return Err(Error::NotADivisor(d));
        }
        Ok(Ideal {
            ring: self.clone(),
            generator: d,
        })
    }

    /// The ideal generated by an arbitrary ring element.
    pub fn ideal_generated_by(&self, g: u64) -> Ideal {
        let n = self.modulus();
        let d = if g % n == 0 { n } else { gcd(g % n, n) };
        Ideal {
            ring: self.clone(),
            generator: d,
        }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            ring: self.clone(),
            generator: self.modulus(),
        }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal {
            ring: self.clone(),
            generator: 1,
        }
    }

    /// Prime ideals: {(p) : p prime, p | n}. Empty for the zero ring.
    pub fn spectrum(&self) -> Vec<Ideal> {
        self.divisors()
            .iter()
            .copied()
            .filter(|&d| is_prime(d))
            .map(|d| Ideal {
                ring: self.clone(),
                generator: d,
            })
            .collect()
    }

    pub fn iter_ideals(&self) -> impl Iterator<Item = Ideal> + '_ {
        self.divisors().iter().map(move |&d| Ideal {
            ring: self.clone(),
            generator: d,
        })
    }
}

impl PartialEq for CyclicRing {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus()
    }
}

impl Eq for CyclicRing {}

/// An ideal (d) of Z/nZ with d | n.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: CyclicRing,
    generator: u64,
}

impl Ideal {
    pub fn ring(&self) -> &CyclicRing {
        &self.ring
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.generator == self.ring.modulus()
    }

    pub fn is_unit(&self) -> bool {
        self.generator == 1
    }

    pub fn is_prime(&self) -> bool {
        is_prime(self.generator)
    }

    pub fn contains(&self, r: u64) -> bool {
        (r % self.ring.modulus()) % self.generator == 0
    }

    /// (d1)(d2) = (gcd(d1*d2, n))
    pub fn product(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        let n = self.ring.modulus();
        let g = gcd(self.generator * other.generator, n);
        Ideal {
            ring: self.ring.clone(),
            generator: g,
        }
    }

    /// (d1) + (d2) = (gcd(d1, d2))
    pub fn sum(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        Ideal {
            ring: self.ring.clone(),
            generator: gcd(self.generator, other.generator),
        }
    }

    /// (d1) ∩ (d2) = (lcm(d1, d2))
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        Ideal {
            ring: self.ring.clone(),
            generator: lcm(self.generator, other.generator),
        }
    }

    /// (d1) ⊆ (d2) iff d2 | d1.
    pub fn is_subideal_of(&self, other: &Ideal) -> bool {
        debug_assert_eq!(self.ring, other.ring);
        self.generator % other.generator == 0
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.ring.modulus())
            .step_by(self.generator as usize)
            .collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generator == other.generator
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_of_six() {
        let r = CyclicRing::new(6).unwrap();
        assert_eq!(r.divisors(), &[1, 2, 3, 6]);
        let primes: Vec<u64> = r.spectrum().iter().map(|i| i.generator()).collect();
        assert_eq!(primes, vec![2, 3]);
    }

    #[test]
    fn ring_of_four() {
        let r = CyclicRing::new(4).unwrap();
        assert_eq!(r.divisors(), &[1, 2, 4]);
        let primes: Vec<u64> = r.spectrum().iter().map(|i| i.generator()).collect();
        assert_eq!(primes, vec![2]);
    }

    #[test]
    fn zero_ring() {
        let r = CyclicRing::new(1).unwrap();
        assert_eq!(r.divisors(), &[1]);
        assert!(r.spectrum().is_empty());
        assert!(r.unit_ideal().is_zero());
    }

    #[test]
    fn rejects_zero_modulus() {
        assert!(CyclicRing::new(0).is_err());
    }

    #[test]
    fn ideal_arithmetic() {
        let r = CyclicRing::new(12).unwrap();
        let i2 = r.ideal(2).unwrap();
        let i3 = r.ideal(3).unwrap();
        assert_eq!(i2.product(&i3).generator(), 6);
        assert_eq!(i2.sum(&i3).generator(), 1);
        assert_eq!(i2.intersection(&i3).generator(), 6);
        let i4 = r.ideal(4).unwrap();
        // (4)(4) = (16 mod gcd with 12) = (4)
        assert_eq!(i4.product(&i4).generator(), 4);
        assert!(i2.is_prime());
        assert!(!i4.is_prime());
        assert!(i4.is_subideal_of(&i2));
        assert!(!i2.is_subideal_of(&i4));
        assert_eq!(i4.elements(), vec![0, 4, 8]);
        assert!(i2.contains(10));
        assert!(!i2.contains(3));
    }

    #[test]
    fn generated_ideals_normalize() {
        let r = CyclicRing::new(12).unwrap();
        assert_eq!(r.ideal_generated_by(8).generator(), 4);
        assert_eq!(r.ideal_generated_by(0).generator(), 12);
        assert_eq!(r.ideal_generated_by(5).generator(), 1);
    }
}
