//! Fixed-width bit sets over a finite ground set.
//!
//! Masks are the canonical representation for submodule membership (bits are
//! element indices) and for point sets over a second spectrum (bits are point
//! indices). Equality, hashing and ordering are all defined on the bit
//! pattern, so a mask doubles as a canonical key.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    len: usize,
    words: Vec<u64>,
}

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Mask::empty(len);
        for w in m.words.iter_mut() {
            *w = u64::MAX;
        }
        m.trim();
        m
    }

    pub fn singleton(len: usize, bit: usize) -> Self {
        let mut m = Mask::empty(len);
        m.insert(bit);
        m
    }

    pub fn from_bits<I: IntoIterator<Item = usize>>(len: usize, bits: I) -> Self {
        let mut m = Mask::empty(len);
        for b in bits {
            m.insert(b);
        }
        m
    }

    /// Clears bits beyond `len` in the last word.
    fn trim(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.len == 0 {
            self.words.clear();
        }
    }

    /// Ground-set size, not the number of members.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn test(&self, bit: usize) -> bool {
        debug_assert!(bit < self.len);
        self.words[bit / WORD_BITS] & (1u64 << (bit % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, bit: usize) {
        assert!(bit < self.len, "bit {bit} out of range {}", self.len);
        self.words[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
    }

    pub fn remove(&mut self, bit: usize) {
        assert!(bit < self.len);
        self.words[bit / WORD_BITS] &= !(1u64 << (bit % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &Mask) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Mask) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Mask) -> Mask {
        let mut m = self.clone();
        m.union_with(other);
        m
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        let mut m = self.clone();
        m.intersect_with(other);
        m
    }

    pub fn complement(&self) -> Mask {
        let mut m = self.clone();
        for w in m.words.iter_mut() {
            *w = !*w;
        }
        m.trim();
        m
    }

    pub fn is_subset_of(&self, other: &Mask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Mask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Hex rendering of the bit pattern read as a big integer; used by the
    /// machine export format.
    pub fn hex(&self) -> String {
        let mut out = String::from("0x");
        let mut leading = true;
        for &w in self.words.iter().rev() {
            if leading {
                if w != 0 || self.words.len() == 1 {
                    out.push_str(&format!("{w:x}"));
                    leading = false;
                }
            } else {
                out.push_str(&format!("{w:016x}"));
            }
        }
        if leading {
            out.push('0');
        }
        out
    }
}

/// Masks sort by (ground size, cardinality, members lexicographically):
/// the set whose first differing element is smaller comes first.
impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.count().cmp(&other.count()))
            .then_with(|| {
                for (a, b) in self.words.iter().zip(&other.words) {
                    let diff = a ^ b;
                    if diff != 0 {
                        let low = diff & diff.wrapping_neg();
                        // The mask containing the lowest differing element
                        // has the lexicographically smaller member list.
                        return if a & low != 0 {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.iter_ones().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}
