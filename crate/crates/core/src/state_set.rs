use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported state count: sets are single 64-bit masks.
pub const MAX_STATES: usize = 64;

/// A subset of `{0, …, n-1}` stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    bits: u64,
    n: u8,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl StateSet {
    pub fn empty(n: usize) -> StateSet {
        assert!(n <= MAX_STATES);
        StateSet { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> StateSet {
        assert!(n <= MAX_STATES);
        StateSet {
            bits: full_mask(n),
            n: n as u8,
        }
    }

    /// Builds a set from a raw mask; bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<StateSet> {
        if n > MAX_STATES {
            return Err(Error::StateCount { n, max: MAX_STATES });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::StateOutOfRange {
                state: 63 - bits.leading_zeros() as usize,
                n,
            });
        }
        Ok(StateSet { bits, n: n as u8 })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> StateSet {
        debug_assert!(bits & !full_mask(n) == 0);
        StateSet { bits, n: n as u8 }
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(n: usize, states: I) -> Result<StateSet> {
        let mut s = StateSet::empty(n);
        for q in states {
            if q >= n {
                return Err(Error::StateOutOfRange { state: q, n });
            }
            s.bits |= 1 << q;
        }
        Ok(s)
    }

    pub fn singleton(n: usize, q: usize) -> Result<StateSet> {
        StateSet::from_states(n, [q])
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n() && self.bits >> q & 1 == 1
    }

    pub fn insert(&mut self, q: usize) {
        assert!(q < self.n());
        self.bits |= 1 << q;
    }

    pub fn remove(&mut self, q: usize) {
        if q < self.n() {
            self.bits &= !(1 << q);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.n())
    }

    /// Non-empty and not the whole state set.
    pub fn is_proper(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> StateSet {
        StateSet {
            bits: !self.bits & full_mask(self.n()),
            n: self.n,
        }
    }

    pub fn is_disjoint(&self, other: &StateSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// `{q ⊕ k | q ∈ self}` with addition modulo `n`.
    pub fn shifted(&self, k: usize) -> StateSet {
        let n = self.n();
        if n == 0 {
            return *self;
        }
        let k = k % n;
        if k == 0 {
            return *self;
        }
        let full = full_mask(n);
        let bits = ((self.bits << k) | (self.bits >> (n - k))) & full;
        StateSet { bits, n: self.n }
    }

    pub fn min_state(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> StateIter {
        StateIter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every proper non-empty subset of an `n`-state set, in mask order.
    pub fn proper_subsets(n: usize) -> impl Iterator<Item = StateSet> {
        let full = full_mask(n);
        (1..full).map(move |bits| StateSet::from_bits_unchecked(n, bits))
    }
}

pub struct StateIter {
    bits: u64,
}

impl Iterator for StateIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let q = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(q)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for StateIter {}

impl IntoIterator for &StateSet {
    type Item = usize;
    type IntoIter = StateIter;

    fn into_iter(self) -> StateIter {
        self.iter()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for StateSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Parses a comma-separated list of states such as `3,10,17`.
pub fn parse_state_list(n: usize, text: &str) -> Result<StateSet> {
    let mut states = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let q: usize = part
            .parse()
            .map_err(|_| Error::AutomatonParse(format!("bad state `{part}` in set list")))?;
        states.push(q);
    }
    StateSet::from_states(n, states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_algebra() {
        let s = StateSet::from_states(6, [0, 5]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(5) && !s.contains(1));
        assert_eq!(s.complement().to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(s.shifted(1).to_vec(), vec![0, 1]);
        assert_eq!(s.to_string(), "{0,5}");
        assert!(s.is_proper());
        assert!(!StateSet::full(6).is_proper());
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            StateSet::from_states(4, [4]),
            Err(Error::StateOutOfRange { state: 4, n: 4 })
        );
        assert!(StateSet::from_bits(4, 0b10000).is_err());
    }

    #[test]
    fn sixty_four_states() {
        let s = StateSet::full(64);
        assert_eq!(s.len(), 64);
        assert_eq!(s.shifted(5), s);
        assert_eq!(StateSet::singleton(64, 63).unwrap().shifted(1).to_vec(), vec![0]);
    }

    #[test]
    fn state_list() {
        assert_eq!(parse_state_list(21, "3, 10,17").unwrap().to_vec(), vec![3, 10, 17]);
        assert!(parse_state_list(21, "3,x").is_err());
        assert!(parse_state_list(21, "21").is_err());
    }

    proptest! {
        #[test]
        fn shift_is_modular_addition(n in 1usize..=64, bits in any::<u64>(), k in 0usize..200) {
            let s = StateSet::from_bits_unchecked(n, bits & full_mask(n));
            let expected = StateSet::from_states(n, s.iter().map(|q| (q + k) % n)).unwrap();
            prop_assert_eq!(s.shifted(k), expected);
        }
    }
}
