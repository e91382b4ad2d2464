use std::fmt;

use crate::error::{Error, Result};
use crate::state_set::{StateSet, MAX_STATES};

/// A total map on `{0, …, n-1}`. Composition reads left to right:
/// `s.then(&t)` maps `q` to `t(s(q))`, matching the right action of words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<u8>);

impl Transformation {
    pub fn identity(n: usize) -> Transformation {
        assert!(n <= MAX_STATES);
        Transformation((0..n as u8).collect())
    }

    pub fn from_map(map: &[usize]) -> Result<Transformation> {
        let n = map.len();
        if n == 0 || n > MAX_STATES {
            return Err(Error::StateCount { n, max: MAX_STATES });
        }
        if let Some(&q) = map.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: q, n });
        }
        Ok(Transformation(map.iter().map(|&q| q as u8).collect()))
    }

    pub(crate) fn from_bytes(bytes: Vec<u8>) -> Transformation {
        Transformation(bytes)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.0[q] as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&q| q as usize).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| next.0[q as usize]).collect())
    }

    pub fn image_of(&self, set: &StateSet) -> StateSet {
        let mut bits = 0u64;
        for q in set {
            bits |= 1 << self.0[q];
        }
        StateSet::from_bits_unchecked(self.n(), bits)
    }

    pub fn preimage_of(&self, set: &StateSet) -> StateSet {
        let mut bits = 0u64;
        for (q, &t) in self.0.iter().enumerate() {
            if set.contains(t as usize) {
                bits |= 1 << q;
            }
        }
        StateSet::from_bits_unchecked(self.n(), bits)
    }

    pub fn range(&self) -> StateSet {
        self.image_of(&StateSet::full(self.n()))
    }

    /// States with no preimage.
    pub fn excluded(&self) -> StateSet {
        self.range().complement()
    }

    /// States with at least two preimages.
    pub fn duplicated(&self) -> StateSet {
        let mut seen = 0u64;
        let mut dup = 0u64;
        for &t in &self.0 {
            let bit = 1u64 << t;
            dup |= seen & bit;
            seen |= bit;
        }
        StateSet::from_bits_unchecked(self.n(), dup)
    }

    pub fn is_permutation(&self) -> bool {
        self.range().is_full()
    }

    /// True when the map is one cycle through all `n` states.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.n();
        let mut q = 0usize;
        for step in 1..=n {
            q = self.apply(q);
            if q == 0 {
                return step == n;
            }
        }
        false
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excluded_and_duplicated() {
        let t = Transformation::from_map(&[2, 1, 5, 3, 4, 2]).unwrap();
        assert_eq!(t.excluded().to_vec(), vec![0]);
        assert_eq!(t.duplicated().to_vec(), vec![2]);
        assert!(!t.is_permutation());
    }

    #[test]
    fn cycles() {
        assert!(Transformation::from_map(&[1, 2, 0]).unwrap().is_full_cycle());
        assert!(!Transformation::from_map(&[1, 0, 2]).unwrap().is_full_cycle());
        assert!(!Transformation::from_map(&[0, 0]).unwrap().is_full_cycle());
        assert!(Transformation::identity(1).is_full_cycle());
    }

    #[test]
    fn composition_order() {
        let s = Transformation::from_map(&[1, 1, 2]).unwrap();
        let t = Transformation::from_map(&[2, 0, 1]).unwrap();
        assert_eq!(s.then(&t).to_vec(), vec![0, 0, 1]);
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(Transformation::from_map(&[]).is_err());
        assert_eq!(
            Transformation::from_map(&[0, 3, 1]),
            Err(Error::StateOutOfRange { state: 3, n: 3 })
        );
    }
}
