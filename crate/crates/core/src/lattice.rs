//! Breadth-first search over the lattice of subsets reachable from `Q`.
//!
//! One pass from the full state set records, for every reachable subset,
//! its distance and the predecessor subset and letter. Letters are tried
//! `a` first and parents in queue order, so backtracking yields the
//! shortlex-least word reaching each subset.

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::state_set::{full_mask, StateSet};
use crate::transformation::Transformation;
use crate::word::{Letter, Word};

pub const DEFAULT_LATTICE_LIMIT: usize = 22;
/// Parents are packed into `u32` with the letter in the top bit.
const HARD_LIMIT: usize = 31;
pub const LATTICE_LIMIT_ENV: &str = "CREACH_LATTICE_LIMIT";

/// Largest `n` for which subset-lattice searches run. Reads
/// `CREACH_LATTICE_LIMIT`, defaulting to 22; capped at 31.
pub fn lattice_limit() -> usize {
    std::env::var(LATTICE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_LATTICE_LIMIT)
        .min(HARD_LIMIT)
}

pub(crate) fn check_capacity(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        Err(Error::LatticeCapacity { n, limit })
    } else {
        Ok(())
    }
}

/// Applies a map of the form `S ↦ ⋃_{q ∈ S} m(q)` to bitmasks with one
/// table lookup per byte of the mask.
pub struct UnionTable {
    chunks: usize,
    table: Vec<u64>,
}

impl UnionTable {
    pub fn new(per_state: &[u64]) -> UnionTable {
        let n = per_state.len();
        let chunks = n.div_ceil(8);
        let mut table = vec![0u64; chunks * 256];
        for c in 0..chunks {
            for byte in 0..256usize {
                let mut m = 0u64;
                for bit in 0..8 {
                    let q = c * 8 + bit;
                    if q < n && byte >> bit & 1 == 1 {
                        m |= per_state[q];
                    }
                }
                table[c * 256 + byte] = m;
            }
        }
        UnionTable { chunks, table }
    }

    pub fn image_of(t: &Transformation) -> UnionTable {
        let per: Vec<u64> = (0..t.n()).map(|q| 1u64 << t.apply(q)).collect();
        UnionTable::new(&per)
    }

    pub fn preimage_of(t: &Transformation) -> UnionTable {
        let mut per = vec![0u64; t.n()];
        for q in 0..t.n() {
            per[t.apply(q)] |= 1 << q;
        }
        UnionTable::new(&per)
    }

    #[inline]
    pub fn apply(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for c in 0..self.chunks {
            out |= self.table[c * 256 + (mask >> (8 * c) & 0xff) as usize];
        }
        out
    }
}

const UNSEEN: u32 = u32::MAX;

pub struct SubsetLattice {
    n: usize,
    dist: Vec<u32>,
    parent: Vec<u32>,
    visited: usize,
    max_dist: usize,
}

impl SubsetLattice {
    /// Explores every subset reachable from `Q`. Fails when `n > limit`.
    pub fn explore(dfa: &Dfa, limit: usize) -> Result<SubsetLattice> {
        let n = dfa.n();
        check_capacity(n, limit)?;
        let size = 1usize << n;
        let tables = [
            UnionTable::image_of(dfa.action(Letter::A)),
            UnionTable::image_of(dfa.action(Letter::B)),
        ];
        let mut dist = vec![UNSEEN; size];
        let mut parent = vec![0u32; size];
        let mut queue: Vec<u32> = Vec::with_capacity(size.min(1 << 16));
        let full = full_mask(n);
        dist[full as usize] = 0;
        queue.push(full as u32);
        let mut head = 0;
        let mut max_dist = 0;
        while head < queue.len() {
            let s = queue[head];
            head += 1;
            let ds = dist[s as usize];
            for (li, table) in tables.iter().enumerate() {
                let t = table.apply(s as u64) as usize;
                if dist[t] == UNSEEN {
                    dist[t] = ds + 1;
                    max_dist = max_dist.max(ds as usize + 1);
                    parent[t] = s | (li as u32) << 31;
                    queue.push(t as u32);
                }
            }
        }
        Ok(SubsetLattice {
            n,
            dist,
            parent,
            visited: queue.len(),
            max_dist,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of reachable non-empty subsets.
    pub fn reachable_count(&self) -> usize {
        self.visited
    }

    pub fn is_complete(&self) -> bool {
        self.visited == (1usize << self.n) - 1
    }

    /// Length of the longest shortest word.
    pub fn max_distance(&self) -> usize {
        self.max_dist
    }

    pub fn distance(&self, s: &StateSet) -> Option<usize> {
        match self.dist[s.bits() as usize] {
            UNSEEN => None,
            d => Some(d as usize),
        }
    }

    /// Shortlex-least shortest word `w` with `Q · w = S`.
    pub fn word_to(&self, s: &StateSet) -> Option<Word> {
        self.distance(s)?;
        let full = full_mask(self.n) as u32;
        let mut letters = Vec::new();
        let mut cur = s.bits() as u32;
        while cur != full {
            let p = self.parent[cur as usize];
            letters.push(Letter::from_index((p >> 31) as usize));
            cur = p & !(1 << 31);
        }
        letters.reverse();
        Some(Word::from_letters(letters))
    }

    /// Reachable subsets in mask order.
    pub fn reachable(&self) -> impl Iterator<Item = (StateSet, usize)> + '_ {
        self.dist
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != UNSEEN)
            .map(|(m, &d)| (StateSet::from_bits_unchecked(self.n, m as u64), d as usize))
    }

    /// Non-empty subsets not reachable from `Q`, in mask order.
    pub fn unreachable(&self) -> impl Iterator<Item = StateSet> + '_ {
        self.dist
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &d)| d == UNSEEN)
            .map(|(m, _)| StateSet::from_bits_unchecked(self.n, m as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_example, Example};
    use rand::{Rng, SeedableRng};

    #[test]
    fn union_table_matches_direct_image() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.gen_range(1..=40);
            let map: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            let t = Transformation::from_map(&map).unwrap();
            let img = UnionTable::image_of(&t);
            let pre = UnionTable::preimage_of(&t);
            for _ in 0..50 {
                let s = StateSet::from_bits(n, rng.gen::<u64>() & full_mask(n)).unwrap();
                assert_eq!(img.apply(s.bits()), t.image_of(&s).bits());
                assert_eq!(pre.apply(s.bits()), t.preimage_of(&s).bits());
            }
        }
    }

    #[test]
    fn words_reach_their_sets() {
        let dfa = builtin_example(Example::E12);
        let lat = SubsetLattice::explore(&dfa, 22).unwrap();
        assert!(lat.is_complete());
        for (s, d) in lat.reachable() {
            let w = lat.word_to(&s).unwrap();
            assert_eq!(w.len(), d);
            assert_eq!(dfa.image(&dfa.all_states(), &w).unwrap(), s);
        }
    }

    #[test]
    fn capacity_error() {
        let e48 = builtin_example(Example::E48);
        assert!(matches!(
            SubsetLattice::explore(&e48, 22),
            Err(Error::LatticeCapacity { n: 48, limit: 22 })
        ));
        assert!(matches!(
            SubsetLattice::explore(&builtin_example(Example::E12), 11),
            Err(Error::LatticeCapacity { n: 12, limit: 11 })
        ));
    }
}
