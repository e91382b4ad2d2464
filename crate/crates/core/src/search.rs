//! Breadth-first enumeration of words by the transformations they induce.
//!
//! Nodes are distinct transformations, each stored once with the
//! shortlex-least word inducing it. Levels are generated in order, parents
//! in discovery order and `a` before `b`, so discovery order is the shortlex
//! order of those least words. Any property that depends only on the
//! induced transformation therefore has its shortlex-least witness at the
//! first node satisfying it.

use std::ops::Range;

use indexmap::IndexSet;

use crate::dfa::Dfa;
use crate::state_set::full_mask;
use crate::word::{Letter, Word};

pub struct TransformationBfs<'a> {
    dfa: &'a Dfa,
    nodes: IndexSet<Box<[u8]>>,
    parent: Vec<(u32, Letter)>,
    level: Range<usize>,
    depth: usize,
}

impl<'a> TransformationBfs<'a> {
    pub fn new(dfa: &'a Dfa) -> TransformationBfs<'a> {
        let id: Box<[u8]> = (0..dfa.n() as u8).collect();
        let mut nodes = IndexSet::new();
        nodes.insert(id);
        TransformationBfs {
            dfa,
            nodes,
            parent: vec![(u32::MAX, Letter::A)],
            level: 0..1,
            depth: 0,
        }
    }

    /// Length of the words at the current level.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Node ids discovered at the current depth.
    pub fn current_level(&self) -> Range<usize> {
        self.level.clone()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Generates the next level and returns its ids; an empty range means
    /// the whole transition monoid has been visited.
    pub fn next_level(&mut self) -> Range<usize> {
        let start = self.nodes.len();
        let mut buf = vec![0u8; self.dfa.n()];
        for id in self.level.clone() {
            for l in Letter::ALL {
                let g = self.dfa.action(l).as_bytes();
                for (dst, &q) in buf.iter_mut().zip(self.nodes[id].iter()) {
                    *dst = g[q as usize];
                }
                if !self.nodes.contains(buf.as_slice()) {
                    self.nodes.insert(buf.clone().into_boxed_slice());
                    self.parent.push((id as u32, l));
                }
            }
        }
        self.level = start..self.nodes.len();
        self.depth += 1;
        self.level.clone()
    }

    pub fn transformation(&self, id: usize) -> &[u8] {
        &self.nodes[id]
    }

    /// The shortlex-least word inducing node `id`.
    pub fn word(&self, mut id: usize) -> Word {
        let mut letters = Vec::new();
        while id != 0 {
            let (p, l) = self.parent[id];
            letters.push(l);
            id = p as usize;
        }
        letters.reverse();
        Word::from_letters(letters)
    }
}

/// Range mask and duplicate mask of a transformation table.
#[inline]
pub(crate) fn range_and_dupl(t: &[u8]) -> (u64, u64) {
    let mut seen = 0u64;
    let mut dup = 0u64;
    for &q in t {
        let bit = 1u64 << q;
        dup |= seen & bit;
        seen |= bit;
    }
    (seen, dup)
}

#[inline]
pub(crate) fn excl_and_dupl(t: &[u8]) -> (u64, u64) {
    let (range, dup) = range_and_dupl(t);
    (!range & full_mask(t.len()), dup)
}

/// Outcome of a bounded shortlex search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Word),
    /// Every word up to the bound was examined.
    BoundReached,
    /// Every transformation in the monoid was examined.
    Exhausted,
}

impl SearchOutcome {
    pub fn found(self) -> Option<Word> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Shortlex-least word of length at most `max_len` (unbounded when `None`)
/// whose transformation satisfies `pred`.
pub fn find_shortlex(
    dfa: &Dfa,
    max_len: Option<usize>,
    mut pred: impl FnMut(&[u8]) -> bool,
) -> SearchOutcome {
    let mut bfs = TransformationBfs::new(dfa);
    loop {
        for id in bfs.current_level() {
            if pred(bfs.transformation(id)) {
                return SearchOutcome::Found(bfs.word(id));
            }
        }
        if max_len.is_some_and(|m| bfs.depth() >= m) {
            return SearchOutcome::BoundReached;
        }
        if bfs.next_level().is_empty() {
            return SearchOutcome::Exhausted;
        }
    }
}
