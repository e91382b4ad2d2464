//! Expanding and extending words.
//!
//! A word `w` expands a proper non-empty `S` when some `P` with `|P| > |S|`
//! has `P · w = S`; equivalently `excl(w) ∩ S = ∅` and `dupl(w) ∩ S ≠ ∅`.
//! It extends `S` when the full preimage `S w⁻¹` is larger than `S`.
//! Expansion implies extension, not conversely.

use serde::Serialize;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::lattice::{check_capacity, UnionTable};
use crate::orbit::orbit_data;
use crate::search::{excl_and_dupl, find_shortlex, SearchOutcome, TransformationBfs};
use crate::state_set::{full_mask, StateSet};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionResult {
    pub word: Word,
    /// `⋃_{s ∈ S} s w⁻¹`; maps onto `S` and is strictly larger.
    pub preimage_witness: StateSet,
}

fn check_proper(dfa: &Dfa, s: &StateSet) -> Result<()> {
    dfa.check_set(s)?;
    if s.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperSubset(*s))
    }
}

#[inline]
fn criterion(excl: u64, dupl: u64, s: u64) -> bool {
    excl & s == 0 && dupl & s != 0
}

pub fn expands(dfa: &Dfa, w: &Word, s: &StateSet) -> Result<Option<ExpansionResult>> {
    check_proper(dfa, s)?;
    let t = dfa.transformation_of(w);
    let (excl, dupl) = excl_and_dupl(t.as_bytes());
    Ok(criterion(excl, dupl, s.bits()).then(|| ExpansionResult {
        word: w.clone(),
        preimage_witness: t.preimage_of(s),
    }))
}

/// Shortlex-least expanding word for `S`, searching up to `max_len`
/// letters (or the whole transition monoid when `None`).
pub fn search_expanding_word(
    dfa: &Dfa,
    s: &StateSet,
    max_len: Option<usize>,
) -> Result<SearchOutcome> {
    check_proper(dfa, s)?;
    let bits = s.bits();
    Ok(find_shortlex(dfa, max_len, |t| {
        let (excl, dupl) = excl_and_dupl(t);
        criterion(excl, dupl, bits)
    }))
}

pub fn shortest_expanding_word(dfa: &Dfa, s: &StateSet, max_len: usize) -> Result<Option<Word>> {
    Ok(search_expanding_word(dfa, s, Some(max_len))?.found())
}

/// Shortlex-least expanding words for several sets from one search, up to
/// `max_len` letters (or the whole transition monoid when `None`).
pub fn shortest_expanding_words(
    dfa: &Dfa,
    sets: &[StateSet],
    max_len: Option<usize>,
) -> Result<Vec<Option<Word>>> {
    for s in sets {
        check_proper(dfa, s)?;
    }
    let mut out = vec![None; sets.len()];
    let mut open: Vec<usize> = (0..sets.len()).collect();
    let mut bfs = TransformationBfs::new(dfa);
    while !open.is_empty() {
        for id in bfs.current_level() {
            let (excl, dupl) = excl_and_dupl(bfs.transformation(id));
            open.retain(|&i| {
                if criterion(excl, dupl, sets[i].bits()) {
                    out[i] = Some(bfs.word(id));
                    false
                } else {
                    true
                }
            });
        }
        if max_len.is_some_and(|m| bfs.depth() >= m) || bfs.next_level().is_empty() {
            break;
        }
    }
    Ok(out)
}

/// Expandable by a word of length at most `n`.
pub fn is_n_expandable(dfa: &Dfa, s: &StateSet) -> Result<bool> {
    Ok(shortest_expanding_word(dfa, s, dfa.n())?.is_some())
}

/// For a standardized automaton: picks a short edge `q → q ⊕ d_s` of the
/// restricted orbit digraph entering `S` from outside (minimal `q`, then
/// minimal `s`) and returns `a^{s+1} b^q`, which has length at most `n`
/// and expands `S`. `None` exactly when `S` is a union of `H₀`-cosets.
pub fn orbit_expanding_word(dfa: &Dfa, s: &StateSet) -> Result<Option<Word>> {
    check_proper(dfa, s)?;
    let od = orbit_data(dfa)?;
    let n = od.n;
    for q in s.complement().iter() {
        for (idx, &ds) in od.orbit.iter().enumerate() {
            if od.is_short(q, idx) && s.contains((q + ds) % n) {
                let w = Word::power_of(Letter::A, idx + 1).concat(&Word::power_of(Letter::B, q));
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

pub fn extends(dfa: &Dfa, w: &Word, s: &StateSet) -> Result<bool> {
    check_proper(dfa, s)?;
    Ok(dfa.preimage(s, w)?.len() > s.len())
}

pub fn search_extending_word(
    dfa: &Dfa,
    s: &StateSet,
    max_len: Option<usize>,
) -> Result<SearchOutcome> {
    check_proper(dfa, s)?;
    let k = s.len();
    Ok(find_shortlex(dfa, max_len, |t| {
        t.iter().filter(|&&q| s.contains(q as usize)).count() > k
    }))
}

pub fn shortest_extending_word(dfa: &Dfa, s: &StateSet, max_len: usize) -> Result<Option<Word>> {
    Ok(search_extending_word(dfa, s, Some(max_len))?.found())
}

pub fn is_n_extensible(dfa: &Dfa, s: &StateSet) -> Result<bool> {
    Ok(shortest_extending_word(dfa, s, dfa.n())?.is_some())
}

/// Minimal length of an expanding word for every subset, indexed by mask;
/// `None` for `∅`, `Q`, and subsets with no expanding word of length at
/// most `max_len`. Runs one transformation search and, per level, a
/// superset-union pass over the subset lattice.
pub fn minimal_expansion_lengths(
    dfa: &Dfa,
    max_len: usize,
    lattice_limit: usize,
) -> Result<Vec<Option<usize>>> {
    let n = dfa.n();
    check_capacity(n, lattice_limit)?;
    let classes: Vec<u64> = (0..n).map(|q| 1u64 << q).collect();
    Ok(class_expansion_lengths(dfa, &classes, max_len))
}

/// As [`minimal_expansion_lengths`], restricted to unions of the given
/// disjoint classes covering `Q`. Entry `m` describes the union of the
/// classes whose bits are set in `m`.
fn class_expansion_lengths(dfa: &Dfa, classes: &[u64], max_len: usize) -> Vec<Option<usize>> {
    let k = classes.len();
    let mut class_of = vec![0u64; dfa.n()];
    for (i, &c) in classes.iter().enumerate() {
        for (q, slot) in class_of.iter_mut().enumerate() {
            if c >> q & 1 == 1 {
                *slot = 1 << i;
            }
        }
    }
    let project = UnionTable::new(&class_of);
    let size = 1usize << k;
    let full = full_mask(k);
    let mut out = vec![None; size];
    // allowed[A] = union of dupl(w) over found words with excl(w) = ¬A
    let mut allowed = vec![0u64; size];
    let mut bfs = TransformationBfs::new(dfa);
    let mut level = bfs.current_level();
    loop {
        let mut changed = false;
        for id in level {
            let (excl, dupl) = excl_and_dupl(bfs.transformation(id));
            let (excl, dupl) = (project.apply(excl), project.apply(dupl));
            let a = (!excl & full) as usize;
            if allowed[a] | dupl != allowed[a] {
                allowed[a] |= dupl;
                changed = true;
            }
        }
        if changed {
            // Superset union: closure[S] = ⋃_{A ⊇ S} allowed[A].
            let mut closure = allowed.clone();
            for bit in 0..k {
                let b = 1usize << bit;
                for m in 0..size {
                    if m & b == 0 {
                        closure[m] |= closure[m | b];
                    }
                }
            }
            for m in 1..size - 1 {
                if out[m].is_none() && closure[m] & m as u64 != 0 {
                    out[m] = Some(bfs.depth());
                }
            }
        }
        if bfs.depth() >= max_len {
            break;
        }
        level = bfs.next_level();
        if level.is_empty() {
            break;
        }
    }
    out
}

/// Proper non-empty unions of `H₀`-cosets that no word of length at most
/// `max_len` expands. For a standardized automaton every other subset is
/// already expanded by its orbit word, so this lists all subsets that are
/// not `max_len`-expandable once `max_len ≥ n`.
pub fn non_expandable_coset_unions(
    dfa: &Dfa,
    max_len: usize,
    lattice_limit: usize,
) -> Result<Vec<StateSet>> {
    let od = orbit_data(dfa)?;
    let g = od.h0_generator;
    check_capacity(g, lattice_limit)?;
    let classes: Vec<u64> = od
        .h0_cosets()
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &q| m | 1 << q))
        .collect();
    let lengths = class_expansion_lengths(dfa, &classes, max_len);
    Ok((1..lengths.len().saturating_sub(1))
        .filter(|&m| lengths[m].is_none())
        .map(|m| {
            let bits = (0..g)
                .filter(|&i| m >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | classes[i]);
            StateSet::from_bits_unchecked(od.n, bits)
        })
        .collect())
}

/// Proper non-empty subsets that no word of length at most `max_len` expands.
pub fn non_expandable_subsets(
    dfa: &Dfa,
    max_len: usize,
    lattice_limit: usize,
) -> Result<Vec<StateSet>> {
    let n = dfa.n();
    let lengths = minimal_expansion_lengths(dfa, max_len, lattice_limit)?;
    Ok((1..lengths.len() - 1)
        .filter(|&m| lengths[m].is_none())
        .map(|m| StateSet::from_bits_unchecked(n, m as u64))
        .collect())
}

/// Minimal length of an extending word for every subset, indexed by mask.
/// Uses `m_L(S) = max(|S|, m_{L-1}(S a⁻¹), m_{L-1}(S b⁻¹))`, the largest
/// preimage size reachable with at most `L` letters.
pub fn minimal_extension_lengths(
    dfa: &Dfa,
    max_len: usize,
    lattice_limit: usize,
) -> Result<Vec<Option<usize>>> {
    let n = dfa.n();
    check_capacity(n, lattice_limit)?;
    let size = 1usize << n;
    let pre = [
        UnionTable::preimage_of(dfa.action(Letter::A)),
        UnionTable::preimage_of(dfa.action(Letter::B)),
    ];
    let card: Vec<u8> = (0..size).map(|m| m.count_ones() as u8).collect();
    let mut best = card.clone();
    let mut next = vec![0u8; size];
    let mut out = vec![None; size];
    for len in 1..=max_len {
        for m in 0..size {
            let ma = pre[0].apply(m as u64) as usize;
            let mb = pre[1].apply(m as u64) as usize;
            next[m] = card[m].max(best[ma]).max(best[mb]);
        }
        std::mem::swap(&mut best, &mut next);
        let mut changed = false;
        for m in 1..size - 1 {
            if out[m].is_none() && best[m] > card[m] {
                out[m] = Some(len);
                changed = true;
            }
        }
        if !changed && best == next {
            break;
        }
    }
    Ok(out)
}
