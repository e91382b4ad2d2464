//! Subset reachability: exact lattice oracles, the constructive expansion
//! recursion, Don-bound verification, reset words and defect-1 products.

use std::collections::HashMap;

use serde::Serialize;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::expand::{expands, orbit_expanding_word, shortest_expanding_words};
use crate::lattice::{lattice_limit, SubsetLattice};
use crate::search::excl_and_dupl;
use crate::standardize::is_standardized;
use crate::state_set::StateSet;
use crate::transformation::Transformation;
use crate::word::{Letter, Word};

/// Shortest word `w` with `Q · w = S`, shortlex-least among the shortest.
pub fn shortest_reaching_word(dfa: &Dfa, s: &StateSet) -> Result<Option<Word>> {
    dfa.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let lattice = SubsetLattice::explore(dfa, lattice_limit())?;
    Ok(lattice.word_to(s))
}

pub fn is_completely_reachable(dfa: &Dfa) -> Result<bool> {
    Ok(SubsetLattice::explore(dfa, lattice_limit())?.is_complete())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionStep {
    pub set: StateSet,
    pub word: Word,
    /// `set · word⁻¹`, strictly larger than `set`.
    pub expanded: StateSet,
    /// The word came from an orbit edge rather than a search.
    pub from_orbit: bool,
    /// The word is longer than the step cap, so the search had to escalate.
    pub escalated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionTrace {
    pub target: StateSet,
    pub steps: Vec<ExpansionStep>,
    /// Step words in reverse order; `Q · final_word = target`.
    pub final_word: Word,
}

impl ExpansionTrace {
    /// Every step word has length at most `cap`.
    pub fn steps_within(&self, cap: usize) -> bool {
        self.steps.iter().all(|s| s.word.len() <= cap)
    }
}

/// Grows `S` to `Q` one expansion at a time. Each step prefers the orbit
/// word (standardized input), then the shortlex-least expanding word,
/// searching with bound `step_cap`, then `n`, then `2n`, then without a
/// bound until the transition monoid is exhausted.
pub fn reach_via_expansion(dfa: &Dfa, s: &StateSet, step_cap: usize) -> Result<ExpansionTrace> {
    ExpansionPlanner::new(dfa, step_cap).trace(s)
}

/// Runs [`reach_via_expansion`] for many targets on one automaton,
/// remembering the expanding word found for every intermediate set.
///
/// The escalating bounds `step_cap, n, 2n, ∞` all return the shortlex-least
/// expanding word overall, so a single search per set suffices. A finite
/// `max_step` stops the escalation there; sets with no expanding word that
/// short then report [`Error::ExpansionStuck`].
pub struct ExpansionPlanner<'a> {
    dfa: &'a Dfa,
    step_cap: usize,
    standardized: bool,
    max_step: Option<usize>,
    cache: HashMap<u64, Option<Word>>,
}

impl<'a> ExpansionPlanner<'a> {
    pub fn new(dfa: &'a Dfa, step_cap: usize) -> ExpansionPlanner<'a> {
        ExpansionPlanner {
            dfa,
            step_cap,
            standardized: is_standardized(dfa),
            max_step: None,
            cache: HashMap::new(),
        }
    }

    pub fn with_max_step(mut self, max_step: usize) -> Self {
        self.max_step = Some(max_step);
        self
    }

    /// Searches once for all of `sets` not seen before.
    pub fn prefetch(&mut self, sets: &[StateSet]) -> Result<()> {
        let todo: Vec<StateSet> = sets
            .iter()
            .filter(|s| !self.cache.contains_key(&s.bits()))
            .copied()
            .collect();
        let words = shortest_expanding_words(self.dfa, &todo, self.max_step)?;
        for (s, w) in todo.into_iter().zip(words) {
            self.cache.insert(s.bits(), w);
        }
        Ok(())
    }

    fn step_word(&mut self, current: &StateSet) -> Result<(Word, bool)> {
        if self.standardized {
            if let Some(w) = orbit_expanding_word(self.dfa, current)? {
                return Ok((w, true));
            }
        }
        if !self.cache.contains_key(&current.bits()) {
            self.prefetch(&[*current])?;
        }
        match &self.cache[&current.bits()] {
            Some(w) => Ok((w.clone(), false)),
            None => Err(Error::ExpansionStuck(*current)),
        }
    }

    pub fn trace(&mut self, s: &StateSet) -> Result<ExpansionTrace> {
        self.dfa.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut steps = Vec::new();
        let mut current = *s;
        while !current.is_full() {
            let (word, from_orbit) = self.step_word(&current)?;
            let result = expands(self.dfa, &word, &current)?.expect("search returns expanding words");
            steps.push(ExpansionStep {
                set: current,
                escalated: word.len() > self.step_cap,
                word,
                expanded: result.preimage_witness,
                from_orbit,
            });
            current = result.preimage_witness;
        }
        let final_word = steps
            .iter()
            .rev()
            .fold(Word::empty(), |acc, st| acc.concat(&st.word));
        debug_assert_eq!(self.dfa.image(&self.dfa.all_states(), &final_word).ok(), Some(*s));
        Ok(ExpansionTrace {
            target: *s,
            steps,
            final_word,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub k: usize,
    pub reachable: usize,
    pub total: u64,
    /// Longest shortest reaching word over reachable `k`-subsets.
    pub worst_length: Option<usize>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DonViolation {
    pub set: StateSet,
    pub length: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DonReport {
    pub n: usize,
    pub per_size: Vec<SizeSummary>,
    pub violations: Vec<DonViolation>,
    pub unreachable: Vec<StateSet>,
}

impl DonReport {
    pub fn from_lattice(lattice: &SubsetLattice) -> DonReport {
        let n = lattice.n();
        let mut per_size: Vec<SizeSummary> = (1..=n)
            .map(|k| SizeSummary {
                k,
                reachable: 0,
                total: binomial(n, k),
                worst_length: None,
                bound: n * (n - k),
            })
            .collect();
        let mut violations = Vec::new();
        for (set, len) in lattice.reachable() {
            let k = set.len();
            let entry = &mut per_size[k - 1];
            entry.reachable += 1;
            entry.worst_length = Some(entry.worst_length.map_or(len, |w| w.max(len)));
            if len > entry.bound {
                violations.push(DonViolation {
                    set,
                    length: len,
                    bound: entry.bound,
                });
            }
        }
        DonReport {
            n,
            per_size,
            violations,
            unreachable: lattice.unreachable().collect(),
        }
    }

    pub fn is_completely_reachable(&self) -> bool {
        self.unreachable.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.unreachable.is_empty()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// One lattice search from `Q`: every reachable `k`-subset is checked
/// against the bound `n(n − k)`, and unreachable subsets are listed.
pub fn verify_don(dfa: &Dfa) -> Result<DonReport> {
    Ok(DonReport::from_lattice(&SubsetLattice::explore(dfa, lattice_limit())?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResetWord {
    pub word: Word,
    /// Shortest possible (exact lattice search) rather than greedy.
    pub minimal: bool,
}

/// A word collapsing `Q` to one state, or `None` if the automaton is not
/// synchronizing. Exact within the lattice limit; above it, a greedy
/// pair-merging word which need not be shortest.
pub fn shortest_reset_word(dfa: &Dfa) -> Option<ResetWord> {
    match SubsetLattice::explore(dfa, lattice_limit()) {
        Ok(lattice) => (0..dfa.n())
            .filter_map(|q| lattice.word_to(&StateSet::singleton(dfa.n(), q).ok()?))
            .min()
            .map(|word| ResetWord {
                word,
                minimal: true,
            }),
        Err(_) => greedy_reset_word(dfa).map(|word| ResetWord {
            word,
            minimal: false,
        }),
    }
}

/// Repeatedly merges the two lowest states of the current image with a
/// shortest merging word found by search over state pairs.
fn greedy_reset_word(dfa: &Dfa) -> Option<Word> {
    let all = dfa.all_states();
    let mut current = all;
    let mut word = Word::empty();
    while current.len() > 1 {
        let mut it = current.iter();
        let (p, q) = (it.next()?, it.next()?);
        let merge = merging_word(dfa, p, q)?;
        current = dfa.image(&current, &merge).ok()?;
        word = word.concat(&merge);
    }
    Some(word)
}

fn merging_word(dfa: &Dfa, p: usize, q: usize) -> Option<Word> {
    let n = dfa.n();
    let key = |x: usize, y: usize| x.min(y) * n + x.max(y);
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n * n];
    let start = key(p, q);
    parent[start] = Some((start, Letter::A));
    let mut queue = std::collections::VecDeque::from([(p.min(q), p.max(q))]);
    while let Some((x, y)) = queue.pop_front() {
        if x == y {
            let mut letters = Vec::new();
            let mut cur = key(x, y);
            while cur != start {
                let (prev, l) = parent[cur].expect("visited");
                letters.push(l);
                cur = prev;
            }
            letters.reverse();
            return Some(Word::from_letters(letters));
        }
        for l in Letter::ALL {
            let (u, v) = (dfa.step(x, l), dfa.step(y, l));
            let k = key(u, v);
            if parent[k].is_none() {
                parent[k] = Some((key(x, y), l));
                queue.push_back((u.min(v), u.max(v)));
            }
        }
    }
    None
}

/// True when `factors` is non-empty and each factor has defect exactly 1.
pub fn verify_defect1_product(dfa: &Dfa, factors: &[Word]) -> bool {
    !factors.is_empty() && factors.iter().all(|f| dfa.word_profile(f).defect == 1)
}

/// Splits `w` into exactly `parts` contiguous factors of defect 1, if
/// possible, choosing the leftmost-shortest factors first. Exact over all
/// cut points.
pub fn defect1_factorization(dfa: &Dfa, w: &Word, parts: usize) -> Option<Vec<Word>> {
    let len = w.len();
    if parts == 0 || parts > len {
        return None;
    }
    let letters = w.letters();
    // defect_one[j] lists the ends i > j with w[j..i] of defect 1.
    let mut defect_one: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (j, ends) in defect_one.iter_mut().enumerate() {
        let mut t = Transformation::identity(dfa.n());
        for (i, &l) in letters.iter().enumerate().skip(j) {
            t = t.then(dfa.action(l));
            let (excl, _) = excl_and_dupl(t.as_bytes());
            match excl.count_ones() {
                1 => ends.push(i + 1),
                0 => {}
                _ => break,
            }
        }
    }
    // ok[m][i]: suffix w[i..] splits into m factors.
    let mut ok = vec![vec![false; len + 1]; parts + 1];
    ok[0][len] = true;
    for m in 1..=parts {
        for i in (0..len).rev() {
            ok[m][i] = defect_one[i].iter().any(|&e| ok[m - 1][e]);
        }
    }
    if !ok[parts][0] {
        return None;
    }
    let mut out = Vec::with_capacity(parts);
    let mut i = 0;
    for m in (1..=parts).rev() {
        let e = *defect_one[i].iter().find(|&&e| ok[m - 1][e])?;
        out.push(Word::from_letters(letters[i..e].to_vec()));
        i = e;
    }
    Some(out)
}
