//! Enumeration of standardized automata.
//!
//! A standardized automaton on `n` states is fixed by a permutation `π` of
//! `{1, …, n−1}` (the action of `a` there) and `d = 0·a ∈ {1, …, n−1}`,
//! giving `(n−1)·(n−1)!` automata. Exhaustive order: permutations in
//! lexicographic order of their one-line notation, `d` ascending.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::expand::non_expandable_coset_unions;
use crate::lattice::lattice_limit;
use crate::orbit::orbit_data;
use crate::reach::verify_don;
use crate::rystsov::is_perfectly_reachable;
use crate::state_set::MAX_STATES;

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// `(n−1)·(n−1)!`, or `None` on overflow.
pub fn standardized_count(n: usize) -> Option<u128> {
    if n < 2 {
        return Some(0);
    }
    (1..n as u128).try_fold(n as u128 - 1, |acc, k| acc.checked_mul(k))
}

fn build(n: usize, perm: &[usize], d: usize) -> Dfa {
    let mut a = Vec::with_capacity(n);
    a.push(d);
    a.extend_from_slice(perm);
    Dfa::circular(&a).expect("valid table")
}

/// Rearranges `v` into the next permutation in lexicographic order;
/// returns false after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All standardized automata on `n ≥ 2` states in the canonical order.
pub fn standardized_dfas(n: usize) -> impl Iterator<Item = Dfa> {
    let mut perm: Vec<usize> = (1..n).collect();
    let mut d = 1;
    let mut done = n < 2;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let dfa = build(n, &perm, d);
        d += 1;
        if d == n {
            d = 1;
            done = !next_permutation(&mut perm);
        }
        Some(dfa)
    })
}

/// A uniformly random standardized automaton on `n ≥ 2` states.
pub fn random_standardized<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Dfa {
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    let d = rng.gen_range(1..n);
    build(n, &perm, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    H0Full,
    PerfectlyReachable,
    HasNonNExpandableSubset,
    DonViolation,
}

impl Filter {
    pub const ALL: [Filter; 4] = [
        Filter::H0Full,
        Filter::PerfectlyReachable,
        Filter::HasNonNExpandableSubset,
        Filter::DonViolation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::H0Full => "h0_full",
            Filter::PerfectlyReachable => "perfectly_reachable",
            Filter::HasNonNExpandableSubset => "has_non_n_expandable_subset",
            Filter::DonViolation => "don_violation",
        }
    }

    pub fn matches(self, dfa: &Dfa) -> Result<bool> {
        match self {
            Filter::H0Full => Ok(orbit_data(dfa)?.h0_is_full),
            Filter::PerfectlyReachable => Ok(is_perfectly_reachable(dfa)),
            Filter::HasNonNExpandableSubset => {
                if orbit_data(dfa)?.h0_is_full {
                    return Ok(false);
                }
                Ok(!non_expandable_coset_unions(dfa, dfa.n(), lattice_limit())?.is_empty())
            }
            Filter::DonViolation => Ok(!verify_don(dfa)?.violations.is_empty()),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Filter, String> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| {
                let names: Vec<_> = Filter::ALL.iter().map(|f| f.name()).collect();
                format!("unknown filter `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone)]
pub enum Mode {
    /// Every automaton, refusing when the count exceeds `budget`.
    Exhaustive { budget: u128 },
    /// The `include` automata first, then `count` seeded random draws.
    Sampled {
        count: usize,
        seed: u64,
        include: Vec<Dfa>,
    },
}

#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    pub n: usize,
    pub filters: Vec<Filter>,
    pub mode: Mode,
}

/// Streams the automata selected by `config` that pass every filter.
/// Filter errors (for instance lattice capacity) are yielded in place.
pub fn enumerate_standardized(
    config: &EnumerationConfig,
) -> Result<Box<dyn Iterator<Item = Result<Dfa>>>> {
    let n = config.n;
    if !(2..=MAX_STATES).contains(&n) {
        return Err(Error::StateCount { n, max: MAX_STATES });
    }
    let source: Box<dyn Iterator<Item = Dfa>> = match &config.mode {
        Mode::Exhaustive { budget } => {
            let count = standardized_count(n).unwrap_or(u128::MAX);
            if count > *budget {
                return Err(Error::EnumerationBudget {
                    count,
                    budget: *budget,
                });
            }
            Box::new(standardized_dfas(n))
        }
        Mode::Sampled {
            count,
            seed,
            include,
        } => {
            if let Some(bad) = include.iter().find(|d| d.n() != n) {
                return Err(Error::SetSizeMismatch {
                    expected: n,
                    found: bad.n(),
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let draws = (0..*count).map(move |_| random_standardized(&mut rng, n));
            Box::new(include.clone().into_iter().chain(draws))
        }
    };
    let filters = config.filters.clone();
    Ok(Box::new(source.filter_map(move |dfa| {
        for f in &filters {
            match f.matches(&dfa) {
                Ok(true) => {}
                Ok(false) => return None,
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(dfa))
    })))
}
