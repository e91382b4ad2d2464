//! Bringing a binary circular automaton into standardized form.
//!
//! A standardized automaton has states `Z_n`, `b` acting as `q ↦ q ⊕ 1`,
//! `excl(a) = {0}` and `dupl(a) = {0·a}`. The conversion relabels states
//! along the cycle of the cyclic letter, rotates labels so the excluded
//! state becomes 0, and finally replaces `a` by `b^k a` where `k` is the
//! smaller of the two states that `a` merges. None of these steps changes
//! the transition monoid up to the relabeling.

use serde::Serialize;

use crate::dfa::{add_mod, Dfa};
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::transformation::Transformation;
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardizationReport {
    /// The input letter that acts as a full cycle; it becomes `b`.
    pub circular_letter: Letter,
    /// Offset subtracted from the cycle labels so that `excl(a) = {0}`.
    pub rotation: usize,
    /// The `k` in `a_k = b^k a`.
    pub shift_k: usize,
    /// `relabeling[old] = new`.
    pub relabeling: Vec<usize>,
    #[serde(skip)]
    pub result: Dfa,
}

/// Letters whose action is a single cycle through all states.
pub fn circular_letters(dfa: &Dfa) -> Vec<Letter> {
    Letter::ALL
        .into_iter()
        .filter(|&l| dfa.action(l).is_full_cycle())
        .collect()
}

pub fn is_standardized(dfa: &Dfa) -> bool {
    let n = dfa.n();
    let b = dfa.action(Letter::B);
    if (0..n).any(|q| b.apply(q) != add_mod(n, q, 1)) {
        return false;
    }
    let a = dfa.action(Letter::A);
    let zero = StateSet::singleton(n, 0).expect("n >= 1");
    a.excluded() == zero && a.duplicated() == StateSet::singleton(n, a.apply(0)).expect("in range")
}

pub fn standardize(dfa: &Dfa) -> Result<StandardizationReport> {
    let n = dfa.n();
    let circular = circular_letters(dfa);
    let (cyclic, other) = match circular.as_slice() {
        [] => return Err(Error::NotCircular),
        [Letter::A] => (Letter::A, Letter::B),
        _ => (Letter::B, Letter::A),
    };
    let cycle = dfa.action(cyclic);
    let other_t = dfa.action(other);

    let excl = other_t.excluded();
    match excl.len() {
        0 => return Err(Error::NoDefectOneLetter),
        1 => {}
        _ => return Err(Error::ExcludedNotSingleton(excl)),
    }
    let dupl = other_t.duplicated();
    if dupl.len() != 1 {
        return Err(Error::DuplicateNotSingleton(dupl));
    }

    // Position of each old state along the cycle starting at old state 0.
    let mut cycle_pos = vec![0usize; n];
    let mut q = 0;
    for i in 0..n {
        cycle_pos[q] = i;
        q = cycle.apply(q);
    }
    let excluded_pos = cycle_pos[excl.min_state().expect("singleton")];
    let rotation = excluded_pos;
    let relabeling: Vec<usize> = cycle_pos
        .iter()
        .map(|&p| add_mod(n, p, n - rotation))
        .collect();
    let mut old_of_new = vec![0usize; n];
    for (old, &new) in relabeling.iter().enumerate() {
        old_of_new[new] = old;
    }
    let a_relabeled: Vec<usize> = (0..n)
        .map(|i| relabeling[other_t.apply(old_of_new[i])])
        .collect();

    let merged = relabeling[dupl.min_state().expect("singleton")];
    let shift_k = (0..n)
        .find(|&q| a_relabeled[q] == merged)
        .expect("a duplicated state has preimages");
    let a_shifted: Vec<usize> = (0..n).map(|i| a_relabeled[add_mod(n, i, shift_k)]).collect();

    let result = Dfa::circular(&a_shifted)?;
    debug_assert!(is_standardized(&result));
    Ok(StandardizationReport {
        circular_letter: cyclic,
        rotation,
        shift_k,
        relabeling,
        result,
    })
}

/// Conjugates a transformation by a relabeling (`old → new`).
pub fn relabel_transformation(t: &Transformation, relabeling: &[usize]) -> Transformation {
    let n = t.n();
    let mut map = vec![0usize; n];
    for old in 0..n {
        map[relabeling[old]] = relabeling[t.apply(old)];
    }
    Transformation::from_map(&map).expect("relabeling is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_example, Example};
    use crate::reach::is_completely_reachable;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    #[test]
    fn circular_letter_examples() {
        assert_eq!(circular_letters(&builtin_example(Example::E6)), vec![Letter::B]);
        let flip_flop = Dfa::new(&[0, 0], &[0, 1]).unwrap();
        assert!(circular_letters(&flip_flop).is_empty());
        assert!(!is_standardized(&flip_flop));
        let both = Dfa::new(&[1, 2, 0], &[1, 2, 0]).unwrap();
        assert_eq!(circular_letters(&both), vec![Letter::A, Letter::B]);
        assert_eq!(standardize(&both), Err(Error::NoDefectOneLetter));
        assert_eq!(standardize(&flip_flop), Err(Error::NotCircular));
    }

    #[test]
    fn builtins_are_standardized_and_fixed() {
        for e in Example::ALL {
            let dfa = builtin_example(e);
            assert!(is_standardized(&dfa), "{e}");
            let rep = standardize(&dfa).unwrap();
            assert_eq!((rep.rotation, rep.shift_k), (0, 0), "{e}");
            assert_eq!(rep.result, dfa, "{e}");
        }
    }

    #[test]
    fn rotated_e6_is_restored() {
        let e6 = builtin_example(Example::E6);
        let a = e6.action(Letter::A);
        let shifted: Vec<usize> = (0..6).map(|q| add_mod(6, a.apply(add_mod(6, q, 3)), 3)).collect();
        let input = Dfa::circular(&shifted).unwrap();
        assert_eq!(input.action(Letter::A).excluded().to_vec(), vec![3]);
        let rep = standardize(&input).unwrap();
        assert_eq!(rep.rotation, 3);
        assert_eq!(rep.shift_k, 0);
        assert_eq!(rep.result, e6);
    }

    #[test]
    fn precondition_violations() {
        let two_excluded = Dfa::circular(&[2, 2, 3, 3]).unwrap();
        assert!(matches!(
            standardize(&two_excluded),
            Err(Error::ExcludedNotSingleton(s)) if s.len() == 2
        ));
        let perm = Dfa::circular(&[1, 0, 2]).unwrap();
        assert_eq!(standardize(&perm), Err(Error::NoDefectOneLetter));
    }

    #[test]
    fn swaps_letters_when_a_is_cyclic() {
        // a is the 4-cycle 0→2→1→3→0, b merges 0 and 1.
        let dfa = Dfa::new(&[2, 3, 1, 0], &[2, 2, 3, 0]).unwrap();
        let rep = standardize(&dfa).unwrap();
        assert_eq!(rep.circular_letter, Letter::A);
        assert!(is_standardized(&rep.result));
    }

    #[test]
    fn shift_uses_smaller_merged_state() {
        // excl(a) = {0}, a merges 2 and 3 into 1, so k = 2.
        let dfa = Dfa::circular(&[3, 2, 1, 1]).unwrap();
        assert!(!is_standardized(&dfa));
        let rep = standardize(&dfa).unwrap();
        assert_eq!(rep.shift_k, 2);
        assert_eq!(rep.result.action(Letter::A).to_vec(), vec![1, 1, 3, 2]);
        assert!(is_standardized(&rep.result));
    }

    fn random_standardizable(rng: &mut impl Rng, n: usize) -> Dfa {
        // Start from a random standardized table, then hide it behind a
        // random relabeling, a random b^k a substitution and maybe a letter swap.
        let mut perm: Vec<usize> = (1..n).collect();
        perm.shuffle(rng);
        let d = rng.gen_range(1..n);
        let mut a = vec![d];
        a.extend(perm);
        let k = rng.gen_range(0..n);
        let a_k: Vec<usize> = (0..n).map(|q| a[add_mod(n, q, n - k)]).collect();
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(rng);
        let mut a_new = vec![0; n];
        let mut b_new = vec![0; n];
        for q in 0..n {
            a_new[labels[q]] = labels[a_k[q]];
            b_new[labels[q]] = labels[add_mod(n, q, 1)];
        }
        if rng.gen_bool(0.5) {
            Dfa::new(&b_new, &a_new).unwrap()
        } else {
            Dfa::new(&a_new, &b_new).unwrap()
        }
    }

    #[test]
    fn preserves_monoid_and_is_idempotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(2..=6);
            let dfa = random_standardizable(&mut rng, n);
            let rep = standardize(&dfa).unwrap();
            assert!(is_standardized(&rep.result));
            let a_part = rep.result.action(Letter::A);
            let rest = StateSet::from_states(n, 1..n).unwrap();
            assert_eq!(a_part.image_of(&rest), rest);

            let before: HashSet<Transformation> = dfa
                .transition_monoid(1_000_000)
                .unwrap()
                .iter()
                .map(|t| relabel_transformation(t, &rep.relabeling))
                .collect();
            let after = rep.result.transition_monoid(1_000_000).unwrap();
            assert_eq!(before, after);

            let again = standardize(&rep.result).unwrap();
            assert_eq!(again.result, rep.result);
            assert_eq!((again.rotation, again.shift_k), (0, 0));
        }
    }

    #[test]
    fn preserves_complete_reachability() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let dfa = random_standardizable(&mut rng, n);
            let rep = standardize(&dfa).unwrap();
            assert_eq!(
                is_completely_reachable(&dfa).unwrap(),
                is_completely_reachable(&rep.result).unwrap()
            );
        }
    }
}
