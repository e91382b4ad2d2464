//! Complete binary automata and the action of words on states and subsets.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::transformation::Transformation;
use crate::word::{Letter, Word};

/// `(p + q) mod n`.
#[inline]
pub fn add_mod(n: usize, p: usize, q: usize) -> usize {
    (p % n + q % n) % n
}

/// A complete deterministic automaton over `{a, b}` with states `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    letters: [Transformation; 2],
}

/// Excluded set, duplicate set and defect of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WordProfile {
    pub excl: StateSet,
    pub dupl: StateSet,
    pub defect: usize,
}

impl WordProfile {
    pub fn of(t: &Transformation) -> WordProfile {
        let excl = t.excluded();
        WordProfile {
            excl,
            dupl: t.duplicated(),
            defect: excl.len(),
        }
    }
}

impl Dfa {
    pub fn new(a: &[usize], b: &[usize]) -> Result<Dfa> {
        if a.len() != b.len() {
            return Err(Error::LetterSizeMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        Ok(Dfa {
            letters: [Transformation::from_map(a)?, Transformation::from_map(b)?],
        })
    }

    /// An automaton whose letter `b` acts as `q ↦ q ⊕ 1`.
    pub fn circular(a: &[usize]) -> Result<Dfa> {
        let n = a.len();
        let b: Vec<usize> = (0..n).map(|q| add_mod(n, q, 1)).collect();
        Dfa::new(a, &b)
    }

    pub fn from_transformations(a: Transformation, b: Transformation) -> Dfa {
        assert_eq!(a.n(), b.n());
        Dfa { letters: [a, b] }
    }

    pub fn n(&self) -> usize {
        self.letters[0].n()
    }

    pub fn action(&self, l: Letter) -> &Transformation {
        &self.letters[l.index()]
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.n())
    }

    #[inline]
    pub fn step(&self, q: usize, l: Letter) -> usize {
        self.letters[l.index()].apply(q)
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.n() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &StateSet) -> Result<()> {
        if s.n() == self.n() {
            Ok(())
        } else {
            Err(Error::SetSizeMismatch {
                expected: self.n(),
                found: s.n(),
            })
        }
    }

    /// `q · w`.
    pub fn apply_word(&self, q: usize, w: &Word) -> Result<usize> {
        self.check_state(q)?;
        Ok(w.letters().iter().fold(q, |q, &l| self.step(q, l)))
    }

    /// `S · w`.
    pub fn image(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        let mut bits = 0u64;
        for q in s {
            bits |= 1 << w.letters().iter().fold(q, |q, &l| self.step(q, l));
        }
        Ok(StateSet::from_bits_unchecked(self.n(), bits))
    }

    /// Full preimage `S w⁻¹ = {q | q · w ∈ S}`.
    pub fn preimage(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        Ok(self.transformation_of(w).preimage_of(s))
    }

    pub fn transformation_of(&self, w: &Word) -> Transformation {
        let bytes = (0..self.n())
            .map(|q| w.letters().iter().fold(q, |q, &l| self.step(q, l)) as u8)
            .collect();
        Transformation::from_bytes(bytes)
    }

    pub fn word_profile(&self, w: &Word) -> WordProfile {
        WordProfile::of(&self.transformation_of(w))
    }

    /// Closure of the two letter actions and the identity under composition.
    /// Fails with [`Error::MonoidOverflow`] once more than `cap` elements appear.
    pub fn transition_monoid(&self, cap: usize) -> Result<HashSet<Transformation>> {
        let id = Transformation::identity(self.n());
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(t) = queue.pop_front() {
            for g in &self.letters {
                let u = t.then(g);
                if !seen.contains(&u) {
                    if seen.len() >= cap {
                        return Err(Error::MonoidOverflow { cap });
                    }
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
        Ok(seen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_example, Example};
    use crate::word::parse_word;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> StateSet {
        StateSet::from_states(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn apply_word_examples() {
        let e6 = builtin_example(Example::E6);
        assert_eq!(e6.apply_word(0, &w("a")).unwrap(), 2);
        assert_eq!(e6.apply_word(4, &Word::empty()).unwrap(), 4);
        let e12 = builtin_example(Example::E12);
        assert_eq!(e12.apply_word(11, &w("aba")).unwrap(), 10);
        assert!(matches!(e12.apply_word(12, &w("a")), Err(Error::StateOutOfRange { .. })));
    }

    #[test]
    fn image_and_preimage_examples() {
        let e6 = builtin_example(Example::E6);
        assert_eq!(e6.image(&set(6, &[0, 5]), &w("a")).unwrap(), set(6, &[2]));
        assert_eq!(e6.preimage(&set(6, &[2]), &w("a")).unwrap(), set(6, &[0, 5]));
        let s = set(6, &[1, 3]);
        assert_eq!(e6.image(&s, &Word::empty()).unwrap(), s);
        assert_eq!(e6.preimage(&StateSet::full(6), &w("abba")).unwrap(), StateSet::full(6));
        assert!(matches!(
            e6.image(&set(7, &[1]), &w("a")),
            Err(Error::SetSizeMismatch { .. })
        ));
    }

    #[test]
    fn profile_examples() {
        let e21 = builtin_example(Example::E21);
        let p = e21.word_profile(&w("ab^14a"));
        assert_eq!((p.excl, p.dupl, p.defect), (set(21, &[0]), set(21, &[18]), 1));
        let p = e21.word_profile(&Word::empty());
        assert!(p.excl.is_empty() && p.dupl.is_empty() && p.defect == 0);
        let e12 = builtin_example(Example::E12);
        let p = e12.word_profile(&w("aba"));
        assert_eq!((p.excl, p.dupl, p.defect), (set(12, &[0, 2]), set(12, &[10, 11]), 2));
    }

    #[test]
    fn transformation_examples() {
        let e6 = builtin_example(Example::E6);
        assert_eq!(e6.transformation_of(&w("b^6")), Transformation::identity(6));
        let e12 = builtin_example(Example::E12);
        let t = e12.transformation_of(&w("ab^10"));
        for q in 0..12 {
            assert_eq!(t.apply(q), add_mod(12, e12.step(q, Letter::A), 10));
        }
    }

    #[test]
    fn monoid_of_cyclic_group() {
        for n in 1..8 {
            let id: Vec<usize> = (0..n).collect();
            let dfa = Dfa::circular(&id).unwrap();
            assert_eq!(dfa.transition_monoid(1000).unwrap().len(), n);
        }
    }

    #[test]
    fn monoid_cap_overflows() {
        let e6 = builtin_example(Example::E6);
        let full = e6.transition_monoid(1_000_000).unwrap();
        assert!(full.len() > 6);
        assert_eq!(
            e6.transition_monoid(full.len() - 1),
            Err(Error::MonoidOverflow { cap: full.len() - 1 })
        );
        assert_eq!(e6.transition_monoid(full.len()).unwrap().len(), full.len());
    }

    /// Monoid size by a different route: enumerate words level by level and
    /// stop when a whole level brings nothing new.
    #[test]
    fn monoid_size_matches_word_enumeration() {
        let e6 = builtin_example(Example::E6);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut level: Vec<Word> = vec![Word::empty()];
        seen.insert(e6.transformation_of(&Word::empty()).to_vec());
        while !level.is_empty() {
            let mut next = Vec::new();
            for u in &level {
                for l in Letter::ALL {
                    let mut v = u.clone();
                    v.push(l);
                    if seen.insert(e6.transformation_of(&v).to_vec()) {
                        next.push(v);
                    }
                }
            }
            level = next;
        }
        assert_eq!(e6.transition_monoid(1_000_000).unwrap().len(), seen.len());
    }

    fn arb_dfa() -> impl Strategy<Value = Dfa> {
        (1usize..=8).prop_flat_map(|n| {
            (
                proptest::collection::vec(0..n, n),
                proptest::collection::vec(0..n, n),
            )
                .prop_map(|(a, b)| Dfa::new(&a, &b).unwrap())
        })
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(any::<bool>(), 0..=max).prop_map(|v| {
            v.into_iter()
                .map(|b| if b { Letter::B } else { Letter::A })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn image_laws(dfa in arb_dfa(), bits in any::<u64>(), u in arb_word(6), v in arb_word(6)) {
            let n = dfa.n();
            let s = StateSet::from_bits(n, bits & crate::state_set::full_mask(n)).unwrap();
            let su = dfa.image(&s, &u).unwrap();
            prop_assert!(su.len() <= s.len());
            prop_assert_eq!(dfa.image(&su, &v).unwrap(), dfa.image(&s, &u.concat(&v)).unwrap());
            prop_assert_eq!(
                dfa.transformation_of(&u.concat(&v)),
                dfa.transformation_of(&u).then(&dfa.transformation_of(&v))
            );
        }

        #[test]
        fn profile_laws(dfa in arb_dfa(), u in arb_word(6), v in arb_word(6), bits in any::<u64>()) {
            let n = dfa.n();
            let q_all = dfa.all_states();
            let p = dfa.word_profile(&u);
            let range = dfa.image(&q_all, &u).unwrap();
            prop_assert!(p.excl.is_disjoint(&range));
            prop_assert!(p.dupl.is_subset(&range));
            prop_assert!(p.dupl.is_disjoint(&p.excl));
            prop_assert_eq!(p.defect, p.excl.len());
            prop_assert_eq!(p.defect == 0, p.dupl.is_empty());
            prop_assert_eq!(p.defect == 0, dfa.transformation_of(&u).is_permutation());
            prop_assert!(dfa.word_profile(&u.concat(&v)).defect >= p.defect);

            let total: usize = (0..n)
                .map(|q| dfa.preimage(&StateSet::singleton(n, q).unwrap(), &u).unwrap().len())
                .sum();
            prop_assert_eq!(total, n);
            let s = StateSet::from_bits(n, bits & crate::state_set::full_mask(n)).unwrap();
            prop_assert!(dfa.preimage(&s, &u).unwrap().len() >= s.intersection(&range).len());
        }
    }

    /// Duplicate sets by preimage counting agree with a pairwise collision scan
    /// for all words up to length 4 on random automata with up to 8 states.
    #[test]
    fn duplicate_set_two_ways() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut words = vec![Word::empty()];
        for len in 1..=4 {
            for code in 0..1u32 << len {
                words.push((0..len).map(|i| Letter::from_index((code >> i & 1) as usize)).collect());
            }
        }
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let a: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            let b: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            let dfa = Dfa::new(&a, &b).unwrap();
            for w in &words {
                let by_count = StateSet::from_states(
                    n,
                    (0..n).filter(|&p| {
                        dfa.preimage(&StateSet::singleton(n, p).unwrap(), w).unwrap().len() >= 2
                    }),
                )
                .unwrap();
                let mut by_pairs = StateSet::empty(n);
                for q1 in 0..n {
                    for q2 in q1 + 1..n {
                        let p1 = dfa.apply_word(q1, w).unwrap();
                        if p1 == dfa.apply_word(q2, w).unwrap() {
                            by_pairs.insert(p1);
                        }
                    }
                }
                assert_eq!(by_count, by_pairs);
                assert_eq!(dfa.word_profile(w).dupl, by_pairs);
            }
        }
    }
}
