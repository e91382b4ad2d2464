//! Orbit data of a standardized automaton and the digraphs built from it.
//!
//! With `d = 0·a` and `r ≠ 0` the other `a`-preimage of `d`, the orbit is
//! `d_0 = d, d_1 = d·a, …, d_{ℓ-1} = r`. The orbit subgroup `H₀` of `Z_n`
//! is generated by `g_{ℓ-1} = gcd(d_0, …, d_{ℓ-1}, n)`.
//!
//! The orbit digraph is `Cay(Z_n, orb(d))`. An edge `q → q ⊕ d_s` is short
//! when `q + s < n`; the restricted orbit digraph keeps only short edges.
//! Its components are still the cosets of `H₀`, which [`spanning_gamma`]
//! demonstrates edge by edge.

use serde::Serialize;

use crate::dfa::{add_mod, Dfa};
use crate::digraph::{cosets, gcd, Digraph, EdgeLabel};
use crate::error::{Error, Result};
use crate::standardize::is_standardized;
use crate::state_set::StateSet;
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitData {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub ell: usize,
    pub orbit: Vec<usize>,
    /// `gcds[s] = gcd(d_0, …, d_s, n)`.
    pub gcds: Vec<usize>,
    pub h0_generator: usize,
    pub h0_is_full: bool,
}

impl OrbitData {
    /// Index of `H₀` in `Z_n`, i.e. the number of its cosets.
    pub fn h0_index(&self) -> usize {
        self.h0_generator
    }

    pub fn h0_cosets(&self) -> Vec<Vec<usize>> {
        cosets(self.n, self.h0_generator)
    }

    /// Whether `q → q ⊕ d_s` is a short edge.
    pub fn is_short(&self, q: usize, s: usize) -> bool {
        q + s < self.n
    }
}

pub fn orbit_data(dfa: &Dfa) -> Result<OrbitData> {
    if !is_standardized(dfa) {
        return Err(Error::NotStandardized);
    }
    let n = dfa.n();
    let a = dfa.action(Letter::A);
    let d = a.apply(0);
    let r = (1..n)
        .find(|&q| a.apply(q) == d)
        .expect("standardized: d has a nonzero preimage");
    let mut orbit = vec![d];
    let mut q = d;
    while q != r {
        q = a.apply(q);
        orbit.push(q);
        assert!(orbit.len() <= n, "a permutes 1..n, so r lies on the cycle of d");
    }
    let mut gcds = Vec::with_capacity(orbit.len());
    let mut g = n;
    for &x in &orbit {
        g = gcd(g, x);
        gcds.push(g);
    }
    let h0_generator = g;
    Ok(OrbitData {
        n,
        d,
        r,
        ell: orbit.len(),
        orbit,
        gcds,
        h0_generator,
        h0_is_full: h0_generator == 1,
    })
}

/// `Cay(Z_n, orb(d))`, each edge labeled with its orbit index.
pub fn orbit_digraph(dfa: &Dfa) -> Result<Digraph> {
    let od = orbit_data(dfa)?;
    Ok(orbit_digraph_filtered(&od, |_, _| true))
}

/// The spanning subgraph of the orbit digraph made of short edges.
pub fn restricted_orbit_digraph(dfa: &Dfa) -> Result<Digraph> {
    let od = orbit_data(dfa)?;
    Ok(orbit_digraph_filtered(&od, |q, s| od.is_short(q, s)))
}

fn orbit_digraph_filtered(od: &OrbitData, keep: impl Fn(usize, usize) -> bool) -> Digraph {
    let n = od.n;
    let mut g = Digraph::new(n);
    for q in 0..n {
        for (s, &ds) in od.orbit.iter().enumerate() {
            if keep(q, s) {
                g.add_edge(q, add_mod(n, q, ds), Some(EdgeLabel::OrbitIndex(s)));
            }
        }
    }
    g
}

/// The spanning subgraph `Γ^(s)`: `Γ^(0)` has the `n` edges `i → d_0 ⊕ i`;
/// `Γ^(t)` adds the `g_{t-1}` edges `i → d_t ⊕ i` for `i < g_{t-1}`.
pub fn spanning_gamma(dfa: &Dfa, s: usize) -> Result<Digraph> {
    let od = orbit_data(dfa)?;
    if s >= od.ell {
        return Err(Error::OrbitIndex {
            index: s,
            len: od.ell,
        });
    }
    let n = od.n;
    let mut g = Digraph::new(n);
    for i in 0..n {
        g.add_edge(i, add_mod(n, i, od.orbit[0]), Some(EdgeLabel::OrbitIndex(0)));
    }
    for t in 1..=s {
        for i in 0..od.gcds[t - 1] {
            debug_assert!(od.is_short(i, t));
            g.add_edge(i, add_mod(n, i, od.orbit[t]), Some(EdgeLabel::OrbitIndex(t)));
        }
    }
    Ok(g)
}

/// True when `S` is closed under `⊕ h0_generator`.
pub fn is_union_of_h0_cosets(dfa: &Dfa, s: &StateSet) -> Result<bool> {
    dfa.check_set(s)?;
    let od = orbit_data(dfa)?;
    Ok(s.shifted(od.h0_generator) == *s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_example, Example};
    use crate::enumerate::standardized_dfas;
    use rand::{Rng, SeedableRng};

    #[test]
    fn e6_orbit() {
        let od = orbit_data(&builtin_example(Example::E6)).unwrap();
        assert_eq!((od.d, od.r, od.ell), (2, 5, 2));
        assert_eq!(od.orbit, vec![2, 5]);
        assert_eq!(od.gcds, vec![2, 1]);
        assert!(od.h0_is_full);
    }

    #[test]
    fn e48_orbit() {
        let od = orbit_data(&builtin_example(Example::E48)).unwrap();
        assert_eq!((od.d, od.r, od.ell), (24, 18, 2));
        assert_eq!(od.gcds, vec![24, 6]);
        assert_eq!(od.h0_generator, 6);
    }

    #[test]
    fn e21_orbit() {
        let od = orbit_data(&builtin_example(Example::E21)).unwrap();
        assert_eq!((od.d, od.r, od.ell), (14, 14, 1));
        assert_eq!(od.orbit, vec![14]);
        assert_eq!(od.gcds, vec![7]);
        assert!(!od.h0_is_full);
    }

    #[test]
    fn requires_standardized() {
        let dfa = Dfa::circular(&[3, 2, 1, 1]).unwrap();
        assert_eq!(orbit_data(&dfa), Err(Error::NotStandardized));
        assert_eq!(orbit_digraph(&dfa), Err(Error::NotStandardized));
        assert_eq!(spanning_gamma(&dfa, 0), Err(Error::NotStandardized));
    }

    #[test]
    fn orbit_digraph_components() {
        let e21 = orbit_digraph(&builtin_example(Example::E21)).unwrap();
        assert_eq!(e21.sccs(), cosets(21, 7));
        let e12 = orbit_digraph(&builtin_example(Example::E12)).unwrap();
        assert_eq!(e12.sccs(), cosets(12, 2));
        let e6 = orbit_digraph(&builtin_example(Example::E6)).unwrap();
        assert!(e6.is_strongly_connected());
        assert_eq!(e6.edge_count(), 12);
    }

    #[test]
    fn restricted_orbit_examples() {
        let e12 = builtin_example(Example::E12);
        assert_eq!(restricted_orbit_digraph(&e12).unwrap(), orbit_digraph(&e12).unwrap());
        assert_eq!(restricted_orbit_digraph(&e12).unwrap().sccs(), cosets(12, 2));

        let e48 = builtin_example(Example::E48);
        let full = orbit_digraph(&e48).unwrap();
        let restricted = restricted_orbit_digraph(&e48).unwrap();
        let removed: Vec<(usize, usize)> = full
            .edge_pairs()
            .into_iter()
            .filter(|&(s, t)| !restricted.has_edge(s, t))
            .collect();
        assert_eq!(removed, vec![(47, 17)]);
        assert_eq!(restricted.sccs(), cosets(48, 6));
    }

    #[test]
    fn gamma_for_e48() {
        let e48 = builtin_example(Example::E48);
        let g0 = spanning_gamma(&e48, 0).unwrap();
        let comps = g0.sccs();
        assert_eq!(comps.len(), 24);
        assert!(comps.iter().enumerate().all(|(i, c)| c == &vec![i, i + 24]));

        let g1 = spanning_gamma(&e48, 1).unwrap();
        let comp = g1.sccs().into_iter().find(|c| c.contains(&0)).unwrap();
        assert_eq!(comp, vec![0, 6, 12, 18, 24, 30, 36, 42]);
        for (s, t) in [(0, 18), (18, 36), (6, 24), (12, 30)] {
            assert!(g1.has_edge(s, t));
        }
        assert_eq!(g1.sccs(), cosets(48, 6));
        assert_eq!(
            spanning_gamma(&e48, 2),
            Err(Error::OrbitIndex { index: 2, len: 2 })
        );
    }

    #[test]
    fn gamma_for_single_orbit() {
        let e21 = builtin_example(Example::E21);
        assert_eq!(spanning_gamma(&e21, 0).unwrap().sccs(), cosets(21, 7));
    }

    #[test]
    fn coset_unions() {
        let e21 = builtin_example(Example::E21);
        let s = StateSet::from_states(21, [3, 10, 17]).unwrap();
        assert!(is_union_of_h0_cosets(&e21, &s).unwrap());
        let s = StateSet::from_states(21, [3, 10]).unwrap();
        assert!(!is_union_of_h0_cosets(&e21, &s).unwrap());
        let e12 = builtin_example(Example::E12);
        let evens = StateSet::from_states(12, (0..12).step_by(2)).unwrap();
        assert!(is_union_of_h0_cosets(&e12, &evens).unwrap());
    }

    /// Every `Γ^(s)` is a subgraph of the restricted orbit digraph, its
    /// components are the cosets of `⟨g_s⟩`, and the last one matches the
    /// restricted orbit digraph's components.
    #[test]
    fn gamma_chain_on_all_small_standardized() {
        for n in 2..=8 {
            for dfa in standardized_dfas(n) {
                let od = orbit_data(&dfa).unwrap();
                let restricted = restricted_orbit_digraph(&dfa).unwrap();
                for s in 0..od.ell {
                    let g = spanning_gamma(&dfa, s).unwrap();
                    assert!(g.is_subgraph_of(&restricted));
                    assert_eq!(g.sccs(), cosets(n, od.gcds[s]));
                }
                assert_eq!(restricted.sccs(), od.h0_cosets());
                for w in od.gcds.windows(2) {
                    assert_eq!(w[0] % w[1], 0);
                }
            }
        }
    }

    #[test]
    fn gamma_chain_on_sampled_large() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(9..=64);
            let dfa = crate::enumerate::random_standardized(&mut rng, n);
            let od = orbit_data(&dfa).unwrap();
            let g = spanning_gamma(&dfa, od.ell - 1).unwrap();
            assert!(g.is_subgraph_of(&restricted_orbit_digraph(&dfa).unwrap()));
            assert_eq!(g.sccs(), od.h0_cosets());
        }
    }
}
