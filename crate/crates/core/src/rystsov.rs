//! The Rystsov digraph: an edge `p → q` whenever some word of defect 1 has
//! `excl(w) = {p}` and `dupl(w) = {q}`.

use serde::Serialize;

use crate::dfa::{add_mod, Dfa};
use crate::digraph::{cayley_digraph, Digraph, EdgeLabel};
use crate::error::{Error, Result};
use crate::orbit::orbit_data;
use crate::search::{excl_and_dupl, TransformationBfs};
use crate::standardize::{is_standardized, standardize};
use crate::state_set::StateSet;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedEdge {
    pub source: usize,
    pub target: usize,
    pub witness: Word,
}

/// The edge forced by `w`, if `w` has defect 1.
pub fn forced_edge(dfa: &Dfa, w: &Word) -> Option<ForcedEdge> {
    let p = dfa.word_profile(w);
    (p.defect == 1 && p.dupl.len() == 1).then(|| ForcedEdge {
        source: p.excl.min_state().expect("defect 1"),
        target: p.dupl.min_state().expect("singleton"),
        witness: w.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RystsovMethod {
    /// `Cay(Z_n, D)` with `D = {d · v | v ∈ {a, b^r a}*}`; standardized input only.
    CayleyClosure,
    /// Forced edges of all words up to the given length.
    BruteForce { max_len: usize },
    /// Forced edges of every element of the transition monoid; fails when
    /// the monoid has more than [`EXHAUSTIVE_NODE_CAP`] elements.
    Exhaustive,
}

pub const EXHAUSTIVE_NODE_CAP: usize = 2_000_000;

/// The set `D`: least set containing `d` closed under `x ↦ x·a` and
/// `x ↦ (x ⊕ r)·a`.
pub fn cayley_generators(dfa: &Dfa) -> Result<StateSet> {
    let od = orbit_data(dfa)?;
    let n = od.n;
    let mut set = StateSet::singleton(n, od.d)?;
    let mut stack = vec![od.d];
    while let Some(x) = stack.pop() {
        for y in [
            dfa.step(x, Letter::A),
            dfa.step(add_mod(n, x, od.r), Letter::A),
        ] {
            if !set.contains(y) {
                set.insert(y);
                stack.push(y);
            }
        }
    }
    Ok(set)
}

pub fn rystsov_digraph(dfa: &Dfa, method: RystsovMethod) -> Result<Digraph> {
    match method {
        RystsovMethod::CayleyClosure => {
            let gens = cayley_generators(dfa)?;
            Ok(cayley_digraph(dfa.n(), &gens.to_vec()))
        }
        RystsovMethod::BruteForce { max_len } => Ok(forced_edges_up_to(dfa, max_len)),
        RystsovMethod::Exhaustive => {
            let mut g = Digraph::new(dfa.n());
            let mut bfs = TransformationBfs::new(dfa);
            loop {
                add_level_edges(&bfs, &mut g);
                if bfs.next_level().is_empty() {
                    return Ok(g);
                }
                if bfs.node_count() > EXHAUSTIVE_NODE_CAP {
                    return Err(Error::MonoidOverflow {
                        cap: EXHAUSTIVE_NODE_CAP,
                    });
                }
            }
        }
    }
}

/// Forced edges of all words of length at most `max_len`, each labeled by
/// its shortlex-least forcing word.
fn forced_edges_up_to(dfa: &Dfa, max_len: usize) -> Digraph {
    let mut g = Digraph::new(dfa.n());
    let mut bfs = TransformationBfs::new(dfa);
    loop {
        add_level_edges(&bfs, &mut g);
        if bfs.depth() >= max_len || bfs.next_level().is_empty() {
            return g;
        }
    }
}

fn add_level_edges(bfs: &TransformationBfs, g: &mut Digraph) {
    for id in bfs.current_level() {
        let (excl, dupl) = excl_and_dupl(bfs.transformation(id));
        if excl.count_ones() == 1 {
            let (p, q) = (excl.trailing_zeros() as usize, dupl.trailing_zeros() as usize);
            if !g.has_edge(p, q) {
                g.add_edge(p, q, Some(EdgeLabel::Word(bfs.word(id))));
            }
        }
    }
}

/// Edges forced by words of length at most `n`, labeled by their
/// shortlex-least forcing word.
pub fn restricted_rystsov_digraph(dfa: &Dfa) -> Digraph {
    forced_edges_up_to(dfa, dfa.n())
}

/// The Rystsov digraph in the automaton's own labels. Circular input goes
/// through standardization, which preserves the transition monoid up to
/// relabeling, and uses the Cayley closure; anything else is enumerated
/// exhaustively.
pub fn rystsov_digraph_any(dfa: &Dfa) -> Result<Digraph> {
    if is_standardized(dfa) {
        return rystsov_digraph(dfa, RystsovMethod::CayleyClosure);
    }
    match standardize(dfa) {
        Ok(rep) => {
            let std_graph = rystsov_digraph(&rep.result, RystsovMethod::CayleyClosure)?;
            let mut old = vec![0; dfa.n()];
            for (o, &new) in rep.relabeling.iter().enumerate() {
                old[new] = o;
            }
            let mut g = Digraph::new(dfa.n());
            for (p, q) in std_graph.edge_pairs() {
                g.add_edge(old[p], old[q], None);
            }
            Ok(g)
        }
        Err(_) => rystsov_digraph(dfa, RystsovMethod::Exhaustive),
    }
}

/// Strong connectivity of the Rystsov digraph. Standardizable input uses
/// the Cayley closure; otherwise words are enumerated level by level until
/// the forced edges connect everything or the transition monoid is
/// exhausted.
pub fn is_perfectly_reachable(dfa: &Dfa) -> bool {
    if is_standardized(dfa) {
        return rystsov_digraph(dfa, RystsovMethod::CayleyClosure)
            .expect("standardized")
            .is_strongly_connected();
    }
    if let Ok(rep) = standardize(dfa) {
        return is_perfectly_reachable(&rep.result);
    }
    let mut g = Digraph::new(dfa.n());
    let mut bfs = TransformationBfs::new(dfa);
    loop {
        add_level_edges(&bfs, &mut g);
        if g.is_strongly_connected() {
            return true;
        }
        if bfs.next_level().is_empty() {
            return false;
        }
    }
}
