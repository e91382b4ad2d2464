use std::collections::BTreeMap;

use serde::Serialize;

use crate::dfa::add_mod;
use crate::word::Word;

/// What an edge carries, if anything.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeLabel {
    /// Index `s` of the orbit element `d_s` an orbit-digraph edge adds.
    OrbitIndex(usize),
    /// A word witnessing the edge.
    Word(Word),
}

/// A directed graph on `0..vertex_count` without parallel edges.
/// Edges are kept sorted by `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    vertex_count: usize,
    edges: BTreeMap<(usize, usize), Option<EdgeLabel>>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Digraph {
        Digraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adds an edge; an existing edge keeps its first label.
    pub fn add_edge(&mut self, source: usize, target: usize, label: Option<EdgeLabel>) {
        assert!(source < self.vertex_count && target < self.vertex_count);
        self.edges.entry((source, target)).or_insert(label);
    }

    pub fn has_edge(&self, source: usize, target: usize) -> bool {
        self.edges.contains_key(&(source, target))
    }

    pub fn label(&self, source: usize, target: usize) -> Option<&EdgeLabel> {
        self.edges.get(&(source, target)).and_then(Option::as_ref)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Option<&EdgeLabel>)> + '_ {
        self.edges.iter().map(|(&(s, t), l)| (s, t, l.as_ref()))
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.keys().copied().collect()
    }

    /// Every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.keys().all(|e| other.edges.contains_key(e))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(s, t) in self.edges.keys() {
            adj[s].push(t);
        }
        adj
    }

    /// Strongly connected components, each sorted ascending, listed by
    /// their minimal vertex.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let mut comps = tarjan(&self.adjacency());
        for c in &mut comps {
            c.sort_unstable();
        }
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count <= 1 || self.sccs().len() == 1
    }
}

/// Iterative Tarjan.
fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next_index = 0;
    // (vertex, position of the next neighbour to visit)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("non-empty");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

/// `Cay(Z_n, X)`: edges `g → g ⊕ x` for every `g` and every `x ∈ X`.
pub fn cayley_digraph(n: usize, generators: &[usize]) -> Digraph {
    let mut g = Digraph::new(n);
    for q in 0..n {
        for &x in generators {
            g.add_edge(q, add_mod(n, q, x), None);
        }
    }
    g
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The cosets of the subgroup `⟨g⟩` of `Z_n` for `g` dividing `n`, listed by
/// minimal element: `{i, i ⊕ g, i ⊕ 2g, …}` for `i = 0..g`.
pub fn cosets(n: usize, g: usize) -> Vec<Vec<usize>> {
    (0..g).map(|i| (i..n).step_by(g).collect()).collect()
}
