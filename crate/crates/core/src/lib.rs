//! Subset reachability in binary circular automata.
//!
//! The crate works with complete deterministic automata over `{a, b}` on
//! at most 64 states. Its focus is the standardized form, where `b` acts
//! as `q ↦ q ⊕ 1` on `Z_n` and `a` has defect 1, and the questions of
//! which subsets `Q · w` can be reached, how fast, and why:
//!
//! * [`standardize`] brings a circular automaton into standardized form.
//! * [`orbit`] computes the orbit of `d = 0·a`, the orbit subgroup `H₀` and
//!   the orbit digraphs.
//! * [`rystsov`] builds the digraph of edges forced by defect-1 words and
//!   decides perfect reachability.
//! * [`expand`] searches for expanding and extending words.
//! * [`reach`] holds the exact subset-lattice oracles, the expansion
//!   recursion and the `n(n − k)` bound check.
//! * [`enumerate`], [`io`], [`dot`], [`report`] and [`cli`] are plumbing.
//!
//! ```
//! use creach::{builtin_example, Example, orbit::orbit_data};
//!
//! let e6 = builtin_example(Example::E6);
//! let od = orbit_data(&e6).unwrap();
//! assert_eq!(od.orbit, vec![2, 5]);
//! assert!(od.h0_is_full);
//! ```

pub mod builtin;
pub mod cli;
pub mod dfa;
pub mod digraph;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod expand;
pub mod io;
pub mod lattice;
pub mod orbit;
pub mod reach;
pub mod report;
pub mod rystsov;
pub mod search;
pub mod standardize;
pub mod state_set;
pub mod transformation;
pub mod word;

pub use builtin::{builtin_by_name, builtin_example, Example};
pub use dfa::{Dfa, WordProfile};
pub use digraph::{Digraph, EdgeLabel};
pub use error::{Error, Result};
pub use state_set::StateSet;
pub use transformation::Transformation;
pub use word::{parse_word, render_word, Letter, Word};
