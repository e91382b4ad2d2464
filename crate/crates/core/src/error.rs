use thiserror::Error;

use crate::StateSet;

/// Errors produced by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state {state} out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },

    #[error("automaton must have between 1 and {max} states, got {n}")]
    StateCount { n: usize, max: usize },

    #[error("letter tables differ in length: a has {a} entries, b has {b}")]
    LetterSizeMismatch { a: usize, b: usize },

    #[error("set over {found} states used with a {expected}-state automaton")]
    SetSizeMismatch { expected: usize, found: usize },

    #[error("no letter acts as a cyclic permutation of all states")]
    NotCircular,

    #[error("no letter of defect 1 is available: both letters are permutations")]
    NoDefectOneLetter,

    #[error("excluded set of the non-cyclic letter must be a singleton, found {0}")]
    ExcludedNotSingleton(StateSet),

    #[error("duplicate set of the non-cyclic letter must be a singleton, found {0}")]
    DuplicateNotSingleton(StateSet),

    #[error("automaton is not standardized")]
    NotStandardized,

    #[error("subset must be proper and non-empty, got {0}")]
    ImproperSubset(StateSet),

    #[error("subset must be non-empty")]
    EmptySubset,

    #[error("orbit index {index} out of range (orbit length {len})")]
    OrbitIndex { index: usize, len: usize },

    #[error("subset lattice search needs 2^{n} nodes; limit is n <= {limit} (set CREACH_LATTICE_LIMIT to raise it)")]
    LatticeCapacity { n: usize, limit: usize },

    #[error("transition monoid exceeds the cap of {cap} elements")]
    MonoidOverflow { cap: usize },

    #[error("enumeration of {count} automata exceeds the budget of {budget}; use sampling instead")]
    EnumerationBudget { count: u128, budget: u128 },

    #[error("no expanding word found for {0} at any search bound")]
    ExpansionStuck(StateSet),

    #[error("unknown example automaton `{0}`")]
    UnknownExample(String),

    #[error("word parse error at byte {pos}: {msg}")]
    WordParse { pos: usize, msg: String },

    #[error("automaton parse error: {0}")]
    AutomatonParse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
