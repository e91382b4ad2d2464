//! The reference automata used throughout the tests and examples.
//! All of them are standardized with `b` acting as `q ↦ q ⊕ 1`.

use std::fmt;
use std::str::FromStr;

use crate::dfa::Dfa;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Example {
    /// Six states, orbit `{2, 5}`.
    E6,
    /// Twelve states, `d = r = 10`; perfectly reachable.
    E12,
    /// 21 states with the non-21-expandable subset `{3, 10, 17}`.
    E21,
    /// 48 states, orbit `{24, 18}`.
    E48,
    /// Six states, synchronizing but not completely reachable.
    Fig7,
}

impl Example {
    pub const ALL: [Example; 5] = [
        Example::E6,
        Example::E12,
        Example::E21,
        Example::E48,
        Example::Fig7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Example::E6 => "E6",
            Example::E12 => "E12",
            Example::E21 => "E21",
            Example::E48 => "E48",
            Example::Fig7 => "FIG7",
        }
    }

    /// The action of `a` as a table.
    pub fn a_table(self) -> Vec<usize> {
        match self {
            Example::E6 => vec![2, 1, 5, 3, 4, 2],
            Example::E12 => vec![10, 2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11],
            Example::E21 => with_moves(21, &[(0, 14), (7, 18), (18, 7)]),
            Example::E48 => with_moves(
                48,
                &[(0, 24), (18, 24), (24, 18), (13, 14), (14, 13), (30, 32), (32, 30)],
            ),
            Example::Fig7 => vec![3, 2, 1, 3, 4, 5],
        }
    }
}

fn with_moves(n: usize, moves: &[(usize, usize)]) -> Vec<usize> {
    let mut a: Vec<usize> = (0..n).collect();
    for &(from, to) in moves {
        a[from] = to;
    }
    a
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Example::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownExample(s.to_string()))
    }
}

pub fn builtin_example(e: Example) -> Dfa {
    Dfa::circular(&e.a_table()).expect("built-in tables are valid")
}

/// Looks an example up by name (`E6`, `E12`, `E21`, `E48`, `FIG7`; case-insensitive).
pub fn builtin_by_name(name: &str) -> Result<Dfa, Error> {
    name.parse().map(builtin_example)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for e in Example::ALL {
            assert_eq!(e.name().parse::<Example>().unwrap(), e);
        }
        assert_eq!("fig7".parse::<Example>().unwrap(), Example::Fig7);
        assert_eq!(
            builtin_by_name("E7"),
            Err(Error::UnknownExample("E7".to_string()))
        );
    }

    #[test]
    fn sizes() {
        let sizes: Vec<usize> = Example::ALL.iter().map(|&e| builtin_example(e).n()).collect();
        assert_eq!(sizes, [6, 12, 21, 48, 6]);
    }
}
