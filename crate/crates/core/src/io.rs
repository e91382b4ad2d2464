//! Automaton files: `{"n": 12, "a": [...], "b": [...] | "cyclic"}`.

use serde::{Deserialize, Serialize};

use crate::dfa::{add_mod, Dfa};
use crate::error::{Error, Result};
use crate::state_set::MAX_STATES;
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterDef {
    Table(Vec<usize>),
    Token(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub n: usize,
    pub a: LetterDef,
    pub b: LetterDef,
}

const CYCLIC: &str = "cyclic";

fn resolve(name: &str, n: usize, def: &LetterDef) -> Result<Vec<usize>> {
    let table = match def {
        LetterDef::Token(t) if t == CYCLIC => return Ok((0..n).map(|q| add_mod(n, q, 1)).collect()),
        LetterDef::Token(t) => {
            return Err(Error::AutomatonParse(format!(
                "field `{name}`: unknown token \"{t}\" (expected an array or \"{CYCLIC}\")"
            )))
        }
        LetterDef::Table(t) => t,
    };
    if table.len() != n {
        return Err(Error::AutomatonParse(format!(
            "field `{name}`: array length {} != {n}",
            table.len()
        )));
    }
    if let Some((i, &q)) = table.iter().enumerate().find(|&(_, &q)| q >= n) {
        return Err(Error::AutomatonParse(format!(
            "field `{name}`: entry {i} is {q}, out of range for {n} states"
        )));
    }
    Ok(table.clone())
}

impl AutomatonFile {
    pub fn to_dfa(&self) -> Result<Dfa> {
        let n = self.n;
        if n == 0 || n > MAX_STATES {
            return Err(Error::StateCount { n, max: MAX_STATES });
        }
        Dfa::new(&resolve("a", n, &self.a)?, &resolve("b", n, &self.b)?)
    }

    pub fn from_dfa(dfa: &Dfa) -> AutomatonFile {
        let n = dfa.n();
        let def = |l: Letter| {
            let t = dfa.action(l).to_vec();
            if t.iter().enumerate().all(|(q, &x)| x == add_mod(n, q, 1)) {
                LetterDef::Token(CYCLIC.into())
            } else {
                LetterDef::Table(t)
            }
        };
        AutomatonFile {
            n,
            a: def(Letter::A),
            b: def(Letter::B),
        }
    }
}

/// Parses an automaton file. Syntax errors report line and column.
pub fn parse_automaton(text: &str) -> Result<Dfa> {
    let file: AutomatonFile =
        serde_json::from_str(text).map_err(|e| Error::AutomatonParse(e.to_string()))?;
    file.to_dfa()
}

/// Renders `dfa` in the file format, using `"cyclic"` where it applies.
pub fn render_automaton(dfa: &Dfa) -> String {
    serde_json::to_string(&AutomatonFile::from_dfa(dfa)).expect("plain data serializes")
}
