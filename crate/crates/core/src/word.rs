//! Letters, words and the exponent notation used to read and print them.
//!
//! Words are written as concatenations of `a`, `b` and parenthesized groups,
//! each optionally followed by `^k` for a positive repetition count, e.g.
//! `(ab^10)^4a`. Rendering never introduces parentheses: it prints maximal
//! runs of one letter, with an exponent when the run is longer than one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the two input letters. `A < B` fixes the shortlex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::A, Letter::B];

    pub fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        if i == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn other(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{a, b}`. Ordered by shortlex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// `l^count`.
    pub fn power_of(l: Letter, count: usize) -> Word {
        Word(vec![l; count])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, count: usize) -> Word {
        Word(self.0.repeat(count))
    }

    /// Splits the word into maximal blocks of the form `a b^j`. A leading
    /// run of `b`s, if any, forms its own block.
    pub fn ab_blocks(&self) -> Vec<Word> {
        let mut blocks: Vec<Word> = Vec::new();
        for &l in &self.0 {
            match (l, blocks.last_mut()) {
                (Letter::B, Some(last)) => last.push(l),
                _ => blocks.push(Word::letter(l)),
            }
        }
        blocks
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == l).count();
            if run == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Renders a word in exponent notation; `ε` renders as the empty string.
pub fn render_word(w: &Word) -> String {
    w.to_string()
}

/// Parses exponent notation such as `(ab^10)^4a`. Whitespace is ignored.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = WordParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let w = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err(if p.bytes[p.pos] == b')' {
            "unbalanced `)`".to_string()
        } else {
            format!("unexpected character `{}`", p.bytes[p.pos] as char)
        }));
    }
    Ok(w)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_char(self.as_char())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

struct WordParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn err(&self, msg: String) -> Error {
        Error::WordParse { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Word> {
        let mut out = Word::empty();
        loop {
            let item = match self.peek() {
                Some(b'a') => {
                    self.pos += 1;
                    Word::letter(Letter::A)
                }
                Some(b'b') => {
                    self.pos += 1;
                    Word::letter(Letter::B)
                }
                Some(b'(') => {
                    let open = self.pos;
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(Error::WordParse {
                            pos: open,
                            msg: "unbalanced `(`".to_string(),
                        });
                    }
                    self.pos += 1;
                    inner
                }
                _ => return Ok(out),
            };
            let item = match self.peek() {
                Some(b'^') => {
                    self.pos += 1;
                    let k = self.exponent()?;
                    item.pow(k)
                }
                _ => item,
            };
            out.0.extend(item.0);
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive integer after `^`".to_string()));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<usize>() {
            Ok(0) => Err(Error::WordParse {
                pos: start,
                msg: "exponent must be positive".to_string(),
            }),
            Ok(k) => Ok(k),
            Err(_) => Err(Error::WordParse {
                pos: start,
                msg: format!("exponent `{digits}` too large"),
            }),
        }
    }
}
