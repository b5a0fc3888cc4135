//! Words over the ordered alphabet `{1 < 2 < ... < n}` and their evaluations.
//!
//! Text format: compact digits when every symbol is at most 9 (`13254`),
//! otherwise dot-delimited integers (`1.3.12.5`; a single large symbol is
//! written `12.`). Both are accepted on input.
//! The empty word is written as the empty string; `ε` is also accepted.

use std::fmt;
use std::ops::{Add, Index};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An alphabet symbol. Always at least 1.
pub type Symbol = u32;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.contains(&0) {
            return Err(Error::Parse("symbols must be positive".into()));
        }
        Ok(Word(symbols))
    }

    /// `1 2 ... n`
    pub fn increasing(n: u32) -> Self {
        Word((1..=n).collect())
    }

    /// `n ... 2 1`
    pub fn decreasing(n: u32) -> Self {
        Word((1..=n).rev().collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_symbol(&self) -> Symbol {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Splits into `(self[..at], self[at..])`.
    pub fn split_at(&self, at: usize) -> (Word, Word) {
        let (a, b) = self.0.split_at(at);
        (Word(a.to_vec()), Word(b.to_vec()))
    }

    pub fn check_rank(&self, rank: u32) -> Result<()> {
        match self.0.iter().find(|&&s| s > rank) {
            Some(&symbol) => Err(Error::RankViolation { symbol, rank }),
            None => Ok(()),
        }
    }

    /// True iff the word is a permutation of `1..=len`. The empty word is standard.
    pub fn is_standard(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &s in &self.0 {
            let i = s as usize;
            if i == 0 || i > n || seen[i - 1] {
                return false;
            }
            seen[i - 1] = true;
        }
        true
    }

    pub fn evaluation(&self, rank: u32) -> Result<Evaluation> {
        self.check_rank(rank)?;
        let mut counts = vec![0usize; rank as usize];
        for &s in &self.0 {
            counts[s as usize - 1] += 1;
        }
        Ok(Evaluation(counts))
    }

    /// All words of the given length over `{1..=rank}`, in lexicographic order.
    pub fn all_of_length(rank: u32, len: usize) -> impl Iterator<Item = Word> {
        let total = (rank as usize).checked_pow(len as u32).unwrap_or(0);
        (0..total).map(move |mut code| {
            let mut v = vec![0; len];
            for slot in v.iter_mut().rev() {
                *slot = (code % rank as usize) as Symbol + 1;
                code /= rank as usize;
            }
            Word(v)
        })
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn standard_words(n: u32) -> Vec<Word> {
        let mut out = Vec::new();
        let mut current: Vec<Symbol> = (1..=n).collect();
        loop {
            out.push(Word(current.clone()));
            // next lexicographic permutation
            let Some(i) = current.windows(2).rposition(|w| w[0] < w[1]) else {
                break;
            };
            let j = current.iter().rposition(|&x| x > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl Index<usize> for Word {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}

impl From<Vec<Symbol>> for Word {
    /// Panics on a zero symbol; use [`Word::new`] for fallible construction.
    fn from(v: Vec<Symbol>) -> Self {
        Word::new(v).expect("zero symbol in word")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        let symbols = if s.contains('.') {
            // a lone multi-digit symbol is written with a trailing dot: `10.`
            let body = s.strip_suffix('.').filter(|b| !b.contains('.')).unwrap_or(s);
            body.split('.')
                .map(|part| {
                    part.parse::<Symbol>()
                        .map_err(|_| Error::Parse(format!("bad symbol {part:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad character {c:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s <= 9) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{s}")?;
            }
            if self.0.len() == 1 {
                f.write_str(".")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiplicities of each symbol; `counts[i]` is the number of copies of `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Evaluation(Vec<usize>);

impl Evaluation {
    pub fn new(counts: Vec<usize>) -> Self {
        Evaluation(counts)
    }

    /// `(1, 1, ..., 1)` of length `n`.
    pub fn standard(n: u32) -> Self {
        Evaluation(vec![1; n as usize])
    }

    pub fn zero(n: u32) -> Self {
        Evaluation(vec![0; n as usize])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> u32 {
        self.0.len() as u32
    }

    /// Total length of any word with this evaluation.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|&c| c == 1)
    }

    /// Every evaluation of rank `n` with total weight `len`, lexicographically.
    pub fn all_with_weight(n: u32, len: usize) -> Vec<Evaluation> {
        fn go(slots: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Evaluation>) {
            if slots == 0 {
                if left == 0 {
                    out.push(Evaluation(acc.clone()));
                }
                return;
            }
            for c in 0..=left {
                acc.push(c);
                go(slots - 1, left - c, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n as usize, len, &mut Vec::new(), &mut out);
        out
    }
}

impl Add for &Evaluation {
    type Output = Evaluation;

    fn add(self, rhs: &Evaluation) -> Evaluation {
        let n = self.0.len().max(rhs.0.len());
        Evaluation(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl FromStr for Evaluation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad evaluation entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Evaluation)
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
