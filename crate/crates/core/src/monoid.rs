//! The sylvester monoid of rank `n`: words modulo the insertion congruence.
//!
//! Equivalence is decided by comparing insertion trees. The relation scheme
//! `cavb = acvb` (`a <= b < c`) is also implemented as a breadth-first
//! rewriting closure so the two routes can be checked against each other.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trees::Bst;
use crate::words::{Evaluation, Symbol, Word};

/// Default bound on the number of words visited by [`rewrite_class`].
pub const DEFAULT_REWRITE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SylvElement {
    rank: u32,
    tree: Bst,
}

impl SylvElement {
    pub fn identity(rank: u32) -> Self {
        SylvElement {
            rank,
            tree: Bst::empty(),
        }
    }

    /// Wraps a tree, checking that it is a search tree with labels within rank.
    pub fn from_tree(tree: Bst, rank: u32) -> Result<Self> {
        if !tree.is_valid() {
            return Err(Error::Parse(format!("{tree} is not a binary search tree")));
        }
        if let Some(symbol) = tree.max_label().filter(|&m| m > rank) {
            return Err(Error::RankViolation { symbol, rank });
        }
        Ok(SylvElement { rank, tree })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn tree(&self) -> &Bst {
        &self.tree
    }

    pub fn into_tree(self) -> Bst {
        self.tree
    }

    pub fn canonical_reading(&self) -> Word {
        self.tree.canonical_reading()
    }

    pub fn evaluation(&self) -> Evaluation {
        let mut counts = vec![0; self.rank as usize];
        for s in self.tree.infix_labels() {
            counts[s as usize - 1] += 1;
        }
        Evaluation::new(counts)
    }

    pub fn is_standard(&self) -> bool {
        self.tree.is_standard()
    }

    pub fn multiply(&self, other: &SylvElement) -> Result<SylvElement> {
        multiply(self, other)
    }
}

impl fmt::Display for SylvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tree, f)
    }
}

pub fn element_of(w: &Word, rank: u32) -> Result<SylvElement> {
    w.check_rank(rank)?;
    Ok(SylvElement {
        rank,
        tree: Bst::from_word(w),
    })
}

pub fn equivalent(u: &Word, v: &Word, rank: u32) -> Result<bool> {
    u.check_rank(rank)?;
    v.check_rank(rank)?;
    Ok(Bst::from_word(u) == Bst::from_word(v))
}

/// Product of two elements via their canonical readings.
pub fn multiply(s: &SylvElement, t: &SylvElement) -> Result<SylvElement> {
    if s.rank != t.rank {
        return Err(Error::RankMismatch {
            left: s.rank,
            right: t.rank,
        });
    }
    let w = s.canonical_reading().concat(&t.canonical_reading());
    element_of(&w, s.rank)
}

pub fn evaluation_of(s: &SylvElement) -> Evaluation {
    s.evaluation()
}

/// One instance `(c a v b, a c v b)` of the defining relation scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInstance {
    pub left: Word,
    pub right: Word,
}

impl RelationInstance {
    pub fn new(a: Symbol, b: Symbol, c: Symbol, v: &Word) -> Result<Self> {
        if !(a <= b && b < c) {
            return Err(Error::Parse(format!(
                "relation needs a <= b < c, got a={a} b={b} c={c}"
            )));
        }
        let tail = v.concat(&Word::from(vec![b]));
        Ok(RelationInstance {
            left: Word::from(vec![c, a]).concat(&tail),
            right: Word::from(vec![a, c]).concat(&tail),
        })
    }

    /// The instance matched by the factor `w[i..=j]`, if the adjacent pair at
    /// `i, i+1` may be swapped using the symbol at `j` as `b`.
    pub fn at(w: &Word, i: usize, j: usize) -> Option<Self> {
        let s = w.symbols();
        if j < i + 2 || j >= s.len() {
            return None;
        }
        let (p, q, b) = (s[i], s[i + 1], s[j]);
        let (a, c) = (p.min(q), p.max(q));
        let v = Word::from(s[i + 2..j].to_vec());
        RelationInstance::new(a, b, c, &v).ok()
    }
}

/// Positions `i` at which swapping `w[i]` and `w[i+1]` applies one relation
/// (in either direction): some later symbol `b` has `min <= b < max`.
pub fn rewrite_positions(w: &Word) -> Vec<usize> {
    let s = w.symbols();
    if s.len() < 3 {
        return Vec::new();
    }
    (0..s.len() - 2)
        .filter(|&i| {
            let (a, c) = (s[i].min(s[i + 1]), s[i].max(s[i + 1]));
            a < c && s[i + 2..].iter().any(|&b| a <= b && b < c)
        })
        .collect()
}

/// Every word reachable from `u` by relation applications, including `u`.
pub fn rewrite_class(u: &Word, rank: u32, budget: usize) -> Result<HashSet<Word>> {
    u.check_rank(rank)?;
    let mut seen = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(w) = queue.pop_front() {
        for i in rewrite_positions(&w) {
            let mut next = w.clone().into_symbols();
            next.swap(i, i + 1);
            let next = Word::from(next);
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::CapExceeded {
                        what: "rewrite budget",
                        cap: budget,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Decides equivalence through the presentation rather than through trees.
pub fn rewrite_equivalent(u: &Word, v: &Word, rank: u32, budget: usize) -> Result<bool> {
    v.check_rank(rank)?;
    if u.len() != v.len() || u.evaluation(rank)? != v.evaluation(rank)? {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    Ok(rewrite_class(u, rank, budget)?.contains(v))
}
