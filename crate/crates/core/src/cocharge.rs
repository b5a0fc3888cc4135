//! Cocharge sequences of standard words and trees.
//!
//! Write the word around a circle with a marker `*` between its last and
//! first letters. Symbol 1 gets label 0. Moving from `i` to `i + 1`, the
//! label goes up by one when `i + 1` sits to the left of `i` in the word
//! (reached before passing `*` when scanning backwards), and stays the same
//! otherwise.
//!
//! Under this orientation a single transposition of the last letter to the
//! front raises exactly one label: for standard `ua` with `a != 1`,
//! `cochseq(au)` equals `cochseq(ua)` plus one in component `a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::SylvElement;
use crate::trees::{Bst, DEFAULT_MAX_READINGS};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CochargeSeq(Vec<u32>);

impl CochargeSeq {
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The classical cocharge statistic: the sum of the sequence.
    pub fn cocharge(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Starts at 0, each term equals its predecessor or exceeds it by one.
    pub fn is_well_formed(&self) -> bool {
        self.0.first().is_none_or(|&f| f == 0)
            && self.0.windows(2).all(|p| p[1] == p[0] || p[1] == p[0] + 1)
    }

    /// Largest componentwise absolute difference.
    pub fn max_distance(&self, other: &CochargeSeq) -> Result<u32> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0))
    }
}

impl fmt::Display for CochargeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn cochseq_word(u: &Word) -> Result<CochargeSeq> {
    if u.is_empty() || !u.is_standard() {
        return Err(Error::NotStandard(u.to_string()));
    }
    let n = u.len();
    let mut position = vec![0usize; n];
    for (p, &s) in u.symbols().iter().enumerate() {
        position[s as usize - 1] = p;
    }
    let mut labels = Vec::with_capacity(n);
    let mut k = 0;
    labels.push(0);
    for i in 1..n {
        if position[i] < position[i - 1] {
            k += 1;
        }
        labels.push(k);
    }
    Ok(CochargeSeq(labels))
}

/// Cochseq of a standard tree, computed from its canonical reading. With
/// `verify_all_readings`, every reading is computed and must agree.
pub fn cochseq_tree(t: &SylvElement, verify_all_readings: bool) -> Result<CochargeSeq> {
    cochseq_bst(t.tree(), verify_all_readings)
}

pub fn cochseq_bst(t: &Bst, verify_all_readings: bool) -> Result<CochargeSeq> {
    if t.is_empty() || !t.is_standard() {
        return Err(Error::NotStandard(t.to_string()));
    }
    let seq = cochseq_word(&t.canonical_reading())?;
    if verify_all_readings {
        for r in t.readings(DEFAULT_MAX_READINGS)? {
            let other = cochseq_word(&r)?;
            if other != seq {
                return Err(Error::Internal(format!(
                    "readings {} and {r} of {t} have cochseq {seq} and {other}",
                    t.canonical_reading()
                )));
            }
        }
    }
    Ok(seq)
}

/// Lower bound on the cyclic-shift distance between two standard elements.
pub fn cocharge_lower_bound(s: &SylvElement, t: &SylvElement) -> Result<u32> {
    let (a, b) = (s.tree().len(), t.tree().len());
    if a != b {
        return Err(Error::SizeMismatch { left: a, right: b });
    }
    cochseq_tree(s, false)?.max_distance(&cochseq_tree(t, false)?)
}
