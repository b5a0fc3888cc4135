//! Shared inputs for the criterion benchmarks.

use sylv_core::graph::{trees_with_evaluation, DEFAULT_MAX_VERTICES};
use sylv_core::{Bst, Evaluation, Word};

/// A fixed pseudo-random word of the given length over `{1..=rank}`.
pub fn mixed_word(rank: u32, len: usize) -> Word {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let symbols: Vec<u32> = (0..len)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % rank as u64) as u32 + 1
        })
        .collect();
    Word::from(symbols)
}

/// Every standard tree on `n` nodes.
pub fn standard_trees(n: u32) -> Vec<Bst> {
    trees_with_evaluation(&Evaluation::standard(n), DEFAULT_MAX_VERTICES).expect("small n")
}
