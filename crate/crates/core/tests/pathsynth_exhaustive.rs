use std::collections::BTreeSet;

use rayon::prelude::*;
use sylv_core::graph::{trees_with_evaluation, DEFAULT_MAX_VERTICES};
use sylv_core::pathsynth::{shift_path_trees, verify_p1p2, CaseTag};
use sylv_core::{Bst, Evaluation};

fn standard_trees(n: u32) -> Vec<Bst> {
    trees_with_evaluation(&Evaluation::standard(n), DEFAULT_MAX_VERTICES).unwrap()
}

/// Runs every ordered pair on `n` nodes and returns the case tags used.
fn all_pairs(n: u32) -> BTreeSet<CaseTag> {
    let trees = standard_trees(n);
    trees
        .par_iter()
        .flat_map_iter(|t| {
            trees.iter().flat_map(move |u| {
                let cert = shift_path_trees(t, u)
                    .unwrap_or_else(|e| panic!("T={t} U={u}: {e}"));
                assert_eq!(cert.len(), n as usize);
                cert.verify(t, u).unwrap();
                for (h, step) in cert.steps.iter().enumerate() {
                    assert!(step.witness.certifies(&step.pre, &step.post));
                    assert!(verify_p1p2(&step.post, u, h + 1));
                }
                assert_eq!(&cert.steps.last().unwrap().post, u);
                cert.steps.into_iter().map(|s| s.case)
            })
        })
        .collect()
}

#[test]
fn every_pair_up_to_five_nodes() {
    for n in 1..=5 {
        all_pairs(n);
    }
}

#[test]
fn every_case_is_exercised_by_six_nodes() {
    let mut seen = BTreeSet::new();
    for n in 1..=6 {
        seen.extend(all_pairs(n));
    }
    let all: BTreeSet<CaseTag> = CaseTag::ALL.into_iter().collect();
    assert_eq!(seen, all);
}
