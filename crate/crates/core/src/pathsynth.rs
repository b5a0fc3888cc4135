//! Certified cyclic-shift paths between standard trees.
//!
//! Given standard trees `T` and `U` on `n` nodes, [`shift_path`] produces
//! `T = T_0 ~ T_1 ~ ... ~ T_n = U`. Let `u_1, ..., u_n` be the postfix
//! traversal of `U` and `B_h` the complete subtree of `U` at `u_h`. Among the
//! visited nodes `u_1..u_h`, the topmost ones (no visited ancestor) are
//! `u_{i_1}, ..., u_{i_k} = u_h`. Every `T_h` (`h >= 1`) satisfies:
//!
//! * P1: `B_h` occurs at the root of `T_h`;
//! * P2: `B_{i_k}, ..., B_{i_1}` occur, in that order, rooted on the path of
//!   left child nodes from the root of `T_h`.
//!
//! `T_n` then contains all of `U` at its root, so `T_n = U`.
//!
//! Each step factors a reading of `T_h` as `xy` from readings of designated
//! subtrees and moves to `P(yx)`. Subtree readings are always the postfix
//! (canonical) readings. Since trees are standard, nodes are identified with
//! their labels throughout.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ShiftWitness;
use crate::monoid::SylvElement;
use crate::trees::{Bst, NodeLocator, Step};
use crate::words::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Base,
    Case1,
    Case2a,
    Case2b,
    Case3,
    Case4a,
    Case4b,
}

impl CaseTag {
    pub const ALL: [CaseTag; 7] = [
        CaseTag::Base,
        CaseTag::Case1,
        CaseTag::Case2a,
        CaseTag::Case2b,
        CaseTag::Case3,
        CaseTag::Case4a,
        CaseTag::Case4b,
    ];
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Base => "base",
            CaseTag::Case1 => "case1",
            CaseTag::Case2a => "case2a",
            CaseTag::Case2b => "case2b",
            CaseTag::Case3 => "case3",
            CaseTag::Case4a => "case4a",
            CaseTag::Case4b => "case4b",
        })
    }
}

/// Relative position of `u_h` and `u_{h+1}` in `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// `u_h` is a left child and `u_{h+1}` lies in the right subtree of its parent.
    One,
    /// `u_h` is the right child of `u_{h+1}`, which has a non-empty left subtree.
    Two,
    /// `u_h` is the left child of `u_{h+1}`.
    Three,
    /// `u_h` is the right child of `u_{h+1}`, which has an empty left subtree.
    Four,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub pre: Bst,
    pub witness: ShiftWitness,
    pub post: Bst,
    pub case: CaseTag,
}

/// Serialized as a JSON array of steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathCertificate {
    pub steps: Vec<PathStep>,
}

/// `U` together with its postfix order and parent links.
#[derive(Debug, Clone)]
pub struct Target {
    tree: Bst,
    /// `order[h - 1] = u_h`
    order: Vec<Symbol>,
    parent: HashMap<Symbol, (Symbol, Step)>,
}

impl Target {
    pub fn new(u: &Bst) -> Result<Self> {
        if u.is_empty() || !u.is_standard() {
            return Err(Error::NotStandard(u.to_string()));
        }
        let mut parent = HashMap::new();
        fn go(t: &Bst, parent: &mut HashMap<Symbol, (Symbol, Step)>) {
            if let Some(n) = t.root() {
                for (child, side) in [(&n.left, Step::Left), (&n.right, Step::Right)] {
                    if let Some(c) = child.label() {
                        parent.insert(c, (n.label, side));
                    }
                    go(child, parent);
                }
            }
        }
        go(u, &mut parent);
        Ok(Target {
            tree: u.clone(),
            order: u.postfix().into_iter().map(|(s, _)| s).collect(),
            parent,
        })
    }

    pub fn tree(&self) -> &Bst {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `u_h`, 1-based.
    pub fn node(&self, h: usize) -> Symbol {
        self.order[h - 1]
    }

    /// The complete subtree of `U` at `label`.
    pub fn subtree_at(&self, label: Symbol) -> Bst {
        let at = self.tree.find(label).expect("label of U");
        self.tree.complete_subtree(&at).expect("located")
    }

    /// `B_h`
    pub fn block(&self, h: usize) -> Bst {
        self.subtree_at(self.node(h))
    }

    fn is_below(&self, node: Symbol, ancestor: Symbol) -> bool {
        let mut cur = node;
        while let Some(&(p, _)) = self.parent.get(&cur) {
            if p == ancestor {
                return true;
            }
            cur = p;
        }
        false
    }

    fn check_step_index(&self, h: usize, max: usize) -> Result<()> {
        if h == 0 || h > max {
            return Err(Error::Parse(format!("step index {h} outside 1..={max}")));
        }
        Ok(())
    }
}

/// The visited set after `h` postfix steps of `U`, and its topmost members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalState {
    pub visited: Vec<Symbol>,
    /// `u_{i_1}, ..., u_{i_k}` with `i_1 < ... < i_k = h`.
    pub top: Vec<Symbol>,
    /// `B_h`
    pub block: Bst,
}

impl TraversalState {
    pub fn at(target: &Target, h: usize) -> Result<Self> {
        target.check_step_index(h, target.len())?;
        let visited: Vec<Symbol> = target.order[..h].to_vec();
        let top: Vec<Symbol> = visited
            .iter()
            .copied()
            .filter(|&v| !visited.iter().any(|&w| w != v && target.is_below(v, w)))
            .collect();
        let state = TraversalState {
            visited,
            top,
            block: target.block(h),
        };
        let u_h = target.node(h);
        let antichain = state.top.iter().all(|&a| {
            state.top.iter().all(|&b| a == b || !target.is_below(a, b))
        });
        if state.top.last() != Some(&u_h) || !antichain {
            return Err(Error::Internal(format!("bad traversal state at h={h}: {state:?}")));
        }
        Ok(state)
    }
}

pub fn classify_step(u: &Bst, h: usize) -> Result<StepCase> {
    classify(&Target::new(u)?, h)
}

fn classify(target: &Target, h: usize) -> Result<StepCase> {
    target.check_step_index(h, target.len() - 1)?;
    let (cur, next) = (target.node(h), target.node(h + 1));
    let inconsistent = || {
        Error::Internal(format!(
            "postfix neighbours {cur}, {next} of {} fit no case",
            target.tree
        ))
    };
    let &(parent, side) = target.parent.get(&cur).ok_or_else(inconsistent)?;
    match side {
        Step::Left if parent == next => Ok(StepCase::Three),
        Step::Left => {
            let right = target.subtree_at(parent).right().clone();
            if right.contains(next) {
                Ok(StepCase::One)
            } else {
                Err(inconsistent())
            }
        }
        Step::Right if parent == next => {
            if target.subtree_at(next).left().is_empty() {
                Ok(StepCase::Four)
            } else {
                Ok(StepCase::Two)
            }
        }
        Step::Right => Err(inconsistent()),
    }
}

fn cat(parts: &[&Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, w| acc.concat(w))
}

fn single(s: Symbol) -> Word {
    Word::from(vec![s])
}

/// `T_0 -> T_1`: split the canonical reading of `T` as `w u_1 w'` and move to
/// `P(w' w u_1)`, which has root `u_1`.
pub fn base_step(t: &Bst, u1: Symbol) -> Result<(ShiftWitness, Bst)> {
    if t.is_empty() || !t.is_standard() {
        return Err(Error::NotStandard(t.to_string()));
    }
    let reading = t.canonical_reading();
    let pos = reading
        .symbols()
        .iter()
        .position(|&s| s == u1)
        .ok_or_else(|| Error::NotInComponent(format!("{u1} in {t}")))?;
    let (x, y) = reading.split_at(pos + 1);
    let witness = ShiftWitness::new(x, y);
    let next = witness.target();
    Ok((witness, next))
}

/// P1 and P2 for `T_h` against `U`.
pub fn verify_p1p2(t_h: &Bst, u: &Bst, h: usize) -> bool {
    let Ok(target) = Target::new(u) else {
        return false;
    };
    check_p1p2(t_h, &target, h)
}

fn check_p1p2(t_h: &Bst, target: &Target, h: usize) -> bool {
    let Ok(state) = TraversalState::at(target, h) else {
        return false;
    };
    let Ok(path) = t_h.left_child_path() else {
        return false;
    };
    // P1: B_h at the root, i.e. the first entry of the left path.
    if !t_h.contains_pattern_at(&path[0], &state.block) {
        return false;
    }
    // P2: the remaining blocks further down the same path, in order.
    let mut cursor = 1;
    for &root in state.top.iter().rev().skip(1) {
        let block = target.subtree_at(root);
        match (cursor..path.len()).find(|&p| t_h.contains_pattern_at(&path[p], &block)) {
            Some(p) => cursor = p + 1,
            None => return false,
        }
    }
    true
}

/// `T_h -> T_{h+1}` for `1 <= h < n`. `T_h` must satisfy P1 and P2.
pub fn induction_step(t_h: &Bst, u: &Bst, h: usize) -> Result<(ShiftWitness, Bst, CaseTag)> {
    step(t_h, &Target::new(u)?, h)
}

fn step(t_h: &Bst, target: &Target, h: usize) -> Result<(ShiftWitness, Bst, CaseTag)> {
    let case = classify(target, h)?;
    if !check_p1p2(t_h, target, h) {
        return Err(Error::Internal(format!(
            "T_{h} = {t_h} violates P1/P2 for U = {}",
            target.tree
        )));
    }
    let root = NodeLocator::root();
    let next = target.node(h + 1);
    let b_h = target.block(h);
    let b_word = b_h.canonical_reading();
    let lmin = t_h.left_minimal(&root, &b_h)?;
    let rmax = t_h.right_maximal(&root, &b_h)?;
    let u_word = single(next);
    let fail = |what: &str| {
        Error::Internal(format!(
            "{case:?} at h={h}: {what} (T_h = {t_h}, U = {})",
            target.tree
        ))
    };

    let (x, y, tag) = match case {
        StepCase::One => {
            // u_{h+1} exceeds all of B_h, so it sits in the right-maximal subtree.
            let at = rmax
                .find(next)
                .ok_or_else(|| fail("u_{h+1} not in the right-maximal subtree of B_h"))?;
            let sub = rmax.subtree(&at)?;
            let alpha = sub.left().canonical_reading();
            let beta = sub.right().canonical_reading();
            let delta = rmax.without_subtree(&at)?.canonical_reading();
            let lambda = lmin.canonical_reading();
            (
                cat(&[&alpha, &beta, &u_word]),
                cat(&[&delta, &lambda, &b_word]),
                CaseTag::Case1,
            )
        }
        StepCase::Two => {
            let (g, side) = target
                .tree
                .find(next)
                .map(|at| target.tree.subtree(&at.left()).map(|t| (t.label(), Step::Left)))
                .ok_or_else(|| fail("u_{h+1} missing from U"))??;
            debug_assert_eq!(side, Step::Left);
            let g = g.ok_or_else(|| fail("u_{h+1} has no left child"))?;
            let b_g = target.subtree_at(g);
            // u_{h+1} is the only label strictly between B_g and B_h.
            let between = b_g.max_label().map(|m| m + 1) == Some(next)
                && b_h.min_label() == Some(next + 1);
            if !between {
                return Err(fail("u_{h+1} is not the unique symbol between B_g and B_h"));
            }
            let delta = rmax.canonical_reading();
            if lmin.label() == Some(next) {
                // (a) u_{h+1} on the left path between B_h and B_g.
                let below = lmin.left();
                if !lmin.right().is_empty() || !below.contains_pattern_at(&root, &b_g) {
                    return Err(fail("sub-case (a) shape mismatch"));
                }
                let lambda = below.left_minimal(&root, &b_g)?.canonical_reading();
                (
                    cat(&[&lambda, &b_g.canonical_reading(), &u_word]),
                    cat(&[&delta, &b_word]),
                    CaseTag::Case2a,
                )
            } else if lmin.label() == Some(g) && lmin.contains_pattern_at(&root, &b_g) {
                // (b) u_{h+1} alone in the right-maximal subtree of B_g.
                if lmin.right_maximal(&root, &b_g)? != Bst::leaf(next) {
                    return Err(fail("sub-case (b): right-maximal subtree of B_g is not u_{h+1}"));
                }
                let lambda = lmin.left_minimal(&root, &b_g)?.canonical_reading();
                (
                    u_word.clone(),
                    cat(&[&lambda, &b_g.canonical_reading(), &delta, &b_word]),
                    CaseTag::Case2b,
                )
            } else {
                return Err(fail("u_{h+1} matches neither sub-case"));
            }
        }
        StepCase::Three => {
            if b_h.max_label().map(|m| m + 1) != Some(next) {
                return Err(fail("u_{h+1} is not the successor of B_h"));
            }
            let at = rmax
                .find(next)
                .ok_or_else(|| fail("u_{h+1} not in the right-maximal subtree of B_h"))?;
            let sub = rmax.subtree(&at)?;
            if !sub.left().is_empty() {
                return Err(fail("u_{h+1} has a left child in T_h"));
            }
            let beta = sub.right().canonical_reading();
            let delta = rmax.without_subtree(&at)?.canonical_reading();
            let lambda = lmin.canonical_reading();
            (
                cat(&[&beta, &u_word]),
                cat(&[&delta, &lambda, &b_word]),
                CaseTag::Case3,
            )
        }
        StepCase::Four => {
            if b_h.min_label() != Some(next + 1) {
                return Err(fail("u_{h+1} is not the predecessor of B_h"));
            }
            let at = lmin
                .find(next)
                .ok_or_else(|| fail("u_{h+1} not in the left-minimal subtree of B_h"))?;
            let sub = lmin.subtree(&at)?;
            if !sub.right().is_empty() {
                return Err(fail("u_{h+1} has a right child in T_h"));
            }
            let delta = rmax.canonical_reading();
            if at == root {
                let lambda = sub.left().canonical_reading();
                (
                    cat(&[&lambda, &u_word]),
                    cat(&[&delta, &b_word]),
                    CaseTag::Case4a,
                )
            } else {
                let zeta = sub.left().canonical_reading();
                let lambda = lmin.without_subtree(&at)?.canonical_reading();
                (
                    cat(&[&zeta, &u_word]),
                    cat(&[&lambda, &delta, &b_word]),
                    CaseTag::Case4b,
                )
            }
        }
    };

    let witness = ShiftWitness::new(x, y);
    if witness.source() != *t_h {
        return Err(fail(&format!(
            "factorization {}·{} is not a reading of T_h",
            witness.x, witness.y
        )));
    }
    let t_next = witness.target();
    if !check_p1p2(&t_next, target, h + 1) {
        return Err(fail(&format!("T_{{h+1}} = {t_next} violates P1/P2")));
    }
    Ok((witness, t_next, tag))
}

/// A certificate of exactly `n` cyclic shifts from `t` to `u`.
pub fn shift_path(t: &SylvElement, u: &SylvElement) -> Result<PathCertificate> {
    shift_path_trees(t.tree(), u.tree())
}

pub fn shift_path_trees(t: &Bst, u: &Bst) -> Result<PathCertificate> {
    for tree in [t, u] {
        if tree.is_empty() || !tree.is_standard() {
            return Err(Error::NotStandard(tree.to_string()));
        }
    }
    if t.len() != u.len() {
        return Err(Error::SizeMismatch {
            left: t.len(),
            right: u.len(),
        });
    }
    let target = Target::new(u)?;
    let n = target.len();
    let mut steps = Vec::with_capacity(n);

    let (witness, mut current) = base_step(t, target.node(1))?;
    steps.push(PathStep {
        pre: t.clone(),
        witness,
        post: current.clone(),
        case: CaseTag::Base,
    });
    if !check_p1p2(&current, &target, 1) {
        return Err(Error::Internal(format!("T_1 = {current} violates P1")));
    }
    for h in 1..n {
        let (witness, next, case) = step(&current, &target, h)?;
        steps.push(PathStep {
            pre: current,
            witness,
            post: next.clone(),
            case,
        });
        current = next;
    }
    if current != *u {
        return Err(Error::Internal(format!("path ended at {current}, not {u}")));
    }
    Ok(PathCertificate { steps })
}

impl PathCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-checks every claim of the certificate from scratch.
    pub fn verify(&self, t: &Bst, u: &Bst) -> Result<()> {
        let target = Target::new(u)?;
        let bad = |msg: String| Err(Error::Internal(msg));
        if self.steps.len() != target.len() {
            return bad(format!("{} steps for {} nodes", self.steps.len(), target.len()));
        }
        if self.steps[0].pre != *t {
            return bad(format!("starts at {}, not {t}", self.steps[0].pre));
        }
        for (i, s) in self.steps.iter().enumerate() {
            if !s.witness.certifies(&s.pre, &s.post) {
                return bad(format!("step {}: witness does not certify", i + 1));
            }
            if let Some(next) = self.steps.get(i + 1) {
                if next.pre != s.post {
                    return bad(format!("step {} does not chain", i + 1));
                }
            }
            if !check_p1p2(&s.post, &target, i + 1) {
                return bad(format!("T_{} violates P1/P2", i + 1));
            }
        }
        if self.steps.last().unwrap().post != *u {
            return bad(format!("ends away from {u}"));
        }
        Ok(())
    }

    /// `T_0, T_1, ..., T_n`.
    pub fn trees(&self) -> Vec<Bst> {
        let mut out: Vec<Bst> = self.steps.iter().take(1).map(|s| s.pre.clone()).collect();
        out.extend(self.steps.iter().map(|s| s.post.clone()));
        out
    }

    /// The tree sequence with consecutive repeats removed. Display only.
    pub fn compressed(&self) -> Vec<Bst> {
        let mut out = self.trees();
        out.dedup();
        out
    }

    /// One line per step: `T_{h-1} = P(x·y) ~ P(y·x) = T_h  [case]`.
    pub fn transcript(&self) -> String {
        let show = |w: &Word| if w.is_empty() { "ε".to_string() } else { w.to_string() };
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "T{} = P({}·{}) ~ P({}·{}) = T{}  [{}]  {}",
                i,
                show(&s.witness.x),
                show(&s.witness.y),
                show(&s.witness.y),
                show(&s.witness.x),
                i + 1,
                s.case,
                s.post
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> Bst {
        Bst::from_word(&s.parse().unwrap())
    }

    #[test]
    fn classify_example_target() {
        let u = tree("23541");
        assert_eq!(classify_step(&u, 1).unwrap(), StepCase::Three);
        assert_eq!(classify_step(&u, 2).unwrap(), StepCase::One);
        assert_eq!(classify_step(&u, 3).unwrap(), StepCase::Two);
        assert_eq!(classify_step(&u, 4).unwrap(), StepCase::Four);
        assert!(classify_step(&u, 5).is_err());
        assert!(classify_step(&u, 0).is_err());
    }

    #[test]
    fn base_step_examples() {
        let (w, t1) = base_step(&tree("13254"), 2).unwrap();
        assert_eq!((w.x.to_string(), w.y.to_string()), ("132".into(), "54".into()));
        assert_eq!(t1, tree("54132"));

        let (w, t1) = base_step(&Bst::leaf(1), 1).unwrap();
        assert_eq!(t1, Bst::leaf(1));
        assert!(w.y.is_empty());

        let (_, t1) = base_step(&tree("21"), 2).unwrap();
        assert_eq!(t1, tree("12"));

        assert!(matches!(base_step(&tree("11"), 1), Err(Error::NotStandard(_))));
    }

    #[test]
    fn induction_steps_of_worked_example() {
        let u = tree("23541");
        let (w, t2, tag) = induction_step(&tree("54312"), &u, 1).unwrap();
        assert_eq!((tag, t2.clone()), (CaseTag::Case3, tree("12543")));
        assert_eq!((w.x.to_string(), w.y.to_string()), ("543".into(), "12".into()));

        let (_, t3, tag) = induction_step(&t2, &u, 2).unwrap();
        assert_eq!((tag, t3.clone()), (CaseTag::Case1, tree("41235")));

        let (_, t4, tag) = induction_step(&t3, &u, 3).unwrap();
        assert_eq!((tag, t4.clone()), (CaseTag::Case2b, tree("12354")));

        let (_, t5, tag) = induction_step(&t4, &u, 4).unwrap();
        assert_eq!((tag, t5.clone()), (CaseTag::Case4a, u));
    }

    #[test]
    fn p1p2_examples() {
        let u = tree("23541");
        assert!(verify_p1p2(&tree("41235"), &u, 3));
        assert!(verify_p1p2(&tree("54132"), &u, 1));
        assert!(!verify_p1p2(&tree("13254"), &u, 1));
        // B_3 = {5} at the root but B_2 = 3(2) missing from the left path
        assert!(!verify_p1p2(&tree("32145"), &u, 3));
        assert!(verify_p1p2(&u, &u, 5));
    }

    #[test]
    fn precondition_violation_is_reported() {
        let err = induction_step(&tree("13254"), &tree("23541"), 1).unwrap_err();
        assert!(matches!(err, Error::Internal(_)));
    }

    #[test]
    fn worked_example_path() {
        let cert = shift_path_trees(&tree("13254"), &tree("23541")).unwrap();
        let expected: Vec<Bst> = ["13254", "54132", "12543", "41235", "12354", "23541"]
            .iter()
            .map(|s| tree(s))
            .collect();
        assert_eq!(cert.trees(), expected);
        cert.verify(&tree("13254"), &tree("23541")).unwrap();
        let tags: Vec<CaseTag> = cert.steps.iter().map(|s| s.case).collect();
        assert_eq!(
            tags,
            vec![CaseTag::Base, CaseTag::Case3, CaseTag::Case1, CaseTag::Case2b, CaseTag::Case4a]
        );
        assert_eq!(cert.transcript().lines().count(), 5);
    }

    #[test]
    fn single_node_path() {
        let cert = shift_path_trees(&Bst::leaf(1), &Bst::leaf(1)).unwrap();
        assert_eq!(cert.len(), 1);
        assert_eq!(cert.steps[0].witness, ShiftWitness::new(tree("1").canonical_reading(), Word::empty()));
        assert_eq!(cert.compressed(), vec![Bst::leaf(1)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            shift_path_trees(&tree("12"), &tree("123")),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            shift_path_trees(&tree("11"), &tree("12")),
            Err(Error::NotStandard(_))
        ));
        assert!(matches!(
            shift_path_trees(&Bst::empty(), &Bst::empty()),
            Err(Error::NotStandard(_))
        ));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let (t, u) = (tree("13254"), tree("23541"));
        let mut cert = shift_path_trees(&t, &u).unwrap();
        cert.steps[2].witness = cert.steps[2].witness.reversed();
        assert!(cert.verify(&t, &u).is_err());
        let mut cert = shift_path_trees(&t, &u).unwrap();
        cert.steps.pop();
        assert!(cert.verify(&t, &u).is_err());
    }

    #[test]
    fn json_round_trip() {
        let cert = shift_path_trees(&tree("13254"), &tree("23541")).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.starts_with('['));
        assert!(json.contains("\"case\":\"case2b\""));
        let back: PathCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
