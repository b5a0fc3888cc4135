//! Right-strict binary search trees and leaf insertion.
//!
//! A node's label is `>=` every label in its left subtree and `<` every label
//! in its right subtree. Trees are immutable; insertion copies the path it
//! touches and shares the rest.
//!
//! Serialized form: `label(left,right)` with `_` for the empty tree, e.g.
//! `4(2(1(_,_),3(_,_)),5(_,_))`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{Symbol, Word};

/// Default bound on the number of readings enumerated for one tree.
pub const DEFAULT_MAX_READINGS: usize = 100_000;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bst(Option<Arc<Node>>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub label: Symbol,
    pub left: Bst,
    pub right: Bst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Left,
    Right,
}

/// Path from the root to a node, as a sequence of left/right steps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeLocator(Vec<Step>);

impl NodeLocator {
    pub fn root() -> Self {
        NodeLocator(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn child(&self, step: Step) -> Self {
        let mut v = self.0.clone();
        v.push(step);
        NodeLocator(v)
    }

    pub fn left(&self) -> Self {
        self.child(Step::Left)
    }

    pub fn right(&self) -> Self {
        self.child(Step::Right)
    }

    pub fn parent(&self) -> Option<(NodeLocator, Step)> {
        let (&last, rest) = self.0.split_last()?;
        Some((NodeLocator(rest.to_vec()), last))
    }
}

impl FromIterator<Step> for NodeLocator {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        NodeLocator(iter.into_iter().collect())
    }
}

impl fmt::Display for NodeLocator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for s in &self.0 {
            f.write_char(match s {
                Step::Left => 'L',
                Step::Right => 'R',
            })?;
        }
        Ok(())
    }
}

impl Bst {
    pub fn empty() -> Self {
        Bst(None)
    }

    /// Builds a node without checking the search-tree property; see [`Bst::is_valid`].
    pub fn node(label: Symbol, left: Bst, right: Bst) -> Self {
        Bst(Some(Arc::new(Node { label, left, right })))
    }

    pub fn leaf(label: Symbol) -> Self {
        Bst::node(label, Bst::empty(), Bst::empty())
    }

    /// The tree obtained by inserting the symbols of `word` right-to-left.
    pub fn from_word(word: &Word) -> Self {
        word.symbols()
            .iter()
            .rev()
            .fold(Bst::empty(), |t, &a| t.insert(a))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn root(&self) -> Option<&Node> {
        self.0.as_deref()
    }

    pub fn label(&self) -> Option<Symbol> {
        self.root().map(|n| n.label)
    }

    pub fn left(&self) -> &Bst {
        self.root().map_or(&EMPTY_TREE, |n| &n.left)
    }

    pub fn right(&self) -> &Bst {
        self.root().map_or(&EMPTY_TREE, |n| &n.right)
    }

    pub fn len(&self) -> usize {
        match self.root() {
            None => 0,
            Some(n) => 1 + n.left.len() + n.right.len(),
        }
    }

    /// Leaf insertion: descend left on `a <= label`, right otherwise.
    pub fn insert(&self, a: Symbol) -> Bst {
        match self.root() {
            None => Bst::leaf(a),
            Some(n) if a <= n.label => Bst::node(n.label, n.left.insert(a), n.right.clone()),
            Some(n) => Bst::node(n.label, n.left.clone(), n.right.insert(a)),
        }
    }

    /// Checks the right-strict search-tree property at every node.
    pub fn is_valid(&self) -> bool {
        fn go(t: &Bst, lo: Option<Symbol>, hi: Option<Symbol>) -> bool {
            // labels must lie in (lo, hi]
            match t.root() {
                None => true,
                Some(n) => {
                    lo.is_none_or(|lo| n.label > lo)
                        && hi.is_none_or(|hi| n.label <= hi)
                        && go(&n.left, lo, Some(n.label))
                        && go(&n.right, Some(n.label), hi)
                }
            }
        }
        go(self, None, None)
    }

    /// Labels in infix order (weakly increasing for a valid tree).
    pub fn infix_labels(&self) -> Vec<Symbol> {
        self.infix().into_iter().map(|(s, _)| s).collect()
    }

    pub fn infix(&self) -> Vec<(Symbol, NodeLocator)> {
        fn go(t: &Bst, at: NodeLocator, out: &mut Vec<(Symbol, NodeLocator)>) {
            if let Some(n) = t.root() {
                go(&n.left, at.left(), out);
                let right = at.right();
                out.push((n.label, at));
                go(&n.right, right, out);
            }
        }
        let mut out = Vec::with_capacity(self.len());
        go(self, NodeLocator::root(), &mut out);
        out
    }

    pub fn postfix(&self) -> Vec<(Symbol, NodeLocator)> {
        fn go(t: &Bst, at: NodeLocator, out: &mut Vec<(Symbol, NodeLocator)>) {
            if let Some(n) = t.root() {
                go(&n.left, at.left(), out);
                go(&n.right, at.right(), out);
                out.push((n.label, at));
            }
        }
        let mut out = Vec::with_capacity(self.len());
        go(self, NodeLocator::root(), &mut out);
        out
    }

    /// The postfix reading. Always a reading of `self`.
    pub fn canonical_reading(&self) -> Word {
        fn go(t: &Bst, out: &mut Vec<Symbol>) {
            if let Some(n) = t.root() {
                go(&n.left, out);
                go(&n.right, out);
                out.push(n.label);
            }
        }
        let mut out = Vec::with_capacity(self.len());
        go(self, &mut out);
        Word::from(out)
    }

    /// Every word `w` with `Bst::from_word(w) == *self`: children before
    /// parents, root last. Fails once more than `cap` distinct words are found.
    pub fn readings(&self, cap: usize) -> Result<BTreeSet<Word>> {
        let cap_err = || Error::CapExceeded {
            what: "readings",
            cap,
        };
        fn go(t: &Bst, cap: usize) -> Option<BTreeSet<Vec<Symbol>>> {
            let Some(n) = t.root() else {
                return Some(BTreeSet::from([Vec::new()]));
            };
            let left = go(&n.left, cap)?;
            let right = go(&n.right, cap)?;
            let mut out = BTreeSet::new();
            let mut buf = Vec::new();
            for l in &left {
                for r in &right {
                    if !interleave(l, r, n.label, &mut buf, &mut out, cap) {
                        return None;
                    }
                }
            }
            Some(out)
        }
        let words = go(self, cap).ok_or_else(cap_err)?;
        Ok(words.into_iter().map(Word::from).collect())
    }

    /// Resolves a locator to the complete subtree it addresses.
    pub fn subtree(&self, at: &NodeLocator) -> Result<&Bst> {
        let mut t = self;
        for step in at.steps() {
            t = match (t.root(), step) {
                (None, _) => return Err(Error::InvalidLocator(at.to_string())),
                (Some(n), Step::Left) => &n.left,
                (Some(n), Step::Right) => &n.right,
            };
        }
        if t.is_empty() {
            return Err(Error::InvalidLocator(at.to_string()));
        }
        Ok(t)
    }

    /// Alias of [`Bst::subtree`], returning an owned tree.
    pub fn complete_subtree(&self, at: &NodeLocator) -> Result<Bst> {
        self.subtree(at).cloned()
    }

    /// Locators of the path of left child nodes from the root, root first.
    pub fn left_child_path(&self) -> Result<Vec<NodeLocator>> {
        if self.is_empty() {
            return Err(Error::EmptyTree);
        }
        let mut out = Vec::new();
        let mut at = NodeLocator::root();
        let mut t = self;
        while let Some(n) = t.root() {
            out.push(at.clone());
            at = at.left();
            t = &n.left;
        }
        Ok(out)
    }

    /// True iff `pattern` occurs with its root at `at`: every node of the
    /// pattern is present in `self` with the same label and the same
    /// parent/child edges. Nodes of `self` outside the pattern are ignored.
    pub fn contains_pattern_at(&self, at: &NodeLocator, pattern: &Bst) -> bool {
        fn go(t: &Bst, p: &Bst) -> bool {
            match (t.root(), p.root()) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(tn), Some(pn)) => {
                    tn.label == pn.label && go(&tn.left, &pn.left) && go(&tn.right, &pn.right)
                }
            }
        }
        match self.subtree(at) {
            Ok(t) => go(t, pattern),
            Err(_) => pattern.is_empty(),
        }
    }

    /// The complete subtree at the left child of the left-most node of the
    /// subtree `b` rooted at `at`. Possibly empty.
    pub fn left_minimal(&self, at: &NodeLocator, b: &Bst) -> Result<Bst> {
        self.boundary_subtree(at, b, Step::Left)
    }

    /// The complete subtree at the right child of the right-most node of the
    /// subtree `b` rooted at `at`. Possibly empty.
    pub fn right_maximal(&self, at: &NodeLocator, b: &Bst) -> Result<Bst> {
        self.boundary_subtree(at, b, Step::Right)
    }

    fn boundary_subtree(&self, at: &NodeLocator, b: &Bst, side: Step) -> Result<Bst> {
        if b.is_empty() || !self.contains_pattern_at(at, b) {
            return Err(Error::InvalidLocator(format!("{at} (pattern {b})")));
        }
        let mut loc = at.clone();
        let mut p = b;
        loop {
            let next = match side {
                Step::Left => p.left(),
                Step::Right => p.right(),
            };
            if next.is_empty() {
                break;
            }
            loc = loc.child(side);
            p = next;
        }
        let extreme = self.subtree(&loc)?;
        Ok(match side {
            Step::Left => extreme.left().clone(),
            Step::Right => extreme.right().clone(),
        })
    }

    /// Locator of the first node (in preorder) carrying `label`.
    pub fn find(&self, label: Symbol) -> Option<NodeLocator> {
        fn go(t: &Bst, label: Symbol, at: &mut Vec<Step>) -> bool {
            let Some(n) = t.root() else { return false };
            if n.label == label {
                return true;
            }
            at.push(Step::Left);
            if go(&n.left, label, at) {
                return true;
            }
            at.pop();
            at.push(Step::Right);
            if go(&n.right, label, at) {
                return true;
            }
            at.pop();
            false
        }
        let mut at = Vec::new();
        go(self, label, &mut at).then_some(NodeLocator(at))
    }

    pub fn contains(&self, label: Symbol) -> bool {
        self.find(label).is_some()
    }

    /// The tree with the complete subtree at `at` removed.
    pub fn without_subtree(&self, at: &NodeLocator) -> Result<Bst> {
        fn go(t: &Bst, steps: &[Step]) -> Bst {
            let n = t.root().expect("locator validated");
            match steps.split_first() {
                None => Bst::empty(),
                Some((Step::Left, rest)) => Bst::node(n.label, go(&n.left, rest), n.right.clone()),
                Some((Step::Right, rest)) => Bst::node(n.label, n.left.clone(), go(&n.right, rest)),
            }
        }
        self.subtree(at)?;
        Ok(go(self, at.steps()))
    }

    /// True iff the labels are exactly `1..=len`.
    pub fn is_standard(&self) -> bool {
        let mut labels = self.infix_labels();
        labels.sort_unstable();
        labels.iter().enumerate().all(|(i, &s)| s as usize == i + 1)
    }

    pub fn min_label(&self) -> Option<Symbol> {
        let mut t = self;
        let mut best = None;
        while let Some(n) = t.root() {
            best = Some(n.label);
            t = &n.left;
        }
        best
    }

    pub fn max_label(&self) -> Option<Symbol> {
        let mut t = self;
        let mut best = None;
        while let Some(n) = t.root() {
            best = Some(n.label);
            t = &n.right;
        }
        best
    }

    /// Graphviz rendering; empty children are drawn as invisible points so
    /// left/right placement is preserved.
    pub fn to_dot(&self) -> String {
        fn go(t: &Bst, id: &mut usize, out: &mut String) -> usize {
            let me = *id;
            *id += 1;
            match t.root() {
                None => {
                    let _ = writeln!(out, "  n{me} [shape=point, style=invis];");
                }
                Some(n) => {
                    let _ = writeln!(out, "  n{me} [label=\"{}\"];", n.label);
                    for (child, side) in [(&n.left, "sw"), (&n.right, "se")] {
                        let empty = child.is_empty();
                        let c = go(child, id, out);
                        let style = if empty { ", style=invis" } else { "" };
                        let _ = writeln!(out, "  n{me}:{side} -> n{c}{style};");
                    }
                }
            }
            me
        }
        let mut out = String::from("digraph bst {\n  node [shape=circle];\n");
        if !self.is_empty() {
            go(self, &mut 0, &mut out);
        }
        out.push_str("}\n");
        out
    }

    /// Sideways ASCII rendering, right subtree on top.
    pub fn to_ascii(&self) -> String {
        fn go(t: &Bst, depth: usize, out: &mut String) {
            if let Some(n) = t.root() {
                go(&n.right, depth + 1, out);
                let _ = writeln!(out, "{}{}", "    ".repeat(depth), n.label);
                go(&n.left, depth + 1, out);
            }
        }
        let mut out = String::new();
        if self.is_empty() {
            out.push_str("_\n");
        }
        go(self, 0, &mut out);
        out
    }
}

static EMPTY_TREE: Bst = Bst(None);

/// Pushes every interleaving of `l` and `r`, followed by `root`, into `out`.
/// Returns false as soon as `out` grows past `cap`.
fn interleave(
    l: &[Symbol],
    r: &[Symbol],
    root: Symbol,
    buf: &mut Vec<Symbol>,
    out: &mut BTreeSet<Vec<Symbol>>,
    cap: usize,
) -> bool {
    if l.is_empty() || r.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(l);
        w.extend_from_slice(r);
        w.push(root);
        out.insert(w);
        return out.len() <= cap;
    }
    buf.push(l[0]);
    let ok = interleave(&l[1..], r, root, buf, out, cap);
    buf.pop();
    if !ok {
        return false;
    }
    buf.push(r[0]);
    let ok = interleave(l, &r[1..], root, buf, out, cap);
    buf.pop();
    ok
}

impl fmt::Display for Bst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => f.write_str("_"),
            Some(n) => write!(f, "{}({},{})", n.label, n.left, n.right),
        }
    }
}

impl fmt::Debug for Bst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Bst {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bst {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Bst {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&s, &mut pos)?;
        if pos != s.len() {
            return Err(Error::Parse(format!("trailing input at offset {pos}")));
        }
        if !t.is_valid() {
            return Err(Error::Parse(format!("{t} is not a binary search tree")));
        }
        Ok(t)
    }
}

fn parse_tree(s: &[char], pos: &mut usize) -> Result<Bst> {
    let expect = |pos: &mut usize, c: char| -> Result<()> {
        if s.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at offset {}", *pos)))
        }
    };
    if s.get(*pos) == Some(&'_') {
        *pos += 1;
        return Ok(Bst::empty());
    }
    let start = *pos;
    while s.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    let label: Symbol = s[start..*pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse(format!("expected label or '_' at offset {start}")))?;
    if label == 0 {
        return Err(Error::Parse("labels must be positive".into()));
    }
    expect(pos, '(')?;
    let left = parse_tree(s, pos)?;
    expect(pos, ',')?;
    let right = parse_tree(s, pos)?;
    expect(pos, ')')?;
    Ok(Bst::node(label, left, right))
}
