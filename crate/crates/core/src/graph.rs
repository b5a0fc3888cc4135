//! Cyclic shift graphs restricted to one evaluation class.
//!
//! Two elements `s`, `t` are adjacent when `s = xy` and `t = yx` for some words
//! `x`, `y`. Since the relation preserves evaluation, each class is a finite
//! vertex set: all search trees on that multiset of labels.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{SylvElement, DEFAULT_REWRITE_BUDGET};
use crate::trees::{Bst, DEFAULT_MAX_READINGS};
use crate::words::{Evaluation, Symbol, Word};

pub const DEFAULT_MAX_VERTICES: usize = 20_000;

/// Enumeration guards. Exceeding any of them is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_readings: usize,
    pub max_vertices: usize,
    pub rewrite_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_readings: DEFAULT_MAX_READINGS,
            max_vertices: DEFAULT_MAX_VERTICES,
            rewrite_budget: DEFAULT_REWRITE_BUDGET,
        }
    }
}

/// Words `x`, `y` with `P(xy)` the source tree and `P(yx)` the target tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftWitness {
    pub x: Word,
    pub y: Word,
}

impl ShiftWitness {
    pub fn new(x: Word, y: Word) -> Self {
        ShiftWitness { x, y }
    }

    pub fn source(&self) -> Bst {
        Bst::from_word(&self.x.concat(&self.y))
    }

    pub fn target(&self) -> Bst {
        Bst::from_word(&self.y.concat(&self.x))
    }

    pub fn certifies(&self, from: &Bst, to: &Bst) -> bool {
        self.source() == *from && self.target() == *to
    }

    pub fn reversed(&self) -> ShiftWitness {
        ShiftWitness::new(self.y.clone(), self.x.clone())
    }
}

/// All cyclic-shift neighbours of `s`, including `s` itself, each with the
/// first witness found. Sorted by tree.
pub fn neighbors(s: &SylvElement, max_readings: usize) -> Result<Vec<(SylvElement, ShiftWitness)>> {
    Ok(neighbor_trees(s.tree(), max_readings)?
        .into_iter()
        .map(|(t, w)| {
            let e = SylvElement::from_tree(t, s.rank()).expect("neighbour keeps labels");
            (e, w)
        })
        .collect())
}

fn neighbor_trees(t: &Bst, max_readings: usize) -> Result<BTreeMap<Bst, ShiftWitness>> {
    let mut out = BTreeMap::new();
    for reading in t.readings(max_readings)? {
        for cut in 0..=reading.len() {
            let (x, y) = reading.split_at(cut);
            let target = Bst::from_word(&y.concat(&x));
            out.entry(target).or_insert_with(|| ShiftWitness::new(x, y));
        }
    }
    Ok(out)
}

/// Number of distinct search trees with the given label multiset.
pub fn count_trees(e: &Evaluation) -> u128 {
    fn go(counts: &[usize], memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if counts.iter().all(|&c| c == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(counts) {
            return v;
        }
        let mut total: u128 = 0;
        for r in 0..counts.len() {
            if counts[r] == 0 {
                continue;
            }
            let mut left = counts[..=r].to_vec();
            left[r] -= 1;
            let l = go(&left, memo);
            let rt = go(&counts[r + 1..], memo);
            total = total.saturating_add(l.saturating_mul(rt));
        }
        memo.insert(counts.to_vec(), total);
        total
    }
    go(e.counts(), &mut HashMap::new())
}

/// Every distinct search tree on the label multiset `e`, sorted.
///
/// The root `r` takes one copy of its label; all smaller labels and the
/// remaining copies of `r` go left, all larger labels go right.
pub fn trees_with_evaluation(e: &Evaluation, max_vertices: usize) -> Result<Vec<Bst>> {
    if count_trees(e) > max_vertices as u128 {
        return Err(Error::CapExceeded {
            what: "component vertices",
            cap: max_vertices,
        });
    }
    fn go(counts: &[usize], offset: Symbol) -> Vec<Bst> {
        if counts.iter().all(|&c| c == 0) {
            return vec![Bst::empty()];
        }
        let mut out = Vec::new();
        for r in 0..counts.len() {
            if counts[r] == 0 {
                continue;
            }
            let mut left_counts = counts[..=r].to_vec();
            left_counts[r] -= 1;
            let lefts = go(&left_counts, offset);
            let rights = go(&counts[r + 1..], offset + r as Symbol + 1);
            let label = offset + r as Symbol;
            for l in &lefts {
                for rt in &rights {
                    out.push(Bst::node(label, l.clone(), rt.clone()));
                }
            }
        }
        out
    }
    let mut trees = go(e.counts(), 1);
    trees.sort();
    Ok(trees)
}

/// The subgraph of the cyclic shift graph on one evaluation class.
/// Self-loops are dropped.
#[derive(Debug, Clone)]
pub struct ComponentGraph {
    rank: u32,
    evaluation: Evaluation,
    vertices: Vec<Bst>,
    index: HashMap<Bst, usize>,
    adjacency: Vec<Vec<usize>>,
    /// Keyed by `(i, j)` with `i < j`; the witness runs from vertex `i` to `j`.
    edges: BTreeMap<(usize, usize), ShiftWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diameter {
    pub value: usize,
    pub from: Bst,
    pub to: Bst,
}

/// Builds the class graph of `e`. Neighbour sets are computed in parallel;
/// the result does not depend on scheduling.
pub fn component(e: &Evaluation, limits: &Limits) -> Result<ComponentGraph> {
    let vertices = trees_with_evaluation(e, limits.max_vertices)?;
    let index: HashMap<Bst, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let neighbor_sets = vertices
        .par_iter()
        .map(|t| neighbor_trees(t, limits.max_readings))
        .collect::<Result<Vec<_>>>()?;

    let mut adjacency = vec![Vec::new(); vertices.len()];
    let mut edges = BTreeMap::new();
    for (i, set) in neighbor_sets.into_iter().enumerate() {
        for (t, witness) in set {
            let j = *index.get(&t).ok_or_else(|| {
                Error::Internal(format!("neighbour {t} of {} left the class", vertices[i]))
            })?;
            if i == j {
                continue;
            }
            adjacency[i].push(j);
            let (key, w) = if i < j {
                ((i, j), witness)
            } else {
                ((j, i), witness.reversed())
            };
            edges.entry(key).or_insert(w);
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }
    Ok(ComponentGraph {
        rank: e.rank(),
        evaluation: e.clone(),
        vertices,
        index,
        adjacency,
        edges,
    })
}

/// The component of standard elements of rank `n`.
pub fn standard_component(n: u32, limits: &Limits) -> Result<ComponentGraph> {
    component(&Evaluation::standard(n), limits)
}

impl ComponentGraph {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn evaluation(&self) -> &Evaluation {
        &self.evaluation
    }

    pub fn vertices(&self) -> &[Bst] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Bst, &Bst, &ShiftWitness)> {
        self.edges
            .iter()
            .map(|(&(i, j), w)| (&self.vertices[i], &self.vertices[j], w))
    }

    pub fn index_of(&self, t: &Bst) -> Result<usize> {
        self.index
            .get(t)
            .copied()
            .ok_or_else(|| Error::NotInComponent(t.to_string()))
    }

    pub fn neighbors_of(&self, t: &Bst) -> Result<Vec<&Bst>> {
        let i = self.index_of(t)?;
        Ok(self.adjacency[i].iter().map(|&j| &self.vertices[j]).collect())
    }

    /// Hop counts from vertex `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected parts as sorted vertex index lists, ordered by smallest member.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertices.len()];
        let mut parts = Vec::new();
        for v in 0..self.vertices.len() {
            if seen[v] {
                continue;
            }
            let part: Vec<usize> = self
                .bfs(v)
                .iter()
                .enumerate()
                .filter_map(|(i, d)| d.map(|_| i))
                .collect();
            for &i in &part {
                seen[i] = true;
            }
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.parts().len() <= 1
    }

    fn disconnected(&self) -> Error {
        Error::Disconnected {
            parts: self
                .parts()
                .into_iter()
                .map(|p| p.into_iter().map(|i| self.vertices[i].to_string()).collect())
                .collect(),
        }
    }

    pub fn distance(&self, s: &Bst, t: &Bst) -> Result<usize> {
        let (i, j) = (self.index_of(s)?, self.index_of(t)?);
        self.bfs(i)[j].ok_or_else(|| self.disconnected())
    }

    /// Exact diameter with an extremal pair (smallest index pair on ties).
    pub fn diameter(&self) -> Result<Diameter> {
        if !self.is_connected() {
            return Err(self.disconnected());
        }
        let (value, i, j) = (0..self.vertices.len())
            .into_par_iter()
            .map(|i| {
                let dist = self.bfs(i);
                let (j, d) = dist
                    .iter()
                    .enumerate()
                    .map(|(j, d)| (j, d.expect("connected")))
                    .fold((i, 0), |best, (j, d)| if d > best.1 { (j, d) } else { best });
                (d, i, j)
            })
            .reduce(
                || (0, 0, 0),
                |a, b| {
                    if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                        b
                    } else {
                        a
                    }
                },
            );
        Ok(Diameter {
            value,
            from: self.vertices[i].clone(),
            to: self.vertices[j].clone(),
        })
    }

    /// Graphviz rendering. Vertex labels are canonical readings, or full tree
    /// serializations when `full_trees` is set.
    pub fn to_dot(&self, full_trees: bool) -> String {
        let mut out = String::from("graph cyclic_shift {\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let label = if full_trees {
                t.to_string()
            } else {
                t.canonical_reading().to_string()
            };
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for (&(i, j), w) in &self.edges {
            let _ = writeln!(out, "  v{i} -- v{j} [tooltip=\"x={} y={}\"];", w.x, w.y);
        }
        out.push_str("}\n");
        out
    }

    pub const TSV_HEADER: &'static str =
        "evaluation\tvertices\tedges\tconnected\tdiameter\tfrom\tto";

    /// One report row; diameter columns are `-` when the graph is disconnected.
    pub fn tsv_row(&self) -> String {
        let eval: Vec<String> = self.evaluation.counts().iter().map(|c| c.to_string()).collect();
        let (d, from, to) = match self.diameter() {
            Ok(d) => (d.value.to_string(), d.from.to_string(), d.to.to_string()),
            Err(_) => ("-".into(), "-".into(), "-".into()),
        };
        format!(
            "{}\t{}\t{}\t{}\t{d}\t{from}\t{to}",
            eval.join(","),
            self.vertex_count(),
            self.edge_count(),
            self.is_connected(),
        )
    }
}
