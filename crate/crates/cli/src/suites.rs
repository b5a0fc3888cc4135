//! Exhaustive verification suites. Progress goes to stderr; each failure
//! carries a command line that replays the counterexample.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use rayon::prelude::*;
use sylv_core::graph::{component, neighbors, standard_component, trees_with_evaluation, Limits};
use sylv_core::monoid::{equivalent, rewrite_class};
use sylv_core::pathsynth::{shift_path_trees, verify_p1p2};
use sylv_core::{cocharge_lower_bound, cochseq_word, Bst, Error, Evaluation, SylvElement, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Rewriting closure vs. insertion equivalence (-n rank, --maxlen).
    Oracle,
    /// All readings of each standard tree share one cochseq (-n max size).
    CochargeCongruence,
    /// One cyclic shift moves each cochseq component by at most 1 (-n max size).
    CochargeShift,
    /// Every evaluation class is connected (-n rank, --maxlen).
    Connectivity,
    /// Standard-class diameters lie in [n-1, n] (-n max rank).
    Diameter,
    /// Distances dominate the cocharge bound (-n max rank).
    LowerBound,
    /// Shift paths for every ordered pair of standard trees (-n max size).
    Path,
    /// Neighbour sets do not depend on the ambient rank (-n max rank).
    Induced,
    /// Every suite with its default parameters.
    All,
}

pub struct SuiteResult {
    name: &'static str,
    params: String,
    checked: usize,
    notes: Vec<String>,
    failure: Option<String>,
}

pub struct Report(Vec<SuiteResult>);

impl Report {
    pub fn passed(&self) -> bool {
        self.0.iter().all(|r| r.failure.is_none())
    }

    pub fn counterexample(&self) -> Option<String> {
        self.0.iter().find_map(|r| r.failure.clone())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.0 {
            let status = if r.failure.is_none() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}\t{}\t{}\tchecked {}", r.name, r.params, r.checked);
            for note in &r.notes {
                let _ = writeln!(out, "\t{note}");
            }
            if let Some(f) = &r.failure {
                let _ = writeln!(out, "\tcounterexample: {f}");
            }
        }
        out
    }
}

/// The first failure in enumeration order, so reports are reproducible.
fn first_failure(results: Vec<Result<usize, String>>) -> (usize, Option<String>) {
    let mut checked = 0;
    for r in results {
        match r {
            Ok(c) => checked += c,
            Err(f) => return (checked, Some(f)),
        }
    }
    (checked, None)
}

fn standard_trees(n: u32, limits: &Limits) -> Result<Vec<Bst>, Error> {
    trees_with_evaluation(&Evaluation::standard(n), limits.max_vertices)
}

pub fn run(suite: Suite, rank: Option<u32>, maxlen: Option<usize>, limits: &Limits) -> Result<Report, Error> {
    let one = |s| run_one(s, rank, maxlen, limits).map(|r| Report(vec![r]));
    match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Oracle,
                Suite::CochargeCongruence,
                Suite::CochargeShift,
                Suite::Connectivity,
                Suite::Diameter,
                Suite::LowerBound,
                Suite::Path,
                Suite::Induced,
            ] {
                all.push(run_one(s, None, None, limits)?);
            }
            Ok(Report(all))
        }
        s => one(s),
    }
}

fn run_one(suite: Suite, rank: Option<u32>, maxlen: Option<usize>, limits: &Limits) -> Result<SuiteResult, Error> {
    match suite {
        Suite::Oracle => oracle(rank.unwrap_or(4), maxlen.unwrap_or(6), limits),
        Suite::CochargeCongruence => cocharge_congruence(rank.unwrap_or(6), limits),
        Suite::CochargeShift => cocharge_shift(rank.unwrap_or(6)),
        Suite::Connectivity => connectivity(rank.unwrap_or(4), maxlen.unwrap_or(6), limits),
        Suite::Diameter => diameters(rank.unwrap_or(7), limits),
        Suite::LowerBound => lower_bound(rank.unwrap_or(6), limits),
        Suite::Path => paths(rank.unwrap_or(6), limits),
        Suite::Induced => induced(rank.unwrap_or(4), limits),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn oracle(rank: u32, maxlen: usize, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut groups: BTreeMap<Evaluation, Vec<Word>> = BTreeMap::new();
    for len in 0..=maxlen {
        eprintln!("oracle: enumerating length {len}");
        for u in Word::all_of_length(rank, len) {
            groups.entry(u.evaluation(rank)?).or_default().push(u);
        }
    }
    let results = groups
        .par_iter()
        .map(|(_, words)| {
            for u in words {
                let class = rewrite_class(u, rank, limits.rewrite_budget).map_err(|e| e.to_string())?;
                for v in words {
                    if class.contains(v) != equivalent(u, v, rank).unwrap() {
                        return Err(format!("sylv equiv --rewrite -n {rank} {u} {v}"));
                    }
                }
            }
            Ok(words.len() * words.len())
        })
        .collect();
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "oracle",
        params: format!("rank {rank}, length <= {maxlen}"),
        checked,
        notes: vec![],
        failure,
    })
}

fn cocharge_congruence(max_n: u32, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for n in 1..=max_n {
        eprintln!("cocharge-congruence: n = {n}");
        let trees = standard_trees(n, limits)?;
        results.extend(trees.par_iter().map(|t| {
            let expected = cochseq_word(&t.canonical_reading()).map_err(|e| e.to_string())?;
            let readings = t.readings(limits.max_readings).map_err(|e| e.to_string())?;
            for r in &readings {
                if cochseq_word(r).map_err(|e| e.to_string())? != expected {
                    return Err(format!("sylv cochseq {r}  vs  sylv cochseq {}", t.canonical_reading()));
                }
            }
            Ok(readings.len())
        }).collect::<Vec<_>>());
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "cocharge-congruence",
        params: format!("standard trees on <= {max_n} nodes"),
        checked,
        notes: vec![],
        failure,
    })
}

fn cocharge_shift(max_n: u32) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for n in 1..=max_n {
        eprintln!("cocharge-shift: n = {n}");
        results.extend(Word::standard_words(n).par_iter().map(|word| {
            let base = cochseq_word(word).map_err(|e| e.to_string())?;
            for cut in 0..=word.len() {
                let (x, y) = word.split_at(cut);
                let shifted = cochseq_word(&y.concat(&x)).map_err(|e| e.to_string())?;
                if base.max_distance(&shifted).unwrap() > 1 {
                    return Err(format!("sylv cochseq {word}  vs  sylv cochseq {}", y.concat(&x)));
                }
            }
            // moving the last letter a != 1 to the front raises component a by one
            let (u, a) = word.split_at(word.len() - 1);
            if a[0] != 1 {
                let front = cochseq_word(&a.concat(&u)).map_err(|e| e.to_string())?;
                let ok = (0..word.len()).all(|i| {
                    front.labels()[i] == base.labels()[i] + u32::from(i + 1 == a[0] as usize)
                });
                if !ok {
                    return Err(format!("sylv cochseq {word}  vs  sylv cochseq {}", a.concat(&u)));
                }
            }
            Ok(word.len() + 1)
        }).collect::<Vec<_>>());
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "cocharge-shift",
        params: format!("standard words of length <= {max_n}"),
        checked,
        notes: vec!["moving a != 1 from the end to the front adds 1 to component a".into()],
        failure,
    })
}

fn connectivity(rank: u32, maxlen: usize, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for n in 1..=rank {
        for len in 0..=maxlen {
            eprintln!("connectivity: rank {n}, length {len}");
            for e in Evaluation::all_with_weight(n, len) {
                let g = component(&e, limits)?;
                results.push(if g.is_connected() {
                    Ok(1)
                } else {
                    let counts: Vec<String> = e.counts().iter().map(|c| c.to_string()).collect();
                    Err(format!("sylv component --eval {}", counts.join(",")))
                });
            }
        }
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "connectivity",
        params: format!("rank <= {rank}, length <= {maxlen}"),
        checked,
        notes: vec![],
        failure,
    })
}

fn diameters(max_n: u32, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut notes = Vec::new();
    let mut failure = None;
    let mut checked = 0;
    for n in 1..=max_n {
        eprintln!("diameter: n = {n}");
        let g = standard_component(n, limits)?;
        let d = g.diameter()?;
        notes.push(format!("n={n}: vertices {} diameter {} ({} -> {})", g.vertex_count(), d.value, d.from, d.to));
        let n = n as usize;
        if failure.is_none() && (d.value + 1 < n || d.value > n) {
            failure = Some(format!("sylv diameter --standard -n {n}"));
        }
        checked += 1;
    }
    Ok(SuiteResult {
        name: "diameter",
        params: format!("standard classes, n <= {max_n}"),
        checked,
        notes,
        failure,
    })
}

fn lower_bound(max_n: u32, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for n in 1..=max_n {
        eprintln!("lower-bound: n = {n}");
        let g = standard_component(n, limits)?;
        let elems: Vec<SylvElement> = g
            .vertices()
            .iter()
            .map(|t| SylvElement::from_tree(t.clone(), n))
            .collect::<Result<_, _>>()?;
        results.extend((0..elems.len()).into_par_iter().map(|i| {
            let dist = g.bfs(i);
            for (j, t) in elems.iter().enumerate() {
                let bound = cocharge_lower_bound(&elems[i], t).map_err(|e| e.to_string())? as usize;
                match dist[j] {
                    Some(d) if d >= bound && d <= n as usize => {}
                    _ => {
                        return Err(format!(
                            "sylv distance -n {n} {} {}",
                            elems[i].canonical_reading(),
                            t.canonical_reading()
                        ))
                    }
                }
            }
            Ok(elems.len())
        }).collect::<Vec<_>>());
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "lower-bound",
        params: format!("standard pairs, n <= {max_n}"),
        checked,
        notes: vec![],
        failure,
    })
}

fn paths(max_n: u32, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for n in 1..=max_n {
        eprintln!("path: n = {n}");
        let trees = standard_trees(n, limits)?;
        results.extend(trees.par_iter().map(|t| {
            for u in &trees {
                let replay = || format!("sylv path {} {}", t.canonical_reading(), u.canonical_reading());
                let cert = shift_path_trees(t, u).map_err(|e| format!("{}  ({e})", replay()))?;
                cert.verify(t, u).map_err(|e| format!("{}  ({e})", replay()))?;
                let p1p2 = cert
                    .steps
                    .iter()
                    .enumerate()
                    .all(|(h, s)| verify_p1p2(&s.post, u, h + 1));
                if cert.len() != n as usize || !p1p2 {
                    return Err(replay());
                }
            }
            Ok(trees.len())
        }).collect::<Vec<_>>());
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "path",
        params: format!("ordered standard pairs, n <= {max_n}"),
        checked,
        notes: vec![],
        failure,
    })
}

fn induced(max_n: u32, limits: &Limits) -> Result<SuiteResult, Error> {
    let mut results = Vec::new();
    for m in 1..max_n {
        let small = standard_component(m, limits)?;
        for n in m + 1..=max_n {
            eprintln!("induced: m = {m}, n = {n}");
            let mut counts = vec![1; m as usize];
            counts.resize(n as usize, 0);
            let big = component(&Evaluation::new(counts), limits)?;
            for t in small.vertices() {
                let at = |rank| -> Result<Vec<Bst>, Error> {
                    Ok(neighbors(&SylvElement::from_tree(t.clone(), rank)?, limits.max_readings)?
                        .into_iter()
                        .map(|(e, _)| e.into_tree())
                        .collect())
                };
                let same = at(m)? == at(n)? && small.neighbors_of(t)? == big.neighbors_of(t)?;
                results.push(if same {
                    Ok(1)
                } else {
                    Err(format!("sylv neighbors -n {n} {}", t.canonical_reading()))
                });
            }
        }
    }
    let (checked, failure) = first_failure(results);
    Ok(SuiteResult {
        name: "induced",
        params: format!("standard elements, m < n <= {max_n}"),
        checked,
        notes: vec![],
        failure,
    })
}
