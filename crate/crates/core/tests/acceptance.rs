//! Acceptance criteria. Runs as a plain binary so that every criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use sylv_core::cocharge::cochseq_bst;
use sylv_core::graph::{component, neighbors, standard_component, trees_with_evaluation, Limits};
use sylv_core::monoid::{element_of, equivalent, rewrite_class, DEFAULT_REWRITE_BUDGET};
use sylv_core::pathsynth::{shift_path_trees, verify_p1p2};
use sylv_core::{cocharge_lower_bound, cochseq_word, Bst, Evaluation, SylvElement, Word};

type Outcome = Result<String, String>;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn psylv(s: &str) -> Bst {
    Bst::from_word(&w(s))
}

fn standard_trees(n: u32) -> Vec<Bst> {
    trees_with_evaluation(&Evaluation::standard(n), 100_000).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_insertion() -> Outcome {
    let expected: Bst = "4(2(1(1(_,_),_),4(_,_)),5(5(5(_,_),_),6(_,7(_,_))))".parse().unwrap();
    let got = psylv("5451761524");
    ensure(got == expected, || format!("got {got}"))?;
    Ok(got.to_string())
}

fn golden_cocharge() -> Outcome {
    let got = cochseq_word(&w("1246375")).map_err(|e| e.to_string())?;
    ensure(got.labels() == [0, 0, 0, 1, 1, 2, 2], || format!("got {got}"))?;
    Ok(format!("({got})"))
}

fn lower_bound_endpoints() -> Outcome {
    for n in 1..=7u32 {
        let inc = psylv(&Word::increasing(n).to_string());
        let dec = psylv(&Word::decreasing(n).to_string());
        let a = cochseq_bst(&inc, true).map_err(|e| e.to_string())?;
        let b = cochseq_bst(&dec, true).map_err(|e| e.to_string())?;
        ensure(a.labels().iter().all(|&l| l == 0), || format!("n={n}: {a}"))?;
        ensure(b.labels().iter().copied().eq(0..n), || format!("n={n}: {b}"))?;
        let bound = cocharge_lower_bound(
            &SylvElement::from_tree(inc, n).unwrap(),
            &SylvElement::from_tree(dec, n).unwrap(),
        )
        .map_err(|e| e.to_string())?;
        ensure(bound == n - 1, || format!("n={n}: bound {bound}"))?;
    }
    Ok("n = 1..7".into())
}

fn presentation_oracle() -> Outcome {
    const RANK: u32 = 4;
    let mut groups: BTreeMap<Evaluation, Vec<Word>> = BTreeMap::new();
    for len in 0..=6 {
        for u in Word::all_of_length(RANK, len) {
            groups.entry(u.evaluation(RANK).unwrap()).or_default().push(u);
        }
    }
    // Across groups both deciders answer "no": the closure by evaluation
    // check, insertion because a tree determines its evaluation.
    let mut tree_eval: HashMap<Bst, Evaluation> = HashMap::new();
    for (e, words) in &groups {
        for u in words {
            let prev = tree_eval.insert(Bst::from_word(u), e.clone());
            ensure(prev.as_ref().is_none_or(|p| p == e), || format!("{u} in two classes"))?;
        }
    }
    let pairs: usize = groups
        .par_iter()
        .map(|(_, words)| -> Result<usize, String> {
            for u in words {
                let class = rewrite_class(u, RANK, DEFAULT_REWRITE_BUDGET).map_err(|e| e.to_string())?;
                for v in words {
                    let by_tree = equivalent(u, v, RANK).unwrap();
                    ensure(class.contains(v) == by_tree, || {
                        format!("{u} vs {v}: rewriting {} insertion {by_tree}", class.contains(v))
                    })?;
                }
            }
            Ok(words.len() * words.len())
        })
        .sum::<Result<usize, String>>()?;
    Ok(format!("{} evaluation groups, {pairs} same-evaluation pairs", groups.len()))
}

fn cocharge_invariance() -> Outcome {
    let mut trees = 0;
    let mut words = 0;
    for n in 1..=7 {
        for t in standard_trees(n) {
            let expected = cochseq_word(&t.canonical_reading()).unwrap();
            for r in t.readings(100_000).unwrap() {
                let got = cochseq_word(&r).unwrap();
                ensure(got == expected, || format!("{t}: {r} gives {got}, expected {expected}"))?;
                words += 1;
            }
            trees += 1;
        }
    }
    Ok(format!("{trees} trees, {words} readings"))
}

fn cyclic_shift_changes_cochseq_by_one() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for word in Word::standard_words(n) {
            let a = cochseq_word(&word).unwrap();
            for cut in 0..=word.len() {
                let (x, y) = word.split_at(cut);
                let b = cochseq_word(&y.concat(&x)).unwrap();
                let d = a.max_distance(&b).unwrap();
                ensure(d <= 1, || format!("{x}|{y}: {a} vs {b}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} splits"))
}

fn connectivity() -> Outcome {
    let mut classes = 0;
    for n in 1..=4 {
        for len in 0..=6 {
            for e in Evaluation::all_with_weight(n, len) {
                let g = component(&e, &Limits::default()).map_err(|e| e.to_string())?;
                ensure(g.is_connected(), || {
                    format!("{e} splits into {} parts", g.parts().len())
                })?;
                classes += 1;
            }
        }
    }
    Ok(format!("{classes} evaluation classes connected"))
}

fn diameter_bounds() -> Outcome {
    let mut values = Vec::new();
    for n in 2..=5u32 {
        let g = standard_component(n, &Limits::default()).map_err(|e| e.to_string())?;
        let d = g.diameter().map_err(|e| e.to_string())?;
        let n = n as usize;
        ensure(n - 1 <= d.value && d.value <= n, || {
            format!("n={n}: diameter {} ({} -> {})", d.value, d.from, d.to)
        })?;
        values.push(format!("d_{n}={}", d.value));
    }
    Ok(values.join(" "))
}

fn lower_bound_exact() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5u32 {
        let g = standard_component(n, &Limits::default()).map_err(|e| e.to_string())?;
        let inc = psylv(&Word::increasing(n).to_string());
        let dec = psylv(&Word::decreasing(n).to_string());
        let d = g.distance(&inc, &dec).map_err(|e| e.to_string())?;
        ensure(d + 1 >= n as usize, || format!("n={n}: distance {d}"))?;
        let elems: Vec<SylvElement> = g
            .vertices()
            .iter()
            .map(|t| SylvElement::from_tree(t.clone(), n).unwrap())
            .collect();
        for (i, s) in elems.iter().enumerate() {
            let dist = g.bfs(i);
            for (j, t) in elems.iter().enumerate() {
                let bound = cocharge_lower_bound(s, t).unwrap() as usize;
                let d = dist[j].unwrap();
                ensure(d >= bound, || format!("{s} -> {t}: distance {d} < bound {bound}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn path_synthesis_exhaustive() -> Outcome {
    let mut total = 0;
    for n in 1..=5 {
        let trees = standard_trees(n);
        let count = trees
            .par_iter()
            .map(|t| -> Result<usize, String> {
                for u in &trees {
                    let cert = shift_path_trees(t, u).map_err(|e| format!("{t} -> {u}: {e}"))?;
                    ensure(cert.len() == n as usize, || format!("{t} -> {u}: {} steps", cert.len()))?;
                    cert.verify(t, u).map_err(|e| format!("{t} -> {u}: {e}"))?;
                    for (h, s) in cert.steps.iter().enumerate() {
                        ensure(s.witness.certifies(&s.pre, &s.post), || {
                            format!("{t} -> {u}: step {}", h + 1)
                        })?;
                        ensure(verify_p1p2(&s.post, u, h + 1), || {
                            format!("{t} -> {u}: P1/P2 after step {}", h + 1)
                        })?;
                    }
                    ensure(cert.steps.last().unwrap().post == *u, || format!("{t} -> {u}"))?;
                }
                Ok(trees.len())
            })
            .sum::<Result<usize, String>>()?;
        total += count;
    }
    Ok(format!("{total} ordered pairs"))
}

fn worked_example_path() -> Outcome {
    let cert = shift_path_trees(&psylv("13254"), &psylv("23541")).map_err(|e| e.to_string())?;
    let expected: Vec<Bst> = ["54132", "12543", "41235", "12354", "23541"]
        .iter()
        .map(|s| psylv(s))
        .collect();
    let got: Vec<Bst> = cert.steps.iter().map(|s| s.post.clone()).collect();
    ensure(got == expected, || format!("intermediate trees {got:?}"))?;

    // The listed words, checked step by step with the neighbour oracle.
    let listed = [
        ("13254", "54132"),
        ("54312", "12543"),
        ("54123", "41235"),
        ("41235", "12354"),
        ("12354", "23541"),
    ];
    for (i, (a, b)) in listed.iter().enumerate() {
        let (a, b) = (w(a), w(b));
        let rotation = (0..=a.len()).any(|k| {
            let (x, y) = a.split_at(k);
            y.concat(&x) == b
        });
        ensure(rotation, || format!("{b} is not a rotation of {a}"))?;
        let from = element_of(&a, 5).unwrap();
        let nb = neighbors(&from, 100_000).map_err(|e| e.to_string())?;
        ensure(nb.iter().any(|(e, _)| *e.tree() == Bst::from_word(&b)), || {
            format!("{b} not a neighbour of {a}")
        })?;
        if let Some((next, _)) = listed.get(i + 1) {
            ensure(Bst::from_word(&b) == psylv(next), || format!("{b} and {next} differ"))?;
        }
    }
    Ok("T1..T5 = 54132 12543 41235 12354 23541".into())
}

fn induced_subgraph() -> Outcome {
    let mut checked = 0;
    for m in 1..=3u32 {
        let small = standard_component(m, &Limits::default()).map_err(|e| e.to_string())?;
        for n in m + 1..=4 {
            let mut counts = vec![1; m as usize];
            counts.resize(n as usize, 0);
            let big = component(&Evaluation::new(counts), &Limits::default()).map_err(|e| e.to_string())?;
            for t in small.vertices() {
                let at_m: Vec<Bst> = neighbors(&SylvElement::from_tree(t.clone(), m).unwrap(), 100_000)
                    .unwrap()
                    .into_iter()
                    .map(|(e, _)| e.into_tree())
                    .collect();
                let at_n: Vec<Bst> = neighbors(&SylvElement::from_tree(t.clone(), n).unwrap(), 100_000)
                    .unwrap()
                    .into_iter()
                    .map(|(e, _)| e.into_tree())
                    .filter(|t| t.max_label().is_none_or(|l| l <= m))
                    .collect();
                ensure(at_m == at_n, || format!("{t}: rank {m} vs rank {n}"))?;
                let graph_m = small.neighbors_of(t).unwrap();
                let graph_n = big.neighbors_of(t).unwrap();
                ensure(graph_m == graph_n, || format!("{t}: graph adjacency differs"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} element/rank combinations"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("golden insertion", golden_insertion),
        ("golden cocharge", golden_cocharge),
        ("lower-bound endpoints", lower_bound_endpoints),
        ("presentation oracle", presentation_oracle),
        ("cocharge congruence-invariance", cocharge_invariance),
        ("cyclic shift moves cochseq by <= 1", cyclic_shift_changes_cochseq_by_one),
        ("connectivity of evaluation classes", connectivity),
        ("standard diameter bounds", diameter_bounds),
        ("distance lower bound", lower_bound_exact),
        ("exhaustive shift paths", path_synthesis_exhaustive),
        ("worked example path", worked_example_path),
        ("induced subgraph", induced_subgraph),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name} [{secs:.2}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} [{secs:.2}s] {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
