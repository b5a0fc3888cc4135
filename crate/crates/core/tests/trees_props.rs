use sylv_core::graph::{trees_with_evaluation, DEFAULT_MAX_VERTICES};
use sylv_core::trees::DEFAULT_MAX_READINGS;
use sylv_core::{Bst, Evaluation, Word};

/// Linear extensions of the child-before-parent order, by subset DP.
/// Works on node indices, so it is independent of reading enumeration.
fn count_linear_extensions(t: &Bst) -> u64 {
    let mut parent: Vec<Option<usize>> = Vec::new();
    fn index(t: &Bst, up: Option<usize>, parent: &mut Vec<Option<usize>>) {
        if let Some(n) = t.root() {
            let me = parent.len();
            parent.push(up);
            index(&n.left, Some(me), parent);
            index(&n.right, Some(me), parent);
        }
    }
    index(t, None, &mut parent);
    let n = parent.len();
    // children must all be placed before their parent
    let mut children_mask = vec![0u32; n];
    for (c, p) in parent.iter().enumerate() {
        if let Some(p) = p {
            children_mask[*p] |= 1 << c;
        }
    }
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for set in 0..(1u32 << n) {
        let w = ways[set as usize];
        if w == 0 {
            continue;
        }
        for v in 0..n {
            let bit = 1 << v;
            if set & bit == 0 && children_mask[v] & !set == 0 {
                ways[(set | bit) as usize] += w;
            }
        }
    }
    ways[(1usize << n) - 1]
}

#[test]
fn standard_readings_match_linear_extension_count() {
    for n in 1..=6 {
        for t in trees_with_evaluation(&Evaluation::standard(n), DEFAULT_MAX_VERTICES).unwrap() {
            let readings = t.readings(DEFAULT_MAX_READINGS).unwrap();
            assert_eq!(readings.len() as u64, count_linear_extensions(&t), "{t}");
            assert!(readings.contains(&t.canonical_reading()));
        }
    }
}

#[test]
fn every_word_is_a_reading_of_its_tree() {
    for len in 0..=6 {
        for w in Word::all_of_length(3, len) {
            let t = Bst::from_word(&w);
            assert!(t.is_valid());
            assert_eq!(t.postfix().len(), t.len());
            let readings = t.readings(DEFAULT_MAX_READINGS).unwrap();
            assert!(readings.contains(&w), "{w} not a reading of {t}");
            for r in &readings {
                assert_eq!(Bst::from_word(r), t);
            }
        }
    }
}

#[test]
fn generated_trees_are_exactly_the_insertion_images() {
    // The distinct-tree generator agrees with brute-force insertion of all words.
    for e in Evaluation::all_with_weight(3, 5) {
        let generated = trees_with_evaluation(&e, DEFAULT_MAX_VERTICES).unwrap();
        let mut from_words: Vec<Bst> = Word::all_of_length(3, 5)
            .filter(|w| w.evaluation(3).unwrap() == e)
            .map(|w| Bst::from_word(&w))
            .collect();
        from_words.sort();
        from_words.dedup();
        assert_eq!(generated, from_words, "{e}");
    }
}
