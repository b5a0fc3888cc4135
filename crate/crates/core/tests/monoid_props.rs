use std::collections::HashMap;

use sylv_core::monoid::{element_of, equivalent, multiply, rewrite_class, DEFAULT_REWRITE_BUDGET};
use sylv_core::{Bst, SylvElement, Word};

fn words_up_to(rank: u32, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| Word::all_of_length(rank, l)).collect()
}

#[test]
fn insertion_equivalence_is_a_congruence() {
    let words = words_up_to(3, 4);
    let mut classes: HashMap<Bst, Vec<&Word>> = HashMap::new();
    for w in &words {
        classes.entry(Bst::from_word(w)).or_default().push(w);
    }
    for class_u in classes.values() {
        for class_v in classes.values() {
            let products: Vec<Bst> = class_u
                .iter()
                .flat_map(|u| class_v.iter().map(move |v| Bst::from_word(&u.concat(v))))
                .collect();
            assert!(products.windows(2).all(|p| p[0] == p[1]));
        }
    }
}

#[test]
fn equivalent_words_share_evaluation() {
    for u in words_up_to(3, 5) {
        for r in Bst::from_word(&u).readings(1000).unwrap() {
            assert!(equivalent(&u, &r, 3).unwrap());
            assert_eq!(u.evaluation(3).unwrap(), r.evaluation(3).unwrap());
        }
    }
}

#[test]
fn multiplication_is_associative() {
    let elements: Vec<SylvElement> = {
        let mut trees: Vec<Bst> = words_up_to(3, 4).iter().map(Bst::from_word).collect();
        trees.sort();
        trees.dedup();
        trees
            .into_iter()
            .map(|t| SylvElement::from_tree(t, 3).unwrap())
            .collect()
    };
    for a in &elements {
        for b in &elements {
            if a.tree().len() + b.tree().len() > 6 {
                continue;
            }
            let ab = multiply(a, b).unwrap();
            for c in &elements {
                if ab.tree().len() + c.tree().len() > 6 {
                    continue;
                }
                let left = multiply(&ab, c).unwrap();
                let right = multiply(a, &multiply(b, c).unwrap()).unwrap();
                assert_eq!(left, right, "({a})({b})({c})");
            }
        }
    }
}

#[test]
fn product_does_not_depend_on_reading_choice() {
    for u in words_up_to(3, 3) {
        for v in words_up_to(3, 3) {
            let expected = multiply(&element_of(&u, 3).unwrap(), &element_of(&v, 3).unwrap()).unwrap();
            assert_eq!(element_of(&u.concat(&v), 3).unwrap(), expected);
        }
    }
}

#[test]
fn rewrite_closure_matches_insertion_on_small_words() {
    for u in words_up_to(3, 5) {
        let class = rewrite_class(&u, 3, DEFAULT_REWRITE_BUDGET).unwrap();
        let readings = Bst::from_word(&u).readings(1000).unwrap();
        assert_eq!(class.len(), readings.len(), "{u}");
        assert!(readings.iter().all(|r| class.contains(r)));
    }
}
