//! Module-level invariants: randomized properties plus the exhaustive
//! structural lemmas that are too specific for the acceptance suites.

use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;

use treemonoid::congruence::{equiv, sigma_baxt, sigma_sylv, EquivMethod, MonoidKind};
use treemonoid::graphs::{component, GraphKind};
use treemonoid::operators::{e_crystal, e_quasi, f_crystal, f_quasi};
use treemonoid::trees::{
    canopy, dectree, inctree, infix_reading, insert_left_word, insert_right_word, is_twin_pair,
    left_interval_partition, postfix_reading, right_interval_partition, LabelledTree,
    RightStrictBst, Shape,
};
use treemonoid::words::{invert, standardize, weight, Letter, Weight, Word};

// =========================================================================
// Helpers
// =========================================================================

fn arb_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..=6u32, 0..=10)
        .prop_map(|letters| Word::new(letters).expect("letters are positive"))
}

fn small_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..=3u32, 0..=5)
        .prop_map(|letters| Word::new(letters).expect("letters are positive"))
}

/// All words of length `0..=max_len` over `{1, …, max_letter}`.
fn words_over(max_letter: Letter, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=max_letter {
                let mut letters = w.letters().to_vec();
                letters.push(a);
                next.push(Word::new(letters).expect("letters are positive"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn weight_buckets(words: &[Word]) -> BTreeMap<Weight, Vec<Word>> {
    let mut buckets: BTreeMap<Weight, Vec<Word>> = BTreeMap::new();
    for w in words {
        buckets.entry(weight(w)).or_default().push(w.clone());
    }
    buckets
}

/// All permutations of `1..=n` as words.
fn standard_words(n: usize) -> Vec<Word> {
    fn go(remaining: &mut Vec<Letter>, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining.is_empty() {
            out.push(Word::new(current.clone()).expect("letters are positive"));
            return;
        }
        for idx in 0..remaining.len() {
            let x = remaining.remove(idx);
            current.push(x);
            go(remaining, current, out);
            current.pop();
            remaining.insert(idx, x);
        }
    }
    let mut remaining: Vec<Letter> = (1..=n as Letter).collect();
    let mut out = Vec::new();
    go(&mut remaining, &mut Vec::new(), &mut out);
    out
}

/// Assigns labels to a shape in infix order.
fn tree_from_shape_infix(shape: &Shape, labels: &[Letter]) -> LabelledTree {
    match shape.parts() {
        None => LabelledTree::empty(),
        Some((left, right)) => {
            let k = left.size();
            LabelledTree::node(
                labels[k],
                tree_from_shape_infix(left, &labels[..k]),
                tree_from_shape_infix(right, &labels[k + 1..]),
            )
        }
    }
}

/// The standard filling of a shape (labels `1..=m` in infix order).
fn standard_filling(shape: &Shape) -> LabelledTree {
    let labels: Vec<Letter> = (1..=shape.size() as Letter).collect();
    tree_from_shape_infix(shape, &labels)
}

// =========================================================================
// Words
// =========================================================================

proptest! {
    #[test]
    fn standardize_is_idempotent(u in arb_word()) {
        let s = standardize(&u);
        prop_assert_eq!(&standardize(s.word()), &s);
    }

    #[test]
    fn invert_is_an_involution(u in arb_word()) {
        let s = standardize(&u);
        prop_assert_eq!(&invert(&invert(&s)), &s);
    }

    #[test]
    fn standardization_weight_is_all_ones(u in arb_word()) {
        prop_assert_eq!(
            weight(standardize(&u).word()),
            Weight::from_counts(vec![1; u.len()])
        );
    }

    #[test]
    fn standardization_orders_equal_letters_left_to_right(u in arb_word()) {
        let original = u.letters();
        let renamed = standardize(&u);
        let renamed = renamed.word().letters();
        for a in 0..original.len() {
            for b in a + 1..original.len() {
                if original[a] <= original[b] {
                    prop_assert!(renamed[a] < renamed[b]);
                }
            }
        }
    }

    // =====================================================================
    // Operators
    // =====================================================================

    #[test]
    fn operator_outputs_differ_in_exactly_one_letter(u in arb_word(), i in 1..=6u32) {
        let raised = [e_crystal(&u, i), e_quasi(&u, i)];
        let lowered = [f_crystal(&u, i), f_quasi(&u, i)];
        for v in raised.iter().flatten() {
            let diffs: Vec<usize> = (0..u.len())
                .filter(|&k| u.letters()[k] != v.letters()[k])
                .collect();
            prop_assert_eq!(diffs.len(), 1);
            prop_assert_eq!(u.letters()[diffs[0]], i + 1);
            prop_assert_eq!(v.letters()[diffs[0]], i);
        }
        for v in lowered.iter().flatten() {
            let diffs: Vec<usize> = (0..u.len())
                .filter(|&k| u.letters()[k] != v.letters()[k])
                .collect();
            prop_assert_eq!(diffs.len(), 1);
            prop_assert_eq!(u.letters()[diffs[0]], i);
            prop_assert_eq!(v.letters()[diffs[0]], i + 1);
        }
    }

    #[test]
    fn quasi_domain_refines_crystal_domain(u in arb_word(), i in 1..=6u32) {
        if let Some(qv) = e_quasi(&u, i) {
            let cv = e_crystal(&u, i);
            prop_assert!(cv.is_some(), "ë_{} defined but ẽ_{} undefined on {}", i, i, u);
            prop_assert_eq!(weight(&qv), weight(&cv.unwrap()));
        }
        if let Some(qv) = f_quasi(&u, i) {
            let cv = f_crystal(&u, i);
            prop_assert!(cv.is_some(), "f̈_{} defined but f̃_{} undefined on {}", i, i, u);
            prop_assert_eq!(weight(&qv), weight(&cv.unwrap()));
        }
    }

    // =====================================================================
    // Trees
    // =====================================================================

    #[test]
    fn recording_trees_follow_the_inverse_standardization(u in arb_word()) {
        let inverse = invert(&standardize(&u));
        let (_, increasing) = insert_left_word(&u);
        let (_, decreasing) = insert_right_word(&u);
        prop_assert_eq!(
            &increasing,
            &inctree(inverse.word()).expect("standard words are repeat-free")
        );
        prop_assert_eq!(
            &decreasing,
            &dectree(inverse.word()).expect("standard words are repeat-free")
        );
        // The recording shapes form a twin shape pair: complementary
        // canopies of their standard fillings.
        if !u.is_empty() {
            let left_canopy = canopy(&standard_filling(&increasing.tree().shape()))
                .expect("nonempty");
            let right_canopy = canopy(&standard_filling(&decreasing.tree().shape()))
                .expect("nonempty");
            prop_assert!(left_canopy.is_complementary(&right_canopy));
        }
    }

    #[test]
    fn insertion_trees_form_a_twin_pair(u in arb_word()) {
        let (left, _) = insert_left_word(&u);
        let (right, _) = insert_right_word(&u);
        prop_assert!(is_twin_pair(&left, &right));
    }

    #[test]
    fn infix_readings_are_the_sorted_content(u in arb_word()) {
        let expected = weight(&u).sorted_word();
        prop_assert_eq!(infix_reading(insert_left_word(&u).0.tree()), expected.clone());
        prop_assert_eq!(infix_reading(insert_right_word(&u).0.tree()), expected);
    }

    // =====================================================================
    // Graphs
    // =====================================================================

    #[test]
    fn components_have_unit_degree_per_label(u in small_word()) {
        for kind in [GraphKind::Crystal, GraphKind::QuasiCrystal] {
            let view = component(&u, kind, 5);
            let mut outgoing = HashSet::new();
            let mut incoming = HashSet::new();
            for (src, label, dst) in view.edges() {
                prop_assert!(
                    outgoing.insert((src.clone(), *label)),
                    "two {}-labelled edges leave {}",
                    label,
                    src
                );
                prop_assert!(
                    incoming.insert((dst.clone(), *label)),
                    "two {}-labelled edges enter {}",
                    label,
                    dst
                );
            }
        }
    }
}

// =========================================================================
// Exhaustive structural lemmas
// =========================================================================

/// Removing the maximal (dually, minimal) letter of a standard word and
/// recording where it sat determines the extremal-tree shape: words that
/// agree on (position, shape of the rest) have extremal trees of the same
/// shape. Exhaustive over standard words of length ≤ 6.
#[test]
fn extremal_tree_shapes_are_stable_under_extremal_removal() {
    for n in 1..=6usize {
        let mut seen: BTreeMap<(&str, &str, usize, Shape), Shape> = BTreeMap::new();
        for p in standard_words(n) {
            let letters = p.letters();
            for (end, extremal) in [("max", n as Letter), ("min", 1)] {
                let position = letters
                    .iter()
                    .position(|&x| x == extremal)
                    .expect("standard words contain every letter");
                let rest: Vec<Letter> =
                    letters.iter().copied().filter(|&x| x != extremal).collect();
                let rest = Word::new(rest).expect("letters are positive");
                for family in ["dec", "inc"] {
                    let shape_of = |w: &Word| -> Shape {
                        if family == "dec" {
                            dectree(w).expect("repeat-free").tree().shape()
                        } else {
                            inctree(w).expect("repeat-free").tree().shape()
                        }
                    };
                    let key = (family, end, position, shape_of(&rest));
                    let full = shape_of(&p);
                    match seen.get(&key) {
                        None => {
                            seen.insert(key, full);
                        }
                        Some(expected) => assert_eq!(
                            expected, &full,
                            "shape of the {family} tree of {p} not determined by \
                             (extremal position, shape of the rest)"
                        ),
                    }
                }
            }
        }
    }
}

/// The postfix reading of a right strict BST re-inserts to the same tree
/// (it is a member of the tree's sylvester class). Exhaustive over trees
/// with ≤ 5 nodes labelled from a 4-letter alphabet.
#[test]
fn postfix_reading_reproduces_right_strict_trees() {
    let mut trees_checked = 0usize;
    for m in 0..=5usize {
        for shape in Shape::enumerate(m) {
            let mut labels = vec![1u32; m];
            loop {
                if let Ok(tree) = RightStrictBst::new(tree_from_shape_infix(&shape, &labels)) {
                    let (again, _) = insert_right_word(&postfix_reading(tree.tree()));
                    assert_eq!(again, tree);
                    trees_checked += 1;
                }
                // Odometer over {1..4}^m.
                let mut idx = m;
                loop {
                    if idx == 0 {
                        break;
                    }
                    if labels[idx - 1] < 4 {
                        labels[idx - 1] += 1;
                        break;
                    }
                    labels[idx - 1] = 1;
                    idx -= 1;
                }
                if idx == 0 {
                    break;
                }
            }
        }
    }
    assert!(trees_checked > 100);
}

/// Interval lengths are not a complete shape invariant: two distinct
/// 4-node shapes share both interval-length profiles.
#[test]
fn interval_lengths_do_not_determine_the_shape() {
    let shapes = Shape::enumerate(4);
    let profiles: Vec<(Vec<usize>, Vec<usize>)> = shapes
        .iter()
        .map(|shape| {
            let filled = standard_filling(shape);
            let lengths = |ranges: Vec<(usize, usize)>| {
                ranges
                    .into_iter()
                    .map(|(s, e)| e - s + 1)
                    .collect::<Vec<_>>()
            };
            (
                lengths(left_interval_partition(&filled)),
                lengths(right_interval_partition(&filled)),
            )
        })
        .collect();
    let mut witnesses = Vec::new();
    for a in 0..shapes.len() {
        for b in a + 1..shapes.len() {
            if profiles[a] == profiles[b] && shapes[a] != shapes[b] {
                witnesses.push(a);
            }
        }
    }
    assert!(
        !witnesses.is_empty(),
        "expected two distinct shapes with equal interval profiles"
    );
    assert!(
        witnesses.iter().any(|&a| profiles[a].0 == vec![2, 2]),
        "some colliding pair has left interval lengths 2, 2"
    );
}

// =========================================================================
// Exhaustive congruence invariants
// =========================================================================

/// The Baxter congruence refines the sylvester congruence, which refines
/// the hypoplactic congruence.
#[test]
fn congruences_refine_along_the_chain() {
    let words = words_over(3, 4);
    for bucket in weight_buckets(&words).values() {
        for a in 0..bucket.len() {
            for b in a + 1..bucket.len() {
                let baxt = equiv(
                    &bucket[a],
                    &bucket[b],
                    MonoidKind::Baxt,
                    EquivMethod::Insertion,
                )
                .unwrap();
                let sylv = equiv(
                    &bucket[a],
                    &bucket[b],
                    MonoidKind::Sylv,
                    EquivMethod::Insertion,
                )
                .unwrap();
                let hypo = equiv(
                    &bucket[a],
                    &bucket[b],
                    MonoidKind::Hypo,
                    EquivMethod::Insertion,
                )
                .unwrap();
                assert!(
                    (!baxt || sylv) && (!sylv || hypo),
                    "refinement chain broken on {} vs {}: baxt {baxt}, sylv {sylv}, hypo {hypo}",
                    bucket[a],
                    bucket[b]
                );
            }
        }
    }
}

/// Each relation is a congruence: equivalent words stay equivalent inside
/// arbitrary two-sided contexts.
#[test]
fn congruences_are_stable_under_contexts() {
    let words = words_over(3, 3);
    let contexts = words_over(3, 2);
    let kinds = [
        MonoidKind::Plac,
        MonoidKind::Hypo,
        MonoidKind::Sylv,
        MonoidKind::Baxt,
    ];
    for kind in kinds {
        for bucket in weight_buckets(&words).values() {
            for a in 0..bucket.len() {
                for b in a + 1..bucket.len() {
                    if !equiv(&bucket[a], &bucket[b], kind, EquivMethod::Insertion).unwrap() {
                        continue;
                    }
                    for w in &contexts {
                        for z in &contexts {
                            let lhs = w.concat(&bucket[a]).concat(z);
                            let rhs = w.concat(&bucket[b]).concat(z);
                            assert!(
                                equiv(&lhs, &rhs, kind, EquivMethod::Insertion).unwrap(),
                                "{kind}: {} ≡ {} but {lhs} ≢ {rhs}",
                                bucket[a],
                                bucket[b]
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The shape symbols satisfy the two axioms that make the shape route
/// sound: invariance under the quasi-Kashiwara operators (S1), and
/// stability of shape-equality under appending or prepending a letter for
/// weight-equal pairs (S2).
#[test]
fn shape_symbols_satisfy_the_sigma_axioms() {
    // S1: σ is constant along quasi-crystal edges.
    for u in words_over(3, 4) {
        for i in 1..=3u32 {
            for v in [e_quasi(&u, i), f_quasi(&u, i)].iter().flatten() {
                assert_eq!(
                    sigma_sylv(&u),
                    sigma_sylv(v),
                    "σ_sylv changes along an edge at {u}"
                );
                assert_eq!(
                    sigma_baxt(&u),
                    sigma_baxt(v),
                    "σ_baxt changes along an edge at {u}"
                );
            }
        }
    }

    // S2: weight-equal shape-equal pairs stay shape-equal under one-letter
    // extensions.
    let words = words_over(3, 3);
    for bucket in weight_buckets(&words).values() {
        for a in 0..bucket.len() {
            for b in a + 1..bucket.len() {
                let sylv_equal = sigma_sylv(&bucket[a]) == sigma_sylv(&bucket[b]);
                let baxt_equal = sigma_baxt(&bucket[a]) == sigma_baxt(&bucket[b]);
                if !sylv_equal && !baxt_equal {
                    continue;
                }
                for letter in 1..=4u32 {
                    let l = Word::new(vec![letter]).unwrap();
                    for (x, y) in [
                        (bucket[a].concat(&l), bucket[b].concat(&l)),
                        (l.concat(&bucket[a]), l.concat(&bucket[b])),
                    ] {
                        if sylv_equal {
                            assert_eq!(
                                sigma_sylv(&x),
                                sigma_sylv(&y),
                                "σ_sylv equality broken by extending {} and {} with {letter}",
                                bucket[a],
                                bucket[b]
                            );
                        }
                        if baxt_equal {
                            assert_eq!(
                                sigma_baxt(&x),
                                sigma_baxt(&y),
                                "σ_baxt equality broken by extending {} and {} with {letter}",
                                bucket[a],
                                bucket[b]
                            );
                        }
                    }
                }
            }
        }
    }
}
