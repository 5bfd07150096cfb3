//! Exhaustive self-verification: the ten acceptance suites behind the
//! `selftest` command and the integration-test gate.
//!
//! Each suite checks one contract of the library against frozen fixtures or
//! against an independent recomputation:
//!
//!  1. worked-example fixtures (symbols of `5 4 5 1 7 6 1 5 2 4`, golden
//!     JSON trees, readings, canopies, twin check, a 1 ms time budget);
//!  2. operator-graph edge fixtures (crystal edges near `2 1 1 1`,
//!     quasi-crystal edges near `1 2 1 2`);
//!  3. operator coherence (the signature rule versus the defining recursion
//!     from both factorization ends, ε/φ counts, mutual inverses,
//!     standardization behaviour);
//!  4. three-route congruence agreement (insertion = shape = rewrite, and
//!     the hypoplactic characterization versus the graph route);
//!  5. graph-route agreement and the pinned-isomorphism separations;
//!  6. highest-weight characterizations via interval partitions;
//!  7. counting formulas against brute-force enumeration;
//!  8. factorization content-independence;
//!  9. the defining identities of the sylvester and Baxter monoids;
//! 10. Q-symbol indexing by standardization and standard-word uniqueness
//!     per bounded component.
//!
//! [`SuiteSize::Small`] shrinks the exhaustive domains for quick smoke runs;
//! [`SuiteSize::Full`] covers the quoted domains (a few minutes of work at
//! most). Every detail string is deterministic, so repeated runs print
//! byte-identical reports.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::congruence::{
    check_identity, count_factorizations_baxt, count_factorizations_sylv, equiv, p_baxt, p_plac,
    p_sylv, q_sylv, rewrite_closure, sigma_baxt, sigma_sylv, twin_filling_reading, CongruenceError,
    EquivMethod, MonoidKind,
};
use crate::graphs::{component, congruent_via_graph, pinned_isomorphic, GraphKind};
use crate::operators::{
    e_crystal, e_quasi, eps_crystal, f_crystal, f_quasi, is_highest_weight_quasi, phi_crystal,
};
use crate::trees::{
    canopy, count_fillings, fill_shape, fill_standard, hook_count, infix_reading, insert_left_word,
    insert_right_word, left_interval_partition, postfix_reading, right_interval_partition,
    CanopyWord, DecreasingTree, LabelledTree, RightStrictBst, Shape, Strictness, TwinPair,
};
use crate::words::{invert, standardize, weight, Letter, StandardWord, Weight, Word};

/// How much of each exhaustive domain to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSize {
    /// Reduced domains; the whole suite finishes in a few seconds.
    Small,
    /// The quoted domains.
    Full,
}

impl fmt::Display for SuiteSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteSize::Small => "small",
            SuiteSize::Full => "full",
        })
    }
}

impl FromStr for SuiteSize {
    type Err = CongruenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(SuiteSize::Small),
            "full" => Ok(SuiteSize::Full),
            _ => Err(CongruenceError::UnknownName {
                what: "suite size",
                name: s.to_string(),
            }),
        }
    }
}

/// The result of one verification suite.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    /// Position in the numbered suite (1-based).
    pub number: usize,
    /// Short name of the criterion.
    pub name: &'static str,
    /// Whether every check passed.
    pub passed: bool,
    /// What was verified, or the first failure encountered.
    pub detail: String,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} ({}): {} — {}",
            self.number,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Runs all ten suites in order.
pub fn run_all(size: SuiteSize) -> Vec<CriterionOutcome> {
    vec![
        worked_example_fixtures(size),
        figure_edge_fixtures(size),
        operator_coherence(size),
        three_route_agreement(size),
        graph_route_agreement(size),
        highest_weight_characterizations(size),
        counting_against_brute_force(size),
        factorization_content_independence(size),
        defining_identities(size),
        q_symbol_indexing(size),
    ]
}

fn finish(number: usize, name: &'static str, result: Result<String, String>) -> CriterionOutcome {
    match result {
        Ok(detail) => CriterionOutcome {
            number,
            name,
            passed: true,
            detail,
        },
        Err(detail) => CriterionOutcome {
            number,
            name,
            passed: false,
            detail,
        },
    }
}

// =========================================================================
// Shared enumeration helpers
// =========================================================================

/// All words of length `0..=max_len` over the alphabet `{1, …, max_letter}`,
/// shortest first, lexicographic within a length.
fn words_over(max_letter: Letter, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * max_letter as usize);
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

/// Groups words by weight (hence by length).
fn weight_buckets(words: &[Word]) -> BTreeMap<Weight, Vec<Word>> {
    let mut buckets: BTreeMap<Weight, Vec<Word>> = BTreeMap::new();
    for w in words {
        buckets.entry(weight(w)).or_default().push(w.clone());
    }
    buckets
}

/// All weights with the given total spread over `parts` letters.
fn weights_with_total(total: usize, parts: usize) -> Vec<Weight> {
    fn go(parts_left: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if parts_left == 0 {
            if remaining == 0 {
                out.push(Weight::from_counts(current.clone()));
            }
            return;
        }
        for a in 0..=remaining {
            current.push(a);
            go(parts_left - 1, remaining - a, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(parts, total, &mut Vec::new(), &mut out);
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

fn show(result: &Option<Word>) -> String {
    match result {
        Some(w) => w.to_string(),
        None => "undefined".to_string(),
    }
}

// =========================================================================
// Criterion 1: worked-example fixtures
// =========================================================================

/// Criterion 1: every symbol of the running example `5 4 5 1 7 6 1 5 2 4`
/// matches its frozen fixture, including the golden JSON trees, and the
/// whole symbol computation fits in a millisecond.
pub fn worked_example_fixtures(_size: SuiteSize) -> CriterionOutcome {
    finish(1, "worked-example fixtures", check_worked_example())
}

fn check_worked_example() -> Result<String, String> {
    let u: Word = "5 4 5 1 7 6 1 5 2 4".parse().expect("fixture parses");

    let s = standardize(&u);
    let expected_std: Word = "6 4 7 1 10 9 2 8 3 5".parse().expect("fixture parses");
    if s.word() != &expected_std {
        return Err(format!(
            "standardization: got {}, want {expected_std}",
            s.word()
        ));
    }
    let inv = invert(&s);
    let expected_inv: Word = "4 7 9 2 10 1 3 8 6 5".parse().expect("fixture parses");
    if inv.word() != &expected_inv {
        return Err(format!("inverse: got {}, want {expected_inv}", inv.word()));
    }

    let (ltree, lrec) = insert_left_word(&u);
    let (rtree, rrec) = insert_right_word(&u);
    let golden = |name: &str, text: &str| -> Result<LabelledTree, String> {
        serde_json::from_str(text).map_err(|e| format!("golden {name} does not parse: {e}"))
    };
    let pairs: [(&str, &LabelledTree, LabelledTree); 4] = [
        (
            "left tree",
            ltree.tree(),
            golden(
                "left tree",
                include_str!("../goldens/tree_left_5451761524.json"),
            )?,
        ),
        (
            "right tree",
            rtree.tree(),
            golden(
                "right tree",
                include_str!("../goldens/tree_right_5451761524.json"),
            )?,
        ),
        (
            "increasing recording tree",
            lrec.tree(),
            golden(
                "increasing recording tree",
                include_str!("../goldens/recording_increasing_5451761524.json"),
            )?,
        ),
        (
            "decreasing recording tree",
            rrec.tree(),
            golden(
                "decreasing recording tree",
                include_str!("../goldens/recording_decreasing_5451761524.json"),
            )?,
        ),
    ];
    for (what, got, want) in &pairs {
        if *got != want {
            return Err(format!("{what} differs from its golden file"));
        }
    }

    let infix = infix_reading(rtree.tree());
    let expected_infix: Word = "1 1 2 4 4 5 5 5 6 7".parse().expect("fixture parses");
    if infix != expected_infix {
        return Err(format!("infix reading: got {infix}, want {expected_infix}"));
    }
    let postfix = postfix_reading(rtree.tree());
    let expected_postfix: Word = "1 1 4 2 5 5 7 6 5 4".parse().expect("fixture parses");
    if postfix != expected_postfix {
        return Err(format!(
            "postfix reading: got {postfix}, want {expected_postfix}"
        ));
    }

    let left_canopy = canopy(ltree.tree()).map_err(|e| e.to_string())?;
    let right_canopy = canopy(rtree.tree()).map_err(|e| e.to_string())?;
    if left_canopy.to_string() != "110101100" {
        return Err(format!("left canopy: got {left_canopy}, want 110101100"));
    }
    if right_canopy.to_string() != "001010011" {
        return Err(format!("right canopy: got {right_canopy}, want 001010011"));
    }
    if !left_canopy.is_complementary(&right_canopy) {
        return Err("the two canopies are not complementary".to_string());
    }
    if TwinPair::new(ltree.clone(), rtree.clone()).is_err() {
        return Err("the insertion trees do not form a twin pair".to_string());
    }

    // Time budget: the symbol computation itself (insertions, readings,
    // canopies), excluding fixture parsing; best of ten runs.
    let mut best = Duration::MAX;
    for _ in 0..10 {
        let started = Instant::now();
        let s = standardize(&u);
        let inv = invert(&s);
        let (lt, lr) = insert_left_word(&u);
        let (rt, rr) = insert_right_word(&u);
        let infix = infix_reading(rt.tree());
        let postfix = postfix_reading(rt.tree());
        let cl = canopy(lt.tree()).ok();
        let cr = canopy(rt.tree()).ok();
        std::hint::black_box((inv, lr, rr, infix, postfix, cl, cr));
        best = best.min(started.elapsed());
    }
    if best >= Duration::from_millis(1) {
        return Err(format!(
            "symbol computation took {} µs, over the 1 ms budget",
            best.as_micros()
        ));
    }

    Ok(
        "standardization, inverse, four golden trees, readings, canopies, and the twin \
        check all match; symbols computed within the 1 ms budget"
            .to_string(),
    )
}

// =========================================================================
// Criterion 2: operator-graph edge fixtures
// =========================================================================

/// Crystal edges `src →(i) dst` within distance 3 of `2 1 1 1`.
const CRYSTAL_EDGE_FIXTURES: &[(&str, Letter, &str)] = &[
    ("2111", 1, "2112"),
    ("2111", 2, "3111"),
    ("2112", 2, "2113"),
    ("2112", 1, "2122"),
    ("3111", 1, "3112"),
    ("3111", 3, "4111"),
    ("2113", 3, "2114"),
    ("2113", 2, "3113"),
    ("2113", 1, "2123"),
    ("2122", 2, "2123"),
    ("3112", 1, "3122"),
    ("3112", 3, "4112"),
    ("4111", 4, "5111"),
    ("4111", 1, "4112"),
    ("2114", 2, "3114"),
    ("2114", 4, "2115"),
    ("2114", 1, "2124"),
    ("2123", 3, "2124"),
    ("2123", 2, "2133"),
    ("3113", 1, "3123"),
    ("3113", 3, "3114"),
    ("3122", 3, "4122"),
    ("3122", 1, "3222"),
    ("3122", 2, "3123"),
    ("4112", 1, "4122"),
    ("4112", 4, "5112"),
    ("4112", 2, "4113"),
    ("5111", 1, "5112"),
    ("5111", 5, "6111"),
];

/// Quasi-crystal edges within distance 3 of `1 2 1 2`.
const QUASI_EDGE_FIXTURES: &[(&str, Letter, &str)] = &[
    ("1212", 2, "1213"),
    ("1213", 2, "1313"),
    ("1213", 3, "1214"),
    ("1214", 4, "1215"),
    ("1214", 2, "1314"),
    ("1313", 3, "1314"),
    ("1313", 1, "1323"),
    ("1215", 5, "1216"),
    ("1215", 2, "1315"),
    ("1314", 4, "1315"),
    ("1314", 1, "1324"),
    ("1314", 3, "1414"),
    ("1323", 1, "2323"),
    ("1323", 3, "1324"),
];

/// Criterion 2: the fixed crystal and quasi-crystal edges near the two seed
/// words are reproduced by the lowering operators, inverted by the raising
/// operators, and present in the materialized bounded components.
pub fn figure_edge_fixtures(_size: SuiteSize) -> CriterionOutcome {
    finish(2, "operator-graph edge fixtures", check_figure_edges())
}

fn check_figure_edges() -> Result<String, String> {
    let edge_word = |digits: &str| Word::from_digits(digits).expect("fixture parses");
    for &(src, i, dst) in CRYSTAL_EDGE_FIXTURES {
        let s = edge_word(src);
        let d = edge_word(dst);
        let got = f_crystal(&s, i);
        if got.as_ref() != Some(&d) {
            return Err(format!("f̃_{i}({s}) = {}, want {d}", show(&got)));
        }
        if e_crystal(&d, i).as_ref() != Some(&s) {
            return Err(format!("ẽ_{i}({d}) does not invert the edge back to {s}"));
        }
    }
    for &(src, i, dst) in QUASI_EDGE_FIXTURES {
        let s = edge_word(src);
        let d = edge_word(dst);
        let got = f_quasi(&s, i);
        if got.as_ref() != Some(&d) {
            return Err(format!("f̈_{i}({s}) = {}, want {d}", show(&got)));
        }
        if e_quasi(&d, i).as_ref() != Some(&s) {
            return Err(format!("ë_{i}({d}) does not invert the edge back to {s}"));
        }
    }

    let crystal_view = component(&edge_word("2111"), GraphKind::Crystal, 6);
    for &(src, i, dst) in CRYSTAL_EDGE_FIXTURES {
        if !crystal_view
            .edges()
            .contains(&(edge_word(src), i, edge_word(dst)))
        {
            return Err(format!(
                "edge {src} →({i}) {dst} missing from the bounded crystal component of 2 1 1 1"
            ));
        }
    }
    let quasi_view = component(&edge_word("1212"), GraphKind::QuasiCrystal, 6);
    for &(src, i, dst) in QUASI_EDGE_FIXTURES {
        if !quasi_view
            .edges()
            .contains(&(edge_word(src), i, edge_word(dst)))
        {
            return Err(format!(
                "edge {src} →({i}) {dst} missing from the bounded quasi-crystal component of 1 2 1 2"
            ));
        }
    }

    Ok(format!(
        "{} crystal and {} quasi-crystal figure edges reproduced by the operators and \
         present in the bounded components",
        CRYSTAL_EDGE_FIXTURES.len(),
        QUASI_EDGE_FIXTURES.len()
    ))
}

// =========================================================================
// Criterion 3: operator coherence
// =========================================================================

/// Which end of a word the oracle splits off first.
#[derive(Clone, Copy, PartialEq, Eq)]
enum SplitEnd {
    /// `u = (first letter) · rest`.
    First,
    /// `u = init · (last letter)`.
    Last,
}

/// A literal, memoized implementation of the defining recursion for the
/// Kashiwara operators: on single letters `ẽ_i` lowers `i + 1` and `f̃_i`
/// raises `i`; on longer words the operator acts on the factor chosen by
/// comparing `ε_i` of the head with `φ_i` of the tail (strictly more for
/// `ẽ_i`, at least as many for `f̃_i`), where `ε_i`/`φ_i` count how often
/// the raising/lowering operator applies in sequence.
///
/// Both split ends must produce identical operators (factorization
/// independence of the recursion); the suite runs one oracle per end and
/// compares them against the signature-rule implementation.
struct RecursionOracle {
    end: SplitEnd,
    raise_memo: HashMap<(Word, Letter), Option<Word>>,
    lower_memo: HashMap<(Word, Letter), Option<Word>>,
    eps_memo: HashMap<(Word, Letter), usize>,
    phi_memo: HashMap<(Word, Letter), usize>,
}

impl RecursionOracle {
    fn new(end: SplitEnd) -> Self {
        RecursionOracle {
            end,
            raise_memo: HashMap::new(),
            lower_memo: HashMap::new(),
            eps_memo: HashMap::new(),
            phi_memo: HashMap::new(),
        }
    }

    fn split(&self, u: &Word) -> (Word, Word) {
        let letters = u.letters();
        let k = match self.end {
            SplitEnd::First => 1,
            SplitEnd::Last => letters.len() - 1,
        };
        (
            Word::new(letters[..k].to_vec()).expect("letters unchanged"),
            Word::new(letters[k..].to_vec()).expect("letters unchanged"),
        )
    }

    fn raise(&mut self, u: &Word, i: Letter) -> Option<Word> {
        if u.is_empty() {
            return None;
        }
        if u.len() == 1 {
            return (u.letters()[0] == i + 1).then(|| Word::new(vec![i]).expect("positive"));
        }
        if let Some(cached) = self.raise_memo.get(&(u.clone(), i)) {
            return cached.clone();
        }
        let (head, tail) = self.split(u);
        let result = if self.eps(&head, i) > self.phi(&tail, i) {
            self.raise(&head, i).map(|h| h.concat(&tail))
        } else {
            self.raise(&tail, i).map(|t| head.concat(&t))
        };
        self.raise_memo.insert((u.clone(), i), result.clone());
        result
    }

    fn lower(&mut self, u: &Word, i: Letter) -> Option<Word> {
        if u.is_empty() {
            return None;
        }
        if u.len() == 1 {
            return (u.letters()[0] == i).then(|| Word::new(vec![i + 1]).expect("positive"));
        }
        if let Some(cached) = self.lower_memo.get(&(u.clone(), i)) {
            return cached.clone();
        }
        let (head, tail) = self.split(u);
        let result = if self.eps(&head, i) >= self.phi(&tail, i) {
            self.lower(&head, i).map(|h| h.concat(&tail))
        } else {
            self.lower(&tail, i).map(|t| head.concat(&t))
        };
        self.lower_memo.insert((u.clone(), i), result.clone());
        result
    }

    /// How many times `ẽ_i` applies in sequence.
    fn eps(&mut self, u: &Word, i: Letter) -> usize {
        if let Some(&cached) = self.eps_memo.get(&(u.clone(), i)) {
            return cached;
        }
        let value = match self.raise(u, i) {
            None => 0,
            Some(v) => 1 + self.eps(&v, i),
        };
        self.eps_memo.insert((u.clone(), i), value);
        value
    }

    /// How many times `f̃_i` applies in sequence.
    fn phi(&mut self, u: &Word, i: Letter) -> usize {
        if let Some(&cached) = self.phi_memo.get(&(u.clone(), i)) {
            return cached;
        }
        let value = match self.lower(u, i) {
            None => 0,
            Some(v) => 1 + self.phi(&v, i),
        };
        self.phi_memo.insert((u.clone(), i), value);
        value
    }
}

/// Criterion 3: the signature-rule crystal operators agree with the
/// defining recursion (split from either end) on an exhaustive domain, both
/// operator families are mutually inverse, and the quasi operators preserve
/// standardization while some defined crystal application breaks it.
pub fn operator_coherence(size: SuiteSize) -> CriterionOutcome {
    finish(3, "operator coherence", check_operator_coherence(size))
}

fn check_operator_coherence(size: SuiteSize) -> Result<String, String> {
    let max_len = match size {
        SuiteSize::Full => 6,
        SuiteSize::Small => 4,
    };
    let domain = words_over(3, max_len);
    let mut head_oracle = RecursionOracle::new(SplitEnd::First);
    let mut tail_oracle = RecursionOracle::new(SplitEnd::Last);
    let mut breaking_witnesses = 0usize;

    for u in &domain {
        for i in 1..=3 {
            let sig_raise = e_crystal(u, i);
            let sig_lower = f_crystal(u, i);

            for (oracle, end) in [(&mut head_oracle, "head"), (&mut tail_oracle, "tail")] {
                let rec_raise = oracle.raise(u, i);
                if rec_raise != sig_raise {
                    return Err(format!(
                        "ẽ_{i}({u}): signature rule {} ≠ {end}-split recursion {}",
                        show(&sig_raise),
                        show(&rec_raise)
                    ));
                }
                let rec_lower = oracle.lower(u, i);
                if rec_lower != sig_lower {
                    return Err(format!(
                        "f̃_{i}({u}): signature rule {} ≠ {end}-split recursion {}",
                        show(&sig_lower),
                        show(&rec_lower)
                    ));
                }
                if eps_crystal(u, i) != oracle.eps(u, i) {
                    return Err(format!(
                        "ε_{i}({u}): bracket count {} ≠ recursive count {}",
                        eps_crystal(u, i),
                        oracle.eps(u, i)
                    ));
                }
                if phi_crystal(u, i) != oracle.phi(u, i) {
                    return Err(format!(
                        "φ_{i}({u}): bracket count {} ≠ recursive count {}",
                        phi_crystal(u, i),
                        oracle.phi(u, i)
                    ));
                }
            }

            // Mutual inverses, crystal family.
            if let Some(v) = &sig_raise {
                if f_crystal(v, i).as_ref() != Some(u) {
                    return Err(format!("f̃_{i} does not invert ẽ_{i} on {u}"));
                }
                if u.len() == 4 && standardize(v) != standardize(u) {
                    breaking_witnesses += 1;
                }
            }
            if let Some(v) = &sig_lower {
                if e_crystal(v, i).as_ref() != Some(u) {
                    return Err(format!("ẽ_{i} does not invert f̃_{i} on {u}"));
                }
                if u.len() == 4 && standardize(v) != standardize(u) {
                    breaking_witnesses += 1;
                }
            }

            // Mutual inverses and standardization preservation, quasi family.
            if let Some(v) = &e_quasi(u, i) {
                if f_quasi(v, i).as_ref() != Some(u) {
                    return Err(format!("f̈_{i} does not invert ë_{i} on {u}"));
                }
                if standardize(v) != standardize(u) {
                    return Err(format!("ë_{i} changes the standardization of {u}"));
                }
            }
            if let Some(v) = &f_quasi(u, i) {
                if e_quasi(v, i).as_ref() != Some(u) {
                    return Err(format!("ë_{i} does not invert f̈_{i} on {u}"));
                }
                if standardize(v) != standardize(u) {
                    return Err(format!("f̈_{i} changes the standardization of {u}"));
                }
            }
        }
    }

    if breaking_witnesses == 0 {
        return Err(
            "expected some defined crystal operator application on a length-4 word to change \
             the standardization"
                .to_string(),
        );
    }

    Ok(format!(
        "signature rule matches the recursion from both ends on {} (word, label) cases; \
         ε/φ agree; both families are mutually inverse; quasi operators preserve \
         standardization while {} crystal applications on length-4 words change it",
        domain.len() * 3,
        breaking_witnesses
    ))
}

// =========================================================================
// Criterion 4: three-route congruence agreement
// =========================================================================

/// Partitions `words` into rewriting classes, returning a class id per word.
fn rewrite_class_ids(words: &[Word], kind: MonoidKind) -> HashMap<Word, usize> {
    let mut ids = HashMap::new();
    let mut next = 0usize;
    for w in words {
        if ids.contains_key(w) {
            continue;
        }
        let class = rewrite_closure(w, kind).expect("kind supports rewriting");
        for member in class {
            ids.insert(member, next);
        }
        next += 1;
    }
    ids
}

/// Criterion 4: on exhaustive equal-weight domains, the insertion, shape,
/// and rewriting routes decide the same congruence (sylvester and Baxter),
/// insertion matches rewriting for the plactic monoid, and the hypoplactic
/// characterization matches the graph route.
pub fn three_route_agreement(size: SuiteSize) -> CriterionOutcome {
    finish(
        4,
        "three-route congruence agreement",
        check_three_routes(size),
    )
}

fn check_three_routes(size: SuiteSize) -> Result<String, String> {
    let (long_len, short_len) = match size {
        SuiteSize::Full => (5, 4),
        SuiteSize::Small => (4, 3),
    };
    let mut pairs_checked = 0usize;

    // Sylvester: insertion = shape = rewrite on words of length ≤ long_len.
    {
        let words = words_over(3, long_len);
        let ids = rewrite_class_ids(&words, MonoidKind::Sylv);
        for bucket in weight_buckets(&words).values() {
            let symbols: Vec<RightStrictBst> = bucket.iter().map(p_sylv).collect();
            let shapes: Vec<_> = bucket.iter().map(sigma_sylv).collect();
            for a in 0..bucket.len() {
                for b in a + 1..bucket.len() {
                    let ins = symbols[a] == symbols[b];
                    let shp = shapes[a] == shapes[b];
                    let rew = ids[&bucket[a]] == ids[&bucket[b]];
                    if ins != shp || ins != rew {
                        return Err(format!(
                            "sylv routes disagree on {} vs {}: insertion {ins}, shape {shp}, \
                             rewrite {rew}",
                            bucket[a], bucket[b]
                        ));
                    }
                    pairs_checked += 1;
                }
            }
        }
    }

    // Plactic: insertion = rewrite on the same domain.
    {
        let words = words_over(3, long_len);
        let ids = rewrite_class_ids(&words, MonoidKind::Plac);
        for bucket in weight_buckets(&words).values() {
            let symbols: Vec<_> = bucket.iter().map(p_plac).collect();
            for a in 0..bucket.len() {
                for b in a + 1..bucket.len() {
                    let ins = symbols[a] == symbols[b];
                    let rew = ids[&bucket[a]] == ids[&bucket[b]];
                    if ins != rew {
                        return Err(format!(
                            "plac routes disagree on {} vs {}: insertion {ins}, rewrite {rew}",
                            bucket[a], bucket[b]
                        ));
                    }
                    pairs_checked += 1;
                }
            }
        }
    }

    // Baxter: insertion = shape = rewrite on words of length ≤ short_len.
    {
        let words = words_over(3, short_len);
        let ids = rewrite_class_ids(&words, MonoidKind::Baxt);
        for bucket in weight_buckets(&words).values() {
            let symbols: Vec<TwinPair> = bucket.iter().map(p_baxt).collect();
            let shapes: Vec<_> = bucket.iter().map(sigma_baxt).collect();
            for a in 0..bucket.len() {
                for b in a + 1..bucket.len() {
                    let ins = symbols[a] == symbols[b];
                    let shp = shapes[a] == shapes[b];
                    let rew = ids[&bucket[a]] == ids[&bucket[b]];
                    if ins != shp || ins != rew {
                        return Err(format!(
                            "baxt routes disagree on {} vs {}: insertion {ins}, shape {shp}, \
                             rewrite {rew}",
                            bucket[a], bucket[b]
                        ));
                    }
                    pairs_checked += 1;
                }
            }
        }
    }

    // Hypoplactic: invariant characterization = graph route at bound 8.
    {
        let words = words_over(3, short_len);
        for bucket in weight_buckets(&words).values() {
            for a in 0..bucket.len() {
                for b in a + 1..bucket.len() {
                    let characterization =
                        equiv(&bucket[a], &bucket[b], MonoidKind::Hypo, EquivMethod::Shape)
                            .expect("hypo supports the shape route");
                    let graph = congruent_via_graph(&bucket[a], &bucket[b], MonoidKind::Hypo, 8);
                    if characterization != graph {
                        return Err(format!(
                            "hypo characterization disagrees with the graph route on {} vs {}",
                            bucket[a], bucket[b]
                        ));
                    }
                    pairs_checked += 1;
                }
            }
        }
    }

    Ok(format!(
        "{pairs_checked} equal-weight pairs agree across their decision routes \
         (sylv/plac at length ≤ {long_len}, baxt/hypo at length ≤ {short_len})"
    ))
}

// =========================================================================
// Criterion 5: graph-route agreement and separations
// =========================================================================

/// Criterion 5: the pinned-isomorphism separations hold (isomorphic
/// components do not imply congruence), and the graph route agrees with the
/// insertion route for all four monoids on an exhaustive domain.
pub fn graph_route_agreement(size: SuiteSize) -> CriterionOutcome {
    finish(
        5,
        "graph-route agreement and separations",
        check_graph_route(size),
    )
}

fn check_graph_route(size: SuiteSize) -> Result<String, String> {
    let d = |digits: &str| Word::from_digits(digits).expect("fixture parses");

    if !congruent_via_graph(&d("1221"), &d("2121"), MonoidKind::Sylv, 8) {
        return Err("1 2 2 1 and 2 1 2 1 should be sylvester-congruent via the graph route".into());
    }
    if congruent_via_graph(&d("1212"), &d("1221"), MonoidKind::Sylv, 8) {
        return Err("1 2 1 2 and 1 2 2 1 should not be sylvester-congruent".into());
    }
    if congruent_via_graph(&d("1212"), &d("2121"), MonoidKind::Sylv, 8) {
        return Err("1 2 1 2 and 2 1 2 1 should not be sylvester-congruent".into());
    }
    // The separation is non-vacuous: those components are isomorphic.
    if !pinned_isomorphic(&d("1212"), &d("1221"), GraphKind::QuasiCrystal, 8) {
        return Err("the components of 1 2 1 2 and 1 2 2 1 should be isomorphic".into());
    }
    if !pinned_isomorphic(&d("1221"), &d("2121"), GraphKind::QuasiCrystal, 6) {
        return Err("the components of 1 2 2 1 and 2 1 2 1 should be isomorphic".into());
    }
    if pinned_isomorphic(
        &d("1"),
        &Word::new(vec![1, 1]).expect("positive"),
        GraphKind::QuasiCrystal,
        4,
    ) {
        return Err("words of different lengths cannot have isomorphic components".into());
    }
    // The single-letter component under bound 3 is the chain 1 →(1) 2 →(2) 3.
    let chain = component(&d("1"), GraphKind::QuasiCrystal, 3);
    let chain_vertices: Vec<Word> = chain.vertices().iter().cloned().collect();
    if chain_vertices != vec![d("1"), d("2"), d("3")]
        || chain.edges().len() != 2
        || !chain.edges().contains(&(d("1"), 1, d("2")))
        || !chain.edges().contains(&(d("2"), 2, d("3")))
    {
        return Err(
            "the bounded component of the single letter 1 is not the expected chain".into(),
        );
    }

    let max_len = match size {
        SuiteSize::Full => 4,
        SuiteSize::Small => 3,
    };
    let words = words_over(3, max_len);
    let kinds = [
        MonoidKind::Plac,
        MonoidKind::Hypo,
        MonoidKind::Sylv,
        MonoidKind::Baxt,
    ];
    let mut pairs = 0usize;
    for a in 0..words.len() {
        for b in a..words.len() {
            for kind in kinds {
                let ins = equiv(&words[a], &words[b], kind, EquivMethod::Insertion)
                    .expect("insertion route is always available");
                let graph = congruent_via_graph(&words[a], &words[b], kind, 8);
                if ins != graph {
                    return Err(format!(
                        "graph route disagrees with insertion for {kind} on {} vs {}: \
                         insertion {ins}, graph {graph}",
                        words[a], words[b]
                    ));
                }
            }
            pairs += 1;
        }
    }

    Ok(format!(
        "separations hold, and the graph route matches the insertion route for all four \
         monoids on {pairs} word pairs of length ≤ {max_len}"
    ))
}

// =========================================================================
// Criterion 6: highest-weight characterizations
// =========================================================================

/// Does the `a`-th right interval of `t` carry only the letter `a`, for
/// every interval?
fn right_interval_condition(t: &LabelledTree) -> bool {
    let infix = infix_reading(t);
    let letters = infix.letters();
    right_interval_partition(t)
        .iter()
        .enumerate()
        .all(|(idx, &(start, end))| {
            let a = idx as Letter + 1;
            letters[start - 1..end].iter().all(|&x| x == a)
        })
}

/// Does the `a`-th left interval of `t` carry only the letter `a`, for
/// every interval?
fn left_interval_condition(t: &LabelledTree) -> bool {
    let infix = infix_reading(t);
    let letters = infix.letters();
    left_interval_partition(t)
        .iter()
        .enumerate()
        .all(|(idx, &(start, end))| {
            let a = idx as Letter + 1;
            letters[start - 1..end].iter().all(|&x| x == a)
        })
}

fn contains_label(t: &LabelledTree, label: Letter) -> bool {
    t.parts().is_some_and(|(l, left, right)| {
        l == label || contains_label(left, label) || contains_label(right, label)
    })
}

/// The children of the node labelled `label` closest to the root.
fn topmost_children(t: &LabelledTree, label: Letter) -> Option<(&LabelledTree, &LabelledTree)> {
    let mut queue = VecDeque::from([t]);
    while let Some(s) = queue.pop_front() {
        if let Some((l, left, right)) = s.parts() {
            if l == label {
                return Some((left, right));
            }
            queue.push_back(left);
            queue.push_back(right);
        }
    }
    None
}

/// The node-level raising criterion: `ë_i` applies to `u` iff the right
/// strict tree of `u` holds a node `i + 1` and no `i + 1` sits in the right
/// subtree of its topmost node `i`.
fn quasi_raising_condition(t: &LabelledTree, i: Letter) -> bool {
    if !contains_label(t, i + 1) {
        return false;
    }
    match topmost_children(t, i) {
        None => true,
        Some((_, right)) => !contains_label(right, i + 1),
    }
}

/// Criterion 6: quasi-crystal highest weight is equivalent to the constant
/// right-interval condition on the right strict tree, and to the two-sided
/// condition adding the left intervals of the left strict tree; the
/// node-level raising criterion matches `ë_i` exactly.
pub fn highest_weight_characterizations(size: SuiteSize) -> CriterionOutcome {
    finish(
        6,
        "highest-weight characterizations",
        check_highest_weight(size),
    )
}

fn check_highest_weight(size: SuiteSize) -> Result<String, String> {
    let (alphabet, max_len) = match size {
        SuiteSize::Full => (4, 5),
        SuiteSize::Small => (3, 4),
    };
    let domain = words_over(alphabet, max_len);
    for u in &domain {
        let right_tree = p_sylv(u);
        let (left_tree, _) = insert_left_word(u);
        let hw = is_highest_weight_quasi(u);
        let right_cond = right_interval_condition(right_tree.tree());
        let two_sided = right_cond && left_interval_condition(left_tree.tree());
        if hw != right_cond {
            return Err(format!(
                "right-interval characterization disagrees with highest weight on {u}"
            ));
        }
        if hw != two_sided {
            return Err(format!(
                "two-sided characterization disagrees with highest weight on {u}"
            ));
        }
        for i in 1..=alphabet {
            if e_quasi(u, i).is_some() != quasi_raising_condition(right_tree.tree(), i) {
                return Err(format!(
                    "node-level raising criterion disagrees with ë_{i} on {u}"
                ));
            }
        }
    }

    // Frozen witnesses.
    let yes: Word = "1 1 2 1 3 3 5 4 3 2".parse().expect("fixture parses");
    if !is_highest_weight_quasi(&yes) || !right_interval_condition(p_sylv(&yes).tree()) {
        return Err("1 1 2 1 3 3 5 4 3 2 should be quasi-crystal highest weight".into());
    }
    let no: Word = "5 4 5 1 7 6 1 5 2 4".parse().expect("fixture parses");
    if is_highest_weight_quasi(&no) || right_interval_condition(p_sylv(&no).tree()) {
        return Err("5 4 5 1 7 6 1 5 2 4 should not be quasi-crystal highest weight".into());
    }

    Ok(format!(
        "both interval characterizations and the node-level raising criterion agree with \
         the quasi-Kashiwara operators on {} words over a {alphabet}-letter alphabet",
        domain.len()
    ))
}

// =========================================================================
// Criterion 7: counting formulas against brute force
// =========================================================================

fn permutations(n: usize) -> Vec<Vec<Letter>> {
    fn go(remaining: &mut Vec<Letter>, current: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if remaining.is_empty() {
            out.push(current.clone());
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

/// All label assignments `{1..n}^m` in odometer order.
fn assignments(m: usize, n: Letter) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=n).map(move |a| {
                    let mut next = v.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

fn brute_force_decreasing_count(shape: &Shape) -> u128 {
    permutations(shape.size())
        .into_iter()
        .filter(|labels| DecreasingTree::new(tree_from_shape_infix(shape, labels)).is_ok())
        .count() as u128
}

fn brute_force_filling_count(shape: &Shape, n: Letter) -> u128 {
    assignments(shape.size(), n)
        .into_iter()
        .filter(|labels| RightStrictBst::new(tree_from_shape_infix(shape, labels)).is_ok())
        .count() as u128
}

/// Criterion 7: the hook-length product and the interval-based filling
/// count match brute-force enumeration on every small shape, including the
/// zero outcomes where the alphabet is smaller than the right-interval
/// count.
pub fn counting_against_brute_force(size: SuiteSize) -> CriterionOutcome {
    finish(
        7,
        "counting formulas against brute force",
        check_counting(size),
    )
}

fn check_counting(size: SuiteSize) -> Result<String, String> {
    let (hook_max, fill_max, n_max) = match size {
        SuiteSize::Full => (5, 4, 4),
        SuiteSize::Small => (4, 3, 3),
    };

    let mut hook_cases = 0usize;
    for m in 0..=hook_max {
        for shape in Shape::enumerate(m) {
            let formula = hook_count(&shape);
            let brute = brute_force_decreasing_count(&shape);
            if formula != brute {
                return Err(format!(
                    "hook count mismatch on a {m}-node shape: formula {formula}, brute force {brute}"
                ));
            }
            hook_cases += 1;
        }
    }

    let mut fill_cases = 0usize;
    let mut zero_cases = 0usize;
    for m in 0..=fill_max {
        for shape in Shape::enumerate(m) {
            for n in 1..=n_max {
                let formula = count_fillings(&shape, n);
                let brute = brute_force_filling_count(&shape, n);
                if formula != brute {
                    return Err(format!(
                        "filling count mismatch on a {m}-node shape with alphabet {n}: \
                         formula {formula}, brute force {brute}"
                    ));
                }
                if formula == 0 {
                    zero_cases += 1;
                }
                fill_cases += 1;
            }
        }
    }
    if zero_cases == 0 {
        return Err("no (shape, alphabet) case exercised the zero branch".into());
    }

    Ok(format!(
        "hook counts match brute force on {hook_cases} shapes; filling counts match on \
         {fill_cases} (shape, alphabet) cases, {zero_cases} of them zero because the \
         alphabet is smaller than the right-interval count"
    ))
}

// =========================================================================
// Criterion 8: factorization content-independence
// =========================================================================

/// All twin shape pairs with `m` nodes: equal-size shape pairs whose
/// standard fillings have complementary canopies (for `m = 0`, the empty
/// pair).
fn twin_shape_pairs(m: usize) -> Vec<(Shape, Shape)> {
    if m == 0 {
        return vec![(Shape::empty(), Shape::empty())];
    }
    let shapes = Shape::enumerate(m);
    let canopies: Vec<CanopyWord> = shapes
        .iter()
        .map(|s| canopy(&fill_standard(s)).expect("nonempty shape has a canopy"))
        .collect();
    let mut out = Vec::new();
    for (a, left) in shapes.iter().enumerate() {
        for (b, right) in shapes.iter().enumerate() {
            if canopies[a].is_complementary(&canopies[b]) {
                out.push((left.clone(), right.clone()));
            }
        }
    }
    out
}

/// Up to `cap` sylvester class representatives of the given shape with
/// pairwise distinct weights (postfix readings of right-strict fillings).
fn sylvester_representatives(shape: &Shape, cap: usize) -> Vec<Word> {
    let m = shape.size();
    let mut reps = Vec::new();
    for wt in weights_with_total(m, m + 1) {
        if let Some(tree) = fill_shape(shape, &wt, Strictness::Right) {
            reps.push(postfix_reading(&tree));
            if reps.len() == cap {
                break;
            }
        }
    }
    reps
}

/// Up to `cap` Baxter class representatives of the given twin shape pair
/// with pairwise distinct weights (left-consistent readings of fillings).
fn baxter_representatives(left: &Shape, right: &Shape, cap: usize) -> Vec<Word> {
    let m = left.size();
    let mut reps = Vec::new();
    for wt in weights_with_total(m, m + 1) {
        if let Some(word) = twin_filling_reading((left, right), &wt) {
            reps.push(word);
            if reps.len() == cap {
                break;
            }
        }
    }
    reps
}

/// Criterion 8: the number of factorizations of a class over prescribed
/// shapes depends only on the shapes, never on the content — verified by
/// comparing counts across same-shape classes of different weights.
pub fn factorization_content_independence(size: SuiteSize) -> CriterionOutcome {
    finish(
        8,
        "factorization content-independence",
        check_factorization_independence(size),
    )
}

fn check_factorization_independence(size: SuiteSize) -> Result<String, String> {
    let (sylv_max, sylv_uv_max, baxt_max, baxt_uv_max) = match size {
        SuiteSize::Full => (4, 3, 3, 3),
        SuiteSize::Small => (3, 2, 2, 2),
    };

    // Sylvester shapes.
    let mut uv_shapes = Vec::new();
    for k in 0..=sylv_uv_max {
        uv_shapes.extend(Shape::enumerate(k));
    }
    let mut sylv_shapes_checked = 0usize;
    for m in 1..=sylv_max {
        for shape in Shape::enumerate(m) {
            let reps = sylvester_representatives(&shape, 3);
            if reps.len() < 2 {
                return Err(format!(
                    "found only {} sylvester class(es) on a {m}-node shape",
                    reps.len()
                ));
            }
            for u_shape in &uv_shapes {
                for v_shape in &uv_shapes {
                    let baseline = count_factorizations_sylv(&reps[0], u_shape, v_shape);
                    for other in &reps[1..] {
                        let count = count_factorizations_sylv(other, u_shape, v_shape);
                        if count != baseline {
                            return Err(format!(
                                "sylvester factorization count depends on content: {} gives \
                                 {baseline} but {} gives {count} over shapes of sizes \
                                 ({}, {})",
                                reps[0],
                                other,
                                u_shape.size(),
                                v_shape.size()
                            ));
                        }
                    }
                }
            }
            sylv_shapes_checked += 1;
        }
    }

    // Twin shape pairs, frozen counts first.
    let twin_counts: Vec<usize> = (0..=3).map(|m| twin_shape_pairs(m).len()).collect();
    if twin_counts != [1, 1, 2, 6] {
        return Err(format!(
            "twin shape pair counts {twin_counts:?} differ from the expected 1, 1, 2, 6"
        ));
    }

    let mut uv_pairs = Vec::new();
    for k in 0..=baxt_uv_max {
        uv_pairs.extend(twin_shape_pairs(k));
    }
    let mut baxt_pairs_checked = 0usize;
    for m in 1..=baxt_max {
        for (left, right) in twin_shape_pairs(m) {
            let reps = baxter_representatives(&left, &right, 3);
            if reps.len() < 2 {
                return Err(format!(
                    "found only {} Baxter class(es) on a {m}-node twin shape pair",
                    reps.len()
                ));
            }
            for (ul, ur) in &uv_pairs {
                for (vl, vr) in &uv_pairs {
                    let baseline = count_factorizations_baxt(&reps[0], (ul, ur), (vl, vr));
                    for other in &reps[1..] {
                        let count = count_factorizations_baxt(other, (ul, ur), (vl, vr));
                        if count != baseline {
                            return Err(format!(
                                "Baxter factorization count depends on content: {} gives \
                                 {baseline} but {} gives {count} over twin pairs of sizes \
                                 ({}, {})",
                                reps[0],
                                other,
                                ul.size(),
                                vl.size()
                            ));
                        }
                    }
                }
            }
            baxt_pairs_checked += 1;
        }
    }

    Ok(format!(
        "content-independence holds across {sylv_shapes_checked} sylvester shapes and \
         {baxt_pairs_checked} Baxter twin shape pairs"
    ))
}

// =========================================================================
// Criterion 9: defining identities
// =========================================================================

/// Criterion 9: `xyxy = yxxy` holds throughout the sylvester monoid and
/// `xyxyxy = xyyxxy` throughout the Baxter monoid on exhaustive domains,
/// while the sylvester identity genuinely fails in the Baxter monoid.
pub fn defining_identities(size: SuiteSize) -> CriterionOutcome {
    finish(9, "defining identities", check_identities(size))
}

fn check_identities(size: SuiteSize) -> Result<String, String> {
    let sylv_max = match size {
        SuiteSize::Full => 3,
        SuiteSize::Small => 2,
    };
    let sylv_words = words_over(3, sylv_max);
    let mut sylv_pairs = 0usize;
    for x in &sylv_words {
        for y in &sylv_words {
            if !check_identity(MonoidKind::Sylv, x, y).expect("sylv has an identity scheme") {
                return Err(format!("sylvester identity fails at x = {x}, y = {y}"));
            }
            sylv_pairs += 1;
        }
    }

    let baxt_words = words_over(3, 2);
    let mut baxt_pairs = 0usize;
    let mut sylvester_fails_in_baxt = 0usize;
    for x in &baxt_words {
        for y in &baxt_words {
            if !check_identity(MonoidKind::Baxt, x, y).expect("baxt has an identity scheme") {
                return Err(format!("Baxter identity fails at x = {x}, y = {y}"));
            }
            let lhs = x.concat(y).concat(x).concat(y);
            let rhs = y.concat(x).concat(x).concat(y);
            if p_baxt(&lhs) != p_baxt(&rhs) {
                sylvester_fails_in_baxt += 1;
            }
            baxt_pairs += 1;
        }
    }
    if sylvester_fails_in_baxt == 0 {
        return Err(
            "expected the sylvester identity to fail somewhere in the Baxter monoid".to_string(),
        );
    }

    Ok(format!(
        "xyxy = yxxy holds in sylv on {sylv_pairs} pairs and xyxyxy = xyyxxy holds in baxt \
         on {baxt_pairs} pairs, where the sylvester identity fails {sylvester_fails_in_baxt} \
         times"
    ))
}

// =========================================================================
// Criterion 10: Q-symbol indexing and standard-word uniqueness
// =========================================================================

/// Criterion 10: the sylvester Q-symbol determines exactly the
/// standardization, every bounded quasi-crystal component contains exactly
/// one standard word, and component membership matches standardization.
pub fn q_symbol_indexing(size: SuiteSize) -> CriterionOutcome {
    finish(
        10,
        "Q-symbol indexing and standard-word uniqueness",
        check_q_indexing(size),
    )
}

fn check_q_indexing(size: SuiteSize) -> Result<String, String> {
    let (max_len, member_len) = match size {
        SuiteSize::Full => (5, 4),
        SuiteSize::Small => (4, 3),
    };
    let words = words_over(3, max_len);

    // Q-symbol equality ⟺ equal standardization, within each length.
    let mut by_length: BTreeMap<usize, Vec<&Word>> = BTreeMap::new();
    for w in &words {
        by_length.entry(w.len()).or_default().push(w);
    }
    let mut q_pairs = 0usize;
    for group in by_length.values() {
        let q_symbols: Vec<_> = group.iter().map(|w| q_sylv(w)).collect();
        let standards: Vec<_> = group.iter().map(|w| standardize(w)).collect();
        for a in 0..group.len() {
            for b in a + 1..group.len() {
                if (q_symbols[a] == q_symbols[b]) != (standards[a] == standards[b]) {
                    return Err(format!(
                        "Q-symbol indexing fails on {} vs {}",
                        group[a], group[b]
                    ));
                }
                q_pairs += 1;
            }
        }
    }

    // Exactly one standard word per bounded quasi-crystal component, and a
    // component id per visited word for the membership check below.
    let mut ids: HashMap<Word, usize> = HashMap::new();
    let mut components = 0usize;
    for u in &words {
        if ids.contains_key(u) {
            continue;
        }
        let view = component(u, GraphKind::QuasiCrystal, 8);
        let standard_count = view
            .vertices()
            .iter()
            .filter(|v| StandardWord::new((*v).clone()).is_ok())
            .count();
        if standard_count != 1 {
            return Err(format!(
                "the bounded quasi-crystal component of {u} contains {standard_count} standard \
                 words instead of one"
            ));
        }
        for v in view.vertices() {
            ids.insert(v.clone(), components);
        }
        components += 1;
    }

    // Component membership ⟺ equal standardization.
    let member_words = words_over(3, member_len);
    let mut member_groups: BTreeMap<usize, Vec<&Word>> = BTreeMap::new();
    for w in &member_words {
        member_groups.entry(w.len()).or_default().push(w);
    }
    let mut member_pairs = 0usize;
    for group in member_groups.values() {
        for a in 0..group.len() {
            for b in a + 1..group.len() {
                let same_component = ids[group[a]] == ids[group[b]];
                let same_standard = standardize(group[a]) == standardize(group[b]);
                if same_component != same_standard {
                    return Err(format!(
                        "component membership disagrees with standardization on {} vs {}",
                        group[a], group[b]
                    ));
                }
                member_pairs += 1;
            }
        }
    }

    Ok(format!(
        "Q-symbol equality matches standardization on {q_pairs} pairs; each of {components} \
         bounded quasi-crystal components contains exactly one standard word; membership \
         matches standardization on {member_pairs} pairs"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(digits: &str) -> Word {
        Word::from_digits(digits).unwrap()
    }

    #[test]
    fn recursion_oracle_reproduces_known_values() {
        for end in [SplitEnd::First, SplitEnd::Last] {
            let mut oracle = RecursionOracle::new(end);
            assert_eq!(oracle.lower(&w("2111"), 1), Some(w("2112")));
            assert_eq!(oracle.lower(&w("2111"), 2), Some(w("3111")));
            assert_eq!(oracle.raise(&w("2112"), 1), Some(w("2111")));
            assert_eq!(oracle.raise(&w("2111"), 1), None);
            assert_eq!(oracle.phi(&w("2111"), 1), 2);
            assert_eq!(oracle.eps(&w("2211"), 1), 0);
        }
    }

    #[test]
    fn helper_enumerations() {
        assert_eq!(words_over(3, 2).len(), 1 + 3 + 9);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(assignments(2, 3).len(), 9);
        assert_eq!(weights_with_total(2, 2).len(), 3);
        assert_eq!(twin_shape_pairs(3).len(), 6);
        let shape = Shape::enumerate(2).into_iter().next().unwrap();
        assert_eq!(tree_from_shape_infix(&shape, &[1, 2]).size(), 2);
    }

    #[test]
    fn small_suite_passes() {
        for outcome in run_all(SuiteSize::Small) {
            assert!(outcome.passed, "{outcome}");
        }
    }
}
