//! The plactic, hypoplactic, sylvester, and Baxter congruences.
//!
//! Each congruence identifies the words sharing a P-symbol:
//!
//! * **plac** — the plactic monoid; the P-symbol is the Young tableau built
//!   by Schensted row insertion ([`p_plac`]).
//! * **sylv** — the sylvester monoid; the P-symbol is the right strict
//!   binary search tree built by right-to-left leaf insertion ([`p_sylv`]).
//! * **baxt** — the Baxter monoid; the P-symbol is the pair of twin binary
//!   search trees ([`p_baxt`]).
//! * **hypo** — the hypoplactic monoid; decided here through its invariant
//!   characterization (equal weights and equal descent sets of the inverses
//!   of the standardized words) rather than an insertion algorithm.
//!
//! [`equiv`] decides `u ≡ v` by one of four routes — `insertion` (compare
//! P-symbols), `shape` (compare weight plus the shape invariant σ),
//! `rewrite` (closure under the defining relations), `graph` (pinned
//! isomorphism of bounded operator graph components plus the σ invariant) —
//! which agree wherever they are all defined. [`rewrite_closure`] exposes the
//! rewriting route's class computation, [`count_factorizations_sylv`] /
//! [`count_factorizations_baxt`] count the factorizations of a congruence
//! class over prescribed shapes, and [`check_identity`] evaluates the
//! defining identity instance of the sylvester (`xyxy = yxxy`) and Baxter
//! (`xyxyxy = xyyxxy`) monoids.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graphs;
use crate::trees::{
    dectree, fill_shape, inctree, insert_left_word, insert_right_word, left_consistent_reading,
    postfix_reading, DecreasingTree, IncreasingTree, RightStrictBst, Shape, Strictness, TwinPair,
};
use crate::words::{descent_set, invert, standardize, weight, Letter, Weight, Word};

/// The four monoid congruences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoidKind {
    /// Plactic (Young tableaux, Knuth relations).
    Plac,
    /// Hypoplactic (quasi-ribbon invariants).
    Hypo,
    /// Sylvester (right strict binary search trees).
    Sylv,
    /// Baxter (pairs of twin binary search trees).
    Baxt,
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidKind::Plac => "plac",
            MonoidKind::Hypo => "hypo",
            MonoidKind::Sylv => "sylv",
            MonoidKind::Baxt => "baxt",
        })
    }
}

impl FromStr for MonoidKind {
    type Err = CongruenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plac" => Ok(MonoidKind::Plac),
            "hypo" => Ok(MonoidKind::Hypo),
            "sylv" => Ok(MonoidKind::Sylv),
            "baxt" => Ok(MonoidKind::Baxt),
            _ => Err(CongruenceError::UnknownName {
                what: "monoid",
                name: s.to_string(),
            }),
        }
    }
}

/// The four decision routes of [`equiv`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivMethod {
    /// Compare P-symbols.
    Insertion,
    /// Compare weights and shape invariants.
    Shape,
    /// Search the closure under the defining relations.
    Rewrite,
    /// Pinned isomorphism of bounded operator graph components.
    Graph,
}

impl fmt::Display for EquivMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivMethod::Insertion => "insertion",
            EquivMethod::Shape => "shape",
            EquivMethod::Rewrite => "rewrite",
            EquivMethod::Graph => "graph",
        })
    }
}

impl FromStr for EquivMethod {
    type Err = CongruenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "insertion" => Ok(EquivMethod::Insertion),
            "shape" => Ok(EquivMethod::Shape),
            "rewrite" => Ok(EquivMethod::Rewrite),
            "graph" => Ok(EquivMethod::Graph),
            _ => Err(CongruenceError::UnknownName {
                what: "method",
                name: s.to_string(),
            }),
        }
    }
}

/// Errors of the congruence-decision interface.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    /// The requested kind/method combination has no semantics here.
    #[error("method {method} is not available for {kind}: {why}")]
    UnsupportedMethod {
        /// The monoid.
        kind: MonoidKind,
        /// The requested route.
        method: EquivMethod,
        /// Why the combination is rejected.
        why: &'static str,
    },
    /// A name failed to parse as a monoid or method.
    #[error("unknown {what} {name:?}")]
    UnknownName {
        /// What was being parsed ("monoid" or "method").
        what: &'static str,
        /// The offending name.
        name: String,
    },
}

// =========================================================================
// Plactic insertion
// =========================================================================

/// A Young tableau in English convention: weakly increasing rows (top row
/// first), strictly increasing columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// The rows, top row first.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Schensted row insertion: `a` bumps the leftmost entry strictly larger
    /// than it out of the first row, the bumped entry does the same in the
    /// second row, and so on; the cascade ends by appending to some row (or a
    /// fresh one). Returns the (0-indexed) row of the appended cell.
    fn insert(&mut self, a: Letter) -> usize {
        let mut carry = a;
        for (r, row) in self.rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&x| x <= carry);
            if pos == row.len() {
                row.push(carry);
                return r;
            }
            std::mem::swap(&mut row[pos], &mut carry);
        }
        self.rows.push(vec![carry]);
        self.rows.len() - 1
    }
}

impl fmt::Display for Tableau {
    /// One row per line, top row first; the empty tableau prints `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str(".");
        }
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// The plactic P- and Q-symbols of `u`: the insertion tableau and the
/// standard recording tableau marking the order in which cells appeared.
pub fn p_q_plac(u: &Word) -> (Tableau, Tableau) {
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for (i, &a) in u.letters().iter().enumerate() {
        let r = p.insert(a);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(i as Letter + 1);
    }
    (p, q)
}

/// The plactic P-symbol (insertion tableau) of `u`.
pub fn p_plac(u: &Word) -> Tableau {
    p_q_plac(u).0
}

/// The plactic Q-symbol (recording tableau) of `u`.
pub fn q_plac(u: &Word) -> Tableau {
    p_q_plac(u).1
}

// =========================================================================
// Sylvester and Baxter symbols
// =========================================================================

/// The sylvester P-symbol: the right strict binary search tree of `u`.
pub fn p_sylv(u: &Word) -> RightStrictBst {
    insert_right_word(u).0
}

/// The sylvester Q-symbol: the decreasing recording tree of `u`.
pub fn q_sylv(u: &Word) -> DecreasingTree {
    insert_right_word(u).1
}

/// The Baxter P-symbol: the twin pair of binary search trees of `u`.
pub fn p_baxt(u: &Word) -> TwinPair {
    let (left, _) = insert_left_word(u);
    let (right, _) = insert_right_word(u);
    TwinPair::new(left, right).expect("insertion from both ends of a word yields a twin pair")
}

/// The Baxter Q-symbol: the pair of recording trees of `u`.
pub fn q_baxt(u: &Word) -> (IncreasingTree, DecreasingTree) {
    (insert_left_word(u).1, insert_right_word(u).1)
}

// =========================================================================
// Shape invariants
// =========================================================================

/// The sylvester shape invariant of a word: the shape of the decreasing tree
/// of the inverse of its standardization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SylvShape(Shape);

impl SylvShape {
    /// The underlying shape.
    pub fn shape(&self) -> &Shape {
        &self.0
    }
}

/// The Baxter shape invariant of a word: the shapes of the increasing and
/// decreasing trees of the inverse of its standardization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaxtShape {
    inc: Shape,
    dec: Shape,
}

impl BaxtShape {
    /// Shape of the increasing tree.
    pub fn inc_shape(&self) -> &Shape {
        &self.inc
    }

    /// Shape of the decreasing tree.
    pub fn dec_shape(&self) -> &Shape {
        &self.dec
    }
}

/// σ_sylv: `Sh(dectree(std(u)⁻¹))`. Together with the weight this determines
/// the sylvester class.
pub fn sigma_sylv(u: &Word) -> SylvShape {
    let inv = invert(&standardize(u));
    SylvShape(
        dectree(inv.word())
            .expect("standard words have distinct letters")
            .tree()
            .shape(),
    )
}

/// σ_baxt: `(Sh(inctree(std(u)⁻¹)), Sh(dectree(std(u)⁻¹)))`. Together with
/// the weight this determines the Baxter class.
pub fn sigma_baxt(u: &Word) -> BaxtShape {
    let inv = invert(&standardize(u));
    BaxtShape {
        inc: inctree(inv.word())
            .expect("standard words have distinct letters")
            .tree()
            .shape(),
        dec: dectree(inv.word())
            .expect("standard words have distinct letters")
            .tree()
            .shape(),
    }
}

/// The invariant characterization of the hypoplactic congruence: equal
/// weights and equal descent sets of `std(·)⁻¹`.
fn hypo_congruent(u: &Word, v: &Word) -> bool {
    if weight(u) != weight(v) {
        return false;
    }
    let du = descent_set(invert(&standardize(u)).word());
    let dv = descent_set(invert(&standardize(v)).word());
    du == dv
}

// =========================================================================
// Rewriting systems
// =========================================================================

/// All words reachable from `w` by applying one defining relation of `kind`
/// (in either direction, in any context).
fn rewrite_neighbors(w: &Word, kind: MonoidKind) -> Vec<Word> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = Vec::new();
    let swapped = |i: usize| {
        let mut v = letters.to_vec();
        v.swap(i, i + 1);
        Word::new(v).expect("letters unchanged")
    };
    match kind {
        MonoidKind::Plac => {
            // Knuth relations on windows of three letters:
            //   acb = cab  (a ≤ b < c): swap the first two letters;
            //   bac = bca  (a < b ≤ c): swap the last two letters.
            for i in 0..n.saturating_sub(2) {
                let (x, y, z) = (letters[i], letters[i + 1], letters[i + 2]);
                // acb → cab and cab → acb.
                if (x <= z && z < y) || (y <= z && z < x) {
                    out.push(swapped(i));
                }
                // bac → bca and bca → bac.
                if (y < x && x <= z) || (z < x && x <= y) {
                    let mut v = letters.to_vec();
                    v.swap(i + 1, i + 2);
                    out.push(Word::new(v).expect("letters unchanged"));
                }
            }
        }
        MonoidKind::Sylv => {
            // cavb = acvb (a ≤ b < c): an adjacent pair may swap when a
            // letter b with a ≤ b < c occurs somewhere to its right.
            for i in 0..n.saturating_sub(1) {
                if letters[i] == letters[i + 1] {
                    continue;
                }
                let a = letters[i].min(letters[i + 1]);
                let c = letters[i].max(letters[i + 1]);
                if letters[i + 2..].iter().any(|&b| a <= b && b < c) {
                    out.push(swapped(i));
                }
            }
        }
        MonoidKind::Baxt => {
            // Two families: cudavb = cuadvb (a ≤ b < c ≤ d) and
            // budavc = buadvc (a < b ≤ c < d). An adjacent pair {a, d} may
            // swap when witnesses occur on both sides.
            for i in 0..n.saturating_sub(1) {
                if letters[i] == letters[i + 1] {
                    continue;
                }
                let a = letters[i].min(letters[i + 1]);
                let d = letters[i].max(letters[i + 1]);
                let before = &letters[..i];
                let after = &letters[i + 2..];
                let family1 = before
                    .iter()
                    .any(|&c| c <= d && after.iter().any(|&b| a <= b && b < c));
                let family2 = before
                    .iter()
                    .any(|&b| b > a && after.iter().any(|&c| b <= c && c < d));
                if family1 || family2 {
                    out.push(swapped(i));
                }
            }
        }
        MonoidKind::Hypo => unreachable!("hypo has no rewriting system here"),
    }
    out
}

/// The congruence class of `u` computed as the closure of `u` under the
/// defining relations of `kind`. Rejected for `hypo`, whose congruence is
/// not decided by rewriting in this crate.
pub fn rewrite_closure(u: &Word, kind: MonoidKind) -> Result<BTreeSet<Word>, CongruenceError> {
    if kind == MonoidKind::Hypo {
        return Err(CongruenceError::UnsupportedMethod {
            kind,
            method: EquivMethod::Rewrite,
            why: "no finite relation family is implemented for hypo",
        });
    }
    let mut seen = BTreeSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(w) = queue.pop_front() {
        for next in rewrite_neighbors(&w, kind) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

// =========================================================================
// The multi-route decision procedure
// =========================================================================

/// Decides `u ≡ v` in the monoid `kind` by the requested route.
///
/// Supported combinations: `insertion` for every kind (for `hypo` this is
/// the invariant characterization — the stand-in for its insertion
/// algorithm), `shape` for `sylv`, `baxt`, `hypo`, `rewrite` for `plac`,
/// `sylv`, `baxt`, and `graph` for every kind. All supported routes for a
/// kind decide the same congruence.
pub fn equiv(
    u: &Word,
    v: &Word,
    kind: MonoidKind,
    method: EquivMethod,
) -> Result<bool, CongruenceError> {
    match (kind, method) {
        (MonoidKind::Plac, EquivMethod::Insertion) => Ok(p_plac(u) == p_plac(v)),
        (MonoidKind::Sylv, EquivMethod::Insertion) => Ok(p_sylv(u) == p_sylv(v)),
        (MonoidKind::Baxt, EquivMethod::Insertion) => Ok(p_baxt(u) == p_baxt(v)),
        (MonoidKind::Hypo, EquivMethod::Insertion) | (MonoidKind::Hypo, EquivMethod::Shape) => {
            Ok(hypo_congruent(u, v))
        }
        (MonoidKind::Sylv, EquivMethod::Shape) => {
            Ok(weight(u) == weight(v) && sigma_sylv(u) == sigma_sylv(v))
        }
        (MonoidKind::Baxt, EquivMethod::Shape) => {
            Ok(weight(u) == weight(v) && sigma_baxt(u) == sigma_baxt(v))
        }
        (MonoidKind::Plac, EquivMethod::Shape) => Err(CongruenceError::UnsupportedMethod {
            kind,
            method,
            why: "weight plus shape does not determine a plactic class",
        }),
        (MonoidKind::Hypo, EquivMethod::Rewrite) => Err(CongruenceError::UnsupportedMethod {
            kind,
            method,
            why: "no finite relation family is implemented for hypo",
        }),
        (_, EquivMethod::Rewrite) => {
            // Relations preserve the weight, so distinct weights end it early.
            if weight(u) != weight(v) {
                return Ok(false);
            }
            Ok(rewrite_closure(u, kind)?.contains(v))
        }
        (_, EquivMethod::Graph) => {
            let bound = graphs::default_label_bound(u, v);
            Ok(graphs::congruent_via_graph(u, v, kind, bound))
        }
    }
}

// =========================================================================
// Counting factorizations
// =========================================================================

/// All ways to split `w` into two weights with prescribed first-part total.
fn weight_splits(w: &Weight, first_total: usize) -> Vec<(Weight, Weight)> {
    let counts = w.counts();
    let mut out = Vec::new();
    let mut current = vec![0usize; counts.len()];
    fn go(
        counts: &[usize],
        idx: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<(Weight, Weight)>,
    ) {
        if idx == counts.len() {
            if remaining == 0 {
                let first = Weight::from_counts(current.clone());
                let second = Weight::from_counts(
                    counts
                        .iter()
                        .zip(current.iter())
                        .map(|(&c, &a)| c - a)
                        .collect(),
                );
                out.push((first, second));
            }
            return;
        }
        let cap = counts[idx].min(remaining);
        for a in 0..=cap {
            current[idx] = a;
            go(counts, idx + 1, remaining - a, current, out);
        }
        current[idx] = 0;
    }
    if first_total <= w.total() {
        go(counts, 0, first_total, &mut current, &mut out);
    }
    out
}

/// Counts the pairs of sylvester classes, of shapes `u_shape` and `v_shape`,
/// whose product is the class of `w`.
///
/// A sylvester class is identified by its tree (a shape plus a compatible
/// content); the enumeration runs over the splits of `weight(w)` and counts
/// those whose two right-strict fillings exist and multiply into the class
/// of `w` (tested via a postfix-reading representative of each filling).
pub fn count_factorizations_sylv(w: &Word, u_shape: &Shape, v_shape: &Shape) -> u64 {
    if u_shape.size() + v_shape.size() != w.len() {
        return 0;
    }
    let target = p_sylv(w);
    let mut count = 0;
    for (wu, wv) in weight_splits(&weight(w), u_shape.size()) {
        let Some(tu) = fill_shape(u_shape, &wu, Strictness::Right) else {
            continue;
        };
        let Some(tv) = fill_shape(v_shape, &wv, Strictness::Right) else {
            continue;
        };
        let product = postfix_reading(&tu).concat(&postfix_reading(&tv));
        if p_sylv(&product) == target {
            count += 1;
        }
    }
    count
}

/// Counts the pairs of Baxter classes, of twin shape pairs `u_shapes` and
/// `v_shapes`, whose product is the class of `w`.
///
/// A Baxter class is identified by a twin pair (a left-strict filling of the
/// first shape and a right-strict filling of the second with a common
/// content); representatives are taken by the left-consistent reading.
pub fn count_factorizations_baxt(
    w: &Word,
    u_shapes: (&Shape, &Shape),
    v_shapes: (&Shape, &Shape),
) -> u64 {
    if u_shapes.0.size() != u_shapes.1.size() || v_shapes.0.size() != v_shapes.1.size() {
        return 0;
    }
    if u_shapes.0.size() + v_shapes.0.size() != w.len() {
        return 0;
    }
    let target = p_baxt(w);
    let mut count = 0;
    for (wu, wv) in weight_splits(&weight(w), u_shapes.0.size()) {
        let Some(u_word) = twin_filling_reading(u_shapes, &wu) else {
            continue;
        };
        let Some(v_word) = twin_filling_reading(v_shapes, &wv) else {
            continue;
        };
        if p_baxt(&u_word.concat(&v_word)) == target {
            count += 1;
        }
    }
    count
}

/// Fills a shape pair with a common content and reads off a representative
/// word, when the fillings exist and form a twin pair.
pub(crate) fn twin_filling_reading(shapes: (&Shape, &Shape), w: &Weight) -> Option<Word> {
    let left = fill_shape(shapes.0, w, Strictness::Left)?;
    let right = fill_shape(shapes.1, w, Strictness::Right)?;
    let left = crate::trees::LeftStrictBst::new(left).expect("filling satisfies left strictness");
    let right = RightStrictBst::new(right).expect("filling satisfies right strictness");
    let pair = TwinPair::new(left, right).ok()?;
    Some(left_consistent_reading(&pair))
}

// =========================================================================
// Identities
// =========================================================================

/// Evaluates the defining identity instance of `kind` at the words `x`, `y`:
/// `xyxy = yxxy` for the sylvester monoid and `xyxyxy = xyyxxy` for the
/// Baxter monoid. Other kinds are rejected.
pub fn check_identity(kind: MonoidKind, x: &Word, y: &Word) -> Result<bool, CongruenceError> {
    match kind {
        MonoidKind::Sylv => {
            let lhs = x.concat(y).concat(x).concat(y);
            let rhs = y.concat(x).concat(x).concat(y);
            Ok(p_sylv(&lhs) == p_sylv(&rhs))
        }
        MonoidKind::Baxt => {
            let xy = x.concat(y);
            let lhs = xy.concat(&xy).concat(&xy);
            let rhs = xy.concat(y).concat(x).concat(&xy);
            Ok(p_baxt(&lhs) == p_baxt(&rhs))
        }
        _ => Err(CongruenceError::UnsupportedMethod {
            kind,
            method: EquivMethod::Insertion,
            why: "no identity scheme is defined for this monoid",
        }),
    }
}
