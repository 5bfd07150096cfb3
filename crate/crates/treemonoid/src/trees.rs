//! Binary trees, binary search tree insertion, and tree statistics.
//!
//! The central objects are labelled binary trees ([`LabelledTree`]) and their
//! unlabelled shapes ([`Shape`]). Two flavours of binary search tree appear:
//!
//! * **left strict** ([`LeftStrictBst`]): labels in the left subtree are
//!   strictly smaller than the node, labels in the right subtree are ≥;
//! * **right strict** ([`RightStrictBst`]): labels in the left subtree are ≤
//!   the node, labels in the right subtree are strictly larger.
//!
//! A word is inserted into a left strict tree by reading it **left to right**
//! ([`insert_left_word`]) and into a right strict tree by reading it **right
//! to left** ([`insert_right_word`]); both use leaf insertion (the new letter
//! descends from the root and becomes a leaf). Each insertion also produces a
//! recording tree of the same shape whose labels say *when* each leaf was
//! created: an increasing tree for the left insertion and a decreasing tree
//! for the right insertion.
//!
//! On top of these sit the statistics driving everything else: infix/postfix
//! readings, the [`canopy`], twin pairs ([`TwinPair`]), the left and right
//! interval partitions of the infix order, decreasing/increasing trees of
//! repeat-free words ([`dectree`], [`inctree`]), shape fillings
//! ([`fill_shape`]), the nondeterministic reading process recovering all
//! words sharing a twin pair ([`baxter_class_readings`]), and the two closed
//! counting formulas ([`hook_count`], [`count_fillings`]).
//!
//! JSON: a labelled tree serializes as `null` (empty) or
//! `{"label": n, "left": <tree>, "right": <tree>}`; a shape uses the same
//! schema without `"label"` (a `"label"` field is tolerated and ignored when
//! reading shapes). Validated wrappers re-check their invariant when
//! deserialized.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Letter, Weight, Word};

/// Errors for tree construction and tree statistics.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    /// The operation requires a nonempty tree.
    #[error("operation requires a nonempty tree")]
    EmptyTree,
    /// The word has a repeated letter where distinct letters are required.
    #[error("word must not repeat letters")]
    RepeatedLetters,
    /// A validated wrapper was given a tree violating its invariant.
    #[error("tree is not {property}")]
    InvalidTree {
        /// Human-readable name of the violated property.
        property: &'static str,
    },
    /// Two trees do not form a twin pair.
    #[error("not a twin pair: {reason}")]
    NotTwin {
        /// Which part of the twin condition failed.
        reason: &'static str,
    },
}

// =========================================================================
// Labelled trees and shapes
// =========================================================================

/// A binary tree with positive integer labels. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelledTree {
    root: Option<Box<TreeNode>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
struct TreeNode {
    label: Letter,
    left: LabelledTree,
    right: LabelledTree,
}

impl LabelledTree {
    /// The empty tree.
    pub fn empty() -> Self {
        LabelledTree::default()
    }

    /// A single node with two empty subtrees.
    pub fn leaf(label: Letter) -> Self {
        LabelledTree::node(label, LabelledTree::empty(), LabelledTree::empty())
    }

    /// A node with the given subtrees.
    pub fn node(label: Letter, left: LabelledTree, right: LabelledTree) -> Self {
        LabelledTree {
            root: Some(Box::new(TreeNode { label, left, right })),
        }
    }

    /// Whether the tree is empty.
    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match &self.root {
            None => 0,
            Some(n) => 1 + n.left.size() + n.right.size(),
        }
    }

    /// Root decomposition: `None` for the empty tree, otherwise the root
    /// label and the two subtrees.
    pub fn parts(&self) -> Option<(Letter, &LabelledTree, &LabelledTree)> {
        self.root.as_ref().map(|n| (n.label, &n.left, &n.right))
    }

    /// The underlying shape (labels forgotten).
    pub fn shape(&self) -> Shape {
        match self.parts() {
            None => Shape::empty(),
            Some((_, l, r)) => Shape::node(l.shape(), r.shape()),
        }
    }

    fn collect_lines(&self, lines: &mut Vec<String>, prefix: &str) {
        // Only called on nonempty trees; pushes the two child blocks below
        // the already-pushed root line.
        let (_, left, right) = self.parts().expect("collect_lines requires a node");
        match left.parts() {
            None => lines.push(format!("{prefix}+-L .")),
            Some((label, _, _)) => {
                lines.push(format!("{prefix}+-L {label}"));
                left.collect_lines(lines, &format!("{prefix}|   "));
            }
        }
        match right.parts() {
            None => lines.push(format!("{prefix}`-R .")),
            Some((label, _, _)) => {
                lines.push(format!("{prefix}`-R {label}"));
                right.collect_lines(lines, &format!("{prefix}    "));
            }
        }
    }
}

impl fmt::Display for LabelledTree {
    /// ASCII rendering: the root label on the first line, then the left (`L`)
    /// and right (`R`) children indented below it; `.` marks an empty child.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            None => write!(f, "."),
            Some((label, _, _)) => {
                let mut lines = vec![label.to_string()];
                self.collect_lines(&mut lines, "");
                f.write_str(&lines.join("\n"))
            }
        }
    }
}

/// An unlabelled binary tree (the shape of a labelled tree).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Shape {
    root: Option<Box<ShapeNode>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
struct ShapeNode {
    left: Shape,
    right: Shape,
}

impl Shape {
    /// The empty shape.
    pub fn empty() -> Self {
        Shape::default()
    }

    /// A single node.
    pub fn leaf() -> Self {
        Shape::node(Shape::empty(), Shape::empty())
    }

    /// A node with the given subtree shapes.
    pub fn node(left: Shape, right: Shape) -> Self {
        Shape {
            root: Some(Box::new(ShapeNode { left, right })),
        }
    }

    /// Whether the shape is empty.
    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match &self.root {
            None => 0,
            Some(n) => 1 + n.left.size() + n.right.size(),
        }
    }

    /// Root decomposition: the two subtree shapes, or `None` when empty.
    pub fn parts(&self) -> Option<(&Shape, &Shape)> {
        self.root.as_ref().map(|n| (&n.left, &n.right))
    }

    /// All shapes with exactly `n` nodes, in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<Shape> {
        if n == 0 {
            return vec![Shape::empty()];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in Shape::enumerate(k) {
                for r in Shape::enumerate(n - 1 - k) {
                    out.push(Shape::node(l.clone(), r));
                }
            }
        }
        out.sort();
        out
    }
}

/// JSON mirror for [`Shape`]: accepts the labelled-tree schema and ignores
/// any `"label"` fields, so a labelled tree document can be read as a shape.
#[derive(Deserialize)]
#[serde(transparent)]
struct ShapeJson(Option<Box<ShapeJsonNode>>);

#[derive(Deserialize)]
struct ShapeJsonNode {
    #[serde(default)]
    #[allow(dead_code)]
    label: Option<u64>,
    left: ShapeJson,
    right: ShapeJson,
}

impl From<ShapeJson> for Shape {
    fn from(json: ShapeJson) -> Self {
        match json.0 {
            None => Shape::empty(),
            Some(node) => Shape::node(Shape::from(node.left), Shape::from(node.right)),
        }
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Shape::from(ShapeJson::deserialize(deserializer)?))
    }
}

// =========================================================================
// Validated tree wrappers
// =========================================================================

/// Subtree label bounds, or `None` for an empty subtree.
fn label_range(t: &LabelledTree) -> Option<(Letter, Letter)> {
    let (m, l, r) = t.parts()?;
    let mut lo = m;
    let mut hi = m;
    if let Some((llo, lhi)) = label_range(l) {
        lo = lo.min(llo);
        hi = hi.max(lhi);
    }
    if let Some((rlo, rhi)) = label_range(r) {
        lo = lo.min(rlo);
        hi = hi.max(rhi);
    }
    Some((lo, hi))
}

/// Checks `left < node ≤ right` at every node.
fn is_left_strict(t: &LabelledTree) -> bool {
    match t.parts() {
        None => true,
        Some((m, l, r)) => {
            label_range(l).is_none_or(|(_, lhi)| lhi < m)
                && label_range(r).is_none_or(|(rlo, _)| rlo >= m)
                && is_left_strict(l)
                && is_left_strict(r)
        }
    }
}

/// Checks `left ≤ node < right` at every node.
fn is_right_strict(t: &LabelledTree) -> bool {
    match t.parts() {
        None => true,
        Some((m, l, r)) => {
            label_range(l).is_none_or(|(_, lhi)| lhi <= m)
                && label_range(r).is_none_or(|(rlo, _)| rlo > m)
                && is_right_strict(l)
                && is_right_strict(r)
        }
    }
}

/// Checks that every node's label exceeds all labels below it and that
/// labels are globally distinct.
fn is_decreasing(t: &LabelledTree) -> bool {
    fn parent_dominates(t: &LabelledTree) -> bool {
        match t.parts() {
            None => true,
            Some((m, l, r)) => {
                label_range(l).is_none_or(|(_, lhi)| lhi < m)
                    && label_range(r).is_none_or(|(_, rhi)| rhi < m)
                    && parent_dominates(l)
                    && parent_dominates(r)
            }
        }
    }
    parent_dominates(t) && labels_distinct(t)
}

/// Dual of [`is_decreasing`].
fn is_increasing(t: &LabelledTree) -> bool {
    fn parent_dominates(t: &LabelledTree) -> bool {
        match t.parts() {
            None => true,
            Some((m, l, r)) => {
                label_range(l).is_none_or(|(llo, _)| llo > m)
                    && label_range(r).is_none_or(|(rlo, _)| rlo > m)
                    && parent_dominates(l)
                    && parent_dominates(r)
            }
        }
    }
    parent_dominates(t) && labels_distinct(t)
}

fn labels_distinct(t: &LabelledTree) -> bool {
    fn collect(t: &LabelledTree, set: &mut BTreeSet<Letter>) -> bool {
        match t.parts() {
            None => true,
            Some((m, l, r)) => set.insert(m) && collect(l, set) && collect(r, set),
        }
    }
    collect(t, &mut BTreeSet::new())
}

macro_rules! validated_tree {
    ($(#[$doc:meta])* $name:ident, $check:ident, $property:literal) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(try_from = "LabelledTree")]
        pub struct $name(LabelledTree);

        impl $name {
            /// Validates the invariant.
            pub fn new(tree: LabelledTree) -> Result<Self, TreeError> {
                if $check(&tree) {
                    Ok($name(tree))
                } else {
                    Err(TreeError::InvalidTree { property: $property })
                }
            }

            /// The underlying tree.
            pub fn tree(&self) -> &LabelledTree {
                &self.0
            }

            /// Consumes the wrapper.
            pub fn into_tree(self) -> LabelledTree {
                self.0
            }
        }

        impl TryFrom<LabelledTree> for $name {
            type Error = TreeError;
            fn try_from(tree: LabelledTree) -> Result<Self, TreeError> {
                $name::new(tree)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

validated_tree!(
    /// A left strict binary search tree: `left < node ≤ right` everywhere.
    LeftStrictBst,
    is_left_strict,
    "a left strict binary search tree"
);
validated_tree!(
    /// A right strict binary search tree: `left ≤ node < right` everywhere.
    RightStrictBst,
    is_right_strict,
    "a right strict binary search tree"
);
validated_tree!(
    /// A decreasing tree: distinct labels, every parent larger than its
    /// descendants.
    DecreasingTree,
    is_decreasing,
    "a decreasing tree"
);
validated_tree!(
    /// An increasing tree: distinct labels, every parent smaller than its
    /// descendants.
    IncreasingTree,
    is_increasing,
    "an increasing tree"
);

// =========================================================================
// Leaf insertion
// =========================================================================

fn insert_left_mut(t: &mut LabelledTree, rec: &mut LabelledTree, a: Letter, tag: Letter) {
    match (&mut t.root, &mut rec.root) {
        (None, None) => {
            *t = LabelledTree::leaf(a);
            *rec = LabelledTree::leaf(tag);
        }
        (Some(n), Some(m)) => {
            if a >= n.label {
                insert_left_mut(&mut n.right, &mut m.right, a, tag);
            } else {
                insert_left_mut(&mut n.left, &mut m.left, a, tag);
            }
        }
        _ => unreachable!("tree and recording tree always share a shape"),
    }
}

fn insert_right_mut(t: &mut LabelledTree, rec: &mut LabelledTree, a: Letter, tag: Letter) {
    match (&mut t.root, &mut rec.root) {
        (None, None) => {
            *t = LabelledTree::leaf(a);
            *rec = LabelledTree::leaf(tag);
        }
        (Some(n), Some(m)) => {
            if a <= n.label {
                insert_right_mut(&mut n.left, &mut m.left, a, tag);
            } else {
                insert_right_mut(&mut n.right, &mut m.right, a, tag);
            }
        }
        _ => unreachable!("tree and recording tree always share a shape"),
    }
}

/// Leaf-inserts `a` into a left strict tree: descend, going right on
/// `a ≥ node` and left otherwise, and become a leaf.
pub fn leaf_insert_left(t: &LeftStrictBst, a: Letter) -> LeftStrictBst {
    let mut tree = t.tree().clone();
    let mut rec = tree.shape_placeholder();
    insert_left_mut(&mut tree, &mut rec, a, 1);
    LeftStrictBst::new(tree).expect("leaf insertion preserves left strictness")
}

/// Leaf-inserts `a` into a right strict tree: descend, going left on
/// `a ≤ node` and right otherwise, and become a leaf.
pub fn leaf_insert_right(a: Letter, t: &RightStrictBst) -> RightStrictBst {
    let mut tree = t.tree().clone();
    let mut rec = tree.shape_placeholder();
    insert_right_mut(&mut tree, &mut rec, a, 1);
    RightStrictBst::new(tree).expect("leaf insertion preserves right strictness")
}

impl LabelledTree {
    /// A same-shaped dummy tree used when a recording tree is not wanted.
    fn shape_placeholder(&self) -> LabelledTree {
        match self.parts() {
            None => LabelledTree::empty(),
            Some((_, l, r)) => LabelledTree::node(1, l.shape_placeholder(), r.shape_placeholder()),
        }
    }
}

/// Inserts `u` left to right into an initially empty left strict tree.
///
/// Returns the tree together with its increasing recording tree: the node
/// created by the `i`-th letter of `u` is labelled `i` in the recording tree.
pub fn insert_left_word(u: &Word) -> (LeftStrictBst, IncreasingTree) {
    let mut tree = LabelledTree::empty();
    let mut rec = LabelledTree::empty();
    for (i, &a) in u.letters().iter().enumerate() {
        insert_left_mut(&mut tree, &mut rec, a, i as Letter + 1);
    }
    (
        LeftStrictBst::new(tree).expect("left-to-right insertion yields a left strict tree"),
        IncreasingTree::new(rec).expect("first-created nodes sit above later ones"),
    )
}

/// Inserts `u` right to left into an initially empty right strict tree.
///
/// Returns the tree together with its decreasing recording tree: the node
/// created by the `i`-th letter of `u` (1-indexed in `u`, so the *last*
/// letter is inserted first) is labelled `i` in the recording tree.
pub fn insert_right_word(u: &Word) -> (RightStrictBst, DecreasingTree) {
    let mut tree = LabelledTree::empty();
    let mut rec = LabelledTree::empty();
    for (i, &a) in u.letters().iter().enumerate().rev() {
        insert_right_mut(&mut tree, &mut rec, a, i as Letter + 1);
    }
    (
        RightStrictBst::new(tree).expect("right-to-left insertion yields a right strict tree"),
        DecreasingTree::new(rec).expect("later positions are inserted first"),
    )
}

// =========================================================================
// Readings
// =========================================================================

/// The infix (left, node, right) reading of the labels.
pub fn infix_reading(t: &LabelledTree) -> Word {
    fn walk(t: &LabelledTree, out: &mut Vec<Letter>) {
        if let Some((m, l, r)) = t.parts() {
            walk(l, out);
            out.push(m);
            walk(r, out);
        }
    }
    let mut out = Vec::with_capacity(t.size());
    walk(t, &mut out);
    Word::new(out).expect("tree labels are letters")
}

/// The postfix (left, right, node) reading of the labels.
pub fn postfix_reading(t: &LabelledTree) -> Word {
    fn walk(t: &LabelledTree, out: &mut Vec<Letter>) {
        if let Some((m, l, r)) = t.parts() {
            walk(l, out);
            walk(r, out);
            out.push(m);
        }
    }
    let mut out = Vec::with_capacity(t.size());
    walk(t, &mut out);
    Word::new(out).expect("tree labels are letters")
}

// =========================================================================
// Decreasing and increasing trees of repeat-free words
// =========================================================================

fn max_position(letters: &[Letter]) -> usize {
    let mut best = 0;
    for (i, &a) in letters.iter().enumerate() {
        if a > letters[best] {
            best = i;
        }
    }
    best
}

fn min_position(letters: &[Letter]) -> usize {
    let mut best = 0;
    for (i, &a) in letters.iter().enumerate() {
        if a < letters[best] {
            best = i;
        }
    }
    best
}

fn has_repeats(u: &Word) -> bool {
    let mut seen = BTreeSet::new();
    u.letters().iter().any(|&a| !seen.insert(a))
}

/// The decreasing tree of a repeat-free word: the maximum letter becomes the
/// root, the prefix before it the left subtree, the suffix the right subtree.
pub fn dectree(u: &Word) -> Result<DecreasingTree, TreeError> {
    if has_repeats(u) {
        return Err(TreeError::RepeatedLetters);
    }
    fn build(letters: &[Letter]) -> LabelledTree {
        if letters.is_empty() {
            return LabelledTree::empty();
        }
        let p = max_position(letters);
        LabelledTree::node(letters[p], build(&letters[..p]), build(&letters[p + 1..]))
    }
    DecreasingTree::new(build(u.letters())).map_err(|_| TreeError::RepeatedLetters)
}

/// The increasing tree of a repeat-free word: the minimum letter becomes the
/// root, the prefix before it the left subtree, the suffix the right subtree.
pub fn inctree(u: &Word) -> Result<IncreasingTree, TreeError> {
    if has_repeats(u) {
        return Err(TreeError::RepeatedLetters);
    }
    fn build(letters: &[Letter]) -> LabelledTree {
        if letters.is_empty() {
            return LabelledTree::empty();
        }
        let p = min_position(letters);
        LabelledTree::node(letters[p], build(&letters[..p]), build(&letters[p + 1..]))
    }
    IncreasingTree::new(build(u.letters())).map_err(|_| TreeError::RepeatedLetters)
}

// =========================================================================
// Canopy and twin pairs
// =========================================================================

/// The canopy of a nonempty tree, as a word over `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanopyWord {
    bits: Vec<u8>,
}

impl CanopyWord {
    /// The bits, leftmost first.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Builds a canopy word from bits (each must be 0 or 1).
    pub fn from_bits(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        CanopyWord { bits }
    }

    /// Whether the two canopies have equal length and differ in every
    /// position.
    pub fn is_complementary(&self, other: &CanopyWord) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a != b)
    }
}

impl fmt::Display for CanopyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The canopy of a nonempty tree.
///
/// Walk the nodes in infix order; a node with an empty left subtree
/// contributes a `1` just before itself, a node with an empty right subtree
/// contributes a `0` just after itself. The first contribution is always `1`
/// and the last always `0`; both are dropped. A tree with `n` nodes thus has
/// a canopy of length `n - 1`.
pub fn canopy(t: &LabelledTree) -> Result<CanopyWord, TreeError> {
    if t.is_empty() {
        return Err(TreeError::EmptyTree);
    }
    fn walk(t: &LabelledTree, out: &mut Vec<u8>) {
        if let Some((_, l, r)) = t.parts() {
            walk(l, out);
            if l.is_empty() {
                out.push(1);
            }
            if r.is_empty() {
                out.push(0);
            }
            walk(r, out);
        }
    }
    let mut bits = Vec::new();
    walk(t, &mut bits);
    debug_assert_eq!(bits.first(), Some(&1));
    debug_assert_eq!(bits.last(), Some(&0));
    bits.remove(0);
    bits.pop();
    Ok(CanopyWord { bits })
}

/// Whether the trees have equal infix readings and complementary canopies.
///
/// The empty pair is twin; a pair of single nodes is twin exactly when the
/// labels agree (length-0 canopies are vacuously complementary).
pub fn is_twin_pair(left: &LeftStrictBst, right: &RightStrictBst) -> bool {
    twin_pair_violation(left, right).is_none()
}

fn twin_pair_violation(left: &LeftStrictBst, right: &RightStrictBst) -> Option<&'static str> {
    if infix_reading(left.tree()) != infix_reading(right.tree()) {
        return Some("infix readings differ");
    }
    if left.tree().is_empty() {
        return None;
    }
    let cl = canopy(left.tree()).expect("nonempty");
    let cr = canopy(right.tree()).expect("nonempty");
    if !cl.is_complementary(&cr) {
        return Some("canopies are not complementary");
    }
    None
}

/// A pair of twin binary search trees: a left strict and a right strict tree
/// with equal infix readings and complementary canopies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TwinPairJson")]
pub struct TwinPair {
    left: LeftStrictBst,
    right: RightStrictBst,
}

#[derive(Deserialize)]
struct TwinPairJson {
    left: LabelledTree,
    right: LabelledTree,
}

impl TryFrom<TwinPairJson> for TwinPair {
    type Error = TreeError;
    fn try_from(json: TwinPairJson) -> Result<Self, TreeError> {
        TwinPair::new(
            LeftStrictBst::new(json.left)?,
            RightStrictBst::new(json.right)?,
        )
    }
}

impl TwinPair {
    /// Validates the twin condition.
    pub fn new(left: LeftStrictBst, right: RightStrictBst) -> Result<Self, TreeError> {
        match twin_pair_violation(&left, &right) {
            None => Ok(TwinPair { left, right }),
            Some(reason) => Err(TreeError::NotTwin { reason }),
        }
    }

    /// The left strict tree.
    pub fn left(&self) -> &LeftStrictBst {
        &self.left
    }

    /// The right strict tree.
    pub fn right(&self) -> &RightStrictBst {
        &self.right
    }

    /// Number of nodes in each tree.
    pub fn size(&self) -> usize {
        self.left.tree().size()
    }
}

/// The shapes of the two trees of a twin pair.
pub fn shape_pair(pair: &TwinPair) -> (Shape, Shape) {
    (pair.left().tree().shape(), pair.right().tree().shape())
}

// =========================================================================
// Interval partitions
// =========================================================================

/// Per-node infix facts: 1-indexed position order with child emptiness.
fn infix_child_flags(t: &LabelledTree) -> Vec<(bool, bool)> {
    fn walk(t: &LabelledTree, out: &mut Vec<(bool, bool)>) {
        if let Some((_, l, r)) = t.parts() {
            walk(l, out);
            out.push((!l.is_empty(), !r.is_empty()));
            walk(r, out);
        }
    }
    let mut out = Vec::with_capacity(t.size());
    walk(t, &mut out);
    out
}

/// The left interval partition of the infix positions `1..=n`.
///
/// Every node whose **left** subtree is nonempty starts a new interval; the
/// first interval starts at position 1. Returned as inclusive 1-indexed
/// `(start, end)` ranges; the empty tree yields no intervals.
pub fn left_interval_partition(t: &LabelledTree) -> Vec<(usize, usize)> {
    let flags = infix_child_flags(t);
    let n = flags.len();
    if n == 0 {
        return Vec::new();
    }
    let mut intervals = Vec::new();
    let mut start = 1;
    for (pos, (has_left, _)) in flags.iter().enumerate().skip(1) {
        if *has_left {
            intervals.push((start, pos));
            start = pos + 1;
        }
    }
    intervals.push((start, n));
    intervals
}

/// The right interval partition of the infix positions `1..=n`.
///
/// Every node whose **right** subtree is nonempty ends its interval; the last
/// interval ends at position `n`. Returned as inclusive 1-indexed
/// `(start, end)` ranges; the empty tree yields no intervals.
pub fn right_interval_partition(t: &LabelledTree) -> Vec<(usize, usize)> {
    let flags = infix_child_flags(t);
    let n = flags.len();
    if n == 0 {
        return Vec::new();
    }
    let mut intervals = Vec::new();
    let mut start = 1;
    for (pos0, (_, has_right)) in flags.iter().enumerate() {
        if *has_right {
            intervals.push((start, pos0 + 1));
            start = pos0 + 2;
        }
    }
    // The infix-last node has an empty right subtree, so an interval is
    // always open here.
    debug_assert!(start <= n);
    intervals.push((start, n));
    intervals
}

// =========================================================================
// Shape fillings
// =========================================================================

/// Which binary search tree condition a filling must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// `left < node ≤ right`.
    Left,
    /// `left ≤ node < right`.
    Right,
}

/// Fills `shape` with the content `w` so that the result is a binary search
/// tree of the requested strictness, if possible.
///
/// Any binary search tree reads weakly increasing in infix order, so the only
/// candidate assigns the sorted content along the infix order; this returns
/// that labelled tree when it satisfies the strictness condition and `None`
/// otherwise (including when `w` has the wrong total).
pub fn fill_shape(shape: &Shape, w: &Weight, strictness: Strictness) -> Option<LabelledTree> {
    if w.total() != shape.size() {
        return None;
    }
    let sorted = w.sorted_word();
    fn build(shape: &Shape, letters: &[Letter]) -> LabelledTree {
        match shape.parts() {
            None => LabelledTree::empty(),
            Some((l, r)) => {
                let k = l.size();
                LabelledTree::node(
                    letters[k],
                    build(l, &letters[..k]),
                    build(r, &letters[k + 1..]),
                )
            }
        }
    }
    let tree = build(shape, sorted.letters());
    let ok = match strictness {
        Strictness::Left => is_left_strict(&tree),
        Strictness::Right => is_right_strict(&tree),
    };
    ok.then_some(tree)
}

// =========================================================================
// Readings of a twin pair
// =========================================================================

/// Removes the root of a forest tree, returning its label and the (nonempty)
/// subtrees that replace it.
fn root_removals(t: &LabelledTree) -> (Letter, Vec<LabelledTree>) {
    let (m, l, r) = t.parts().expect("forest trees are nonempty");
    let mut rest = Vec::new();
    if !l.is_empty() {
        rest.push(l.clone());
    }
    if !r.is_empty() {
        rest.push(r.clone());
    }
    (m, rest)
}

/// All ways to delete one leaf (a node with two empty subtrees): each entry
/// is the deleted label and the remaining tree.
fn leaf_removals(t: &LabelledTree) -> Vec<(Letter, LabelledTree)> {
    match t.parts() {
        None => Vec::new(),
        Some((m, l, r)) => {
            if l.is_empty() && r.is_empty() {
                return vec![(m, LabelledTree::empty())];
            }
            let mut out = Vec::new();
            for (a, l2) in leaf_removals(l) {
                out.push((a, LabelledTree::node(m, l2, r.clone())));
            }
            for (a, r2) in leaf_removals(r) {
                out.push((a, LabelledTree::node(m, l.clone(), r2)));
            }
            out
        }
    }
}

/// One nondeterministic step: all `(symbol, next state)` moves. A move picks
/// a symbol labelling both the root of some forest tree and a leaf of the
/// right tree, deletes that root (its nonempty subtrees join the forest) and
/// that leaf.
fn reading_moves(
    forest: &[LabelledTree],
    right: &LabelledTree,
) -> Vec<(Letter, Vec<LabelledTree>, LabelledTree)> {
    let mut moves = Vec::new();
    let removals = leaf_removals(right);
    for (k, tree) in forest.iter().enumerate() {
        let (a, replacements) = root_removals(tree);
        for (b, right2) in &removals {
            if *b == a {
                let mut forest2: Vec<LabelledTree> = Vec::with_capacity(forest.len() + 1);
                forest2.extend_from_slice(&forest[..k]);
                forest2.extend_from_slice(&forest[k + 1..]);
                forest2.extend(replacements.iter().cloned());
                forest2.sort();
                moves.push((a, forest2, right2.clone()));
            }
        }
    }
    moves
}

type ReadingState = (Vec<LabelledTree>, LabelledTree);

/// All words whose twin pair of binary search trees is `pair`.
///
/// The reading process keeps a forest of left strict trees (initially just
/// the left tree) and the right strict tree; at each step it may output any
/// symbol that is simultaneously the label of a forest root and of a leaf of
/// the right tree, removing both. Different choices yield different words;
/// the union over all maximal runs is returned (sorted lexicographically).
pub fn baxter_class_readings(pair: &TwinPair) -> BTreeSet<Word> {
    fn go(
        forest: Vec<LabelledTree>,
        right: LabelledTree,
        memo: &mut BTreeMap<ReadingState, BTreeSet<Word>>,
    ) -> BTreeSet<Word> {
        if right.is_empty() {
            debug_assert!(forest.is_empty());
            return BTreeSet::from([Word::empty()]);
        }
        let key = (forest, right);
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        for (a, forest2, right2) in reading_moves(&key.0, &key.1) {
            let prefix = Word::new(vec![a]).expect("labels are letters");
            for w in go(forest2, right2, memo) {
                out.insert(prefix.concat(&w));
            }
        }
        memo.insert(key, out.clone());
        out
    }
    let forest = if pair.left().tree().is_empty() {
        Vec::new()
    } else {
        vec![pair.left().tree().clone()]
    };
    go(forest, pair.right().tree().clone(), &mut BTreeMap::new())
}

/// The left-consistent reading of a twin pair: at every step the smallest
/// available symbol (backtracking over tied moves) is chosen. This is the
/// lexicographically smallest element of [`baxter_class_readings`].
pub fn left_consistent_reading(pair: &TwinPair) -> Word {
    fn go(
        forest: Vec<LabelledTree>,
        right: LabelledTree,
        memo: &mut BTreeMap<ReadingState, Option<Word>>,
    ) -> Option<Word> {
        if right.is_empty() {
            return Some(Word::empty());
        }
        let key = (forest, right);
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut moves = reading_moves(&key.0, &key.1);
        moves.sort_by_key(|(a, _, _)| *a);
        let mut best: Option<Word> = None;
        for (a, forest2, right2) in moves {
            if let Some(b) = &best {
                // Moves are sorted by symbol: once a completion starting
                // with a smaller symbol exists, larger symbols cannot win.
                if a > b.letters()[0] {
                    break;
                }
            }
            if let Some(w) = go(forest2, right2, memo) {
                let candidate = Word::new(vec![a]).expect("labels are letters").concat(&w);
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        memo.insert(key, best.clone());
        best
    }
    let forest = if pair.left().tree().is_empty() {
        Vec::new()
    } else {
        vec![pair.left().tree().clone()]
    };
    go(forest, pair.right().tree().clone(), &mut BTreeMap::new())
        .expect("a twin pair always has at least one reading")
}

// =========================================================================
// Counting formulas
// =========================================================================

fn factorial_u128(n: u128) -> u128 {
    (1..=n).fold(1u128, |acc, k| {
        acc.checked_mul(k).expect("factorial overflows u128")
    })
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 1..=k {
        // Exact at every step: acc * (n - k + j) is divisible by j.
        acc = acc.checked_mul(n - k + j).expect("binomial overflows u128") / j;
    }
    acc
}

/// The number of decreasing (equivalently, increasing) labellings of `shape`
/// by `1..=n`: the hook length formula `n! / ∏_v h(v)` where `h(v)` is the
/// number of nodes in the subtree rooted at `v`.
pub fn hook_count(shape: &Shape) -> u128 {
    fn hook_product(shape: &Shape) -> u128 {
        match shape.parts() {
            None => 1,
            Some((l, r)) => {
                let h = shape.size() as u128;
                h.checked_mul(hook_product(l))
                    .and_then(|p| p.checked_mul(hook_product(r)))
                    .expect("hook product overflows u128")
            }
        }
    }
    let n = shape.size() as u128;
    let numerator = factorial_u128(n);
    let denominator = hook_product(shape);
    debug_assert_eq!(numerator % denominator, 0, "hook product divides n!");
    numerator / denominator
}

/// The number of fillings of `shape` by letters `≤ n` forming a right strict
/// binary search tree: with `m` nodes and `ℓ` right intervals this is
/// `C(n − ℓ + m, m)`, and `0` when `ℓ > n`.
pub fn count_fillings(shape: &Shape, n: Letter) -> u128 {
    let m = shape.size() as u128;
    // ℓ is a shape statistic; compute it on any labelling of the shape.
    let ell = match shape.parts() {
        None => 0u128,
        Some(_) => {
            let tree = fill_standard(shape);
            right_interval_partition(&tree).len() as u128
        }
    };
    let n = n as u128;
    if ell > n {
        return 0;
    }
    binomial_u128(n - ell + m, m)
}

/// Labels `shape` with `1..=m` in infix order (always a valid BST of either
/// strictness).
pub(crate) fn fill_standard(shape: &Shape) -> LabelledTree {
    fn build(shape: &Shape, next: &mut Letter) -> LabelledTree {
        match shape.parts() {
            None => LabelledTree::empty(),
            Some((l, r)) => {
                let left = build(l, next);
                let label = *next;
                *next += 1;
                let right = build(r, next);
                LabelledTree::node(label, left, right)
            }
        }
    }
    build(shape, &mut 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::weight;

    fn w(digits: &str) -> Word {
        Word::from_digits(digits).unwrap()
    }

    fn n(label: Letter, left: LabelledTree, right: LabelledTree) -> LabelledTree {
        LabelledTree::node(label, left, right)
    }

    fn lf(label: Letter) -> LabelledTree {
        LabelledTree::leaf(label)
    }

    fn e() -> LabelledTree {
        LabelledTree::empty()
    }

    fn worked_example() -> Word {
        "5 4 5 1 7 6 1 5 2 4".parse().unwrap()
    }

    fn expected_left_tree() -> LabelledTree {
        n(
            5,
            n(4, n(1, e(), n(1, e(), lf(2))), lf(4)),
            n(5, e(), n(7, n(6, lf(5), e()), e())),
        )
    }

    fn expected_right_tree() -> LabelledTree {
        n(
            4,
            n(2, n(1, lf(1), e()), lf(4)),
            n(5, n(5, lf(5), e()), n(6, e(), lf(7))),
        )
    }

    #[test]
    fn insertion_reproduces_the_worked_example() {
        let u = worked_example();
        let (lt, lrec) = insert_left_word(&u);
        let (rt, rrec) = insert_right_word(&u);
        assert_eq!(lt.tree(), &expected_left_tree());
        assert_eq!(rt.tree(), &expected_right_tree());
        // Recording trees: where each position's letter became a leaf.
        let expected_lrec = n(
            1,
            n(2, n(4, e(), n(7, e(), lf(9))), lf(10)),
            n(3, e(), n(5, n(6, lf(8), e()), e())),
        );
        let expected_rrec = n(
            10,
            n(9, n(7, lf(4), e()), lf(2)),
            n(8, n(3, lf(1), e()), n(6, e(), lf(5))),
        );
        assert_eq!(lrec.tree(), &expected_lrec);
        assert_eq!(rrec.tree(), &expected_rrec);
        // The recording trees share the shapes of their insertion trees.
        assert_eq!(lrec.tree().shape(), lt.tree().shape());
        assert_eq!(rrec.tree().shape(), rt.tree().shape());
    }

    #[test]
    fn single_leaf_insertions_match_word_insertion() {
        let u = w("1212");
        let mut lt = LeftStrictBst::new(e()).unwrap();
        for &a in u.letters() {
            lt = leaf_insert_left(&lt, a);
        }
        assert_eq!(&lt, &insert_left_word(&u).0);
        let mut rt = RightStrictBst::new(e()).unwrap();
        for &a in u.letters().iter().rev() {
            rt = leaf_insert_right(a, &rt);
        }
        assert_eq!(&rt, &insert_right_word(&u).0);
        assert_eq!(lt.tree(), &n(1, e(), n(2, lf(1), lf(2))));
        assert_eq!(rt.tree(), &n(2, n(1, lf(1), lf(2)), e()));
    }

    #[test]
    fn readings_of_the_worked_example() {
        let u = worked_example();
        let (lt, _) = insert_left_word(&u);
        let (rt, _) = insert_right_word(&u);
        assert_eq!(
            infix_reading(rt.tree()),
            "1 1 2 4 4 5 5 5 6 7".parse().unwrap()
        );
        assert_eq!(
            infix_reading(lt.tree()),
            "1 1 2 4 4 5 5 5 6 7".parse().unwrap()
        );
        assert_eq!(
            postfix_reading(rt.tree()),
            "1 1 4 2 5 5 7 6 5 4".parse().unwrap()
        );
    }

    #[test]
    fn dectree_and_inctree_follow_the_extremal_letter() {
        let d = dectree(&w("1423")).unwrap();
        assert_eq!(d.tree(), &n(4, lf(1), n(3, lf(2), e())));
        let d2 = dectree(&w("2413")).unwrap();
        assert_eq!(d2.tree(), &n(4, lf(2), n(3, lf(1), e())));
        assert_eq!(d.tree().shape(), d2.tree().shape());
        let d3 = dectree(&w("1324")).unwrap();
        assert_eq!(d3.tree(), &n(4, n(3, lf(1), lf(2)), e()));
        assert_ne!(d.tree().shape(), d3.tree().shape());

        let i = inctree(&w("1423")).unwrap();
        assert_eq!(i.tree(), &n(1, e(), n(2, lf(4), lf(3))));
        let i2 = inctree(&w("2413")).unwrap();
        assert_eq!(i2.tree(), &n(1, n(2, e(), lf(4)), lf(3)));
        assert_ne!(i.tree().shape(), i2.tree().shape());

        assert_eq!(dectree(&w("11")), Err(TreeError::RepeatedLetters));
        assert!(dectree(&Word::empty()).unwrap().tree().is_empty());
    }

    #[test]
    fn recording_trees_are_inverse_standardized_extremal_trees() {
        use crate::words::{invert, standardize};
        let u = worked_example();
        let inv = invert(&standardize(&u));
        assert_eq!(inv.word(), &"4 7 9 2 10 1 3 8 6 5".parse().unwrap());
        let (_, lrec) = insert_left_word(&u);
        let (_, rrec) = insert_right_word(&u);
        assert_eq!(inctree(inv.word()).unwrap().tree(), lrec.tree());
        assert_eq!(dectree(inv.word()).unwrap().tree(), rrec.tree());
    }

    #[test]
    fn canopy_of_the_worked_example() {
        let u = worked_example();
        let (lt, _) = insert_left_word(&u);
        let (rt, _) = insert_right_word(&u);
        let cl = canopy(lt.tree()).unwrap();
        let cr = canopy(rt.tree()).unwrap();
        assert_eq!(cl.to_string(), "110101100");
        assert_eq!(cr.to_string(), "001010011");
        assert!(cl.is_complementary(&cr));
        assert!(is_twin_pair(&lt, &rt));
    }

    #[test]
    fn canopy_small_cases() {
        assert_eq!(canopy(&e()), Err(TreeError::EmptyTree));
        assert_eq!(canopy(&lf(3)).unwrap().bits(), &[] as &[u8]);
        // Chain of left children: 1 0 0 trimmed to "0".
        assert_eq!(canopy(&n(2, lf(1), e())).unwrap().to_string(), "0");
        // Chain of right children: 1 1 0 trimmed to "1".
        assert_eq!(canopy(&n(1, e(), lf(2))).unwrap().to_string(), "1");
        assert_eq!(canopy(&n(2, lf(1), lf(3))).unwrap().to_string(), "01");
    }

    #[test]
    fn twin_pair_validation() {
        let u = w("2112");
        let (lt, _) = insert_left_word(&u);
        let (rt, _) = insert_right_word(&u);
        assert!(TwinPair::new(lt, rt).is_ok());
        // Mismatched content fails on the infix reading.
        let (lt, _) = insert_left_word(&w("12"));
        let (rt, _) = insert_right_word(&w("11"));
        assert_eq!(
            TwinPair::new(lt, rt),
            Err(TreeError::NotTwin {
                reason: "infix readings differ"
            })
        );
        // Same content, non-complementary canopies: both trees are the
        // 2-node left chain 2(1, ·), valid for either strictness.
        let chain = n(2, lf(1), e());
        let lt = LeftStrictBst::new(chain.clone()).unwrap();
        let rt = RightStrictBst::new(chain).unwrap();
        assert_eq!(
            TwinPair::new(lt, rt),
            Err(TreeError::NotTwin {
                reason: "canopies are not complementary"
            })
        );
        // Empty and singleton pairs are twin.
        let lt = LeftStrictBst::new(e()).unwrap();
        let rt = RightStrictBst::new(e()).unwrap();
        assert!(TwinPair::new(lt, rt).is_ok());
        let lt = LeftStrictBst::new(lf(7)).unwrap();
        let rt = RightStrictBst::new(lf(7)).unwrap();
        assert!(TwinPair::new(lt, rt).is_ok());
    }

    #[test]
    fn interval_partitions_of_the_worked_example() {
        let u = worked_example();
        let (rt, _) = insert_right_word(&u);
        assert_eq!(
            right_interval_partition(rt.tree()),
            vec![(1, 3), (4, 5), (6, 8), (9, 9), (10, 10)]
        );
        assert_eq!(
            left_interval_partition(rt.tree()),
            vec![(1, 1), (2, 2), (3, 4), (5, 6), (7, 7), (8, 10)]
        );
    }

    #[test]
    fn interval_partitions_of_combs() {
        // Chain of left children (3 nodes): no nonempty right subtree, one
        // right interval; every non-root node starts a left interval.
        let left_comb = n(3, n(2, lf(1), e()), e());
        assert_eq!(right_interval_partition(&left_comb), vec![(1, 3)]);
        assert_eq!(
            left_interval_partition(&left_comb),
            vec![(1, 1), (2, 2), (3, 3)]
        );
        // Chain of right children: mirrored.
        let right_comb = n(1, e(), n(2, e(), lf(3)));
        assert_eq!(
            right_interval_partition(&right_comb),
            vec![(1, 1), (2, 2), (3, 3)]
        );
        assert_eq!(left_interval_partition(&right_comb), vec![(1, 3)]);
        // Empty tree has no intervals.
        assert_eq!(right_interval_partition(&e()), vec![]);
        assert_eq!(left_interval_partition(&e()), vec![]);
    }

    #[test]
    fn validated_wrappers_reject_violations() {
        assert!(LeftStrictBst::new(n(2, lf(1), e())).is_ok());
        assert!(LeftStrictBst::new(n(2, lf(2), e())).is_err());
        assert!(LeftStrictBst::new(n(2, e(), lf(2))).is_ok());
        assert!(RightStrictBst::new(n(2, lf(2), e())).is_ok());
        assert!(RightStrictBst::new(n(2, e(), lf(2))).is_err());
        assert!(DecreasingTree::new(n(3, lf(1), lf(2))).is_ok());
        assert!(DecreasingTree::new(n(3, lf(1), lf(1))).is_err());
        assert!(DecreasingTree::new(n(1, lf(2), e())).is_err());
        assert!(IncreasingTree::new(n(1, lf(2), lf(3))).is_ok());
        assert!(IncreasingTree::new(n(2, lf(1), e())).is_err());
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let t = expected_right_tree();
        let json = serde_json::to_string(&t).unwrap();
        let back: LabelledTree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let parsed: LabelledTree = serde_json::from_str(
            r#"{"label": 2, "left": {"label": 1, "left": null, "right": null}, "right": null}"#,
        )
        .unwrap();
        assert_eq!(parsed, n(2, lf(1), e()));
        let empty: LabelledTree = serde_json::from_str("null").unwrap();
        assert!(empty.is_empty());
        // Shapes read the same schema, labels optional and ignored.
        let s: Shape = serde_json::from_str(
            r#"{"left": null, "right": {"label": 9, "left": null, "right": null}}"#,
        )
        .unwrap();
        assert_eq!(s, Shape::node(Shape::empty(), Shape::leaf()));
        assert_eq!(
            serde_json::to_string(&Shape::leaf()).unwrap(),
            r#"{"left":null,"right":null}"#
        );
        // Validated wrappers re-check on the way in.
        let bad: Result<RightStrictBst, _> = serde_json::from_str(
            r#"{"label": 1, "left": null, "right": {"label": 1, "left": null, "right": null}}"#,
        );
        assert!(bad.is_err());
        let good: RightStrictBst = serde_json::from_str(
            r#"{"label": 1, "left": {"label": 1, "left": null, "right": null}, "right": null}"#,
        )
        .unwrap();
        assert_eq!(good.tree(), &n(1, lf(1), e()));
    }

    #[test]
    fn fill_shape_assigns_sorted_content_in_infix_order() {
        // Shape of the 2-node left chain.
        let s = Shape::node(Shape::leaf(), Shape::empty());
        assert_eq!(
            fill_shape(&s, &weight(&w("12")), Strictness::Right),
            Some(n(2, lf(1), e()))
        );
        assert_eq!(
            fill_shape(&s, &weight(&w("11")), Strictness::Right),
            Some(n(1, lf(1), e()))
        );
        // A repeated letter cannot sit strictly below-left in a left strict
        // tree.
        assert_eq!(fill_shape(&s, &weight(&w("11")), Strictness::Left), None);
        // Right chain needs a strict rise for right strictness.
        let s = Shape::node(Shape::empty(), Shape::leaf());
        assert_eq!(fill_shape(&s, &weight(&w("11")), Strictness::Right), None);
        assert_eq!(
            fill_shape(&s, &weight(&w("11")), Strictness::Left),
            Some(n(1, e(), lf(1)))
        );
        // Size mismatch: no filling.
        assert_eq!(fill_shape(&s, &weight(&w("123")), Strictness::Left), None);
        // Empty shape, empty content.
        assert_eq!(
            fill_shape(&Shape::empty(), &weight(&Word::empty()), Strictness::Right),
            Some(e())
        );
    }

    #[test]
    fn shape_enumeration_is_catalan() {
        assert_eq!(Shape::enumerate(0).len(), 1);
        assert_eq!(Shape::enumerate(1).len(), 1);
        assert_eq!(Shape::enumerate(2).len(), 2);
        assert_eq!(Shape::enumerate(3).len(), 5);
        assert_eq!(Shape::enumerate(4).len(), 14);
        assert_eq!(Shape::enumerate(5).len(), 42);
    }

    #[test]
    fn baxter_readings_recover_exactly_the_compatible_words() {
        // 1212 is alone in its class: every reading step is forced.
        let (lt, _) = insert_left_word(&w("1212"));
        let (rt, _) = insert_right_word(&w("1212"));
        let pair = TwinPair::new(lt, rt).unwrap();
        let class = baxter_class_readings(&pair);
        assert_eq!(class, BTreeSet::from([w("1212")]));
        assert_eq!(left_consistent_reading(&pair), w("1212"));
        // 2211 and 2121 share their twin pair.
        let (lt, _) = insert_left_word(&w("2211"));
        let (rt, _) = insert_right_word(&w("2211"));
        let pair = TwinPair::new(lt, rt).unwrap();
        let class = baxter_class_readings(&pair);
        assert_eq!(class, BTreeSet::from([w("2121"), w("2211")]));
        assert_eq!(left_consistent_reading(&pair), w("2121"));
        // Empty pair reads the empty word.
        let pair = TwinPair::new(
            LeftStrictBst::new(e()).unwrap(),
            RightStrictBst::new(e()).unwrap(),
        )
        .unwrap();
        assert_eq!(
            baxter_class_readings(&pair),
            BTreeSet::from([Word::empty()])
        );
        assert_eq!(left_consistent_reading(&pair), Word::empty());
    }

    #[test]
    fn hook_counts() {
        assert_eq!(hook_count(&Shape::empty()), 1);
        assert_eq!(hook_count(&Shape::leaf()), 1);
        // Both 2-node shapes are chains: a single decreasing labelling.
        assert_eq!(hook_count(&Shape::node(Shape::leaf(), Shape::empty())), 1);
        // Root with two children: 3!/(3·1·1) = 2.
        assert_eq!(hook_count(&Shape::node(Shape::leaf(), Shape::leaf())), 2);
        // Right comb with 3 nodes: hooks 3, 2, 1.
        let comb3 = Shape::node(Shape::empty(), Shape::node(Shape::empty(), Shape::leaf()));
        assert_eq!(hook_count(&comb3), 1);
        // A 4-node shape: root with a 2-chain left and a leaf right
        // has hooks 4, 2, 1, 1 → 4!/8 = 3.
        let s = Shape::node(Shape::node(Shape::leaf(), Shape::empty()), Shape::leaf());
        assert_eq!(hook_count(&s), 3);
    }

    #[test]
    fn filling_counts() {
        // Empty shape: one (empty) filling whatever the alphabet.
        assert_eq!(count_fillings(&Shape::empty(), 0), 1);
        assert_eq!(count_fillings(&Shape::empty(), 5), 1);
        // Single node: n fillings.
        assert_eq!(count_fillings(&Shape::leaf(), 4), 4);
        // Left chain of 2 (ℓ = 1): pairs a ≤ b.
        let lchain = Shape::node(Shape::leaf(), Shape::empty());
        assert_eq!(count_fillings(&lchain, 1), 1);
        assert_eq!(count_fillings(&lchain, 3), 6);
        // Right chain of 2 (ℓ = 2): strictly increasing pairs; zero when the
        // alphabet has fewer letters than intervals.
        let rchain = Shape::node(Shape::empty(), Shape::leaf());
        assert_eq!(count_fillings(&rchain, 1), 0);
        assert_eq!(count_fillings(&rchain, 3), 3);
    }

    #[test]
    fn display_renders_ascii_art() {
        let t = n(2, lf(1), e());
        let rendered = t.to_string();
        assert_eq!(rendered, "2\n+-L 1\n|   +-L .\n|   `-R .\n`-R .");
        assert_eq!(e().to_string(), ".");
    }
}
