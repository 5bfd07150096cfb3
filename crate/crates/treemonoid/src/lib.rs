//! Monoids of binary trees and their crystal-type structure.
//!
//! This crate implements the combinatorics of the **sylvester** and **Baxter**
//! monoids — plactic-like monoids whose elements are (pairs of) binary search
//! trees — together with the crystal and quasi-crystal operators that organise
//! words into graph components mirroring the congruence classes:
//!
//! * [`words`] — words over the positive integers: weight, standardization,
//!   inverses of standard words, descents.
//! * [`operators`] — the Kashiwara crystal operators `ẽ_i`, `f̃_i` (in the
//!   suffix/mirror convention) and their quasi-crystal analogues `ë_i`, `f̈_i`.
//! * [`trees`] — binary search tree insertion (leaf insertion from either
//!   side), recording trees, decreasing/increasing trees of repeat-free words,
//!   canopies and twin pairs, interval partitions, tree shapes and their
//!   fillings, nondeterministic readings of twin pairs, and the two counting
//!   formulas (hook-length products and bounded-alphabet filling counts).
//! * [`congruence`] — P- and Q-symbols for the plactic, sylvester and Baxter
//!   monoids, the descent characterization of the hypoplactic congruence,
//!   shape invariants, rewriting systems, multi-route congruence decision,
//!   factorization counting, and identity checking.
//! * [`graphs`] — bounded crystal / quasi-crystal graph components, pinned
//!   (basepoint-respecting) isomorphism, the graph route to congruence, and
//!   DOT export.
//! * [`verify`] — the self-test suite: every check the CLI `selftest` verb and
//!   the acceptance test target run, with independently coded oracles.
//!
//! Conventions used throughout:
//!
//! * Letters are positive integers (`1, 2, 3, …`); the alphabet is unbounded
//!   unless an operation takes an explicit bound.
//! * Positions in words are 1-indexed in every public description (descent
//!   sets, interval partitions); slices inside the implementation are
//!   0-indexed as usual.
//! * Left-strict binary search trees put strictly smaller labels in the left
//!   subtree (`left < node ≤ right`); right-strict trees put strictly larger
//!   labels in the right subtree (`left ≤ node < right`).

pub mod congruence;
pub mod graphs;
pub mod operators;
pub mod trees;
pub mod verify;
pub mod words;

pub use congruence::{EquivMethod, MonoidKind};
pub use graphs::GraphKind;
pub use trees::{LabelledTree, Shape};
pub use verify::{CriterionOutcome, SuiteSize};
pub use words::{Letter, Word};
