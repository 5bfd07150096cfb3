//! Crystal and quasi-crystal operators on words.
//!
//! For each index `i ≥ 1` the crystal operators `ẽ_i` (raising, lowers a
//! letter `i + 1` to `i`) and `f̃_i` (lowering, raises a letter `i` to
//! `i + 1`) are partial maps on words. They are defined here in the
//! *suffix* convention — the mirror image of the classical tensor-product
//! rule — which is characterised by the recursion base `ẽ_i(i+1) = i`,
//! `f̃_i(i) = i+1` together with
//!
//! ```text
//! ẽ_i(uv) = ẽ_i(u)·v  if ε_i(u) > φ_i(v), else u·ẽ_i(v)
//! f̃_i(uv) = f̃_i(u)·v  if ε_i(u) ≥ φ_i(v), else u·f̃_i(v)
//! ```
//!
//! The closed form implemented below is the bracket (signature) rule: read
//! the word left to right treating each letter `i + 1` as an opening bracket
//! and each letter `i` as a closing bracket, and cancel matched pairs. The
//! unmatched closing brackets all precede the unmatched opening brackets;
//! with `a` unmatched letters `i` and `b` unmatched letters `i + 1`,
//!
//! * `φ_i = a` and `f̃_i` raises the **rightmost** unmatched `i`;
//! * `ε_i = b` and `ẽ_i` lowers the **leftmost** unmatched `i + 1`.
//!
//! (The classical convention would act on the leftmost/rightmost unmatched
//! letter the other way round; the two conventions agree on which words are
//! connected, not on which edges exist.)
//!
//! The quasi-crystal operators `ë_i`, `f̈_i` are more restrictive: whenever
//! the word contains `i + 1` somewhere **before** an `i` (a subsequence
//! `(i+1)·…·i`), both are undefined; otherwise `ë_i` lowers the leftmost
//! `i + 1` and `f̈_i` raises the rightmost `i`. Where defined they are
//! mutually inverse, and — unlike the crystal operators — they commute with
//! standardization.

use crate::words::{Letter, Word};

/// Result of applying a partial operator: `None` means *undefined*.
pub type OperatorResult = Option<Word>;

/// Positions (0-indexed) of unmatched letters for index `i` after bracket
/// cancellation: `low` holds unmatched letters `i`, `high` unmatched letters
/// `i + 1`. Every position in `low` precedes every position in `high`.
struct BracketScan {
    low: Vec<usize>,
    high: Vec<usize>,
}

fn bracket_scan(u: &Word, i: Letter) -> BracketScan {
    assert!(i >= 1, "operator index must be at least 1");
    let mut low = Vec::new();
    let mut high = Vec::new();
    for (p, &a) in u.letters().iter().enumerate() {
        if a == i + 1 {
            high.push(p);
        } else if a == i {
            // A letter i closes the most recent unmatched i + 1, if any.
            if high.pop().is_none() {
                low.push(p);
            }
        }
    }
    BracketScan { low, high }
}

fn with_letter(u: &Word, pos: usize, a: Letter) -> Word {
    let mut letters = u.letters().to_vec();
    letters[pos] = a;
    Word::from_vec_unchecked(letters)
}

/// The crystal raising operator `ẽ_i`: lowers the leftmost unmatched `i + 1`
/// to `i`; undefined when every `i + 1` is matched.
pub fn e_crystal(u: &Word, i: Letter) -> OperatorResult {
    let scan = bracket_scan(u, i);
    scan.high.first().map(|&p| with_letter(u, p, i))
}

/// The crystal lowering operator `f̃_i`: raises the rightmost unmatched `i`
/// to `i + 1`; undefined when every `i` is matched.
pub fn f_crystal(u: &Word, i: Letter) -> OperatorResult {
    let scan = bracket_scan(u, i);
    scan.low.last().map(|&p| with_letter(u, p, i + 1))
}

/// `ε_i(u)`: the number of times `ẽ_i` can be applied in succession.
pub fn eps_crystal(u: &Word, i: Letter) -> usize {
    bracket_scan(u, i).high.len()
}

/// `φ_i(u)`: the number of times `f̃_i` can be applied in succession.
pub fn phi_crystal(u: &Word, i: Letter) -> usize {
    bracket_scan(u, i).low.len()
}

/// Whether `u` contains a subsequence `(i+1) … i` (an `i + 1` strictly
/// before some `i`), which blocks both quasi-crystal operators for index `i`.
fn has_inversion_pattern(u: &Word, i: Letter) -> bool {
    let mut seen_high = false;
    for &a in u.letters() {
        if a == i + 1 {
            seen_high = true;
        } else if a == i && seen_high {
            return true;
        }
    }
    false
}

/// The quasi-crystal raising operator `ë_i`: undefined if `u` has a
/// subsequence `(i+1) … i`; otherwise lowers the leftmost `i + 1` to `i`
/// (undefined when there is none).
pub fn e_quasi(u: &Word, i: Letter) -> OperatorResult {
    assert!(i >= 1, "operator index must be at least 1");
    if has_inversion_pattern(u, i) {
        return None;
    }
    u.letters()
        .iter()
        .position(|&a| a == i + 1)
        .map(|p| with_letter(u, p, i))
}

/// The quasi-crystal lowering operator `f̈_i`: undefined if `u` has a
/// subsequence `(i+1) … i`; otherwise raises the rightmost `i` to `i + 1`
/// (undefined when there is none).
pub fn f_quasi(u: &Word, i: Letter) -> OperatorResult {
    assert!(i >= 1, "operator index must be at least 1");
    if has_inversion_pattern(u, i) {
        return None;
    }
    u.letters()
        .iter()
        .rposition(|&a| a == i)
        .map(|p| with_letter(u, p, i + 1))
}

/// Whether no crystal raising operator is defined on `u`.
pub fn is_highest_weight_crystal(u: &Word) -> bool {
    (1..=u.max_letter()).all(|i| e_crystal(u, i).is_none())
}

/// Whether no quasi-crystal raising operator is defined on `u`.
pub fn is_highest_weight_quasi(u: &Word) -> bool {
    (1..=u.max_letter()).all(|i| e_quasi(u, i).is_none())
}
