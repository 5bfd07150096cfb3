//! Words over the positive integers and their basic statistics.
//!
//! A [`Word`] is a finite (possibly empty) sequence of letters from
//! `{1, 2, 3, …}`. This module provides:
//!
//! * [`weight`] — the content of a word: how many times each letter occurs;
//! * [`standardize`] — the standard word recording the relative order of the
//!   letters, ties broken left to right;
//! * [`invert`] — the inverse of a standard word viewed as a permutation in
//!   one-line notation;
//! * [`descent_set`] / [`descent_composition`] — descents of a word and the
//!   composition they cut out of its length.
//!
//! The text syntax for words is space-separated decimal letters, with `-`
//! denoting the empty word (`"3 1 2"`, `"-"`). [`Word::from_digits`] offers a
//! compact constructor for words over `{1, …, 9}` used pervasively in tests.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A letter: a positive integer. The value `0` is never a letter.
pub type Letter = u32;

/// Errors arising when constructing or parsing words.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    /// A letter was zero (letters are positive integers).
    #[error("letters must be positive integers, found 0")]
    ZeroLetter,
    /// A token in the text form was not a decimal integer.
    #[error("invalid letter token {token:?}")]
    BadToken {
        /// The offending token.
        token: String,
    },
    /// A word was required to be standard (a permutation of `1..=n`) but
    /// is not.
    #[error("word is not standard: expected a permutation of 1..={n}")]
    NotStandard {
        /// Length of the offending word.
        n: usize,
    },
}

/// A word over the positive integers.
///
/// Words order lexicographically letter by letter (a proper prefix sorts
/// before its extensions), which is the order used everywhere a sorted set of
/// words is produced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from letters, rejecting the non-letter `0`.
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.contains(&0) {
            return Err(WordError::ZeroLetter);
        }
        Ok(Word { letters })
    }

    /// Builds a word from letters already known to be positive.
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&a| a > 0));
        Word { letters }
    }

    /// Builds a word from a string of decimal digits, one letter per digit.
    ///
    /// Only letters `1..=9` can be written this way; it exists because short
    /// words over a small alphabet (`"2111"`, `"1212"`) are ubiquitous in
    /// examples and tests.
    pub fn from_digits(digits: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(digits.len());
        for c in digits.chars() {
            let d = c.to_digit(10).ok_or_else(|| WordError::BadToken {
                token: c.to_string(),
            })?;
            if d == 0 {
                return Err(WordError::ZeroLetter);
            }
            letters.push(d);
        }
        Ok(Word { letters })
    }

    /// The letters, in order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The largest letter, or `0` for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Compact rendering: digits concatenated when all letters are ≤ 9
    /// (`1212`), canonical space-separated syntax otherwise; `-` when empty.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else if self.max_letter() <= 9 {
            self.letters.iter().map(|a| a.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Word {
    /// Canonical text syntax: space-separated letters, `-` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for a in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses the canonical text syntax (space-separated letters, `-` empty).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let a: Letter = token.parse().map_err(|_| WordError::BadToken {
                token: token.to_string(),
            })?;
            if a == 0 {
                return Err(WordError::ZeroLetter);
            }
            letters.push(a);
        }
        Ok(Word { letters })
    }
}

/// A standard word: a permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardWord(Word);

impl StandardWord {
    /// Validates that `word` is a permutation of `1..=n`.
    pub fn new(word: Word) -> Result<Self, WordError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &a in word.letters() {
            let idx = a as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return Err(WordError::NotStandard { n });
            }
            seen[idx - 1] = true;
        }
        Ok(StandardWord(word))
    }

    /// The underlying word.
    pub fn word(&self) -> &Word {
        &self.0
    }

    /// Consumes the wrapper.
    pub fn into_word(self) -> Word {
        self.0
    }
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The weight (content) of a word: entry `i` counts occurrences of letter
/// `i + 1`. Trailing zeroes are trimmed so equal contents compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    /// Builds a weight from raw counts, trimming trailing zeroes.
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight { counts }
    }

    /// Occurrence counts of letters `1, 2, …` (trailing zeroes trimmed).
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.counts.get(letter as usize - 1).copied().unwrap_or(0)
    }

    /// Total number of letters.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The weakly increasing word with this content
    /// (`(1,0,2)` ↦ `1 3 3`).
    pub fn sorted_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total());
        for (i, &c) in self.counts.iter().enumerate() {
            letters.extend(std::iter::repeat_n(i as Letter + 1, c));
        }
        Word { letters }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A composition: an ordered tuple of positive part sizes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Builds a composition; all parts must be positive.
    pub fn new(parts: Vec<usize>) -> Self {
        debug_assert!(
            parts.iter().all(|&p| p > 0),
            "composition parts must be positive"
        );
        Composition { parts }
    }

    /// The parts, in order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The weight of `u`: how many times each letter occurs.
pub fn weight(u: &Word) -> Weight {
    let mut counts = vec![0usize; u.max_letter() as usize];
    for &a in u.letters() {
        counts[a as usize - 1] += 1;
    }
    Weight::from_counts(counts)
}

/// The standardization of `u`.
///
/// Letters are renumbered `1..=n` by value, equal letters from left to right:
/// the occurrences of the smallest letter become `1, 2, …` in reading order,
/// then the occurrences of the next letter continue the numbering, and so on.
/// `std(u)` is a standard word of the same length, and `std(std(u)) = std(u)`.
pub fn standardize(u: &Word) -> StandardWord {
    let n = u.len();
    // Positions sorted by (letter value, position) give the renumbering order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (u.letters()[p], p));
    let mut letters = vec![0 as Letter; n];
    for (rank, &pos) in order.iter().enumerate() {
        letters[pos] = rank as Letter + 1;
    }
    StandardWord(Word { letters })
}

/// The inverse of a standard word, viewing it as a permutation in one-line
/// notation: if `p` sends `i ↦ p_i` then `invert(p)` sends `p_i ↦ i`.
pub fn invert(p: &StandardWord) -> StandardWord {
    let n = p.word().len();
    let mut letters = vec![0 as Letter; n];
    for (i, &v) in p.word().letters().iter().enumerate() {
        letters[v as usize - 1] = i as Letter + 1;
    }
    StandardWord(Word { letters })
}

/// The descent set of `u`: the (1-indexed) positions `i` with `u_i > u_{i+1}`.
pub fn descent_set(u: &Word) -> BTreeSet<usize> {
    u.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// The descent composition of `u`: the composition of `|u|` whose partial
/// sums are the descent positions. The empty word yields the empty
/// composition.
pub fn descent_composition(u: &Word) -> Composition {
    if u.is_empty() {
        return Composition::default();
    }
    let mut parts = Vec::new();
    let mut prev = 0usize;
    for d in descent_set(u) {
        parts.push(d - prev);
        prev = d;
    }
    parts.push(u.len() - prev);
    Composition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(digits: &str) -> Word {
        Word::from_digits(digits).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let u: Word = "3 1 2".parse().unwrap();
        assert_eq!(u.letters(), &[3, 1, 2]);
        assert_eq!(u.to_string(), "3 1 2");
        let e: Word = "-".parse().unwrap();
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "-");
        let big: Word = "10 2 11".parse().unwrap();
        assert_eq!(big.to_string(), "10 2 11");
        assert_eq!(big.compact(), "10 2 11");
        assert_eq!(w("1212").compact(), "1212");
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert_eq!("0 1".parse::<Word>(), Err(WordError::ZeroLetter));
        assert!(matches!(
            "1 x".parse::<Word>(),
            Err(WordError::BadToken { .. })
        ));
        assert_eq!(Word::new(vec![1, 0]), Err(WordError::ZeroLetter));
    }

    #[test]
    fn weight_counts_letters_and_trims() {
        assert_eq!(weight(&w("3113")).counts(), &[2, 0, 2]);
        assert_eq!(weight(&w("11")).counts(), &[2]);
        assert_eq!(weight(&Word::empty()).counts(), &[] as &[usize]);
        // Equal content compares equal regardless of how it was built.
        assert_eq!(weight(&w("12")), Weight::from_counts(vec![1, 1, 0, 0]));
        assert_eq!(weight(&w("133")).sorted_word(), w("133"));
    }

    #[test]
    fn standardize_matches_worked_example() {
        // Ties broken left to right: the two 5s become 6 and 7, etc.
        let u: Word = "5 4 5 1 7 6 1 5 2 4".parse().unwrap();
        assert_eq!(
            standardize(&u).word(),
            &"6 4 7 1 10 9 2 8 3 5".parse().unwrap()
        );
    }

    #[test]
    fn standardize_small_cases() {
        assert_eq!(standardize(&w("1322")).word(), &w("1423"));
        assert_eq!(standardize(&w("1323")).word(), &w("1324"));
        assert_eq!(standardize(&w("1221")).word(), &w("1342"));
        assert_eq!(standardize(&w("2121")).word(), &w("3142"));
        assert_eq!(standardize(&w("1212")).word(), &w("1324"));
        assert_eq!(standardize(&Word::empty()).word(), &Word::empty());
    }

    #[test]
    fn standardize_is_idempotent_on_examples() {
        for digits in ["1322", "2111", "332211", "1"] {
            let s = standardize(&w(digits));
            assert_eq!(standardize(s.word()), s);
        }
    }

    #[test]
    fn invert_is_an_involution() {
        let p = standardize(&"5 4 5 1 7 6 1 5 2 4".parse().unwrap());
        let q = invert(&p);
        assert_eq!(q.word(), &"4 7 9 2 10 1 3 8 6 5".parse().unwrap());
        assert_eq!(invert(&q), p);
    }

    #[test]
    fn standard_word_validation() {
        assert!(StandardWord::new(w("3142")).is_ok());
        assert!(StandardWord::new(w("1322")).is_err());
        assert!(StandardWord::new(w("12")).is_ok());
        assert!(StandardWord::new(w("22")).is_err());
        assert!(StandardWord::new(Word::empty()).is_ok());
    }

    #[test]
    fn descents() {
        let u: Word = "5 4 5 1 7 6 1 5 2 4".parse().unwrap();
        assert_eq!(descent_set(&u), BTreeSet::from([1, 3, 5, 6, 8]));
        assert_eq!(descent_composition(&u).parts(), &[1, 2, 2, 1, 2, 2]);
        assert_eq!(descent_set(&w("1122")), BTreeSet::new());
        assert_eq!(descent_composition(&w("1122")).parts(), &[4]);
        assert_eq!(descent_composition(&Word::empty()).parts(), &[] as &[usize]);
        // Weak rises are not descents.
        assert_eq!(descent_set(&w("1212")), BTreeSet::from([2]));
    }
}
