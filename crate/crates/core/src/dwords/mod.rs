//! Digit words: eventually periodic infinite words, anchored expansions,
//! the lexicographic and alternate orders, and admissibility.

mod admissible;
mod text;

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

pub use admissible::{
    forbidden_scan, is_admissible_neg, is_admissible_pos, is_expansion_admissible, is_expansion_admissible_neg,
    Forbidden, ForbiddenKind, ScanError,
};
pub use text::{format_expansion, format_word, parse_expansion, DigitText, ParseError};

pub type Digit = u32;

/// An eventually periodic word `u·v^ω`.
///
/// An empty period stands for `0^ω`. Values are kept canonical: the period is
/// primitive, the preperiod is as short as possible, and a `0^ω` tail carries
/// no trailing zeros in the preperiod.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EPWord {
    pre: Vec<Digit>,
    per: Vec<Digit>,
}

impl EPWord {
    pub fn new(pre: Vec<Digit>, per: Vec<Digit>) -> Self {
        let mut w = EPWord { pre, per };
        w.canonicalize();
        w
    }

    /// `digits·0^ω`
    pub fn finite(digits: Vec<Digit>) -> Self {
        Self::new(digits, Vec::new())
    }

    /// `0^ω`
    pub fn zero() -> Self {
        EPWord::default()
    }

    fn canonicalize(&mut self) {
        if let Some(p) = primitive_root_len(&self.per) {
            self.per.truncate(p);
        }
        if self.per.iter().all(|&d| d == 0) {
            self.per.clear();
        }
        if self.per.is_empty() {
            while self.pre.last() == Some(&0) {
                self.pre.pop();
            }
        } else {
            while !self.pre.is_empty() && self.pre.last() == self.per.last() {
                self.pre.pop();
                self.per.rotate_right(1);
            }
        }
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.pre
    }

    /// The period; empty means the word ends in `0^ω`.
    pub fn period(&self) -> &[Digit] {
        &self.per
    }

    pub fn is_finite(&self) -> bool {
        self.per.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.pre.is_empty() && self.per.is_empty()
    }

    /// Symbol at index `i` (0-based).
    pub fn at(&self, i: usize) -> Digit {
        if i < self.pre.len() {
            self.pre[i]
        } else if self.per.is_empty() {
            0
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    /// The first `n` symbols.
    pub fn take(&self, n: usize) -> Vec<Digit> {
        (0..n).map(|i| self.at(i)).collect()
    }

    pub fn max_digit(&self) -> Digit {
        self.pre.iter().chain(&self.per).copied().max().unwrap_or(0)
    }

    /// `d·self`
    pub fn prepend(&self, d: Digit) -> Self {
        let mut pre = Vec::with_capacity(self.pre.len() + 1);
        pre.push(d);
        pre.extend_from_slice(&self.pre);
        Self::new(pre, self.per.clone())
    }

    /// The suffix starting at index `i`.
    pub fn shift(&self, i: usize) -> Self {
        if i <= self.pre.len() {
            return EPWord { pre: self.pre[i..].to_vec(), per: self.per.clone() };
        }
        if self.per.is_empty() {
            return EPWord::zero();
        }
        let mut per = self.per.clone();
        per.rotate_left((i - self.pre.len()) % self.per.len());
        EPWord { pre: Vec::new(), per }
    }

    /// Every distinct suffix, starting with the word itself. Beyond
    /// `|pre| + |per|` shifts the suffixes repeat.
    pub fn shifts(&self) -> impl Iterator<Item = EPWord> + '_ {
        (0..self.pre.len() + self.per.len().max(1)).map(move |i| self.shift(i))
    }

    /// Number of leading symbols after which two words agree forever if they
    /// agree that far.
    fn decision_length(&self, other: &Self) -> usize {
        let p = self.per.len().max(1).lcm(&other.per.len().max(1));
        self.pre.len().max(other.pre.len()) + p
    }

    fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..self.decision_length(other)).find(|&i| self.at(i) != other.at(i))
    }
}

fn primitive_root_len(w: &[Digit]) -> Option<usize> {
    let n = w.len();
    (1..n).find(|&p| n.is_multiple_of(p) && (p..n).all(|i| w[i] == w[i - p]))
}

/// Lexicographic comparison of the infinite words.
pub fn lex_compare(u: &EPWord, v: &EPWord) -> Ordering {
    match u.first_difference(v) {
        None => Ordering::Equal,
        Some(i) => u.at(i).cmp(&v.at(i)),
    }
}

/// Alternate order: at the first difference, with the first symbol at
/// `j = 1`, `u < v` iff `u_j·(−1)^j < v_j·(−1)^j`.
pub fn alt_compare(u: &EPWord, v: &EPWord) -> Ordering {
    match u.first_difference(v) {
        None => Ordering::Equal,
        // index i is j = i + 1; odd j reverses the digit order
        Some(i) if i % 2 == 0 => v.at(i).cmp(&u.at(i)),
        Some(i) => u.at(i).cmp(&v.at(i)),
    }
}

/// A word anchored in position: symbol `i` of `word` multiplies `(±β)^(top − i)`.
///
/// Canonical values have a nonzero leading symbol; zero is the empty word at
/// `top = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expansion {
    word: EPWord,
    top: i64,
}

impl Expansion {
    pub fn new(word: EPWord, top: i64) -> Self {
        let mut word = word;
        let mut top = top;
        if word.is_zero() {
            return Self::zero();
        }
        while word.at(0) == 0 {
            word = word.shift(1);
            top -= 1;
        }
        Expansion { word, top }
    }

    /// Finite expansion from digits listed from the top position down.
    pub fn from_digits(digits: Vec<Digit>, top: i64) -> Self {
        Self::new(EPWord::finite(digits), top)
    }

    /// Integer digit string `d_k … d_0•`.
    pub fn integer(digits: Vec<Digit>) -> Self {
        let top = digits.len() as i64 - 1;
        Self::from_digits(digits, top)
    }

    pub fn zero() -> Self {
        Expansion { word: EPWord::zero(), top: 0 }
    }

    pub fn word(&self) -> &EPWord {
        &self.word
    }

    /// Exponent of the leading symbol.
    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn is_zero(&self) -> bool {
        self.word.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.word.is_finite()
    }

    pub fn digit_at(&self, position: i64) -> Digit {
        if position > self.top {
            0
        } else {
            self.word.at((self.top - position) as usize)
        }
    }

    /// Position of the lowest nonzero digit of a finite, nonzero expansion.
    pub fn lowest_position(&self) -> Option<i64> {
        if !self.is_finite() || self.is_zero() {
            return None;
        }
        Some(self.top - self.word.preperiod().len() as i64 + 1)
    }

    /// Digits after the point; `None` when the expansion is infinite.
    pub fn fractional_length(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        Some(match self.lowest_position() {
            Some(p) if p < 0 => (-p) as usize,
            _ => 0,
        })
    }

    pub fn is_integer(&self) -> bool {
        self.fractional_length() == Some(0)
    }

    /// The word read from position `top` downward, padded with leading zeros;
    /// requires `top ≥ self.top()` unless the expansion is zero.
    pub fn aligned_word(&self, top: i64) -> EPWord {
        if self.is_zero() {
            return EPWord::zero();
        }
        assert!(top >= self.top, "cannot align below the leading digit");
        let mut pre = vec![0; (top - self.top) as usize];
        pre.extend_from_slice(self.word.preperiod());
        EPWord::new(pre, self.word.period().to_vec())
    }

    /// Digits of a finite expansion from `top` down to `low` inclusive.
    pub fn digits_between(&self, top: i64, low: i64) -> Vec<Digit> {
        (low..=top).rev().map(|p| self.digit_at(p)).collect()
    }
}

impl fmt::Debug for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(self))
    }
}

impl fmt::Debug for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{}", self.word, self.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pre: &[Digit], per: &[Digit]) -> EPWord {
        EPWord::new(pre.to_vec(), per.to_vec())
    }

    #[test]
    fn canonical_words() {
        assert_eq!(w(&[1, 0, 0], &[]), w(&[1], &[]));
        assert_eq!(w(&[1], &[0, 0]), w(&[1], &[]));
        assert_eq!(w(&[], &[1, 0, 1, 0]), w(&[], &[1, 0]));
        // 1 0 (1 0)^ω = (1 0)^ω
        let x = w(&[1, 0], &[1, 0]);
        assert!(x.preperiod().is_empty());
        assert_eq!(x.period(), &[1, 0]);
        // 2 (1)^ω stays
        assert_eq!(w(&[2], &[1]).preperiod(), &[2]);
        // 0 1 (0 1)^ω rolls fully, 1 (0 1)^ω rolls into (1 0)^ω
        assert_eq!(w(&[1], &[0, 1]), w(&[], &[1, 0]));
        let y = w(&[3, 1, 1], &[1]);
        assert_eq!((y.preperiod(), y.period()), (&[3][..], &[1][..]));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let x = w(&[0, 2, 1, 1], &[2, 1, 2, 1]);
        let y = EPWord::new(x.preperiod().to_vec(), x.period().to_vec());
        assert_eq!(x, y);
    }

    #[test]
    fn symbols_and_shifts() {
        let x = w(&[2], &[1, 0]);
        assert_eq!(x.take(6), vec![2, 1, 0, 1, 0, 1]);
        assert_eq!(x.shift(1), w(&[], &[1, 0]));
        assert_eq!(x.shift(2), w(&[], &[0, 1]));
        assert_eq!(x.shifts().count(), 3);
        assert_eq!(w(&[1, 1], &[]).shift(5), EPWord::zero());
    }

    #[test]
    fn lexicographic() {
        let p = w(&[], &[1, 0]);
        assert_eq!(lex_compare(&p, &p), Ordering::Equal);
        assert_eq!(lex_compare(&w(&[0], &[1, 0]), &p), Ordering::Less);
        assert_eq!(lex_compare(&w(&[1, 0, 1], &[]), &p), Ordering::Less);
        // differences deep in the periodic part
        let a = w(&[], &[1, 0, 0]);
        let b = w(&[], &[1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1]);
        assert_eq!(lex_compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn alternate() {
        let one_zero = w(&[1], &[]);
        let zero_one = w(&[0, 1], &[]);
        assert_eq!(alt_compare(&one_zero, &zero_one), Ordering::Less);
        assert_eq!(alt_compare(&zero_one, &zero_one), Ordering::Equal);
        assert_eq!(alt_compare(&zero_one, &w(&[0, 0, 1], &[])), Ordering::Greater);
    }

    #[test]
    fn expansions_strip_leading_zeros() {
        let e = Expansion::from_digits(vec![0, 0, 1, 1], 3);
        assert_eq!(e.top(), 1);
        assert_eq!(e.word(), &w(&[1, 1], &[]));
        assert_eq!(Expansion::from_digits(vec![0, 0], 4), Expansion::zero());
        let e = Expansion::new(w(&[], &[0, 1]), -1);
        assert_eq!((e.top(), e.word().clone()), (-2, w(&[], &[1, 0])));
    }

    #[test]
    fn fractional_lengths() {
        let e = Expansion::from_digits(vec![1, 1, 0, 0, 0, 0, 1, 1], 5);
        assert_eq!(e.fractional_length(), Some(2));
        assert_eq!(Expansion::integer(vec![1, 1, 0]).fractional_length(), Some(0));
        assert_eq!(Expansion::from_digits(vec![1, 0, 0, 1], 1).fractional_length(), Some(2));
        assert_eq!(Expansion::zero().fractional_length(), Some(0));
        let inf = Expansion::new(w(&[1, 1], &[1]), 1);
        assert_eq!(inf.fractional_length(), None);
    }

    #[test]
    fn positional_access() {
        let e = Expansion::from_digits(vec![1, 0, 1], 0);
        assert_eq!(e.digit_at(0), 1);
        assert_eq!(e.digit_at(-1), 0);
        assert_eq!(e.digit_at(-2), 1);
        assert_eq!(e.digit_at(3), 0);
        assert_eq!(e.lowest_position(), Some(-2));
        assert_eq!(e.digits_between(1, -3), vec![0, 1, 0, 1, 0]);
        assert_eq!(e.aligned_word(2), w(&[0, 0, 1, 0, 1], &[]));
    }
}
