//! Parry and Ito–Sadahiro admissibility, and the forbidden-factor scanner
//! for bases with minimal polynomial `x² − m·x − n`.

use std::cmp::Ordering;

use thiserror::Error;

use super::{alt_compare, lex_compare, Digit, EPWord, Expansion};
use crate::expander::BaseSign;
use crate::pbase::{Family, PisotBase};

/// Closed admissibility for base −β: every suffix `s` satisfies
/// `d_{−β}(l_β) ⪯_alt s ≺_alt d*_{−β}(r_β)`.
pub fn is_admissible_neg(w: &EPWord, base: PisotBase) -> bool {
    if w.max_digit() > base.max_digit_neg() {
        return false;
    }
    let refs = base.reference_words();
    w.shifts()
        .all(|s| alt_compare(&refs.d_l, &s) != Ordering::Greater && alt_compare(&s, &refs.dstar_r) == Ordering::Less)
}

/// Admissibility of a digit string preceded by implicit zeros, as in an
/// expansion `x_k x_{k−1} ⋯` of a real number. This rejects `d_{−β}(l_β)`
/// itself, whose value is written one position higher.
pub fn is_expansion_admissible_neg(w: &EPWord, base: PisotBase) -> bool {
    is_admissible_neg(&w.prepend(0), base)
}

/// Parry condition: every suffix is lexicographically below `d*_β(1)`.
pub fn is_admissible_pos(w: &EPWord, base: PisotBase) -> bool {
    if w.max_digit() > base.max_digit_pos() {
        return false;
    }
    let dstar = base.reference_words().dstar_pos;
    w.shifts().all(|s| lex_compare(&s, &dstar) == Ordering::Less)
}

/// Whether `e` is the expansion of its own value in base `±β`.
pub fn is_expansion_admissible(e: &Expansion, base: PisotBase, sign: BaseSign) -> bool {
    match sign {
        BaseSign::Positive => is_admissible_pos(e.word(), base),
        BaseSign::Negative => is_expansion_admissible_neg(e.word(), base),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScanError {
    #[error("forbidden-factor scan needs a base with minimal polynomial x^2 - mx - n, got {0}")]
    WrongFamily(PisotBase),
    #[error("digit {digit} at index {index} exceeds the alphabet maximum {max}")]
    DigitOutOfRange { index: usize, digit: Digit, max: Digit },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    /// `m (m−n)^{2k} C` with `C ≤ m−n−1` (only when `m > n`).
    LowAfterEvenRun,
    /// `m (m−n)^{2k+1} D` with `D ≥ m−n+1` (`m > n`).
    HighAfterOddRun,
    /// `m 0^{2k+1} D` with `D ≥ 1` (`m = n`).
    HighAfterOddZeroRun,
    /// The word ends in `0 m 0^ω` (`m = n`).
    TerminalZeroM,
}

/// A forbidden factor. `start` is the index of its leading `m`; `end` is the
/// index of the closing digit `C`/`D`, which equals the word length when that
/// digit is one of the implicit trailing zeros. For
/// [`ForbiddenKind::TerminalZeroM`] the `0` sits at `start − 1`, possibly one of
/// the implicit leading zeros, and `end` is the word length.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Forbidden {
    pub start: usize,
    pub end: usize,
    pub kind: ForbiddenKind,
}

impl Forbidden {
    /// Length of the `(m−n)` run between the leading `m` and the closing digit.
    pub fn run(&self) -> usize {
        self.end - self.start - 1
    }
}

/// Left-most forbidden factor of `0^ω·w·0^ω`.
///
/// Returns `None` exactly when `w·0^ω` is the digit string of an expansion,
/// i.e. when [`is_expansion_admissible_neg`] accepts it.
pub fn forbidden_scan(w: &[Digit], base: PisotBase) -> Result<Option<Forbidden>, ScanError> {
    if base.family() != Family::MinusN {
        return Err(ScanError::WrongFamily(base));
    }
    let m = base.m();
    let gap = m - base.n();
    if let Some((index, &digit)) = w.iter().enumerate().find(|(_, &d)| d > m) {
        return Err(ScanError::DigitOutOfRange { index, digit, max: m });
    }
    for start in (0..w.len()).filter(|&i| w[i] == m) {
        let mut end = start + 1;
        while end < w.len() && w[end] == gap {
            end += 1;
        }
        let run = end - start - 1;
        if end == w.len() {
            // the run meets the 0^ω tail
            if gap > 0 && run % 2 == 0 {
                return Ok(Some(Forbidden { start, end, kind: ForbiddenKind::LowAfterEvenRun }));
            }
            if gap == 0 && (start == 0 || w[start - 1] == 0) {
                return Ok(Some(Forbidden { start, end, kind: ForbiddenKind::TerminalZeroM }));
            }
            continue;
        }
        let closing = w[end];
        let kind = if run % 2 == 0 && closing < gap {
            ForbiddenKind::LowAfterEvenRun
        } else if run % 2 == 1 && closing > gap {
            if gap == 0 {
                ForbiddenKind::HighAfterOddZeroRun
            } else {
                ForbiddenKind::HighAfterOddRun
            }
        } else {
            continue;
        };
        return Ok(Some(Forbidden { start, end, kind }));
    }
    Ok(None)
}
