//! Text form of digit strings.
//!
//! Digits are juxtaposed when every digit is below 10 and the alphabet allows
//! nothing larger (`"110"`), otherwise comma-separated (`"10,3,0"`). A point
//! separates the integer and fractional parts and a parenthesised group after
//! it is the period: `"11.(1)"` is `11•1^ω`.

use thiserror::Error;

use super::{Digit, EPWord, Expansion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty digit string")]
    Empty,
    #[error("bad digit `{token}` in `{text}`")]
    BadDigit { text: String, token: String },
    #[error("malformed digit string `{0}`: expected INT[.FRAC[(PERIOD)]]")]
    Malformed(String),
}

/// A digit string split into its three syntactic parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitText {
    pub integer: Vec<Digit>,
    pub fraction: Vec<Digit>,
    pub period: Vec<Digit>,
}

impl DigitText {
    /// Parses `INT[.FRAC[(PERIOD)]]`. `comma_digits` forces comma-separated
    /// digits even when no comma is present (alphabets beyond 9).
    pub fn parse(text: &str, comma_digits: bool) -> Result<Self, ParseError> {
        let s = text.trim();
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let malformed = || ParseError::Malformed(text.to_string());
        let comma = comma_digits || s.contains(',');
        let (int_part, rest) = match s.split_once('.') {
            Some((i, r)) => (i, Some(r)),
            None => (s, None),
        };
        let (frac_part, period_part) = match rest {
            None => ("", ""),
            Some(r) => match r.split_once('(') {
                None => (r, ""),
                Some((f, p)) => {
                    let p = p.strip_suffix(')').ok_or_else(malformed)?;
                    if p.is_empty() {
                        return Err(malformed());
                    }
                    (f, p)
                }
            },
        };
        for part in [int_part, frac_part, period_part] {
            if part.contains(['.', '(', ')']) {
                return Err(malformed());
            }
        }
        if int_part.is_empty() && rest.is_none() {
            return Err(malformed());
        }
        let digits = |part: &str| digits_of(text, part, comma);
        Ok(DigitText { integer: digits(int_part)?, fraction: digits(frac_part)?, period: digits(period_part)? })
    }

    /// The anchored word: the first integer digit sits at position
    /// `integer.len() − 1`.
    pub fn to_expansion(&self) -> Expansion {
        let mut pre = self.integer.clone();
        pre.extend_from_slice(&self.fraction);
        let top = self.integer.len() as i64 - 1;
        Expansion::new(EPWord::new(pre, self.period.clone()), top)
    }

    /// Finite digits listed from the top, plus the top position, without any
    /// canonicalization. `None` if a period is present.
    pub fn to_finite_digits(&self) -> Option<(Vec<Digit>, i64)> {
        if !self.period.is_empty() {
            return None;
        }
        let mut digits = self.integer.clone();
        digits.extend_from_slice(&self.fraction);
        Some((digits, self.integer.len() as i64 - 1))
    }
}

fn digits_of(text: &str, part: &str, comma: bool) -> Result<Vec<Digit>, ParseError> {
    let bad = |token: &str| ParseError::BadDigit { text: text.to_string(), token: token.to_string() };
    if part.is_empty() {
        return Ok(Vec::new());
    }
    if comma {
        part.split(',')
            .map(|t| {
                let t = t.trim();
                if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(bad(t));
                }
                t.parse::<Digit>().map_err(|_| bad(t))
            })
            .collect()
    } else {
        part.chars().map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string()))).collect()
    }
}

/// Parses an expansion in the text form; `max_digit` selects the digit style.
pub fn parse_expansion(text: &str, max_digit: Digit) -> Result<Expansion, ParseError> {
    Ok(DigitText::parse(text, max_digit > 9)?.to_expansion())
}

fn join(digits: &[Digit], comma: bool) -> String {
    let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
    parts.join(if comma { "," } else { "" })
}

/// Formats an expansion. Canonical expansions round-trip exactly through
/// [`parse_expansion`] with the same `max_digit`.
pub fn format_expansion(e: &Expansion, max_digit: Digit) -> String {
    let comma = max_digit > 9 || e.word().max_digit() > 9;
    if e.is_zero() {
        return "0.".to_string();
    }
    let top = e.top();
    let (integer, rest) = if top >= 0 {
        let n = (top + 1) as usize;
        (e.word().take(n), e.word().shift(n))
    } else {
        let mut pre = vec![0; (-top - 1) as usize];
        pre.extend_from_slice(e.word().preperiod());
        (vec![0], EPWord::new(pre, e.word().period().to_vec()))
    };
    let rest = EPWord::new(rest.preperiod().to_vec(), rest.period().to_vec());
    let mut out = join(&integer, comma);
    out.push('.');
    out.push_str(&join(rest.preperiod(), comma));
    if !rest.period().is_empty() {
        out.push('(');
        out.push_str(&join(rest.period(), comma));
        out.push(')');
    }
    out
}

/// Formats a bare word as `PRE(PERIOD)`, leaving a `0^ω` tail implicit.
pub fn format_word(w: &EPWord) -> String {
    let comma = w.max_digit() > 9;
    let mut out = join(w.preperiod(), comma);
    if !w.period().is_empty() {
        out.push('(');
        out.push_str(&join(w.period(), comma));
        out.push(')');
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
