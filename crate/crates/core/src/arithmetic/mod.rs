//! Digit-level arithmetic in Fin(−β) for bases with minimal polynomial
//! `x² − m·x − n`, the golden-ratio σ-transport, and fractional-length scans.

use std::fmt;

use thiserror::Error;

use crate::dwords::{Digit, DigitText, Expansion, ParseError, ScanError};
use crate::expander::{evaluate_signed, expand_real, BaseSign, ExpandError};
use crate::pbase::{Family, PisotBase};
use crate::qfield::FieldElement;

mod lscan;
mod register;
mod tau;

pub use lscan::{l_scan, l_scan_operands, LScanReport, Operation, Witness};
pub use register::{normalize_neg, normalize_neg_traced, RewriteStep, TemplateSign};
pub use tau::{normalize_pos_tau, sigma_transport_add_tau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("digit arithmetic needs a base with minimal polynomial x^2 - mx - n, got {0}")]
    WrongFamily(PisotBase),
    #[error("this operation is specific to the golden ratio, got {0}")]
    NotGolden(PisotBase),
    #[error("digit {digit} at position {position} is outside {{0, ..., {max}}}")]
    DigitOutOfRange { position: i64, digit: i64, max: i64 },
    #[error("`{0}` is not an admissible expansion")]
    NotAdmissible(String),
    #[error("operand `{0}` has an infinite expansion")]
    NotFinite(String),
    #[error("operand `{0}` has fractional digits")]
    NotInteger(String),
    #[error(transparent)]
    Expand(#[from] ExpandError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("rewriting did not settle after {0} steps")]
    NoProgress(usize),
}

impl From<ScanError> for ArithError {
    fn from(e: ScanError) -> Self {
        match e {
            ScanError::WrongFamily(b) => ArithError::WrongFamily(b),
            ScanError::DigitOutOfRange { digit, max, .. } => {
                ArithError::DigitOutOfRange { position: 0, digit: digit.into(), max: max.into() }
            }
        }
    }
}

/// A finite signed digit string `digits[0] ⋯ digits[len−1]`, the first digit
/// sitting at position `top`. Digits may leave the alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RawDigitString {
    pub digits: Vec<i64>,
    pub top: i64,
}

impl RawDigitString {
    pub fn new(digits: Vec<i64>, top: i64) -> Self {
        RawDigitString { digits, top }
    }

    /// Integer-anchored string: the last digit sits at position 0.
    pub fn integer(digits: Vec<i64>) -> Self {
        let top = digits.len() as i64 - 1;
        RawDigitString { digits, top }
    }

    /// `None` for expansions with a period.
    pub fn from_expansion(e: &Expansion) -> Option<Self> {
        if !e.is_finite() {
            return None;
        }
        let digits = e.word().preperiod().iter().map(|&d| i64::from(d)).collect();
        Some(RawDigitString { digits, top: e.top() })
    }

    /// Parses the finite text form, e.g. `"1111"` or `"12.01"`.
    pub fn parse(text: &str, max_digit: Digit) -> Result<Self, ArithError> {
        let parsed = DigitText::parse(text, max_digit > 9)?;
        let (digits, top) = parsed.to_finite_digits().ok_or_else(|| ArithError::NotFinite(text.to_string()))?;
        Ok(RawDigitString { digits: digits.into_iter().map(i64::from).collect(), top })
    }

    /// Position of the last digit.
    pub fn low(&self) -> i64 {
        self.top - self.digits.len() as i64 + 1
    }

    pub fn digit_at(&self, position: i64) -> i64 {
        let i = self.top - position;
        if i < 0 || i >= self.digits.len() as i64 {
            0
        } else {
            self.digits[i as usize]
        }
    }

    pub fn evaluate(&self, base: PisotBase, sign: BaseSign) -> FieldElement {
        evaluate_signed(&self.digits, self.top, base, sign)
    }

    /// Adds `template` placed with its first symbol at position `top`,
    /// growing the string as needed.
    pub fn add_template(&mut self, template: &ZeroTemplate, top: i64) {
        let low = top - template.pattern.len() as i64 + 1;
        self.extend_to(top, low);
        for (j, &t) in template.pattern.iter().enumerate() {
            let i = (self.top - (top - j as i64)) as usize;
            self.digits[i] += t;
        }
    }

    fn extend_to(&mut self, hi: i64, lo: i64) {
        if self.digits.is_empty() {
            self.top = hi;
        }
        if hi > self.top {
            let extra = (hi - self.top) as usize;
            self.digits.splice(0..0, std::iter::repeat_n(0, extra));
            self.top = hi;
        }
        let low = self.low();
        if lo < low {
            self.digits.extend(std::iter::repeat_n(0, (low - lo) as usize));
        }
    }
}

impl fmt::Debug for RawDigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> =
            self.digits.iter().map(|&d| if d < 0 { format!("{}\u{305}", -d) } else { d.to_string() }).collect();
        write!(f, "{} @{}", body.join(" "), self.top)
    }
}

/// A finite signed digit string worth zero in base `−β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroTemplate {
    pub pattern: Vec<i64>,
}

impl ZeroTemplate {
    /// `1 m n̄`.
    pub fn plus(base: PisotBase) -> Self {
        let (m, n) = (i64::from(base.m()), i64::from(base.n()));
        ZeroTemplate { pattern: vec![1, m, -n] }
    }

    /// `1̄ m̄ n`.
    pub fn minus(base: PisotBase) -> Self {
        Self::plus(base).negated()
    }

    /// `1 (m+1) (m−n+1)^{k−1} (m−n) n̄`, a sum of `k` shifted copies of
    /// `1 m n̄`; `k ≥ 1`.
    pub fn long(base: PisotBase, k: usize) -> Self {
        assert!(k >= 1);
        let (m, n) = (i64::from(base.m()), i64::from(base.n()));
        let mut pattern = vec![1, m + 1];
        pattern.extend(std::iter::repeat_n(m - n + 1, k - 1));
        pattern.extend([m - n, -n]);
        ZeroTemplate { pattern }
    }

    /// `1 1 (0 1)^k 1̄` for base `−τ`.
    pub fn tau_alternating(k: usize) -> Self {
        let mut pattern = vec![1, 1];
        for _ in 0..k {
            pattern.extend([0, 1]);
        }
        pattern.push(-1);
        ZeroTemplate { pattern }
    }

    pub fn negated(&self) -> Self {
        ZeroTemplate { pattern: self.pattern.iter().map(|d| -d).collect() }
    }

    pub fn is_zero_in(&self, base: PisotBase) -> bool {
        let top = self.pattern.len() as i64 - 1;
        evaluate_signed(&self.pattern, top, base, BaseSign::Negative).is_zero()
    }
}

fn require_minus_family(base: PisotBase) -> Result<(), ArithError> {
    if base.family() != Family::MinusN {
        return Err(ArithError::WrongFamily(base));
    }
    Ok(())
}

fn show(e: &Expansion, base: PisotBase) -> String {
    crate::dwords::format_expansion(e, base.max_digit_neg())
}

fn finite_admissible(e: &Expansion, base: PisotBase) -> Result<(), ArithError> {
    if !e.is_finite() {
        return Err(ArithError::NotFinite(show(e, base)));
    }
    if crate::dwords::forbidden_scan(e.word().preperiod(), base)?.is_some() {
        return Err(ArithError::NotAdmissible(show(e, base)));
    }
    Ok(())
}

/// `x + y` for finite `(−β)`-expansions, by unit increments whose carries are
/// cleared with zero templates, each followed by [`normalize_neg`].
pub fn add_neg(x: &Expansion, y: &Expansion, base: PisotBase) -> Result<Expansion, ArithError> {
    require_minus_family(base)?;
    finite_admissible(x, base)?;
    finite_admissible(y, base)?;
    let mut reg = register::Register::from_expansion(x, base);
    for (i, &d) in y.word().preperiod().iter().enumerate() {
        let position = y.top() - i as i64;
        for _ in 0..d {
            reg.increment(position)?;
        }
    }
    Ok(reg.to_expansion())
}

fn field_route(
    x: &Expansion,
    y: &Expansion,
    base: PisotBase,
    op: impl Fn(FieldElement, FieldElement) -> FieldElement,
) -> Result<Expansion, ArithError> {
    finite_admissible_any(x, base)?;
    finite_admissible_any(y, base)?;
    let vx = crate::expander::evaluate(x, base, BaseSign::Negative);
    let vy = crate::expander::evaluate(y, base, BaseSign::Negative);
    Ok(expand_real(&op(vx, vy), BaseSign::Negative)?)
}

fn finite_admissible_any(e: &Expansion, base: PisotBase) -> Result<(), ArithError> {
    if !e.is_finite() {
        return Err(ArithError::NotFinite(show(e, base)));
    }
    if !crate::dwords::is_expansion_admissible(e, base, BaseSign::Negative) {
        return Err(ArithError::NotAdmissible(show(e, base)));
    }
    Ok(())
}

/// `x · y` through the field. The result may be infinite; check
/// [`Expansion::is_finite`].
pub fn mul_neg(x: &Expansion, y: &Expansion, base: PisotBase) -> Result<Expansion, ArithError> {
    field_route(x, y, base, |a, b| a * b)
}

/// `x − y` through the field; Fin(−β) is not closed under subtraction.
pub fn sub_neg(x: &Expansion, y: &Expansion, base: PisotBase) -> Result<Expansion, ArithError> {
    field_route(x, y, base, |a, b| a - b)
}

/// Number of digits after the point; `None` for an infinite expansion.
pub fn fractional_length(e: &Expansion) -> Option<usize> {
    e.fractional_length()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dwords::{format_expansion, parse_expansion};

    fn base(m: u32, n: u32) -> PisotBase {
        PisotBase::new(m, n, Family::MinusN).unwrap()
    }

    fn ex(s: &str, b: PisotBase) -> Expansion {
        parse_expansion(s, b.max_digit_neg()).unwrap()
    }

    fn show(e: &Expansion, b: PisotBase) -> String {
        format_expansion(e, b.max_digit_neg())
    }

    #[test]
    fn templates_are_zero() {
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (5, 3)] {
            let b = base(m, n);
            assert!(ZeroTemplate::plus(b).is_zero_in(b));
            assert!(ZeroTemplate::minus(b).is_zero_in(b));
            for k in 1..6 {
                assert!(ZeroTemplate::long(b, k).is_zero_in(b), "{b} k={k}");
            }
        }
        for k in 0..6 {
            assert!(ZeroTemplate::tau_alternating(k).is_zero_in(PisotBase::golden()));
        }
    }

    #[test]
    fn raw_strings() {
        let mut s = RawDigitString::integer(vec![1, 1]);
        assert_eq!(s.low(), 0);
        s.add_template(&ZeroTemplate::plus(PisotBase::golden()), 1);
        assert_eq!(s, RawDigitString::new(vec![2, 2, -1], 1));
        s.add_template(&ZeroTemplate::plus(PisotBase::golden()), 3);
        assert_eq!(s, RawDigitString::new(vec![1, 1, 1, 2, -1], 3));
        assert_eq!(s.digit_at(-1), -1);
        assert_eq!(s.digit_at(7), 0);
        let p = RawDigitString::parse("12.01", 2).unwrap();
        assert_eq!(p, RawDigitString::new(vec![1, 2, 0, 1], 1));
        assert!(RawDigitString::parse("1.(1)", 1).is_err());
    }

    #[test]
    fn worked_sums() {
        let t = PisotBase::golden();
        let x = ex("1111.", t);
        assert_eq!(show(&add_neg(&x, &x, t).unwrap(), t), "110000.11");
        assert_eq!(show(&mul_neg(&x, &x, t).unwrap(), t), "11100.11");
        assert_eq!(add_neg(&x, &Expansion::zero(), t).unwrap(), x);
        let one = ex("110.", t);
        let two = expand_real(&FieldElement::from_ints(2, 0, 1, t), BaseSign::Negative).unwrap();
        assert_eq!(add_neg(&one, &one, t).unwrap(), two);
        assert_eq!(mul_neg(&one, &one, t).unwrap(), one);
        assert_eq!(mul_neg(&x, &Expansion::zero(), t).unwrap(), Expansion::zero());
    }

    #[test]
    fn differences() {
        let t = PisotBase::golden();
        let one = ex("110.", t);
        assert_eq!(show(&sub_neg(&Expansion::zero(), &one, t).unwrap(), t), "11.(1)");
        let big = ex("110000.11", t);
        let x = ex("1111.", t);
        assert_eq!(sub_neg(&big, &x, t).unwrap(), x);
        assert_eq!(sub_neg(&x, &Expansion::zero(), t).unwrap(), x);
    }

    #[test]
    fn operand_checks() {
        let t = PisotBase::golden();
        assert!(matches!(add_neg(&ex("101.", t), &ex("0.", t), t), Err(ArithError::NotAdmissible(_))));
        assert!(matches!(add_neg(&ex("11.(1)", t), &ex("0.", t), t), Err(ArithError::NotFinite(_))));
        let tt = PisotBase::golden_squared();
        assert!(matches!(add_neg(&Expansion::zero(), &Expansion::zero(), tt), Err(ArithError::WrongFamily(_))));
    }

    #[test]
    fn fractional_lengths() {
        let t = PisotBase::golden();
        assert_eq!(fractional_length(&ex("110000.11", t)), Some(2));
        assert_eq!(fractional_length(&ex("110.", t)), Some(0));
        assert_eq!(fractional_length(&ex("10.01", t)), Some(2));
        assert_eq!(fractional_length(&ex("11.(1)", t)), None);
    }

    #[test]
    fn unit_increment_cases() {
        // carry into a zero above, over an (m−n) below, and the long template
        let b = base(2, 1);
        for s in ["2.", "12.1", "12.2", "12.21", "102.", "12.22"] {
            let x = ex(s, b);
            if crate::dwords::forbidden_scan(x.word().preperiod(), b).unwrap().is_some() {
                continue;
            }
            let one = ex("1.", b);
            let sum = add_neg(&x, &one, b).unwrap();
            let oracle = field_route(&x, &one, b, |p, q| p + q).unwrap();
            assert_eq!(sum, oracle, "{s}");
        }
    }
}
