//! In-place rewriting of finite digit strings over `{0, …, m}`.

use crate::dwords::{forbidden_scan, Digit, Expansion, ForbiddenKind};
use crate::pbase::PisotBase;

use super::{require_minus_family, ArithError, RawDigitString, ZeroTemplate};

/// Which representation of zero a rewrite adds.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TemplateSign {
    /// `1 m n̄` ending on the forbidden `m`: `A 0 m → (A+1) m (m−n)`.
    Plus,
    /// `1̄ m̄ n` starting above the forbidden `m`: `B m X → (B−1) 0 (X+n)`.
    Minus,
}

/// One rewrite of the left-most forbidden factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    /// Position of the factor's leading `m`.
    pub position: i64,
    pub kind: ForbiddenKind,
    pub run: usize,
    pub template: TemplateSign,
    pub before: RawDigitString,
    pub after: RawDigitString,
}

/// Digits listed from position `top` downwards; the two leading digits are
/// kept zero so every rewrite has room above the forbidden factor.
#[derive(Clone, Debug)]
pub(crate) struct Register {
    base: PisotBase,
    digits: Vec<Digit>,
    top: i64,
}

const HEADROOM: usize = 2;

impl Register {
    pub(crate) fn new(base: PisotBase, digits: Vec<Digit>, top: i64) -> Self {
        let mut reg = Register { base, digits, top };
        reg.pad();
        reg
    }

    pub(crate) fn from_expansion(e: &Expansion, base: PisotBase) -> Self {
        Self::new(base, e.word().preperiod().to_vec(), e.top())
    }

    fn low(&self) -> i64 {
        self.top - self.digits.len() as i64 + 1
    }

    pub(crate) fn digit(&self, position: i64) -> Digit {
        let i = self.top - position;
        if i < 0 || i >= self.digits.len() as i64 {
            0
        } else {
            self.digits[i as usize]
        }
    }

    fn pad(&mut self) {
        let lead = self.digits.iter().take_while(|&&d| d == 0).count();
        if lead < HEADROOM {
            let extra = HEADROOM - lead;
            self.digits.splice(0..0, std::iter::repeat_n(0, extra));
            self.top += extra as i64;
        }
    }

    fn extend_to(&mut self, hi: i64, lo: i64) {
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

    /// Adds signed digits starting at position `top`; every touched digit must
    /// land in `{0, …, m}`.
    fn apply(&mut self, deltas: &[i64], top: i64) -> Result<(), ArithError> {
        let low = top - deltas.len() as i64 + 1;
        self.extend_to(top, low);
        let max = i64::from(self.base.m());
        for (j, &t) in deltas.iter().enumerate() {
            let position = top - j as i64;
            let i = (self.top - position) as usize;
            let digit = i64::from(self.digits[i]) + t;
            if !(0..=max).contains(&digit) {
                return Err(ArithError::DigitOutOfRange { position, digit, max });
            }
            self.digits[i] = digit as Digit;
        }
        self.pad();
        Ok(())
    }

    fn snapshot(&self) -> RawDigitString {
        RawDigitString::new(self.digits.iter().map(|&d| i64::from(d)).collect(), self.top)
    }

    /// Rewrites the left-most forbidden factor until none is left.
    pub(crate) fn normalize(&mut self, mut trace: Option<&mut Vec<RewriteStep>>) -> Result<(), ArithError> {
        let limit = 64 * (self.digits.len() + 16) * (self.base.m() as usize + 1);
        for _ in 0..limit {
            let Some(f) = forbidden_scan(&self.digits, self.base)? else {
                return Ok(());
            };
            let i = f.start;
            debug_assert!(i >= HEADROOM, "padding keeps the leading m away from the top");
            let position = self.top - i as i64;
            let before = trace.as_ref().map(|_| self.snapshot());
            let template = if self.digits[i - 1] == 0 { TemplateSign::Plus } else { TemplateSign::Minus };
            match template {
                TemplateSign::Plus => {
                    self.apply(&ZeroTemplate::plus(self.base).pattern, position + 2)?;
                }
                TemplateSign::Minus => {
                    self.apply(&ZeroTemplate::minus(self.base).pattern, position + 1)?;
                }
            }
            if let (Some(t), Some(before)) = (trace.as_deref_mut(), before) {
                t.push(RewriteStep { position, kind: f.kind, run: f.run(), template, before, after: self.snapshot() });
            }
        }
        Err(ArithError::NoProgress(limit))
    }

    /// Adds `(−β)^position` to an admissible register and renormalizes.
    pub(crate) fn increment(&mut self, position: i64) -> Result<(), ArithError> {
        let (m, n) = (self.base.m(), self.base.n());
        let gap = m - n;
        self.extend_to(position + HEADROOM as i64 + 1, position);
        self.pad();
        if self.digit(position) < m {
            self.apply(&[1], position)?;
            return self.normalize(None);
        }
        let (mi, ni, gi) = (i64::from(m), i64::from(n), i64::from(gap));
        if self.digit(position + 1) == 0 {
            // A 0 (m+1) + 1 m n̄
            self.apply(&[1, mi, 1 - ni], position + 2)?;
        } else if self.digit(position - 1) == gap {
            // B (m+1) (m−n) + 1̄ m̄ n
            self.apply(&[-1, 1 - mi, ni], position + 1)?;
        } else if self.digit(position - 1) > gap {
            let k = (1..).take_while(|&j| self.digit(position - j) > gap).count();
            let mut deltas = vec![-1, -mi];
            deltas.extend(std::iter::repeat_n(-(gi + 1), k - 1));
            deltas.extend([-gi, ni]);
            self.apply(&deltas, position + 1)?;
        } else {
            return Err(ArithError::NotAdmissible(format!("{:?}", self.snapshot())));
        }
        self.normalize(None)
    }

    pub(crate) fn to_expansion(&self) -> Expansion {
        Expansion::from_digits(self.digits.clone(), self.top)
    }
}

fn checked_register(s: &RawDigitString, base: PisotBase) -> Result<Register, ArithError> {
    require_minus_family(base)?;
    let max = i64::from(base.m());
    let mut digits = Vec::with_capacity(s.digits.len());
    for (j, &d) in s.digits.iter().enumerate() {
        if !(0..=max).contains(&d) {
            return Err(ArithError::DigitOutOfRange { position: s.top - j as i64, digit: d, max });
        }
        digits.push(d as Digit);
    }
    Ok(Register::new(base, digits, s.top))
}

/// The `(−β)`-expansion of `Σ a_i (−β)^i` for digits `a_i ∈ {0, …, m}`,
/// obtained by clearing forbidden factors left to right with zero templates.
pub fn normalize_neg(s: &RawDigitString, base: PisotBase) -> Result<Expansion, ArithError> {
    let mut reg = checked_register(s, base)?;
    reg.normalize(None)?;
    Ok(reg.to_expansion())
}

/// [`normalize_neg`] together with every intermediate rewrite.
pub fn normalize_neg_traced(s: &RawDigitString, base: PisotBase) -> Result<(Expansion, Vec<RewriteStep>), ArithError> {
    let mut reg = checked_register(s, base)?;
    let mut steps = Vec::new();
    reg.normalize(Some(&mut steps))?;
    Ok((reg.to_expansion(), steps))
}
