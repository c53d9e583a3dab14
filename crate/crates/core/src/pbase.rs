//! Quadratic Pisot bases.
//!
//! A base is the dominant root β of either `x² − m·x − n` (with `m ≥ n ≥ 1`)
//! or `x² − m·x + n` (with `m ≥ n + 2 ≥ 3`). These are exactly the quadratic
//! Pisot numbers. Every base also carries the data needed by the admissibility
//! tests: the interval `[l_β, r_β)` of the negative-base transformation and the
//! three reference words.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::dwords::{Digit, EPWord};
use crate::qfield::FieldElement;

/// Which of the two quadratic Pisot families a base belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Minimal polynomial `x² − m·x − n`.
    MinusN,
    /// Minimal polynomial `x² − m·x + n`.
    PlusN,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseError {
    #[error("x^2 - {m}x - {n} requires m >= n >= 1")]
    MinusNRange { m: u32, n: u32 },
    #[error("x^2 - {m}x + {n} requires m >= n + 2 >= 3")]
    PlusNRange { m: u32, n: u32 },
    #[error("cannot parse base `{0}`: expected `m,n,-` or `m,n,+`")]
    Syntax(String),
}

/// A quadratic Pisot base β.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PisotBase {
    m: u32,
    n: u32,
    family: Family,
}

impl PisotBase {
    pub fn new(m: u32, n: u32, family: Family) -> Result<Self, BaseError> {
        match family {
            Family::MinusN if n >= 1 && m >= n => {}
            Family::MinusN => return Err(BaseError::MinusNRange { m, n }),
            Family::PlusN if n >= 1 && m >= n + 2 => {}
            Family::PlusN => return Err(BaseError::PlusNRange { m, n }),
        }
        Ok(PisotBase { m, n, family })
    }

    /// The golden ratio τ, root of `x² − x − 1`.
    pub fn golden() -> Self {
        PisotBase { m: 1, n: 1, family: Family::MinusN }
    }

    /// τ², root of `x² − 3x + 1`.
    pub fn golden_squared() -> Self {
        PisotBase { m: 3, n: 1, family: Family::PlusN }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The constant `c` in `β² = m·β + c`.
    pub fn c(&self) -> i64 {
        match self.family {
            Family::MinusN => i64::from(self.n),
            Family::PlusN => -i64::from(self.n),
        }
    }

    /// Discriminant `m² + 4c`; never a perfect square for a valid base.
    pub fn discriminant(&self) -> i64 {
        let m = i64::from(self.m);
        m * m + 4 * self.c()
    }

    /// `⌊β⌋`, the largest digit of the negative-base alphabet.
    pub fn max_digit_neg(&self) -> Digit {
        match self.family {
            Family::MinusN => self.m,
            Family::PlusN => self.m - 1,
        }
    }

    /// `⌈β⌉ − 1`, the largest digit of the positive-base alphabet.
    /// β is irrational, so this coincides with `⌊β⌋`.
    pub fn max_digit_pos(&self) -> Digit {
        self.max_digit_neg()
    }

    pub fn beta(&self) -> FieldElement {
        FieldElement::beta(*self)
    }

    /// The interval `[l_β, r_β)` on which `T_{−β}` acts.
    pub fn endpoints(&self) -> Endpoints {
        let beta = self.beta();
        let one = FieldElement::one(*self);
        let l = -(&beta / &(&beta + &one));
        let r = &l + &one;
        Endpoints { l, r }
    }

    /// Closed forms of `d*_β(1)`, `d_{−β}(l_β)` and `d*_{−β}(r_β)`.
    pub fn reference_words(&self) -> ReferenceWords {
        let (m, n) = (self.m, self.n);
        let (dstar_pos, d_l) = match self.family {
            // d*(1) = (m (n−1))^ω, d(l) = m (m−n)^ω
            Family::MinusN => (EPWord::new(vec![], vec![m, n - 1]), EPWord::new(vec![m], vec![m - n])),
            // d*(1) = (m−1)(m−n−1)^ω, d(l) = ((m−1) n)^ω
            Family::PlusN => (EPWord::new(vec![m - 1], vec![m - n - 1]), EPWord::new(vec![], vec![m - 1, n])),
        };
        let dstar_r = upper_reference(&d_l);
        ReferenceWords { dstar_pos, d_l, dstar_r }
    }

    /// Whether the field is `Q(√5)` and therefore contains `1/τ`.
    pub fn is_golden_field(&self) -> bool {
        self.discriminant() == 5
    }
}

/// `d*_{−β}(r_β)` from `d_{−β}(l_β)`: a purely periodic word of odd period
/// `(d_1 … d_{2k+1})^ω` maps to `(0 d_1 … (d_{2k+1} − 1))^ω`, everything else
/// to `0·d_{−β}(l_β)`.
pub(crate) fn upper_reference(d_l: &EPWord) -> EPWord {
    let period = d_l.period();
    if d_l.preperiod().is_empty() && period.len() % 2 == 1 {
        let mut p = Vec::with_capacity(period.len() + 1);
        p.push(0);
        p.extend_from_slice(period);
        *p.last_mut().unwrap() -= 1;
        EPWord::new(vec![], p)
    } else {
        d_l.prepend(0)
    }
}

impl fmt::Display for PisotBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.family {
            Family::MinusN => '-',
            Family::PlusN => '+',
        };
        write!(f, "{},{},{}", self.m, self.n, sign)
    }
}

impl FromStr for PisotBase {
    type Err = BaseError;

    /// Parses `m,n,-` (for `x² − mx − n`) or `m,n,+` (for `x² − mx + n`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || BaseError::Syntax(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(syntax());
        }
        let m = parts[0].parse().map_err(|_| syntax())?;
        let n = parts[1].parse().map_err(|_| syntax())?;
        let family = match parts[2] {
            "-" => Family::MinusN,
            "+" => Family::PlusN,
            _ => return Err(syntax()),
        };
        PisotBase::new(m, n, family)
    }
}

/// `l_β = −β/(β+1)` and `r_β = l_β + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub l: FieldElement,
    pub r: FieldElement,
}

impl Endpoints {
    /// `l ≤ x < r`
    pub fn contains(&self, x: &FieldElement) -> bool {
        *x >= self.l && *x < self.r
    }

    /// `l < x < r`
    pub fn contains_open(&self, x: &FieldElement) -> bool {
        *x > self.l && *x < self.r
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceWords {
    /// `d*_β(1)`, the quasi-greedy expansion of 1.
    pub dstar_pos: EPWord,
    /// `d_{−β}(l_β)`
    pub d_l: EPWord,
    /// `d*_{−β}(r_β)`
    pub dstar_r: EPWord,
}
