//! β- and (−β)-expansions of elements of Q(β).
//!
//! Digits come from iterating the exact transformations
//! `T_β(x) = βx − ⌊βx⌋` on `[0, 1)` and
//! `T_{−β}(x) = −βx − ⌊−βx − l_β⌋` on `[l_β, r_β)`.
//! For a Pisot base every orbit in Q(β) is eventually periodic, so the digit
//! stream is recovered exactly by remembering visited states.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::dwords::{Digit, EPWord, Expansion};
use crate::pbase::PisotBase;
use crate::qfield::FieldElement;

/// Whether digits multiply powers of `β` or of `−β`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseSign {
    Positive,
    Negative,
}

impl fmt::Display for BaseSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseSign::Positive => "pos",
            BaseSign::Negative => "neg",
        })
    }
}

impl std::str::FromStr for BaseSign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pos" | "+" | "positive" => Ok(BaseSign::Positive),
            "neg" | "-" | "negative" => Ok(BaseSign::Negative),
            _ => Err(format!("unknown sign `{s}` (expected `pos` or `neg`)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpandError {
    #[error("{value} is outside the domain {domain}")]
    Domain { value: String, domain: &'static str },
    #[error("positive-base expansions are defined for x >= 0; got {0}")]
    NegativeInput(String),
}

fn domain_error(x: &FieldElement, domain: &'static str) -> ExpandError {
    ExpandError::Domain { value: x.to_decimal(12), domain }
}

/// `±β` as a field element.
pub fn radix(base: PisotBase, sign: BaseSign) -> FieldElement {
    match sign {
        BaseSign::Positive => base.beta(),
        BaseSign::Negative => -base.beta(),
    }
}

/// A point of a `T_{±β}` orbit together with its step index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitState {
    pub value: FieldElement,
    pub step: usize,
}

fn to_digit(k: BigInt) -> Digit {
    k.to_u32().expect("transformation digits are small")
}

/// One step of `T_β`: `(⌊βx⌋, βx − ⌊βx⌋)` for `0 ≤ x < 1`.
pub fn t_pos_step(x: &FieldElement) -> Result<(Digit, FieldElement), ExpandError> {
    let base = x.base();
    if x.is_negative() || *x >= FieldElement::one(base) {
        return Err(domain_error(x, "[0, 1)"));
    }
    let y = &base.beta() * x;
    let digit = y.floor();
    let next = y - FieldElement::integer(digit.clone(), base);
    Ok((to_digit(digit), next))
}

/// One step of `T_{−β}`: `(⌊−βx − l_β⌋, −βx − digit)` for `l_β ≤ x < r_β`.
pub fn t_neg_step(x: &FieldElement) -> Result<(Digit, FieldElement), ExpandError> {
    let base = x.base();
    let ends = base.endpoints();
    if !ends.contains(x) {
        return Err(domain_error(x, "[l, r)"));
    }
    let y = -(&base.beta() * x);
    let digit = (&y - &ends.l).floor();
    let next = y - FieldElement::integer(digit.clone(), base);
    Ok((to_digit(digit), next))
}

/// The digit stream `d_{±β}(x)` of a point of the transformation's domain.
pub fn expand_in_interval(x: &FieldElement, sign: BaseSign) -> Result<EPWord, ExpandError> {
    let step = match sign {
        BaseSign::Positive => t_pos_step,
        BaseSign::Negative => t_neg_step,
    };
    let mut seen: HashMap<FieldElement, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut state = OrbitState { value: x.clone(), step: 0 };
    loop {
        if let Some(&first) = seen.get(&state.value) {
            let period = digits.split_off(first);
            return Ok(EPWord::new(digits, period));
        }
        let (d, next) = step(&state.value)?;
        seen.insert(state.value, state.step);
        digits.push(d);
        state = OrbitState { value: next, step: state.step + 1 };
    }
}

/// The `±β`-expansion of `x`.
///
/// For the negative base the leading position is the least `k ≥ 0` with
/// `(−β)^{−k}·x` strictly inside `(l_β, r_β)`; the open interval makes
/// `⟨l_β⟩ = 1 d_1 • d_2 d_3 ⋯` come out on its own. For the positive base
/// it is the least `k ≥ 0` with `β^{−k}·x ∈ [0, 1)`.
pub fn expand_real(x: &FieldElement, sign: BaseSign) -> Result<Expansion, ExpandError> {
    let base = x.base();
    if x.is_zero() {
        return Ok(Expansion::zero());
    }
    let inv = radix(base, sign).inv();
    let inside: Box<dyn Fn(&FieldElement) -> bool> = match sign {
        BaseSign::Positive => {
            if x.is_negative() {
                return Err(ExpandError::NegativeInput(x.to_decimal(12)));
            }
            let one = FieldElement::one(base);
            Box::new(move |y: &FieldElement| *y < one)
        }
        BaseSign::Negative => {
            let ends = base.endpoints();
            Box::new(move |y: &FieldElement| ends.contains_open(y))
        }
    };
    let mut k: i64 = 0;
    let mut scaled = x.clone();
    while !inside(&scaled) {
        scaled = &scaled * &inv;
        k += 1;
    }
    let word = expand_in_interval(&scaled, sign)?;
    Ok(Expansion::new(word, k - 1))
}

/// Exact value of `Σ digit_i (±β)^(top − i)`; works for any digits,
/// admissible or not. The periodic tail is summed as a geometric series.
pub fn evaluate(e: &Expansion, base: PisotBase, sign: BaseSign) -> FieldElement {
    let rho = radix(base, sign);
    let inv = rho.inv();
    let word = e.word();
    let pre = word.preperiod();
    let head = horner(pre, &rho, base);
    // head is the value with the last preperiod digit at position 0
    let last_pre = e.top() - pre.len() as i64 + 1;
    let mut value = &head * &rho.pow(last_pre);
    let per = word.period();
    if !per.is_empty() {
        let p = per.len() as i64;
        let block = horner(per, &rho, base);
        // first period digit sits at position top − |pre|
        let lead = e.top() - pre.len() as i64;
        let block_value = &block * &rho.pow(lead - p + 1);
        let q = inv.pow(p);
        value = value + block_value / (FieldElement::one(base) - q);
    }
    value
}

/// Value of a finite raw digit string with signed digits; `digits[0]` sits at
/// position `top`.
pub fn evaluate_signed(digits: &[i64], top: i64, base: PisotBase, sign: BaseSign) -> FieldElement {
    let rho = radix(base, sign);
    let mut acc = FieldElement::zero(base);
    for &d in digits {
        acc = &acc * &rho + FieldElement::integer(d, base);
    }
    let low = top - digits.len() as i64 + 1;
    acc * rho.pow(low)
}

fn horner(digits: &[Digit], rho: &FieldElement, base: PisotBase) -> FieldElement {
    let mut acc = FieldElement::zero(base);
    for &d in digits {
        acc = &acc * rho + FieldElement::integer(d, base);
    }
    acc
}
