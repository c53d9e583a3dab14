//! Golden-ratio arithmetic: Zeckendorf carrying in base τ and addition of
//! (−τ)-integers through the automorphism `σ(τ) = −1/τ`.

use std::collections::BTreeMap;

use crate::dwords::{Digit, Expansion};
use crate::pbase::PisotBase;

use super::register::Register;
use super::{finite_admissible, ArithError, RawDigitString, ZeroTemplate};

/// Sparse non-negative digits keyed by position.
type Sparse = BTreeMap<i64, i64>;

fn bump(digits: &mut Sparse, position: i64, delta: i64) {
    let d = digits.entry(position).or_insert(0);
    *d += delta;
    if *d == 0 {
        digits.remove(&position);
    }
}

/// Rewrites `2 → 1 0 0 1` (`2τ^i = τ^{i+1} + τ^{i−2}`) and `0 1 1 → 1 0 0`,
/// always at the highest offending position, until the string is a
/// τ-expansion.
fn tau_carry(digits: &mut Sparse) -> Result<(), ArithError> {
    let limit = 1 << 20;
    for _ in 0..limit {
        if let Some((&i, _)) = digits.iter().rev().find(|(_, &d)| d >= 2) {
            bump(digits, i, -2);
            bump(digits, i + 1, 1);
            bump(digits, i - 2, 1);
            continue;
        }
        let pair = digits.keys().rev().find(|&&i| digits.contains_key(&(i - 1))).copied();
        match pair {
            Some(i) => {
                bump(digits, i, -1);
                bump(digits, i - 1, -1);
                bump(digits, i + 1, 1);
            }
            None => return Ok(()),
        }
    }
    Err(ArithError::NoProgress(limit))
}

fn sparse_to_expansion(digits: &Sparse) -> Expansion {
    let (Some((&lo, _)), Some((&hi, _))) = (digits.iter().next(), digits.iter().next_back()) else {
        return Expansion::zero();
    };
    let word: Vec<Digit> = (lo..=hi).rev().map(|p| digits.get(&p).copied().unwrap_or(0) as Digit).collect();
    Expansion::from_digits(word, hi)
}

/// The τ-expansion of a binary string, by repeated `011 → 100`.
pub fn normalize_pos_tau(s: &RawDigitString) -> Result<Expansion, ArithError> {
    let mut digits = Sparse::new();
    for (j, &d) in s.digits.iter().enumerate() {
        let position = s.top - j as i64;
        if !(0..=1).contains(&d) {
            return Err(ArithError::DigitOutOfRange { position, digit: d, max: 1 });
        }
        if d == 1 {
            digits.insert(position, 1);
        }
    }
    tau_carry(&mut digits)?;
    Ok(sparse_to_expansion(&digits))
}

/// `x + y` for (−τ)-integers computed in Fin(τ): the digits of `x` at
/// position `p` are the τ-digits of `σ(x)` at `−p`. The τ-expansion of
/// `σ(x) + σ(y)` is mapped back, its lowest `0 0 (1 0)^k 1` is cleared with
/// `1 1 (0 1)^k 1̄`, and the result is normalized.
pub fn sigma_transport_add_tau(x: &Expansion, y: &Expansion) -> Result<Expansion, ArithError> {
    let t = PisotBase::golden();
    let mut sum = Sparse::new();
    for e in [x, y] {
        finite_admissible(e, t)?;
        if e.fractional_length() != Some(0) {
            return Err(ArithError::NotInteger(super::show(e, t)));
        }
        for (j, &d) in e.word().preperiod().iter().enumerate() {
            if d != 0 {
                bump(&mut sum, -(e.top() - j as i64), i64::from(d));
            }
        }
    }
    tau_carry(&mut sum)?;
    let z: Sparse = sum.iter().map(|(&p, &d)| (-p, d)).collect();
    let Some((&low, _)) = z.iter().next() else {
        return Ok(Expansion::zero());
    };
    let hi = *z.keys().next_back().unwrap_or(&low);
    let mut raw = RawDigitString::new((low..=hi).rev().map(|p| z.get(&p).copied().unwrap_or(0)).collect(), hi);
    let k = (0..).take_while(|&j| raw.digit_at(low + 2 * j + 1) == 0 && raw.digit_at(low + 2 * j + 2) == 1).count();
    raw.add_template(&ZeroTemplate::tau_alternating(k), low + 2 * k as i64 + 2);
    let digits: Vec<Digit> = raw.digits.iter().map(|&d| d as Digit).collect();
    debug_assert!(raw.digits.iter().all(|&d| d == 0 || d == 1));
    let mut reg = Register::new(t, digits, raw.top);
    reg.normalize(None)?;
    Ok(reg.to_expansion())
}
