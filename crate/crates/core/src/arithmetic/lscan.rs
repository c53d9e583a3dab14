//! Empirical `L⊕` / `L⊗`: the longest finite fractional part produced by
//! adding or multiplying integers of the numeration system.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::dwords::Expansion;
use crate::expander::{expand_real, BaseSign};
use crate::integers::enumerate_integers;
use crate::pbase::PisotBase;
use crate::qfield::FieldElement;

use super::ArithError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Add,
    Mul,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Add => "add",
            Operation::Mul => "mul",
        })
    }
}

impl FromStr for Operation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "add" => Ok(Operation::Add),
            "mul" => Ok(Operation::Mul),
            _ => Err(format!("unknown operation `{s}` (expected `add` or `mul`)")),
        }
    }
}

/// The pair attaining the maximum. For the positive base `difference` marks
/// that the result is `|x − y|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: Expansion,
    pub y: Expansion,
    pub result: Expansion,
    pub difference: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LScanReport {
    pub base: PisotBase,
    pub sign: BaseSign,
    pub op: Operation,
    pub max_len: usize,
    pub operands: usize,
    pub results: u64,
    /// `None` when no result was finite.
    pub max: Option<usize>,
    pub witness: Option<Witness>,
    pub infinite_count: u64,
}

/// Integers with at most `max_len` digits that enter the scan; non-negative
/// ones only for the positive base.
pub fn l_scan_operands(base: PisotBase, sign: BaseSign, max_len: usize) -> Vec<(FieldElement, Expansion)> {
    enumerate_integers(base, sign, max_len)
        .points
        .into_iter()
        .filter(|p| sign == BaseSign::Negative || !p.value.is_negative())
        .map(|p| (p.value, p.expansion))
        .collect()
}

/// Best candidate so far: longest fractional part, then smallest
/// `(i, j, variant)`.
type Best = Option<(usize, Reverse<(usize, usize, u8)>, Expansion)>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, b) => b,
        (a, None) => a,
        (Some(a), Some(b)) => match (a.0, &a.1).cmp(&(b.0, &b.1)) {
            Ordering::Less => Some(b),
            _ => Some(a),
        },
    }
}

/// Scans all pairs `i ≤ j` of operands. Infinite results are counted apart
/// and never contribute to the maximum. The outcome does not depend on the
/// number of worker threads.
pub fn l_scan(base: PisotBase, sign: BaseSign, op: Operation, max_len: usize) -> Result<LScanReport, ArithError> {
    let operands = l_scan_operands(base, sign, max_len);
    let n = operands.len();
    let run = |i: usize| -> Result<(Best, u64, u64), ArithError> {
        let mut best: Best = None;
        let (mut results, mut infinite) = (0u64, 0u64);
        let x = &operands[i].0;
        for (j, (y, _)) in operands.iter().enumerate().skip(i) {
            let mut values = Vec::with_capacity(2);
            match op {
                Operation::Mul => values.push((x * y, 0u8)),
                Operation::Add => {
                    values.push((x + y, 0u8));
                    if sign == BaseSign::Positive {
                        values.push(((x - y).abs(), 1u8));
                    }
                }
            }
            for (value, variant) in values {
                results += 1;
                let e = expand_real(&value, sign)?;
                match e.fractional_length() {
                    None => infinite += 1,
                    Some(f) => best = better(best, Some((f, Reverse((i, j, variant)), e))),
                }
            }
        }
        Ok((best, results, infinite))
    };
    let partial: Vec<(Best, u64, u64)> = (0..n).into_par_iter().map(run).collect::<Result<_, _>>()?;
    let mut best: Best = None;
    let (mut results, mut infinite_count) = (0, 0);
    for (b, r, inf) in partial {
        best = better(best, b);
        results += r;
        infinite_count += inf;
    }
    let (max, witness) = match best {
        None => (None, None),
        Some((f, Reverse((i, j, variant)), result)) => (
            Some(f),
            Some(Witness { x: operands[i].1.clone(), y: operands[j].1.clone(), result, difference: variant == 1 }),
        ),
    };
    Ok(LScanReport { base, sign, op, max_len, operands: n, results, max, witness, infinite_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expander::evaluate;

    #[test]
    fn golden_small_scans() {
        let t = PisotBase::golden();
        for (sign, op) in [
            (BaseSign::Negative, Operation::Add),
            (BaseSign::Negative, Operation::Mul),
            (BaseSign::Positive, Operation::Add),
            (BaseSign::Positive, Operation::Mul),
        ] {
            let r = l_scan(t, sign, op, 6).unwrap();
            assert_eq!(r.max, Some(2), "{sign} {op}");
            let w = r.witness.unwrap();
            let (x, y) = (evaluate(&w.x, t, sign), evaluate(&w.y, t, sign));
            let expected = match (op, w.difference) {
                (Operation::Add, false) => x + y,
                (Operation::Add, true) => (x - y).abs(),
                (Operation::Mul, _) => x * y,
            };
            assert_eq!(evaluate(&w.result, t, sign), expected);
            assert_eq!(w.result.fractional_length(), Some(2));
        }
    }

    #[test]
    fn merge_prefers_length_then_index() {
        let e = Expansion::zero();
        let a: Best = Some((2, Reverse((3, 4, 0)), e.clone()));
        let b: Best = Some((2, Reverse((1, 9, 0)), e.clone()));
        let c: Best = Some((1, Reverse((0, 0, 0)), e));
        assert_eq!(better(a.clone(), b.clone()), b);
        assert_eq!(better(b.clone(), a.clone()), b);
        assert_eq!(better(c.clone(), a.clone()), a);
        assert_eq!(better(None, c.clone()), c);
    }
}
