//! β- and (−β)-integers, their gaps, and the golden-ratio distance words.

use std::cmp::Ordering;
use std::fmt;
use std::io;

use thiserror::Error;

use crate::dwords::{format_expansion, is_admissible_pos, is_expansion_admissible_neg, Digit, EPWord, Expansion};
use crate::expander::{radix, BaseSign};
use crate::pbase::{Family, PisotBase};
use crate::qfield::FieldElement;

/// One integer of the numeration system with its expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPoint {
    pub value: FieldElement,
    pub expansion: Expansion,
}

/// All integers whose expansion has at most `digit_len` digits, in increasing
/// order. Together they are exactly the integers in the open interval
/// `window`: `(−β)^L·(l_β, r_β)` for the negative base, `(−β^L, β^L)` for the
/// positive one.
#[derive(Clone, Debug)]
pub struct IntegerSet {
    pub base: PisotBase,
    pub sign: BaseSign,
    pub digit_len: usize,
    pub window: (FieldElement, FieldElement),
    pub points: Vec<IntegerPoint>,
}

impl IntegerSet {
    pub fn values(&self) -> Vec<FieldElement> {
        self.points.iter().map(|p| p.value.clone()).collect()
    }

    /// Points in the closed interval `[lo, hi]`.
    pub fn between(&self, lo: &FieldElement, hi: &FieldElement) -> Vec<&IntegerPoint> {
        self.points.iter().filter(|p| p.value >= *lo && p.value <= *hi).collect()
    }

    pub fn nonnegative(&self) -> Vec<&IntegerPoint> {
        self.points.iter().filter(|p| !p.value.is_negative()).collect()
    }

    pub fn negative(&self) -> Vec<&IntegerPoint> {
        self.points.iter().filter(|p| p.value.is_negative()).collect()
    }

    /// Writes `a,b,d,value,expansion` rows, the value as a decimal.
    pub fn write_csv<W: io::Write>(&self, out: W, precision: usize) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["a", "b", "d", "value", "expansion"])?;
        let max = self.base.max_digit_neg();
        for p in &self.points {
            w.write_record([
                p.value.a().to_string(),
                p.value.b().to_string(),
                p.value.d().to_string(),
                p.value.to_decimal(precision),
                format_expansion(&p.expansion, max),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// The open interval holding exactly the integers with at most `len` digits.
pub fn complete_window(base: PisotBase, sign: BaseSign, len: usize) -> (FieldElement, FieldElement) {
    let scale = radix(base, sign).pow(len as i64);
    match sign {
        BaseSign::Negative => {
            let ends = base.endpoints();
            let (a, b) = (&scale * &ends.l, &scale * &ends.r);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        }
        BaseSign::Positive => (-&scale, scale),
    }
}

/// Whether the symbol at index `i` of a suffix compares in reverse; in the
/// alternate order that is every odd `j = i + 1`.
fn flips(sign: BaseSign, i: usize) -> bool {
    sign == BaseSign::Negative && i.is_multiple_of(2)
}

/// Order of a finite prefix `u` against `reference`, decided at the first
/// difference; `None` while `u` is a prefix of it.
fn prefix_order(u: &[Digit], reference: &EPWord, sign: BaseSign) -> Option<Ordering> {
    u.iter().enumerate().find_map(|(i, &d)| {
        let r = reference.at(i);
        (d != r).then(|| {
            let o = d.cmp(&r);
            if flips(sign, i) {
                o.reverse()
            } else {
                o
            }
        })
    })
}

/// Whether some suffix of `w` (including the one starting at an implicit
/// leading `0` for the negative base) has already left the admissible range.
fn prefix_dead(w: &[Digit], sign: BaseSign, refs: &crate::pbase::ReferenceWords) -> bool {
    match sign {
        BaseSign::Positive => {
            (0..w.len()).any(|s| prefix_order(&w[s..], &refs.dstar_pos, sign) == Some(Ordering::Greater))
        }
        BaseSign::Negative => {
            let mut padded = Vec::with_capacity(w.len() + 1);
            padded.push(0);
            padded.extend_from_slice(w);
            (0..padded.len()).any(|s| {
                let u = &padded[s..];
                prefix_order(u, &refs.d_l, sign) == Some(Ordering::Less)
                    || prefix_order(u, &refs.dstar_r, sign) == Some(Ordering::Greater)
            })
        }
    }
}

fn leaf_admissible(w: &[Digit], base: PisotBase, sign: BaseSign) -> bool {
    let word = EPWord::finite(w.to_vec());
    match sign {
        BaseSign::Positive => is_admissible_pos(&word, base),
        BaseSign::Negative => is_expansion_admissible_neg(&word, base),
    }
}

/// Admissible digit strings of exactly `len` digits (leading zeros allowed),
/// generated depth first with prefixes pruned against the reference words.
pub fn admissible_strings(base: PisotBase, sign: BaseSign, len: usize) -> Vec<Vec<Digit>> {
    let refs = base.reference_words();
    let max = match sign {
        BaseSign::Positive => base.max_digit_pos(),
        BaseSign::Negative => base.max_digit_neg(),
    };
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(len);
    fn walk(
        w: &mut Vec<Digit>,
        len: usize,
        max: Digit,
        base: PisotBase,
        sign: BaseSign,
        refs: &crate::pbase::ReferenceWords,
        out: &mut Vec<Vec<Digit>>,
    ) {
        if w.len() == len {
            if leaf_admissible(w, base, sign) {
                out.push(w.clone());
            }
            return;
        }
        for d in 0..=max {
            w.push(d);
            if !prefix_dead(w, sign, refs) {
                walk(w, len, max, base, sign, refs, out);
            }
            w.pop();
        }
    }
    walk(&mut w, len, max, base, sign, &refs, &mut out);
    out
}

/// The integers of base `±β` with at most `digit_len` digits, sorted. For the
/// positive base both `x` and `−x` are listed.
pub fn enumerate_integers(base: PisotBase, sign: BaseSign, digit_len: usize) -> IntegerSet {
    let rho = radix(base, sign);
    let mut points = Vec::new();
    for w in admissible_strings(base, sign, digit_len) {
        let mut value = FieldElement::zero(base);
        for &d in &w {
            value = &value * &rho + FieldElement::integer(d, base);
        }
        let expansion = Expansion::from_digits(w, digit_len as i64 - 1);
        if sign == BaseSign::Positive && !value.is_zero() {
            points.push(IntegerPoint { value: -&value, expansion: expansion.clone() });
        }
        points.push(IntegerPoint { value, expansion });
    }
    points.sort_by(|a, b| a.value.cmp(&b.value));
    IntegerSet { base, sign, digit_len, window: complete_window(base, sign, digit_len), points }
}

/// The smallest digit length whose complete window reaches beyond `bound`
/// on the positive side.
pub fn digit_len_reaching(base: PisotBase, sign: BaseSign, bound: &FieldElement) -> usize {
    (1..).find(|&len| complete_window(base, sign, len).1 > *bound).expect("windows grow without bound")
}

/// The `count` smallest non-negative integers, taken from a complete window.
pub fn first_nonnegative(base: PisotBase, sign: BaseSign, count: usize) -> Vec<IntegerPoint> {
    let mut len = 1;
    loop {
        let set = enumerate_integers(base, sign, len);
        let hi = set.window.1.clone();
        let nonneg: Vec<IntegerPoint> =
            set.points.into_iter().filter(|p| !p.value.is_negative() && p.value < hi).collect();
        if nonneg.len() >= count {
            return nonneg.into_iter().take(count).collect();
        }
        len += 1;
    }
}

/// Consecutive differences of sorted values.
pub fn gaps(values: &[FieldElement]) -> Vec<FieldElement> {
    values.windows(2).map(|w| &w[1] - &w[0]).collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Delta {
    /// A gap of 1.
    D0,
    /// A gap of 1/τ.
    D1,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DistanceWord {
    pub letters: Vec<Delta>,
}

impl DistanceWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_prefix_of(&self, other: &DistanceWord) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// `0` for Δ0 and `1` for Δ1.
    pub fn to_bits(&self) -> String {
        self.letters.iter().map(|d| if *d == Delta::D0 { '0' } else { '1' }).collect()
    }

    pub fn from_bits(bits: &str) -> Option<Self> {
        bits.chars()
            .map(|c| match c {
                '0' => Some(Delta::D0),
                '1' => Some(Delta::D1),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(|letters| DistanceWord { letters })
    }
}

impl fmt::Display for DistanceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.letters {
            f.write_str(if *d == Delta::D0 { "Δ0" } else { "Δ1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DistanceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistanceWord({})", self.to_bits())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GapError {
    #[error("distance letters need the field Q(sqrt 5); base {0} lies elsewhere")]
    NotGolden(PisotBase),
    #[error("gap {gap} after point {index} is neither 1 nor 1/tau")]
    NonStandardGap { index: usize, gap: String },
}

/// `1/τ` expressed in a base of the golden field: `β = (m + √5)/2`, so
/// `1/τ = (√5 − 1)/2 = β − (m + 1)/2`.
pub fn inverse_tau(base: PisotBase) -> Option<FieldElement> {
    base.is_golden_field().then(|| {
        let m = i64::from(base.m());
        FieldElement::from_ints(-(m + 1), 2, 2, base)
    })
}

/// `τ = β − (m − 1)/2` in a base of the golden field.
pub fn tau_in(base: PisotBase) -> Option<FieldElement> {
    base.is_golden_field().then(|| {
        let m = i64::from(base.m());
        &base.beta() - FieldElement::from_ints(m - 1, 0, 2, base)
    })
}

/// Re-expresses an element of a golden-field base over `τ` itself.
pub fn to_golden(x: &FieldElement) -> Option<FieldElement> {
    let base = x.base();
    if !base.is_golden_field() {
        return None;
    }
    // β = (m − 1)/2 + τ
    let m = num_bigint::BigInt::from(base.m());
    let a = x.a() * 2 + x.b() * (m - 1);
    let b = x.b() * 2;
    let d = x.d() * 2;
    Some(FieldElement::new(a, b, d, PisotBase::golden()).expect("positive denominator"))
}

/// Codes the gaps between consecutive values.
pub fn distance_word_of(values: &[FieldElement]) -> Result<DistanceWord, GapError> {
    let Some(first) = values.first() else {
        return Ok(DistanceWord::default());
    };
    let base = first.base();
    let d1 = inverse_tau(base).ok_or(GapError::NotGolden(base))?;
    let d0 = FieldElement::one(base);
    let letters = gaps(values)
        .into_iter()
        .enumerate()
        .map(|(index, g)| {
            if g == d0 {
                Ok(Delta::D0)
            } else if g == d1 {
                Ok(Delta::D1)
            } else {
                Err(GapError::NonStandardGap { index, gap: g.to_decimal(12) })
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(DistanceWord { letters })
}

/// Distance word of the points strictly inside the complete window of `s`.
pub fn distance_word(s: &IntegerSet) -> Result<DistanceWord, GapError> {
    let (lo, hi) = &s.window;
    let values: Vec<FieldElement> = s.values().into_iter().filter(|v| v > lo && v < hi).collect();
    distance_word_of(&values)
}

fn phi(word: &[Delta]) -> Vec<Delta> {
    let mut out = Vec::with_capacity(word.len() * 3);
    for d in word {
        match d {
            Delta::D0 => out.extend([Delta::D0, Delta::D0, Delta::D1]),
            Delta::D1 => out.extend([Delta::D0, Delta::D1]),
        }
    }
    out
}

/// Prefix of the fixed point `lim φⁿ(Δ0)` of `Δ0 ↦ Δ0Δ0Δ1`, `Δ1 ↦ Δ0Δ1`.
pub fn phi_fixed_point(length: usize) -> DistanceWord {
    let mut w = vec![Delta::D0];
    while w.len() < length {
        w = phi(&w);
    }
    w.truncate(length);
    DistanceWord { letters: w }
}

/// The last `length` letters of `φⁿ(Δ1)` for large `n`, in reading order:
/// the left half of the bidirectional word `lim φⁿ(Δ1)|φⁿ(Δ0)`.
pub fn phi_left_word(length: usize) -> DistanceWord {
    let mut w = vec![Delta::D1];
    while w.len() < length {
        w = phi(&w);
    }
    DistanceWord { letters: w.split_off(w.len() - length) }
}

/// Comparison of `Z_{−τ} ∩ [0, τ^k]` with `Z_{τ²} ∩ [0, τ^k]`.
#[derive(Clone, Debug)]
pub struct CoincidenceReport {
    pub bound_exponent: u32,
    /// Both point lists over `τ`.
    pub negative_base: Vec<FieldElement>,
    pub squared_base: Vec<FieldElement>,
    pub equal: bool,
    /// Index of the first disagreement, or the shorter length.
    pub first_mismatch: Option<usize>,
    pub negative_word: Result<DistanceWord, GapError>,
    pub squared_word: Result<DistanceWord, GapError>,
}

pub fn coincidence_check(bound_exponent: u32) -> CoincidenceReport {
    let tau = PisotBase::golden();
    let squared = PisotBase::new(3, 1, Family::PlusN).expect("τ² is a valid base");
    let collect = |base: PisotBase, sign: BaseSign| -> Vec<FieldElement> {
        let bound = tau_in(base).expect("golden field").pow(i64::from(bound_exponent));
        let len = digit_len_reaching(base, sign, &bound);
        let zero = FieldElement::zero(base);
        enumerate_integers(base, sign, len)
            .between(&zero, &bound)
            .into_iter()
            .map(|p| to_golden(&p.value).expect("golden field"))
            .collect()
    };
    let negative_base = collect(tau, BaseSign::Negative);
    let squared_base = collect(squared, BaseSign::Positive);
    let first_mismatch =
        negative_base.iter().zip(&squared_base).position(|(a, b)| a != b).or_else(|| {
            (negative_base.len() != squared_base.len()).then(|| negative_base.len().min(squared_base.len()))
        });
    CoincidenceReport {
        bound_exponent,
        equal: first_mismatch.is_none(),
        first_mismatch,
        negative_word: distance_word_of(&negative_base),
        squared_word: distance_word_of(&squared_base),
        negative_base,
        squared_base,
    }
}
