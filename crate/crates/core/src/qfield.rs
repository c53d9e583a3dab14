//! Exact arithmetic in the real quadratic field Q(β).
//!
//! Elements are stored as `(a + b·β)/d` with arbitrary-precision integers in
//! lowest terms and `d > 0`, so value equality is structural equality. The
//! real embedding sends β to the dominant root; signs and floors are decided
//! exactly by writing `2(a + b·β) = (2a + b·m) + b·√D` with `D = m² + 4c` and
//! comparing squares of integers. [`FieldElement::refine_interval`] gives an
//! independent rational enclosure obtained by bisecting the minimal polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::pbase::PisotBase;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("operands live in different fields: {0} vs {1}")]
    BaseMismatch(PisotBase, PisotBase),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse field element `{0}`")]
    Syntax(String),
}

/// An exact element `(a + b·β)/d` of Q(β).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: BigInt,
    b: BigInt,
    d: BigInt,
    base: PisotBase,
}

impl FieldElement {
    /// Builds `(a + b·β)/d` in canonical form.
    pub fn new(a: BigInt, b: BigInt, d: BigInt, base: PisotBase) -> Result<Self, FieldError> {
        if d.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::canonical(a, b, d, base))
    }

    /// Convenience constructor for small coefficients; panics if `d == 0`.
    pub fn from_ints(a: i64, b: i64, d: i64, base: PisotBase) -> Self {
        Self::new(a.into(), b.into(), d.into(), base).expect("nonzero denominator")
    }

    pub fn zero(base: PisotBase) -> Self {
        Self::from_ints(0, 0, 1, base)
    }

    pub fn one(base: PisotBase) -> Self {
        Self::from_ints(1, 0, 1, base)
    }

    pub fn integer(k: impl Into<BigInt>, base: PisotBase) -> Self {
        FieldElement { a: k.into(), b: BigInt::zero(), d: BigInt::one(), base }
    }

    pub fn beta(base: PisotBase) -> Self {
        Self::from_ints(0, 1, 1, base)
    }

    fn canonical(mut a: BigInt, mut b: BigInt, mut d: BigInt, base: PisotBase) -> Self {
        let g = a.gcd(&b).gcd(&d);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            d /= &g;
        }
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        FieldElement { a, b, d, base }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn base(&self) -> PisotBase {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.d.is_one()
    }

    fn check_base(&self, other: &Self) -> Result<(), FieldError> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(FieldError::BaseMismatch(self.base, other.base))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_base(other)?;
        let a = &self.a * &other.d + &other.a * &self.d;
        let b = &self.b * &other.d + &other.b * &self.d;
        Ok(Self::canonical(a, b, &self.d * &other.d, self.base))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_add(&-other)
    }

    /// Product, reducing with `β² = m·β + c`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_base(other)?;
        let m = BigInt::from(self.base.m());
        let c = BigInt::from(self.base.c());
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a + &c * &bb;
        let b = &self.a * &other.b + &other.a * &self.b + &m * &bb;
        Ok(Self::canonical(a, b, &self.d * &other.d, self.base))
    }

    /// The Galois conjugate: β ↦ γ = m − β.
    pub fn conjugate(&self) -> Self {
        let m = BigInt::from(self.base.m());
        Self::canonical(&self.a + &self.b * m, -&self.b, self.d.clone(), self.base)
    }

    /// Field norm `x·σ(x)`, a rational number.
    pub fn norm(&self) -> BigRational {
        let m = BigInt::from(self.base.m());
        let c = BigInt::from(self.base.c());
        let num = &self.a * &self.a + &self.a * &self.b * m - c * &self.b * &self.b;
        BigRational::new(num, &self.d * &self.d)
    }

    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/x = σ(x)/N(x)
        let n = self.norm();
        let conj = self.conjugate();
        let (nn, nd) = (n.numer().clone(), n.denom().clone());
        // σ(x)/N = (a' + b'β)/d' · nd/nn
        Some(Self::canonical(conj.a * &nd, conj.b * &nd, conj.d * nn, self.base))
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }

    /// `self^k` for any integer `k` (negative powers invert; `0^k` panics for `k < 0`).
    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.base);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sign of the real value: `Less` for negative, `Equal` for zero,
    /// `Greater` for positive.
    pub fn sign(&self) -> Ordering {
        let m = BigInt::from(self.base.m());
        let p = BigInt::from(2) * &self.a + &self.b * m;
        sign_of_surd(&p, &self.b, self.base.discriminant())
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.div_floor(&self.d);
        }
        // x = (p + b√D)/(2d)
        let m = BigInt::from(self.base.m());
        let p = BigInt::from(2) * &self.a + &self.b * m;
        let r = BigInt::from(2) * &self.d;
        let disc = BigInt::from(self.base.discriminant());
        let root = (&self.b * &self.b * disc).sqrt();
        // b√D is irrational, so its floor is root or −root − 1
        let t = if self.b.is_positive() { root } else { -root - 1 };
        (p + t).div_floor(&r)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// A rational enclosure `[lo, hi]` of the value with `hi − lo ≤ width`,
    /// obtained by bisecting β's bracket `[1, m + 1]` on the minimal polynomial.
    pub fn refine_interval(&self, width: &BigRational) -> RationalInterval {
        assert!(width.is_positive(), "width must be positive");
        let d = BigRational::from_integer(self.d.clone());
        let a = BigRational::from_integer(self.a.clone()) / &d;
        if self.b.is_zero() {
            return RationalInterval { lo: a.clone(), hi: a };
        }
        let b = BigRational::from_integer(self.b.clone()) / &d;
        let beta_width = width / b.abs();
        let beta = beta_enclosure(self.base, &beta_width);
        let (x, y) = (&a + &b * &beta.lo, &a + &b * &beta.hi);
        if b.is_positive() {
            RationalInterval { lo: x, hi: y }
        } else {
            RationalInterval { lo: y, hi: x }
        }
    }

    /// Decimal rendering truncated toward zero after `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = &self.abs() * &FieldElement::integer(scale.clone(), self.base);
        let t = scaled.floor();
        let (int, frac) = t.div_rem(&scale);
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
        }
    }

    /// Rough `f64` value, for display only.
    pub fn to_f64(&self) -> f64 {
        let beta = (f64::from(self.base.m()) + (self.base.discriminant() as f64).sqrt()) / 2.0;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (a + b * beta) / d
    }

    /// Parses `"a b d"`, `"a b"`, `"a"`, or an expression such as
    /// `"(a+b*beta)/d"`, `"-3+2beta"`, `"beta/5"`.
    pub fn parse(text: &str, base: PisotBase) -> Result<Self, FieldError> {
        parse_element(text, base)
    }
}

/// Exact sign of `p + q·√D` for a positive non-square `D`.
fn sign_of_surd(p: &BigInt, q: &BigInt, disc: i64) -> Ordering {
    let sp = p.sign_cmp();
    let sq = q.sign_cmp();
    if sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sq {
        return sq;
    }
    // opposite signs: whichever magnitude is larger wins
    let lhs = p * p;
    let rhs = q * q * BigInt::from(disc);
    match lhs.cmp(&rhs) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => unreachable!("discriminant is not a perfect square"),
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Rational bracket of the dominant root of `x² − m·x − c`, narrowed by
/// bisection to width at most `width`.
pub fn beta_enclosure(base: PisotBase, width: &BigRational) -> RationalInterval {
    let m = BigRational::from_integer(base.m().into());
    let c = BigRational::from_integer(base.c().into());
    let f = |t: &BigRational| t * t - &m * t - &c;
    let mut lo = BigRational::one();
    let mut hi = &m + BigRational::one();
    debug_assert!(f(&lo).is_negative() && f(&hi).is_positive());
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if f(&mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RationalInterval { lo, hi }
}

/// A closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        self.lo <= *q && *q <= self.hi
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Real order. Panics when comparing elements of different fields.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}β)/{} [{}]", self.a, self.b, self.d, self.base)
    }
}

/// The `"a b d"` text form.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.d)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FieldElement", 3)?;
        s.serialize_field("a", &big_number(&self.a))?;
        s.serialize_field("b", &big_number(&self.b))?;
        s.serialize_field("d", &big_number(&self.d))?;
        s.end()
    }
}

/// An exact JSON number for an arbitrary-precision integer.
pub(crate) fn big_number(x: &BigInt) -> serde_json::Number {
    x.to_string().parse().expect("integers are valid JSON numbers")
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { a: -&self.a, b: -&self.b, d: self.d.clone(), base: self.base }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                let f: fn(&FieldElement, &FieldElement) -> FieldElement = $body;
                f(self, rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

// The operator forms panic on a base mismatch; use the `try_*` methods to
// get an error instead.
binop!(Add, add, |x, y| x.try_add(y).unwrap());
binop!(Sub, sub, |x, y| x.try_sub(y).unwrap());
binop!(Mul, mul, |x, y| x.try_mul(y).unwrap());
binop!(Div, div, |x, y| {
    x.check_base(y).unwrap();
    x * &y.inv()
});

fn parse_element(text: &str, base: PisotBase) -> Result<FieldElement, FieldError> {
    let err = || FieldError::Syntax(text.to_string());
    let trimmed = text.trim();
    let words: Vec<&str> = trimmed.split_whitespace().collect();
    let all_ints = !words.is_empty() && words.len() <= 3 && words.iter().all(|w| w.parse::<BigInt>().is_ok());
    if all_ints && words.len() > 1 {
        let ints: Vec<BigInt> = words.iter().map(|w| w.parse().unwrap()).collect();
        let (a, b, d) = match ints.as_slice() {
            [a, b] => (a.clone(), b.clone(), BigInt::one()),
            [a, b, d] => (a.clone(), b.clone(), d.clone()),
            _ => unreachable!(),
        };
        return FieldElement::new(a, b, d, base);
    }
    let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = ExprParser { chars: compact.as_bytes(), pos: 0, base };
    let v = p.quotient().ok_or_else(err)?;
    if p.pos != p.chars.len() {
        return Err(err());
    }
    Ok(v)
}

/// `quotient := sum ('/' integer)?`, `sum := ['+'|'-'] term (('+'|'-') term)*`,
/// `term := integer ['*'] 'beta' | integer | 'beta' | '(' quotient ')'`.
struct ExprParser<'a> {
    chars: &'a [u8],
    pos: usize,
    base: PisotBase,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if self.chars[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.chars[start..self.pos]).ok()?.parse().ok()
    }

    fn quotient(&mut self) -> Option<FieldElement> {
        let v = self.sum()?;
        if self.eat(b'/') {
            let negative = self.eat(b'-');
            let d = self.integer()?;
            if d.is_zero() {
                return None;
            }
            let d = if negative { -d } else { d };
            return Some(v * FieldElement::new(BigInt::one(), BigInt::zero(), d, self.base).ok()?);
        }
        Some(v)
    }

    fn sum(&mut self) -> Option<FieldElement> {
        let mut acc = FieldElement::zero(self.base);
        let mut first = true;
        loop {
            let negative = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            acc = if negative { acc - t } else { acc + t };
            first = false;
        }
        Some(acc)
    }

    fn term(&mut self) -> Option<FieldElement> {
        if self.eat(b'(') {
            let v = self.quotient()?;
            return self.eat(b')').then_some(v);
        }
        if self.eat_word("beta") {
            return Some(FieldElement::beta(self.base));
        }
        let k = self.integer()?;
        let star = self.eat(b'*');
        if self.eat_word("beta") {
            return FieldElement::new(BigInt::zero(), k, BigInt::one(), self.base).ok();
        }
        if star {
            return None;
        }
        Some(FieldElement::integer(k, self.base))
    }
}
