//! Seeded property checks shared by the integration tests and the acceptance
//! runner. Each check returns the number of cases run or the first failure.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

use negabase::arithmetic::{add_neg, sigma_transport_add_tau};
use negabase::dwords::{alt_compare, format_expansion, lex_compare, parse_expansion};
use negabase::expander::expand_in_interval;
use negabase::integers::enumerate_integers;
use negabase::{evaluate, expand_real, BaseSign, Expansion, Family, FieldElement, PisotBase};

pub fn runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn report<V: std::fmt::Debug>(cases: u32, r: Result<(), TestError<V>>) -> Result<u32, String> {
    r.map(|_| cases).map_err(|e| e.to_string())
}

pub fn bases() -> Vec<PisotBase> {
    let minus = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2), (6, 5)];
    let plus = [(3, 1), (4, 1), (4, 2), (5, 3), (7, 2)];
    minus
        .iter()
        .map(|&(m, n)| PisotBase::new(m, n, Family::MinusN).unwrap())
        .chain(plus.iter().map(|&(m, n)| PisotBase::new(m, n, Family::PlusN).unwrap()))
        .collect()
}

pub fn minus_bases() -> Vec<PisotBase> {
    bases().into_iter().filter(|b| b.family() == Family::MinusN).collect()
}

/// `(a + bβ)/d` with the given coefficient bounds.
pub fn element(base: PisotBase, coeff: i64, den: i64) -> impl Strategy<Value = FieldElement> {
    (-coeff..=coeff, -coeff..=coeff, 1..=den).prop_map(move |(a, b, d)| FieldElement::from_ints(a, b, d, base))
}

fn with_base<S: Strategy, F: Fn(PisotBase) -> S + Clone + 'static>(
    f: F,
) -> impl Strategy<Value = (PisotBase, S::Value)> {
    prop::sample::select(bases()).prop_flat_map(move |b| (Just(b), f(b)))
}

/// Sign of `x` by bisection on rational enclosures.
pub fn bisection_sign(x: &FieldElement) -> Ordering {
    if x.is_zero() {
        return Ordering::Equal;
    }
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut width = BigRational::from_integer(BigInt::from(1));
    loop {
        let iv = x.refine_interval(&width);
        if iv.lo > zero {
            return Ordering::Greater;
        }
        if iv.hi < zero {
            return Ordering::Less;
        }
        width /= BigInt::from(1024);
    }
}

/// Ring laws, the conjugation automorphism, norms, inverses and the order.
pub fn ring_laws(cases: u32, seed: u8) -> Result<u32, String> {
    let strategy =
        with_base(|b| (element(b, 1_000_000, 1_000_000), element(b, 1_000_000, 1_000_000), element(b, 1000, 1000)));
    let r = runner(cases, seed).run(&strategy, |(base, (x, y, z))| {
        let one = FieldElement::one(base);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &y + &y - &x).is_zero());
        prop_assert_eq!(&x * &one, x.clone());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv(), one.clone());
        }
        let (sx, sy) = (x.conjugate(), y.conjugate());
        prop_assert_eq!((&x + &y).conjugate(), &sx + &sy);
        prop_assert_eq!((&x * &y).conjugate(), &sx * &sy);
        prop_assert_eq!(sx.conjugate(), x.clone());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        let prod = &x * &sx;
        prop_assert!(prod.is_rational());
        prop_assert_eq!(BigRational::new(prod.a().clone(), prod.d().clone()), x.norm());
        prop_assert_eq!(x.sign(), bisection_sign(&x));
        prop_assert_eq!(x.cmp(&y), bisection_sign(&(&x - &y)));
        let fl = BigRational::from_integer(x.floor());
        let iv = x.refine_interval(&BigRational::new(BigInt::from(1), BigInt::from(1 << 20)));
        prop_assert!(fl <= iv.hi && fl + BigInt::from(1) > iv.lo);
        Ok(())
    });
    report(cases, r)
}

/// A point `l + (r − l)·t` of the interval of `T_{±β}` with rational `t`.
fn interval_point(base: PisotBase, sign: BaseSign, num: i64, den: i64) -> FieldElement {
    let (lo, hi) = match sign {
        BaseSign::Negative => {
            let e = base.endpoints();
            (e.l, e.r)
        }
        BaseSign::Positive => (FieldElement::zero(base), FieldElement::one(base)),
    };
    let t = FieldElement::from_ints(num, 0, den, base);
    &lo + &(&(&hi - &lo) * &t)
}

/// `x < y` exactly when the `T_{−β}` words compare below in the alternate
/// order (and the `T_β` words lexicographically).
pub fn order_isomorphism(cases: u32, seed: u8) -> Result<u32, String> {
    let strategy = with_base(|_| (0i64..24, 0i64..24, 1i64..=24, 1i64..=24, any::<bool>()));
    let r = runner(cases, seed).run(&strategy, |(base, (p, q, dp, dq, positive))| {
        let sign = if positive { BaseSign::Positive } else { BaseSign::Negative };
        let x = interval_point(base, sign, p % dp, dp);
        let y = interval_point(base, sign, q % dq, dq);
        let (wx, wy) = (expand_in_interval(&x, sign).unwrap(), expand_in_interval(&y, sign).unwrap());
        let words = match sign {
            BaseSign::Negative => alt_compare(&wx, &wy),
            BaseSign::Positive => lex_compare(&wx, &wy),
        };
        prop_assert_eq!(x.cmp(&y), words, "{} {:?} {:?}", base, x, y);
        Ok(())
    });
    report(cases, r)
}

/// `expand → evaluate` is the identity and the text form round-trips.
pub fn round_trip(cases: u32, seed: u8) -> Result<u32, String> {
    let strategy = with_base(|b| (element(b, 60, 16), any::<bool>()));
    let r = runner(cases, seed).run(&strategy, |(base, (x, positive))| {
        let (sign, x, max) = if positive {
            (BaseSign::Positive, x.abs(), base.max_digit_pos())
        } else {
            (BaseSign::Negative, x, base.max_digit_neg())
        };
        let e = expand_real(&x, sign).unwrap();
        prop_assert_eq!(evaluate(&e, base, sign), x.clone());
        let text = format_expansion(&e, max);
        let back = parse_expansion(&text, max).unwrap();
        prop_assert_eq!(&back, &e);
        let again = expand_real(&evaluate(&back, base, sign), sign).unwrap();
        prop_assert_eq!(format_expansion(&again, max), text);
        Ok(())
    });
    report(cases, r)
}

pub fn golden_integers(len: usize) -> Vec<Expansion> {
    enumerate_integers(PisotBase::golden(), BaseSign::Negative, len).points.into_iter().map(|p| p.expansion).collect()
}

/// Addition through τ-carries under conjugation agrees with `add_neg`.
pub fn sigma_transport(cases: u32, seed: u8) -> Result<u32, String> {
    let ints = golden_integers(12);
    let strategy = (prop::sample::select(ints.clone()), prop::sample::select(ints));
    let tau = PisotBase::golden();
    let r = runner(cases, seed).run(&strategy, |(x, y)| {
        prop_assert_eq!(sigma_transport_add_tau(&x, &y).unwrap(), add_neg(&x, &y, tau).unwrap());
        Ok(())
    });
    report(cases, r)
}
