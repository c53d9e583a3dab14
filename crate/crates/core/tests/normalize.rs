use negabase::arithmetic::{normalize_neg, normalize_neg_traced, RawDigitString, TemplateSign, ZeroTemplate};
use negabase::{expand_real, BaseSign, Family, PisotBase};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn minus(m: u32, n: u32) -> PisotBase {
    PisotBase::new(m, n, Family::MinusN).unwrap()
}

fn all_strings(max_len: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<i64>| {
                (0..=m).map(move |d| {
                    let mut v = w.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn oracle_agrees(s: &RawDigitString, base: PisotBase) {
    let value = s.evaluate(base, BaseSign::Negative);
    let e = normalize_neg(s, base).unwrap_or_else(|err| panic!("{base} {s:?}: {err}"));
    assert_eq!(e, expand_real(&value, BaseSign::Negative).unwrap(), "{base} {s:?}");
}

#[test]
fn exhaustive_oracle_equivalence() {
    for (base, len) in [(minus(1, 1), 10), (minus(2, 1), 10), (minus(2, 2), 10), (minus(3, 2), 9)] {
        for digits in all_strings(len, i64::from(base.m())) {
            oracle_agrees(&RawDigitString::integer(digits), base);
        }
    }
}

#[test]
fn random_long_strings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let bases = [minus(1, 1), minus(2, 1), minus(2, 2), minus(3, 2)];
    for i in 0..10_000 {
        let base = bases[i % bases.len()];
        let len = rng.gen_range(11..=40);
        let digits: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=i64::from(base.m()))).collect();
        let top = rng.gen_range(-10..=30);
        oracle_agrees(&RawDigitString::new(digits, top), base);
    }
}

#[test]
fn every_rewrite_preserves_the_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for base in [minus(1, 1), minus(2, 1), minus(3, 2), minus(4, 4), minus(5, 2)] {
        for _ in 0..500 {
            let len = rng.gen_range(1..=24);
            let digits: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=i64::from(base.m()))).collect();
            let s = RawDigitString::integer(digits);
            let v = s.evaluate(base, BaseSign::Negative);
            let (_, steps) = normalize_neg_traced(&s, base).unwrap();
            for step in &steps {
                assert_eq!(step.before.evaluate(base, BaseSign::Negative), v);
                assert_eq!(step.after.evaluate(base, BaseSign::Negative), v);
                let template = match step.template {
                    TemplateSign::Plus => ZeroTemplate::plus(base),
                    TemplateSign::Minus => ZeroTemplate::minus(base),
                };
                assert!(template.is_zero_in(base));
            }
        }
    }
}

/// The left-most forbidden `m` moves strictly to the right (towards lower
/// powers) from one rewrite to the next.
#[test]
fn leftmost_forbidden_factor_moves_right() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for base in [minus(1, 1), minus(2, 1), minus(2, 2), minus(3, 2), minus(4, 1)] {
        for _ in 0..2000 {
            let len = rng.gen_range(1..=20);
            let digits: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=i64::from(base.m()))).collect();
            let (_, steps) = normalize_neg_traced(&RawDigitString::integer(digits.clone()), base).unwrap();
            for pair in steps.windows(2) {
                assert!(pair[1].position < pair[0].position, "{base} {digits:?}: {:?}", steps);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

proptest! {
    #[test]
    fn integer_input_has_at_most_one_fractional_digit(
        (m, n, digits) in (1u32..=5).prop_flat_map(|m| (Just(m), 1..=m))
            .prop_flat_map(|(m, n)| (Just(m), Just(n), prop::collection::vec(0..=i64::from(m), 1..16)))
    ) {
        let base = minus(m, n);
        let e = normalize_neg(&RawDigitString::integer(digits.clone()), base).unwrap();
        let frac = e.fractional_length().unwrap();
        prop_assert!(frac <= 1);
        if frac == 1 {
            prop_assert!(m > n && *digits.last().unwrap() == i64::from(m));
        }
    }
}
