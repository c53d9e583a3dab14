//! Normalizing a digit string over {0, …, m} in base −β, one rewrite at a time.

use negabase::arithmetic::{normalize_neg_traced, RawDigitString};
use negabase::dwords::format_expansion;
use negabase::{BaseSign, Family, PisotBase};

fn main() {
    let base = PisotBase::new(2, 1, Family::MinusN).unwrap();
    let s = RawDigitString::parse("2022", base.max_digit_neg()).unwrap();
    let value = s.evaluate(base, BaseSign::Negative);
    let (e, steps) = normalize_neg_traced(&s, base).unwrap();
    println!("input {s:?} = {value:?}");
    for step in &steps {
        println!(
            "  {:?} at {:>3} ({:?}, run {}): {:?} -> {:?}",
            step.template, step.position, step.kind, step.run, step.before, step.after
        );
        assert_eq!(step.after.evaluate(base, BaseSign::Negative), value);
    }
    println!("result {}", format_expansion(&e, base.max_digit_neg()));
}
