mod common;

use negabase::FieldElement;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use proptest::prelude::*;

#[test]
fn beta_and_its_conjugate_are_roots() {
    for base in common::bases() {
        let beta = FieldElement::beta(base);
        let (m, c) = (FieldElement::integer(base.m(), base), FieldElement::integer(base.c(), base));
        for x in [beta.clone(), beta.conjugate()] {
            assert!((&(&x * &x) - &(&(&m * &x) + &c)).is_zero(), "{base}");
        }
        let s = beta.conjugate();
        let one = FieldElement::one(base);
        assert!((&one - &s).is_positive() && (&s + &one).is_positive(), "{base}");
        assert!(beta > one);
    }
}

#[test]
fn floor_and_sign_against_fine_enclosures() {
    let width = BigRational::new(BigInt::from(1), BigInt::from(10).pow(30u32));
    let strategy = prop::sample::select(common::bases()).prop_flat_map(|b| common::element(b, 1_000_000, 1_000_000));
    common::runner(10_000, 31)
        .run(&strategy, |x| {
            let iv = x.refine_interval(&width);
            prop_assert!(iv.width() <= width);
            let fl = BigRational::from_integer(x.floor());
            prop_assert!(fl <= iv.hi && fl.clone() + BigInt::from(1) > iv.lo);
            if iv.lo.numer() > &BigInt::from(0) {
                prop_assert!(x.is_positive());
            } else if iv.hi.numer() < &BigInt::from(0) {
                prop_assert!(x.is_negative());
            }
            prop_assert_eq!(x.sign(), common::bisection_sign(&x));
            Ok(())
        })
        .unwrap();
}
