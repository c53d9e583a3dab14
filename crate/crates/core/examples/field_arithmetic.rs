//! Exact arithmetic in Q(τ): conjugation, norms, order and decimal rendering.

use negabase::{FieldElement, PisotBase};

fn main() {
    let base = PisotBase::golden();
    let tau = FieldElement::beta(base);
    let one = FieldElement::one(base);

    // τ² = τ + 1 holds exactly
    assert_eq!(tau.pow(2), &tau + &one);

    let x = FieldElement::parse("(3+2*beta)/5", base).expect("valid expression");
    println!("x          = {x:?}");
    println!("x          ≈ {}", x.to_decimal(20));
    println!("σ(x)       = {:?}", x.conjugate());
    println!("N(x)       = {}", x.norm());
    println!("1/x        = {:?}", x.inv());
    println!("⌊10x⌋      = {}", (&x * &FieldElement::integer(10, base)).floor());
    println!("τ^-3       = {:?}", tau.pow(-3));
    println!("x < τ      : {}", x < tau);
}
