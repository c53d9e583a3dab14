//! Gaps between consecutive (−τ)-integers and the substitution fixed point.

use negabase::integers::{distance_word, enumerate_integers, phi_fixed_point, phi_left_word};
use negabase::{BaseSign, FieldElement, PisotBase};

fn main() {
    let base = PisotBase::golden();
    let set = enumerate_integers(base, BaseSign::Negative, 10);
    let zero = FieldElement::zero(base);
    let right: Vec<_> = set.between(&zero, &set.window.1).into_iter().map(|p| p.value.clone()).collect();
    let word = negabase::integers::distance_word_of(&right).unwrap();
    let fixed = phi_fixed_point(word.len());
    println!("gaps right of 0: {word}");
    println!("phi fixed point: {fixed}");
    println!("prefix agrees:   {}", word.is_prefix_of(&fixed));
    println!("left half:       {}|", phi_left_word(12));
    println!("whole window:    {} gaps", distance_word(&set).unwrap().len());
}
