use std::collections::BTreeSet;

use negabase::integers::{
    coincidence_check, digit_len_reaching, distance_word, distance_word_of, enumerate_integers, inverse_tau,
    phi_fixed_point, phi_left_word, tau_in, to_golden, Delta, IntegerSet,
};
use negabase::{BaseSign, FieldElement, PisotBase};

fn inside(set: &IntegerSet) -> Vec<FieldElement> {
    set.values().into_iter().filter(|v| *v > set.window.0 && *v < set.window.1).collect()
}

fn golden() -> (PisotBase, FieldElement, FieldElement) {
    let t = PisotBase::golden();
    (t, tau_in(t).unwrap(), inverse_tau(t).unwrap())
}

#[test]
fn fixed_point_invariance() {
    let (t, tau, _) = golden();
    let zero = FieldElement::zero(t);
    for j in 1..=6 {
        let bound = tau.pow(2 * j);
        let set = enumerate_integers(t, BaseSign::Negative, digit_len_reaching(t, BaseSign::Negative, &bound));
        let pts: Vec<FieldElement> = set.between(&zero, &bound).into_iter().map(|p| p.value.clone()).collect();
        let w = distance_word_of(&pts).unwrap();
        assert!(w.is_prefix_of(&phi_fixed_point(w.len())), "j = {j}: {w}");
    }
}

#[test]
fn gap_refinement() {
    let (t, tau, inv) = golden();
    let one = FieldElement::one(t);
    let tau2 = tau.pow(2);
    let small = inside(&enumerate_integers(t, BaseSign::Negative, 8));
    let big = enumerate_integers(t, BaseSign::Negative, 10);
    let members: BTreeSet<FieldElement> = inside(&big).into_iter().collect();
    for pair in small.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let (lo, hi) = (&tau2 * x, &tau2 * y);
        assert!(lo > big.window.0 && hi < big.window.1);
        let found: Vec<FieldElement> = members.range(lo.clone()..=hi.clone()).cloned().collect();
        let mut expected = vec![lo.clone(), &lo + &one];
        if (y - x) == one {
            expected.push(&lo + &FieldElement::integer(2, t));
        } else {
            assert_eq!(&(y - x), &inv);
        }
        expected.push(hi);
        assert_eq!(found, expected, "x = {x:?}");
    }
}

#[test]
fn closure_under_minus_tau() {
    let (t, tau, inv) = golden();
    let one = FieldElement::one(t);
    let small = inside(&enumerate_integers(t, BaseSign::Negative, 8));
    let big = enumerate_integers(t, BaseSign::Negative, 10);
    let members: BTreeSet<FieldElement> = inside(&big).into_iter().collect();
    for pair in small.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let (lo, hi) = (-&(&tau * y), -&(&tau * x));
        assert!(members.contains(&lo) && members.contains(&hi));
        let found: Vec<FieldElement> = members.range(lo.clone()..=hi.clone()).cloned().collect();
        let expected = if (y - x) == one {
            vec![lo.clone(), &lo + &one, &(&lo + &one) + &inv]
        } else {
            vec![lo.clone(), &lo + &one]
        };
        assert_eq!(found, expected, "x = {x:?}");
        assert_eq!(*found.last().unwrap(), hi);
    }
}

#[test]
fn last_digit_decides_the_next_gap() {
    let (t, _, _) = golden();
    let set = enumerate_integers(t, BaseSign::Negative, 10);
    let points: Vec<_> = set.points.iter().filter(|p| p.value > set.window.0 && p.value < set.window.1).collect();
    let word = distance_word_of(&points.iter().map(|p| p.value.clone()).collect::<Vec<_>>()).unwrap();
    for (p, gap) in points.iter().zip(&word.letters) {
        let last = p.expansion.digit_at(0);
        let expected = if last == 0 { Delta::D0 } else { Delta::D1 };
        assert_eq!(*gap, expected, "{:?}", p.expansion);
    }
}

#[test]
fn bidirectional_word_around_zero() {
    let (t, _, _) = golden();
    let set = enumerate_integers(t, BaseSign::Negative, 12);
    let pts = inside(&set);
    let zero = pts.iter().position(|v| v.is_zero()).unwrap();
    let left = distance_word_of(&pts[zero - 20..=zero]).unwrap();
    let right = distance_word_of(&pts[zero..=zero + 20]).unwrap();
    assert_eq!(left, phi_left_word(20));
    assert_eq!(right, phi_fixed_point(20));
    assert!(left.to_string().ends_with("Δ1Δ0Δ1"));
    assert!(right.to_string().starts_with("Δ0Δ0Δ1Δ0"));
}

#[test]
fn squared_base_is_symmetric_and_matches() {
    let sq = PisotBase::golden_squared();
    let set = enumerate_integers(sq, BaseSign::Positive, 6);
    let values: BTreeSet<FieldElement> = set.values().into_iter().collect();
    for v in &values {
        assert!(values.contains(&-v));
    }
    let nonneg: Vec<FieldElement> = inside(&set).into_iter().filter(|v| !v.is_negative()).collect();
    let w = distance_word_of(&nonneg.iter().map(|v| to_golden(v).unwrap()).collect::<Vec<_>>()).unwrap();
    assert!(w.is_prefix_of(&phi_fixed_point(w.len())));
    assert!(w.to_string().starts_with("Δ0Δ0Δ1Δ0"));
}

#[test]
fn coincidence_up_to_tau_power() {
    for k in [0, 1, 4, 8, 10] {
        let r = coincidence_check(k);
        assert!(r.equal, "k = {k}: {:?}", r.first_mismatch);
        let w = r.negative_word.unwrap();
        assert_eq!(w, r.squared_word.unwrap());
        assert!(w.is_prefix_of(&phi_fixed_point(w.len())));
    }
    let r = coincidence_check(0);
    assert_eq!(r.negative_base.len(), 2);
}

#[test]
fn whole_window_is_a_distance_word() {
    let (t, _, _) = golden();
    let set = enumerate_integers(t, BaseSign::Negative, 9);
    assert!(distance_word(&set).is_ok());
}
