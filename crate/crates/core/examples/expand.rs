//! Expansions in base τ and −τ, and the exact round trip back to the field.

use negabase::dwords::format_expansion;
use negabase::{evaluate, expand_real, BaseSign, FieldElement, PisotBase};

fn main() {
    let base = PisotBase::golden();
    let inputs = ["1", "2", "-1", "1/2", "(1+beta)/3", "5+5*beta", "7 -3 2"];
    for text in inputs {
        let x = FieldElement::parse(text, base).expect("valid expression");
        for sign in [BaseSign::Positive, BaseSign::Negative] {
            if sign == BaseSign::Positive && x.is_negative() {
                continue;
            }
            let e = expand_real(&x, sign).expect("x lies in the domain");
            assert_eq!(evaluate(&e, base, sign), x);
            println!("{text:>14}  {sign}  {}", format_expansion(&e, 1));
        }
    }
}
