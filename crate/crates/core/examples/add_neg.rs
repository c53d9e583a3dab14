//! Sums, differences and products of (−β)-integers.

use negabase::arithmetic::{add_neg, mul_neg, sub_neg};
use negabase::dwords::{format_expansion, parse_expansion};
use negabase::{Family, PisotBase};

fn main() {
    let cases = [
        (PisotBase::golden(), "1111.", "1111."),
        (PisotBase::golden(), "110.", "11."),
        (PisotBase::new(2, 1, Family::MinusN).unwrap(), "121.", "11."),
        (PisotBase::new(3, 2, Family::MinusN).unwrap(), "31.", "132."),
    ];
    for (base, x, y) in cases {
        let max = base.max_digit_neg();
        let (ex, ey) = (parse_expansion(x, max).unwrap(), parse_expansion(y, max).unwrap());
        let show = |r| format_expansion(&r, max);
        println!("base {base}");
        println!("  {x} + {y} = {}", show(add_neg(&ex, &ey, base).unwrap()));
        println!("  {x} - {y} = {}", show(sub_neg(&ex, &ey, base).unwrap()));
        println!("  {x} * {y} = {}", show(mul_neg(&ex, &ey, base).unwrap()));
    }
}
