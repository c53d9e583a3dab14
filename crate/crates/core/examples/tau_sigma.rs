//! Adding (−τ)-integers with positive-base carries, transported by σ(τ) = −1/τ.

use negabase::arithmetic::{add_neg, sigma_transport_add_tau};
use negabase::dwords::{format_expansion, parse_expansion};
use negabase::PisotBase;

fn main() {
    let base = PisotBase::golden();
    for (x, y) in [("1111.", "1111."), ("110.", "110."), ("110000.", "11000.")] {
        let (ex, ey) = (parse_expansion(x, 1).unwrap(), parse_expansion(y, 1).unwrap());
        let via_sigma = sigma_transport_add_tau(&ex, &ey);
        let direct = add_neg(&ex, &ey, base);
        match (via_sigma, direct) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a, b);
                println!("{x} + {y} = {}", format_expansion(&a, 1));
            }
            (a, b) => println!("{x} + {y}: {a:?} / {b:?}"),
        }
    }
}
