//! Interval endpoints and reference words for a few bases.

use negabase::dwords::format_word;
use negabase::{Family, PisotBase};

fn main() {
    let bases = [
        PisotBase::golden(),
        PisotBase::new(2, 1, Family::MinusN).unwrap(),
        PisotBase::new(3, 2, Family::MinusN).unwrap(),
        PisotBase::golden_squared(),
        PisotBase::new(5, 2, Family::PlusN).unwrap(),
    ];
    println!("{:<8} {:>22} {:>22}  d*(1)   d(l)    d*(r)", "base", "l", "r");
    for base in bases {
        let e = base.endpoints();
        let w = base.reference_words();
        println!(
            "{:<8} {:>22} {:>22}  {:<7} {:<7} {}",
            base.to_string(),
            e.l.to_decimal(18),
            e.r.to_decimal(18),
            format_word(&w.dstar_pos),
            format_word(&w.d_l),
            format_word(&w.dstar_r),
        );
    }
}
