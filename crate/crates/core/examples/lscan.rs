//! Longest finite fractional parts of sums and products of integers.
//!
//! `cargo run --release --example lscan -- 10`

use negabase::arithmetic::{l_scan, Operation};
use negabase::dwords::format_expansion;
use negabase::{BaseSign, PisotBase};

fn main() {
    let max_len = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let base = PisotBase::golden();
    for sign in [BaseSign::Negative, BaseSign::Positive] {
        for op in [Operation::Add, Operation::Mul] {
            let r = l_scan(base, sign, op, max_len).unwrap();
            print!("{sign} {op}: max {:?} over {} results ({} infinite)", r.max, r.results, r.infinite_count);
            if let Some(w) = r.witness {
                let f = |e| format_expansion(&e, 1);
                print!("  witness {} , {} -> {}", f(w.x), f(w.y), f(w.result));
            }
            println!();
        }
    }
}
