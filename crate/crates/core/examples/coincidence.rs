//! Non-negative (−τ)-integers coincide with τ²-integers.

use negabase::integers::coincidence_check;

fn main() {
    for k in [0, 2, 4, 8] {
        let r = coincidence_check(k);
        println!(
            "up to tau^{k}: {} points, equal {}, word {}",
            r.negative_base.len(),
            r.equal,
            r.negative_word.map(|w| w.to_bits()).unwrap_or_default()
        );
    }
}
