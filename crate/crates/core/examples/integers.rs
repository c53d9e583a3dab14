//! The integers of base −τ and base τ² with few digits, written as CSV.

use negabase::integers::enumerate_integers;
use negabase::{BaseSign, PisotBase};

fn main() {
    let set = enumerate_integers(PisotBase::golden(), BaseSign::Negative, 6);
    println!("# Z(-tau), 6 digits, window [{}, {}]", set.window.0.to_decimal(6), set.window.1.to_decimal(6));
    set.write_csv(std::io::stdout(), 12).unwrap();

    let set = enumerate_integers(PisotBase::golden_squared(), BaseSign::Positive, 3);
    println!("# Z(tau^2), 3 digits: {} points", set.points.len());
    set.write_csv(std::io::stdout(), 12).unwrap();
}
