//! Exact numeration in quadratic Pisot bases `β` and their negatives `−β`.
//!
//! Every value is an exact element of `Q(β)`; expansions come from exact
//! orbits of `T_β` and `T_{−β}`, and digit-level algorithms are checked
//! against that field route.

pub mod arithmetic;
pub mod cli;
pub mod dwords;
pub mod expander;
pub mod integers;
pub mod pbase;
pub mod qfield;

pub use dwords::{Digit, EPWord, Expansion};
pub use expander::{evaluate, expand_real, BaseSign};
pub use pbase::{Family, PisotBase};
pub use qfield::FieldElement;
