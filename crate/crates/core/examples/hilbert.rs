//! Hilbert series, polynomial and function of the Wachspress ideal.
//!
//! cargo run --example hilbert -- [d]

use wachspress::combinatorics::{
    hilbert_polynomial_formula, hilbert_series_formula, stanley_reisner,
};
use wachspress::rational::format;

fn main() {
    let d: usize = std::env::args()
        .nth(1)
        .map_or(6, |a| a.parse().expect("integer d"));
    let hs = hilbert_series_formula(d);
    let hp = hilbert_polynomial_formula(d);
    println!("HS(t) = {}", hs.to_text());
    println!("HP(t) = {}", hp.to_text());
    let sr = stanley_reisner(d);
    println!(" t  series  HP  HF(S/I_Gamma)");
    for t in 0..=(d as u64 + 2) {
        println!(
            "{t:>2} {:>7} {:>3} {:>14}",
            hs.coefficient(t),
            format(&hp.eval(t as i64)),
            sr.hilbert_function(t as u32)
        );
    }
}
