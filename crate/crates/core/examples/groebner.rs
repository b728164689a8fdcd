//! Groebner basis of the Wachspress ideal and its initial ideal.
//!
//! cargo run --release --example groebner -- [d] [seed]

use std::time::Instant;

use wachspress::combinatorics::stanley_reisner;
use wachspress::fixtures::random_convex_polygon;
use wachspress::geometry::cone_data;
use wachspress::ideals::build_ideal;
use wachspress::polyring::{Poly, VarSet};
use wachspress::rational::int;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = args.next().unwrap_or(6) as usize;
    let seed = args.next().unwrap_or(1);
    let ideal = build_ideal(&cone_data(&random_convex_polygon(d, seed))).expect("generic polygon");
    let start = Instant::now();
    let gb = ideal.groebner();
    println!(
        "{} basis elements in {:.2?}, by degree {:?}",
        gb.len(),
        start.elapsed(),
        gb.degree_counts()
    );

    let s = VarSet::ambient(d);
    let lead = |m| Poly::monomial(&s, m, int(1)).to_text();
    let init: Vec<String> = gb.leading_monomials().into_iter().map(lead).collect();
    println!("initial ideal: {}", init.join(", "));
    let sr = stanley_reisner(d);
    let same = gb.initial_ideal().generators() == sr.generators();
    println!("equals the Stanley-Reisner ideal of Gamma({d}): {same}");
}
