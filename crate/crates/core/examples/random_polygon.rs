//! Seeded random convex polygons and rational regular approximations.
//!
//! cargo run --example random_polygon -- [d] [seed]

use wachspress::fixtures::{random_convex_polygon, regular_approx};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = args.next().unwrap_or(7) as usize;
    let seed = args.next().unwrap_or(3);
    println!(
        "{}",
        random_convex_polygon(d, seed).to_json().to_string_pretty()
    );
    println!(
        "{}",
        regular_approx(d)
            .expect("d >= 4")
            .to_json()
            .to_string_pretty()
    );
}
