//! Runs every check on one polygon and prints the report.
//!
//! cargo run --release --example verify -- [d] [seed] [--json]

use wachspress::fixtures::random_convex_polygon;
use wachspress::verify::{verify_polygon, VerifyOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let mut nums = args
        .iter()
        .filter(|a| !a.starts_with("--"))
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = nums.next().unwrap_or(5) as usize;
    let seed = nums.next().unwrap_or(0);
    let polygon = random_convex_polygon(d, seed);
    let report = verify_polygon(
        polygon.vertices(),
        &VerifyOptions {
            seed,
            ..VerifyOptions::default()
        },
    );
    if json {
        println!("{}", report.to_json_pretty());
    } else {
        print!("{}", report.render_text());
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
