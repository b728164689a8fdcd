//! Quadric and cubic generators of the Wachspress ideal.
//!
//! cargo run --example ideal -- [d] [seed]

use wachspress::fixtures::random_convex_polygon;
use wachspress::geometry::cone_data;
use wachspress::ideals::build_ideal;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = args.next().unwrap_or(6) as usize;
    let seed = args.next().unwrap_or(1);
    let polygon = random_convex_polygon(d, seed);
    println!(
        "polygon: {}",
        serde_json::to_string(&polygon.to_json()).unwrap()
    );
    let ideal = build_ideal(&cone_data(&polygon)).expect("generic polygon");
    println!("{} quadrics:", ideal.quadric_basis.len());
    for q in &ideal.quadric_basis {
        println!("  {q}");
    }
    println!(
        "{} essential cubics ({} redundant):",
        ideal.essential_cubics.len(),
        ideal.redundant_cubics.len()
    );
    for c in &ideal.essential_cubics {
        println!("  w{:?} = {}", c.indices, c.poly.primitive());
    }
}
