//! Validates a polygon and prints its cone data and external vertices.
//!
//! cargo run --example validate_polygon -- [polygon.json]

use wachspress::fixtures::pentagon;
use wachspress::geometry::{cone_data, external_vertices, polygon_from_json};
use wachspress::rational::format;

fn main() {
    let polygon = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable polygon file");
            match polygon_from_json(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("invalid polygon: {e}");
                    std::process::exit(2);
                }
            }
        }
        None => pentagon(),
    };
    println!(
        "d = {}, convex = {}, reoriented = {}",
        polygon.d(),
        polygon.is_convex(),
        polygon.was_reoriented()
    );
    let cone = cone_data(&polygon);
    for i in 1..=polygon.d() as i64 {
        let n = cone.normal(i);
        println!(
            "v{i} = {}  n{i} = ({}, {}, {})  alpha{i} = {}",
            polygon.vertex(i),
            format(&n[0]),
            format(&n[1]),
            format(&n[2]),
            format(cone.alpha(i))
        );
    }
    let y = external_vertices(&cone).expect("generic polygon");
    println!("{} external vertices:", y.len());
    for v in &y.vertices {
        println!("  {} on lines {:?}", v.point, v.lines);
    }
}
