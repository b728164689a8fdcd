//! Deforms a grid of sample points by moving polygon vertices.
//!
//! cargo run --example deform

use wachspress::coordinates::deform;

fn main() {
    let square = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
    let target = [[0.0, 0.0], [2.0, 0.0], [2.5, 1.5], [0.0, 1.0]];
    let grid: Vec<[f64; 2]> = (1..4)
        .flat_map(|i| (1..4).map(move |j| [i as f64 / 4.0, j as f64 / 4.0]))
        .collect();
    let moved = deform(&square, &target, &grid).expect("same vertex count");
    for (p, q) in grid.iter().zip(moved) {
        match q {
            Ok(q) => println!("({:.2}, {:.2}) -> ({:.4}, {:.4})", p[0], p[1], q[0], q[1]),
            Err(e) => println!("({:.2}, {:.2}) -> {e}", p[0], p[1]),
        }
    }
}
