//! Adjoints of the polygon's cone and its dual under several triangulations,
//! and the relation between the coordinate denominator and the dual adjoint.
//!
//! cargo run --example adjoint -- [d] [seed]

use wachspress::coordinates::{adjoint, denominator_adjoint_scalar, numerators, Triangulation};
use wachspress::fixtures::random_convex_polygon;
use wachspress::geometry::cone_data;
use wachspress::rational::format;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = args.next().unwrap_or(6) as usize;
    let seed = args.next().unwrap_or(1);
    let cone = cone_data(&random_convex_polygon(d, seed));
    for (name, rays) in [("primal", cone.lifted_all()), ("dual", cone.normals_all())] {
        let fan = adjoint(rays, &Triangulation::fan(d, 0)).unwrap();
        let snake = adjoint(rays, &Triangulation::snake(d)).unwrap();
        println!("{name} adjoint: {}", fan.primitive());
        println!("  fan from ray 1 and snake agree: {}", fan == snake);
    }
    match denominator_adjoint_scalar(&cone, &numerators(&cone)) {
        Some(l) => println!("sum b_i = {} * z * A*", format(&l)),
        None => println!("sum b_i is not a multiple of z * A*"),
    }
}
