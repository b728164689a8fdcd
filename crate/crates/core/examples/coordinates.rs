//! Wachspress coordinates of a point, exactly and in floating point.
//!
//! cargo run --example coordinates -- [x y]

use wachspress::coordinates::{eval_exact_polygon, eval_numeric, numerators};
use wachspress::fixtures::hexagon;
use wachspress::geometry::{cone_data, Point};
use wachspress::rational::{format, parse};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = match args.as_slice() {
        [x, y] => Point::new(parse(x).expect("rational x"), parse(y).expect("rational y")),
        _ => Point::new(parse("3/2").unwrap(), parse("1/2").unwrap()),
    };
    let polygon = hexagon();
    let nums = numerators(&cone_data(&polygon));
    for i in 1..=polygon.d() as i64 {
        println!("b{i} = {}", nums.get(i));
    }
    println!("sum b = {}", nums.denominator());

    let exact = eval_exact_polygon(&polygon, &p).expect("point off the adjoint curve");
    let float = eval_numeric(&polygon.vertices_f64(), p.to_f64()).unwrap();
    println!("beta at {p}:");
    for (i, (e, f)) in exact.iter().zip(&float).enumerate() {
        println!("  beta{} = {:>10}  ~ {f:.12}", i + 1, format(e));
    }
}
