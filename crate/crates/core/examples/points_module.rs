//! The ideal of the external vertices in low degrees.
//!
//! cargo run --example points_module -- [d] [seed]

use wachspress::fixtures::random_convex_polygon;
use wachspress::geometry::cone_data;
use wachspress::verify::points_module_checks;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let d = args.next().unwrap_or(6) as usize;
    let seed = args.next().unwrap_or(1);
    let data =
        points_module_checks(&cone_data(&random_convex_polygon(d, seed))).expect("generic polygon");
    println!("|Y| = {}", data.external_vertices);
    println!("dim (I_Y)_{} = {}", d - 3, data.dim_degree_d_minus_3);
    println!("dim (I_Y)_{} = {}", d - 2, data.dim_degree_d_minus_2);
    println!(
        "A/(l_i l_(i+1)) span (I_Y)_{}: {}",
        d - 2,
        data.span_matches
    );
    println!("linear syzygies: {}", data.linear_syzygies);
    println!("HF(R/I_Y): {:?}", data.hilbert_function);
    println!("form through Y: {}", data.form);
}
