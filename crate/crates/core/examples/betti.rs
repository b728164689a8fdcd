//! Betti table from the closed formula next to the Hochster table of the
//! initial ideal.
//!
//! cargo run --example betti -- [d]

use wachspress::combinatorics::{
    betti_formula, expected_alternating_sum, gamma_complex, hochster_betti,
};

fn main() {
    let d: usize = std::env::args()
        .nth(1)
        .map_or(6, |a| a.parse().expect("integer d"));
    let formula = betti_formula(d).expect("d >= 4");
    println!("betti table of S/I(d):");
    print!("{}", formula.render());
    if d <= 10 {
        let hochster = hochster_betti(&gamma_complex(d), d).unwrap();
        println!("\nbetti table of S/I_Gamma({d}) by Hochster's formula:");
        print!("{}", hochster.render());
        println!(
            "formula dominated entrywise: {}",
            formula.dominated_by(&hochster)
        );
    }
    println!(
        "alternating sum {:?}, expected {:?}",
        formula.alternating_sum(),
        expected_alternating_sum(d)
    );
}
