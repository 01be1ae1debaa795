// Enumerate the Gorenstein weighted projective 3-spaces from unit-fraction
// quadruples and print l, sigma and the index for each.
//
//     cargo run --example classify

use gorenstein_wps::cases::case_number;
use gorenstein_wps::classify::{
    enumerate_gorenstein_wps3, enumerate_unit_fraction_quadruples, gorenstein_invariants, raw_gorenstein_candidates,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quads = enumerate_unit_fraction_quadruples();
    println!("{} solutions of 1/b0 + 1/b1 + 1/b2 + 1/b3 = 1", quads.len());

    // a_i = N / b_i, then reduce; several quadruples can land on one space
    for (b, w) in raw_gorenstein_candidates()? {
        println!("  {b:?} -> {w}");
    }

    println!();
    for space in enumerate_gorenstein_wps3()? {
        let inv = gorenstein_invariants(&space)?;
        println!(
            "#{:<2} {:<16} l={:<3} sigma={:<3} i={}",
            case_number(&space).unwrap_or(0),
            space.to_string(),
            inv.l,
            inv.sigma,
            inv.index
        );
    }
    Ok(())
}
