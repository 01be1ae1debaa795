// Load the reference table, tamper with one imported value and watch the
// consistency check catch it.
//
//     cargo run --example reference_data

use gorenstein_wps::reference::{ReferenceData, BUILTIN_REFERENCE};
use gorenstein_wps::verify::verify_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let builtin = ReferenceData::builtin();
    for c in &builtin.cases {
        println!("{:<2} {:<16} alpha={} dim Y={} Sing(S)={}", c.case_id, c.weights.to_string(), c.alpha, c.dim_y, c.sing_s.join(" + "));
    }

    // alpha of case 9 from 4 to 5
    let tampered = BUILTIN_REFERENCE.replace("| 6  | 4 | 5 |", "| 6  | 5 | 5 |");
    let report = verify_all(&ReferenceData::parse(&tampered)?);
    for e in report.failures() {
        println!("tampered: {} fails, computed {} expected {}", e.check_id, e.computed, e.expected);
    }

    // a malformed row is rejected with its line number
    let broken = BUILTIN_REFERENCE.replace("| 2 | 21 |", "| two | 21 |");
    println!("{}", ReferenceData::parse(&broken).unwrap_err());
    Ok(())
}
