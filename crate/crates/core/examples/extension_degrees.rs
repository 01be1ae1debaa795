// Degrees of the extension models against 2g - 2, and dim Y = 1 + alpha.
//
//     cargo run --example extension_degrees

use gorenstein_wps::intersect::{extension_consistency, extension_models, top_intersection};
use gorenstein_wps::reference::ReferenceData;
use gorenstein_wps::WeightedSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightedSpace::new(vec![1, 4, 5, 10])?;
    println!("O(1)^3 on {w} = {}", top_intersection(&w, &[1, 1, 1])?);

    let reference = ReferenceData::builtin();
    for case in &reference.cases {
        println!("\ncase {} ({}), 2g - 2 = {}", case.case_id, case.weights, 2 * case.g - 2);
        for m in extension_models(case.case_id)? {
            println!(
                "  {:<34} in {} cut by {:?}, O({}): degree {}, dim {}",
                m.label,
                m.ambient,
                m.hypersurface_degrees,
                m.polarization,
                m.degree()?,
                m.dim()
            );
        }
        for c in extension_consistency(case)? {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            println!("  {mark} {:<6} {} vs {} {}", c.check, c.computed, c.expected, c.note);
        }
    }
    Ok(())
}
