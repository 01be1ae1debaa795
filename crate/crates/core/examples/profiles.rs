// Multiplicity profiles of forms on weighted lines, the restriction
// pipelines for each special case, and the sextic genus trichotomy.
//
//     cargo run --example profiles

use gorenstein_wps::curves::{pipelines, sextic_trichotomy, SEEDS};
use gorenstein_wps::poly::SparsePoly;
use gorenstein_wps::profile::{binary_profile, plane_curve_genus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let form = SparsePoly::parse("coords: u0:1, w:3\n1 * w^2 + 3/2 * u0^3 w + -2 * u0^6")?;
    let profile = binary_profile(&form)?;
    println!("w^2 + 3/2 u0^3 w - 2 u0^6: {profile}");
    for e in &profile.entries {
        println!("  multiplicity {} at {} (point degree {})", e.multiplicity, e.location, e.point_degree);
    }
    println!("  accounted degree {} of {}", profile.accounted_degree(), profile.degree);

    println!();
    for p in pipelines() {
        for seed in SEEDS {
            let run = p.run(seed)?;
            let mark = if run.pass() { "ok  " } else { "FAIL" };
            println!("{mark} {:<28} {}", run.check_id, run.profile);
            for note in &run.notes {
                println!("     note: {note}");
            }
        }
    }

    println!("\nplane quintic genus {}", plane_curve_genus(5, &[])?);
    for c in sextic_trichotomy(7)? {
        println!("sextic with a {:<8} (delta {}): genus {} matches: {}", c.singularity, c.delta, c.genus, c.matches);
    }
    Ok(())
}
