// Projections between weighted projective spaces: indeterminacy points and
// pullbacks of the surfaces they contract onto.
//
//     cargo run --example monomial_maps

use gorenstein_wps::cases::{psi_map, psi_surface_equation, PSI_EXCEPTIONAL_ORDER, PROJECTION_ROWS};
use gorenstein_wps::grading::ExponentVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for row in &PROJECTION_ROWS {
        let map = row.map()?;
        let surface = row.surface_equation(1)?;
        let pulled = map.pullback(&surface)?;
        let k = pulled.valuation("x")?;
        let quotient = pulled
            .divide_by_monomial(&ExponentVector::unit(4, 0).scale(k))
            .expect("x^k divides");
        println!(
            "#{:<2} {map} undefined at {:?}; pullback of a degree {} surface = x^{k} * (degree {})",
            row.case_id,
            map.indeterminacy_points(),
            surface.degree().unwrap_or(0),
            quotient.degree().unwrap_or(0),
        );
    }

    let psi = psi_map()?;
    let pulled = psi.pullback(&psi_surface_equation(1)?)?;
    let k = pulled.valuation("y")?;
    assert_eq!(k, PSI_EXCEPTIONAL_ORDER);
    let quotient = pulled.divide_by_monomial(&ExponentVector::unit(4, 1).scale(k)).expect("y^2 divides");
    println!("psi {psi}: pullback = y^{k} * (degree {})", quotient.degree().unwrap_or(0));
    Ok(())
}
