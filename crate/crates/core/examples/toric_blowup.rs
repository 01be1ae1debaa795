// The projection P(1,4,5,10) -> P(1,1,1,2) factored through a common
// weighted blow-up, checked on fans and on monomial maps.
//
//     cargo run --example toric_blowup

use gorenstein_wps::cases::toric_factorization;
use gorenstein_wps::toric::MonomialMap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = toric_factorization()?;
    println!("rays of P:  {:?}", t.fan_p.rays().iter().map(|r| r.vector()).collect::<Vec<_>>());
    println!("rays of P': {:?}", t.fan_p_prime.rays().iter().map(|r| r.vector()).collect::<Vec<_>>());

    let (b1, b2) = (&t.blowup_1, &t.blowup_2);
    println!("blow-up of P:  {} * {:?} = e_x + e_z + 2 e_w", b1.multiplicity, b1.ray.vector());
    println!("blow-up of P': {} * {:?} = 5 e_zeta + e_y", b2.multiplicity, b2.ray.vector());
    println!("same fan: {}", b1.fan.same_as(&b2.fan));

    let composed = MonomialMap::compose(&t.phi, &t.epsilon_1)?;
    println!("\nphi       = {}", t.phi);
    println!("epsilon_1 = {}", t.epsilon_1);
    println!("phi o e1  = {composed}");
    println!("epsilon_2 = {}", t.epsilon_2);
    match MonomialMap::scaling_certificate(&composed, &t.epsilon_2) {
        Some(c) => {
            let c: Vec<String> = c.iter().map(|q| q.to_string()).collect();
            println!("equal up to scaling, c = ({})", c.join(", "));
        }
        None => println!("not equal up to scaling"),
    }
    Ok(())
}
