// Sparse weighted-homogeneous polynomials: parsing, substitution and
// restriction to coordinate hyperplanes.
//
//     cargo run --example polynomials

use gorenstein_wps::poly::{PolyRing, SparsePoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = SparsePoly::parse("coords: u0:1, u1:1, v:3\n2 * u0^3 + -1/3 * u0 u1^2 + 1 * u1^3 + 1 * v")?;
    println!("{p}\ndegree {:?}\n", p.degree());

    // the quintic surface u0 f4 + u1^5 on P(1,1,1,2)
    let ring = PolyRing::new([("u0", 1), ("u1", 1), ("u2", 1), ("v", 2)])?;
    let f4 = SparsePoly::random_homogeneous(&ring, 4, 7);
    println!("f4 has {} terms", f4.num_terms());
    let u0 = SparsePoly::var(&ring, "u0")?;
    let u1 = SparsePoly::var(&ring, "u1")?;
    let s = u0.mul(&f4)?.add(&u1.pow(5))?;

    // cut by v = alpha(u): a plane quintic
    let alpha = SparsePoly::random_homogeneous(&ring.without(3), 2, 8);
    let alpha = alpha.substitute_all(&ring, &["u0", "u1", "u2"].map(|n| SparsePoly::var(&ring, n).unwrap()))?;
    let c = s.substitute("v", &alpha)?.drop_coordinate("v")?;
    println!("plane quintic: {} terms, degree {:?}", c.num_terms(), c.degree());
    println!("restricted to u0 = 0: {}", c.restrict_hyperplane("u0")?);

    // substituting with the wrong degree is refused
    println!("\n{}", s.substitute("v", &u0).unwrap_err());
    Ok(())
}
