// Veronese subrings as hypersurfaces: generators, the binomial relation and
// base-point freeness of the anticanonical system on the model.
//
//     cargo run --example veronese

use gorenstein_wps::cases::{case_space, VERONESE_ROWS};
use gorenstein_wps::classify::is_basepoint_free;
use gorenstein_wps::veronese::{embed_as_hypersurface, veronese_embedding};
use gorenstein_wps::{Error, WeightedSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for row in &VERONESE_ROWS {
        let w = case_space(row.case_id)?;
        let h = embed_as_hypersurface(&w, row.n)?;
        let m = w.sigma() / row.n;
        println!(
            "#{:<2} {w} n={}: {}-ic ({}) in {}, O({m}) regular: {}",
            row.case_id,
            row.n,
            h.degree,
            h.equation(),
            h.target,
            is_basepoint_free(&h.target, m)
        );
    }

    let w = WeightedSpace::new(vec![1, 4, 5, 10])?;
    let emb = veronese_embedding(&w, 5)?;
    println!("\n{}", serde_json::to_string_pretty(&emb.to_json())?);

    // the 6-Veronese of P(2,3,10,15) has codimension two
    let w = case_space(14)?;
    match embed_as_hypersurface(&w, 6) {
        Err(e @ Error::NotHypersurface { .. }) => println!("\n{e}"),
        other => println!("\nunexpected: {other:?}"),
    }
    let emb = veronese_embedding(&w, 6)?;
    for rel in &emb.relations {
        println!("  {}", rel.display(&emb.generators));
    }
    Ok(())
}
