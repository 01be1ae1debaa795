use gorenstein_wps::cases::{case_space, VERONESE_ROWS};
use gorenstein_wps::grading::weighted_degree;
use gorenstein_wps::veronese::{
    embed_as_hypersurface, relation_holds, toric_relations, veronese_embedding, veronese_generators,
};
use gorenstein_wps::{Error, WeightedSpace};

fn space(w: &[u64]) -> WeightedSpace {
    WeightedSpace::new(w.to_vec()).unwrap()
}

fn monomials(w: &[u64], n: u64) -> Vec<(Vec<u32>, u64)> {
    let (gens, _) = veronese_generators(&space(w), n).unwrap();
    gens.into_iter().map(|g| (g.monomial.0, g.weight)).collect()
}

#[test]
fn generators_of_the_quintic_model() {
    let mut got = monomials(&[1, 4, 5, 10], 5);
    got.sort();
    let mut want = vec![
        (vec![5, 0, 0, 0], 1),
        (vec![1, 1, 0, 0], 1),
        (vec![0, 0, 1, 0], 1),
        (vec![0, 0, 0, 1], 2),
        (vec![0, 5, 0, 0], 4),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn generators_of_the_twelve_ic_model() {
    let mut got = monomials(&[2, 3, 10, 15], 3);
    got.sort();
    let mut want = vec![
        (vec![0, 1, 0, 0], 1),
        (vec![3, 0, 0, 0], 2),
        (vec![1, 0, 1, 0], 4),
        (vec![0, 0, 0, 1], 5),
        (vec![0, 0, 3, 0], 10),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn identity_veronese() {
    let got = monomials(&[1, 1, 1, 1], 1);
    assert_eq!(got.len(), 4);
    assert!(got.iter().all(|(e, w)| *w == 1 && e.iter().sum::<u32>() == 1));
}

#[test]
fn generator_degrees_divisible_by_n() {
    for row in &VERONESE_ROWS {
        let w = case_space(row.case_id).unwrap();
        let (gens, _) = veronese_generators(&w, row.n).unwrap();
        for g in gens {
            assert_eq!(weighted_degree(&g.monomial, &w).unwrap(), g.weight * row.n);
        }
    }
}

#[test]
fn relations() {
    let emb = veronese_embedding(&space(&[1, 4, 5, 10]), 5).unwrap();
    assert_eq!(emb.relations.len(), 1);
    assert_eq!(emb.relations[0].display(&emb.generators).to_string(), "u0 s = u1^5");

    let emb = veronese_embedding(&space(&[2, 3, 10, 15]), 3).unwrap();
    assert_eq!(emb.relations[0].display(&emb.generators).to_string(), "v r = s^3");

    let (gens, _) = veronese_generators(&space(&[1]), 1).unwrap();
    assert_eq!(gens.len(), 1);
    assert!(toric_relations(&gens).is_empty());
}

#[test]
fn hypersurface_examples() {
    let h = embed_as_hypersurface(&space(&[1, 2, 6, 9]), 2).unwrap();
    assert_eq!(h.target, space(&[1, 1, 3, 5, 9]));
    assert_eq!(h.equation(), "u0 t = s^2");
    assert_eq!(h.degree, 10);

    let h = embed_as_hypersurface(&space(&[1, 6, 14, 21]), 7).unwrap();
    assert_eq!(h.target, space(&[1, 1, 2, 3, 6]));
    assert_eq!(h.equation(), "u0 t = u1^7");
    assert_eq!(h.degree, 7);

    match embed_as_hypersurface(&space(&[2, 3, 10, 15]), 6) {
        Err(Error::NotHypersurface {
            generators,
            target_weights,
            ..
        }) => {
            assert_eq!(generators, 6);
            assert_eq!(target_weights, vec![1, 1, 2, 3, 5, 5]);
        }
        other => panic!("expected NotHypersurface, got {other:?}"),
    }
}

#[test]
fn every_model_row() {
    for row in &VERONESE_ROWS {
        let h = embed_as_hypersurface(&case_space(row.case_id).unwrap(), row.n).unwrap();
        assert_eq!(h.target.weights(), &row.target_weights[..], "row {}", row.case_id);
        assert_eq!(h.equation(), row.equation);
        assert_eq!(h.degree, row.degree);
        let gens = &h.embedding.generators;
        assert!(relation_holds(&h.relation, gens));
        let rhs: u64 = h.relation.rhs.0.iter().zip(gens).map(|(&e, g)| u64::from(e) * g.weight).sum();
        assert_eq!(h.relation.degree(gens), rhs, "relation is homogeneous");
    }
}

#[test]
fn two_veronese_of_case_14() {
    let h = embed_as_hypersurface(&space(&[2, 3, 10, 15]), 2).unwrap();
    assert_eq!(h.target, space(&[1, 3, 5, 9, 15]));
    assert_eq!(h.equation(), "v r = t^2");
}
