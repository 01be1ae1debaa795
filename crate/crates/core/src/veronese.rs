//! n-Veronese subrings `R^(n)` with `(R^(n))_d = R_{nd}`: minimal monomial
//! generators, the induced target weights, and the toric relations.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{hilbert_count, weighted_degree, ExponentVector, WeightedSpace};
use crate::lattice::left_kernel;

/// Largest number of candidate monomials examined by the closure certificate.
const MAX_BOX: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeroneseGenerator {
    pub monomial: ExponentVector,
    pub weight: u64,
    pub name: String,
}

/// `lhs = rhs` as monomials in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binomial {
    pub lhs: ExponentVector,
    pub rhs: ExponentVector,
}

impl Binomial {
    /// Degree in the target grading.
    pub fn degree(&self, gens: &[VeroneseGenerator]) -> u64 {
        self.lhs
            .0
            .iter()
            .zip(gens)
            .map(|(&e, g)| u64::from(e) * g.weight)
            .sum()
    }

    pub fn display<'a>(&'a self, gens: &'a [VeroneseGenerator]) -> BinomialDisplay<'a> {
        BinomialDisplay { rel: self, gens }
    }
}

pub struct BinomialDisplay<'a> {
    rel: &'a Binomial,
    gens: &'a [VeroneseGenerator],
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &ExponentVector, names: &[&str]) -> fmt::Result {
    let mut first = true;
    for (&k, name) in e.0.iter().zip(names) {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
        write_monomial(f, &self.rel.lhs, &names)?;
        write!(f, " = ")?;
        write_monomial(f, &self.rel.rhs, &names)
    }
}

/// How the generator search was closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    /// No candidate beyond the search bound existed.
    Search,
    /// Candidates beyond the bound existed and were all shown reducible.
    Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeroneseEmbedding {
    pub source: WeightedSpace,
    pub n: u64,
    pub generators: Vec<VeroneseGenerator>,
    pub relations: Vec<Binomial>,
    pub closure: Closure,
    /// True when the relations are known to generate the toric ideal
    /// minimally (codimension at most one).
    pub certified_minimal: bool,
}

impl VeroneseEmbedding {
    pub fn target_weights(&self) -> Vec<u64> {
        self.generators.iter().map(|g| g.weight).collect()
    }

    pub fn target(&self) -> Result<WeightedSpace> {
        WeightedSpace::new(self.target_weights())
    }

    pub fn codimension(&self) -> usize {
        self.generators.len() - self.source.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source": self.source.weights(),
            "n": self.n,
            "target_weights": self.target_weights(),
            "closure": self.closure,
            "certified_minimal": self.certified_minimal,
            "generators": self.generators.iter().map(|g| serde_json::json!({
                "name": g.name,
                "monomial": g.monomial,
                "weight": g.weight,
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| serde_json::json!({
                "lhs": r.lhs,
                "rhs": r.rhs,
                "degree": r.degree(&self.generators),
                "equation": r.display(&self.generators).to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypersurface {
    pub target: WeightedSpace,
    pub relation: Binomial,
    pub degree: u64,
    pub embedding: VeroneseEmbedding,
}

impl Hypersurface {
    pub fn equation(&self) -> String {
        self.relation.display(&self.embedding.generators).to_string()
    }
}

/// Every generator lies in the box `e_i <= n / gcd(n, a_i)`, since
/// `x_i^{n/gcd(n, a_i)}` has degree divisible by `n`.
fn exponent_box(space: &WeightedSpace, n: u64) -> Vec<u32> {
    space
        .weights()
        .iter()
        .map(|&a| (n / n.gcd(&a)) as u32)
        .collect()
}

fn box_monomials(space: &WeightedSpace, n: u64, bounds: &[u32]) -> Vec<(u64, ExponentVector)> {
    fn rec(
        w: &[u64],
        bounds: &[u32],
        i: usize,
        deg: u64,
        cur: &mut Vec<u32>,
        n: u64,
        out: &mut Vec<(u64, ExponentVector)>,
    ) {
        if i == w.len() {
            if deg > 0 && deg % n == 0 {
                out.push((deg, ExponentVector(cur.clone())));
            }
            return;
        }
        for e in 0..=bounds[i] {
            cur[i] = e;
            rec(w, bounds, i + 1, deg + u64::from(e) * w[i], cur, n, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; space.len()];
    rec(space.weights(), bounds, 0, 0, &mut cur, n, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    out
}

/// Minimal generators of `R^(n)`, sorted by target weight and then by
/// descending graded-lex order of the source monomial.
pub fn veronese_generators(space: &WeightedSpace, n: u64) -> Result<(Vec<VeroneseGenerator>, Closure)> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let bounds = exponent_box(space, n);
    let size: u128 = bounds.iter().map(|&k| u128::from(k) + 1).product();
    if size > MAX_BOX {
        return Err(Error::Incomplete(format!(
            "certificate box has {size} monomials, more than the limit {MAX_BOX}"
        )));
    }
    let limit = n * space.lcm();
    let mut gens: Vec<(u64, ExponentVector)> = Vec::new();
    let mut closure = Closure::Search;
    for (deg, mono) in box_monomials(space, n, &bounds) {
        let reducible = gens.iter().any(|(_, g)| g != &mono && g.divides(&mono));
        if deg > limit {
            closure = Closure::Certificate;
            if !reducible {
                return Err(Error::Incomplete(format!(
                    "{mono:?} of degree {deg} is irreducible beyond the search bound {limit}"
                )));
            }
            continue;
        }
        if !reducible {
            gens.push((deg, mono));
        }
    }
    gens.sort_by_key(|(deg, mono)| (*deg, Reverse(mono.clone())));
    let weights: Vec<u64> = gens.iter().map(|(d, _)| d / n).collect();
    let names = generator_names(&weights);
    let out = gens
        .into_iter()
        .zip(names)
        .map(|((deg, monomial), name)| VeroneseGenerator {
            monomial,
            weight: deg / n,
            name,
        })
        .collect();
    Ok((out, closure))
}

/// `u` for the lowest weight, then `v, s, t, r` for each further weight,
/// indexed when a weight repeats; `y0, y1, …` once letters run out.
pub fn generator_names(weights: &[u64]) -> Vec<String> {
    const LETTERS: [&str; 5] = ["u", "v", "s", "t", "r"];
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for &w in weights {
        match groups.last_mut() {
            Some((gw, count)) if *gw == w => *count += 1,
            _ => groups.push((w, 1)),
        }
    }
    if groups.len() > LETTERS.len() {
        return (0..weights.len()).map(|i| format!("y{i}")).collect();
    }
    let mut names = Vec::with_capacity(weights.len());
    for (letter, &(_, count)) in LETTERS.iter().zip(&groups) {
        if count == 1 {
            names.push(letter.to_string());
        } else {
            names.extend((0..count).map(|i| format!("{letter}{i}")));
        }
    }
    names
}

/// Lattice generators of the relations among the generators' exponent
/// vectors, as binomials oriented so the lowest-index generator is on the left.
pub fn toric_relations(gens: &[VeroneseGenerator]) -> Vec<Binomial> {
    if gens.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.monomial.0.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    left_kernel(&rows)
        .into_iter()
        .map(|mut r| {
            if r.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                r.iter_mut().for_each(|x| *x = -x.clone());
            }
            let part = |positive: bool| {
                ExponentVector(
                    r.iter()
                        .map(|x| {
                            if x.is_positive() == positive && !x.is_zero() {
                                x.abs().to_u32().expect("relation exponent fits in u32")
                            } else {
                                0
                            }
                        })
                        .collect(),
                )
            };
            Binomial {
                lhs: part(true),
                rhs: part(false),
            }
        })
        .collect()
}

pub fn veronese_embedding(space: &WeightedSpace, n: u64) -> Result<VeroneseEmbedding> {
    let (generators, closure) = veronese_generators(space, n)?;
    let relations = toric_relations(&generators);
    let certified_minimal = relations.len() <= 1;
    Ok(VeroneseEmbedding {
        source: space.clone(),
        n,
        generators,
        relations,
        closure,
        certified_minimal,
    })
}

/// The image of `v_n` as a hypersurface of a weighted projective space of
/// one dimension more.
pub fn embed_as_hypersurface(space: &WeightedSpace, n: u64) -> Result<Hypersurface> {
    let embedding = veronese_embedding(space, n)?;
    if embedding.generators.len() != space.len() + 1 {
        return Err(Error::NotHypersurface {
            generators: embedding.generators.len(),
            dim: space.dim(),
            target_weights: embedding.target_weights(),
        });
    }
    let relation = embedding
        .relations
        .first()
        .cloned()
        .ok_or_else(|| Error::Consistency("hypersurface without a relation".into()))?;
    let degree = relation.degree(&embedding.generators);
    Ok(Hypersurface {
        target: embedding.target()?,
        relation,
        degree,
        embedding,
    })
}

/// Check that a relation really is one: both sides give the same source
/// monomial, hence the same target degree.
pub fn relation_holds(rel: &Binomial, gens: &[VeroneseGenerator]) -> bool {
    let expand = |e: &ExponentVector| {
        e.0.iter()
            .zip(gens)
            .fold(ExponentVector::zero(gens[0].monomial.len()), |acc, (&k, g)| {
                acc.add(&g.monomial.scale(k))
            })
    };
    expand(&rel.lhs) == expand(&rel.rhs)
}

/// Degree-`m` forms on the hypersurface model versus degree-`n·m` forms on
/// the source: `h_X(m) - h_X(m - deg f)` against `h_W(n·m)`.
pub fn model_form_count(hyp: &Hypersurface, m: u64) -> Result<(BigUint, BigUint)> {
    let on_x = hilbert_count(&hyp.target, m as i64)?;
    let below = if m >= hyp.degree {
        hilbert_count(&hyp.target, (m - hyp.degree) as i64)?
    } else {
        BigUint::zero()
    };
    let source = hilbert_count(&hyp.embedding.source, (hyp.embedding.n * m) as i64)?;
    Ok((on_x - below, source))
}

/// Every generator's source degree is `n` times its weight.
pub fn generators_consistent(emb: &VeroneseEmbedding) -> Result<bool> {
    for g in &emb.generators {
        if weighted_degree(&g.monomial, &emb.source)? != emb.n * g.weight {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(w: &[u64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    fn monos(gens: &[VeroneseGenerator]) -> Vec<Vec<u32>> {
        gens.iter().map(|g| g.monomial.0.clone()).collect()
    }

    #[test]
    fn example_generators() {
        let (gens, _) = veronese_generators(&space(&[1, 4, 5, 10]), 5).unwrap();
        assert_eq!(
            monos(&gens),
            vec![
                vec![5, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![0, 5, 0, 0]
            ]
        );
        let w: Vec<u64> = gens.iter().map(|g| g.weight).collect();
        assert_eq!(w, vec![1, 1, 1, 2, 4]);

        let (gens, _) = veronese_generators(&space(&[2, 3, 10, 15]), 3).unwrap();
        assert_eq!(
            monos(&gens),
            vec![
                vec![0, 1, 0, 0],
                vec![3, 0, 0, 0],
                vec![1, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 3, 0]
            ]
        );

        let (gens, _) = veronese_generators(&space(&[1, 1, 1, 1]), 1).unwrap();
        assert_eq!(gens.len(), 4);
        assert!(gens.iter().all(|g| g.weight == 1));
    }

    #[test]
    fn relations_examples() {
        let emb = veronese_embedding(&space(&[1, 4, 5, 10]), 5).unwrap();
        assert_eq!(emb.relations.len(), 1);
        assert_eq!(emb.relations[0].display(&emb.generators).to_string(), "u0 s = u1^5");
        let emb = veronese_embedding(&space(&[2, 3, 10, 15]), 3).unwrap();
        assert_eq!(emb.relations[0].display(&emb.generators).to_string(), "v r = s^3");
        let single = vec![VeroneseGenerator {
            monomial: vec![1].into(),
            weight: 1,
            name: "u".into(),
        }];
        assert!(toric_relations(&single).is_empty());
    }

    #[test]
    fn hypersurface_rows() {
        let h = embed_as_hypersurface(&space(&[1, 2, 6, 9]), 2).unwrap();
        assert_eq!(h.target.weights(), &[1, 1, 3, 5, 9]);
        assert_eq!(h.equation(), "u0 t = s^2");
        assert_eq!(h.degree, 10);
        let h = embed_as_hypersurface(&space(&[1, 6, 14, 21]), 7).unwrap();
        assert_eq!(h.target.weights(), &[1, 1, 2, 3, 6]);
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
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relations_hold_and_are_homogeneous() {
        for (w, n) in [(vec![1, 1, 1, 1], 2), (vec![2, 3, 10, 15], 6), (vec![1, 2, 3, 6], 2)] {
            let emb = veronese_embedding(&space(&w), n).unwrap();
            assert!(generators_consistent(&emb).unwrap());
            for r in &emb.relations {
                assert!(relation_holds(r, &emb.generators));
                let rhs_deg: u64 = r.rhs.0.iter().zip(&emb.generators).map(|(&e, g)| u64::from(e) * g.weight).sum();
                assert_eq!(r.degree(&emb.generators), rhs_deg);
            }
        }
    }

    #[test]
    fn names_follow_weight_groups() {
        assert_eq!(generator_names(&[1, 1, 2, 3, 3]), vec!["u0", "u1", "v", "s0", "s1"]);
        assert_eq!(generator_names(&[1, 2, 4, 5, 10]), vec!["u", "v", "s", "t", "r"]);
        assert_eq!(generator_names(&[1, 2, 3, 4, 5, 6]).len(), 6);
        assert_eq!(generator_names(&[1, 2, 3, 4, 5, 6])[0], "y0");
    }

    #[test]
    fn minimal_generators_are_irreducible() {
        let (gens, _) = veronese_generators(&space(&[1, 3, 8, 12]), 3).unwrap();
        for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                if i != j {
                    assert!(!h.monomial.divides(&g.monomial));
                }
            }
        }
    }
}
