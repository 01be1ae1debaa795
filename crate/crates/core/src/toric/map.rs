//! Rational maps between weighted projective spaces given by monomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{ExponentVector, WeightedSpace};
use crate::poly::{Homogeneity, PolyRing, SparsePoly};

/// Named source coordinates with a `k`-row integer grading (`k = 2` for
/// the blown-up spaces).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceCoords {
    names: Vec<String>,
    grading: Vec<Vec<i64>>,
}

impl SourceCoords {
    pub fn new(names: &[&str], grading: Vec<Vec<i64>>) -> Result<Self> {
        if grading.is_empty() {
            return Err(Error::Domain("grading needs at least one row".into()));
        }
        if let Some(row) = grading.iter().find(|r| r.len() != names.len()) {
            return Err(Error::Dimension {
                expected: names.len(),
                got: row.len(),
            });
        }
        Ok(SourceCoords {
            names: names.iter().map(|s| s.to_string()).collect(),
            grading,
        })
    }

    /// Singly graded coordinates of a weighted projective space.
    pub fn weighted(names: &[&str], space: &WeightedSpace) -> Result<Self> {
        Self::new(names, vec![space.weights().iter().map(|&w| w as i64).collect()])
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn grading(&self) -> &[Vec<i64>] {
        &self.grading
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Multi-degree of a monomial.
    pub fn degree_of(&self, e: &ExponentVector) -> Vec<i64> {
        self.grading
            .iter()
            .map(|row| row.iter().zip(&e.0).map(|(&w, &k)| w * i64::from(k)).sum())
            .collect()
    }

    /// The polynomial ring of a singly graded source.
    pub fn ring(&self) -> Result<PolyRing> {
        if self.grading.len() != 1 {
            return Err(Error::Domain(format!(
                "polynomials need a single grading, source has {} rows",
                self.grading.len()
            )));
        }
        let weights = self.grading[0]
            .iter()
            .map(|&w| u64::try_from(w).ok().filter(|&w| w > 0))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Domain("source weights must be positive".into()))?;
        PolyRing::new(self.names.iter().cloned().zip(weights))
    }
}

/// `[m_0 : … : m_k]` with each `m_j` a monomial in the source coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    source: SourceCoords,
    target: WeightedSpace,
    target_names: Vec<String>,
    exponents: Vec<ExponentVector>,
}

impl MonomialMap {
    /// Checks that each coordinate's source degree is its target weight
    /// times one common rational vector.
    pub fn new(
        source: SourceCoords,
        target: WeightedSpace,
        target_names: &[&str],
        exponents: Vec<ExponentVector>,
    ) -> Result<Self> {
        if exponents.len() != target.len() || target_names.len() != target.len() {
            return Err(Error::Dimension {
                expected: target.len(),
                got: exponents.len(),
            });
        }
        if let Some(e) = exponents.iter().find(|e| e.len() != source.len()) {
            return Err(Error::Dimension {
                expected: source.len(),
                got: e.len(),
            });
        }
        let map = MonomialMap {
            source,
            target,
            target_names: target_names.iter().map(|s| s.to_string()).collect(),
            exponents,
        };
        map.scaling_degree()?;
        Ok(map)
    }

    /// Build from text such as `"x^5 : x y : z : w"`.
    pub fn from_text(
        source: SourceCoords,
        target: WeightedSpace,
        target_names: &[&str],
        text: &str,
    ) -> Result<Self> {
        let body = text.trim().trim_start_matches('[').trim_end_matches(']');
        let exponents = body
            .split(':')
            .map(|m| {
                let mut e = vec![0u32; source.len()];
                for factor in m.split_whitespace() {
                    let (name, k) = match factor.split_once('^') {
                        Some((n, k)) => (
                            n,
                            k.parse::<u32>()
                                .map_err(|_| Error::Domain(format!("bad exponent in '{factor}'")))?,
                        ),
                        None => (factor, 1),
                    };
                    if name == "1" {
                        continue;
                    }
                    let i = source
                        .names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| Error::Domain(format!("unknown source coordinate '{name}'")))?;
                    e[i] += k;
                }
                Ok(ExponentVector(e))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, target_names, exponents)
    }

    pub fn source(&self) -> &SourceCoords {
        &self.source
    }

    pub fn target(&self) -> &WeightedSpace {
        &self.target
    }

    pub fn target_names(&self) -> &[String] {
        &self.target_names
    }

    pub fn exponents(&self) -> &[ExponentVector] {
        &self.exponents
    }

    /// The common vector `c` with `deg m_j = t_j · c`.
    pub fn scaling_degree(&self) -> Result<Vec<BigRational>> {
        let t = self.target.weights();
        let d0 = self.source.degree_of(&self.exponents[0]);
        let c: Vec<BigRational> = d0
            .iter()
            .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(t[0])))
            .collect();
        for (j, e) in self.exponents.iter().enumerate() {
            let dj = self.source.degree_of(e);
            let ok = dj.iter().zip(&c).all(|(&x, ci)| {
                BigRational::from_integer(BigInt::from(x)) == ci * BigRational::from_integer(BigInt::from(t[j]))
            });
            if !ok {
                return Err(Error::Homogeneity(format!(
                    "coordinate {} has degree {dj:?}, not {} times {d0:?}/{}",
                    self.target_names[j], t[j], t[0]
                )));
            }
        }
        if c.iter().all(Zero::is_zero) {
            return Err(Error::Homogeneity("every coordinate is constant".into()));
        }
        Ok(c)
    }

    pub fn identity(names: &[&str], space: &WeightedSpace) -> Result<Self> {
        let n = space.len();
        Self::new(
            SourceCoords::weighted(names, space)?,
            space.clone(),
            names,
            (0..n).map(|i| ExponentVector::unit(n, i)).collect(),
        )
    }

    /// `g ∘ f`: substitute the monomials of `f` into those of `g`.
    pub fn compose(g: &MonomialMap, f: &MonomialMap) -> Result<MonomialMap> {
        let expected = SourceCoords::weighted(
            &f.target_names.iter().map(String::as_str).collect::<Vec<_>>(),
            &f.target,
        )?;
        if g.source != expected {
            return Err(Error::Composition(format!(
                "target {:?} {} of the inner map is not the source {:?} {:?} of the outer map",
                f.target_names,
                f.target,
                g.source.names,
                g.source.grading
            )));
        }
        let len = f.source.len();
        let exponents = g
            .exponents
            .iter()
            .map(|eg| {
                eg.0.iter()
                    .zip(&f.exponents)
                    .fold(ExponentVector::zero(len), |acc, (&k, ef)| acc.add(&ef.scale(k)))
            })
            .collect();
        let names: Vec<&str> = g.target_names.iter().map(String::as_str).collect();
        MonomialMap::new(f.source.clone(), g.target.clone(), &names, exponents)
    }

    /// The rational vector `c` over source coordinates with
    /// `e_f[j] - e_g[j] = t_j · c` for every target coordinate, if any.
    pub fn scaling_certificate(f: &MonomialMap, g: &MonomialMap) -> Option<Vec<BigRational>> {
        if f.source != g.source || f.target != g.target || f.target_names != g.target_names {
            return None;
        }
        let t = f.target.weights();
        let diff = |j: usize| -> Vec<BigInt> {
            f.exponents[j]
                .0
                .iter()
                .zip(&g.exponents[j].0)
                .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                .collect()
        };
        let c: Vec<BigRational> = diff(0)
            .into_iter()
            .map(|x| BigRational::new(x, BigInt::from(t[0])))
            .collect();
        for j in 1..t.len() {
            let tj = BigRational::from_integer(BigInt::from(t[j]));
            let ok = diff(j)
                .into_iter()
                .zip(&c)
                .all(|(x, ci)| BigRational::from_integer(x) == ci * &tj);
            if !ok {
                return None;
            }
        }
        Some(c)
    }

    /// Equal as maps to the weighted projective target: the coordinates
    /// differ by the `C^*` action `λ^{t_j}` with `λ` a (fractional) monomial.
    pub fn equal_mod_scaling(f: &MonomialMap, g: &MonomialMap) -> bool {
        Self::scaling_certificate(f, g).is_some()
    }

    /// Substitute the monomials of the map into a target polynomial.
    pub fn pullback(&self, p: &SparsePoly) -> Result<SparsePoly> {
        let ring = p.ring();
        if ring.names() != self.target_names.as_slice() || ring.weights() != self.target.weights() {
            return Err(Error::Domain(format!(
                "polynomial ring '{ring}' is not the target of the map"
            )));
        }
        if p.homogeneity() == Homogeneity::Inhomogeneous {
            return Err(Error::Domain("cannot pull back an inhomogeneous polynomial".into()));
        }
        let source = self.source.ring()?;
        let images: Vec<SparsePoly> = self
            .exponents
            .iter()
            .map(|e| SparsePoly::monomial(&source, e.clone()))
            .collect();
        p.substitute_all(&source, &images)
    }

    /// The indeterminacy locus as a union of coordinate strata: each entry
    /// lists the source coordinates that vanish on one component.
    pub fn indeterminacy_locus(&self) -> Vec<Vec<String>> {
        let supports: Vec<Vec<usize>> = self
            .exponents
            .iter()
            .map(|e| (0..e.len()).filter(|&i| e.0[i] > 0).collect())
            .collect();
        let n = self.source.len();
        let mut minimal: Vec<u64> = Vec::new();
        // minimal coordinate sets meeting every support; n is tiny here
        for mask in 1u64..(1 << n) {
            if mask.count_ones() as usize == n {
                continue;
            }
            if !supports.iter().all(|s| s.iter().any(|&i| mask >> i & 1 == 1)) {
                continue;
            }
            if minimal.iter().any(|&m| m & mask == m) {
                continue;
            }
            minimal.retain(|&m| m & mask != mask);
            minimal.push(mask);
        }
        minimal.sort_by_key(|m| (m.count_ones(), *m));
        minimal
            .into_iter()
            .map(|m| {
                (0..n)
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| self.source.names[i].clone())
                    .collect()
            })
            .collect()
    }

    /// Coordinate points in the indeterminacy locus, named `p_<coordinate>`.
    pub fn indeterminacy_points(&self) -> Vec<String> {
        self.indeterminacy_locus()
            .into_iter()
            .filter(|zeros| zeros.len() + 1 == self.source.len())
            .map(|zeros| {
                let free = self
                    .source
                    .names
                    .iter()
                    .find(|n| !zeros.contains(n))
                    .expect("one coordinate survives");
                format!("p_{free}")
            })
            .collect()
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, e) in self.exponents.iter().enumerate() {
            if j > 0 {
                write!(f, " : ")?;
            }
            let mut first = true;
            for (&k, name) in e.0.iter().zip(&self.source.names) {
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
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(w: &[u64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    fn phi9() -> MonomialMap {
        MonomialMap::from_text(
            SourceCoords::weighted(&["x", "y", "z", "w"], &space(&[1, 4, 5, 10])).unwrap(),
            space(&[1, 1, 1, 2]),
            &["u0", "u1", "u2", "v"],
            "x^5 : x y : z : w",
        )
        .unwrap()
    }

    #[test]
    fn display_and_indeterminacy() {
        let phi = phi9();
        assert_eq!(phi.to_string(), "[x^5 : x y : z : w]");
        assert_eq!(phi.indeterminacy_points(), vec!["p_y"]);
        assert_eq!(phi.scaling_degree().unwrap(), vec![BigRational::from_integer(5.into())]);
    }

    #[test]
    fn inhomogeneous_map_rejected() {
        let r = MonomialMap::from_text(
            SourceCoords::weighted(&["x", "y", "z", "w"], &space(&[1, 4, 5, 10])).unwrap(),
            space(&[1, 1, 1, 2]),
            &["u0", "u1", "u2", "v"],
            "x^4 : x y : z : w",
        );
        assert!(matches!(r, Err(Error::Homogeneity(_))));
    }

    #[test]
    fn identity_laws() {
        let phi = phi9();
        let id_t = MonomialMap::identity(&["u0", "u1", "u2", "v"], &space(&[1, 1, 1, 2])).unwrap();
        let id_s = MonomialMap::identity(&["x", "y", "z", "w"], &space(&[1, 4, 5, 10])).unwrap();
        assert_eq!(MonomialMap::compose(&id_t, &phi).unwrap(), phi);
        assert_eq!(MonomialMap::compose(&phi, &id_s).unwrap(), phi);
        assert!(MonomialMap::equal_mod_scaling(&phi, &phi));
        assert!(MonomialMap::scaling_certificate(&phi, &phi).unwrap().iter().all(Zero::is_zero));
        assert!(matches!(MonomialMap::compose(&phi, &phi), Err(Error::Composition(_))));
    }

    #[test]
    fn pullback_of_identity() {
        let id = MonomialMap::identity(&["a", "b"], &space(&[1, 3])).unwrap();
        let p = SparsePoly::parse("coords: a:1, b:3\n2 * a^3 + -1 * b").unwrap();
        assert_eq!(id.pullback(&p).unwrap(), p);
        let bad = SparsePoly::parse("coords: a:1, b:3\na + b").unwrap();
        assert!(id.pullback(&bad).is_err());
    }
}
