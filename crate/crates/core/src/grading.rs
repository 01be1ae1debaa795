//! Graded polynomial rings of weighted projective spaces.
//!
//! A [`WeightedSpace`] is the ambient `P(a0, ..., an)`; its homogeneous
//! coordinate ring is graded by `deg x_i = a_i`. Monomials are
//! [`ExponentVector`]s, ordered graded-lexicographically.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weights of a weighted projective space, in coordinate order.
///
/// The order is kept as given because maps and polynomials refer to
/// coordinates by position; [`WeightedSpace::canonical`] gives the sorted
/// representative used for classification and deduplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightedSpace {
    weights: Vec<u64>,
}

impl WeightedSpace {
    pub fn new(weights: impl Into<Vec<u64>>) -> Result<Self> {
        let weights = weights.into();
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::InvalidWeights(format!("weight {w} is not positive")));
        }
        let g = weights.iter().fold(0u64, |acc, &w| acc.gcd(&w));
        if g != 1 {
            return Err(Error::InvalidWeights(format!(
                "weights {weights:?} share the common factor {g}"
            )));
        }
        Ok(WeightedSpace { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Number of homogeneous coordinates.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Same space with weights sorted ascending.
    pub fn canonical(&self) -> WeightedSpace {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        WeightedSpace { weights }
    }

    pub fn is_canonical(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn lcm(&self) -> u64 {
        self.weights.iter().fold(1u64, |acc, &w| acc.lcm(&w))
    }

    pub fn sigma(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight_product(&self) -> BigUint {
        self.weights.iter().map(|&w| BigUint::from(w)).product()
    }
}

impl TryFrom<Vec<u64>> for WeightedSpace {
    type Error = Error;

    fn try_from(weights: Vec<u64>) -> Result<Self> {
        WeightedSpace::new(weights)
    }
}

impl From<WeightedSpace> for Vec<u64> {
    fn from(space: WeightedSpace) -> Vec<u64> {
        space.weights
    }
}

impl fmt::Display for WeightedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Exponents of a monomial in the ambient coordinates.
///
/// Ordered graded-lexicographically: first by total exponent, then
/// lexicographically with the first coordinate most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut e = vec![0; len];
        e[index] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; panics on length mismatch.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` unless `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// The class of `O(n)` on a weighted projective space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub degree: i64,
}

impl DivisorClass {
    pub fn new(degree: i64) -> Self {
        DivisorClass { degree }
    }

    /// `O(n)` is Cartier iff every weight divides `n`.
    pub fn is_cartier(&self, space: &WeightedSpace) -> bool {
        space
            .weights()
            .iter()
            .all(|&w| self.degree.rem_euclid(w as i64) == 0)
    }
}

pub fn weighted_degree(e: &ExponentVector, space: &WeightedSpace) -> Result<u64> {
    if e.len() != space.len() {
        return Err(Error::Dimension {
            expected: space.len(),
            got: e.len(),
        });
    }
    e.0.iter()
        .zip(space.weights())
        .try_fold(0u64, |acc, (&ex, &w)| {
            u64::from(ex)
                .checked_mul(w)
                .and_then(|t| acc.checked_add(t))
        })
        .ok_or_else(|| Error::Domain("weighted degree overflows u64".into()))
}

/// All exponent vectors of weighted degree exactly `d`, strictly increasing
/// in graded-lex order.
pub fn monomials_of_degree(space: &WeightedSpace, d: i64) -> Result<Vec<ExponentVector>> {
    if d < 0 {
        return Err(Error::Domain(format!("negative degree {d}")));
    }
    Ok(monomials_with_weights(space.weights(), d as u64))
}

/// Same enumeration for an arbitrary list of positive weights, which need
/// not be coprime (e.g. the coordinates left after restricting).
pub fn monomials_with_weights(weights: &[u64], d: u64) -> Vec<ExponentVector> {
    if weights.is_empty() {
        return if d == 0 { vec![ExponentVector(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    enumerate_into(weights, 0, d, &mut current, &mut out);
    out.sort_unstable();
    out
}

fn enumerate_into(
    weights: &[u64],
    index: usize,
    remaining: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<ExponentVector>,
) {
    if index + 1 == weights.len() {
        if remaining % weights[index] == 0 {
            current[index] = (remaining / weights[index]) as u32;
            out.push(ExponentVector(current.clone()));
        }
        return;
    }
    let w = weights[index];
    for k in 0..=remaining / w {
        current[index] = k as u32;
        enumerate_into(weights, index + 1, remaining - k * w, current, out);
    }
    current[index] = 0;
}

/// Dimension of the degree-`d` piece of the graded ring, by exact dynamic
/// programming over the coordinates.
pub fn hilbert_count(space: &WeightedSpace, d: i64) -> Result<BigUint> {
    if d < 0 {
        return Err(Error::Domain(format!("negative degree {d}")));
    }
    let d = usize::try_from(d).map_err(|_| Error::Domain("degree too large".into()))?;
    let mut ways = vec![BigUint::zero(); d + 1];
    ways[0] = BigUint::one();
    for &w in space.weights() {
        let w = w as usize;
        for k in w..=d {
            let (lo, hi) = ways.split_at_mut(k);
            hi[0] += &lo[k - w];
        }
    }
    Ok(ways.swap_remove(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(w: &[u64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(WeightedSpace::new(vec![]).is_err());
        assert!(WeightedSpace::new(vec![0, 1]).is_err());
        assert!(matches!(
            WeightedSpace::new(vec![2, 4, 6]),
            Err(Error::InvalidWeights(_))
        ));
    }

    #[test]
    fn weighted_degree_examples() {
        let p = space(&[1, 4, 5, 10]);
        assert_eq!(weighted_degree(&vec![5, 0, 0, 0].into(), &p).unwrap(), 5);
        assert_eq!(weighted_degree(&ExponentVector::zero(4), &p).unwrap(), 0);
        assert_eq!(weighted_degree(&vec![0, 1, 0, 1].into(), &p).unwrap(), 14);
        assert!(matches!(
            weighted_degree(&vec![1, 1].into(), &p),
            Err(Error::Dimension { expected: 4, got: 2 })
        ));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(&space(&[1, 1, 1, 3]), 1).unwrap().len(), 3);
        assert_eq!(monomials_of_degree(&space(&[1, 2, 3, 6]), 12).unwrap().len(), 27);
        assert_eq!(monomials_of_degree(&space(&[1, 4, 5, 10]), 20).unwrap().len(), 23);
        assert!(monomials_of_degree(&space(&[1, 1]), -1).is_err());
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_count(&space(&[1, 1, 1, 3]), 5).unwrap(), BigUint::from(27u32));
        assert_eq!(hilbert_count(&space(&[1, 1, 1, 1]), 1).unwrap(), BigUint::from(4u32));
        assert_eq!(hilbert_count(&space(&[1, 2, 6, 9]), 18).unwrap(), BigUint::from(30u32));
        assert_eq!(hilbert_count(&space(&[2, 3]), 1).unwrap(), BigUint::zero());
        assert_eq!(hilbert_count(&space(&[2, 3]), 0).unwrap(), BigUint::one());
        assert!(hilbert_count(&space(&[1]), -3).is_err());
    }

    #[test]
    fn hilbert_is_exact_at_large_degree() {
        // C(1000 + 3, 3) monomials of degree 1000 on P^3.
        let expected = BigUint::from(1003u32 * 1002 * 1001 / 6);
        assert_eq!(hilbert_count(&space(&[1, 1, 1, 1]), 1000).unwrap(), expected);
    }

    #[test]
    fn graded_lex_order() {
        let a: ExponentVector = vec![0, 0, 2].into();
        let b: ExponentVector = vec![1, 0, 0].into();
        let c: ExponentVector = vec![1, 1, 0].into();
        assert!(b < a);
        assert!(a < c);
        let mons = monomials_of_degree(&space(&[1, 2, 3]), 6).unwrap();
        assert!(mons.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn divisor_class_cartier() {
        let p = space(&[1, 2, 4, 5]);
        assert!(!DivisorClass::new(12).is_cartier(&p));
        assert!(DivisorClass::new(20).is_cartier(&p));
        assert!(DivisorClass::new(-20).is_cartier(&p));
    }

    #[test]
    fn canonical_form_sorts() {
        let p = space(&[10, 1, 5, 4]);
        assert_eq!(p.canonical().weights(), &[1, 4, 5, 10]);
        assert!(!p.is_canonical());
        assert_eq!(p.lcm(), 20);
        assert_eq!(p.sigma(), 20);
    }
}
