//! Gorenstein weighted projective 3-spaces.
//!
//! `P(a0..a3)` is Gorenstein when every weight divides `σ = Σ a_i`. Setting
//! `b_i = σ / a_i` turns that condition into `Σ 1/b_i = 1`, so the spaces
//! are found by enumerating four-term unit fraction decompositions of 1.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::WeightedSpace;

/// Number of Gorenstein weighted projective 3-spaces.
pub const GORENSTEIN_WPS3_COUNT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinInvariants {
    pub l: u64,
    pub sigma: u64,
    pub index: u64,
}

fn require_four(space: &WeightedSpace) -> Result<()> {
    if space.len() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: space.len(),
        });
    }
    Ok(())
}

/// Every three of the four weights are coprime.
pub fn is_well_formed(space: &WeightedSpace) -> bool {
    let w = space.weights();
    (0..w.len()).all(|skip| {
        w.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(0u64, |acc, (_, &x)| acc.gcd(&x))
            == 1
    })
}

pub fn gorenstein_invariants(space: &WeightedSpace) -> Result<GorensteinInvariants> {
    require_four(space)?;
    let sigma = space.sigma();
    if let Some(&weight) = space.weights().iter().find(|&&a| sigma % a != 0) {
        return Err(Error::NotGorenstein { weight, sigma });
    }
    let l = space.lcm();
    // every a_i | σ, hence l | σ
    Ok(GorensteinInvariants {
        l,
        sigma,
        index: sigma / l,
    })
}

/// All `b0 <= b1 <= b2 <= b3` with `Σ 1/b_i = 1`.
pub fn enumerate_unit_fraction_quadruples() -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(4);
    search_unit_fractions(4, 1, 1, 1, &mut prefix, &mut out);
    out
}

/// Extends `prefix` with `k` more terms summing to `num/den`, each at least `min`.
fn search_unit_fractions(
    k: u64,
    num: u64,
    den: u64,
    min: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<[u64; 4]>,
) {
    if k == 1 {
        // the last term must be exactly num/den
        if num == 1 && den >= min {
            prefix.push(den);
            out.push([prefix[0], prefix[1], prefix[2], prefix[3]]);
            prefix.pop();
        }
        return;
    }
    // 1/b <= num/den and k/b >= num/den
    let lo = min.max(den.div_ceil(num));
    let hi = (k * den) / num;
    for b in lo..=hi {
        // num/den - 1/b = (num*b - den) / (den*b)
        let rest_num = num * b - den;
        if rest_num == 0 {
            continue;
        }
        let rest_den = den * b;
        let g = rest_num.gcd(&rest_den);
        prefix.push(b);
        search_unit_fractions(k - 1, rest_num / g, rest_den / g, b, prefix, out);
        prefix.pop();
    }
}

/// Weights `a_i = N / b_i` with `N = lcm(b_i)`, reduced and sorted.
pub fn weights_from_quadruple(b: &[u64; 4]) -> Result<WeightedSpace> {
    let n = b.iter().fold(1u64, |acc, x| acc.lcm(x));
    let raw: Vec<u64> = b.iter().map(|x| n / x).collect();
    let g = raw.iter().fold(0u64, |acc, x| acc.gcd(x));
    let mut weights: Vec<u64> = raw.into_iter().map(|a| a / g).collect();
    weights.sort_unstable();
    WeightedSpace::new(weights)
}

/// Candidate spaces before the well-formedness filter and deduplication,
/// paired with the quadruple that produced each.
pub fn raw_gorenstein_candidates() -> Result<Vec<([u64; 4], WeightedSpace)>> {
    enumerate_unit_fraction_quadruples()
        .into_iter()
        .map(|q| weights_from_quadruple(&q).map(|w| (q, w)))
        .collect()
}

/// The Gorenstein weighted projective 3-spaces, sorted by weights.
pub fn enumerate_gorenstein_wps3() -> Result<Vec<WeightedSpace>> {
    let spaces: BTreeSet<WeightedSpace> = raw_gorenstein_candidates()?
        .into_iter()
        .map(|(_, w)| w)
        .filter(is_well_formed)
        .collect();
    if spaces.len() != GORENSTEIN_WPS3_COUNT {
        return Err(Error::Consistency(format!(
            "found {} Gorenstein spaces, expected {GORENSTEIN_WPS3_COUNT}",
            spaces.len()
        )));
    }
    Ok(spaces.into_iter().collect())
}

/// `|O(m)|` is basepoint-free iff every weight divides `m`.
pub fn is_basepoint_free(space: &WeightedSpace, m: u64) -> bool {
    m >= 1 && space.weights().iter().all(|&w| m % w == 0)
}

/// Genus of the anticanonical curve section: `(-K)^3 = σ³ / Π a_i = 2g - 2`.
pub fn anticanonical_genus(space: &WeightedSpace) -> Result<u64> {
    gorenstein_invariants(space)?;
    let sigma = BigUint::from(space.sigma());
    let numer = &sigma * &sigma * &sigma;
    let denom = space.weight_product() * 2u32;
    let (q, r) = numer.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "(-K)^3 / 2 = {numer}/{denom} is not integral for {space}"
        )));
    }
    let g = q + 1u32;
    g.to_u64()
        .ok_or_else(|| Error::Consistency(format!("genus {g} exceeds u64")))
}

/// Same genus through the intersection form: `O(σ)^3 = 2g - 2`.
pub fn anticanonical_genus_via_intersection(space: &WeightedSpace) -> Result<u64> {
    let sigma = space.sigma() as i64;
    let cube = crate::intersect::top_intersection(space, &[sigma, sigma, sigma])?;
    let g = cube / BigRational::from_integer(BigInt::from(2)) + BigRational::one();
    if !g.is_integer() {
        return Err(Error::Consistency(format!("non-integral genus {g} for {space}")));
    }
    g.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Consistency("genus exceeds u64".into()))
}

/// Genus of `C` with `Γ = i·C` on a K3 surface: `C² = (2g-2)/i²`, `g(C) = C²/2 + 1`.
pub fn primitive_genus(g: u64, i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::Domain("index must be at least 1".into()));
    }
    if g == 0 {
        return Err(Error::Domain("genus must be at least 1".into()));
    }
    let gamma_sq = 2 * (g - 1);
    let i2 = i * i;
    if gamma_sq % i2 != 0 {
        return Err(Error::Domain(format!("{i}^2 does not divide 2g - 2 = {gamma_sq}")));
    }
    let c_sq = gamma_sq / i2;
    if c_sq % 2 != 0 {
        return Err(Error::Domain(format!(
            "C^2 = {c_sq} is odd, impossible on a K3 surface"
        )));
    }
    Ok(c_sq / 2 + 1)
}
