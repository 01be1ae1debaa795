//! Restriction multiplicities of binary weighted forms.
//!
//! A form `F(a, b)` on a weighted line `P(wa, wb)` factors as
//! `a^i b^j G` where `G` is a polynomial `h(t)` in `t = a^{wb'} / b^{wa'}`
//! (`wa' = wa / g`, `wb' = wb / g`, `g = gcd`). Each root of `h` is a point
//! of weighted degree `lcm(wa, wb)`; the coordinate point `{a = 0}` counts
//! `wa` and `{b = 0}` counts `wb`.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::univariate::{squarefree_decomposition, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Location {
    /// The coordinate point where the named coordinate vanishes.
    CoordinatePoint { vanishing: String },
    /// General points of a squarefree factor with `degree` roots.
    Factor { degree: usize },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::CoordinatePoint { vanishing } => write!(f, "p_{{{vanishing}=0}}"),
            Location::Factor { degree } => write!(f, "factor of degree {degree}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub multiplicity: u32,
    pub location: Location,
    /// Weighted degree of one point of the location.
    pub point_degree: u64,
}

impl ProfileEntry {
    /// Number of geometric points the entry stands for.
    pub fn points(&self) -> usize {
        match self.location {
            Location::CoordinatePoint { .. } => 1,
            Location::Factor { degree } => degree,
        }
    }

    pub fn weighted_degree(&self) -> u64 {
        self.multiplicity as u64 * self.point_degree * self.points() as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub degree: u64,
    pub entries: Vec<ProfileEntry>,
}

impl MultiplicityProfile {
    /// One multiplicity per geometric point, ascending.
    pub fn multiset(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.multiplicity, e.points()))
            .collect();
        out.sort_unstable();
        out
    }

    /// Sum of multiplicity times point degree over all points.
    pub fn accounted_degree(&self) -> u64 {
        self.entries.iter().map(ProfileEntry::weighted_degree).sum()
    }

    pub fn is_consistent(&self) -> bool {
        self.accounted_degree() == self.degree
    }

    /// The profile of `F^k`, e.g. for a doubled restriction.
    pub fn scaled(&self, k: u32) -> MultiplicityProfile {
        MultiplicityProfile {
            degree: self.degree * k as u64,
            entries: self
                .entries
                .iter()
                .map(|e| ProfileEntry {
                    multiplicity: e.multiplicity * k,
                    ..e.clone()
                })
                .collect(),
        }
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.multiset().iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", ms.join(","))
    }
}

/// Multiplicities of a nonzero weighted-homogeneous form in two coordinates.
pub fn binary_profile(form: &SparsePoly) -> Result<MultiplicityProfile> {
    let ring = form.ring();
    if ring.len() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: ring.len(),
        });
    }
    if form.is_zero() {
        return Err(Error::Domain("the zero form has no profile".into()));
    }
    let degree = form
        .degree()
        .ok_or_else(|| Error::Homogeneity("binary form is not homogeneous".into()))?;
    let (an, bn) = (&ring.names()[0], &ring.names()[1]);
    let (wa, wb) = (ring.weights()[0], ring.weights()[1]);
    let i = form.valuation(an)?;
    let j = form.valuation(bn)?;

    let mut entries = Vec::new();
    if i > 0 {
        entries.push(ProfileEntry {
            multiplicity: i,
            location: Location::CoordinatePoint { vanishing: an.clone() },
            point_degree: wa,
        });
    }
    if j > 0 {
        entries.push(ProfileEntry {
            multiplicity: j,
            location: Location::CoordinatePoint { vanishing: bn.clone() },
            point_degree: wb,
        });
    }

    let g = wa.gcd(&wb);
    let wb_red = wb / g;
    let lcm = wa.lcm(&wb);
    let dg = degree - i as u64 * wa - j as u64 * wb;
    if dg % lcm != 0 {
        return Err(Error::Consistency(format!(
            "residual degree {dg} is not a multiple of {lcm}"
        )));
    }
    let n_h = (dg / lcm) as usize;
    let mut coeffs = vec![BigRational::zero(); n_h + 1];
    for (e, c) in form.terms() {
        let p = (e.0[0] - i) as u64;
        coeffs[(p / wb_red) as usize] = c.clone();
    }
    for (factor, m) in squarefree_decomposition(&UniPoly::new(coeffs)) {
        entries.push(ProfileEntry {
            multiplicity: m,
            location: Location::Factor {
                degree: factor.degree().unwrap_or(0),
            },
            point_degree: lcm,
        });
    }
    entries.sort_by(|x, y| (x.multiplicity, &x.location).cmp(&(y.multiplicity, &y.location)));
    let profile = MultiplicityProfile { degree, entries };
    if !profile.is_consistent() {
        return Err(Error::Consistency(format!(
            "profile accounts for {} of degree {degree}",
            profile.accounted_degree()
        )));
    }
    Ok(profile)
}

/// Arithmetic genus of a plane curve of degree `d` minus the delta invariants.
pub fn plane_curve_genus(d: i64, deltas: &[i64]) -> Result<i64> {
    if d < 1 || deltas.iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!("invalid input d = {d}, deltas = {deltas:?}")));
    }
    let g = (d - 1) * (d - 2) / 2 - deltas.iter().sum::<i64>();
    if g < 0 {
        return Err(Error::Domain(format!(
            "negative genus {g}: curve is reducible or over-singular"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn quintuple_point() {
        let p = SparsePoly::parse("coords: u1:1, u2:1\n1 * u1^5").unwrap();
        let prof = binary_profile(&p).unwrap();
        assert_eq!(prof.multiset(), vec![5]);
        assert_eq!(
            prof.entries[0].location,
            Location::CoordinatePoint { vanishing: "u1".into() }
        );
    }

    #[test]
    fn triple_point_on_weighted_line() {
        let p = SparsePoly::parse("coords: u1:1, v:3\n-2 * v^3").unwrap();
        let prof = binary_profile(&p).unwrap();
        assert_eq!(prof.multiset(), vec![3]);
        assert_eq!(prof.accounted_degree(), 9);
    }

    #[test]
    fn fibre_quadratic() {
        let p = SparsePoly::parse("coords: u0:1, w:3\n1 * w^2 + 3 * u0^3 w + -5/2 * u0^6").unwrap();
        let prof = binary_profile(&p).unwrap();
        assert_eq!(prof.multiset(), vec![1, 1]);
        // perfect square: (w + u0^3)^2
        let sq = SparsePoly::parse("coords: u0:1, w:3\n1 * w^2 + 2 * u0^3 w + 1 * u0^6").unwrap();
        assert_eq!(binary_profile(&sq).unwrap().multiset(), vec![2]);
    }

    #[test]
    fn mixed_weights() {
        // a^2 b (b^2 - a^4)^2 on P(2, 4)
        let r = PolyRing::new([("a", 2u64), ("b", 4)]).unwrap();
        let a = SparsePoly::var(&r, "a").unwrap();
        let b = SparsePoly::var(&r, "b").unwrap();
        let quad = b.pow(2).sub(&a.pow(4)).unwrap();
        let f = a.pow(2).mul(&b).unwrap().mul(&quad.pow(2)).unwrap();
        let prof = binary_profile(&f).unwrap();
        assert_eq!(prof.multiset(), vec![1, 2, 2, 2]);
        assert!(prof.is_consistent());
        assert_eq!(prof.scaled(2).multiset(), vec![2, 4, 4, 4]);
    }

    #[test]
    fn profile_errors() {
        let r = PolyRing::new([("a", 1u64), ("b", 1)]).unwrap();
        assert!(matches!(binary_profile(&SparsePoly::zero(&r)), Err(Error::Domain(_))));
        let r3 = PolyRing::new([("a", 1u64), ("b", 1), ("c", 1)]).unwrap();
        assert!(binary_profile(&SparsePoly::constant(&r3, q(1))).is_err());
    }

    #[test]
    fn genus_trichotomy() {
        assert_eq!(plane_curve_genus(6, &[3]).unwrap(), 7);
        assert_eq!(plane_curve_genus(6, &[2]).unwrap(), 8);
        assert_eq!(plane_curve_genus(6, &[1]).unwrap(), 9);
        assert_eq!(plane_curve_genus(5, &[]).unwrap(), 6);
        assert!(plane_curve_genus(3, &[2]).is_err());
    }
}
