//! Simplicial fans in `Z^3`.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::WeightedSpace;
use crate::lattice::left_kernel;

/// A primitive vector of `Z^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct Ray([i64; 3]);

impl Ray {
    pub fn new(v: [i64; 3]) -> Result<Self> {
        let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
        if g != 1 {
            return Err(Error::Domain(format!("{v:?} is not a primitive vector")));
        }
        Ok(Ray(v))
    }

    /// Primitive part of a nonzero vector and the factor removed.
    pub fn primitive_part(v: [i64; 3]) -> Result<(Self, u64)> {
        let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
        if g == 0 {
            return Err(Error::Domain("zero vector has no primitive part".into()));
        }
        Ok((Ray([v[0] / g, v[1] / g, v[2] / g]), g as u64))
    }

    pub fn vector(&self) -> [i64; 3] {
        self.0
    }
}

impl TryFrom<[i64; 3]> for Ray {
    type Error = Error;
    fn try_from(v: [i64; 3]) -> Result<Self> {
        Ray::new(v)
    }
}

impl From<Ray> for [i64; 3] {
    fn from(r: Ray) -> Self {
        r.0
    }
}

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i128 {
    let [a, b, c] = [a, b, c].map(|v| v.map(i128::from));
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn cross(a: [i128; 3], b: [i128; 3]) -> [i128; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [i128; 3], b: [i128; 3]) -> i128 {
    a.iter().zip(&b).map(|(x, y)| x * y).sum()
}

fn wide(r: &Ray) -> [i128; 3] {
    r.0.map(i128::from)
}

/// Rays plus maximal cones, each cone a sorted list of ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    rays: Vec<Ray>,
    cones: Vec<Vec<usize>>,
}

/// Result of a star subdivision: `multiplicity · ray = Σ coeffs_i · v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blowup {
    pub fan: Fan,
    pub ray: Ray,
    pub ray_index: usize,
    pub multiplicity: u64,
}

impl Fan {
    pub fn new(rays: Vec<Ray>, cones: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for r in &rays {
            if !seen.insert(*r) {
                return Err(Error::Domain(format!("ray {:?} listed twice", r.0)));
            }
        }
        let mut normalized = Vec::with_capacity(cones.len());
        for mut cone in cones {
            cone.sort_unstable();
            cone.dedup();
            if let Some(&i) = cone.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Domain(format!("cone refers to missing ray {i}")));
            }
            if cone.len() != 3 || det3(rays[cone[0]].0, rays[cone[1]].0, rays[cone[2]].0) == 0 {
                return Err(Error::Domain(format!("cone {cone:?} is not simplicial of dimension 3")));
            }
            normalized.push(cone);
        }
        normalized.sort();
        normalized.dedup();
        Ok(Fan {
            rays,
            cones: normalized,
        })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn ray_index(&self, r: &Ray) -> Option<usize> {
        self.rays.iter().position(|x| x == r)
    }

    /// Cones as sets of ray vectors, independent of ray numbering.
    pub fn cone_sets(&self) -> BTreeSet<BTreeSet<Ray>> {
        self.cones
            .iter()
            .map(|c| c.iter().map(|&i| self.rays[i]).collect())
            .collect()
    }

    /// Same rays and same cones, up to renumbering.
    pub fn same_as(&self, other: &Fan) -> bool {
        let a: BTreeSet<Ray> = self.rays.iter().copied().collect();
        let b: BTreeSet<Ray> = other.rays.iter().copied().collect();
        a == b && self.cone_sets() == other.cone_sets()
    }

    /// Star subdivision of every maximal cone containing `cone` at the
    /// primitive part of `Σ coeffs_i · v_i`.
    pub fn weighted_blowup(&self, cone: &[usize], coeffs: &[u64]) -> Result<Blowup> {
        if cone.is_empty() || cone.len() != coeffs.len() {
            return Err(Error::Dimension {
                expected: cone.len(),
                got: coeffs.len(),
            });
        }
        if coeffs.contains(&0) {
            return Err(Error::Domain("blow-up coefficients must be positive".into()));
        }
        let tau: BTreeSet<usize> = cone.iter().copied().collect();
        let containing: Vec<&Vec<usize>> = self
            .cones
            .iter()
            .filter(|c| tau.iter().all(|i| c.contains(i)))
            .collect();
        if containing.is_empty() {
            return Err(Error::Domain(format!("{cone:?} is not a cone of the fan")));
        }
        let mut sum = [0i64; 3];
        for (&i, &c) in cone.iter().zip(coeffs) {
            let v = self.rays.get(i).ok_or_else(|| Error::Domain(format!("missing ray {i}")))?;
            for k in 0..3 {
                sum[k] += c as i64 * v.0[k];
            }
        }
        let (ray, multiplicity) = Ray::primitive_part(sum)?;
        if self.ray_index(&ray).is_some() {
            return Err(Error::DegenerateSubdivision(ray.0.to_vec()));
        }
        let new = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(ray);
        let mut cones = Vec::new();
        for c in &self.cones {
            if tau.iter().all(|i| c.contains(i)) {
                for &r in &tau {
                    let mut piece: Vec<usize> = c.iter().copied().filter(|&i| i != r).collect();
                    piece.push(new);
                    cones.push(piece);
                }
            } else {
                cones.push(c.clone());
            }
        }
        Ok(Blowup {
            fan: Fan::new(rays, cones)?,
            ray,
            ray_index: new,
            multiplicity,
        })
    }

    /// Every pair of maximal cones meets in a common face: there is a linear
    /// form vanishing on the shared rays, positive on the rest of one cone
    /// and negative on the rest of the other.
    pub fn cones_meet_properly(&self) -> bool {
        for (i, a) in self.cones.iter().enumerate() {
            for b in &self.cones[i + 1..] {
                if !self.separated(a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn separated(&self, a: &[usize], b: &[usize]) -> bool {
        let shared: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
        let only_a: Vec<[i128; 3]> = a.iter().filter(|i| !shared.contains(i)).map(|&i| wide(&self.rays[i])).collect();
        let only_b: Vec<[i128; 3]> = b.iter().filter(|i| !shared.contains(i)).map(|&i| wide(&self.rays[i])).collect();
        let shared_v: Vec<[i128; 3]> = shared.iter().map(|&i| wide(&self.rays[i])).collect();
        let all: Vec<[i128; 3]> = a.iter().chain(b).map(|&i| wide(&self.rays[i])).collect();

        // extreme separating forms vanish on two of the rays involved
        let mut candidates = Vec::new();
        for (p, u) in all.iter().enumerate() {
            for v in &all[p + 1..] {
                let c = cross(*u, *v);
                if c != [0, 0, 0] {
                    candidates.push(c);
                    candidates.push(c.map(|x| -x));
                }
            }
        }
        let weakly_valid = |n: &[i128; 3]| {
            shared_v.iter().all(|s| dot(*n, *s) == 0)
                && only_a.iter().all(|r| dot(*n, *r) >= 0)
                && only_b.iter().all(|r| dot(*n, *r) <= 0)
        };
        let mut total = [0i128; 3];
        for c in candidates.iter().filter(|c| weakly_valid(c)) {
            for k in 0..3 {
                total[k] += c[k];
            }
        }
        only_a.iter().all(|r| dot(total, *r) > 0) && only_b.iter().all(|r| dot(total, *r) < 0)
            && shared_v.iter().all(|s| dot(total, *s) == 0)
    }

    /// `Σ a_i v_i = 0` for the given weights against the first rays.
    pub fn satisfies_weight_relation(&self, weights: &[u64]) -> bool {
        if weights.len() > self.rays.len() {
            return false;
        }
        (0..3).all(|k| {
            weights
                .iter()
                .zip(&self.rays)
                .map(|(&a, r)| a as i128 * r.0[k] as i128)
                .sum::<i128>()
                == 0
        })
    }
}

/// The fan of `P(a0, a1, a2, a3)`: rays with `Σ a_i v_i = 0` generating
/// `Z^3`, and every 3-subset as a maximal cone.
///
/// When `a0` divides the other weights the rays are `-(a1, a2, a3)/a0` and
/// the standard basis; otherwise the columns of the Hermite basis of the
/// kernel of the weight row.
pub fn wps_fan(space: &WeightedSpace) -> Result<Fan> {
    if space.len() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: space.len(),
        });
    }
    let a: Vec<i64> = space.weights().iter().map(|&w| w as i64).collect();
    let vectors: Vec<[i64; 3]> = if a[1..].iter().all(|x| x % a[0] == 0) {
        let v0 = [-a[1] / a[0], -a[2] / a[0], -a[3] / a[0]];
        vec![v0, [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    } else {
        let column: Vec<Vec<num_bigint::BigInt>> =
            a.iter().map(|&x| vec![num_bigint::BigInt::from(x)]).collect();
        let basis = left_kernel(&column);
        (0..4)
            .map(|i| {
                let mut v = [0i64; 3];
                for (k, row) in basis.iter().enumerate() {
                    v[k] = row[i].to_i64().expect("small kernel entries");
                }
                v
            })
            .collect()
    };
    let rays = vectors
        .into_iter()
        .map(Ray::new)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::InvalidWeights(format!("{space} is not well-formed: {e}")))?;
    let cones = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    Fan::new(rays, cones)
}
