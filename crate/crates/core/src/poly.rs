//! Sparse polynomials with rational coefficients over named, weighted
//! coordinates.
//!
//! Text form, one header line then terms joined by `+`:
//!
//! ```text
//! coords: u0:1, u1:1, u2:1, v:2
//! 1 * u0 v^2 + -3/2 * u1^5
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{monomials_with_weights, ExponentVector};

/// Coordinate names with their weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(coords: impl IntoIterator<Item = (S, u64)>) -> Result<Self> {
        let (names, weights): (Vec<String>, Vec<u64>) =
            coords.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
                return Err(Error::Domain(format!("invalid coordinate name '{name}'")));
            }
            if names[..i].contains(name) {
                return Err(Error::Domain(format!("coordinate '{name}' declared twice")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Domain(format!("coordinate '{}' has weight 0", names[i])));
        }
        Ok(PolyRing { names, weights })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Domain(format!("no coordinate named '{name}'")))
    }

    pub fn degree_of(&self, e: &ExponentVector) -> u64 {
        e.0.iter().zip(&self.weights).map(|(&k, &w)| u64::from(k) * w).sum()
    }

    /// The ring with one coordinate removed.
    pub fn without(&self, index: usize) -> PolyRing {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        names.remove(index);
        weights.remove(index);
        PolyRing { names, weights }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coords:")?;
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            write!(f, "{}{n}:{w}", if i == 0 { " " } else { ", " })?;
        }
        Ok(())
    }
}

/// Homogeneity of a polynomial in the weighted grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Homogeneity {
    Zero,
    Degree(u64),
    Inhomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsePoly {
    ring: PolyRing,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl SparsePoly {
    pub fn zero(ring: &PolyRing) -> Self {
        SparsePoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: BigRational) -> Self {
        Self::term(ring, ExponentVector::zero(ring.len()), c)
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn term(ring: &PolyRing, e: ExponentVector, c: BigRational) -> Self {
        assert_eq!(e.len(), ring.len(), "exponent length does not match the ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn monomial(ring: &PolyRing, e: impl Into<ExponentVector>) -> Self {
        Self::term(ring, e.into(), BigRational::one())
    }

    pub fn var(ring: &PolyRing, name: &str) -> Result<Self> {
        let i = ring.index_of(name)?;
        Ok(Self::monomial(ring, ExponentVector::unit(ring.len(), i)))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|e| self.ring.degree_of(e));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|x| x == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    /// The common weighted degree, absent for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<u64> {
        match self.homogeneity() {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    fn same_ring(&self, other: &SparsePoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Domain(format!(
                "ring mismatch: '{}' vs '{}'",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    fn add_term(&mut self, e: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePoly {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> SparsePoly {
        let mut out = Self::zero(&self.ring);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.same_ring(other)?;
        let mut acc: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(e1.add(e2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(SparsePoly {
            ring: self.ring.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut out = Self::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Replace every coordinate by a polynomial in `target`, one image per
    /// coordinate of this ring.
    pub fn substitute_all(&self, target: &PolyRing, images: &[SparsePoly]) -> Result<SparsePoly> {
        if images.len() != self.ring.len() {
            return Err(Error::Dimension {
                expected: self.ring.len(),
                got: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|p| &p.ring != target) {
            return Err(Error::Domain(format!("image lives in '{}', not '{target}'", bad.ring)));
        }
        // cache powers per coordinate
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|p| vec![SparsePoly::one(target), p.clone()])
            .collect();
        let mut out = SparsePoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = SparsePoly::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().expect("nonempty").mul(&images[i])?;
                    powers[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&powers[i][k])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Substitute `r` for the coordinate `var`; `r` must have the weight of
    /// `var` so the result stays homogeneous of the same degree.
    pub fn substitute(&self, var: &str, r: &SparsePoly) -> Result<SparsePoly> {
        self.same_ring(r)?;
        let i = self.ring.index_of(var)?;
        let w = self.ring.weights[i];
        match r.homogeneity() {
            Homogeneity::Degree(d) if d == w => {}
            Homogeneity::Zero => {}
            Homogeneity::Degree(d) => {
                return Err(Error::Homogeneity(format!(
                    "substitute for '{var}' of weight {w} has degree {d}"
                )))
            }
            Homogeneity::Inhomogeneous => {
                return Err(Error::Homogeneity(format!(
                    "substitute for '{var}' is not homogeneous"
                )))
            }
        }
        let images: Vec<SparsePoly> = (0..self.ring.len())
            .map(|j| {
                if j == i {
                    r.clone()
                } else {
                    SparsePoly::monomial(&self.ring, ExponentVector::unit(self.ring.len(), j))
                }
            })
            .collect();
        self.substitute_all(&self.ring, &images)
    }

    /// Set `var` to zero; the result lives on the remaining coordinates.
    pub fn restrict_hyperplane(&self, var: &str) -> Result<SparsePoly> {
        let i = self.ring.index_of(var)?;
        let ring = self.ring.without(i);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0[i] == 0)
            .map(|(e, c)| {
                let mut v = e.0.clone();
                v.remove(i);
                (ExponentVector(v), c.clone())
            })
            .collect();
        Ok(SparsePoly { ring, terms })
    }

    /// Remove a coordinate the polynomial does not involve.
    pub fn drop_coordinate(&self, var: &str) -> Result<SparsePoly> {
        let i = self.ring.index_of(var)?;
        if self.terms.keys().any(|e| e.0[i] > 0) {
            return Err(Error::Domain(format!("polynomial still involves '{var}'")));
        }
        self.restrict_hyperplane(var)
    }

    /// Largest power of `var` dividing every term (0 for the zero polynomial).
    pub fn valuation(&self, var: &str) -> Result<u32> {
        let i = self.ring.index_of(var)?;
        Ok(self.terms.keys().map(|e| e.0[i]).min().unwrap_or(0))
    }

    /// Exact division by a monomial, `None` if some term is not divisible.
    pub fn divide_by_monomial(&self, m: &ExponentVector) -> Option<SparsePoly> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| e.checked_sub(m).map(|q| (q, c.clone())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(SparsePoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Coefficients as a polynomial in a single remaining coordinate,
    /// lowest power first. Fails if other coordinates occur.
    pub fn as_univariate(&self, var: &str) -> Result<Vec<BigRational>> {
        let i = self.ring.index_of(var)?;
        let mut out: Vec<BigRational> = Vec::new();
        for (e, c) in &self.terms {
            if e.0.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return Err(Error::Domain(format!("not univariate in '{var}'")));
            }
            let k = e.0[i] as usize;
            if out.len() <= k {
                out.resize(k + 1, BigRational::zero());
            }
            out[k] = c.clone();
        }
        Ok(out)
    }

    /// Parse the text form; line numbers in errors count from 1.
    pub fn parse(text: &str) -> Result<SparsePoly> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let ring = parse_header(header).map_err(|msg| Error::Parse { line: hline, msg })?;
        let mut p = SparsePoly::zero(&ring);
        for (line, content) in lines {
            for raw in content.split('+') {
                let raw = raw.trim();
                if raw.is_empty() {
                    continue;
                }
                let (e, c) = parse_term(&ring, raw).map_err(|msg| Error::Parse { line, msg })?;
                p.add_term(e, c);
            }
        }
        Ok(p)
    }

    /// Seeded polynomial with every monomial of degree `d` present and
    /// small nonzero rational coefficients.
    pub fn random_homogeneous(ring: &PolyRing, d: u64, seed: u64) -> SparsePoly {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(ring, d, &mut rng)
    }

    pub fn random_with(ring: &PolyRing, d: u64, rng: &mut impl Rng) -> SparsePoly {
        let mut p = SparsePoly::zero(ring);
        for e in monomials_with_weights(ring.weights(), d) {
            p.terms.insert(e, random_rational(rng));
        }
        p
    }
}

/// Numerator in `±1..=9`, denominator in `1..=5`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn parse_header(line: &str) -> std::result::Result<PolyRing, String> {
    let rest = line
        .strip_prefix("coords:")
        .ok_or_else(|| "expected a 'coords:' header".to_string())?;
    let coords = rest
        .split(',')
        .map(|item| {
            let (name, w) = item
                .split_once(':')
                .ok_or_else(|| format!("coordinate '{}' lacks ':weight'", item.trim()))?;
            let w = w
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("bad weight '{}'", w.trim()))?;
            Ok((name.trim().to_string(), w))
        })
        .collect::<std::result::Result<Vec<_>, String>>()?;
    PolyRing::new(coords).map_err(|e| e.to_string())
}

fn parse_term(ring: &PolyRing, raw: &str) -> std::result::Result<(ExponentVector, BigRational), String> {
    let (coeff_text, mono_text) = match raw.split_once('*') {
        Some((c, m)) => (c.trim(), m.trim()),
        None => {
            let looks_numeric = raw
                .trim_start_matches('-')
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_digit());
            if looks_numeric {
                (raw, "")
            } else if let Some(m) = raw.strip_prefix('-') {
                ("-1", m.trim())
            } else {
                ("1", raw)
            }
        }
    };
    let coeff = BigRational::from_str(coeff_text).map_err(|_| format!("bad coefficient '{coeff_text}'"))?;
    let mut e = vec![0u32; ring.len()];
    for factor in mono_text.split_whitespace() {
        let (name, k) = match factor.split_once('^') {
            Some((n, k)) => (n, k.parse::<u32>().map_err(|_| format!("bad exponent in '{factor}'"))?),
            None => (factor, 1),
        };
        let i = ring.index_of(name).map_err(|e| e.to_string())?;
        e[i] += k;
    }
    Ok((ExponentVector(e), coeff))
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if !e.is_constant() {
                write!(f, " *")?;
                for (&p, name) in e.0.iter().zip(&self.ring.names) {
                    match p {
                        0 => {}
                        1 => write!(f, " {name}")?,
                        _ => write!(f, " {name}^{p}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for SparsePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SparsePoly::parse(s)
    }
}
