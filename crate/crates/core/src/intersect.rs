//! Intersection numbers of `Q`-Cartier classes on weighted projective
//! spaces, and the degree/dimension checks certifying each extension.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::classify::{anticanonical_genus, primitive_genus};
use crate::error::{Error, Result};
use crate::grading::WeightedSpace;
use crate::reference::ReferenceCase;

/// `O(d1) · … · O(dn)` on `P(a0..an)`, which is `Π d_i / Π a_i`.
pub fn top_intersection(space: &WeightedSpace, degrees: &[i64]) -> Result<BigRational> {
    if degrees.len() != space.dim() {
        return Err(Error::Dimension {
            expected: space.dim(),
            got: degrees.len(),
        });
    }
    if let Some(d) = degrees.iter().find(|&&d| d < 0) {
        return Err(Error::Domain(format!("negative degree {d}")));
    }
    let numer: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    Ok(BigRational::new(numer, BigInt::from(space.weight_product())))
}

/// Degree of a complete intersection of the given hypersurface degrees,
/// polarized by `O(polarization)`.
pub fn model_degree(
    ambient: &WeightedSpace,
    hypersurface_degrees: &[i64],
    polarization: i64,
) -> Result<BigRational> {
    let dim = ambient.dim();
    if hypersurface_degrees.len() >= dim {
        return Err(Error::Dimension {
            expected: dim - 1,
            got: hypersurface_degrees.len(),
        });
    }
    if polarization < 1 {
        return Err(Error::Domain(format!("polarization {polarization} must be positive")));
    }
    let mut degrees = hypersurface_degrees.to_vec();
    degrees.resize(dim, polarization);
    top_intersection(ambient, &degrees)
}

/// A complete intersection model polarized by `O(polarization)`, possibly
/// fibred over a base of dimension `base_dim` (then the degree is taken on
/// a fixed fibre).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionModel {
    pub label: String,
    pub ambient: WeightedSpace,
    pub hypersurface_degrees: Vec<i64>,
    pub polarization: i64,
    pub base_dim: usize,
}

impl ExtensionModel {
    fn new(label: &str, ambient: &[u64], hyp: &[i64], polarization: i64, base_dim: usize) -> Self {
        ExtensionModel {
            label: label.to_string(),
            ambient: WeightedSpace::new(ambient.to_vec()).expect("static weights are valid"),
            hypersurface_degrees: hyp.to_vec(),
            polarization,
            base_dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.hypersurface_degrees.len() + self.base_dim
    }

    pub fn degree(&self) -> Result<BigRational> {
        model_degree(&self.ambient, &self.hypersurface_degrees, self.polarization)
    }
}

/// The constructed models for each case. The first entry is the maximal
/// extension itself (or a fixed fibre of it for case 14).
pub fn extension_models(case_id: u32) -> Result<Vec<ExtensionModel>> {
    use ExtensionModel as M;
    Ok(match case_id {
        9 => vec![M::new("quintic", &[1, 1, 1, 2, 4, 4, 4], &[5], 4, 0)],
        10 => vec![M::new("10-ic", &[1, 1, 3, 5, 9, 9], &[10], 9, 0)],
        11 => vec![M::new("itself", &[1, 2, 3, 6], &[], 12, 0)],
        12 => vec![M::new("9-ic", &[1, 1, 3, 4, 8, 8], &[9], 8, 0)],
        13 => vec![M::new("heptic", &[1, 1, 2, 3, 6, 6], &[7], 6, 0)],
        14 => vec![
            M::new("fibre of the bundle", &[1, 1, 2, 3, 5, 5, 5], &[6, 6], 5, 1),
            M::new("Y1 (12-ic)", &[1, 2, 4, 5, 10, 10], &[12], 10, 0),
            M::new("Y2 (18-ic)", &[1, 3, 5, 9, 15, 15], &[18], 15, 0),
            M::new("fixed-fibre complete intersection", &[1, 1, 2, 3, 5, 5], &[6, 6], 5, 0),
        ],
        other => return Err(Error::Domain(format!("no extension data for case {other}"))),
    })
}

/// One row of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
    pub note: String,
}

impl CheckEntry {
    pub fn new(
        check: impl Into<String>,
        computed: impl ToString,
        expected: impl ToString,
        note: impl Into<String>,
    ) -> Self {
        let computed = computed.to_string();
        let expected = expected.to_string();
        CheckEntry {
            check: check.into(),
            pass: computed == expected,
            computed,
            expected,
            note: note.into(),
        }
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

fn integrality_note(value: &BigRational) -> &'static str {
    if value.is_integer() {
        ""
    } else {
        "non-integral degree against Cartier classes"
    }
}

/// (a) model degree = 2g - 2, (b) dim Y = 1 + α, (c) the model has that
/// dimension; case 11 additionally records that it admits no extension.
pub fn extension_consistency(case: &ReferenceCase) -> Result<Vec<CheckEntry>> {
    let id = case.case_id;
    let models = extension_models(id)?;
    let two_g_minus_2 = BigRational::from_integer(BigInt::from(2 * case.g as i64 - 2));
    let mut out = Vec::new();

    let main = &models[0];
    let deg = main.degree()?;
    let mut note = integrality_note(&deg).to_string();
    if id == 12 {
        note = "the stated value 46 is a slip; the formula 8^4*9/(8^2*4*3) and g = 25 both give 48"
            .to_string();
    }
    out.push(
        CheckEntry::new(format!("{id}a"), &deg, &two_g_minus_2, note)
            .with_pass(deg == two_g_minus_2),
    );

    out.push(CheckEntry::new(
        format!("{id}b"),
        case.dim_y,
        1 + case.alpha,
        format!("dim Y = 1 + alpha with alpha = {}", case.alpha),
    ));

    out.push(CheckEntry::new(
        format!("{id}c"),
        main.dim(),
        case.dim_y,
        format!("dimension of the {} model", main.label),
    ));

    if id == 11 {
        let extendable = case.alpha > 2;
        out.push(CheckEntry::new(
            "11d",
            if extendable { "extendable" } else { "not extendable" },
            "not extendable",
            "alpha = 2 leaves P as its own maximal extension",
        ));
    }

    for (k, model) in models.iter().enumerate().skip(1) {
        let deg = model.degree()?;
        out.push(
            CheckEntry::new(
                format!("{id}a{k}"),
                &deg,
                &two_g_minus_2,
                format!("{}; {}", model.label, integrality_note(&deg)).trim_end_matches("; ").to_string(),
            )
            .with_pass(deg == two_g_minus_2),
        );
    }

    // genus columns recomputed from the weights
    let g = anticanonical_genus(&case.weights)?;
    out.push(CheckEntry::new(format!("{id}g"), g, case.g, "genus of the curve section"));
    let gc = primitive_genus(g, case.i_s)?;
    out.push(CheckEntry::new(format!("{id}gc"), gc, case.g_c, "genus of the primitive curve"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(w: &[u64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn top_intersection_examples() {
        assert_eq!(
            top_intersection(&space(&[1, 4, 5, 10]), &[1, 1, 1]).unwrap(),
            BigRational::new(1.into(), 200.into())
        );
        assert_eq!(top_intersection(&space(&[1, 1, 1, 1]), &[1, 1, 1]).unwrap(), int(1));
        assert_eq!(top_intersection(&space(&[2, 3, 10, 15]), &[30, 30, 30]).unwrap(), int(30));
        assert!(matches!(
            top_intersection(&space(&[1, 1, 1, 1]), &[1, 1]),
            Err(Error::Dimension { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn multilinear() {
        let p = space(&[1, 3, 8, 12]);
        let base = top_intersection(&p, &[2, 5, 7]).unwrap();
        let scaled = top_intersection(&p, &[2, 15, 7]).unwrap();
        assert_eq!(scaled, base * int(3));
    }

    #[test]
    fn model_degree_examples() {
        assert_eq!(model_degree(&space(&[1, 1, 1, 2, 4, 4, 4]), &[5], 4).unwrap(), int(40));
        assert_eq!(model_degree(&space(&[1, 1, 3, 5, 9, 9]), &[10], 9).unwrap(), int(54));
        assert_eq!(model_degree(&space(&[1, 1, 2, 3, 5, 5, 5]), &[6, 6], 5).unwrap(), int(30));
        assert_eq!(model_degree(&space(&[1, 1, 3, 4, 8, 8]), &[9], 8).unwrap(), int(48));
        assert_eq!(model_degree(&space(&[1, 2, 4, 5, 10, 10]), &[12], 10).unwrap(), int(30));
        let p = space(&[1, 2, 6, 9]);
        assert_eq!(
            model_degree(&p, &[], 18).unwrap(),
            top_intersection(&p, &[18, 18, 18]).unwrap()
        );
        assert!(model_degree(&p, &[1, 1, 1], 1).is_err());
    }

    #[test]
    fn model_dimensions() {
        let dims: Vec<usize> = (9..=14)
            .map(|id| extension_models(id).unwrap()[0].dim())
            .collect();
        assert_eq!(dims, vec![5, 4, 3, 4, 4, 5]);
    }
}
