//! Fixed data for the fourteen Gorenstein spaces: their numbering, the
//! Veronese models, the projection maps and the surface equations of the
//! birational models, plus the toric factorization of case 9.

use crate::error::{Error, Result};
use crate::grading::WeightedSpace;
use crate::poly::{PolyRing, SparsePoly};
use crate::toric::{wps_fan, Blowup, Fan, MonomialMap, SourceCoords};

/// Case number and weights, in the customary order.
pub const GORENSTEIN_SPACES: [(u32, [u64; 4]); 14] = [
    (1, [1, 1, 1, 1]),
    (2, [1, 1, 1, 3]),
    (3, [1, 1, 4, 6]),
    (4, [1, 2, 2, 5]),
    (5, [1, 1, 2, 4]),
    (6, [1, 3, 4, 4]),
    (7, [1, 1, 2, 2]),
    (8, [2, 3, 3, 4]),
    (9, [1, 4, 5, 10]),
    (10, [1, 2, 6, 9]),
    (11, [1, 2, 3, 6]),
    (12, [1, 3, 8, 12]),
    (13, [1, 6, 14, 21]),
    (14, [2, 3, 10, 15]),
];

/// The cases without a known maximal extension before this work.
pub const STUDIED_CASES: [u32; 6] = [9, 10, 11, 12, 13, 14];

pub fn case_space(case_id: u32) -> Result<WeightedSpace> {
    GORENSTEIN_SPACES
        .iter()
        .find(|(id, _)| *id == case_id)
        .map(|(_, w)| WeightedSpace::new(w.to_vec()))
        .unwrap_or_else(|| Err(Error::Domain(format!("no case {case_id}"))))
}

pub fn case_number(space: &WeightedSpace) -> Option<u32> {
    GORENSTEIN_SPACES
        .iter()
        .find(|(_, w)| w.as_slice() == space.weights())
        .map(|(id, _)| *id)
}

/// Expected Veronese hypersurface model of a studied case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseRow {
    pub case_id: u32,
    pub n: u64,
    pub target_weights: [u64; 5],
    pub equation: &'static str,
    pub degree: u64,
}

pub const VERONESE_ROWS: [VeroneseRow; 6] = [
    VeroneseRow { case_id: 9, n: 5, target_weights: [1, 1, 1, 2, 4], equation: "u0 s = u1^5", degree: 5 },
    VeroneseRow { case_id: 10, n: 2, target_weights: [1, 1, 3, 5, 9], equation: "u0 t = s^2", degree: 10 },
    VeroneseRow { case_id: 11, n: 2, target_weights: [1, 1, 2, 3, 3], equation: "u0 s0 = v^2", degree: 4 },
    VeroneseRow { case_id: 12, n: 3, target_weights: [1, 1, 3, 4, 8], equation: "u0 t = v^3", degree: 9 },
    VeroneseRow { case_id: 13, n: 7, target_weights: [1, 1, 2, 3, 6], equation: "u0 t = u1^7", degree: 7 },
    VeroneseRow { case_id: 14, n: 3, target_weights: [1, 2, 4, 5, 10], equation: "v r = s^3", degree: 12 },
];

/// Cases whose model `X` has a nonregular `|O_X(σ/n)|`.
pub const NONREGULAR_ROWS: [u32; 3] = [10, 12, 14];

pub fn veronese_row(case_id: u32) -> Result<&'static VeroneseRow> {
    VERONESE_ROWS
        .iter()
        .find(|r| r.case_id == case_id)
        .ok_or_else(|| Error::Domain(format!("case {case_id} has no Veronese row")))
}

/// Projection from the vertex of the Veronese cone onto `P'`, with the
/// surface equation there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionRow {
    pub case_id: u32,
    pub target_weights: [u64; 4],
    pub target_names: [&'static str; 4],
    pub map: &'static str,
    pub indeterminacy: &'static str,
    /// The surface is `head · f_{d} + tail` with `f_d` general.
    pub head: &'static str,
    pub tail: &'static str,
    /// Power of `x` dividing the pullback of the surface equation.
    pub exceptional_order: u32,
}

pub const PROJECTION_ROWS: [ProjectionRow; 5] = [
    ProjectionRow {
        case_id: 9,
        target_weights: [1, 1, 1, 2],
        target_names: ["u0", "u1", "u2", "v"],
        map: "x^5 : x y : z : w",
        indeterminacy: "p_y",
        head: "u0",
        tail: "u1^5",
        exceptional_order: 5,
    },
    ProjectionRow {
        case_id: 10,
        target_weights: [1, 1, 3, 5],
        target_names: ["u0", "u1", "v", "s"],
        map: "x^2 : y : z : x w",
        indeterminacy: "p_w",
        head: "u0",
        tail: "s^2",
        exceptional_order: 2,
    },
    ProjectionRow {
        case_id: 12,
        target_weights: [1, 1, 3, 4],
        target_names: ["u0", "u1", "v", "s"],
        map: "x^3 : y : x z : w",
        indeterminacy: "p_z",
        head: "u0",
        tail: "v^3",
        exceptional_order: 3,
    },
    ProjectionRow {
        case_id: 13,
        target_weights: [1, 1, 2, 3],
        target_names: ["u0", "u1", "v", "s"],
        map: "x^7 : x y : z : w",
        indeterminacy: "p_y",
        head: "u0",
        tail: "u1^7",
        exceptional_order: 7,
    },
    ProjectionRow {
        case_id: 14,
        target_weights: [1, 2, 4, 5],
        target_names: ["u", "v", "s", "t"],
        map: "y : x^3 : x z : w",
        indeterminacy: "p_z",
        head: "v",
        tail: "s^3",
        exceptional_order: 3,
    },
];

pub fn projection_row(case_id: u32) -> Result<&'static ProjectionRow> {
    PROJECTION_ROWS
        .iter()
        .find(|r| r.case_id == case_id)
        .ok_or_else(|| Error::Domain(format!("case {case_id} has no projection row")))
}

const SOURCE_NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn space(w: &[u64]) -> Result<WeightedSpace> {
    WeightedSpace::new(w.to_vec())
}

fn named_ring(names: &[&str], weights: &[u64]) -> Result<PolyRing> {
    PolyRing::new(names.iter().copied().zip(weights.iter().copied()))
}

impl ProjectionRow {
    pub fn map(&self) -> Result<MonomialMap> {
        let source = SourceCoords::weighted(&SOURCE_NAMES, &case_space(self.case_id)?)?;
        MonomialMap::from_text(source, space(&self.target_weights)?, &self.target_names, self.map)
    }

    pub fn target_ring(&self) -> Result<PolyRing> {
        named_ring(&self.target_names, &self.target_weights)
    }

    /// Degree of the surface in `P'`, read off the tail monomial.
    pub fn surface_degree(&self) -> Result<u64> {
        let ring = self.target_ring()?;
        let tail = SparsePoly::parse(&format!("{ring}\n{}", self.tail))?;
        tail.degree()
            .ok_or_else(|| Error::Consistency("tail monomial has no degree".into()))
    }

    /// `head · f + tail` with `f` seeded-random of the complementary degree.
    pub fn surface_equation(&self, seed: u64) -> Result<SparsePoly> {
        let ring = self.target_ring()?;
        let d = self.surface_degree()?;
        let head = SparsePoly::var(&ring, self.head)?;
        let hd = head.degree().unwrap_or(0);
        let f = SparsePoly::random_homogeneous(&ring, d - hd, seed);
        let tail = SparsePoly::parse(&format!("{ring}\n{}", self.tail))?;
        head.mul(&f)?.add(&tail)
    }
}

/// The map `ψ : P(2,3,10,15) ⇢ P(1,3,5,9)` of the 2-Veronese model.
pub fn psi_map() -> Result<MonomialMap> {
    MonomialMap::from_text(
        SourceCoords::weighted(&SOURCE_NAMES, &case_space(14)?)?,
        space(&[1, 3, 5, 9])?,
        &["u'", "v'", "s'", "t'"],
        "x : y^2 : z : y w",
    )
}

/// `v' f15 + t'^2` on `P(1,3,5,9)`.
pub fn psi_surface_equation(seed: u64) -> Result<SparsePoly> {
    let ring = named_ring(&["u'", "v'", "s'", "t'"], &[1, 3, 5, 9])?;
    let v = SparsePoly::var(&ring, "v'")?;
    let t = SparsePoly::var(&ring, "t'")?;
    v.mul(&SparsePoly::random_homogeneous(&ring, 15, seed))?.add(&t.pow(2))
}

/// Power of `y` expected to divide the pullback of [`psi_surface_equation`].
pub const PSI_EXCEPTIONAL_ORDER: u32 = 2;

/// Toric factorization of the case 9 projection through a common blow-up.
#[derive(Clone, Debug)]
pub struct ToricFactorization {
    pub fan_p: Fan,
    pub fan_p_prime: Fan,
    /// Star subdivision of `P` at `p_y`.
    pub blowup_1: Blowup,
    /// Star subdivision of `P'` along the curve `{ζ = y = 0}`.
    pub blowup_2: Blowup,
    pub phi: MonomialMap,
    pub epsilon_1: MonomialMap,
    pub epsilon_2: MonomialMap,
}

/// Names of the blown-up coordinates: `x, ζ, y, z, w`.
pub const BLOWUP_COORDS: [&str; 5] = ["x", "zeta", "y", "z", "w"];

pub fn toric_factorization() -> Result<ToricFactorization> {
    let p = case_space(9)?;
    let p_prime = space(&[1, 1, 1, 2])?;
    let fan_p = wps_fan(&p)?;
    let fan_p_prime = wps_fan(&p_prime)?;
    // rays of P: e_x, e_y, e_z, e_w; subdivide the cone (e_x, e_z, e_w)
    let blowup_1 = fan_p.weighted_blowup(&[0, 2, 3], &[1, 1, 2])?;
    // rays of P': e_ζ, e_y, e_z, e_w; subdivide the cone (e_ζ, e_y)
    let blowup_2 = fan_p_prime.weighted_blowup(&[0, 1], &[5, 1])?;
    let hat = SourceCoords::new(&BLOWUP_COORDS, vec![vec![1, 0, 4, 5, 10], vec![0, 1, 1, 1, 2]])?;
    let epsilon_1 = MonomialMap::from_text(
        hat.clone(),
        p.clone(),
        &SOURCE_NAMES,
        "x zeta : y zeta^3 : z zeta^4 : w zeta^8",
    )?;
    let epsilon_2 =
        MonomialMap::from_text(hat, p_prime.clone(), &["u0", "u1", "u2", "v"], "x^5 zeta : x y : z : w")?;
    Ok(ToricFactorization {
        fan_p,
        fan_p_prime,
        blowup_1,
        blowup_2,
        phi: projection_row(9)?.map()?,
        epsilon_1,
        epsilon_2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::enumerate_gorenstein_wps3;

    #[test]
    fn numbering_covers_the_classification() {
        for s in enumerate_gorenstein_wps3().unwrap() {
            assert!(case_number(&s).is_some(), "{s}");
        }
        assert_eq!(case_space(13).unwrap().weights(), &[1, 6, 14, 21]);
        assert!(case_space(15).is_err());
    }

    #[test]
    fn projection_maps_build() {
        let shown: Vec<String> = PROJECTION_ROWS.iter().map(|r| r.map().unwrap().to_string()).collect();
        assert_eq!(shown[0], "[x^5 : x y : z : w]");
        assert_eq!(shown[4], "[y : x^3 : x z : w]");
        for r in &PROJECTION_ROWS {
            let m = r.map().unwrap();
            assert_eq!(m.indeterminacy_points(), vec![r.indeterminacy.to_string()]);
        }
    }

    #[test]
    fn surface_degrees() {
        let d: Vec<u64> = PROJECTION_ROWS.iter().map(|r| r.surface_degree().unwrap()).collect();
        assert_eq!(d, vec![5, 10, 9, 7, 12]);
        let f = PROJECTION_ROWS[0].surface_equation(3).unwrap();
        assert_eq!(f.degree(), Some(5));
    }

    #[test]
    fn factorization_commutes() {
        let t = toric_factorization().unwrap();
        assert_eq!(t.blowup_1.multiplicity, 4);
        assert!(t.blowup_1.fan.same_as(&t.blowup_2.fan));
        let comp = MonomialMap::compose(&t.phi, &t.epsilon_1).unwrap();
        assert!(MonomialMap::equal_mod_scaling(&comp, &t.epsilon_2));
    }
}
