// Property checks shared by the proptest suites and the acceptance runner.
// Each takes plain input data so either a proptest strategy or a seeded
// generator can drive it.
#![allow(dead_code)]

use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gorenstein_wps::cases::{psi_map, GORENSTEIN_SPACES, PROJECTION_ROWS};
use gorenstein_wps::classify::enumerate_gorenstein_wps3;
use gorenstein_wps::grading::{hilbert_count, monomials_of_degree, monomials_with_weights};
use gorenstein_wps::poly::{PolyRing, SparsePoly};
use gorenstein_wps::profile::binary_profile;
use gorenstein_wps::toric::{MonomialMap, SourceCoords};
use gorenstein_wps::{ExponentVector, WeightedSpace};

pub const CASES: usize = 100;
pub const MAX_HILBERT_DEGREE: i64 = 60;

pub type Check = Result<(), String>;

/// Counting and enumeration agree, and the enumeration is strictly
/// increasing, for every Gorenstein space and `d <= 60`.
pub fn hilbert_agreement() -> Check {
    let spaces = enumerate_gorenstein_wps3().map_err(|e| e.to_string())?;
    for w in &spaces {
        for d in 0..=MAX_HILBERT_DEGREE {
            let list = monomials_of_degree(w, d).map_err(|e| e.to_string())?;
            let count = hilbert_count(w, d).map_err(|e| e.to_string())?;
            if count != list.len().into() {
                return Err(format!("{w} degree {d}: count {count}, enumerated {}", list.len()));
            }
            if list.windows(2).any(|p| p[0] >= p[1]) {
                return Err(format!("{w} degree {d}: enumeration not strictly increasing"));
            }
        }
    }
    Ok(())
}

/// Input for the scaling-equivalence laws: two independent maps `f`, `g`
/// from one of the fourteen spaces, and two scalings applied to `f`.
#[derive(Clone, Debug)]
pub struct MapLawCase {
    pub source: usize,
    pub target: [u64; 4],
    pub picks_f: [usize; 4],
    pub picks_g: [usize; 4],
    pub shift_1: [u32; 4],
    pub shift_2: [u32; 4],
}

impl MapLawCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        let mut target = [0u64; 4];
        for t in &mut target {
            *t = rng.gen_range(1..=4);
        }
        target[0] = 1;
        let mut pick = || [(); 4].map(|_| rng.gen_range(0..10_000));
        let (picks_f, picks_g) = (pick(), pick());
        let mut shift = || [(); 4].map(|_| rng.gen_range(0..3));
        let (shift_1, shift_2) = (shift(), shift());
        MapLawCase {
            source: rng.gen_range(0..GORENSTEIN_SPACES.len()),
            target,
            picks_f,
            picks_g,
            shift_1,
            shift_2,
        }
    }
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];
const TARGET_NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn map_from_picks(source: &WeightedSpace, target: &WeightedSpace, picks: &[usize; 4]) -> Result<MonomialMap, String> {
    // coordinate j has source degree t_j * lcm, which every weight divides
    let l = source.lcm();
    let exponents = target
        .weights()
        .iter()
        .zip(picks)
        .map(|(&t, &k)| {
            let all = monomials_with_weights(source.weights(), t * l);
            all[k % all.len()].clone()
        })
        .collect();
    let coords = SourceCoords::weighted(&NAMES, source).map_err(|e| e.to_string())?;
    MonomialMap::new(coords, target.clone(), &TARGET_NAMES, exponents).map_err(|e| e.to_string())
}

/// Multiply coordinate `j` by `m^{t_j}` for the monomial `m = x^shift`.
fn scaled(f: &MonomialMap, shift: &[u32; 4]) -> Result<MonomialMap, String> {
    let m = ExponentVector(shift.to_vec());
    let exponents = f
        .exponents()
        .iter()
        .zip(f.target().weights())
        .map(|(e, &t)| e.add(&m.scale(t as u32)))
        .collect();
    MonomialMap::new(f.source().clone(), f.target().clone(), &TARGET_NAMES, exponents).map_err(|e| e.to_string())
}

/// Reflexivity, symmetry and transitivity of `equal_mod_scaling`.
pub fn scaling_laws(case: &MapLawCase) -> Check {
    let source = WeightedSpace::new(GORENSTEIN_SPACES[case.source].1.to_vec()).map_err(|e| e.to_string())?;
    let target = WeightedSpace::new(case.target.to_vec()).map_err(|e| e.to_string())?;
    let f = map_from_picks(&source, &target, &case.picks_f)?;
    let g = map_from_picks(&source, &target, &case.picks_g)?;
    let f1 = scaled(&f, &case.shift_1)?;
    let f2 = scaled(&f1, &case.shift_2)?;
    let eq = MonomialMap::equal_mod_scaling;
    let maps = [&f, &g, &f1, &f2];
    for a in maps {
        if !eq(a, a) {
            return Err(format!("not reflexive on {a}"));
        }
        for b in maps {
            if eq(a, b) != eq(b, a) {
                return Err(format!("not symmetric on {a} and {b}"));
            }
            for c in maps {
                if eq(a, b) && eq(b, c) && !eq(a, c) {
                    return Err(format!("not transitive on {a}, {b}, {c}"));
                }
            }
        }
    }
    if !(eq(&f, &f1) && eq(&f1, &f2) && eq(&f, &f2)) {
        return Err(format!("scaled copies of {f} are not equivalent to it"));
    }
    Ok(())
}

/// Input for pullback multiplicativity: one of the projection maps (the
/// last index is the 2-Veronese projection) and two seeded forms.
#[derive(Clone, Debug)]
pub struct PullbackCase {
    pub map: usize,
    pub degrees: [u64; 2],
    pub seeds: [u64; 2],
}

pub const PULLBACK_MAPS: usize = PROJECTION_ROWS.len() + 1;

impl PullbackCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        PullbackCase {
            map: rng.gen_range(0..PULLBACK_MAPS),
            degrees: [rng.gen_range(0..=6), rng.gen_range(0..=6)],
            seeds: [rng.gen(), rng.gen()],
        }
    }
}

fn pullback_map(i: usize) -> Result<MonomialMap, String> {
    match PROJECTION_ROWS.get(i) {
        Some(row) => row.map(),
        None => psi_map(),
    }
    .map_err(|e| e.to_string())
}

/// `f*(p q) = f*(p) f*(q)`, and pullbacks of forms stay homogeneous.
pub fn pullback_multiplicative(case: &PullbackCase) -> Check {
    let map = pullback_map(case.map)?;
    let ring = PolyRing::new(map.target_names().iter().cloned().zip(map.target().weights().iter().copied()))
        .map_err(|e| e.to_string())?;
    let p = SparsePoly::random_homogeneous(&ring, case.degrees[0], case.seeds[0]);
    let q = SparsePoly::random_homogeneous(&ring, case.degrees[1], case.seeds[1]);
    let err = |e: gorenstein_wps::Error| e.to_string();
    let lhs = map.pullback(&p.mul(&q).map_err(err)?).map_err(err)?;
    let rhs = map.pullback(&p).map_err(err)?.mul(&map.pullback(&q).map_err(err)?).map_err(err)?;
    if lhs != rhs {
        return Err(format!("pullback under {map} is not multiplicative"));
    }
    if !lhs.is_zero() && lhs.degree().is_none() {
        return Err(format!("pullback under {map} is not homogeneous"));
    }
    Ok(())
}

/// Input for profile accounting: a binary form `a^i b^j Π h_k^{m_k}` with
/// seeded random factors `h_k`.
#[derive(Clone, Debug)]
pub struct ProfileCase {
    pub weights: [u64; 2],
    pub valuations: [u32; 2],
    /// (degree in units of lcm(weights), multiplicity, seed)
    pub factors: Vec<(u64, u32, u64)>,
}

impl ProfileCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        let n = rng.gen_range(0..=3);
        ProfileCase {
            weights: [rng.gen_range(1..=4), rng.gen_range(1..=4)],
            valuations: [rng.gen_range(0..=3), rng.gen_range(0..=3)],
            factors: (0..n)
                .map(|_| (rng.gen_range(1..=2), rng.gen_range(1..=3), rng.gen()))
                .collect(),
        }
    }
}

/// `Σ multiplicity · point degree · points` equals the weighted degree.
pub fn profile_accounting(case: &ProfileCase) -> Check {
    let [wa, wb] = case.weights;
    let ring = PolyRing::new([("a", wa), ("b", wb)]).map_err(|e| e.to_string())?;
    let err = |e: gorenstein_wps::Error| e.to_string();
    let mut form = SparsePoly::monomial(&ring, vec![case.valuations[0], case.valuations[1]]);
    for &(k, m, seed) in &case.factors {
        let h = SparsePoly::random_homogeneous(&ring, k * wa.lcm(&wb), seed);
        form = form.mul(&h.pow(m)).map_err(err)?;
    }
    if form.degree() == Some(0) {
        return Ok(()); // a nonzero constant has nothing to account for
    }
    let profile = binary_profile(&form).map_err(err)?;
    let degree = form.degree().ok_or("form is not homogeneous")?;
    if profile.degree != degree || profile.accounted_degree() != degree || !profile.is_consistent() {
        return Err(format!(
            "{form}: profile {profile} accounts for {} of {degree}",
            profile.accounted_degree()
        ));
    }
    Ok(())
}

/// Run `check` on `CASES` inputs drawn from a fixed seed.
pub fn seeded<T>(seed: u64, draw: impl Fn(&mut ChaCha8Rng) -> T, check: impl Fn(&T) -> Check) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CASES {
        check(&draw(&mut rng))?;
    }
    Ok(())
}
