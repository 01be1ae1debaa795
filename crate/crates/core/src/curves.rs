//! Restriction computations on the curve sections of the studied cases.
//!
//! Each pipeline builds the curve from seeded random forms, restricts it to
//! the special line and returns the multiplicity profile. When a sample
//! lands in a non-generic locus (zero restriction, vanishing discriminant,
//! repeated roots where distinct ones are claimed) it is redrawn with a new
//! seed and the event is noted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cases::projection_row;
use crate::error::{Error, Result};
use crate::grading::ExponentVector;
use crate::poly::{random_rational, PolyRing, SparsePoly};
use crate::profile::{binary_profile, plane_curve_genus, MultiplicityProfile};

/// Seeds used for every profile check.
pub const SEEDS: [u64; 3] = [1, 2, 3];
const MAX_REDRAWS: u64 = 8;
const REDRAW_STRIDE: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRun {
    pub check_id: String,
    pub anchor: String,
    pub seed: u64,
    pub profile: MultiplicityProfile,
    pub expected: Vec<u32>,
    pub notes: Vec<String>,
}

impl ProfileRun {
    pub fn pass(&self) -> bool {
        self.profile.multiset() == self.expected && self.profile.is_consistent()
    }
}

/// A sample either yields a profile or names the genericity condition it
/// violated.
type Sample = std::result::Result<MultiplicityProfile, String>;

/// A named restriction check.
pub struct ProfilePipeline {
    pub id: &'static str,
    pub anchor: &'static str,
    pub expected: &'static [u32],
    run: fn(&mut ChaCha8Rng) -> Result<Sample>,
}

impl ProfilePipeline {
    /// Run with `seed`, redrawing on non-generic samples.
    pub fn run(&self, seed: u64) -> Result<ProfileRun> {
        let mut notes = Vec::new();
        for k in 0..=MAX_REDRAWS {
            let s = seed + k * REDRAW_STRIDE;
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            match (self.run)(&mut rng)? {
                Ok(profile) => {
                    return Ok(ProfileRun {
                        check_id: format!("{}-s{seed}", self.id),
                        anchor: self.anchor.to_string(),
                        seed: s,
                        profile,
                        expected: self.expected.to_vec(),
                        notes,
                    })
                }
                Err(why) => notes.push(format!("seed {s} not generic ({why}); redrawn")),
            }
        }
        Err(Error::Consistency(format!(
            "{}: no generic sample in {} draws",
            self.id,
            MAX_REDRAWS + 1
        )))
    }
}

pub fn pipelines() -> Vec<ProfilePipeline> {
    vec![
        ProfilePipeline {
            id: "case9-tangent-line",
            anchor: "case 9: plane quintic restricted to u0 = 0",
            expected: &[5],
            run: case9_tangent_line,
        },
        ProfilePipeline {
            id: "case9-random-line",
            anchor: "case 9: plane quintic restricted to a general line",
            expected: &[1, 1, 1, 1, 1],
            run: case9_random_line,
        },
        ProfilePipeline {
            id: "case10-line",
            anchor: "case 10: curve in P(1,1,5) restricted to u0 = 0",
            expected: &[2],
            run: case10_line,
        },
        ProfilePipeline {
            id: "case11-line",
            anchor: "case 11: plane sextic restricted to a0 = 0",
            expected: &[6],
            run: case11_line,
        },
        ProfilePipeline {
            id: "case12-line",
            anchor: "case 12: curve in P(1,1,3) restricted to u0 = 0",
            expected: &[3],
            run: case12_line,
        },
        ProfilePipeline {
            id: "case13-anticanonical",
            anchor: "case 13: curve restricted to the anticanonical curve u0 = 0",
            expected: &[7],
            run: case13_anticanonical,
        },
        ProfilePipeline {
            id: "case14-fibre",
            anchor: "case 14: curve restricted to the contracted fibre u1 = v = 0",
            expected: &[1, 1],
            run: case14_fibre,
        },
        ProfilePipeline {
            id: "case14-tritangent",
            anchor: "case 14: image curve restricted to u0 = 0",
            expected: &[2, 2, 2],
            run: case14_tritangent,
        },
    ]
}

/// Every pipeline for every seed, in a fixed order.
pub fn run_profile_suite() -> Result<Vec<ProfileRun>> {
    let mut out = Vec::new();
    for p in pipelines() {
        for seed in SEEDS {
            out.push(p.run(seed)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusCandidate {
    pub singularity: &'static str,
    pub delta: i64,
    pub genus: i64,
    pub matches: bool,
}

/// Plane sextics with one double point of increasing delta invariant,
/// compared with the genus `g_c` of the primitive curve.
pub fn sextic_trichotomy(g_c: i64) -> Result<Vec<GenusCandidate>> {
    [("node", 1), ("tacnode", 2), ("oscnode", 3)]
        .into_iter()
        .map(|(singularity, delta)| {
            let genus = plane_curve_genus(6, &[delta])?;
            Ok(GenusCandidate {
                singularity,
                delta,
                genus,
                matches: genus == g_c,
            })
        })
        .collect()
}

fn ring(coords: &[(&str, u64)]) -> Result<PolyRing> {
    PolyRing::new(coords.iter().copied())
}

/// Random form of degree `d` in the named coordinates only.
fn random_in(ring: &PolyRing, vars: &[&str], d: u64, rng: &mut ChaCha8Rng) -> Result<SparsePoly> {
    let sub = PolyRing::new(
        vars.iter()
            .map(|v| Ok((v.to_string(), ring.weights()[ring.index_of(v)?])))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let images = vars
        .iter()
        .map(|v| SparsePoly::var(ring, v))
        .collect::<Result<Vec<_>>>()?;
    SparsePoly::random_with(&sub, d, rng).substitute_all(ring, &images)
}

fn monomial_of(ring: &PolyRing, powers: &[(&str, u32)]) -> Result<SparsePoly> {
    let mut e = vec![0u32; ring.len()];
    for &(v, k) in powers {
        e[ring.index_of(v)?] += k;
    }
    Ok(SparsePoly::monomial(ring, ExponentVector(e)))
}

fn profile_of(form: &SparsePoly) -> Result<Sample> {
    if form.is_zero() {
        return Ok(Err("restriction vanishes identically".into()));
    }
    binary_profile(form).map(Ok)
}

/// Reject samples whose residual factor has repeated roots.
fn require_reduced(p: MultiplicityProfile) -> Sample {
    if p.multiset().iter().all(|&m| m == 1) {
        Ok(p)
    } else {
        Err(format!("repeated roots {p}"))
    }
}

fn require_equal(got: &SparsePoly, want: &SparsePoly, what: &str) -> Result<()> {
    if got != want {
        return Err(Error::Consistency(format!("{what}: expected {want}, got {got}")));
    }
    Ok(())
}

/// The quintic `u0 f4 + u1^5` with `v` replaced by a general quadric in `u`.
fn case9_plane_quintic(rng: &mut ChaCha8Rng) -> Result<SparsePoly> {
    let row = projection_row(9)?;
    let r = row.target_ring()?;
    let surface = row.surface_equation(rng.gen())?;
    let alpha = random_in(&r, &["u0", "u1", "u2"], 2, rng)?;
    surface.substitute("v", &alpha)?.drop_coordinate("v")
}

/// `u0 f9 + s^2` with `v` a general cubic in `u`: a curve in `P(1,1,5)`.
fn case10_curve(rng: &mut ChaCha8Rng) -> Result<SparsePoly> {
    let row = projection_row(10)?;
    let r = row.target_ring()?;
    let surface = row.surface_equation(rng.gen())?;
    let alpha = random_in(&r, &["u0", "u1"], 3, rng)?;
    surface.substitute("v", &alpha)?.drop_coordinate("v")
}

/// `u0 f8 + v^3` with `s = α(u, v)` of degree 4: a 9-ic in `P(1,1,3)`.
fn case12_curve(rng: &mut ChaCha8Rng) -> Result<SparsePoly> {
    let row = projection_row(12)?;
    let r = row.target_ring()?;
    let surface = row.surface_equation(rng.gen())?;
    let alpha = random_in(&r, &["u0", "u1", "v"], 4, rng)?;
    surface.substitute("s", &alpha)?.drop_coordinate("s")
}

/// `C0 = {a0 f5 + λ a1^6 + μ a1^3 b + γ b^2 = 0, b = τ a1^3 + a0 q}` in
/// `P(1,1,1,3)`, a plane sextic after eliminating `b`.
fn case11_sextic(rng: &mut ChaCha8Rng) -> Result<SparsePoly> {
    let r = ring(&[("a0", 1), ("a1", 1), ("a2", 1), ("b", 3)])?;
    let f5 = SparsePoly::random_with(&r, 5, rng);
    let a1_6 = monomial_of(&r, &[("a1", 6)])?;
    let a1_3b = monomial_of(&r, &[("a1", 3), ("b", 1)])?;
    let b2 = monomial_of(&r, &[("b", 2)])?;
    let (lambda, mu, gamma) = (random_rational(rng), random_rational(rng), random_rational(rng));
    let sigma = SparsePoly::var(&r, "a0")?
        .mul(&f5)?
        .add(&a1_6.scale(&lambda))?
        .add(&a1_3b.scale(&mu))?
        .add(&b2.scale(&gamma))?;
    let tau = random_rational(rng);
    let q = random_in(&r, &["a0", "a1", "a2"], 2, rng)?;
    let cubic = monomial_of(&r, &[("a1", 3)])?
        .scale(&tau)
        .add(&SparsePoly::var(&r, "a0")?.mul(&q)?)?;
    sigma.substitute("b", &cubic)?.drop_coordinate("b")
}

/// `Σ = {v^3 = u1 h5}` and `Θ = {w^2 = u0 f5}` in `P(1,1,2,3)`.
fn case14_surfaces(rng: &mut ChaCha8Rng) -> Result<(SparsePoly, SparsePoly)> {
    let r = ring(&[("u0", 1), ("u1", 1), ("v", 2), ("w", 3)])?;
    let h5 = SparsePoly::random_with(&r, 5, rng);
    let f5 = SparsePoly::random_with(&r, 5, rng);
    let sigma = monomial_of(&r, &[("v", 3)])?.sub(&SparsePoly::var(&r, "u1")?.mul(&h5)?)?;
    let theta = monomial_of(&r, &[("w", 2)])?.sub(&SparsePoly::var(&r, "u0")?.mul(&f5)?)?;
    Ok((sigma, theta))
}

/// The equation cut on the special line of each case: the curve for 9,
/// 10, 11 and 12, the surface of case 13 and the surface `Θ` of case 14.
pub fn special_restriction(case_id: u32, seed: u64) -> Result<SparsePoly> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    match case_id {
        9 => case9_plane_quintic(rng)?.restrict_hyperplane("u0"),
        10 => case10_curve(rng)?.restrict_hyperplane("u0"),
        11 => case11_sextic(rng)?.restrict_hyperplane("a0"),
        12 => case12_curve(rng)?.restrict_hyperplane("u0"),
        13 => projection_row(13)?.surface_equation(rng.gen())?.restrict_hyperplane("u0"),
        14 => case14_surfaces(rng)?.1.restrict_hyperplane("u0"),
        _ => Err(Error::Domain(format!("no special line for case {case_id}"))),
    }
}

/// Scale so the largest term has coefficient 1.
pub fn normalized(p: &SparsePoly) -> SparsePoly {
    match p.terms().last() {
        Some((_, c)) => p.scale(&c.recip()),
        None => p.clone(),
    }
}

fn case9_tangent_line(rng: &mut ChaCha8Rng) -> Result<Sample> {
    profile_of(&case9_plane_quintic(rng)?.restrict_hyperplane("u0")?)
}

fn case9_random_line(rng: &mut ChaCha8Rng) -> Result<Sample> {
    let q = case9_plane_quintic(rng)?;
    let line = ring(&[("a", 1), ("b", 1)])?;
    let a = SparsePoly::var(&line, "a")?;
    let b = SparsePoly::var(&line, "b")?;
    let images = (0..3)
        .map(|_| {
            let p = random_rational(rng);
            let q = random_rational(rng);
            a.scale(&p).add(&b.scale(&q))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(profile_of(&q.substitute_all(&line, &images)?)?.and_then(require_reduced))
}

fn case10_line(rng: &mut ChaCha8Rng) -> Result<Sample> {
    profile_of(&case10_curve(rng)?.restrict_hyperplane("u0")?)
}

fn case11_line(rng: &mut ChaCha8Rng) -> Result<Sample> {
    profile_of(&case11_sextic(rng)?.restrict_hyperplane("a0")?)
}

fn case12_line(rng: &mut ChaCha8Rng) -> Result<Sample> {
    profile_of(&case12_curve(rng)?.restrict_hyperplane("u0")?)
}

/// The curve is `{u0 f6 + u1^7 = g6 = 0}` in `P(1,1,2,3)`; on `u0 = 0` the
/// first equation is exactly `u1^7`, so the profile is 7 times that of
/// `g6(0, 0, v, s)` on `P(2,3)`.
fn case13_anticanonical(rng: &mut ChaCha8Rng) -> Result<Sample> {
    let row = projection_row(13)?;
    let r = row.target_ring()?;
    let surface = row.surface_equation(rng.gen())?;
    let g6 = SparsePoly::random_with(&r, 6, rng);
    let on_b = surface.restrict_hyperplane("u0")?;
    require_equal(&on_b, &monomial_of(on_b.ring(), &[("u1", 7)])?, "surface on u0 = 0")?;
    let k = on_b.valuation("u1")?;
    let point = g6.restrict_hyperplane("u0")?.restrict_hyperplane("u1")?;
    Ok(profile_of(&point)?.map(|p| p.scaled(k)))
}

fn case14_fibre(rng: &mut ChaCha8Rng) -> Result<Sample> {
    let (sigma, theta) = case14_surfaces(rng)?;
    let on_sigma = sigma.restrict_hyperplane("u1")?.restrict_hyperplane("v")?;
    if !on_sigma.is_zero() {
        return Err(Error::Consistency("the fibre u1 = v = 0 is not contained in Σ".into()));
    }
    let form = theta.restrict_hyperplane("u1")?.restrict_hyperplane("v")?;
    // form = c2 w^2 + c1 u0^3 w + c0 u0^6
    let c = |pu: u32, pw: u32| form.coefficient(&ExponentVector(vec![pu, pw]));
    let (c2, c1, c0) = (c(0, 2), c(3, 1), c(6, 0));
    let disc = &c1 * &c1 - BigRational::from_integer(BigInt::from(4)) * &c2 * &c0;
    if disc.is_zero() {
        return Ok(Err("fibre quadratic has zero discriminant".into()));
    }
    profile_of(&form)
}

/// On `u0 = 0`, `Θ` becomes `w^2`, so the curve is the double of
/// `Σ ∩ {u0 = w = 0}`, a sextic on the line `P(1,2)` with coordinates
/// `(u1, v)`.
fn case14_tritangent(rng: &mut ChaCha8Rng) -> Result<Sample> {
    let (sigma, theta) = case14_surfaces(rng)?;
    let theta0 = theta.restrict_hyperplane("u0")?;
    require_equal(&theta0, &monomial_of(theta0.ring(), &[("w", 2)])?, "Θ on u0 = 0")?;
    let k = theta0.valuation("w")?;
    let line = sigma.restrict_hyperplane("u0")?.restrict_hyperplane("w")?;
    Ok(profile_of(&line)?.and_then(require_reduced).map(|p| p.scaled(k)))
}
