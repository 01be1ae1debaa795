//! The full verification suite as one deterministic report.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cases::{
    case_number, case_space, psi_map, psi_surface_equation, toric_factorization, NONREGULAR_ROWS,
    PSI_EXCEPTIONAL_ORDER, STUDIED_CASES, GORENSTEIN_SPACES, VERONESE_ROWS, PROJECTION_ROWS,
};
use crate::classify::{
    anticanonical_genus, anticanonical_genus_via_intersection, enumerate_gorenstein_wps3,
    gorenstein_invariants, is_basepoint_free,
};
use crate::curves::{normalized, run_profile_suite, sextic_trichotomy, special_restriction};
use crate::error::{Error, Result};
use crate::grading::{hilbert_count, WeightedSpace};
use crate::intersect::extension_consistency;
use crate::poly::SparsePoly;
use crate::reference::ReferenceData;
use crate::table::Table;
use crate::toric::{Fan, MonomialMap, Ray, SourceCoords};
use crate::veronese::{embed_as_hypersurface, model_form_count};

pub const CLASSIFICATION_GOLDEN: &str = include_str!("../data/golden/classification.txt");
pub const TORIC_GOLDEN: &str = include_str!("../data/golden/toric_case9.json");

/// Expected restriction to the special line, up to a scalar, per case.
pub const RESTRICTION_GOLDENS: [(u32, &str); 6] = [
    (9, include_str!("../data/golden/restrictions/case9.txt")),
    (10, include_str!("../data/golden/restrictions/case10.txt")),
    (11, include_str!("../data/golden/restrictions/case11.txt")),
    (12, include_str!("../data/golden/restrictions/case12.txt")),
    (13, include_str!("../data/golden/restrictions/case13.txt")),
    (14, include_str!("../data/golden/restrictions/case14.txt")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationEntry {
    pub check_id: String,
    pub anchor: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    fn check(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        computed: impl ToString,
        expected: impl ToString,
        note: impl Into<String>,
    ) {
        let computed = computed.to_string();
        let expected = expected.to_string();
        let pass = computed == expected;
        self.check_with(id, anchor, computed, expected, pass, note);
    }

    fn check_with(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        computed: impl ToString,
        expected: impl ToString,
        pass: bool,
        note: impl Into<String>,
    ) {
        self.entries.push(VerificationEntry {
            check_id: id.into(),
            anchor: anchor.to_string(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            pass,
            note: note.into(),
        });
    }

    /// Run a section; an error becomes a failing entry.
    fn section(&mut self, id: &str, anchor: &str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.check_with(format!("{id}-error"), anchor, format!("error: {e}"), "no error", false, "");
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> Vec<&VerificationEntry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    pub fn entry(&self, id: &str) -> Option<&VerificationEntry> {
        self.entries.iter().find(|e| e.check_id == id)
    }

    /// Entries whose id starts with `prefix`.
    pub fn with_prefix(&self, prefix: &str) -> Vec<&VerificationEntry> {
        self.entries.iter().filter(|e| e.check_id.starts_with(prefix)).collect()
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(["check", "anchor", "computed", "expected", "pass", "note"]);
        for e in &self.entries {
            t.push([
                e.check_id.clone(),
                e.anchor.clone(),
                e.computed.clone(),
                e.expected.clone(),
                if e.pass { "pass" } else { "FAIL" }.to_string(),
                e.note.clone(),
            ]);
        }
        t
    }

    fn assert_unique_ids(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(&e.check_id) {
                return Err(Error::Consistency(format!("duplicate check id {}", e.check_id)));
            }
        }
        Ok(())
    }
}

/// The classification in customary order, one row per space.
pub fn classification_table() -> Result<Table> {
    let mut spaces = enumerate_gorenstein_wps3()?;
    spaces.sort_by_key(|s| case_number(s).unwrap_or(u32::MAX));
    let mut t = Table::new(["#", "P", "l", "sigma", "i"]);
    for s in &spaces {
        let inv = gorenstein_invariants(s)?;
        let id = case_number(s).map_or_else(|| "?".to_string(), |n| n.to_string());
        t.push([id, s.to_string(), inv.l.to_string(), inv.sigma.to_string(), inv.index.to_string()]);
    }
    Ok(t)
}

/// Every check, in a fixed order.
pub fn verify_all(reference: &ReferenceData) -> VerificationReport {
    let mut r = VerificationReport::default();
    r.section("classify", "classification", classification);
    r.section("genus", "genus of the curve sections", genus);
    r.section("hilbert", "anticanonical sections", hilbert);
    r.section("veronese", "Veronese models", veronese);
    r.section("toric", "toric factorization of case 9", toric);
    r.section("projection", "projection maps and surface equations", projections);
    r.section("extension", "extension degrees and dimensions", |r| extensions(r, reference));
    r.section("profile", "restriction multiplicities", profiles);
    r.section("trichotomy", "double point of the case 11 sextic", |r| trichotomy(r, reference));
    if let Err(e) = r.assert_unique_ids() {
        r.check_with("report-ids", "report", e.to_string(), "unique ids", false, "");
    }
    r
}

fn classification(r: &mut VerificationReport) -> Result<()> {
    let anchor = "classification of Gorenstein spaces";
    r.check("classify-count", anchor, enumerate_gorenstein_wps3()?.len(), GORENSTEIN_SPACES.len(), "");
    let text = classification_table()?.to_text();
    let first_diff = text
        .lines()
        .zip(CLASSIFICATION_GOLDEN.lines())
        .find(|(a, b)| a != b)
        .map(|(a, _)| a.to_string());
    let computed = match (first_diff, text == CLASSIFICATION_GOLDEN) {
        (_, true) => "identical".to_string(),
        (Some(line), false) => format!("differs at '{line}'"),
        (None, false) => "differs in length".to_string(),
    };
    r.check("classify-table", anchor, computed, "identical", "golden classification.txt");
    Ok(())
}

fn genus(r: &mut VerificationReport) -> Result<()> {
    for (id, w) in GORENSTEIN_SPACES {
        let s = WeightedSpace::new(w.to_vec())?;
        let g = anticanonical_genus(&s)?;
        r.check(
            format!("genus-{id}"),
            "genus from the anticanonical degree",
            g,
            anticanonical_genus_via_intersection(&s)?,
            format!("{s}: sigma^3 / (2 prod a) integral"),
        );
    }
    Ok(())
}

fn hilbert(r: &mut VerificationReport) -> Result<()> {
    let anchor = "anticanonical sections";
    let sp = |w: &[u64]| WeightedSpace::new(w.to_vec());
    r.check("hilbert-1236-12", anchor, hilbert_count(&sp(&[1, 2, 3, 6])?, 12)?, 27, "");
    r.check("hilbert-1113-5", anchor, hilbert_count(&sp(&[1, 1, 1, 3])?, 5)?, 27, "");
    for (id, w) in GORENSTEIN_SPACES {
        let s = sp(&w)?;
        let g = anticanonical_genus(&s)?;
        r.check(
            format!("hilbert-sigma-{id}"),
            anchor,
            hilbert_count(&s, s.sigma() as i64)?,
            g + 2,
            "h0(-K) = g + 2",
        );
    }
    Ok(())
}

fn veronese(r: &mut VerificationReport) -> Result<()> {
    let anchor = "Veronese hypersurface models";
    for row in &VERONESE_ROWS {
        let id = row.case_id;
        let s = case_space(id)?;
        let h = embed_as_hypersurface(&s, row.n)?;
        r.check(
            format!("veronese-{id}-target"),
            anchor,
            &h.target,
            WeightedSpace::new(row.target_weights.to_vec())?,
            format!("n = {}", row.n),
        );
        r.check(format!("veronese-{id}-relation"), anchor, h.equation(), row.equation, "");
        r.check(format!("veronese-{id}-degree"), anchor, h.degree, row.degree, "");
        let m = s.sigma() / row.n;
        let (on_model, on_source) = model_form_count(&h, m)?;
        r.check(
            format!("veronese-{id}-forms"),
            anchor,
            on_model,
            on_source,
            format!("degree {m} forms on the model against degree sigma forms"),
        );
        let regular = is_basepoint_free(&h.target, m);
        r.check(
            format!("basepoint-free-{id}"),
            "basepoint-freeness of O_X(sigma/n)",
            if regular { "regular" } else { "nonregular" },
            if NONREGULAR_ROWS.contains(&id) { "nonregular" } else { "regular" },
            format!("m = {m}"),
        );
    }

    let s14 = case_space(14)?;
    let h2 = embed_as_hypersurface(&s14, 2)?;
    r.check("veronese-14-n2-target", anchor, &h2.target, "P(1, 3, 5, 9, 15)", "");
    r.check("veronese-14-n2-relation", anchor, h2.equation(), "v r = t^2", "");
    let six = match embed_as_hypersurface(&s14, 6) {
        Err(Error::NotHypersurface {
            generators,
            target_weights,
            ..
        }) => format!("not a hypersurface: {generators} generators {target_weights:?}"),
        Ok(h) => format!("hypersurface {}", h.target),
        Err(e) => format!("error: {e}"),
    };
    r.check(
        "veronese-14-n6",
        anchor,
        six,
        "not a hypersurface: 6 generators [1, 1, 2, 3, 5, 5]",
        "complete intersection of two relations",
    );
    Ok(())
}

#[derive(Deserialize)]
struct BlowupGolden {
    cone: Vec<[i64; 3]>,
    coefficients: Vec<u64>,
    multiplicity: u64,
}

#[derive(Deserialize)]
struct ToricGolden {
    fan_p: Vec<[i64; 3]>,
    fan_p_prime: Vec<[i64; 3]>,
    e_zeta: [i64; 3],
    blowup_1: BlowupGolden,
    blowup_2: BlowupGolden,
    blown_up_cones: Vec<Vec<[i64; 3]>>,
}

fn ray_list(fan: &Fan) -> Vec<[i64; 3]> {
    fan.rays().iter().map(Ray::vector).collect()
}

fn cone_sets(cones: &[Vec<[i64; 3]>]) -> BTreeSet<BTreeSet<[i64; 3]>> {
    cones.iter().map(|c| c.iter().copied().collect()).collect()
}

fn fan_cones(fan: &Fan) -> BTreeSet<BTreeSet<[i64; 3]>> {
    fan.cones()
        .iter()
        .map(|c| c.iter().map(|&i| fan.rays()[i].vector()).collect())
        .collect()
}

fn toric(r: &mut VerificationReport) -> Result<()> {
    let anchor = "toric factorization of case 9";
    let golden: ToricGolden = serde_json::from_str(TORIC_GOLDEN).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let t = toric_factorization()?;

    r.check("toric-rays-p", anchor, format!("{:?}", ray_list(&t.fan_p)), format!("{:?}", golden.fan_p), "");
    r.check(
        "toric-rays-p-prime",
        anchor,
        format!("{:?}", ray_list(&t.fan_p_prime)),
        format!("{:?}", golden.fan_p_prime),
        "",
    );
    r.check(
        "toric-weight-relation",
        anchor,
        t.fan_p.satisfies_weight_relation(&[1, 4, 5, 10]) && t.fan_p_prime.satisfies_weight_relation(&[1, 1, 1, 2]),
        true,
        "sum a_i v_i = 0",
    );

    for (id, blowup, g, fan) in [
        ("toric-blowup-1", &t.blowup_1, &golden.blowup_1, &t.fan_p),
        ("toric-blowup-2", &t.blowup_2, &golden.blowup_2, &t.fan_p_prime),
    ] {
        let cone: Vec<usize> = g
            .cone
            .iter()
            .map(|v| fan.ray_index(&Ray::new(*v)?).ok_or(Error::Domain(format!("{v:?} not a ray"))))
            .collect::<Result<_>>()?;
        let again = fan.weighted_blowup(&cone, &g.coefficients)?;
        r.check(
            id,
            anchor,
            format!("{} * {:?}", blowup.multiplicity, blowup.ray.vector()),
            format!("{} * {:?}", g.multiplicity, if id == "toric-blowup-1" { golden.e_zeta } else { golden.fan_p[0] }),
            format!("coefficients {:?}", g.coefficients),
        );
        r.check(format!("{id}-golden-cone"), anchor, again.ray == blowup.ray, true, "");
    }
    r.check(
        "toric-same-fan",
        anchor,
        t.blowup_1.fan.same_as(&t.blowup_2.fan),
        true,
        "both star subdivisions give one fan",
    );
    r.check(
        "toric-blown-up-cones",
        anchor,
        fan_cones(&t.blowup_1.fan) == cone_sets(&golden.blown_up_cones),
        true,
        format!("{} maximal cones", t.blowup_1.fan.cones().len()),
    );
    r.check(
        "toric-proper",
        anchor,
        t.blowup_1.fan.cones_meet_properly() && t.blowup_2.fan.cones_meet_properly(),
        true,
        "",
    );
    let composed = MonomialMap::compose(&t.phi, &t.epsilon_1)?;
    let cert = MonomialMap::scaling_certificate(&composed, &t.epsilon_2);
    r.check(
        "toric-commutes",
        anchor,
        cert.is_some(),
        true,
        match &cert {
            Some(c) => format!("phi o eps1 = {composed}, scaling {}", fmt_vector(c)),
            None => String::new(),
        },
    );
    Ok(())
}

fn fmt_vector(c: &[BigRational]) -> String {
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `(valuation of var, degree of the quotient)` of a pulled-back equation.
fn exceptional_split(p: &SparsePoly, var: &str) -> Result<(u32, Option<u64>)> {
    let k = p.valuation(var)?;
    let mut e = vec![0u32; p.ring().len()];
    e[p.ring().index_of(var)?] = k;
    let q = p
        .divide_by_monomial(&crate::grading::ExponentVector(e))
        .ok_or_else(|| Error::Consistency("valuation does not divide".into()))?;
    Ok((k, q.degree()))
}

fn projections(r: &mut VerificationReport) -> Result<()> {
    let anchor = "projection maps and surface equations";
    for row in &PROJECTION_ROWS {
        let id = row.case_id;
        let map = row.map()?;
        r.check(
            format!("projection-{id}-indeterminacy"),
            anchor,
            map.indeterminacy_points().join(", "),
            row.indeterminacy,
            map.to_string(),
        );
        let sigma = case_space(id)?.sigma();
        for seed in crate::curves::SEEDS {
            let pulled = map.pullback(&row.surface_equation(seed)?)?;
            let (k, deg) = exceptional_split(&pulled, "x")?;
            r.check(
                format!("pullback-{id}-s{seed}"),
                anchor,
                format!("x^{k}, quotient degree {}", deg.map_or("none".into(), |d| d.to_string())),
                format!("x^{}, quotient degree {sigma}", row.exceptional_order),
                "pullback of the surface is the exceptional divisor plus an anticanonical member",
            );
        }
    }
    let psi = psi_map()?;
    for seed in crate::curves::SEEDS {
        let pulled = psi.pullback(&psi_surface_equation(seed)?)?;
        let (k, deg) = exceptional_split(&pulled, "y")?;
        r.check(
            format!("pullback-psi-s{seed}"),
            "2-Veronese projection of case 14",
            format!("y^{k}, quotient degree {}", deg.map_or("none".into(), |d| d.to_string())),
            format!("y^{PSI_EXCEPTIONAL_ORDER}, quotient degree 30"),
            psi.to_string(),
        );
    }

    // case 11: the projection to P(1,1,1,3) and its inverse
    let p = case_space(11)?;
    let q = WeightedSpace::new(vec![1, 1, 1, 3])?;
    let phi = MonomialMap::from_text(
        SourceCoords::weighted(&["x", "y", "z", "w"], &p)?,
        q.clone(),
        &["a0", "a1", "a2", "b"],
        "x^3 : x y : z : x^3 w",
    )?;
    let inv = MonomialMap::from_text(
        SourceCoords::weighted(&["a0", "a1", "a2", "b"], &q)?,
        p.clone(),
        &["x", "y", "z", "w"],
        "a0 : a0 a1 : a0^2 a2 : a0^3 b",
    )?;
    let id_p = MonomialMap::identity(&["x", "y", "z", "w"], &p)?;
    let id_q = MonomialMap::identity(&["a0", "a1", "a2", "b"], &q)?;
    let left = MonomialMap::compose(&phi, &inv)?;
    let right = MonomialMap::compose(&inv, &phi)?;
    r.check(
        "case11-inverse",
        "birational map of case 11",
        MonomialMap::equal_mod_scaling(&left, &id_q) && MonomialMap::equal_mod_scaling(&right, &id_p),
        true,
        format!("phi o phi^-1 = {left}; the last coordinate is a0^6 b, not a0^3 b"),
    );
    Ok(())
}

fn extensions(r: &mut VerificationReport, reference: &ReferenceData) -> Result<()> {
    for id in STUDIED_CASES {
        let case = reference
            .case(id)
            .ok_or_else(|| Error::Domain(format!("reference data lacks case {id}")))?;
        for e in extension_consistency(case)? {
            let anchor = match e.check.trim_start_matches(char::is_numeric).chars().next() {
                Some('a') => "degree of the extension model",
                Some('b') => "extension dimension from alpha",
                Some('c') => "dimension of the extension model",
                Some('d') => "non-extendability",
                _ => "genus columns",
            };
            r.check_with(
                format!("extension-{}", e.check),
                anchor,
                e.computed,
                e.expected,
                e.pass,
                e.note,
            );
        }
    }
    Ok(())
}

fn profiles(r: &mut VerificationReport) -> Result<()> {
    for run in run_profile_suite()? {
        let expected: Vec<String> = run.expected.iter().map(u32::to_string).collect();
        let mut note = format!(
            "seed {}, accounted degree {} of {}",
            run.seed,
            run.profile.accounted_degree(),
            run.profile.degree
        );
        for n in &run.notes {
            note.push_str("; ");
            note.push_str(n);
        }
        r.check_with(
            format!("profile-{}", run.check_id),
            &run.anchor,
            &run.profile,
            format!("{{{}}}", expected.join(",")),
            run.pass(),
            note,
        );
    }
    for (id, text) in RESTRICTION_GOLDENS {
        let golden = SparsePoly::parse(text)?;
        for seed in crate::curves::SEEDS {
            let got = normalized(&special_restriction(id, seed)?);
            r.check_with(
                format!("restriction-{id}-s{seed}"),
                "equation on the special line",
                got.to_string().replace('\n', " ; "),
                golden.to_string().replace('\n', " ; "),
                got == golden,
                "up to a nonzero scalar",
            );
        }
    }
    Ok(())
}

fn trichotomy(r: &mut VerificationReport, reference: &ReferenceData) -> Result<()> {
    let g_c = reference
        .case(11)
        .ok_or_else(|| Error::Domain("reference data lacks case 11".into()))?
        .g_c as i64;
    let cands = sextic_trichotomy(g_c)?;
    // node, tacnode, oscnode
    for (c, expected) in cands.iter().zip([9, 8, 7]) {
        r.check(
            format!("trichotomy-{}", c.singularity),
            "double point of the case 11 sextic",
            c.genus,
            expected,
            format!("delta = {}, matches g(C) = {g_c}: {}", c.delta, c.matches),
        );
    }
    let matching: Vec<&str> = cands.iter().filter(|c| c.matches).map(|c| c.singularity).collect();
    r.check("trichotomy-unique", "double point of the case 11 sextic", matching.join(", "), "oscnode", "");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_suite_passes() {
        let report = verify_all(&ReferenceData::builtin());
        let failures: Vec<String> = report
            .failures()
            .iter()
            .map(|e| format!("{}: {} vs {}", e.check_id, e.computed, e.expected))
            .collect();
        assert!(failures.is_empty(), "{failures:#?}");
        let note = &report.entry("extension-12a").unwrap().note;
        assert!(note.contains("46"));
    }

    #[test]
    fn classification_matches_golden() {
        assert_eq!(classification_table().unwrap().to_text(), CLASSIFICATION_GOLDEN);
    }
}
