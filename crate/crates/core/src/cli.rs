//! The `gwps` command line: every subcommand builds a [`Table`] and prints it
//! as text, CSV or JSON.
//!
//! Exit status: 0 success, 1 a verification check failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::cases::case_number;
use crate::classify::{anticanonical_genus, gorenstein_invariants, is_well_formed};
use crate::error::Error;
use crate::grading::{hilbert_count, WeightedSpace};
use crate::intersect::top_intersection;
use crate::reference::{parse_weights, ReferenceData};
use crate::table::{Format, Table};
use crate::toric::wps_fan;
use crate::veronese::{embed_as_hypersurface, veronese_embedding};
use crate::verify::{classification_table, verify_all, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gwps", version, about = "Gorenstein weighted projective 3-spaces")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,

    /// Alternate reference data file.
    #[arg(long, global = true, value_name = "FILE")]
    pub reference: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
}

impl OutputArgs {
    pub fn format(&self) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The fourteen Gorenstein spaces with l, sigma and the index.
    Classify,
    /// Invariants of one space, e.g. `invariants 1,4,5,10`.
    Invariants { weights: String },
    /// Number of monomials of degree d.
    Hilbert { weights: String, d: i64 },
    /// Generators and relations of the n-th Veronese subring.
    Veronese {
        weights: String,
        #[arg(long)]
        n: u64,
    },
    /// Rays and maximal cones of the fan.
    Fan { weights: String },
    /// The toric factorization of the case 9 projection.
    BlowupVerify,
    /// Degree and dimension checks of the extension models.
    Degrees,
    /// Restriction multiplicity profiles.
    Profiles,
    /// Run every check.
    Verify {
        #[arg(long, required = true)]
        all: bool,
    },
}

/// What a subcommand produced.
pub struct Outcome {
    pub table: Table,
    pub failed: bool,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Outcome { table, failed: false }
    }
}

fn weights(text: &str) -> Result<WeightedSpace, Error> {
    parse_weights(text).map_err(Error::InvalidWeights)
}

pub fn cmd_classify() -> Result<Table, Error> {
    classification_table()
}

pub fn cmd_invariants(space: &WeightedSpace) -> Result<Table, Error> {
    let mut t = Table::new(["invariant", "value"]);
    t.push(["weights".to_string(), space.to_string()]);
    t.push(["case".to_string(), case_number(space).map_or("-".into(), |n| n.to_string())]);
    t.push(["well_formed".to_string(), is_well_formed(space).to_string()]);
    t.push(["l".to_string(), space.lcm().to_string()]);
    t.push(["sigma".to_string(), space.sigma().to_string()]);
    match gorenstein_invariants(space) {
        Ok(inv) => {
            t.push(["gorenstein", "true"]);
            t.push(["index".to_string(), inv.index.to_string()]);
            if space.len() == 4 {
                let s = space.sigma() as i64;
                t.push(["(-K)^3".to_string(), top_intersection(space, &[s, s, s])?.to_string()]);
                t.push(["g".to_string(), anticanonical_genus(space)?.to_string()]);
            }
            t.push(["h0(-K)".to_string(), hilbert_count(space, space.sigma() as i64)?.to_string()]);
        }
        Err(Error::NotGorenstein { weight, sigma }) => {
            t.push(["gorenstein", "false"]);
            t.push(["reason".to_string(), format!("{weight} does not divide {sigma}")]);
        }
        Err(e) => return Err(e),
    }
    Ok(t)
}

pub fn cmd_hilbert(space: &WeightedSpace, d: i64) -> Result<Table, Error> {
    let mut t = Table::new(["weights", "d", "count"]);
    t.push([space.to_string(), d.to_string(), hilbert_count(space, d)?.to_string()]);
    Ok(t)
}

/// Generators, relations and the hypersurface model when there is one.
pub fn cmd_veronese(space: &WeightedSpace, n: u64) -> Result<Table, Error> {
    let emb = veronese_embedding(space, n)?;
    let mut t = Table::new(["kind", "name", "expression", "weight"]);
    for g in &emb.generators {
        t.push([
            "generator".to_string(),
            g.name.clone(),
            monomial_text(&g.monomial.0),
            g.weight.to_string(),
        ]);
    }
    for rel in &emb.relations {
        t.push([
            "relation".to_string(),
            String::new(),
            rel.display(&emb.generators).to_string(),
            rel.degree(&emb.generators).to_string(),
        ]);
    }
    match embed_as_hypersurface(space, n) {
        Ok(h) => t.push([
            "hypersurface".to_string(),
            String::new(),
            format!("{}-ic ({}) in {}", h.degree, h.equation(), h.target),
            h.degree.to_string(),
        ]),
        Err(e @ Error::NotHypersurface { .. }) => t.push([
            "not-hypersurface".to_string(),
            String::new(),
            e.to_string(),
            String::new(),
        ]),
        Err(e) => return Err(e),
    }
    Ok(t)
}

/// `x^a y^b ...` over the source coordinates (named `x0..` past four).
fn monomial_text(e: &[u32]) -> String {
    let names = ["x", "y", "z", "w"];
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            let name = if e.len() <= 4 { names[i].to_string() } else { format!("x{i}") };
            if k == 1 { name } else { format!("{name}^{k}") }
        })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join(" ") }
}

pub fn cmd_fan(space: &WeightedSpace) -> Result<Table, Error> {
    let fan = wps_fan(space)?;
    let mut t = Table::new(["kind", "index", "data"]);
    for (i, r) in fan.rays().iter().enumerate() {
        t.push(["ray".to_string(), i.to_string(), format!("{:?}", r.vector())]);
    }
    for (i, c) in fan.cones().iter().enumerate() {
        t.push(["cone".to_string(), i.to_string(), format!("{c:?}")]);
    }
    Ok(t)
}

fn report_outcome(report: &VerificationReport) -> Outcome {
    Outcome {
        table: report.to_table(),
        failed: !report.passed(),
    }
}

fn filtered(report: VerificationReport, prefixes: &[&str]) -> VerificationReport {
    VerificationReport {
        entries: report
            .entries
            .into_iter()
            .filter(|e| prefixes.iter().any(|p| e.check_id.starts_with(p)))
            .collect(),
    }
}

pub fn cmd_verify_all(reference: &ReferenceData) -> VerificationReport {
    verify_all(reference)
}

fn run_command(cli: &Cli) -> Result<Outcome, Error> {
    let reference = match &cli.reference {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            ReferenceData::parse(&text)?
        }
        None => ReferenceData::builtin(),
    };
    Ok(match &cli.command {
        Command::Classify => Outcome::ok(cmd_classify()?),
        Command::Invariants { weights: w } => Outcome::ok(cmd_invariants(&weights(w)?)?),
        Command::Hilbert { weights: w, d } => Outcome::ok(cmd_hilbert(&weights(w)?, *d)?),
        Command::Veronese { weights: w, n } => Outcome::ok(cmd_veronese(&weights(w)?, *n)?),
        Command::Fan { weights: w } => Outcome::ok(cmd_fan(&weights(w)?)?),
        Command::BlowupVerify => report_outcome(&filtered(verify_all(&reference), &["toric-"])),
        Command::Degrees => report_outcome(&filtered(verify_all(&reference), &["extension-", "pullback-"])),
        Command::Profiles => report_outcome(&filtered(
            verify_all(&reference),
            &["profile-", "restriction-", "trichotomy-"],
        )),
        Command::Verify { .. } => report_outcome(&cmd_verify_all(&reference)),
    })
}

/// Parse `args`, run, write to `out` and `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let format = cli.output.format();
    match run_command(&cli) {
        Ok(outcome) => match outcome.table.render(format) {
            Ok(text) => {
                let _ = out.write_all(text.as_bytes());
                if outcome.failed { EXIT_FAILED } else { EXIT_OK }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAILED
            }
        },
        Err(e) => {
            if format == Format::Json {
                let _ = writeln!(out, "{}", serde_json::json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gwps").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn classify_row() {
        let (code, out) = call(&["classify"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.lines().any(|l| l.starts_with("4 ") && l.contains("| 10 | 10    | 1")));
        assert_eq!(out.lines().count(), 15);
    }

    #[test]
    fn formats_agree() {
        let (_, json) = call(&["classify", "--json"]);
        let (_, csv) = call(&["classify", "--csv"]);
        assert_eq!(Table::from_json(&json).unwrap(), Table::from_csv(&csv).unwrap());
    }

    #[test]
    fn veronese_rows() {
        let (code, out) = call(&["veronese", "1,3,8,12", "--n", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("9-ic (u0 t = v^3) in P(1, 1, 3, 4, 8)"), "{out}");
        let (code, out) = call(&["veronese", "1,1,1,1", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("not-hypersurface"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["invariants", "1,x,3"]).0, EXIT_USAGE);
        assert_eq!(call(&["veronese", "1,2,3,6"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
