//! Imported reference data: the polarization index, genera, α and
//! singularities of the six non-general cases, with the dimension of their
//! maximal extensions.
//!
//! α and `Sing(S)` cannot be recomputed here and are taken as given; the
//! genus columns and the index are validated against the weights at load.

use serde::{Deserialize, Serialize};

use crate::classify::{anticanonical_genus, gorenstein_invariants, primitive_genus};
use crate::error::{Error, Result};
use crate::grading::WeightedSpace;

/// Bundled reference table.
pub const BUILTIN_REFERENCE: &str = include_str!("../data/reference.txt");

const SUPPORTED_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceCase {
    pub case_id: u32,
    pub weights: WeightedSpace,
    pub i_s: u64,
    pub g: u64,
    pub g_c: u64,
    pub alpha: u64,
    pub dim_y: u64,
    pub sing_s: Vec<String>,
    pub extension_description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceData {
    pub version: u32,
    pub cases: Vec<ReferenceCase>,
}

impl ReferenceData {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_REFERENCE).expect("bundled reference data is valid")
    }

    pub fn case(&self, id: u32) -> Option<&ReferenceCase> {
        self.cases.iter().find(|c| c.case_id == id)
    }

    /// Parses and validates a reference table. Every error names its line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut version = None;
        let mut cases: Vec<ReferenceCase> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            if let Some(rest) = content.strip_prefix("version") {
                let v = rest
                    .trim_start()
                    .strip_prefix('=')
                    .and_then(|v| v.trim().parse::<u32>().ok())
                    .ok_or_else(|| parse_err(line, "malformed version line"))?;
                if v != SUPPORTED_VERSION {
                    return Err(parse_err(line, format!("unsupported version {v}")));
                }
                version = Some(v);
                continue;
            }
            if version.is_none() {
                return Err(parse_err(line, "data before the version line"));
            }
            let case = parse_case(content).map_err(|msg| parse_err(line, msg))?;
            validate(&case).map_err(|msg| parse_err(line, msg))?;
            if cases.iter().any(|c| c.case_id == case.case_id) {
                return Err(parse_err(line, format!("duplicate case {}", case.case_id)));
            }
            cases.push(case);
        }
        let version = version.ok_or_else(|| parse_err(0, "missing version line"))?;
        Ok(ReferenceData { version, cases })
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_case(content: &str) -> std::result::Result<ReferenceCase, String> {
    let fields: Vec<&str> = content.split('|').map(str::trim).collect();
    if fields.len() != 9 {
        return Err(format!("expected 9 fields, found {}", fields.len()));
    }
    let int = |i: usize, name: &str| -> std::result::Result<u64, String> {
        fields[i]
            .parse::<u64>()
            .map_err(|_| format!("{name}: '{}' is not a nonnegative integer", fields[i]))
    };
    let case_id = int(0, "case")? as u32;
    if !(9..=14).contains(&case_id) {
        return Err(format!("case id {case_id} outside 9..14"));
    }
    let weights = parse_weights(fields[1])?;
    Ok(ReferenceCase {
        case_id,
        weights,
        i_s: int(2, "i_S")?,
        g: int(3, "g")?,
        g_c: int(4, "g(C)")?,
        alpha: int(5, "alpha")?,
        dim_y: int(6, "dim Y")?,
        sing_s: fields[7].split(',').map(|s| s.trim().to_string()).collect(),
        extension_description: fields[8].to_string(),
    })
}

/// Comma-separated positive integers.
pub fn parse_weights(text: &str) -> std::result::Result<WeightedSpace, String> {
    let weights = text
        .split(',')
        .map(|w| {
            w.trim()
                .parse::<u64>()
                .map_err(|_| format!("weight '{}' is not a positive integer", w.trim()))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    WeightedSpace::new(weights).map_err(|e| e.to_string())
}

fn validate(case: &ReferenceCase) -> std::result::Result<(), String> {
    gorenstein_invariants(&case.weights).map_err(|e| e.to_string())?;
    let g = anticanonical_genus(&case.weights).map_err(|e| e.to_string())?;
    if g != case.g {
        return Err(format!("g = {} but the weights give {g}", case.g));
    }
    let g_c = primitive_genus(g, case.i_s).map_err(|e| format!("i_S = {}: {e}", case.i_s))?;
    if g_c != case.g_c {
        return Err(format!("g(C) = {} but i_S = {} gives {g_c}", case.g_c, case.i_s));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let data = ReferenceData::builtin();
        assert_eq!(data.cases.len(), 6);
        let c9 = data.case(9).unwrap();
        assert_eq!((c9.i_s, c9.g, c9.g_c, c9.alpha, c9.dim_y), (2, 21, 6, 4, 5));
        assert_eq!(c9.sing_s, vec!["A1", "2A4"]);
        assert_eq!(data.case(14).unwrap().weights.weights(), &[2, 3, 10, 15]);
    }

    #[test]
    fn wrong_genus_is_rejected_with_line() {
        let text = BUILTIN_REFERENCE.replace("| 2 | 21 | 6 ", "| 2 | 22 | 6 ");
        match ReferenceData::parse(&text) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 8);
                assert!(msg.contains("g = 22"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inconsistent_index_is_rejected() {
        let text = BUILTIN_REFERENCE.replace("| 3 | 28 | 4 ", "| 2 | 28 | 4 ");
        assert!(matches!(ReferenceData::parse(&text), Err(Error::Parse { line: 9, .. })));
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(
            ReferenceData::parse("version = 1\n9 | 1,4,5,10 | 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            ReferenceData::parse("9 | 1,4,5,10 | 2 | 21 | 6 | 4 | 5 | A1 | x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            ReferenceData::parse("version = 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn imported_columns_are_not_validated() {
        // α is imported data; a tampered value loads and is caught downstream
        let text = BUILTIN_REFERENCE.replace("| 6  | 4 | 5 |", "| 6  | 5 | 5 |");
        let data = ReferenceData::parse(&text).unwrap();
        assert_eq!(data.case(9).unwrap().alpha, 5);
    }
}
