//! Plain tables rendered as aligned text, CSV or JSON from the same cells.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        assert_eq!(row.len(), self.headers.len(), "row width differs from the header");
        self.rows.push(row);
    }

    /// Columns separated by ` | `, padded to a common width.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            let mut text = padded.join(" | ");
            // empty trailing cells leave no dangling separator
            while text.trim_end().ends_with(" |") || text.ends_with(' ') {
                text = text.trim_end().trim_end_matches('|').to_string();
            }
            text
        };
        let mut out = line(&self.headers);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Domain(format!("csv: {e}"));
        w.write_record(&self.headers).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Domain(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Domain(format!("csv: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json(text: &str) -> Result<Table> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    pub fn from_csv(text: &str) -> Result<Table> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let err = |e: csv::Error| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            msg: e.to_string(),
        };
        let headers = r.headers().map_err(err)?.iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
            .collect::<std::result::Result<Vec<Vec<String>>, _>>()
            .map_err(err)?;
        Ok(Table { headers, rows })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json() + "\n"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(["#", "P", "l"]);
        t.push(["4", "P(1, 2, 2, 5)", "10"]);
        t.push(["14", "P(2, 3, 10, 15)", "30"]);
        t
    }

    #[test]
    fn text_alignment() {
        assert_eq!(
            sample().to_text(),
            "#  | P               | l\n4  | P(1, 2, 2, 5)   | 10\n14 | P(2, 3, 10, 15) | 30\n"
        );
    }

    #[test]
    fn formats_carry_the_same_cells() {
        let t = sample();
        assert_eq!(Table::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(Table::from_csv(&t.to_csv().unwrap()).unwrap(), t);
    }

    #[test]
    fn empty_trailing_cells() {
        let mut t = Table::new(["a", "b", "c"]);
        t.push(["1", "2", ""]);
        t.push(["1", "", ""]);
        t.push(["1", "2", "3"]);
        assert_eq!(t.to_text(), "a | b | c\n1 | 2\n1\n1 | 2 | 3\n");
    }
}
