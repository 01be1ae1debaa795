// Run every check and print the failures plus a summary. With an argument,
// the report is written in that format (text, csv or json).
//
//     cargo run --example verify_report -- json

use std::collections::BTreeMap;

use gorenstein_wps::reference::ReferenceData;
use gorenstein_wps::table::Format;
use gorenstein_wps::verify::verify_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify_all(&ReferenceData::builtin());
    let format = match std::env::args().nth(1).as_deref() {
        Some("json") => Some(Format::Json),
        Some("csv") => Some(Format::Csv),
        Some("text") => Some(Format::Text),
        _ => None,
    };
    if let Some(format) = format {
        print!("{}", report.to_table().render(format)?);
        return Ok(());
    }
    let mut sections: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for e in &report.entries {
        let s = sections.entry(e.anchor.as_str()).or_default();
        s.0 += 1;
        s.1 += usize::from(e.pass);
    }
    for (anchor, (total, passed)) in sections {
        println!("{passed:>3}/{total:<3} {anchor}");
    }
    // checks that pass but carry a discrepancy worth reading
    for id in ["extension-12a", "case11-inverse"] {
        if let Some(e) = report.entry(id) {
            println!("{id}: {}", e.note);
        }
    }
    for e in report.failures() {
        println!("FAILED {} computed {} expected {}", e.check_id, e.computed, e.expected);
    }
    println!("{} checks, {} failed", report.entries.len(), report.failures().len());
    Ok(())
}
