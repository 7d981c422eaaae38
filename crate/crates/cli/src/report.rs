//! Deterministic report rendering.
//!
//! Reports are byte-identical across runs for the same inputs: keys are
//! emitted in sorted order, grades render canonically as `n/d`, and the
//! elapsed time goes to stderr, never into the report body.

use std::time::Duration;

use qgamma_core::verdict::Tally;

/// Outcome of one theorem run on one structure.
#[derive(Debug, Clone)]
pub struct VerdictReport {
    pub theorem: String,
    pub structure: String,
    pub tally: Tally,
    pub elapsed: Duration,
}

impl VerdictReport {
    pub fn all_agree(&self) -> bool {
        self.tally.all_agree()
    }

    /// The deterministic text block. Keys appear alphabetically;
    /// discrepancy witnesses follow their count, one `- ` line each,
    /// in enumeration order.
    pub fn render(&self) -> String {
        let mut out = String::from("report v1\n");
        out.push_str(&format!("agreements: {}\n", self.tally.agreements));
        out.push_str(&format!("cases: {}\n", self.tally.cases));
        out.push_str(&format!("discrepancies: {}\n", self.tally.discrepancies.len()));
        for w in &self.tally.discrepancies {
            out.push_str(&format!("- {w}\n"));
        }
        if !self.tally.notes.is_empty() {
            out.push_str(&format!("notes: {}\n", self.tally.notes.len()));
            for n in &self.tally.notes {
                out.push_str(&format!("- {n}\n"));
            }
        }
        out.push_str(&format!("structure: {}\n", self.structure));
        out.push_str(&format!("theorem: {}\n", self.theorem));
        out
    }
}

/// Joins several reports into one document, blocks separated by a
/// blank line.
pub fn render_all(reports: &[VerdictReport]) -> String {
    reports
        .iter()
        .map(|r| r.render())
        .collect::<Vec<_>>()
        .join("\n")
}
