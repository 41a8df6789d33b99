//! Search result records and their persistence.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::graph::CanonicalForm;

/// Outcome of adding every possible edge to one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeScanResult {
    pub graph6: String,
    pub canonical: CanonicalForm,
    pub base_mean: Rational,
    pub per_pair: Vec<PairDelta>,
    /// Minimum delta over all pairs; absent when the graph is complete.
    pub worst_delta: Option<Rational>,
    pub any_increase: bool,
    pub any_decrease: bool,
}

/// One nonadjacent pair and the exact mean shift its addition causes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairDelta {
    pub u: usize,
    pub v: usize,
    pub new_mean: Rational,
    pub delta: Rational,
}

/// Aggregated outcome of one exhaustive scan, serializable as JSON.
/// Everything except `elapsed_ms` is deterministic for a given version.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub order: usize,
    pub graphs_scanned: usize,
    pub counterexample_count: usize,
    #[serde(default)]
    pub max_decrease: Option<Rational>,
    #[serde(default)]
    pub conjecture2_holds: Option<bool>,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
    pub version: String,
}

impl SearchReport {
    pub fn summary(&self) -> String {
        let mut line = format!(
            "order {}: {} graphs scanned, {} counterexample{}",
            self.order,
            self.graphs_scanned,
            self.counterexample_count,
            if self.counterexample_count == 1 {
                ""
            } else {
                "s"
            },
        );
        if let Some(d) = &self.max_decrease {
            line.push_str(&format!(", max decrease {}", d.to_decimal(6)));
        }
        if let Some(holds) = self.conjecture2_holds {
            line.push_str(if holds {
                ", no violations"
            } else {
                ", VIOLATIONS FOUND"
            });
        }
        line
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Path of the witness list stored next to a report.
pub fn witness_path(report_path: &Path) -> PathBuf {
    report_path.with_extension("g6")
}

/// Writes the report as JSON and its witnesses as sorted graph6 lines in a
/// sibling `.g6` file.
pub fn persist_report(report: &SearchReport, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(report).expect("report serializes");
    fs::write(path, json + "\n").map_err(io_err(path))?;
    let witness_file = witness_path(path);
    let mut lines = report.witnesses.join("\n");
    if !lines.is_empty() {
        lines.push('\n');
    }
    fs::write(&witness_file, lines).map_err(io_err(&witness_file))?;
    Ok(())
}

pub fn load_report(path: &Path) -> Result<SearchReport> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|source| Error::ReportJson {
        path: path.to_path_buf(),
        source,
    })
}
