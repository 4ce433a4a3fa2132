//! CSV and JSON writers.
//!
//! CSV is UTF-8 with LF line endings, one header row, floating point values
//! in scientific notation with two significant digits, and a trailing
//! `# seed=…,config_hash=…,version=…` comment line. JSON keeps full
//! precision under `{"records": [...], "metadata": {...}}`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;
use crate::experiments::{CdfRecord, RatioRecord};
use crate::stats::StatsSummary;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub seed: u64,
    pub config_hash: String,
    pub version: String,
}

impl Metadata {
    pub fn new(seed: u64, config_hash: String) -> Self {
        Self { seed, config_hash, version: env!("CARGO_PKG_VERSION").to_owned() }
    }
}

/// A row type with a fixed CSV layout.
pub trait Record: Serialize {
    fn header() -> &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

/// Two significant digits, e.g. `1.1e2`.
pub fn sci(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_owned()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{x:.1e}")
    }
}

impl Record for StatsSummary {
    fn header() -> &'static [&'static str] {
        &["n", "class", "metric", "min", "mean", "max", "std", "trials", "resampled", "stalled"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.matrix_class.clone(),
            self.metric.clone(),
            sci(self.min),
            sci(self.mean),
            sci(self.max),
            sci(self.std),
            self.trials.to_string(),
            self.resampled.to_string(),
            self.stalled.to_string(),
        ]
    }
}

impl Record for RatioRecord {
    fn header() -> &'static [&'static str] {
        &[
            "n",
            "class",
            "mean_norm_1",
            "mean_norm_2",
            "mean_ratio",
            "mean_inverse_norm_1",
            "mean_inverse_norm_2",
            "mean_inverse_ratio",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.matrix_class.clone(),
            sci(self.mean_norm_1),
            sci(self.mean_norm_2),
            sci(self.mean_ratio),
            sci(self.mean_inverse_norm_1),
            sci(self.mean_inverse_norm_2),
            sci(self.mean_inverse_ratio),
        ]
    }
}

impl Record for CdfRecord {
    fn header() -> &'static [&'static str] {
        &["n", "suite", "samples", "ks_distance", "grid_points", "violations", "gating"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.suite.clone(),
            self.samples.to_string(),
            self.ks_distance.map_or_else(String::new, sci),
            self.grid_points.to_string(),
            self.violations.to_string(),
            self.gating.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct JsonReport<'a, R> {
    records: &'a [R],
    metadata: &'a Metadata,
}

pub fn emit_report<R: Record>(records: &[R], format: OutputFormat, meta: &Metadata, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut *out);
            w.write_record(R::header())?;
            for r in records {
                w.write_record(r.row())?;
            }
            w.flush()?;
            drop(w);
            writeln!(out, "# seed={},config_hash={},version={}", meta.seed, meta.config_hash, meta.version)?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &JsonReport { records, metadata: meta })
                .map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}
