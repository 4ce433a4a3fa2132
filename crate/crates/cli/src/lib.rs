//! Monte Carlo experiments on the conditioning of random structured
//! matrices, and the report writers behind the `structnorm` binary.

pub mod config;
pub mod error;
pub mod experiments;
pub mod measure;
pub mod report;
pub mod stats;

pub use config::{ExperimentConfig, OutputFormat};
pub use error::{ExperimentError, Result};
pub use experiments::{run_cdf_validation, run_condition_experiment, run_norm_ratio_experiment, CdfRecord, RatioRecord};
pub use report::{emit_report, Metadata, Record};
pub use stats::StatsSummary;
