use sha2::{Digest, Sha256};
use structnorm::dense::MAX_DENSE_ORDER;
use structnorm::NormFamily;
use structnorm_random::{Ensemble, EntryDistribution, GaussianParams};

use crate::error::{ExperimentError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Largest order accepted for circulant runs, which never expand densely.
pub const MAX_CIRCULANT_ORDER: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub matrix_class: Ensemble,
    pub sizes: Vec<usize>,
    pub trials_per_size: usize,
    pub distribution: EntryDistribution,
    pub norm_family: NormFamily,
    pub seed: u64,
    pub output: OutputFormat,
    pub parallelism: usize,
    /// Real and imaginary parts drawn independently from `distribution`.
    pub complex: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            matrix_class: Ensemble::Circulant,
            sizes: vec![256],
            trials_per_size: 100,
            distribution: EntryDistribution::UniformSym,
            norm_family: NormFamily::Two,
            seed: 0,
            output: OutputFormat::Csv,
            parallelism: 1,
            complex: false,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(ExperimentError::Config(m));
        if self.trials_per_size == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.sizes.is_empty() {
            return fail("sizes must be nonempty".into());
        }
        if self.parallelism == 0 {
            return fail("workers must be at least 1".into());
        }
        let limit = match self.matrix_class {
            Ensemble::Circulant => MAX_CIRCULANT_ORDER,
            _ if self.complex => MAX_DENSE_ORDER / 2,
            _ => MAX_DENSE_ORDER,
        };
        for &n in &self.sizes {
            if n == 0 || n > limit {
                return fail(format!("size {n} outside 1..={limit} for class {}", self.matrix_class));
            }
        }
        Ok(())
    }

    pub fn gaussian(&self) -> Option<GaussianParams> {
        match self.distribution {
            EntryDistribution::Gaussian(p) => Some(p),
            EntryDistribution::UniformSym => None,
        }
    }

    /// Everything that determines the numbers; worker count and output
    /// format are left out.
    pub fn canonical(&self, command: &str) -> String {
        let dist = match self.distribution {
            EntryDistribution::UniformSym => "uniform".to_owned(),
            EntryDistribution::Gaussian(p) => format!("gaussian({:e},{:e})", p.mean(), p.std_dev()),
        };
        let sizes: Vec<String> = self.sizes.iter().map(usize::to_string).collect();
        format!(
            "command={command};class={};sizes={};trials={};dist={dist};norm={};seed={};complex={}",
            self.matrix_class,
            sizes.join(","),
            self.trials_per_size,
            self.norm_family,
            self.seed,
            self.complex
        )
    }

    /// Hex SHA-256 of [`ExperimentConfig::canonical`].
    pub fn config_hash(&self, command: &str) -> String {
        Sha256::digest(self.canonical(command).as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}
