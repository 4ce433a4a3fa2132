use serde::{Deserialize, Serialize};

/// Min, max, mean and population standard deviation of one metric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub n: usize,
    pub matrix_class: String,
    pub metric: String,
    pub min: f64,
    pub mean: f64,
    pub max: f64,
    pub std: f64,
    pub trials: usize,
    /// Singular draws that were discarded and redrawn.
    pub resampled: usize,
    /// Power-iteration runs that hit the iteration cap.
    pub stalled: usize,
}

/// Mean and population standard deviation, summed in input order.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let m = values.len() as f64;
    let mean = values.iter().sum::<f64>() / m;
    let var = values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / m;
    (mean, var.sqrt())
}

impl StatsSummary {
    pub fn from_values(n: usize, matrix_class: &str, metric: &str, values: &[f64]) -> Self {
        let (mean, std) = mean_std(values);
        Self {
            n,
            matrix_class: matrix_class.to_owned(),
            metric: metric.to_owned(),
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            mean,
            std,
            trials: values.len(),
            resampled: 0,
            stalled: 0,
        }
    }
}
