use crate::{RandomError, Result};

/// Smallest sample for which [`ks_distance`] is meaningful.
pub const MIN_KS_SAMPLES: usize = 100;

/// Step CDF of a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| v.is_nan()) {
            return Err(RandomError::InvalidParameter("sample contains NaN".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self { sorted: values })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.sorted
    }

    /// `#{x_i ≤ y} / m`.
    pub fn evaluate(&self, y: f64) -> f64 {
        if self.sorted.is_empty() {
            return 0.0;
        }
        self.sorted.partition_point(|&x| x <= y) as f64 / self.sorted.len() as f64
    }

    /// `#{x_i < y} / m`.
    pub fn evaluate_below(&self, y: f64) -> f64 {
        if self.sorted.is_empty() {
            return 0.0;
        }
        self.sorted.partition_point(|&x| x < y) as f64 / self.sorted.len() as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CdfComparison {
    pub ks_distance: f64,
    pub sample_count: usize,
    pub label: String,
}

/// `sup_y |F_emp(y) − F(y)|`, evaluated at and just below each sample.
pub fn ks_distance(emp: &EmpiricalCdf, analytic: impl Fn(f64) -> f64, label: &str) -> Result<CdfComparison> {
    let m = emp.len();
    if m < MIN_KS_SAMPLES {
        return Err(RandomError::InvalidParameter(format!(
            "KS distance needs at least {MIN_KS_SAMPLES} samples, got {m}"
        )));
    }
    let v = emp.values();
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < m {
        let x = v[i];
        let mut j = i;
        while j < m && v[j] == x {
            j += 1;
        }
        let f = analytic(x);
        d = d.max((i as f64 / m as f64 - f).abs()).max((j as f64 / m as f64 - f).abs());
        i = j;
    }
    Ok(CdfComparison {
        ks_distance: d.min(1.0),
        sample_count: m,
        label: label.to_owned(),
    })
}
