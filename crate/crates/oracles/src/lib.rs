//! Slow reference computations for the test suites.
//!
//! Everything here works on plain `Vec<Vec<f64>>` rows and `num_complex`
//! values and deliberately shares no code with the library under test: naive
//! O(n²) transforms, Gauss–Jordan with full pivoting, one-sided Jacobi SVD,
//! permutation-expansion determinants and positive-term special-function
//! series.

use num_complex::Complex64;
use std::f64::consts::PI;

pub type Rows = Vec<Vec<f64>>;

/// `Ωv` with `ω = exp(2πi/n)`, evaluated term by term.
pub fn naive_dft(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len();
    (0..n)
        .map(|k| {
            v.iter()
                .enumerate()
                .map(|(j, x)| {
                    let angle = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    x * Complex64::from_polar(1.0, angle)
                })
                .sum()
        })
        .collect()
}

/// `(1/n) Ω^H v`.
pub fn naive_idft(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len();
    (0..n)
        .map(|k| {
            let s: Complex64 = v
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    let angle = -2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    x * Complex64::from_polar(1.0, angle)
                })
                .sum();
            s / n as f64
        })
        .collect()
}

/// The dense DFT matrix `Ω`.
pub fn dft_matrix(n: usize) -> Vec<Vec<Complex64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::from_polar(1.0, 2.0 * PI * ((i * j) % n) as f64 / n as f64))
                .collect()
        })
        .collect()
}

/// `y_i = Σ_j a_{(i-j) mod n} b_j`.
pub fn cyclic_convolution(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[(i + n - j) % n] * b[j]).sum())
        .collect()
}

pub fn identity(n: usize) -> Rows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

pub fn transpose(a: &Rows) -> Rows {
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j]).collect()).collect()
}

pub fn matmul(a: &Rows, b: &Rows) -> Rows {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    assert_eq!(a[0].len(), k);
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn matvec(a: &Rows, x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

pub fn complex_matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn max_abs_diff(a: &Rows, b: &Rows) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(p, q)| p.iter().zip(q).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max)
}

pub fn frobenius(a: &Rows) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn norm1(a: &Rows) -> f64 {
    let c = a[0].len();
    (0..c)
        .map(|j| a.iter().map(|row| row[j].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn norm_inf(a: &Rows) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Gauss–Jordan elimination with full pivoting. `None` if a pivot is exactly zero.
pub fn inverse(a: &Rows) -> Option<Rows> {
    let n = a.len();
    let mut m: Rows = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let (mut pi, mut pj, mut best) = (k, k, 0.0);
        for i in k..n {
            for j in k..n {
                if m[i][j].abs() > best {
                    best = m[i][j].abs();
                    pi = i;
                    pj = j;
                }
            }
        }
        if best == 0.0 {
            return None;
        }
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            col_perm.swap(k, pj);
        }
        let p = m[k][k];
        for v in m[k].iter_mut() {
            *v /= p;
        }
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != k && row[k] != 0.0 {
                let f = row[k];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    // Undo the column permutation: rows of the inverse were permuted.
    let mut inv = vec![vec![0.0; n]; n];
    for k in 0..n {
        inv[col_perm[k]] = m[k][n..].to_vec();
    }
    Some(inv)
}

pub fn solve(a: &Rows, b: &[f64]) -> Option<Vec<f64>> {
    inverse(a).map(|inv| matvec(&inv, b))
}

/// Singular values (descending) by one-sided Jacobi rotations.
pub fn singular_values(a: &Rows) -> Vec<f64> {
    let mut u = transpose(a); // columns of `a` as rows
    let n = u.len();
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = u[p].iter().map(|x| x * x).sum();
                let beta: f64 = u[q].iter().map(|x| x * x).sum();
                let gamma: f64 = u[p].iter().zip(&u[q]).map(|(x, y)| x * y).sum();
                if gamma == 0.0 {
                    continue;
                }
                off = off.max(gamma.abs() / (alpha * beta).sqrt());
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (up, uq) = (u[p].clone(), u[q].clone());
                for i in 0..up.len() {
                    u[p][i] = c * up[i] - s * uq[i];
                    u[q][i] = s * up[i] + c * uq[i];
                }
            }
        }
        if off < 1e-15 {
            break;
        }
    }
    let mut sv: Vec<f64> = u.iter().map(|c| c.iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

pub fn spectral_norm(a: &Rows) -> f64 {
    singular_values(a)[0]
}

/// Determinant by the Leibniz permutation expansion. Only sensible for k ≤ 6.
pub fn det_leibniz(a: &Rows) -> f64 {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0.0;
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * (0..n).map(|i| a[i][p[i]]).product::<f64>();
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// erf by the positive-term series `2/√π e^{-x²} Σ 2ⁿ x^{2n+1} / (1·3·…·(2n+1))`.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    let mut term = x;
    let mut sum = x;
    let mut k = 0.0;
    while term > 1e-18 * sum {
        k += 1.0;
        term *= 2.0 * x * x / (2.0 * k + 1.0);
        sum += term;
    }
    2.0 / PI.sqrt() * (-x * x).exp() * sum
}

pub fn normal_cdf(x: f64) -> f64 {
    0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2))
}

/// CDF of the Euclidean norm of a standard Gaussian n-vector by composite
/// Simpson quadrature of its density.
pub fn chi_cdf_quadrature(y: f64, n: usize) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    let k = n as f64;
    // log of 2 / (2^{k/2} Γ(k/2)) via Γ recursion from Γ(1) or Γ(1/2)
    let log_gamma_half_k = {
        let mut acc = if n % 2 == 0 { 0.0 } else { 0.5 * PI.ln() };
        let mut a = if n % 2 == 0 { 1.0 } else { 0.5 };
        while a < k / 2.0 - 1e-12 {
            acc += a.ln();
            a += 1.0;
        }
        acc
    };
    let log_c = 2f64.ln() - (k / 2.0) * 2f64.ln() - log_gamma_half_k;
    let density = |x: f64| {
        if x == 0.0 {
            if n == 1 {
                log_c.exp()
            } else {
                0.0
            }
        } else {
            (log_c + (k - 1.0) * x.ln() - x * x / 2.0).exp()
        }
    };
    let steps = 20_000usize;
    let h = y / steps as f64;
    let mut s = density(0.0) + density(y);
    for i in 1..steps {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * density(i as f64 * h);
    }
    s * h / 3.0
}

/// Asymptotic Kolmogorov quantile at 99%: `P(√m·D ≤ 1.6276) ≈ 0.99`.
pub const KOLMOGOROV_99: f64 = 1.6276;
