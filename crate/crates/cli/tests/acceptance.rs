//! Acceptance run: one pass/fail line per criterion, exits non-zero if any
//! criterion fails. Every tolerance and runtime budget is a constant below.

use std::collections::BTreeMap;
use std::error::Error;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use structnorm::gs::{gs_apply, shifted_block};
use structnorm::norms::{
    circulant_frobenius_norm, circulant_norm_bounds, f_circulant_scaling_check, toeplitz_norm, toeplitz_norm_bounds,
};
use structnorm::spectral::circulant_eigenvalues;
use structnorm::{FCirculant, GsFactors, NormBoundReport, NormFamily, Toeplitz};
use structnorm_cli::{
    run_cdf_validation, run_condition_experiment, run_norm_ratio_experiment, CdfRecord, ExperimentConfig,
};
use structnorm_oracles as oracle;
use structnorm_random::{hadamard_geometric_mean_bound, Ensemble, EntryDistribution, GaussianParams, RandomStream};

const FROBENIUS_RTOL: f64 = 1e-12;
const FROBENIUS_INSTANCES: usize = 500;
const FROBENIUS_MAX_N: usize = 1024;

const DIAG_TOL: f64 = 1e-10;
const DIAG_TRIALS: usize = 100;
const DIAG_MAX_N: usize = 32;

const GS_TOL: f64 = 1e-7;
const GS_INSTANCES: usize = 100;
const GS_MAX_N: usize = 32;
const GS_APPLY_N: usize = 256;
const GS_APPLY_RTOL: f64 = 1e-8;

const BOUND_INSTANCES: usize = 100;
const BOUND_MAX_N: usize = 64;
const BOUND_SLACK: f64 = 1e-12;

const CDF_SAMPLES: usize = 10_000;
const KS_MAX: f64 = 0.03;
const KS_SIZES: [usize; 2] = [16, 64];

const HADAMARD_RANDOM: usize = 10_000;
const HADAMARD_MAX_K: usize = 8;
const HADAMARD_RTOL: f64 = 1e-12;

const TABLE_TRIALS: usize = 100;
const CIRCULANT_KAPPA_BAND: (f64, f64) = (20.0, 600.0);
const TOEPLITZ_KAPPA1_BAND: (f64, f64) = (1e3, 1e5);
const GENERAL_KAPPA_BAND: (f64, f64) = (50.0, 1.5e3);
const RATIO_TARGET: f64 = 0.87;
const RATIO_HALF_WIDTH: f64 = 0.05;
const ORDERING_N: usize = 1024;
const ORDERING_GENERAL_TRIALS: usize = 20;

const SEED: u64 = 20_240_601;

type Outcome = Result<Report, Box<dyn Error>>;

struct Report {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Report {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Self { pass, summary: summary.into(), notes: Vec::new() }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }
}

fn stream(domain: u64) -> RandomStream {
    RandomStream::keyed(SEED, domain, 0)
}

fn uniform_vec(s: &mut RandomStream, len: usize) -> Vec<f64> {
    (0..len).map(|_| s.uniform(-1.0, 1.0)).collect()
}

fn euclid(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn at_most(left: f64, right: f64) -> bool {
    left <= right + BOUND_SLACK * right.max(1.0)
}

fn frobenius_identity() -> Outcome {
    let mut s = stream(1);
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..FROBENIUS_INSTANCES {
        let n = 2 + (s.next_u64() % (FROBENIUS_MAX_N as u64 - 1)) as usize;
        let t = uniform_vec(&mut s, n);
        let want = (n as f64).sqrt() * euclid(&t);
        let z = FCirculant::circulant(t.clone())?;
        // Kahan-summed squares of every entry t[(i - j) mod n]
        let (mut sum, mut c) = (0.0f64, 0.0f64);
        for i in 0..n {
            for j in 0..n {
                let y = t[(i + n - j) % n].powi(2) - c;
                let next = sum + y;
                c = (next - sum) - y;
                sum = next;
            }
        }
        for got in [circulant_frobenius_norm(&z)?, toeplitz_norm(&z.to_toeplitz(), NormFamily::Frobenius)?, sum.sqrt()] {
            let rel = (got - want).abs() / want;
            worst = worst.max(rel);
            if rel > FROBENIUS_RTOL {
                failures += 1;
            }
        }
    }
    Ok(Report::new(
        failures == 0,
        format!("{FROBENIUS_INSTANCES} instances, worst relative gap {worst:.1e} (tol {FROBENIUS_RTOL:.0e})"),
    ))
}

fn diagonalization() -> Outcome {
    let mut s = stream(2);
    let mut worst: f64 = 0.0;
    for trial in 0..DIAG_TRIALS {
        let n = 1 + trial % DIAG_MAX_N;
        let t = uniform_vec(&mut s, n);
        let z = FCirculant::circulant(t.clone())?;
        let u = circulant_eigenvalues(&z)?;
        let omega = oracle::dft_matrix(n);
        let omega_inv: Vec<Vec<Complex64>> =
            (0..n).map(|i| (0..n).map(|j| omega[j][i].conj() / n as f64).collect()).collect();
        let d: Vec<Vec<Complex64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { u.eigenvalues()[i] } else { Complex64::new(0.0, 0.0) }).collect())
            .collect();
        let rebuilt = oracle::complex_matmul(&oracle::complex_matmul(&omega_inv, &d), &omega);
        let dense = z.to_dense()?;
        let norm_t = euclid(&t);
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((rebuilt[i][j] - dense[(i, j)]).norm() / norm_t);
            }
        }
    }
    Ok(Report::new(
        worst <= DIAG_TOL,
        format!("{DIAG_TRIALS} trials, worst entry gap {worst:.1e}·‖t‖ (tol {DIAG_TOL:.0e})"),
    ))
}

/// Worst `error / κ₁(target)` over `GS_INSTANCES` successful factorizations.
fn gs_variant(s: &mut RandomStream, build: impl Fn(&Toeplitz) -> Option<(GsFactors, Toeplitz)>, bordered: bool) -> Result<(f64, usize), Box<dyn Error>> {
    let (mut worst, mut done, mut rejected) = (0.0f64, 0, 0);
    while done < GS_INSTANCES {
        let n = 1 + done % GS_MAX_N + usize::from(bordered);
        let spec = Toeplitz::new(uniform_vec(s, 2 * n - 1))?;
        let Some((f, target)) = build(&spec) else {
            rejected += 1;
            continue;
        };
        let dense = target.to_dense()?.to_rows();
        let Some(inv) = oracle::inverse(&dense) else {
            rejected += 1;
            continue;
        };
        let kappa = oracle::norm1(&dense) * oracle::norm1(&inv);
        worst = worst.max(oracle::max_abs_diff(&f.reconstruct().to_rows(), &inv) / kappa);
        done += 1;
    }
    Ok((worst, rejected))
}

fn gohberg_semencul() -> Outcome {
    let mut s = stream(3);
    let a = gs_variant(&mut s, |t| Some((GsFactors::variant_a(t).ok()?, t.clone())), false)?;
    let b = gs_variant(&mut s, |t| Some((GsFactors::variant_b(t).ok()?, t.leading(t.order() - 1))), true)?;
    let c = gs_variant(&mut s, |t| Some((GsFactors::variant_c(t).ok()?, shifted_block(t).ok()?)), true)?;

    let spec = Toeplitz::new(uniform_vec(&mut s, 2 * GS_APPLY_N - 1))?;
    let f = GsFactors::variant_a(&spec)?;
    let x = uniform_vec(&mut s, GS_APPLY_N);
    let fast = gs_apply(&f, &x)?;
    let want = oracle::solve(&spec.to_dense()?.to_rows(), &x).ok_or("dense solve failed")?;
    let diff: Vec<f64> = fast.iter().zip(&want).map(|(p, q)| p - q).collect();
    let apply_rel = euclid(&diff) / euclid(&want);

    let worst = a.0.max(b.0).max(c.0);
    Ok(Report::new(
        worst <= GS_TOL && apply_rel <= GS_APPLY_RTOL,
        format!("worst error/κ₁ {worst:.1e} (tol {GS_TOL:.0e}); apply at n={GS_APPLY_N} relative {apply_rel:.1e} (tol {GS_APPLY_RTOL:.0e})"),
    )
    .note(format!("variant a: {:.1e} ({} singular draws skipped)", a.0, a.1))
    .note(format!("variant b: {:.1e} ({} singular draws skipped)", b.0, b.1))
    .note(format!("variant c: {:.1e} ({} singular draws skipped)", c.0, c.1)))
}

fn tally(counts: &mut BTreeMap<String, (usize, usize)>, report: &NormBoundReport<f64>, gating_only: bool) {
    for check in report.checks() {
        if gating_only && !check.gating {
            continue;
        }
        let e = counts.entry(check.label.clone()).or_default();
        e.0 += 1;
        // re-evaluated with the pinned slack rather than trusting `satisfied`
        let ok = match check.relation {
            structnorm::norms::Relation::AtMost => at_most(check.left, check.right),
            structnorm::norms::Relation::Equal { .. } => {
                (check.left - check.right).abs() <= BOUND_SLACK * check.right.abs().max(1.0)
            }
        };
        if !ok {
            e.1 += 1;
        }
    }
}

fn norm_bounds() -> Outcome {
    let mut s = stream(4);
    let mut gating: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut observed: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let draw_n = |s: &mut RandomStream| 2 + (s.next_u64() % (BOUND_MAX_N as u64 - 1)) as usize;

    for _ in 0..BOUND_INSTANCES {
        let n = draw_n(&mut s);
        let r = circulant_norm_bounds(&FCirculant::circulant(uniform_vec(&mut s, n))?)?;
        tally(&mut gating, &r, true);

        let n = draw_n(&mut s);
        let r = toeplitz_norm_bounds(&Toeplitz::new(uniform_vec(&mut s, 2 * n - 1))?)?;
        tally(&mut gating, &r, true);

        let n = draw_n(&mut s);
        let magnitude = 4f64.powf(s.uniform(-1.0, 1.0));
        let f = if s.next_u64() % 2 == 0 { magnitude } else { -magnitude };
        let r = f_circulant_scaling_check(&FCirculant::new(uniform_vec(&mut s, n), f)?)?;
        tally(&mut gating, &r, true);
        let scaled: NormBoundReport<f64> = {
            let mut o = NormBoundReport::new();
            for c in r.checks().iter().filter(|c| !c.gating) {
                o.observe_at_most(c.label.clone(), c.left, c.right);
            }
            o
        };
        tally(&mut observed, &scaled, false);
    }

    let mut done = 0;
    while done < BOUND_INSTANCES {
        let n = 1 + (s.next_u64() % BOUND_MAX_N as u64) as usize;
        let spec = Toeplitz::new(uniform_vec(&mut s, 2 * n - 1))?;
        let Ok(f) = GsFactors::variant_a(&spec) else { continue };
        let Some(inv) = oracle::inverse(&spec.to_dense()?.to_rows()) else { continue };
        let bound = f.inverse_norm_bound();
        let mut r = NormBoundReport::new();
        r.at_most("‖T⁻¹‖₁ ≤ 2‖p‖₁‖q‖₁/|p₁|", oracle::norm1(&inv), bound.bound_h);
        r.at_most("‖T⁻¹‖∞ ≤ 2‖p‖₁‖q‖₁/|p₁|", oracle::norm_inf(&inv), bound.bound_h);
        let spectral = oracle::spectral_norm(&inv);
        r.at_most("‖T⁻¹‖₂ ≤ 2‖p‖₁‖q‖₁/|p₁|", spectral, bound.bound_h);
        r.at_most("‖T⁻¹‖₂ ≤ 2n‖p‖‖q‖/|p₁|", spectral, bound.bound_2n);
        tally(&mut gating, &r, true);
        done += 1;
    }

    let total: usize = gating.values().map(|v| v.1).sum();
    let mut report = Report::new(
        total == 0,
        format!("{total} violations over {BOUND_INSTANCES} instances per suite, n ≤ {BOUND_MAX_N}, slack {BOUND_SLACK:.0e}·max(1, rhs)"),
    );
    for (label, (checked, bad)) in gating.iter().filter(|(_, v)| v.1 > 0) {
        report = report.note(format!("violated: {label}: {bad}/{checked}"));
    }
    for (label, (checked, bad)) in &observed {
        report = report.note(format!("observation, diagonally scaled: {label}: {bad}/{checked} violated"));
    }
    Ok(report)
}

fn gaussian_config(class: Ensemble, sizes: &[usize], seed: u64) -> ExperimentConfig {
    ExperimentConfig {
        matrix_class: class,
        sizes: sizes.to_vec(),
        trials_per_size: CDF_SAMPLES,
        distribution: EntryDistribution::Gaussian(GaussianParams::standard()),
        seed,
        ..ExperimentConfig::default()
    }
}

fn ks_of(records: &[CdfRecord], n: usize, suite: &str) -> Result<f64, Box<dyn Error>> {
    records
        .iter()
        .find(|r| r.n == n && r.suite == suite)
        .and_then(|r| r.ks_distance)
        .ok_or_else(|| format!("missing suite {suite} at n={n}").into())
}

fn circulant_inverse_cdf() -> Outcome {
    let records = run_cdf_validation(&gaussian_config(Ensemble::Circulant, &KS_SIZES, SEED))?;
    let mut worst: f64 = 0.0;
    let mut notes = Vec::new();
    for n in KS_SIZES {
        let stated = ks_of(&records, n, "circulant_inverse_iid_u")?;
        worst = worst.max(stated);
        notes.push(format!(
            "n={n}: KS vs 1−(1−q)ⁿ {stated:.3}; observation: KS vs (1−q)ⁿ {:.3}, real t vs (1−q)ⁿ {:.3}",
            ks_of(&records, n, "circulant_inverse_iid_u_exact")?,
            ks_of(&records, n, "circulant_inverse_real_t_exact")?
        ));
    }
    let mut r = Report::new(worst <= KS_MAX, format!("worst KS {worst:.3} at m={CDF_SAMPLES} (max {KS_MAX})"));
    r.notes = notes;
    Ok(r)
}

fn cdf_dominance() -> Outcome {
    let mut records = Vec::new();
    for (class, sizes) in [
        (Ensemble::Circulant, &[16usize, 64][..]),
        (Ensemble::Toeplitz, &[8, 32]),
        (Ensemble::Hankel, &[16]),
    ] {
        for r in run_cdf_validation(&gaussian_config(class, sizes, SEED + 1))? {
            if r.ks_distance.is_none() {
                records.push((class, r));
            }
        }
    }
    let total: usize = records.iter().map(|(_, r)| r.violations).sum();
    let mut report = Report::new(
        total == 0,
        format!("{total} violations over {} grids of {} points, m={CDF_SAMPLES}", records.len(), records[0].1.grid_points),
    );
    for (class, r) in records.iter().filter(|(_, r)| r.violations > 0) {
        report = report.note(format!("violated: {class} n={} {}: {}", r.n, r.suite, r.violations));
    }
    Ok(report)
}

/// `|det A| ≤ k^{k/2} tᵏ` and the geometric-mean pivot-ratio bound.
fn hadamard_ok(a: &oracle::Rows, t: f64) -> Result<bool, Box<dyn Error>> {
    let k = a.len();
    let det = oracle::det_leibniz(a).abs();
    let det_bound = (k as f64).powf(k as f64 / 2.0) * t.powi(k as i32);
    let mean = (det / t).powf(1.0 / (k as f64 - 1.0));
    let mean_bound = hadamard_geometric_mean_bound(k, t)?;
    Ok(det <= det_bound * (1.0 + HADAMARD_RTOL) && mean <= mean_bound * (1.0 + HADAMARD_RTOL))
}

fn hadamard() -> Outcome {
    let mut violations = 0;
    let mut exhaustive = 0;
    for k in 2..=4usize {
        for bits in 0u32..(1 << (k * k)) {
            let a: oracle::Rows = (0..k)
                .map(|i| (0..k).map(|j| if bits >> (i * k + j) & 1 == 1 { -1.0 } else { 1.0 }).collect())
                .collect();
            exhaustive += 1;
            if !hadamard_ok(&a, 1.0)? {
                violations += 1;
            }
        }
    }
    let mut s = stream(7);
    for trial in 0..HADAMARD_RANDOM {
        let k = 2 + trial % (HADAMARD_MAX_K - 1);
        let t = s.uniform(0.1, 3.0);
        let a: oracle::Rows = (0..k).map(|_| (0..k).map(|_| s.uniform(-t, t)).collect()).collect();
        if !hadamard_ok(&a, t)? {
            violations += 1;
        }
    }
    Ok(Report::new(
        violations == 0,
        format!("{violations} violations over {exhaustive} sign matrices (k ≤ 4) and {HADAMARD_RANDOM} bounded matrices (k ≤ {HADAMARD_MAX_K})"),
    ))
}

fn uniform_config(class: Ensemble, n: usize, norm: NormFamily, trials: usize) -> ExperimentConfig {
    ExperimentConfig {
        matrix_class: class,
        sizes: vec![n],
        trials_per_size: trials,
        norm_family: norm,
        seed: SEED,
        ..ExperimentConfig::default()
    }
}

fn mean_kappa(class: Ensemble, n: usize, norm: NormFamily, trials: usize) -> Result<f64, Box<dyn Error>> {
    Ok(run_condition_experiment(&uniform_config(class, n, norm, trials))?[0].mean)
}

fn in_band(x: f64, band: (f64, f64)) -> bool {
    band.0 <= x && x <= band.1
}

fn table_bands() -> Outcome {
    let circ = mean_kappa(Ensemble::Circulant, 256, NormFamily::Two, TABLE_TRIALS)?;
    let toep = mean_kappa(Ensemble::Toeplitz, 256, NormFamily::One, TABLE_TRIALS)?;
    let general = mean_kappa(Ensemble::General, 32, NormFamily::Two, TABLE_TRIALS)?;
    let ratio = run_norm_ratio_experiment(&uniform_config(Ensemble::Circulant, ORDERING_N, NormFamily::Two, TABLE_TRIALS))?[0]
        .mean_ratio;

    // ‖t‖₁/(√n‖t‖) is the circulant ‖A‖₁/‖A‖_F
    let mut s = stream(8);
    let frob_ratio = (0..TABLE_TRIALS)
        .map(|_| {
            let t = uniform_vec(&mut s, ORDERING_N);
            t.iter().map(|x| x.abs()).sum::<f64>() / ((ORDERING_N as f64).sqrt() * euclid(&t))
        })
        .sum::<f64>()
        / TABLE_TRIALS as f64;

    let checks = [
        ("circulant mean κ₂, n=256", circ, in_band(circ, CIRCULANT_KAPPA_BAND), CIRCULANT_KAPPA_BAND),
        ("toeplitz mean κ₁, n=256", toep, in_band(toep, TOEPLITZ_KAPPA1_BAND), TOEPLITZ_KAPPA1_BAND),
        ("general mean κ₂, n=32", general, in_band(general, GENERAL_KAPPA_BAND), GENERAL_KAPPA_BAND),
        (
            "circulant mean ‖A‖₁/‖A‖₂, n=1024",
            ratio,
            (ratio - RATIO_TARGET).abs() <= RATIO_HALF_WIDTH,
            (RATIO_TARGET - RATIO_HALF_WIDTH, RATIO_TARGET + RATIO_HALF_WIDTH),
        ),
    ];
    let failed = checks.iter().filter(|c| !c.2).count();
    let mut report = Report::new(failed == 0, format!("{failed} of {} bands missed, {TABLE_TRIALS} trials each", checks.len()));
    for (label, value, ok, band) in checks {
        report = report.note(format!(
            "{} {label}: {value:.3e} in [{:.3e}, {:.3e}]",
            if ok { "ok  " } else { "MISS" },
            band.0,
            band.1
        ));
    }
    Ok(report.note(format!("observation: circulant mean ‖A‖₁/‖A‖_F, n=1024: {frob_ratio:.3}")))
}

fn cross_class_ordering() -> Outcome {
    let circ = mean_kappa(Ensemble::Circulant, ORDERING_N, NormFamily::One, TABLE_TRIALS)?;
    let toep = mean_kappa(Ensemble::Toeplitz, ORDERING_N, NormFamily::One, TABLE_TRIALS)?;
    let general = mean_kappa(Ensemble::General, ORDERING_N, NormFamily::One, ORDERING_GENERAL_TRIALS)?;
    Ok(Report::new(
        circ < toep,
        format!("n={ORDERING_N}, mean κ₁: circulant {circ:.2e} < toeplitz {toep:.2e}"),
    )
    .note(format!(
        "observation: general mean κ₁ {general:.2e} over {ORDERING_GENERAL_TRIALS} trials (circulant smaller: {})",
        circ < general
    )))
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 3] = [
        &["condition", "--class", "toeplitz", "--sizes", "16,64", "--trials", "100", "--seed", "9"],
        &["ratios", "--class", "circulant", "--sizes", "256,1024", "--trials", "100", "--seed", "9"],
        &["cdf", "--class", "hankel", "--sizes", "16", "--trials", "1000", "--dist", "gaussian", "--seed", "9"],
    ];
    let mut differing = Vec::new();
    for args in runs {
        let mut outputs = Vec::new();
        for workers in ["1", "4"] {
            let o = Command::new(env!("CARGO_BIN_EXE_structnorm")).args(args).args(["--workers", workers]).output()?;
            if !o.status.success() {
                return Err(format!("{args:?} exited with {}", o.status).into());
            }
            outputs.push(o.stdout);
        }
        if outputs[0] != outputs[1] {
            differing.push(args[0]);
        }
    }
    let mut r = Report::new(differing.is_empty(), format!("{} subcommands compared across --workers 1 and 4", runs.len()));
    for d in differing {
        r = r.note(format!("output differs: {d}"));
    }
    Ok(r)
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("frobenius identity", 5, frobenius_identity),
        ("diagonalization", 5, diagonalization),
        ("gohberg-semencul", 30, gohberg_semencul),
        ("norm-bound suites", 60, norm_bounds),
        ("circulant inverse-norm cdf", 60, circulant_inverse_cdf),
        ("cdf dominance", 120, cdf_dominance),
        ("hadamard bound", 30, hadamard),
        ("table bands", 600, table_bands),
        ("cross-class ordering", 600, cross_class_ordering),
        ("determinism", 120, determinism),
    ];
    let mut passed = 0;
    let mut table_time = Duration::ZERO;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        // criteria 8 and 9 share one budget
        let spent = if i == 7 || i == 8 {
            table_time += elapsed;
            table_time
        } else {
            elapsed
        };
        let in_time = spent <= Duration::from_secs(budget);
        let (ok, summary, notes) = match outcome {
            Ok(r) => (r.pass && in_time, r.summary, r.notes),
            Err(e) => (false, format!("error: {e}"), Vec::new()),
        };
        if ok {
            passed += 1;
        }
        println!(
            "criterion {}: {} {name}: {summary} [{:.1}s, budget {budget}s{}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over budget" }
        );
        for n in notes {
            println!("    {n}");
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
