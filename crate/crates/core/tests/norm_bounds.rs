use num_complex::Complex64;
use proptest::prelude::*;
use structnorm::norms::{
    check_norm_relations, circulant_frobenius_norm, circulant_inverse_norms, circulant_norm, circulant_norm_bounds,
    dense_spectral_estimate, f_circulant_scaling_check, matrix_norm, toeplitz_norm, toeplitz_norm_bounds,
};
use structnorm::spectral::FourierPlan;
use structnorm::{FCirculant, Matrix, NormFamily, Toeplitz};
use structnorm_oracles as oracle;

fn euclid(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-1.0f64..1.0, rows * cols).prop_map(move |v| Matrix::from_row_major(rows, cols, v))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=12, 1usize..=12).prop_flat_map(|(r, c)| matrix(r, c))
}

fn toeplitz() -> impl Strategy<Value = Toeplitz> {
    (1usize..=64).prop_flat_map(|n| prop::collection::vec(-1.0f64..1.0, 2 * n - 1)).prop_map(|d| Toeplitz::new(d).unwrap())
}

fn circulant_column() -> impl Strategy<Value = Vec<f64>> {
    (1usize..=64).prop_flat_map(|n| prop::collection::vec(-1.0f64..1.0, n))
}

const SPECTRAL_DOMINATION: &str = "‖Z‖_2 ≤ ‖Z₁‖_2";

fn slack(rhs: f64) -> f64 {
    1e-12 * rhs.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dense_norms_match_oracle(a in any_matrix()) {
        let rows = a.to_rows();
        prop_assert!((matrix_norm(&a, NormFamily::One).unwrap() - oracle::norm1(&rows)).abs() <= 1e-13);
        prop_assert!((matrix_norm(&a, NormFamily::Infinity).unwrap() - oracle::norm_inf(&rows)).abs() <= 1e-13);
        prop_assert!((matrix_norm(&a, NormFamily::Frobenius).unwrap() - oracle::frobenius(&rows)).abs() <= 1e-13);
        let est = dense_spectral_estimate(&a);
        let sigma = oracle::spectral_norm(&rows);
        if est.converged {
            prop_assert!((est.value - sigma).abs() <= 1e-6 * sigma.max(1e-300), "{} vs {sigma}", est.value);
            prop_assert_eq!(matrix_norm(&a, NormFamily::Two).unwrap(), est.value);
        } else {
            prop_assert!(est.lower <= sigma * (1.0 + 1e-12) && sigma <= est.upper * (1.0 + 1e-12));
        }
    }

    #[test]
    fn spectral_estimate_within_frobenius_window(a in any_matrix()) {
        let est = dense_spectral_estimate(&a);
        let fro = oracle::frobenius(&a.to_rows());
        let rho = a.rows().min(a.cols()) as f64;
        prop_assert!(est.value <= fro + slack(fro));
        prop_assert!(fro / rho.sqrt() <= est.value + slack(est.value));
    }

    #[test]
    fn dense_relations_hold(a in any_matrix(), b in (1usize..=12).prop_flat_map(|c| matrix(c, 5))) {
        let r = check_norm_relations(&a, None, None).unwrap();
        prop_assert!(r.all_satisfied(), "{:?}", r.violations().collect::<Vec<_>>());
        if b.rows() == a.cols() {
            let r = check_norm_relations(&a, None, Some(&b)).unwrap();
            prop_assert!(r.all_satisfied(), "{:?}", r.violations().collect::<Vec<_>>());
        }
    }

    #[test]
    fn toeplitz_norms_match_oracle(t in toeplitz()) {
        let rows = t.to_dense().unwrap().to_rows();
        for (family, want) in [
            (NormFamily::One, oracle::norm1(&rows)),
            (NormFamily::Infinity, oracle::norm_inf(&rows)),
            (NormFamily::Frobenius, oracle::frobenius(&rows)),
        ] {
            prop_assert!((toeplitz_norm(&t, family).unwrap() - want).abs() <= 1e-12 * want.max(1.0));
        }
    }

    #[test]
    fn toeplitz_bounds_hold(t in toeplitz()) {
        let r = toeplitz_norm_bounds(&t).unwrap();
        prop_assert!(r.all_satisfied(), "{:?}", r.violations().collect::<Vec<_>>());
        prop_assert!(r.checks().iter().all(|c| c.satisfied));
    }

    #[test]
    fn circulant_bounds_hold(col in circulant_column()) {
        let z = FCirculant::circulant(col).unwrap();
        let r = circulant_norm_bounds(&z).unwrap();
        for c in r.checks().iter().filter(|c| c.label != SPECTRAL_DOMINATION) {
            prop_assert!(c.satisfied, "{} : {} vs {}", c.label, c.left, c.right);
        }
    }

    #[test]
    fn triangular_part_is_dominated(col in circulant_column()) {
        let n = col.len();
        let full = FCirculant::circulant(col.clone()).unwrap().to_dense().unwrap().to_rows();
        let lower: oracle::Rows = (0..n).map(|i| (0..n).map(|j| if i >= j { col[i - j] } else { 0.0 }).collect()).collect();
        prop_assert!(oracle::norm1(&lower) <= oracle::norm1(&full));
        prop_assert!(oracle::norm_inf(&lower) <= oracle::norm_inf(&full));
        prop_assert!(oracle::frobenius(&lower) <= oracle::frobenius(&full));
    }

    #[test]
    fn circulant_norms_match_oracle(col in (1usize..=24).prop_flat_map(|n| prop::collection::vec(-1.0f64..1.0, n))) {
        let z = FCirculant::circulant(col).unwrap();
        let rows = z.to_dense().unwrap().to_rows();
        let sigma = oracle::spectral_norm(&rows);
        prop_assert!((circulant_norm(&z, NormFamily::Two).unwrap() - sigma).abs() <= 1e-10 * sigma.max(1.0));
        prop_assert!((circulant_norm(&z, NormFamily::One).unwrap() - oracle::norm1(&rows)).abs() <= 1e-12);
        if let (Ok((fro, two)), Some(inv)) = (circulant_inverse_norms(&z), oracle::inverse(&rows)) {
            let k = oracle::norm1(&rows) * oracle::norm1(&inv);
            prop_assert!((fro - oracle::frobenius(&inv)).abs() <= 1e-10 * k * oracle::frobenius(&inv));
            prop_assert!((two - oracle::spectral_norm(&inv)).abs() <= 1e-8 * k * two);
        }
    }

    #[test]
    fn diagonally_scaled_comparison_holds(col in (2usize..=16).prop_flat_map(|n| prop::collection::vec(-1.0f64..1.0, n)),
                                          f in prop_oneof![0.25f64..0.8, 1.25f64..4.0, -4.0f64..-1.25, -0.8f64..-0.25]) {
        let z = FCirculant::new(col, f).unwrap();
        let r = f_circulant_scaling_check(&z).unwrap();
        for c in r.checks().iter().filter(|c| !c.gating) {
            prop_assert!(c.satisfied, "{} : {} vs {}", c.label, c.left, c.right);
        }
    }

    #[test]
    fn frobenius_is_unitarily_invariant(a in (1usize..=32).prop_flat_map(|n| matrix(n, n))) {
        // B = (1/n)·Ω A Ω, through the transform on columns then rows
        let n = a.rows();
        let plan = FourierPlan::<f64>::new(n).unwrap();
        let mut b: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j).iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
        for col in &mut b {
            plan.forward(col);
        }
        let mut fro2 = 0.0;
        for i in 0..n {
            let mut row: Vec<Complex64> = (0..n).map(|j| b[j][i]).collect();
            plan.forward(&mut row);
            fro2 += row.iter().map(|z| z.norm_sqr()).sum::<f64>();
        }
        let fro = fro2.sqrt() / n as f64;
        let want = matrix_norm(&a, NormFamily::Frobenius).unwrap();
        prop_assert!((fro - want).abs() <= 1e-12 * want.max(1.0));
    }
}

#[test]
fn frobenius_identity_on_500_circulants() {
    let mut state = 0x853c_49e6_748f_ea9bu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..500 {
        let n = 2 + (next() % 1023) as usize;
        let t: Vec<f64> = (0..n).map(|_| (next() >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0).collect();
        let want = (n as f64).sqrt() * euclid(&t);
        let got = circulant_frobenius_norm(&FCirculant::circulant(t).unwrap()).unwrap();
        assert!((got - want).abs() <= 1e-12 * want, "n={n}: {got} vs {want}");
    }
}

#[test]
fn triangular_part_can_exceed_circulant_in_spectral_norm() {
    let t = vec![0.16357245482557176, -0.3187910056823786, 0.0];
    let n = t.len();
    let lower: oracle::Rows = (0..n).map(|i| (0..n).map(|j| if i >= j { t[i - j] } else { 0.0 }).collect()).collect();
    let circ = FCirculant::circulant(t).unwrap();
    let (l2, c2) = (oracle::spectral_norm(&lower), oracle::spectral_norm(&circ.to_dense().unwrap().to_rows()));
    assert!(l2 > c2 * 1.02, "{l2} vs {c2}");
    let r = circulant_norm_bounds(&circ).unwrap();
    let check = r.get(SPECTRAL_DOMINATION).unwrap();
    assert!(check.gating && !check.satisfied);
    assert!((check.left - l2).abs() < 1e-9 && (check.right - c2).abs() < 1e-12);
}
