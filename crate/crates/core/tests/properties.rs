use proptest::prelude::*;

use lrdforecast::evaluation::{aggregate_reports, improvement, mae, mape, rolling_cv, CvConfig};
use lrdforecast::lrd::{hurst_aggregated_variance, hurst_periodogram, hurst_rescaled_range, AggVarConfig, HurstMethod};
use lrdforecast::models::{
    ar_is_stationary, fit_arfima_order, fit_mean, fit_naive, forecast, frac_diff_coeffs, frac_difference,
    ma_is_invertible, ModelFamily,
};
use lrdforecast::numfmt::format_sig;
use lrdforecast::series::{acf, difference, inverse_transform, transform, TimeSeries, TransformSpec};
use lrdforecast::synthgen::{generate, GenSpec};

fn positive_series(min_len: usize, max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.1f64..1000.0, min_len..max_len)
}

/// Coefficients of Π (1 − z / r_i) for real roots r_i, in the `1 − Σ φ_i z^i` convention.
fn phi_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut poly = vec![1.0];
    for r in roots {
        let mut next = vec![0.0; poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c / r;
        }
        poly = next;
    }
    poly[1..].iter().map(|c| -c).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_cox_round_trip(values in positive_series(2, 60), lambda in -1.0f64..2.0) {
        let x = TimeSeries::from_values(values.clone()).unwrap();
        let back = inverse_transform(&transform(&x, TransformSpec::box_cox(lambda)).unwrap());
        for (a, b) in values.iter().zip(back.values()) {
            prop_assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0));
        }
    }

    #[test]
    fn acf_is_a_correlation(values in prop::collection::vec(-50.0f64..50.0, 10..80)) {
        let x = TimeSeries::from_values(values).unwrap();
        if let Ok(r) = acf(&x, 5) {
            prop_assert_eq!(r.rho[0], 1.0);
            prop_assert!(r.rho.iter().all(|v| v.abs() <= 1.0 + 1e-12));
        }
    }

    #[test]
    fn differencing_shortens_by_order(values in prop::collection::vec(-50.0f64..50.0, 4..40), order in 0usize..3) {
        let x = TimeSeries::from_values(values.clone()).unwrap();
        let d = difference(&x, order).unwrap();
        prop_assert_eq!(d.len(), values.len() - order);
    }

    #[test]
    fn frac_diff_inverse_identity(d in -0.49f64..0.49, len in 8usize..300) {
        let c = frac_diff_coeffs(d, len).unwrap();
        for k in 0..len / 2 {
            let conv: f64 = (0..=k).map(|j| c.pi[j] * c.eta[k - j]).sum();
            let want = if k == 0 { 1.0 } else { 0.0 };
            prop_assert!((conv - want).abs() < 1e-10);
        }
    }

    #[test]
    fn frac_diff_round_trip(values in prop::collection::vec(-10.0f64..10.0, 2..120), d in -0.49f64..0.49) {
        let x = TimeSeries::from_values(values.clone()).unwrap();
        let back = frac_difference(&frac_difference(&x, d).unwrap(), -d).unwrap();
        for (a, b) in values.iter().zip(back.values()) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn real_roots_outside_unit_circle_are_stationary(
        roots in prop::collection::vec((1.01f64..5.0, any::<bool>()), 1..5)
    ) {
        let r: Vec<f64> = roots.iter().map(|(m, neg)| if *neg { -m } else { *m }).collect();
        let phi = phi_from_roots(&r);
        prop_assert!(ar_is_stationary(&phi));
        let theta: Vec<f64> = phi.iter().map(|c| -c).collect();
        prop_assert!(ma_is_invertible(&theta));
    }

    #[test]
    fn a_root_inside_breaks_stationarity(
        roots in prop::collection::vec(1.01f64..5.0, 0..4),
        inside in 0.2f64..0.99,
    ) {
        let mut r = roots;
        r.push(inside);
        prop_assert!(!ar_is_stationary(&phi_from_roots(&r)));
    }

    #[test]
    fn mape_and_improvement_are_scale_free(
        pairs in prop::collection::vec((1.0f64..100.0, 0.0f64..200.0), 1..30),
        scale in 0.01f64..100.0,
    ) {
        let (y, f): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        let ys: Vec<f64> = y.iter().map(|v| v * scale).collect();
        let fs: Vec<f64> = f.iter().map(|v| v * scale).collect();
        let m = mape(&y, &f).unwrap();
        prop_assert!((mape(&ys, &fs).unwrap() - m).abs() <= 1e-9 * m.max(1.0));
        let a = mae(&y, &f).unwrap();
        prop_assert!((mae(&ys, &fs).unwrap() - scale * a).abs() <= 1e-9 * (scale * a).max(1.0));
        prop_assert!(m >= 0.0 && a >= 0.0);
    }

    #[test]
    fn improvement_sign_consistency(a in 0.01f64..100.0, b in 0.01f64..100.0) {
        let ab = improvement(a, b).unwrap();
        let ba = improvement(b, a).unwrap();
        prop_assert!((ab + ba * b / a).abs() < 1e-9 * ab.abs().max(1.0));
    }

    #[test]
    fn sig_formatting_is_idempotent(x in prop::num::f64::NORMAL) {
        let once = format_sig(x);
        let twice = format_sig(once.parse().unwrap());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn naive_and_mean_intervals(values in positive_series(3, 50), h in 1usize..30, level in 0.5f64..0.99) {
        let x = transform(&TimeSeries::from_values(values).unwrap(), TransformSpec::log()).unwrap();
        for model in [fit_naive(&x).unwrap(), fit_mean(&x).unwrap()] {
            let f = forecast(&model, h, level).unwrap();
            for k in 0..h {
                prop_assert!(f.lower[k] > 0.0);
                prop_assert!(f.lower[k] <= f.point[k] && f.point[k] <= f.upper[k]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hurst_slope_relation_is_exact(seed in 0u64..1000, h in 0.55f64..0.9) {
        let x = generate(&GenSpec::fgn(1024, seed, h)).unwrap();
        let estimates = [
            hurst_aggregated_variance(&x, AggVarConfig::default()).unwrap(),
            hurst_rescaled_range(&x, 8).unwrap(),
            hurst_periodogram(&x, 0.1).unwrap(),
        ];
        for e in estimates {
            prop_assert!(e.points.len() >= 4);
            let (lo, hi) = e.method.h_bounds();
            let raw = match e.method {
                HurstMethod::AggregatedVariance => 1.0 + e.slope / 2.0,
                HurstMethod::RescaledRange => e.slope,
                HurstMethod::Periodogram => (1.0 - e.slope) / 2.0,
            };
            prop_assert_eq!(e.h, raw.clamp(lo, hi));
            prop_assert_eq!(e.is_clamped(), raw != e.h);
        }
    }

    #[test]
    fn arfima_intervals_widen_and_stay_bounded(seed in 0u64..1000, d in 0.05f64..0.45) {
        let x = generate(&GenSpec::arfima(120, seed, d)).unwrap();
        let m = fit_arfima_order(&x, 0, 0, None).unwrap();
        let f = forecast(&m, 30, 0.95).unwrap();
        let w = f.widths();
        for k in 1..w.len() {
            prop_assert!(w[k] >= w[k - 1] - 1e-12);
        }
        let dh = m.spec.d;
        let unconditional = m.sigma2 * lrdforecast::synthgen::arfima0d0_variance(dh);
        prop_assert!(f.scale_sigma2.iter().all(|v| *v <= unconditional + 1e-12));
    }

    #[test]
    fn pooling_preserves_shared_signs(seeds in prop::collection::vec(0u64..10_000, 1..4)) {
        let config = CvConfig {
            window: 30,
            max_horizon: 4,
            step: 3,
            methods: vec![ModelFamily::Naive, ModelFamily::Mean],
            ..CvConfig::default()
        };
        let reports: Vec<_> = seeds
            .iter()
            .map(|&s| rolling_cv(&generate(&GenSpec::white_noise(60, s).with_offset(8.0)).unwrap(), &config).unwrap())
            .collect();
        let pooled = aggregate_reports(&reports).unwrap();
        for (a, b) in [(ModelFamily::Naive, ModelFamily::Mean), (ModelFamily::Mean, ModelFamily::Naive)] {
            let signs: Vec<Vec<f64>> = reports
                .iter()
                .map(|r| r.improvement(a, b).unwrap().per_horizon.iter().map(|v| v.unwrap().signum()).collect())
                .collect();
            let first = signs[0][0];
            if signs.iter().flatten().all(|s| *s == first && *s != 0.0) {
                prop_assert_eq!(pooled.improvement(a, b).unwrap().mean.unwrap().signum(), first);
            }
        }
        prop_assert_eq!(pooled.count(), reports.iter().map(|r| r.count()).sum::<usize>());
    }

    #[test]
    fn cv_report_does_not_depend_on_thread_count(seed in 0u64..1000) {
        let x = generate(&GenSpec::white_noise(80, seed).with_offset(8.0)).unwrap();
        let config = CvConfig { window: 30, max_horizon: 5, step: 2, methods: vec![ModelFamily::Naive, ModelFamily::Mean], ..CvConfig::default() };
        let parallel = rolling_cv(&x, &config).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| rolling_cv(&x, &config).unwrap());
        prop_assert_eq!(parallel, serial);
    }
}
