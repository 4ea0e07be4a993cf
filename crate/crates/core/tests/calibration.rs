//! Monte-Carlo checks of estimators, tests and forecasters against synthetic
//! series whose properties are known by construction.

use lrdforecast::evaluation::{rolling_cv, CvConfig};
use lrdforecast::lrd::{
    adf_test, classify_memory, hurst_aggregated_variance, hurst_periodogram, hurst_rescaled_range,
    seasonal_peak_diagnostic, AggVarConfig, MemoryVerdict, CRITICAL_5PCT,
};
use lrdforecast::models::{
    fit_arfima, fit_arima, fit_mean, fit_naive, forecast, ArfimaConfig, ArimaConfig, ModelFamily,
};
use lrdforecast::series::{acf, TimeSeries, TransformSpec};
use lrdforecast::synthgen::{generate, theoretical_acf_arfima0d0, GenSpec};

fn rate(hits: usize, total: usize) -> f64 {
    hits as f64 / total as f64
}

#[test]
fn hurst_estimators_on_fixed_seeds() {
    let wn = generate(&GenSpec::white_noise(8192, 11)).unwrap();
    let h = hurst_aggregated_variance(&wn, AggVarConfig::default()).unwrap().h;
    assert!((0.45..=0.58).contains(&h), "agg-var white noise {h}");
    let h = hurst_rescaled_range(&wn, 8).unwrap().h;
    assert!((0.48..=0.65).contains(&h), "R/S white noise {h}");
    let h = hurst_periodogram(&wn, 0.1).unwrap().h;
    assert!((0.40..=0.60).contains(&h), "periodogram white noise {h}");

    let f8 = generate(&GenSpec::fgn(8192, 12, 0.8)).unwrap();
    let h = hurst_aggregated_variance(&f8, AggVarConfig::default()).unwrap().h;
    assert!((0.70..=0.90).contains(&h), "agg-var fGn 0.8 {h}");
    let h = hurst_rescaled_range(&f8, 8).unwrap().h;
    assert!((0.70..=0.90).contains(&h), "R/S fGn 0.8 {h}");
    let f7 = generate(&GenSpec::fgn(8192, 13, 0.7)).unwrap();
    let h = hurst_periodogram(&f7, 0.1).unwrap().h;
    assert!((0.60..=0.80).contains(&h), "periodogram fGn 0.7 {h}");
}

#[test]
fn adf_decisions_over_seeds() {
    let rw_nonstationary = (0..100)
        .filter(|&s| !adf_test(&generate(&GenSpec::random_walk(2000, 100 + s)).unwrap(), None).unwrap().stationary_at_5pct)
        .count();
    assert!(rate(rw_nonstationary, 100) >= 0.95, "random walk kept in {rw_nonstationary}/100");
    let wn_stationary = (0..100)
        .filter(|&s| adf_test(&generate(&GenSpec::white_noise(2000, 300 + s)).unwrap(), None).unwrap().stationary_at_5pct)
        .count();
    assert!(rate(wn_stationary, 100) >= 0.95, "white noise stationary in {wn_stationary}/100");
}

#[test]
fn adf_critical_value_matches_simulated_null() {
    // empirical 5% quantile of the no-lag statistic over 50,000 random walks
    let mut stats: Vec<f64> = (0..50_000)
        .map(|s| adf_test(&generate(&GenSpec::random_walk(500, 1_000_000 + s)).unwrap(), Some(0)).unwrap().statistic)
        .collect();
    stats.sort_by(f64::total_cmp);
    let q05 = stats[(0.05 * stats.len() as f64) as usize];
    assert!((q05 - CRITICAL_5PCT).abs() <= 0.05, "simulated 5% quantile {q05}");
}

#[test]
fn white_noise_has_no_daily_peaks() {
    let found = (0..50)
        .filter(|&s| {
            let x = generate(&GenSpec::white_noise(2000, 500 + s)).unwrap();
            seasonal_peak_diagnostic(&acf(&x, 108).unwrap(), 24).unwrap().detected
        })
        .count();
    assert!(rate(found, 50) <= 0.10, "detected in {found}/50");
}

#[test]
fn arfima_sample_acf_tracks_theory() {
    let n = 4096;
    let band = 3.0 / (n as f64).sqrt();
    let mut rates = Vec::new();
    for d in [0.1, 0.2, 0.3] {
        let theory = theoretical_acf_arfima0d0(d, 20).unwrap();
        let ok = (0..50)
            .filter(|&s| {
                let r = acf(&generate(&GenSpec::arfima(n, 600 + s, d)).unwrap(), 20).unwrap();
                (1..=20).all(|k| (r.rho[k] - theory[k]).abs() <= band)
            })
            .count();
        println!("d = {d}: sample ACF within band in {ok}/50");
        rates.push((d, rate(ok, 50)));
    }
    assert!(rates.iter().all(|(_, r)| *r >= 0.9), "{rates:?}");
}

#[test]
fn fgn_and_arfima_verdicts_agree_for_long_memory() {
    for s in 0..20 {
        let a = classify_memory(&generate(&GenSpec::arfima(4096, 700 + s, 0.3)).unwrap()).unwrap().verdict;
        let f = classify_memory(&generate(&GenSpec::fgn(4096, 700 + s, 0.8)).unwrap()).unwrap().verdict;
        assert_eq!(a, MemoryVerdict::Lrd);
        assert_eq!(a, f);
    }
}

#[test]
fn arima_recovers_ar1() {
    let mut good_order = 0;
    for s in 0..50 {
        let x = generate(&GenSpec::arma(2000, 800 + s, vec![0.6], vec![])).unwrap();
        let m = fit_arima(&x, ArimaConfig::default()).unwrap();
        assert_eq!(m.spec.d, 0.0);
        if (1..=2).contains(&m.spec.p) && m.spec.q <= 1 {
            good_order += 1;
        }
        if (m.spec.p, m.spec.q) == (1, 0) {
            assert!((m.phi[0] - 0.6).abs() <= 0.07, "phi {}", m.phi[0]);
        }
    }
    assert!(rate(good_order, 50) >= 0.8, "p in 1..=2, q <= 1 in {good_order}/50");
}

#[test]
fn arima_prefers_white_noise_on_white_noise() {
    let zero = (0..50)
        .filter(|&s| {
            let m = fit_arima(&generate(&GenSpec::white_noise(500, 900 + s)).unwrap(), ArimaConfig::default()).unwrap();
            (m.spec.p, m.spec.q) == (0, 0)
        })
        .count();
    assert!(rate(zero, 50) >= 0.6, "(0,0) chosen in {zero}/50");
}

#[test]
fn arfima_d_near_zero_on_white_noise() {
    let small = (0..50)
        .filter(|&s| {
            let m = fit_arfima(&generate(&GenSpec::white_noise(1000, 1100 + s)).unwrap(), ArfimaConfig::default()).unwrap();
            m.spec.d <= 0.1
        })
        .count();
    assert!(rate(small, 50) >= 0.8, "d <= 0.1 in {small}/50");
}

#[test]
fn naive_and_mean_variances_match_simulation() {
    // h-step errors over many independent paths
    let (n, h, paths) = (100, 6, 4000);
    let mut naive_err = vec![0.0; h];
    let mut mean_err = vec![0.0; h];
    let mut naive_pred = vec![0.0; h];
    let mut mean_pred = vec![0.0; h];
    for s in 0..paths {
        let rw = generate(&GenSpec::random_walk(n + h, 20_000 + s)).unwrap();
        let train = TimeSeries::from_values(rw.values()[..n].to_vec()).unwrap();
        let f = forecast(&fit_naive(&train).unwrap(), h, 0.9).unwrap();
        let wn = generate(&GenSpec::white_noise(n + h, 40_000 + s)).unwrap();
        let train_wn = TimeSeries::from_values(wn.values()[..n].to_vec()).unwrap();
        let g = forecast(&fit_mean(&train_wn).unwrap(), h, 0.9).unwrap();
        for k in 0..h {
            naive_err[k] += (rw.values()[n + k] - f.point[k]).powi(2) / paths as f64;
            naive_pred[k] += f.scale_sigma2[k] / paths as f64;
            mean_err[k] += (wn.values()[n + k] - g.point[k]).powi(2) / paths as f64;
            mean_pred[k] += g.scale_sigma2[k] / paths as f64;
        }
    }
    for k in 0..h {
        assert!((naive_err[k] / naive_pred[k] - 1.0).abs() < 0.1, "naive h={} {} vs {}", k + 1, naive_err[k], naive_pred[k]);
        assert!((mean_err[k] / mean_pred[k] - 1.0).abs() < 0.1, "mean h={} {} vs {}", k + 1, mean_err[k], mean_pred[k]);
    }
}

#[test]
fn naive_wins_one_step_on_random_walks() {
    let config = CvConfig { window: 96, max_horizon: 12, step: 12, ..CvConfig::default() };
    let wins = (0..50)
        .filter(|&s| {
            let x = generate(&GenSpec::random_walk(300, 1200 + s).with_offset(100.0)).unwrap();
            let r = rolling_cv(&x, &config).unwrap();
            let naive = r.metrics(ModelFamily::Naive).unwrap().mape[0];
            ModelFamily::ALL.iter().all(|&m| naive <= r.metrics(m).unwrap().mape[0])
        })
        .count();
    assert!(rate(wins, 50) >= 0.8, "NAIVE best at h=1 in {wins}/50");
}

#[test]
fn mean_beats_naive_on_iid_noise() {
    let config = CvConfig {
        window: 96,
        max_horizon: 48,
        step: 4,
        methods: vec![ModelFamily::Naive, ModelFamily::Mean],
        transform: TransformSpec::identity(),
        ..CvConfig::default()
    };
    let x = generate(&GenSpec::white_noise(1000, 1300).with_offset(10.0)).unwrap();
    let r = rolling_cv(&x, &config).unwrap();
    assert!(r.metrics(ModelFamily::Mean).unwrap().mean_mape() < r.metrics(ModelFamily::Naive).unwrap().mean_mape());
}

#[test]
fn experiment_count_arithmetic() {
    let config = CvConfig {
        window: 96,
        max_horizon: 48,
        step: 1,
        methods: vec![ModelFamily::Naive, ModelFamily::Mean],
        ..CvConfig::default()
    };
    let x = generate(&GenSpec::white_noise(300, 1400).with_offset(10.0)).unwrap();
    let r = rolling_cv(&x, &config).unwrap();
    let origins = 300 - 96 - 48 + 1;
    assert_eq!(r.origins, origins);
    assert_eq!(r.experiment_count(), 2 * origins * 48);
}
