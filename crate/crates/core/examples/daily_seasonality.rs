//! Look for daily peaks in the autocorrelation of hourly series.
//!
//! cargo run --release --example daily_seasonality

use lrdforecast::lrd::{analyze, seasonal_peak_diagnostic};
use lrdforecast::series::acf;
use lrdforecast::synthgen::{generate, GenSpec};
use lrdforecast::TimeSeries;

fn hourly(values: Vec<f64>, label: &str) -> lrdforecast::Result<TimeSeries> {
    TimeSeries::new(values, 0, 3600.0, label)
}

fn main() -> lrdforecast::Result<()> {
    let noise = generate(&GenSpec::white_noise(24 * 60, 5))?;
    let cycle: Vec<f64> = noise
        .values()
        .iter()
        .enumerate()
        .map(|(t, e)| 100.0 + 8.0 * (2.0 * std::f64::consts::PI * t as f64 / 24.0).sin() + 3.0 * e)
        .collect();
    let flat: Vec<f64> = noise.values().iter().map(|e| 100.0 + 3.0 * e).collect();

    for series in [hourly(cycle, "daily cycle")?, hourly(flat, "no cycle")?] {
        let daily = series.daily_lag();
        let r = acf(&series, 4 * daily + daily / 2)?;
        let peaks = seasonal_peak_diagnostic(&r, daily)?;
        println!(
            "{:<12} daily lag {daily}: detected {}  checked {:?}  peaks {:?}",
            series.label(),
            peaks.detected,
            peaks.checked,
            peaks.peak_lags
        );
    }

    // the full per-series analysis bundles memory, stationarity and seasonality
    let x = generate(&GenSpec::arfima(24 * 60, 5, 0.3).with_offset(50.0))?;
    let report = analyze(&hourly(x.values().to_vec(), "arfima")?)?;
    println!(
        "\n{}: n {}, verdict {:?}, median H {:.3}, ADF tau {:.2}, daily peaks {:?}",
        report.label,
        report.n,
        report.classification.verdict,
        report.classification.h_median,
        report.adf.statistic,
        report.seasonal_peaks.map(|p| p.detected)
    );
    Ok(())
}
