//! Long-range dependence diagnostics: Hurst estimators, the ADF test, the
//! median-vote memory classification and the daily-seasonality check.

mod adf;
mod hurst;
pub(crate) mod regression;
mod seasonal;

pub use adf::{
    adf_test, schwert_lags, AdfResult, CriticalValues, ADF_MIN_LEN, CRITICAL_10PCT, CRITICAL_1PCT, CRITICAL_5PCT,
};
pub(crate) use adf::adf_values;
pub use hurst::{
    hurst_aggregated_variance, hurst_periodogram, hurst_rescaled_range, periodogram, AggVarConfig, EstimateWarning,
    HurstEstimate, HurstMethod, DEFAULT_FREQUENCY_FRACTION, PERIODOGRAM_MIN_LEN, RS_MIN_BLOCK,
};
pub use seasonal::{seasonal_peak_diagnostic, SeasonalPeaks};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{acf, TimeSeries};

pub const CLASSIFY_MIN_LEN: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MemoryVerdict {
    Lrd,
    Srd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemoryClassification {
    pub verdict: MemoryVerdict,
    /// Aggregated variance, rescaled range and periodogram, in that order.
    pub h_by_method: Vec<HurstEstimate>,
    pub h_median: f64,
}

impl MemoryClassification {
    pub fn estimate(&self, method: HurstMethod) -> Option<&HurstEstimate> {
        self.h_by_method.iter().find(|e| e.method == method)
    }
}

/// Runs the three estimators with their defaults and votes by the median Ĥ.
pub fn classify_memory(series: &TimeSeries) -> Result<MemoryClassification> {
    if series.len() < CLASSIFY_MIN_LEN {
        return Err(Error::SeriesTooShort { needed: CLASSIFY_MIN_LEN, got: series.len() });
    }
    let mut h_by_method = vec![
        hurst_aggregated_variance(series, AggVarConfig::default())?,
        hurst_rescaled_range(series, RS_MIN_BLOCK)?,
        hurst_periodogram(series, DEFAULT_FREQUENCY_FRACTION)?,
    ];
    h_by_method.sort_by_key(|e| e.method);
    let mut hs: Vec<f64> = h_by_method.iter().map(|e| e.h).collect();
    hs.sort_by(f64::total_cmp);
    let h_median = hs[1];
    let verdict = if h_median > 0.5 { MemoryVerdict::Lrd } else { MemoryVerdict::Srd };
    Ok(MemoryClassification { verdict, h_by_method, h_median })
}

/// Everything the `analyze` command reports for one series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub label: String,
    pub n: usize,
    pub classification: MemoryClassification,
    pub adf: AdfResult,
    pub seasonal_peaks: Option<SeasonalPeaks>,
}

/// Full diagnostic pass: memory classification, ADF on the levels and the
/// daily-peak check over four days of lags (when the series is long enough).
/// The ACF runs half a day past the fourth multiple so that it can be
/// checked for a local maximum too.
pub fn analyze(series: &TimeSeries) -> Result<AnalysisReport> {
    let classification = classify_memory(series)?;
    let adf = adf_test(series, None)?;
    let daily = series.daily_lag();
    let max_lag = 4 * daily + daily / 2;
    let seasonal_peaks = if max_lag < series.len() && daily >= 2 {
        Some(seasonal_peak_diagnostic(&acf(series, max_lag)?, daily)?)
    } else {
        None
    };
    Ok(AnalysisReport { label: series.label().to_string(), n: series.len(), classification, adf, seasonal_peaks })
}
