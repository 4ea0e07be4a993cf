//! Hurst exponent estimators: aggregated variance, rescaled range and the
//! low-frequency periodogram slope.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::regression::loglog_fit;
use crate::error::{Error, Result};
use crate::series::{mean, sample_variance, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurstMethod {
    AggregatedVariance,
    RescaledRange,
    Periodogram,
}

impl HurstMethod {
    pub fn name(self) -> &'static str {
        match self {
            HurstMethod::AggregatedVariance => "aggregated_variance",
            HurstMethod::RescaledRange => "rescaled_range",
            HurstMethod::Periodogram => "periodogram",
        }
    }

    /// Hurst exponent implied by a fitted log–log slope.
    pub fn h_from_slope(self, slope: f64) -> f64 {
        match self {
            HurstMethod::AggregatedVariance => 1.0 + slope / 2.0,
            HurstMethod::RescaledRange => slope,
            HurstMethod::Periodogram => (1.0 - slope) / 2.0,
        }
    }

    /// Range the reported estimate is clamped to.
    pub fn h_bounds(self) -> (f64, f64) {
        match self {
            HurstMethod::Periodogram => (H_FLOOR, 1.2),
            _ => (H_FLOOR, 1.0 - H_FLOOR),
        }
    }
}

const H_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EstimateWarning {
    /// The raw estimate fell outside the method's range and was clamped.
    Clamped { raw: f64 },
    /// Every block at this scale had zero spread; the scale was dropped.
    DegenerateScale { scale: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HurstEstimate {
    pub method: HurstMethod,
    pub h: f64,
    pub slope: f64,
    pub intercept: f64,
    /// (scale or frequency, statistic) pairs entering the regression.
    pub points: Vec<(f64, f64)>,
    pub r_squared: f64,
    pub warnings: Vec<EstimateWarning>,
}

impl HurstEstimate {
    fn from_points(method: HurstMethod, points: Vec<(f64, f64)>, mut warnings: Vec<EstimateWarning>) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::DegenerateScale);
        }
        let fit = loglog_fit(&points).ok_or(Error::DegenerateScale)?;
        let raw = method.h_from_slope(fit.slope);
        let (lo, hi) = method.h_bounds();
        let h = raw.clamp(lo, hi);
        if h != raw {
            warnings.push(EstimateWarning::Clamped { raw });
        }
        Ok(Self { method, h, slope: fit.slope, intercept: fit.intercept, points, r_squared: fit.r_squared, warnings })
    }

    pub fn is_clamped(&self) -> bool {
        self.warnings.iter().any(|w| matches!(w, EstimateWarning::Clamped { .. }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggVarConfig {
    /// Smallest block size m.
    pub min_block: usize,
    /// Number of log-spaced block sizes before de-duplication.
    pub scales: usize,
}

impl Default for AggVarConfig {
    fn default() -> Self {
        Self { min_block: 2, scales: 20 }
    }
}

/// Log-spaced block sizes in `[min_block, n / 4]`, duplicates removed.
pub(crate) fn aggvar_block_sizes(n: usize, min_block: usize, scales: usize) -> Vec<usize> {
    let max_block = n / 4;
    if max_block < min_block || scales == 0 {
        return Vec::new();
    }
    let (lo, hi) = ((min_block as f64).ln(), (max_block as f64).ln());
    let mut sizes: Vec<usize> = (0..scales)
        .map(|i| {
            let t = if scales == 1 { 0.0 } else { i as f64 / (scales - 1) as f64 };
            ((lo + t * (hi - lo)).exp().round() as usize).clamp(min_block, max_block)
        })
        .collect();
    sizes.dedup();
    sizes
}

pub fn hurst_aggregated_variance(series: &TimeSeries, config: AggVarConfig) -> Result<HurstEstimate> {
    let x = series.values();
    let n = x.len();
    let min_block = config.min_block.max(1);
    if n < 4 * min_block {
        return Err(Error::SeriesTooShort { needed: 4 * min_block, got: n });
    }
    if sample_variance(x) <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let sizes = aggvar_block_sizes(n, min_block, config.scales);
    let mut points = Vec::with_capacity(sizes.len());
    let mut warnings = Vec::new();
    for m in sizes {
        let means: Vec<f64> = x.chunks_exact(m).map(mean).collect();
        let v = sample_variance(&means);
        if v > 0.0 {
            points.push((m as f64, v));
        } else {
            warnings.push(EstimateWarning::DegenerateScale { scale: m });
        }
    }
    if points.is_empty() {
        return Err(Error::ZeroVariance);
    }
    if points.len() < 4 {
        return Err(Error::SeriesTooShort { needed: 16 * min_block, got: n });
    }
    HurstEstimate::from_points(HurstMethod::AggregatedVariance, points, warnings)
}

pub const RS_MIN_BLOCK: usize = 8;

/// R/S of one block: range of mean-adjusted partial sums over the block's
/// standard deviation. `None` when the block is constant.
fn rescaled_range(block: &[f64]) -> Option<f64> {
    let m = mean(block);
    let (mut cum, mut lo, mut hi, mut ss) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &v in block {
        let dev = v - m;
        cum += dev;
        lo = lo.min(cum);
        hi = hi.max(cum);
        ss += dev * dev;
    }
    let s = (ss / block.len() as f64).sqrt();
    if s <= 0.0 || !s.is_finite() {
        None
    } else {
        Some((hi - lo) / s)
    }
}

/// Classical R/S with block lengths N, N/2, N/4, … down to `min_block`.
pub fn hurst_rescaled_range(series: &TimeSeries, min_block: usize) -> Result<HurstEstimate> {
    let x = series.values();
    let n = x.len();
    let min_block = min_block.max(2);
    if n < 2 * min_block {
        return Err(Error::SeriesTooShort { needed: 2 * min_block, got: n });
    }
    let mut points = Vec::new();
    let mut warnings = Vec::new();
    let mut size = n;
    while size >= min_block {
        let stats: Vec<f64> = x.chunks_exact(size).filter_map(rescaled_range).collect();
        if stats.is_empty() {
            warnings.push(EstimateWarning::DegenerateScale { scale: size });
        } else {
            points.push((size as f64, mean(&stats)));
        }
        size /= 2;
    }
    if points.is_empty() {
        return Err(Error::DegenerateScale);
    }
    if points.len() < 4 {
        return Err(Error::SeriesTooShort { needed: 8 * min_block, got: n });
    }
    HurstEstimate::from_points(HurstMethod::RescaledRange, points, warnings)
}

pub const PERIODOGRAM_MIN_LEN: usize = 64;
pub const DEFAULT_FREQUENCY_FRACTION: f64 = 0.10;

/// Raw periodogram `I(λ_k) = |Σ x_j e^{i j λ_k}|² / (2πN)` of the mean-removed
/// series at Fourier frequencies `λ_k = 2πk/N`, `k = 1..=count`.
pub fn periodogram(x: &[f64], count: usize) -> Vec<(f64, f64)> {
    let n = x.len();
    let m = mean(x);
    let mut buf: Vec<Complex<f64>> = x.iter().map(|v| Complex::new(v - m, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let norm = 2.0 * std::f64::consts::PI * n as f64;
    (1..=count.min(n / 2))
        .map(|k| (2.0 * std::f64::consts::PI * k as f64 / n as f64, buf[k].norm_sqr() / norm))
        .collect()
}

pub fn hurst_periodogram(series: &TimeSeries, frequency_fraction: f64) -> Result<HurstEstimate> {
    let x = series.values();
    let n = x.len();
    if !(frequency_fraction > 0.0 && frequency_fraction <= 0.5) {
        return Err(Error::InvalidSpec(format!("frequency fraction {frequency_fraction} outside (0, 0.5]")));
    }
    if n < PERIODOGRAM_MIN_LEN {
        return Err(Error::SeriesTooShort { needed: PERIODOGRAM_MIN_LEN, got: n });
    }
    if sample_variance(x) <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let count = (frequency_fraction * n as f64 / 2.0).floor() as usize;
    if count < 4 {
        let needed = (8.0 / frequency_fraction).ceil() as usize;
        return Err(Error::SeriesTooShort { needed, got: n });
    }
    let mut warnings = Vec::new();
    let points: Vec<(f64, f64)> = periodogram(x, count)
        .into_iter()
        .filter(|&(lambda, i)| {
            if i > 0.0 {
                true
            } else {
                warnings.push(EstimateWarning::DegenerateScale { scale: (lambda * n as f64 / std::f64::consts::TAU).round() as usize });
                false
            }
        })
        .collect();
    HurstEstimate::from_points(HurstMethod::Periodogram, points, warnings)
}
