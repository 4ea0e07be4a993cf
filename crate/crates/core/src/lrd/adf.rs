//! Augmented Dickey–Fuller unit-root test (constant, no trend).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

pub const ADF_MIN_LEN: usize = 25;

/// Asymptotic Dickey–Fuller critical values for the regression with a
/// constant and no trend (MacKinnon 2010, τ_c).
pub const CRITICAL_1PCT: f64 = -3.43035;
pub const CRITICAL_5PCT: f64 = -2.86154;
pub const CRITICAL_10PCT: f64 = -2.56677;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalValues {
    #[serde(rename = "1%")]
    pub one_pct: f64,
    #[serde(rename = "5%")]
    pub five_pct: f64,
    #[serde(rename = "10%")]
    pub ten_pct: f64,
}

impl Default for CriticalValues {
    fn default() -> Self {
        Self { one_pct: CRITICAL_1PCT, five_pct: CRITICAL_5PCT, ten_pct: CRITICAL_10PCT }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdfResult {
    /// t-ratio of the lagged level coefficient.
    pub statistic: f64,
    pub lags_used: usize,
    pub critical_values: CriticalValues,
    pub stationary_at_5pct: bool,
    /// Coefficient of y_{t-1}.
    pub phi: f64,
    pub intercept: f64,
    /// Coefficients of the lagged differences.
    pub betas: Vec<f64>,
    pub nobs: usize,
}

/// Schwert's rule ⌊12 (N/100)^{1/4}⌋.
pub fn schwert_lags(n: usize) -> usize {
    (12.0 * (n as f64 / 100.0).powf(0.25)).floor() as usize
}

pub fn adf_test(series: &TimeSeries, max_lag: Option<usize>) -> Result<AdfResult> {
    adf_values(series.values(), max_lag)
}

pub(crate) fn adf_values(y: &[f64], max_lag: Option<usize>) -> Result<AdfResult> {
    let n = y.len();
    if n < ADF_MIN_LEN {
        return Err(Error::SeriesTooShort { needed: ADF_MIN_LEN, got: n });
    }
    let k = max_lag.unwrap_or_else(|| schwert_lags(n));
    let cols = k + 2;
    // rows t = k+1 .. n-1 of the regression on dy[t] = y[t] - y[t-1]
    let nobs = (n - 1).saturating_sub(k);
    if nobs < cols + 2 {
        return Err(Error::SeriesTooShort { needed: 2 * k + 5, got: n });
    }
    let dy: Vec<f64> = y.windows(2).map(|w| w[1] - w[0]).collect();
    let x = DMatrix::from_fn(nobs, cols, |r, c| {
        let t = r + k + 1;
        match c {
            0 => 1.0,
            1 => y[t - 1],
            j => dy[t - 1 - (j - 1)],
        }
    });
    let target = DVector::from_fn(nobs, |r, _| dy[r + k]);

    let svd = x.clone().svd(true, true);
    let sv = &svd.singular_values;
    let smax = sv.max();
    let smin = sv.min();
    if !(smax > 0.0) || smin <= smax * 1e-10 {
        return Err(Error::SingularRegression);
    }
    let u = svd.u.as_ref().expect("u requested");
    let v_t = svd.v_t.as_ref().expect("v_t requested");
    let uty = u.transpose() * &target;
    let scaled = DVector::from_fn(cols, |i, _| uty[i] / sv[i]);
    let coef = v_t.transpose() * scaled;

    let resid = &target - &x * &coef;
    let rss = resid.norm_squared();
    let s2 = rss / (nobs - cols) as f64;
    // [(X'X)^{-1}]_{11} = Σ_i V[1,i]^2 / σ_i^2
    let var_phi: f64 = (0..cols).map(|i| (v_t[(i, 1)] / sv[i]).powi(2)).sum::<f64>() * s2;
    if !(var_phi > 0.0) {
        return Err(Error::SingularRegression);
    }
    let statistic = coef[1] / var_phi.sqrt();
    let critical_values = CriticalValues::default();
    Ok(AdfResult {
        statistic,
        lags_used: k,
        stationary_at_5pct: statistic < critical_values.five_pct,
        critical_values,
        phi: coef[1],
        intercept: coef[0],
        betas: coef.iter().skip(2).copied().collect(),
        nobs,
    })
}
