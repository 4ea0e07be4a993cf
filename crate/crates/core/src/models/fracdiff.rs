//! Binomial expansions of the fractional differencing operator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Coefficients of `(1 − B)^d` (`pi`) and `(1 − B)^{−d}` (`eta`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FracDiffCoeffs {
    pub d: f64,
    pub pi: Vec<f64>,
    pub eta: Vec<f64>,
}

/// `pi[j] = pi[j−1]·(j−1−d)/j` and `eta[j] = eta[j−1]·(j−1+d)/j`; the ratio
/// form of Γ(j+d)/(Γ(j+1)Γ(d)) that never overflows.
/// Accepts `|d| ≤ 1`; `d = 1` reproduces first differencing.
pub fn frac_diff_coeffs(d: f64, length: usize) -> Result<FracDiffCoeffs> {
    if !(d.abs() <= 1.0) {
        return Err(Error::InvalidD(d));
    }
    if length == 0 {
        return Err(Error::SeriesTooShort { needed: 1, got: 0 });
    }
    Ok(FracDiffCoeffs { d, pi: pi_weights(d, length), eta: pi_weights(-d, length) })
}

/// Expansion of `(1 − B)^d` to `length` terms, for any real `d`.
pub(crate) fn pi_weights(d: f64, length: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(length);
    if length == 0 {
        return w;
    }
    w.push(1.0);
    for j in 1..length {
        let prev = w[j - 1];
        w.push(prev * (j as f64 - 1.0 - d) / j as f64);
    }
    w
}

/// Applies `(1 − B)^d` with the expansion truncated at the available history:
/// `y_t = Σ_{j=0}^{t} pi[j]·x_{t−j}`.
pub fn frac_difference(series: &TimeSeries, d: f64) -> Result<TimeSeries> {
    if !(d.abs() <= 1.0) {
        return Err(Error::InvalidD(d));
    }
    Ok(series.derive(frac_difference_values(series.values(), d)))
}

pub(crate) fn frac_difference_values(x: &[f64], d: f64) -> Vec<f64> {
    let pi = pi_weights(d, x.len());
    apply_lower_toeplitz(&pi, x)
}

/// `y_t = Σ_{j=0}^{t} w[j]·x_{t−j}` in a fixed summation order.
pub(crate) fn apply_lower_toeplitz(w: &[f64], x: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|t| {
            let mut acc = 0.0;
            for j in 0..=t.min(w.len() - 1) {
                acc += w[j] * x[t - j];
            }
            acc
        })
        .collect()
}
