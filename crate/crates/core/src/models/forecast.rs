use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use super::arma::{ar_poly, arma_residuals, ma_poly, poly_div, poly_mul};
use super::fracdiff::{frac_difference_values, pi_weights};
use super::{FittedModel, ModelFamily};
use crate::error::{Error, Result};
use crate::series::difference_values;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForecastResult {
    pub horizons: Vec<usize>,
    /// Point forecasts on the original scale.
    pub point: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub level: f64,
    /// MA(∞) weights ψ_0..ψ_{h−1} on the transformed scale.
    pub psi: Vec<f64>,
    /// Forecast variance per horizon on the transformed scale.
    pub scale_sigma2: Vec<f64>,
    /// Point forecasts on the transformed scale.
    pub point_transformed: Vec<f64>,
}

impl ForecastResult {
    pub fn widths(&self) -> Vec<f64> {
        self.upper.iter().zip(&self.lower).map(|(u, l)| u - l).collect()
    }
}

/// Normal quantile for a central interval of probability `level`.
pub(crate) fn z_value(level: f64) -> f64 {
    Normal::new(0.0, 1.0).expect("standard normal").inverse_cdf(0.5 + level / 2.0)
}

/// h-step forecasts with Gaussian intervals built on the transformed scale and
/// mapped back through the model's transform.
pub fn forecast(model: &FittedModel, h: usize, level: f64) -> Result<ForecastResult> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidLevel(level));
    }
    if h == 0 {
        return Err(Error::SeriesTooShort { needed: 1, got: 0 });
    }
    if model.history.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (point_t, psi, var) = match model.spec.family {
        ModelFamily::Naive => {
            let var = (1..=h).map(|k| model.sigma2 * k as f64).collect();
            (vec![model.mean; h], vec![1.0; h], var)
        }
        ModelFamily::Mean => {
            let v = model.sigma2 * (1.0 + 1.0 / model.n as f64);
            let mut psi = vec![0.0; h];
            psi[0] = 1.0;
            (vec![model.mean; h], psi, vec![v; h])
        }
        ModelFamily::Arima | ModelFamily::Arfima => linear_forecast(model, h),
    };
    let z = z_value(level);
    let t = model.transform;
    let mut point = Vec::with_capacity(h);
    let mut lower = Vec::with_capacity(h);
    let mut upper = Vec::with_capacity(h);
    for k in 0..h {
        let half = z * var[k].max(0.0).sqrt();
        point.push(t.inverse(point_t[k]));
        lower.push(t.inverse(point_t[k] - half));
        upper.push(t.inverse(point_t[k] + half));
    }
    Ok(ForecastResult {
        horizons: (1..=h).collect(),
        point,
        lower,
        upper,
        level,
        psi,
        scale_sigma2: var,
        point_transformed: point_t,
    })
}

/// Differencing operator of the model as a power series of length `len`:
/// `(1 − B)^d`, exact for integer d and truncated for fractional d.
fn differencing_operator(model: &FittedModel, len: usize) -> Vec<f64> {
    match model.spec.family {
        ModelFamily::Arima => {
            let d = model.spec.d as usize;
            let mut op = pi_weights(d as f64, d + 1);
            op.truncate(len.max(1));
            op
        }
        _ => pi_weights(model.spec.d, len),
    }
}

/// Point forecasts and variances for ARIMA/ARFIMA.
///
/// The history is mean-adjusted and differenced (integer or fractional, with
/// zero presample), the ARMA part is forecast from its conditional
/// innovations, and the differencing is undone recursively. This equals the
/// predictor built from the AR(∞) weights `φ(B)(1−B)^d/θ(B)` truncated at the
/// available history.
fn linear_forecast(model: &FittedModel, h: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let x = &model.history;
    let n = x.len();
    let mu = if model.spec.include_mean { model.mean } else { 0.0 };
    let z: Vec<f64> = x.iter().map(|v| v - mu).collect();

    let (u, offset) = match model.spec.family {
        ModelFamily::Arima => {
            let d = model.spec.d as usize;
            (difference_values(&z, d), d)
        }
        _ => (frac_difference_values(&z, model.spec.d), 0),
    };
    let e = arma_residuals(&u, &model.phi, &model.theta);

    // ARMA forecasts of the differenced series
    let m = u.len();
    let mut u_ext = u.clone();
    for k in 0..h {
        let t = m + k;
        let mut v = 0.0;
        for (i, p) in model.phi.iter().enumerate() {
            if t > i {
                v += p * u_ext[t - i - 1];
            }
        }
        for (j, th) in model.theta.iter().enumerate() {
            // future innovations are zero
            if t > j && t - j - 1 < m {
                v += th * e[t - j - 1];
            }
        }
        u_ext.push(v);
    }

    // undo the differencing: z_t = u_t − Σ_{j≥1} D_j z_{t−j}
    let op = differencing_operator(model, n + h);
    let mut z_ext = z;
    for k in 0..h {
        let t = n + k;
        let mut v = u_ext[t - offset];
        for j in 1..op.len().min(t + 1) {
            v -= op[j] * z_ext[t - j];
        }
        z_ext.push(v);
    }
    let point: Vec<f64> = z_ext[n..].iter().map(|v| v + mu).collect();

    // ψ(B) = θ(B) / (φ(B)·(1−B)^d)
    let den = poly_mul(&ar_poly(&model.phi), &differencing_operator(model, h), h);
    let psi = poly_div(&ma_poly(&model.theta), &den, h);
    let mut acc = 0.0;
    let var = psi
        .iter()
        .map(|p| {
            acc += p * p;
            model.sigma2 * acc
        })
        .collect();
    (point, psi, var)
}
