//! ARMA building blocks shared by the ARIMA and ARFIMA fitters.
//!
//! Sign convention: `x_t = Σ φ_i x_{t−i} + e_t + Σ θ_j e_{t−j}`, so the AR
//! polynomial is `1 − φ_1 B − … − φ_p B^p` and the MA polynomial is
//! `1 + θ_1 B + … + θ_q B^q`.

use super::optimize::{bfgs, BfgsOptions};

/// Reflection coefficients must stay this far inside the unit interval.
pub(crate) const ROOT_TOLERANCE: f64 = 1e-6;

/// Step-down (inverse Levinson–Durbin) test: `1 − Σ φ_i z^i` has every root
/// strictly outside the unit circle iff every reflection coefficient has
/// modulus below one.
pub fn ar_is_stationary(phi: &[f64]) -> bool {
    let mut a = phi.to_vec();
    for k in (1..=a.len()).rev() {
        let kappa = a[k - 1];
        if !kappa.is_finite() || kappa.abs() >= 1.0 - ROOT_TOLERANCE {
            return false;
        }
        let denom = 1.0 - kappa * kappa;
        let prev: Vec<f64> = (1..k).map(|j| (a[j - 1] + kappa * a[k - j - 1]) / denom).collect();
        a.truncate(k - 1);
        a.copy_from_slice(&prev);
    }
    true
}

/// `1 + Σ θ_j z^j` has every root outside the unit circle.
pub fn ma_is_invertible(theta: &[f64]) -> bool {
    let neg: Vec<f64> = theta.iter().map(|t| -t).collect();
    ar_is_stationary(&neg)
}

/// Fitted models must keep every AR and MA root at least this far from the origin.
pub(crate) const FIT_ROOT_MODULUS: f64 = 1.01;

/// Every root of `1 − Σ φ_i z^i` and `1 + Σ θ_j z^j` has modulus above
/// `radius`; checked by rescaling `z → radius·z`.
pub(crate) fn roots_outside(phi: &[f64], theta: &[f64], radius: f64) -> bool {
    let scale = |c: &[f64]| -> Vec<f64> { c.iter().enumerate().map(|(i, v)| v * radius.powi(i as i32 + 1)).collect() };
    ar_is_stationary(&scale(phi)) && ma_is_invertible(&scale(theta))
}

/// Maps unconstrained reals onto the stationary AR region through partial
/// autocorrelations `tanh(u_k)` and the Levinson–Durbin recursion.
pub(crate) fn pacf_to_ar(u: &[f64]) -> Vec<f64> {
    let mut phi: Vec<f64> = Vec::with_capacity(u.len());
    for (k, &raw) in u.iter().enumerate() {
        let r = raw.tanh();
        let next: Vec<f64> = (0..k).map(|j| phi[j] - r * phi[k - 1 - j]).collect();
        phi = next;
        phi.push(r);
    }
    phi
}

/// Innovations of an ARMA filter with zero presample values, written into
/// `out`; returns the sum of squares.
pub(crate) fn arma_residuals_into(w: &[f64], phi: &[f64], theta: &[f64], out: &mut Vec<f64>) -> f64 {
    out.clear();
    let mut ss = 0.0;
    for t in 0..w.len() {
        let mut e = w[t];
        for (i, p) in phi.iter().enumerate() {
            if t > i {
                e -= p * w[t - i - 1];
            }
        }
        for (j, th) in theta.iter().enumerate() {
            if t > j {
                e -= th * out[t - j - 1];
            }
        }
        ss += e * e;
        out.push(e);
    }
    ss
}

pub(crate) fn arma_residuals(w: &[f64], phi: &[f64], theta: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(w.len());
    arma_residuals_into(w, phi, theta, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ArmaFit {
    pub phi: Vec<f64>,
    pub theta: Vec<f64>,
    pub css: f64,
}

/// Conditional-sum-of-squares ARMA(p, q) fit of a zero-mean series, starting
/// from zero coefficients.
pub(crate) fn fit_arma_css(w: &[f64], p: usize, q: usize) -> ArmaFit {
    if p + q == 0 {
        return ArmaFit { phi: vec![], theta: vec![], css: w.iter().map(|v| v * v).sum() };
    }
    let split = |u: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let phi = pacf_to_ar(&u[..p]);
        let theta: Vec<f64> = pacf_to_ar(&u[p..]).into_iter().map(|c| -c).collect();
        (phi, theta)
    };
    let buf = std::cell::RefCell::new(Vec::with_capacity(w.len()));
    let objective = |u: &[f64]| {
        let (phi, theta) = split(u);
        arma_residuals_into(w, &phi, &theta, &mut buf.borrow_mut())
    };
    let best = bfgs(objective, vec![0.0; p + q], BfgsOptions::default());
    let (phi, theta) = split(&best.x);
    ArmaFit { phi, theta, css: best.f }
}

/// Multiplies two polynomials given by coefficient vectors, truncating at `len`.
pub(crate) fn poly_mul(a: &[f64], b: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len.min(a.len() + b.len() - 1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Power-series quotient `num / den` to `len` terms; `den[0]` must be 1.
pub(crate) fn poly_div(num: &[f64], den: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    for k in 0..len {
        let mut v = num.get(k).copied().unwrap_or(0.0);
        for j in 1..den.len().min(k + 1) {
            v -= den[j] * out[k - j];
        }
        out[k] = v;
    }
    out
}

pub(crate) fn ar_poly(phi: &[f64]) -> Vec<f64> {
    std::iter::once(1.0).chain(phi.iter().map(|p| -p)).collect()
}

pub(crate) fn ma_poly(theta: &[f64]) -> Vec<f64> {
    std::iter::once(1.0).chain(theta.iter().copied()).collect()
}
