use serde::{Deserialize, Serialize};

use super::arma::{arma_residuals, fit_arma_css, roots_outside, ArmaFit, FIT_ROOT_MODULUS};
use super::fracdiff::frac_difference_values;
use super::optimize::golden_section;
use super::{FittedModel, ModelFamily, ModelSpec};
use crate::error::{Error, Result};
use crate::lrd::adf_values;
use crate::series::{difference_values, mean, sample_variance, TimeSeries, TransformSpec};

/// Upper end of the ARFIMA memory-parameter search.
pub const D_MAX: f64 = 0.4999;
const D_GRID_STEP: f64 = 0.05;
const D_GOLDEN_TOL: f64 = 1e-3;

pub const ARIMA_MIN_LEN: usize = 30;
pub const ARFIMA_MIN_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ArimaConfig {
    pub max_p: usize,
    pub max_q: usize,
    pub max_d: usize,
}

impl Default for ArimaConfig {
    fn default() -> Self {
        Self { max_p: 5, max_q: 5, max_d: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ArfimaConfig {
    pub max_p: usize,
    pub max_q: usize,
}

impl Default for ArfimaConfig {
    fn default() -> Self {
        Self { max_p: 2, max_q: 2 }
    }
}

/// Small-sample corrected AIC:
/// `−2·loglik + 2(p+q+1+extra)·n / (n − p − q − 2 − extra)`.
pub fn aicc(loglik: f64, n: usize, p: usize, q: usize, extra_params: usize) -> Result<f64> {
    let k = p + q + 1 + extra_params;
    if n <= k + 1 {
        return Err(Error::DegenerateSampleSize { n, params: k });
    }
    Ok(-2.0 * loglik + 2.0 * k as f64 * n as f64 / (n - k - 1) as f64)
}

fn gaussian_loglik(css: f64, n: usize) -> f64 {
    let sigma2 = css / n as f64;
    -0.5 * n as f64 * ((2.0 * std::f64::consts::PI * sigma2).ln() + 1.0)
}

fn transform_of(series: &TimeSeries) -> TransformSpec {
    series.transform_spec().unwrap_or(TransformSpec::identity())
}

fn require_len(series: &TimeSeries, needed: usize) -> Result<()> {
    if series.len() < needed {
        Err(Error::SeriesTooShort { needed, got: series.len() })
    } else {
        Ok(())
    }
}

/// Last observed value carried forward.
pub fn fit_naive(series: &TimeSeries) -> Result<FittedModel> {
    require_len(series, 2)?;
    let x = series.values();
    let residuals: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(FittedModel {
        spec: ModelSpec { family: ModelFamily::Naive, p: 0, d: 0.0, q: 0, include_mean: false },
        phi: vec![],
        theta: vec![],
        mean: x[x.len() - 1],
        sigma2: sample_variance(&residuals),
        residuals,
        aicc: None,
        loglik: None,
        transform: transform_of(series),
        n: x.len(),
        history: x.to_vec(),
    })
}

/// Sample mean of the window.
pub fn fit_mean(series: &TimeSeries) -> Result<FittedModel> {
    require_len(series, 2)?;
    let x = series.values();
    let mu = mean(x);
    Ok(FittedModel {
        spec: ModelSpec { family: ModelFamily::Mean, p: 0, d: 0.0, q: 0, include_mean: true },
        phi: vec![],
        theta: vec![],
        mean: mu,
        sigma2: sample_variance(x),
        residuals: x.iter().map(|v| v - mu).collect(),
        aicc: None,
        loglik: None,
        transform: transform_of(series),
        n: x.len(),
        history: x.to_vec(),
    })
}

#[derive(Debug, Clone)]
struct Cell {
    p: usize,
    q: usize,
    d: f64,
    fit: ArmaFit,
    residuals: Vec<f64>,
    sigma2: f64,
    loglik: f64,
    aicc: f64,
}

impl Cell {
    fn build(w: &[f64], p: usize, q: usize, d: f64, fit: ArmaFit, extra: usize) -> Option<Cell> {
        let n = w.len();
        if !roots_outside(&fit.phi, &fit.theta, FIT_ROOT_MODULUS) {
            return None;
        }
        let residuals = arma_residuals(w, &fit.phi, &fit.theta);
        let css: f64 = residuals.iter().map(|e| e * e).sum();
        let sigma2 = css / n as f64;
        if !(sigma2 > 0.0) || !sigma2.is_finite() {
            return None;
        }
        let loglik = gaussian_loglik(css, n);
        let aicc = aicc(loglik, n, p, q, extra).ok()?;
        Some(Cell { p, q, d, fit, residuals, sigma2, loglik, aicc })
    }

    /// Total order used to pick the winner: AICc, then p + q, then p, then d.
    fn better_than(&self, other: &Cell) -> bool {
        self.aicc
            .total_cmp(&other.aicc)
            .then((self.p + self.q).cmp(&(other.p + other.q)))
            .then(self.p.cmp(&other.p))
            .then(self.d.total_cmp(&other.d))
            .is_lt()
    }
}

fn pick_best(cells: impl Iterator<Item = Cell>) -> Option<Cell> {
    cells.fold(None, |best: Option<Cell>, c| match best {
        Some(b) if !c.better_than(&b) => Some(b),
        _ => Some(c),
    })
}

/// Smallest d in `0..=max_d` whose differences pass the ADF test at 5%.
fn select_integer_d(x: &[f64], max_d: usize) -> usize {
    for d in 0..=max_d {
        let w = difference_values(x, d);
        if matches!(adf_values(&w, None), Ok(r) if r.stationary_at_5pct) {
            return d;
        }
    }
    max_d
}

fn arima_model(series: &TimeSeries, d: usize, cell: Cell, mu: f64) -> FittedModel {
    FittedModel {
        spec: ModelSpec { family: ModelFamily::Arima, p: cell.p, d: d as f64, q: cell.q, include_mean: d == 0 },
        phi: cell.fit.phi,
        theta: cell.fit.theta,
        mean: mu,
        sigma2: cell.sigma2,
        residuals: cell.residuals,
        aicc: Some(cell.aicc),
        loglik: Some(cell.loglik),
        transform: transform_of(series),
        n: series.len(),
        history: series.values().to_vec(),
    }
}

/// Differenced, mean-adjusted working series for an ARIMA fit.
fn arima_working(x: &[f64], d: usize) -> (Vec<f64>, f64) {
    let w = difference_values(x, d);
    let mu = if d == 0 { mean(&w) } else { 0.0 };
    (w.into_iter().map(|v| v - mu).collect(), mu)
}

/// ARIMA with d chosen by the ADF rule and (p, q) by AICc over the grid.
pub fn fit_arima(series: &TimeSeries, config: ArimaConfig) -> Result<FittedModel> {
    require_len(series, ARIMA_MIN_LEN)?;
    let x = series.values();
    let d = select_integer_d(x, config.max_d.min(2));
    let (w, mu) = arima_working(x, d);
    let extra = usize::from(d == 0);
    let cells = (0..=config.max_p).flat_map(|p| (0..=config.max_q).map(move |q| (p, q))).filter_map(|(p, q)| {
        if w.len() <= p + q + 2 + extra {
            return None;
        }
        Cell::build(&w, p, q, d as f64, fit_arma_css(&w, p, q), extra)
    });
    let best = pick_best(cells).ok_or(Error::NoAdmissibleModel)?;
    Ok(arima_model(series, d, best, mu))
}

/// ARIMA with all three orders fixed.
pub fn fit_arima_order(series: &TimeSeries, p: usize, d: usize, q: usize) -> Result<FittedModel> {
    if d > 2 {
        return Err(Error::InvalidSpec(format!("ARIMA d = {d} outside 0..=2")));
    }
    require_len(series, p + q + d + 4)?;
    let (w, mu) = arima_working(series.values(), d);
    let extra = usize::from(d == 0);
    let cell = Cell::build(&w, p, q, d as f64, fit_arma_css(&w, p, q), extra).ok_or(Error::NoAdmissibleModel)?;
    Ok(arima_model(series, d, cell, mu))
}

/// Profile search over d for one (p, q) cell: a 0.05 grid, then golden
/// section within one grid step of the best grid point.
fn arfima_cell(z: &[f64], p: usize, q: usize, coarse: &[(f64, Vec<f64>)], fixed_d: Option<f64>) -> Option<Cell> {
    // parameter count p + q + 2: d and μ on top of the ARMA terms
    const EXTRA: usize = 1;
    if z.len() <= p + q + 2 + EXTRA {
        return None;
    }
    let d = match fixed_d {
        Some(d) => d,
        None => {
            let mut best_d = 0.0;
            let mut best_f = f64::INFINITY;
            for (d, u) in coarse {
                let f = fit_arma_css(u, p, q).css;
                if f < best_f {
                    best_f = f;
                    best_d = *d;
                }
            }
            let lo = (best_d - D_GRID_STEP).max(0.0);
            let hi = (best_d + D_GRID_STEP).min(D_MAX);
            let profile = |d: f64| fit_arma_css(&frac_difference_values(z, d), p, q).css;
            let (gd, gf) = golden_section(profile, lo, hi, D_GOLDEN_TOL);
            if gf < best_f {
                gd
            } else {
                best_d
            }
        }
    };
    let u = frac_difference_values(z, d);
    Cell::build(&u, p, q, d, fit_arma_css(&u, p, q), EXTRA)
}

fn arfima_model(series: &TimeSeries, cell: Cell, mu: f64) -> FittedModel {
    FittedModel {
        spec: ModelSpec { family: ModelFamily::Arfima, p: cell.p, d: cell.d, q: cell.q, include_mean: true },
        phi: cell.fit.phi,
        theta: cell.fit.theta,
        mean: mu,
        sigma2: cell.sigma2,
        residuals: cell.residuals,
        aicc: Some(cell.aicc),
        loglik: Some(cell.loglik),
        transform: transform_of(series),
        n: series.len(),
        history: series.values().to_vec(),
    }
}

fn coarse_grid(z: &[f64]) -> Vec<(f64, Vec<f64>)> {
    let steps = (D_MAX / D_GRID_STEP).floor() as usize;
    (0..=steps)
        .map(|i| {
            let d = i as f64 * D_GRID_STEP;
            (d, frac_difference_values(z, d))
        })
        .collect()
}

/// ARFIMA(p, d, q) with d ∈ [0, 0.5) estimated jointly with the ARMA terms by
/// conditional sum of squares; (p, q) chosen by AICc.
pub fn fit_arfima(series: &TimeSeries, config: ArfimaConfig) -> Result<FittedModel> {
    require_len(series, ARFIMA_MIN_LEN)?;
    let x = series.values();
    let mu = mean(x);
    let z: Vec<f64> = x.iter().map(|v| v - mu).collect();
    let coarse = coarse_grid(&z);
    let cells = (0..=config.max_p)
        .flat_map(|p| (0..=config.max_q).map(move |q| (p, q)))
        .filter_map(|(p, q)| arfima_cell(&z, p, q, &coarse, None));
    let best = pick_best(cells).ok_or(Error::NoAdmissibleModel)?;
    Ok(arfima_model(series, best, mu))
}

/// ARFIMA with fixed (p, q); `d = None` estimates d, `Some(d)` pins it.
pub fn fit_arfima_order(series: &TimeSeries, p: usize, q: usize, d: Option<f64>) -> Result<FittedModel> {
    if let Some(d) = d {
        if !(0.0..0.5).contains(&d) {
            return Err(Error::InvalidD(d));
        }
    }
    require_len(series, (p + q + 4).max(8))?;
    let x = series.values();
    let mu = mean(x);
    let z: Vec<f64> = x.iter().map(|v| v - mu).collect();
    let coarse = if d.is_none() { coarse_grid(&z) } else { Vec::new() };
    let cell = arfima_cell(&z, p, q, &coarse, d).ok_or(Error::NoAdmissibleModel)?;
    Ok(arfima_model(series, cell, mu))
}
