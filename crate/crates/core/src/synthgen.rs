//! Seeded generators of series with known memory structure.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha`) with standard normals drawn by `rand_distr::StandardNormal`.
//! Given a spec, output is identical on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::arma::{ar_is_stationary, ma_is_invertible};
use crate::models::fracdiff::{apply_lower_toeplitz, pi_weights};
use crate::series::TimeSeries;

/// Samples discarded before the returned window for recursive generators.
pub const BURN_IN: usize = 500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenKind {
    WhiteNoise,
    Arma { phi: Vec<f64>, theta: Vec<f64> },
    Arfima { d: f64, phi: Vec<f64>, theta: Vec<f64> },
    Fgn { hurst: f64 },
    RandomWalk,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    /// Innovation standard deviation (for fGn, the marginal standard deviation).
    pub sigma: f64,
    /// Constant added to every value.
    pub offset: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        Self { kind, n, seed, sigma: 1.0, offset: 0.0 }
    }

    pub fn white_noise(n: usize, seed: u64) -> Self {
        Self::new(GenKind::WhiteNoise, n, seed)
    }

    pub fn arma(n: usize, seed: u64, phi: Vec<f64>, theta: Vec<f64>) -> Self {
        Self::new(GenKind::Arma { phi, theta }, n, seed)
    }

    pub fn arfima(n: usize, seed: u64, d: f64) -> Self {
        Self::new(GenKind::Arfima { d, phi: vec![], theta: vec![] }, n, seed)
    }

    pub fn fgn(n: usize, seed: u64, hurst: f64) -> Self {
        Self::new(GenKind::Fgn { hurst }, n, seed)
    }

    pub fn random_walk(n: usize, seed: u64) -> Self {
        Self::new(GenKind::RandomWalk, n, seed)
    }

    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = sigma;
        self
    }

    pub fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if !(self.sigma > 0.0) || !self.sigma.is_finite() || !self.offset.is_finite() {
            return bad("sigma must be positive and offset finite");
        }
        match &self.kind {
            GenKind::Fgn { hurst } if !(*hurst > 0.0 && *hurst < 1.0) => bad("fGn requires 0 < H < 1"),
            GenKind::Arfima { d, .. } if !(d.abs() < 0.5) => bad("ARFIMA requires -0.5 < d < 0.5"),
            GenKind::Arma { phi, theta } | GenKind::Arfima { phi, theta, .. } => {
                if !ar_is_stationary(phi) {
                    bad("AR polynomial is not causal")
                } else if !ma_is_invertible(theta) {
                    bad("MA polynomial is not invertible")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    fn label(&self) -> String {
        match &self.kind {
            GenKind::WhiteNoise => format!("white_noise-seed{}", self.seed),
            GenKind::Arma { .. } => format!("arma-seed{}", self.seed),
            GenKind::Arfima { d, .. } => format!("arfima-d{d}-seed{}", self.seed),
            GenKind::Fgn { hurst } => format!("fgn-h{hurst}-seed{}", self.seed),
            GenKind::RandomWalk => format!("random_walk-seed{}", self.seed),
        }
    }
}

fn normals(rng: &mut ChaCha8Rng, n: usize, sigma: f64) -> Vec<f64> {
    (0..n).map(|_| sigma * Distribution::<f64>::sample(&StandardNormal, rng)).collect()
}

/// ARMA recursion driven by `input`, zero initial state.
fn arma_filter(input: &[f64], phi: &[f64], theta: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(input.len());
    for t in 0..input.len() {
        let mut v = input[t];
        for (j, th) in theta.iter().enumerate() {
            if t > j {
                v += th * input[t - j - 1];
            }
        }
        for (i, p) in phi.iter().enumerate() {
            if t > i {
                v += p * out[t - i - 1];
            }
        }
        out.push(v);
    }
    out
}

pub fn generate(spec: &GenSpec) -> Result<TimeSeries> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut values = match &spec.kind {
        GenKind::WhiteNoise => normals(&mut rng, n, spec.sigma),
        GenKind::RandomWalk => {
            let mut acc = 0.0;
            normals(&mut rng, n, spec.sigma)
                .into_iter()
                .map(|e| {
                    acc += e;
                    acc
                })
                .collect()
        }
        GenKind::Arma { phi, theta } => {
            let eps = normals(&mut rng, n + BURN_IN, spec.sigma);
            arma_filter(&eps, phi, theta).split_off(BURN_IN)
        }
        GenKind::Arfima { d, phi, theta } => {
            let total = n + BURN_IN;
            let eps = normals(&mut rng, total, spec.sigma);
            let eta = pi_weights(-d, total);
            let integrated = apply_lower_toeplitz(&eta, &eps);
            arma_filter(&integrated, phi, theta).split_off(BURN_IN)
        }
        GenKind::Fgn { hurst } => davies_harte(&mut rng, n, *hurst, spec.sigma)?,
    };
    if spec.offset != 0.0 {
        values.iter_mut().for_each(|v| *v += spec.offset);
    }
    TimeSeries::new(values, 0, 1.0, spec.label())
}

/// Autocovariance of fractional Gaussian noise with marginal variance σ².
pub fn fgn_autocovariance(k: usize, hurst: f64, sigma2: f64) -> f64 {
    let k = k as f64;
    let two_h = 2.0 * hurst;
    0.5 * sigma2 * ((k + 1.0).powf(two_h) - 2.0 * k.powf(two_h) + (k - 1.0).abs().powf(two_h))
}

/// Exact fGn synthesis by circulant embedding. The embedding size doubles
/// until every circulant eigenvalue is non-negative.
fn davies_harte(rng: &mut ChaCha8Rng, n: usize, hurst: f64, sigma: f64) -> Result<Vec<f64>> {
    let sigma2 = sigma * sigma;
    let mut half = n.max(2).next_power_of_two();
    for _ in 0..4 {
        let m = 2 * half;
        let mut c: Vec<Complex<f64>> = (0..m)
            .map(|j| {
                let k = if j <= half { j } else { m - j };
                Complex::new(fgn_autocovariance(k, hurst, sigma2), 0.0)
            })
            .collect();
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(m);
        fft.process(&mut c);
        let min_eig = c.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        let scale = c.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
        if min_eig < -1e-10 * scale {
            if half >= 1 << 26 {
                return Err(Error::NonEmbeddableCovariance(min_eig));
            }
            half *= 2;
            continue;
        }
        // Re(F Λ^{1/2} w / √m) with complex standard w has covariance C.
        let mut w: Vec<Complex<f64>> = c
            .iter()
            .map(|lambda| {
                let s = (lambda.re.max(0.0) / m as f64).sqrt();
                let a: f64 = StandardNormal.sample(rng);
                let b: f64 = StandardNormal.sample(rng);
                Complex::new(s * a, s * b)
            })
            .collect();
        fft.process(&mut w);
        return Ok(w.into_iter().take(n).map(|z| z.re).collect());
    }
    Err(Error::NonEmbeddableCovariance(f64::NAN))
}

/// Exact autocorrelation of ARFIMA(0, d, 0):
/// `ρ(k) = ρ(k−1)·(k−1+d)/(k−d)`, `ρ(0) = 1`.
pub fn theoretical_acf_arfima0d0(d: f64, max_lag: usize) -> Result<Vec<f64>> {
    if !(d.abs() < 0.5) {
        return Err(Error::InvalidD(d));
    }
    let mut rho = Vec::with_capacity(max_lag + 1);
    rho.push(1.0);
    for k in 1..=max_lag {
        let kf = k as f64;
        let prev = rho[k - 1];
        rho.push(prev * (kf - 1.0 + d) / (kf - d));
    }
    Ok(rho)
}

/// Variance of ARFIMA(0, d, 0) per unit innovation variance: Γ(1−2d)/Γ(1−d)².
pub fn arfima0d0_variance(d: f64) -> f64 {
    use statrs::function::gamma::ln_gamma;
    (ln_gamma(1.0 - 2.0 * d) - 2.0 * ln_gamma(1.0 - d)).exp()
}
