use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::AcfResult;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeasonalPeaks {
    pub detected: bool,
    pub daily_lag: usize,
    /// Multiples of `daily_lag` that were examined.
    pub checked: Vec<usize>,
    /// Lags of the peaks found near those multiples.
    pub peak_lags: Vec<usize>,
}

/// Looks for daily peaks in the autocorrelation function.
///
/// A multiple `m·daily_lag` counts as a peak when the largest ρ̂ over the
/// surrounding half-period window `m·daily_lag ± daily_lag/2` sits within one
/// lag of the multiple and is a local maximum of its immediate neighbours.
/// Detection requires a peak at every multiple that has a right-hand
/// neighbour inside the ACF, and at least two such multiples.
pub fn seasonal_peak_diagnostic(acf: &AcfResult, daily_lag: usize) -> Result<SeasonalPeaks> {
    let max_lag = acf.max_lag();
    if daily_lag == 0 || max_lag <= 2 * daily_lag {
        return Err(Error::LagTooLarge { max_lag: 2 * daily_lag.max(1) + 1, len: max_lag + 1 });
    }
    let rho = &acf.rho;
    let radius = (daily_lag / 2).max(1);
    let mut checked = Vec::new();
    let mut peak_lags = Vec::new();
    let mut m = daily_lag;
    while m < max_lag {
        checked.push(m);
        let lo = m.saturating_sub(radius).max(1);
        let hi = (m + radius).min(max_lag);
        let best = (lo..=hi)
            .max_by(|&a, &b| rho[a].total_cmp(&rho[b]).then(b.cmp(&a)))
            .expect("window is non-empty");
        let local_max = best < max_lag && best >= 1 && rho[best] >= rho[best - 1] && rho[best] >= rho[best + 1];
        if best.abs_diff(m) <= 1 && local_max {
            peak_lags.push(best);
        }
        m += daily_lag;
    }
    Ok(SeasonalPeaks { detected: checked.len() >= 2 && peak_lags.len() == checked.len(), daily_lag, checked, peak_lags })
}
