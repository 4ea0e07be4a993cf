use crate::error::{Error, Result};

fn check_lengths(actual: &[f64], forecast: &[f64]) -> Result<()> {
    if actual.len() != forecast.len() {
        return Err(Error::LengthMismatch(actual.len(), forecast.len()));
    }
    if actual.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(())
}

/// Mean absolute error.
pub fn mae(actual: &[f64], forecast: &[f64]) -> Result<f64> {
    check_lengths(actual, forecast)?;
    Ok(actual.iter().zip(forecast).map(|(y, f)| (y - f).abs()).sum::<f64>() / actual.len() as f64)
}

/// Signed percentage error `100·(y − ŷ)/y`.
pub fn percentage_error(actual: f64, forecast: f64) -> f64 {
    100.0 * (actual - forecast) / actual
}

/// Mean absolute percentage error, in percent.
pub fn mape(actual: &[f64], forecast: &[f64]) -> Result<f64> {
    check_lengths(actual, forecast)?;
    if let Some(i) = actual.iter().position(|&y| y == 0.0) {
        return Err(Error::ZeroActual(i));
    }
    let total: f64 = actual.iter().zip(forecast).map(|(&y, &f)| percentage_error(y, f).abs()).sum();
    Ok(total / actual.len() as f64)
}

/// Percentage reduction of the candidate's MAPE relative to the baseline's.
pub fn improvement(mape_baseline: f64, mape_candidate: f64) -> Result<f64> {
    if !(mape_baseline > 0.0) {
        return Err(Error::ZeroBaseline);
    }
    Ok((mape_baseline - mape_candidate) / mape_baseline * 100.0)
}

/// Sample quantile with linear interpolation between order statistics
/// (the default in R and NumPy). `sorted` must be ascending and non-empty.
pub(crate) fn quantile_sorted(sorted: &[f64], prob: f64) -> f64 {
    let pos = prob * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}
