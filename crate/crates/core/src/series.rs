//! Regularly sampled series, CSV ingestion, Box–Cox transforms, differencing
//! and the sample autocorrelation function.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::format_sig;

/// Box–Cox parameters. `applied == false` means the identity transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformSpec {
    pub lambda: f64,
    pub applied: bool,
}

impl TransformSpec {
    pub const fn identity() -> Self {
        Self { lambda: 1.0, applied: false }
    }

    /// Natural log, i.e. Box–Cox with λ = 0.
    pub const fn log() -> Self {
        Self { lambda: 0.0, applied: true }
    }

    pub const fn box_cox(lambda: f64) -> Self {
        Self { lambda, applied: true }
    }

    pub fn forward(&self, y: f64) -> f64 {
        if !self.applied {
            y
        } else if self.lambda == 0.0 {
            y.ln()
        } else {
            (y.powf(self.lambda) - 1.0) / self.lambda
        }
    }

    pub fn inverse(&self, w: f64) -> f64 {
        if !self.applied {
            w
        } else if self.lambda == 0.0 {
            w.exp()
        } else {
            // outside the image of the transform; clamp to the boundary
            let base = (self.lambda * w + 1.0).max(0.0);
            base.powf(1.0 / self.lambda)
        }
    }

    fn requires_positive(&self) -> bool {
        self.applied && (self.lambda <= 0.0 || self.lambda.fract() != 0.0)
    }
}

impl Default for TransformSpec {
    fn default() -> Self {
        Self::log()
    }
}

/// Gap handling for [`ingest_csv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GapPolicy {
    #[default]
    Reject,
    /// Fill whole missing slots with the last observed value.
    Locf,
}

/// A gap-free, regularly sampled series. Immutable once built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    values: Vec<f64>,
    start_time: i64,
    interval: f64,
    label: String,
    transform: Option<TransformSpec>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>, start_time: i64, interval: f64, label: impl Into<String>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !(interval > 0.0) || !interval.is_finite() {
            return Err(Error::InvalidInterval(interval));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Parse { line: i + 1, message: "non-finite value".into() });
        }
        Ok(Self { values, start_time, interval, label: label.into(), transform: None })
    }

    /// Unit-interval series starting at t = 0.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        Self::new(values, 0, 1.0, "")
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn start_time(&self) -> i64 {
        self.start_time
    }

    pub fn interval(&self) -> f64 {
        self.interval
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Transform applied to produce these values, if any.
    pub fn transform_spec(&self) -> Option<TransformSpec> {
        self.transform
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same metadata, new values (used by derived series).
    pub(crate) fn derive(&self, values: Vec<f64>) -> Self {
        Self {
            values,
            start_time: self.start_time,
            interval: self.interval,
            label: self.label.clone(),
            transform: self.transform,
        }
    }

    /// Contiguous sub-series `[start, end)`; the start time shifts accordingly.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if start >= end || end > self.len() {
            return Err(Error::SeriesTooShort { needed: end, got: self.len() });
        }
        let mut out = self.derive(self.values[start..end].to_vec());
        out.start_time = self.start_time + (start as f64 * self.interval).round() as i64;
        Ok(out)
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.values.iter().position(|&v| v <= 0.0) {
            Some(index) => Err(Error::NonPositiveValue { index, value: self.values[index] }),
            None => Ok(()),
        }
    }

    /// Number of samples spanning one day at this sampling interval.
    pub fn daily_lag(&self) -> usize {
        ((86_400.0 / self.interval).round() as usize).max(1)
    }

    pub fn mean(&self) -> f64 {
        mean(&self.values)
    }

    /// Writes the `timestamp,value` CSV form.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "timestamp,value")?;
        for (i, v) in self.values.iter().enumerate() {
            let t = self.start_time + (i as f64 * self.interval).round() as i64;
            writeln!(out, "{},{}", t, format_sig(*v))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ascii")
    }
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Sample variance with the n − 1 denominator.
pub(crate) fn sample_variance(x: &[f64]) -> f64 {
    if x.len() < 2 {
        return 0.0;
    }
    let m = mean(x);
    x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (x.len() - 1) as f64
}

/// Reads a `timestamp,value` CSV file.
pub fn ingest_csv(path: impl AsRef<Path>, interval_hint: Option<f64>, gaps: GapPolicy) -> Result<TimeSeries> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(parse_csv(&text, interval_hint, gaps)?.with_label(label))
}

/// Parses the CSV body of [`ingest_csv`].
pub fn parse_csv(text: &str, interval_hint: Option<f64>, gaps: GapPolicy) -> Result<TimeSeries> {
    let mut rows: Vec<(i64, f64)> = Vec::new();
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.trim().eq_ignore_ascii_case("timestamp,value") => {}
        Some((i, _)) => return Err(Error::Parse { line: i + 1, message: "expected header `timestamp,value`".into() }),
        None => return Err(Error::EmptyInput),
    }
    for (i, line) in lines {
        let line_no = i + 1;
        let (t, v) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse { line: line_no, message: "expected two columns".into() })?;
        let t: i64 = t
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: line_no, message: format!("bad timestamp `{}`", t.trim()) })?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: line_no, message: format!("bad value `{}`", v.trim()) })?;
        if !v.is_finite() {
            return Err(Error::Parse { line: line_no, message: "non-finite value".into() });
        }
        if v <= 0.0 {
            return Err(Error::NonPositiveValue { index: rows.len(), value: v });
        }
        if let Some(&(prev, _)) = rows.last() {
            if t <= prev {
                return Err(Error::NonMonotonicTime { row: rows.len() });
            }
        }
        rows.push((t, v));
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }

    let interval = match interval_hint {
        Some(h) if h > 0.0 => h,
        Some(h) => return Err(Error::InvalidInterval(h)),
        None => modal_difference(&rows).unwrap_or(1.0),
    };

    let mut values = Vec::with_capacity(rows.len());
    values.push(rows[0].1);
    for (row, w) in rows.windows(2).enumerate() {
        let gap = (w[1].0 - w[0].0) as f64;
        let slots = gap / interval;
        let whole = slots.round();
        if (slots - whole).abs() > 1e-9 || whole < 1.0 {
            return Err(Error::IrregularGrid { row: row + 1, gap, interval });
        }
        if whole > 1.0 {
            match gaps {
                GapPolicy::Reject => return Err(Error::IrregularGrid { row: row + 1, gap, interval }),
                GapPolicy::Locf => {
                    for _ in 1..whole as usize {
                        values.push(w[0].1);
                    }
                }
            }
        }
        values.push(w[1].1);
    }
    TimeSeries::new(values, rows[0].0, interval, "")
}

fn modal_difference(rows: &[(i64, f64)]) -> Option<f64> {
    let mut counts: HashMap<i64, usize> = HashMap::new();
    for w in rows.windows(2) {
        *counts.entry(w[1].0 - w[0].0).or_default() += 1;
    }
    // ties resolve to the smallest difference
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(d, _)| d as f64)
}

/// Applies the Box–Cox transform elementwise and records it on the output.
pub fn transform(series: &TimeSeries, spec: TransformSpec) -> Result<TimeSeries> {
    if spec.requires_positive() {
        series.ensure_positive()?;
    }
    let mut out = series.derive(series.values.iter().map(|&y| spec.forward(y)).collect());
    out.transform = Some(spec);
    Ok(out)
}

/// Undoes the transform recorded by [`transform`]. Untransformed input is returned unchanged.
pub fn inverse_transform(series: &TimeSeries) -> TimeSeries {
    match series.transform {
        Some(spec) => {
            let mut out = series.derive(series.values.iter().map(|&w| spec.inverse(w)).collect());
            out.transform = None;
            out
        }
        None => series.clone(),
    }
}

/// Integer-order differencing `(1 − B)^d`.
pub fn difference(series: &TimeSeries, order: usize) -> Result<TimeSeries> {
    if series.len() <= order {
        return Err(Error::SeriesTooShort { needed: order + 1, got: series.len() });
    }
    let mut out = series.derive(difference_values(&series.values, order));
    out.start_time = series.start_time + (order as f64 * series.interval).round() as i64;
    Ok(out)
}

pub(crate) fn difference_values(values: &[f64], order: usize) -> Vec<f64> {
    let mut v = values.to_vec();
    for _ in 0..order {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v
}

/// Sample autocorrelation at lags `0..=max_lag`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcfResult {
    pub lags: Vec<usize>,
    pub rho: Vec<f64>,
    pub gamma0: f64,
}

impl AcfResult {
    pub fn max_lag(&self) -> usize {
        self.rho.len() - 1
    }
}

/// Biased (1/N) sample autocorrelation.
pub fn acf(series: &TimeSeries, max_lag: usize) -> Result<AcfResult> {
    acf_values(series.values(), max_lag)
}

pub(crate) fn acf_values(x: &[f64], max_lag: usize) -> Result<AcfResult> {
    let n = x.len();
    if max_lag >= n {
        return Err(Error::LagTooLarge { max_lag, len: n });
    }
    let m = mean(x);
    let centered: Vec<f64> = x.iter().map(|v| v - m).collect();
    let gamma = |k: usize| -> f64 {
        centered[..n - k].iter().zip(&centered[k..]).map(|(a, b)| a * b).sum::<f64>() / n as f64
    };
    let gamma0 = gamma(0);
    if gamma0 == 0.0 || gamma0 <= (1e-12 * m.abs()).powi(2) {
        return Err(Error::ZeroVariance);
    }
    let mut rho = Vec::with_capacity(max_lag + 1);
    rho.push(1.0);
    for k in 1..=max_lag {
        rho.push(gamma(k) / gamma0);
    }
    Ok(AcfResult { lags: (0..=max_lag).collect(), rho, gamma0 })
}
