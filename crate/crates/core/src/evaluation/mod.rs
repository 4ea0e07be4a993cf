//! Rolling-origin cross-validation, error metrics and improvement reports.

mod metrics;

pub use metrics::{improvement, mae, mape, percentage_error};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{fit_family, forecast, FitBounds, ModelFamily};
use crate::numfmt::format_sig;
use crate::series::{transform, TimeSeries, TransformSpec};
use metrics::quantile_sorted;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CvConfig {
    pub window: usize,
    pub max_horizon: usize,
    pub step: usize,
    pub methods: Vec<ModelFamily>,
    pub level: f64,
    pub transform: TransformSpec,
    pub bounds: FitBounds,
}

impl Default for CvConfig {
    fn default() -> Self {
        Self {
            window: 96,
            max_horizon: 48,
            step: 1,
            methods: ModelFamily::ALL.to_vec(),
            level: 0.95,
            transform: TransformSpec::log(),
            bounds: FitBounds::default(),
        }
    }
}

impl CvConfig {
    pub fn validate(&self) -> Result<()> {
        if self.step == 0 || self.window == 0 || self.max_horizon == 0 {
            return Err(Error::InvalidSpec("window, horizon and step must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidSpec("no methods selected".into()));
        }
        let mut seen = self.methods.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.methods.len() {
            return Err(Error::InvalidSpec("duplicate method".into()));
        }
        if !(self.level > 0.0 && self.level < 1.0) {
            return Err(Error::InvalidLevel(self.level));
        }
        Ok(())
    }

    /// Forecast origins for a series of length `len`.
    pub fn origins(&self, len: usize) -> Vec<usize> {
        if self.window + self.max_horizon > len {
            return Vec::new();
        }
        (self.window..=len - self.max_horizon).step_by(self.step.max(1)).collect()
    }
}

/// Per-method errors, one row per retained origin and one column per horizon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricSet {
    pub mae: Vec<f64>,
    /// Percent.
    pub mape: Vec<f64>,
    pub count: usize,
    /// `e = y − ŷ`. Not serialized.
    #[serde(skip)]
    pub errors: Vec<Vec<f64>>,
    /// `P = 100·e/y`. Not serialized.
    #[serde(skip)]
    pub pct_errors: Vec<Vec<f64>>,
}

impl MetricSet {
    fn from_rows(errors: Vec<Vec<f64>>, pct_errors: Vec<Vec<f64>>, horizons: usize) -> Self {
        let count = errors.len();
        let column_mean = |rows: &[Vec<f64>], k: usize| rows.iter().map(|r| r[k].abs()).sum::<f64>() / count as f64;
        Self {
            mae: (0..horizons).map(|k| column_mean(&errors, k)).collect(),
            mape: (0..horizons).map(|k| column_mean(&pct_errors, k)).collect(),
            count,
            errors,
            pct_errors,
        }
    }

    /// MAPE pooled over every horizon.
    pub fn mean_mape(&self) -> f64 {
        self.mape.iter().sum::<f64>() / self.mape.len() as f64
    }

    pub fn mean_mae(&self) -> f64 {
        self.mae.iter().sum::<f64>() / self.mae.len() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodMetrics {
    pub method: ModelFamily,
    #[serde(flatten)]
    pub metrics: MetricSet,
}

/// Improvement of `candidate` over `baseline`; `None` where the baseline's
/// MAPE is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairImprovement {
    pub baseline: ModelFamily,
    pub candidate: ModelFamily,
    pub per_horizon: Vec<Option<f64>>,
    /// Computed on the MAPEs averaged over horizons.
    pub mean: Option<f64>,
    /// Largest per-horizon improvement.
    pub max: Option<f64>,
}

impl PairImprovement {
    fn compute(baseline: &MethodMetrics, candidate: &MethodMetrics) -> Self {
        let per_horizon: Vec<Option<f64>> = baseline
            .metrics
            .mape
            .iter()
            .zip(&candidate.metrics.mape)
            .map(|(a, b)| improvement(*a, *b).ok())
            .collect();
        let max = per_horizon.iter().flatten().copied().reduce(f64::max);
        Self {
            baseline: baseline.method,
            candidate: candidate.method,
            mean: improvement(baseline.metrics.mean_mape(), candidate.metrics.mean_mape()).ok(),
            max,
            per_horizon,
        }
    }

    pub fn pair_name(&self) -> String {
        format!("{}_over_{}", self.candidate, self.baseline)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxplotRow {
    pub method: ModelFamily,
    pub horizon: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcludedOrigin {
    pub series: String,
    pub origin: usize,
    pub method: ModelFamily,
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvReport {
    pub series_label: String,
    pub config: CvConfig,
    /// Origins attempted, including excluded ones.
    pub origins: usize,
    pub excluded: Vec<ExcludedOrigin>,
    pub per_method: Vec<MethodMetrics>,
    pub improvements: Vec<PairImprovement>,
    /// Quantiles of |P| per method and horizon; filled in by [`aggregate_reports`].
    pub boxplot: Option<Vec<BoxplotRow>>,
}

impl CvReport {
    fn assemble(series_label: String, config: CvConfig, origins: usize, excluded: Vec<ExcludedOrigin>, per_method: Vec<MethodMetrics>) -> Self {
        let mut improvements = Vec::new();
        for a in &per_method {
            for b in &per_method {
                if a.method != b.method {
                    improvements.push(PairImprovement::compute(a, b));
                }
            }
        }
        Self { series_label, config, origins, excluded, per_method, improvements, boxplot: None }
    }

    pub fn metrics(&self, method: ModelFamily) -> Option<&MetricSet> {
        self.per_method.iter().find(|m| m.method == method).map(|m| &m.metrics)
    }

    /// Improvement of `candidate` over `baseline`.
    pub fn improvement(&self, baseline: ModelFamily, candidate: ModelFamily) -> Option<&PairImprovement> {
        self.improvements.iter().find(|p| p.baseline == baseline && p.candidate == candidate)
    }

    /// Retained origins (identical for every method).
    pub fn count(&self) -> usize {
        self.per_method.first().map_or(0, |m| m.metrics.count)
    }

    /// Method × retained origin × horizon forecasts behind the report.
    pub fn experiment_count(&self) -> usize {
        self.per_method.len() * self.count() * self.config.max_horizon
    }

    /// Square matrix of mean improvements, rows are baselines and columns
    /// candidates, in `config.methods` order.
    pub fn improvement_matrix(&self) -> Vec<Vec<Option<f64>>> {
        let methods: Vec<ModelFamily> = self.per_method.iter().map(|m| m.method).collect();
        methods
            .iter()
            .map(|&a| {
                methods
                    .iter()
                    .map(|&b| if a == b { Some(0.0) } else { self.improvement(a, b).and_then(|p| p.mean) })
                    .collect()
            })
            .collect()
    }

    fn compute_boxplot(&self) -> Vec<BoxplotRow> {
        let mut rows = Vec::new();
        for m in &self.per_method {
            for k in 0..self.config.max_horizon {
                let mut col: Vec<f64> = m.metrics.pct_errors.iter().map(|r| r[k].abs()).collect();
                if col.is_empty() {
                    continue;
                }
                col.sort_by(f64::total_cmp);
                rows.push(BoxplotRow {
                    method: m.method,
                    horizon: k + 1,
                    min: col[0],
                    q1: quantile_sorted(&col, 0.25),
                    median: quantile_sorted(&col, 0.5),
                    q3: quantile_sorted(&col, 0.75),
                    max: col[col.len() - 1],
                });
            }
        }
        rows
    }

    /// `method,horizon,mae,mape,count`
    pub fn metrics_csv(&self) -> String {
        let mut out = String::from("method,horizon,mae,mape,count\n");
        for m in &self.per_method {
            for k in 0..m.metrics.mae.len() {
                out += &format!(
                    "{},{},{},{},{}\n",
                    m.method,
                    k + 1,
                    format_sig(m.metrics.mae[k]),
                    format_sig(m.metrics.mape[k]),
                    m.metrics.count
                );
            }
        }
        out
    }

    /// `pair,horizon,improvement_pct`; horizon is a step number, `mean` or `max`.
    pub fn improvements_csv(&self) -> String {
        let cell = |v: Option<f64>| v.map(format_sig).unwrap_or_default();
        let mut out = String::from("pair,horizon,improvement_pct\n");
        for p in &self.improvements {
            let name = p.pair_name();
            for (k, v) in p.per_horizon.iter().enumerate() {
                out += &format!("{},{},{}\n", name, k + 1, cell(*v));
            }
            out += &format!("{},mean,{}\n", name, cell(p.mean));
            out += &format!("{},max,{}\n", name, cell(p.max));
        }
        out
    }

    /// `method,horizon,min,q1,median,q3,max`; empty body without quantiles.
    pub fn boxplot_csv(&self) -> String {
        let mut out = String::from("method,horizon,min,q1,median,q3,max\n");
        for r in self.boxplot.iter().flatten() {
            out += &format!(
                "{},{},{},{},{},{},{}\n",
                r.method,
                r.horizon,
                format_sig(r.min),
                format_sig(r.q1),
                format_sig(r.median),
                format_sig(r.q3),
                format_sig(r.max)
            );
        }
        out
    }
}

/// Errors of every method at one origin, or the first failure.
type OriginOutcome = std::result::Result<Vec<(Vec<f64>, Vec<f64>)>, (ModelFamily, Error)>;

fn evaluate_origin(transformed: &TimeSeries, actual: &[f64], origin: usize, config: &CvConfig) -> OriginOutcome {
    let train = transformed
        .slice(origin - config.window, origin)
        .map_err(|e| (config.methods[0], e))?;
    let target = &actual[origin..origin + config.max_horizon];
    config
        .methods
        .iter()
        .map(|&method| {
            let model = fit_family(&train, method, &config.bounds).map_err(|e| (method, e))?;
            let fc = forecast(&model, config.max_horizon, config.level).map_err(|e| (method, e))?;
            if fc.point.iter().any(|v| !v.is_finite()) {
                return Err((method, Error::InvalidSpec("non-finite forecast".into())));
            }
            let e: Vec<f64> = target.iter().zip(&fc.point).map(|(y, f)| y - f).collect();
            let p: Vec<f64> = target.iter().zip(&fc.point).map(|(&y, &f)| percentage_error(y, f)).collect();
            Ok((e, p))
        })
        .collect()
}

/// Rolls a fixed training window over the series, fitting every configured
/// method at each origin and scoring its 1..h_max forecasts on the original
/// scale. An origin where any method fails is dropped for all methods.
pub fn rolling_cv(series: &TimeSeries, config: &CvConfig) -> Result<CvReport> {
    config.validate()?;
    let needed = config.window + config.max_horizon;
    if needed > series.len() {
        return Err(Error::ConfigTooLargeForSeries { needed, got: series.len() });
    }
    let transformed = transform(series, config.transform)?;
    let actual = series.values();
    if let Some(i) = actual[config.window..].iter().position(|&y| y == 0.0) {
        return Err(Error::ZeroActual(config.window + i));
    }
    let origins = config.origins(series.len());
    let outcomes: Vec<(usize, OriginOutcome)> = origins
        .par_iter()
        .map(|&o| (o, evaluate_origin(&transformed, actual, o, config)))
        .collect();

    let m = config.methods.len();
    let mut errors = vec![Vec::new(); m];
    let mut pct = vec![Vec::new(); m];
    let mut excluded = Vec::new();
    let mut first_error = None;
    for (origin, outcome) in outcomes {
        match outcome {
            Ok(rows) => {
                for (i, (e, p)) in rows.into_iter().enumerate() {
                    errors[i].push(e);
                    pct[i].push(p);
                }
            }
            Err((method, err)) => {
                log::warn!("{}: origin {} excluded, {} failed: {}", series.label(), origin, method, err);
                excluded.push(ExcludedOrigin {
                    series: series.label().to_string(),
                    origin,
                    method,
                    code: err.code().to_string(),
                    message: err.to_string(),
                });
                first_error.get_or_insert(err);
            }
        }
    }
    if errors[0].is_empty() {
        return Err(first_error.unwrap_or(Error::ConfigTooLargeForSeries { needed, got: series.len() }));
    }
    let per_method = config
        .methods
        .iter()
        .zip(errors.into_iter().zip(pct))
        .map(|(&method, (e, p))| MethodMetrics { method, metrics: MetricSet::from_rows(e, p, config.max_horizon) })
        .collect();
    Ok(CvReport::assemble(series.label().to_string(), config.clone(), origins.len(), excluded, per_method))
}

/// Pools per-origin errors across reports, recomputes every metric and adds
/// boxplot quantiles.
pub fn aggregate_reports(reports: &[CvReport]) -> Result<CvReport> {
    let first = reports.first().ok_or(Error::EmptyInput)?;
    let methods: Vec<ModelFamily> = first.per_method.iter().map(|m| m.method).collect();
    for r in reports {
        let same_methods = r.per_method.iter().map(|m| m.method).eq(methods.iter().copied());
        if r.config != first.config || !same_methods {
            return Err(Error::ConfigMismatch);
        }
    }
    let h = first.config.max_horizon;
    let per_method = methods
        .iter()
        .enumerate()
        .map(|(i, &method)| {
            let mut e = Vec::new();
            let mut p = Vec::new();
            for r in reports {
                e.extend(r.per_method[i].metrics.errors.iter().cloned());
                p.extend(r.per_method[i].metrics.pct_errors.iter().cloned());
            }
            MethodMetrics { method, metrics: MetricSet::from_rows(e, p, h) }
        })
        .collect();
    let label = if reports.len() == 1 { first.series_label.clone() } else { "aggregate".to_string() };
    let origins = reports.iter().map(|r| r.origins).sum();
    let excluded = reports.iter().flat_map(|r| r.excluded.iter().cloned()).collect();
    let mut out = CvReport::assemble(label, first.config.clone(), origins, excluded, per_method);
    out.boxplot = Some(out.compute_boxplot());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthgen::{generate, GenSpec};

    fn quick_config(methods: Vec<ModelFamily>) -> CvConfig {
        CvConfig { window: 40, max_horizon: 5, step: 7, methods, ..CvConfig::default() }
    }

    #[test]
    fn origins_follow_step() {
        let c = CvConfig { window: 10, max_horizon: 3, step: 4, ..CvConfig::default() };
        assert_eq!(c.origins(20), vec![10, 14]);
        assert_eq!(c.origins(12), Vec::<usize>::new());
    }

    #[test]
    fn too_large_config() {
        let x = generate(&GenSpec::white_noise(100, 1).with_offset(10.0)).unwrap();
        let err = rolling_cv(&x, &CvConfig::default()).unwrap_err();
        assert_eq!(err, Error::ConfigTooLargeForSeries { needed: 144, got: 100 });
    }

    #[test]
    fn counts_and_shapes() {
        let x = generate(&GenSpec::white_noise(120, 2).with_offset(10.0)).unwrap();
        let c = quick_config(vec![ModelFamily::Naive, ModelFamily::Mean]);
        let r = rolling_cv(&x, &c).unwrap();
        let n_origins = c.origins(120).len();
        assert_eq!(r.origins, n_origins);
        assert_eq!(r.count(), n_origins);
        assert_eq!(r.experiment_count(), 2 * n_origins * 5);
        for m in &r.per_method {
            assert_eq!(m.metrics.errors.len() * 5, m.metrics.errors.iter().map(Vec::len).sum::<usize>());
        }
        assert_eq!(r.improvements.len(), 2);
        assert_eq!(r.metrics_csv().lines().count(), 1 + 2 * 5);
    }

    #[test]
    fn improvement_sign_consistency() {
        let x = generate(&GenSpec::white_noise(150, 3).with_offset(10.0)).unwrap();
        let r = rolling_cv(&x, &quick_config(vec![ModelFamily::Naive, ModelFamily::Mean])).unwrap();
        let ab = r.improvement(ModelFamily::Naive, ModelFamily::Mean).unwrap().mean.unwrap();
        let ba = r.improvement(ModelFamily::Mean, ModelFamily::Naive).unwrap().mean.unwrap();
        let ma = r.metrics(ModelFamily::Naive).unwrap().mean_mape();
        let mb = r.metrics(ModelFamily::Mean).unwrap().mean_mape();
        assert!((ab + ba * mb / ma).abs() < 1e-9);
    }

    #[test]
    fn single_report_aggregates_to_itself() {
        let x = generate(&GenSpec::white_noise(150, 4).with_offset(10.0)).unwrap();
        let r = rolling_cv(&x, &quick_config(vec![ModelFamily::Naive, ModelFamily::Mean])).unwrap();
        let agg = aggregate_reports(std::slice::from_ref(&r)).unwrap();
        let mut stripped = agg.clone();
        stripped.boxplot = None;
        assert_eq!(stripped, r);
        assert_eq!(agg.boxplot.unwrap().len(), 2 * 5);
    }

    #[test]
    fn pooled_mape_is_count_weighted() {
        let c = quick_config(vec![ModelFamily::Naive, ModelFamily::Mean]);
        let a = rolling_cv(&generate(&GenSpec::white_noise(150, 5).with_offset(10.0)).unwrap(), &c).unwrap();
        let b = rolling_cv(&generate(&GenSpec::white_noise(90, 6).with_offset(10.0)).unwrap(), &c).unwrap();
        let agg = aggregate_reports(&[a.clone(), b.clone()]).unwrap();
        let (na, nb) = (a.count() as f64, b.count() as f64);
        for k in 0..5 {
            let want = (na * a.per_method[0].metrics.mape[k] + nb * b.per_method[0].metrics.mape[k]) / (na + nb);
            assert!((agg.per_method[0].metrics.mape[k] - want).abs() < 1e-9);
        }
        assert_eq!(agg.count(), a.count() + b.count());
    }

    #[test]
    fn mismatched_configs_rejected() {
        let x = generate(&GenSpec::white_noise(150, 5).with_offset(10.0)).unwrap();
        let a = rolling_cv(&x, &quick_config(vec![ModelFamily::Naive])).unwrap();
        let b = rolling_cv(&x, &quick_config(vec![ModelFamily::Mean])).unwrap();
        assert_eq!(aggregate_reports(&[a, b]).unwrap_err(), Error::ConfigMismatch);
        assert_eq!(aggregate_reports(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn failing_origins_are_excluded_for_all_methods() {
        // constant stretch: ARIMA has no admissible model on a flat window
        let mut v = vec![5.0; 60];
        v.extend(generate(&GenSpec::white_noise(60, 9).with_offset(10.0)).unwrap().values());
        let x = TimeSeries::from_values(v).unwrap();
        let c = CvConfig { window: 40, max_horizon: 5, step: 5, methods: vec![ModelFamily::Mean, ModelFamily::Arima], ..CvConfig::default() };
        let r = rolling_cv(&x, &c).unwrap();
        assert!(!r.excluded.is_empty());
        assert_eq!(r.count() + r.excluded.len(), r.origins);
        assert_eq!(r.per_method[0].metrics.count, r.per_method[1].metrics.count);
        assert!(r.excluded.iter().all(|e| e.method == ModelFamily::Arima));
    }
}
