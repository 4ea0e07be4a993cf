//! The `lrdforecast` command line: `analyze`, `fit`, `forecast`, `crossval`
//! and `simulate`.
//!
//! Exit codes: 0 on success, 1 when arguments or configuration fail
//! validation (nothing is written), 2 when the run itself fails. Errors are
//! reported on stderr as one JSON line `{"error":{"code":..,"message":..}}`.

mod config;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::evaluation::{aggregate_reports, rolling_cv, CvConfig, CvReport};
use crate::lrd::analyze;
use crate::models::{
    fit_arfima_order, fit_arima_order, fit_family, forecast, ArfimaConfig, ArimaConfig, FitBounds, FittedModel,
    ModelDocument, ModelFamily,
};
use crate::numfmt::{format_sig, round_json};
use crate::series::{ingest_csv, transform, GapPolicy, TimeSeries, TransformSpec};
use crate::synthgen::{generate, GenKind, GenSpec};
pub use config::{parse_lambda, CrossvalFile, SimulateFile};

#[derive(Debug, Parser)]
#[command(name = "lrdforecast", version, about = "Long-range dependence analysis and ARFIMA forecasting")]
pub struct Cli {
    /// Log filter (error, warn, info, debug, trace).
    #[arg(long, global = true, default_value = "warn")]
    pub log_level: String,
    /// Where to write the run manifest (defaults to `<output>.manifest.json`).
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hurst estimates, ADF test, memory verdict and daily-peak check.
    Analyze(AnalyzeArgs),
    /// Fit one model family and write the model document.
    Fit(FitArgs),
    /// Forecast from a model document (or a fresh fit) and a history CSV.
    Forecast(ForecastArgs),
    /// Rolling-origin cross-validation over one or more series.
    Crossval(CrossvalArgs),
    /// Generate a synthetic series.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Sampling interval in seconds, overriding inference.
    #[arg(long)]
    pub interval: Option<f64>,
    /// Fill gaps by carrying the last value forward instead of failing.
    #[arg(long)]
    pub fill_gaps: bool,
}

impl InputArgs {
    fn load(&self, path: &Path) -> crate::Result<TimeSeries> {
        let policy = if self.fill_gaps { GapPolicy::Locf } else { GapPolicy::Reject };
        let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Ok(ingest_csv(path, self.interval, policy)?.with_label(label))
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub io: InputArgs,
    /// Box–Cox λ applied before analysis (`none` for raw values).
    #[arg(long, default_value = "none", value_parser = parse_lambda)]
    pub lambda: TransformSpec,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value = "ARFIMA")]
    pub family: ModelFamily,
    /// Box–Cox λ (`0` is the log, `none` disables the transform).
    #[arg(long, default_value = "0", value_parser = parse_lambda)]
    pub lambda: TransformSpec,
    /// Fix the AR order instead of searching.
    #[arg(long)]
    pub p: Option<usize>,
    /// Fix the MA order instead of searching.
    #[arg(long)]
    pub q: Option<usize>,
    /// Fix d (integer for ARIMA, in [0, 0.5) for ARFIMA).
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long)]
    pub max_p: Option<usize>,
    #[arg(long)]
    pub max_q: Option<usize>,
    #[arg(long)]
    pub max_d: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ForecastArgs {
    /// History CSV on the original scale.
    pub input: PathBuf,
    #[command(flatten)]
    pub io: InputArgs,
    /// Model document written by `fit`.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Family to fit when no model document is given.
    #[arg(long, default_value = "ARFIMA")]
    pub family: ModelFamily,
    #[arg(long, default_value = "0", value_parser = parse_lambda)]
    pub lambda: TransformSpec,
    #[arg(long, default_value_t = 48)]
    pub horizon: usize,
    #[arg(long, default_value_t = 0.95)]
    pub level: f64,
    /// `csv` (horizon,point,lower,upper) or `json`.
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CrossvalArgs {
    /// Series CSVs or directories of them.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[command(flatten)]
    pub io: InputArgs,
    /// Flat TOML file with window, horizon, step, methods, level, lambda.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub horizon: Option<usize>,
    #[arg(long)]
    pub step: Option<usize>,
    /// Comma-separated subset of NAIVE,MEAN,ARIMA,ARFIMA.
    #[arg(long, value_delimiter = ',')]
    pub methods: Option<Vec<ModelFamily>>,
    #[arg(long)]
    pub level: Option<f64>,
    #[arg(long, value_parser = parse_lambda)]
    pub lambda: Option<TransformSpec>,
    /// Directory receiving report.json and the CSV projections.
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Flat TOML file with the generator spec; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// white_noise, arma, arfima, fgn or random_walk.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long)]
    pub hurst: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub phi: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub theta: Option<Vec<f64>>,
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Added to every value; the default keeps series positive for log pipelines.
    #[arg(long)]
    pub offset: Option<f64>,
    /// Sampling interval of the emitted timestamps, in seconds.
    #[arg(long, default_value_t = 900.0)]
    pub interval: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure class of a run, mapped to the exit code.
#[derive(Debug)]
pub enum Failure {
    Validation { code: String, message: String },
    Runtime(Error),
}

impl Failure {
    fn validation(code: &str, message: impl Into<String>) -> Self {
        Failure::Validation { code: code.to_string(), message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Validation { .. } => 1,
            Failure::Runtime(_) => 2,
        }
    }

    pub fn to_json_line(&self) -> String {
        let (code, message) = match self {
            Failure::Validation { code, message } => (code.clone(), message.clone()),
            Failure::Runtime(e) => (e.code().to_string(), e.to_string()),
        };
        json!({ "error": { "code": code, "message": message } }).to_string()
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

type RunResult<T> = std::result::Result<T, Failure>;

fn invalid(e: Error) -> Failure {
    Failure::validation(e.code(), e.to_string())
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let f = Failure::validation("cli.usage", e.render().to_string().trim());
            eprintln!("{}", f.to_json_line());
            return f.exit_code();
        }
    };
    let _ = env_logger::Builder::new().parse_filters(&cli.log_level).format_timestamp(None).try_init();
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, echo) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("{}", f.to_json_line());
            f.exit_code()
        }
    }
}

/// Everything a run needs to be reproduced.
#[derive(Debug, Serialize)]
struct Manifest {
    tool: &'static str,
    version: &'static str,
    subcommand: &'static str,
    args: Vec<String>,
    config: Value,
    inputs: Vec<InputDigest>,
    outputs: Vec<String>,
}

#[derive(Debug, Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn digest_files(paths: &[PathBuf]) -> RunResult<Vec<InputDigest>> {
    paths
        .iter()
        .map(|p| {
            let bytes = fs::read(p).map_err(Error::from)?;
            Ok(InputDigest { path: p.display().to_string(), sha256: sha256_hex(&bytes) })
        })
        .collect()
}

/// Pretty JSON with numbers rounded to nine significant digits.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    round_json(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}

fn write_output(path: Option<&Path>, content: &str) -> RunResult<()> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| Failure::Runtime(e.into())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn require_file(path: &Path) -> RunResult<()> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Failure::validation("cli.missing_input", format!("no such file: {}", path.display())))
    }
}

/// Expands directories into their `*.csv` files, sorted by name.
fn expand_inputs(inputs: &[PathBuf]) -> RunResult<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| Failure::Runtime(e.into()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.extension().is_some_and(|x| x.eq_ignore_ascii_case("csv")))
                .collect();
            files.sort();
            if files.is_empty() {
                return Err(Failure::validation("cli.missing_input", format!("no .csv files in {}", p.display())));
            }
            out.extend(files);
        } else {
            require_file(p)?;
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Default manifest location for a single-file output: `<output>.manifest.json`.
fn manifest_next_to(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

fn execute(cli: &Cli, args: Vec<String>) -> RunResult<()> {
    let (subcommand, config, inputs, outputs, default_manifest) = match &cli.command {
        Command::Analyze(a) => run_analyze(a)?,
        Command::Fit(a) => run_fit(a)?,
        Command::Forecast(a) => run_forecast(a)?,
        Command::Crossval(a) => run_crossval(a)?,
        Command::Simulate(a) => run_simulate(a)?,
    };
    if let Some(path) = cli.manifest.clone().or(default_manifest) {
        let manifest = Manifest {
            tool: "lrdforecast",
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            args,
            config,
            inputs: digest_files(&inputs)?,
            outputs: outputs.iter().map(|p| p.display().to_string()).collect(),
        };
        fs::write(&path, to_json_string(&manifest)).map_err(|e| Failure::Runtime(e.into()))?;
    }
    Ok(())
}

/// Subcommand name, resolved config, input files, output files, default manifest path.
type Executed = (&'static str, Value, Vec<PathBuf>, Vec<PathBuf>, Option<PathBuf>);

fn outputs_of(path: &Option<PathBuf>) -> Vec<PathBuf> {
    path.iter().cloned().collect()
}

/// The JSON document emitted by `analyze`.
pub fn analysis_document(series: &TimeSeries) -> crate::Result<Value> {
    let report = analyze(series)?;
    let hurst: serde_json::Map<String, Value> = report
        .classification
        .h_by_method
        .iter()
        .map(|e| {
            let points: Vec<[f64; 2]> = e.points.iter().map(|&(x, y)| [x, y]).collect();
            (
                e.method.name().to_string(),
                json!({
                    "h": e.h,
                    "slope": e.slope,
                    "intercept": e.intercept,
                    "r_squared": e.r_squared,
                    "points": points,
                    "warnings": e.warnings,
                }),
            )
        })
        .collect();
    Ok(json!({
        "label": report.label,
        "n": report.n,
        "verdict": report.classification.verdict,
        "h_median": report.classification.h_median,
        "hurst": hurst,
        "adf": {
            "statistic": report.adf.statistic,
            "lags_used": report.adf.lags_used,
            "critical_values": report.adf.critical_values,
            "stationary_at_5pct": report.adf.stationary_at_5pct,
        },
        "seasonal_peaks": report.seasonal_peaks,
    }))
}

fn run_analyze(a: &AnalyzeArgs) -> RunResult<Executed> {
    require_file(&a.input)?;
    let raw = a.io.load(&a.input)?;
    let series = transform(&raw, a.lambda)?;
    let doc = analysis_document(&series)?;
    write_output(a.out.as_deref(), &to_json_string(&doc))?;
    let config = json!({ "input": a.input, "lambda": a.lambda, "interval": a.io.interval, "fill_gaps": a.io.fill_gaps });
    Ok(("analyze", config, vec![a.input.clone()], outputs_of(&a.out), a.out.as_deref().map(manifest_next_to)))
}

fn fit_with_orders(series: &TimeSeries, a: &FitArgs) -> crate::Result<FittedModel> {
    let bounds = FitBounds {
        arima: ArimaConfig {
            max_p: a.max_p.unwrap_or(ArimaConfig::default().max_p),
            max_q: a.max_q.unwrap_or(ArimaConfig::default().max_q),
            max_d: a.max_d.unwrap_or(ArimaConfig::default().max_d),
        },
        arfima: ArfimaConfig {
            max_p: a.max_p.unwrap_or(ArfimaConfig::default().max_p),
            max_q: a.max_q.unwrap_or(ArfimaConfig::default().max_q),
        },
    };
    let fixed = a.p.is_some() || a.q.is_some() || a.d.is_some();
    match a.family {
        ModelFamily::Arima if fixed => {
            let d = a.d.unwrap_or(0.0);
            if d.fract() != 0.0 || !(0.0..=2.0).contains(&d) {
                return Err(Error::InvalidSpec(format!("ARIMA d = {d} must be 0, 1 or 2")));
            }
            fit_arima_order(series, a.p.unwrap_or(0), d as usize, a.q.unwrap_or(0))
        }
        ModelFamily::Arfima if fixed => fit_arfima_order(series, a.p.unwrap_or(0), a.q.unwrap_or(0), a.d),
        family => fit_family(series, family, &bounds),
    }
}

fn run_fit(a: &FitArgs) -> RunResult<Executed> {
    require_file(&a.input)?;
    if let Some(d) = a.d {
        if a.family == ModelFamily::Arfima && !(0.0..0.5).contains(&d) {
            return Err(invalid(Error::InvalidD(d)));
        }
    }
    let raw = a.io.load(&a.input)?;
    let series = transform(&raw, a.lambda)?;
    let model = fit_with_orders(&series, a)?;
    write_output(a.out.as_deref(), &to_json_string(&model.document()))?;
    let config = json!({
        "input": a.input, "family": a.family, "lambda": a.lambda,
        "p": a.p, "q": a.q, "d": a.d, "max_p": a.max_p, "max_q": a.max_q, "max_d": a.max_d,
    });
    Ok(("fit", config, vec![a.input.clone()], outputs_of(&a.out), a.out.as_deref().map(manifest_next_to)))
}

fn run_forecast(a: &ForecastArgs) -> RunResult<Executed> {
    require_file(&a.input)?;
    if let Some(m) = &a.model {
        require_file(m)?;
    }
    if a.horizon == 0 {
        return Err(Failure::validation("cli.invalid_horizon", "horizon must be at least 1"));
    }
    if !(a.level > 0.0 && a.level < 1.0) {
        return Err(invalid(Error::InvalidLevel(a.level)));
    }
    let history = a.io.load(&a.input)?;
    let mut inputs = vec![a.input.clone()];
    let model = match &a.model {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(e.into()))?;
            let doc: ModelDocument = serde_json::from_str(&text)
                .map_err(|e| Failure::validation("cli.bad_model", format!("{}: {e}", path.display())))?;
            inputs.push(path.clone());
            FittedModel::from_document(&doc, &history)?
        }
        None => fit_family(&transform(&history, a.lambda)?, a.family, &FitBounds::default())?,
    };
    let fc = forecast(&model, a.horizon, a.level)?;
    let body = if a.format == "json" {
        to_json_string(&fc)
    } else {
        let mut s = String::from("horizon,point,lower,upper\n");
        for k in 0..fc.point.len() {
            s += &format!(
                "{},{},{},{}\n",
                fc.horizons[k],
                format_sig(fc.point[k]),
                format_sig(fc.lower[k]),
                format_sig(fc.upper[k])
            );
        }
        s
    };
    write_output(a.out.as_deref(), &body)?;
    let config = json!({
        "input": a.input, "model": a.model, "family": model.family(), "lambda": model.transform,
        "horizon": a.horizon, "level": a.level, "format": a.format,
    });
    Ok(("forecast", config, inputs, outputs_of(&a.out), a.out.as_deref().map(manifest_next_to)))
}

/// Resolves the crossval configuration: defaults, then the config file, then flags.
fn crossval_config(a: &CrossvalArgs) -> RunResult<(CvConfig, Option<PathBuf>)> {
    let mut cfg = CvConfig::default();
    if let Some(path) = &a.config {
        require_file(path)?;
        let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(e.into()))?;
        let file: CrossvalFile =
            toml::from_str(&text).map_err(|e| Failure::validation("cli.bad_config", format!("{}: {e}", path.display())))?;
        file.apply(&mut cfg).map_err(invalid)?;
    }
    if let Some(v) = a.window {
        cfg.window = v;
    }
    if let Some(v) = a.horizon {
        cfg.max_horizon = v;
    }
    if let Some(v) = a.step {
        cfg.step = v;
    }
    if let Some(v) = &a.methods {
        cfg.methods = v.clone();
    }
    if let Some(v) = a.level {
        cfg.level = v;
    }
    if let Some(v) = a.lambda {
        cfg.transform = v;
    }
    cfg.validate().map_err(invalid)?;
    Ok((cfg, a.config.clone()))
}

fn run_crossval(a: &CrossvalArgs) -> RunResult<Executed> {
    let (cfg, config_path) = crossval_config(a)?;
    let files = expand_inputs(&a.inputs)?;
    let mut series = Vec::with_capacity(files.len());
    for f in &files {
        series.push(a.io.load(f)?);
    }
    for s in &series {
        let needed = cfg.window + cfg.max_horizon;
        if s.len() < needed {
            return Err(invalid(Error::ConfigTooLargeForSeries { needed, got: s.len() }));
        }
    }
    fs::create_dir_all(&a.out_dir).map_err(|e| Failure::Runtime(e.into()))?;

    let mut analyses = Vec::new();
    for s in &series {
        let doc = transform(s, cfg.transform).and_then(|t| analysis_document(&t));
        analyses.push(match doc {
            Ok(v) => v,
            Err(e) => json!({ "label": s.label(), "error": { "code": e.code(), "message": e.to_string() } }),
        });
    }
    let reports: Vec<CvReport> = series.iter().map(|s| rolling_cv(s, &cfg)).collect::<crate::Result<_>>()?;
    let aggregate = aggregate_reports(&reports)?;

    let report_path = a.out_dir.join("report.json");
    let metrics_path = a.out_dir.join("metrics.csv");
    let improvements_path = a.out_dir.join("improvements.csv");
    let boxplot_path = a.out_dir.join("boxplot.csv");
    let doc = json!({
        "config": cfg,
        "series": series.iter().map(|s| s.label()).collect::<Vec<_>>(),
        "analyses": analyses,
        "reports": reports,
        "aggregate": aggregate,
        "improvement_matrix": {
            "methods": cfg.methods,
            "mean": aggregate.improvement_matrix(),
        },
        "experiment_count": aggregate.experiment_count(),
    });
    let write = |p: &Path, s: String| fs::write(p, s).map_err(|e| Failure::Runtime(e.into()));
    write(&report_path, to_json_string(&doc))?;
    write(&metrics_path, aggregate.metrics_csv())?;
    write(&improvements_path, aggregate.improvements_csv())?;
    write(&boxplot_path, aggregate.boxplot_csv())?;

    let mut inputs = files;
    inputs.extend(config_path);
    let outputs = vec![report_path.clone(), metrics_path, improvements_path, boxplot_path];
    let manifest = Some(a.out_dir.join("run-manifest.json"));
    Ok(("crossval", serde_json::to_value(&cfg).expect("config serializes"), inputs, outputs, manifest))
}

fn simulate_spec(a: &SimulateArgs) -> RunResult<GenSpec> {
    let mut file = SimulateFile::default();
    if let Some(path) = &a.config {
        require_file(path)?;
        let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(e.into()))?;
        file = toml::from_str(&text).map_err(|e| Failure::validation("cli.bad_config", format!("{}: {e}", path.display())))?;
    }
    macro_rules! overlay {
        ($($f:ident),*) => { $( if a.$f.is_some() { file.$f = a.$f.clone(); } )* };
    }
    overlay!(kind, n, seed, d, hurst, phi, theta, sigma, offset);
    file.to_spec().map_err(invalid)
}

fn run_simulate(a: &SimulateArgs) -> RunResult<Executed> {
    if !(a.interval > 0.0) || !a.interval.is_finite() {
        return Err(invalid(Error::InvalidInterval(a.interval)));
    }
    let spec = simulate_spec(a)?;
    let values = generate(&spec)?.values().to_vec();
    let label = match &spec.kind {
        GenKind::Fgn { .. } => "fgn",
        GenKind::Arfima { .. } => "arfima",
        GenKind::Arma { .. } => "arma",
        GenKind::RandomWalk => "random_walk",
        GenKind::WhiteNoise => "white_noise",
    };
    let series = TimeSeries::new(values, 0, a.interval, label)?;
    write_output(a.out.as_deref(), &series.to_csv_string())?;
    let mut config = serde_json::to_value(&spec).expect("spec serializes");
    config["interval"] = json!(a.interval);
    let inputs = a.config.iter().cloned().collect();
    Ok(("simulate", config, inputs, outputs_of(&a.out), a.out.as_deref().map(manifest_next_to)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_flag_is_a_validation_error() {
        assert_eq!(run(["lrdforecast", "simulate", "--bogus"]), 1);
        assert_eq!(run(["lrdforecast"]), 1);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run(["lrdforecast", "--help"]), 0);
    }

    #[test]
    fn digest_is_hex_sha256() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn manifest_sits_next_to_output() {
        assert_eq!(manifest_next_to(Path::new("/tmp/a.csv")), PathBuf::from("/tmp/a.csv.manifest.json"));
    }
}
