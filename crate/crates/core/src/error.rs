use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("non-positive value {value} at index {index}")]
    NonPositiveValue { index: usize, value: f64 },
    #[error("irregular grid: gap of {gap}s at row {row} (interval {interval}s)")]
    IrregularGrid { row: usize, gap: f64, interval: f64 },
    #[error("timestamps not strictly increasing at row {row}")]
    NonMonotonicTime { row: usize },
    #[error("malformed input at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid interval {0}")]
    InvalidInterval(f64),
    #[error("series too short: need at least {needed}, got {got}")]
    SeriesTooShort { needed: usize, got: usize },
    #[error("max lag {max_lag} too large for length {len}")]
    LagTooLarge { max_lag: usize, len: usize },
    #[error("series has zero variance")]
    ZeroVariance,
    #[error("no usable scale in log-log regression")]
    DegenerateScale,
    #[error("singular regression design matrix")]
    SingularRegression,
    #[error("invalid fractional differencing parameter d = {0}")]
    InvalidD(f64),
    #[error("no admissible model in search grid")]
    NoAdmissibleModel,
    #[error("sample size {n} too small for {params} parameters")]
    DegenerateSampleSize { n: usize, params: usize },
    #[error("invalid interval level {0}")]
    InvalidLevel(f64),
    #[error("invalid model specification: {0}")]
    InvalidSpec(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("zero actual value at index {0}")]
    ZeroActual(usize),
    #[error("zero baseline MAPE")]
    ZeroBaseline,
    #[error("configuration needs {needed} observations, series has {got}")]
    ConfigTooLargeForSeries { needed: usize, got: usize },
    #[error("reports were produced with different configurations")]
    ConfigMismatch,
    #[error("circulant embedding has negative eigenvalue {0}")]
    NonEmbeddableCovariance(f64),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code, qualified by the module that raises it.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "series.empty_input",
            Error::NonPositiveValue { .. } => "series.non_positive_value",
            Error::IrregularGrid { .. } => "series.irregular_grid",
            Error::NonMonotonicTime { .. } => "series.non_monotonic_time",
            Error::Parse { .. } => "series.parse",
            Error::InvalidInterval(_) => "series.invalid_interval",
            Error::SeriesTooShort { .. } => "series.too_short",
            Error::LagTooLarge { .. } => "series.lag_too_large",
            Error::ZeroVariance => "series.zero_variance",
            Error::DegenerateScale => "lrd.degenerate_scale",
            Error::SingularRegression => "lrd.singular_regression",
            Error::InvalidD(_) => "models.invalid_d",
            Error::NoAdmissibleModel => "models.no_admissible_model",
            Error::DegenerateSampleSize { .. } => "models.degenerate_sample_size",
            Error::InvalidLevel(_) => "models.invalid_level",
            Error::InvalidSpec(_) => "synthgen.invalid_spec",
            Error::LengthMismatch(..) => "evaluation.length_mismatch",
            Error::ZeroActual(_) => "evaluation.zero_actual",
            Error::ZeroBaseline => "evaluation.zero_baseline",
            Error::ConfigTooLargeForSeries { .. } => "evaluation.config_too_large",
            Error::ConfigMismatch => "evaluation.config_mismatch",
            Error::NonEmbeddableCovariance(_) => "synthgen.non_embeddable_covariance",
            Error::Io(_) => "cli.io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
