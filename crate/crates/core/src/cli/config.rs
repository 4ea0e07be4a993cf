//! Flat TOML config files for `crossval` and `simulate`.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::evaluation::CvConfig;
use crate::series::TransformSpec;
use crate::synthgen::{GenKind, GenSpec};

/// Default level shift for simulated series so they can go through a log transform.
pub const SIMULATE_DEFAULT_OFFSET: f64 = 100.0;

/// `0` or `log` for the log transform, `none` for no transform, any other
/// number for Box–Cox with that λ.
pub fn parse_lambda(s: &str) -> std::result::Result<TransformSpec, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "none" | "identity" => Ok(TransformSpec::identity()),
        "log" => Ok(TransformSpec::log()),
        other => match other.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(TransformSpec::box_cox(v)),
            _ => Err(format!("invalid lambda `{s}`: expected a number, `log` or `none`")),
        },
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ListOrString {
    List(Vec<String>),
    Joined(String),
}

impl ListOrString {
    fn items(&self) -> Vec<String> {
        match self {
            ListOrString::List(v) => v.clone(),
            ListOrString::Joined(s) => s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LambdaValue {
    Number(f64),
    Text(String),
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossvalFile {
    pub window: Option<usize>,
    pub horizon: Option<usize>,
    pub step: Option<usize>,
    pub methods: Option<ListOrString>,
    pub level: Option<f64>,
    pub lambda: Option<LambdaValue>,
}

impl CrossvalFile {
    pub fn apply(&self, cfg: &mut CvConfig) -> Result<()> {
        if let Some(v) = self.window {
            cfg.window = v;
        }
        if let Some(v) = self.horizon {
            cfg.max_horizon = v;
        }
        if let Some(v) = self.step {
            cfg.step = v;
        }
        if let Some(m) = &self.methods {
            cfg.methods = m.items().iter().map(|s| s.parse()).collect::<Result<_>>()?;
        }
        if let Some(v) = self.level {
            cfg.level = v;
        }
        match &self.lambda {
            Some(LambdaValue::Number(v)) => cfg.transform = TransformSpec::box_cox(*v),
            Some(LambdaValue::Text(s)) => cfg.transform = parse_lambda(s).map_err(Error::InvalidSpec)?,
            None => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateFile {
    pub kind: Option<String>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub d: Option<f64>,
    pub hurst: Option<f64>,
    pub phi: Option<Vec<f64>>,
    pub theta: Option<Vec<f64>>,
    pub sigma: Option<f64>,
    pub offset: Option<f64>,
}

impl SimulateFile {
    pub fn to_spec(&self) -> Result<GenSpec> {
        let missing = |what: &str| Error::InvalidSpec(format!("missing `{what}`"));
        let kind_name = self.kind.as_deref().ok_or_else(|| missing("kind"))?;
        let phi = self.phi.clone().unwrap_or_default();
        let theta = self.theta.clone().unwrap_or_default();
        let kind = match kind_name.to_ascii_lowercase().replace('-', "_").as_str() {
            "white_noise" | "wn" => GenKind::WhiteNoise,
            "arma" => GenKind::Arma { phi, theta },
            "arfima" => GenKind::Arfima { d: self.d.ok_or_else(|| missing("d"))?, phi, theta },
            "fgn" => GenKind::Fgn { hurst: self.hurst.ok_or_else(|| missing("hurst"))? },
            "random_walk" | "rw" => GenKind::RandomWalk,
            other => return Err(Error::InvalidSpec(format!("unknown kind `{other}`"))),
        };
        let spec = GenSpec::new(kind, self.n.ok_or_else(|| missing("n"))?, self.seed.unwrap_or(0))
            .with_sigma(self.sigma.unwrap_or(1.0))
            .with_offset(self.offset.unwrap_or(SIMULATE_DEFAULT_OFFSET));
        spec.validate()?;
        Ok(spec)
    }
}
