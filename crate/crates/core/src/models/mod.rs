//! Naïve, mean, ARIMA and ARFIMA forecasters.

pub(crate) mod arma;
mod fit;
mod forecast;
pub(crate) mod fracdiff;
pub(crate) mod optimize;

pub use arma::{ar_is_stationary, ma_is_invertible};
pub use fit::{
    aicc, fit_arfima, fit_arfima_order, fit_arima, fit_arima_order, fit_mean, fit_naive, ArfimaConfig, ArimaConfig,
    D_MAX,
};
pub use forecast::{forecast, ForecastResult};
pub use fracdiff::{frac_diff_coeffs, frac_difference, FracDiffCoeffs};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{TimeSeries, TransformSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ModelFamily {
    Naive,
    Mean,
    Arima,
    Arfima,
}

impl ModelFamily {
    pub const ALL: [ModelFamily; 4] = [ModelFamily::Naive, ModelFamily::Mean, ModelFamily::Arima, ModelFamily::Arfima];

    pub fn name(self) -> &'static str {
        match self {
            ModelFamily::Naive => "NAIVE",
            ModelFamily::Mean => "MEAN",
            ModelFamily::Arima => "ARIMA",
            ModelFamily::Arfima => "ARFIMA",
        }
    }
}

impl std::str::FromStr for ModelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NAIVE" => Ok(ModelFamily::Naive),
            "MEAN" => Ok(ModelFamily::Mean),
            "ARIMA" => Ok(ModelFamily::Arima),
            "ARFIMA" => Ok(ModelFamily::Arfima),
            other => Err(Error::InvalidSpec(format!("unknown model family `{other}`"))),
        }
    }
}

impl std::fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: ModelFamily,
    pub p: usize,
    /// Integer for ARIMA, in [0, 0.5) for ARFIMA, zero otherwise.
    pub d: f64,
    pub q: usize,
    pub include_mean: bool,
}

impl ModelSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match self.family {
            ModelFamily::Naive | ModelFamily::Mean => self.p == 0 && self.q == 0 && self.d == 0.0,
            ModelFamily::Arima => [0.0, 1.0, 2.0].contains(&self.d),
            ModelFamily::Arfima => (0.0..0.5).contains(&self.d),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!("{self:?}")))
        }
    }
}

/// A fitted forecaster together with the (transformed) training window it
/// was fitted on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedModel {
    pub spec: ModelSpec,
    pub phi: Vec<f64>,
    pub theta: Vec<f64>,
    /// Level μ on the transformed scale (last value for NAIVE).
    pub mean: f64,
    pub sigma2: f64,
    pub residuals: Vec<f64>,
    pub aicc: Option<f64>,
    pub loglik: Option<f64>,
    pub transform: TransformSpec,
    pub n: usize,
    #[serde(skip)]
    pub(crate) history: Vec<f64>,
}

/// The on-disk model document written by the `fit` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub family: ModelFamily,
    pub p: usize,
    pub d: f64,
    pub q: usize,
    pub phi: Vec<f64>,
    pub theta: Vec<f64>,
    pub mean: f64,
    pub sigma2: f64,
    pub aicc: Option<f64>,
    pub transform: TransformSpec,
    #[serde(default)]
    pub include_mean: bool,
    #[serde(default)]
    pub n: usize,
}

impl FittedModel {
    pub fn family(&self) -> ModelFamily {
        self.spec.family
    }

    pub fn document(&self) -> ModelDocument {
        ModelDocument {
            family: self.spec.family,
            p: self.spec.p,
            d: self.spec.d,
            q: self.spec.q,
            phi: self.phi.clone(),
            theta: self.theta.clone(),
            mean: self.mean,
            sigma2: self.sigma2,
            aicc: self.aicc,
            transform: self.transform,
            include_mean: self.spec.include_mean,
            n: self.n,
        }
    }

    /// Rebuilds a forecaster from a stored document and a history series
    /// given on the original scale; the document's transform is applied.
    pub fn from_document(doc: &ModelDocument, history: &TimeSeries) -> Result<Self> {
        let spec = ModelSpec { family: doc.family, p: doc.p, d: doc.d, q: doc.q, include_mean: doc.include_mean };
        spec.validate()?;
        if doc.phi.len() != doc.p || doc.theta.len() != doc.q {
            return Err(Error::InvalidSpec("coefficient count does not match orders".into()));
        }
        let transformed = crate::series::transform(history, doc.transform)?;
        let values = transformed.values().to_vec();
        let mean = match doc.family {
            ModelFamily::Naive => *values.last().ok_or(Error::EmptyInput)?,
            _ => doc.mean,
        };
        Ok(Self {
            spec,
            phi: doc.phi.clone(),
            theta: doc.theta.clone(),
            mean,
            sigma2: doc.sigma2,
            residuals: Vec::new(),
            aicc: doc.aicc,
            loglik: None,
            transform: doc.transform,
            n: values.len(),
            history: values,
        })
    }

    /// The training values on the transformed scale.
    pub fn history(&self) -> &[f64] {
        &self.history
    }
}

/// Search bounds for every family, used by [`fit_family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct FitBounds {
    pub arima: ArimaConfig,
    pub arfima: ArfimaConfig,
}

/// Fits one family with its default search on an already transformed series.
pub fn fit_family(series: &TimeSeries, family: ModelFamily, bounds: &FitBounds) -> Result<FittedModel> {
    match family {
        ModelFamily::Naive => fit_naive(series),
        ModelFamily::Mean => fit_mean(series),
        ModelFamily::Arima => fit_arima(series, bounds.arima),
        ModelFamily::Arfima => fit_arfima(series, bounds.arfima),
    }
}
