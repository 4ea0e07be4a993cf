//! Point forecasts and prediction intervals from the four model families.
//!
//! cargo run --release --example forecast_intervals

use lrdforecast::models::{fit_family, forecast, FitBounds, ModelFamily};
use lrdforecast::series::{transform, TransformSpec};
use lrdforecast::synthgen::{generate, GenSpec};

fn main() -> lrdforecast::Result<()> {
    // 96 hourly-like points of history and 24 held-out values
    let full = generate(&GenSpec::arfima(120, 21, 0.35).with_offset(30.0))?;
    let history = full.slice(0, 96)?;
    let actual = &full.values()[96..];
    let logged = transform(&history, TransformSpec::log())?;

    for family in ModelFamily::ALL {
        let model = fit_family(&logged, family, &FitBounds::default())?;
        let f = forecast(&model, 24, 0.95)?;
        let w = f.widths();
        println!(
            "{:<7} (p,d,q)=({}, {:.3}, {})  width h1 {:.2}  h6 {:.2}  h24 {:.2}",
            family.name(),
            model.spec.p,
            model.spec.d,
            model.spec.q,
            w[0],
            w[5],
            w[23]
        );
        for k in [0, 5, 23] {
            println!(
                "        h={:<2} point {:>7.2}  [{:>7.2}, {:>7.2}]  actual {:>7.2}",
                f.horizons[k], f.point[k], f.lower[k], f.upper[k], actual[k]
            );
        }
    }

    // intervals live on the log scale, so they are asymmetric after back-transform
    let model = fit_family(&logged, ModelFamily::Naive, &FitBounds::default())?;
    let f = forecast(&model, 1, 0.95)?;
    println!(
        "\nNAIVE h=1: {:.2} below, {:.2} above the point",
        f.point[0] - f.lower[0],
        f.upper[0] - f.point[0]
    );
    Ok(())
}
