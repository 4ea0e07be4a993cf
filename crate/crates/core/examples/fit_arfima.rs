//! Fit ARFIMA and ARIMA to a simulated long-memory series and compare them.
//!
//! cargo run --release --example fit_arfima

use std::time::Instant;

use lrdforecast::models::{fit_arfima, fit_arima, forecast, ArfimaConfig, ArimaConfig};
use lrdforecast::series::{transform, TransformSpec};
use lrdforecast::synthgen::{generate, GenSpec};

fn main() -> lrdforecast::Result<()> {
    let series = generate(&GenSpec::arfima(2000, 11, 0.35).with_offset(20.0))?;
    let logged = transform(&series, TransformSpec::log())?;

    let t = Instant::now();
    let arfima = fit_arfima(&logged, ArfimaConfig::default())?;
    println!(
        "ARFIMA({}, {:.3}, {})  aicc {:.2}  sigma2 {:.3e}  ({:?})",
        arfima.spec.p,
        arfima.spec.d,
        arfima.spec.q,
        arfima.aicc.unwrap_or(f64::NAN),
        arfima.sigma2,
        t.elapsed()
    );

    let t = Instant::now();
    let arima = fit_arima(&logged, ArimaConfig::default())?;
    println!(
        "ARIMA({}, {}, {})  aicc {:.2}  sigma2 {:.3e}  ({:?})",
        arima.spec.p,
        arima.spec.d,
        arima.spec.q,
        arima.aicc.unwrap_or(f64::NAN),
        arima.sigma2,
        t.elapsed()
    );

    // one short window, the size used in cross-validation
    let window = logged.slice(1000, 1096)?;
    let t = Instant::now();
    let m = fit_arfima(&window, ArfimaConfig::default())?;
    let f = forecast(&m, 24, 0.95)?;
    println!("window of 96: d = {:.3}, 24-step forecast in {:?}", m.spec.d, t.elapsed());
    println!("h=1  {:.3} [{:.3}, {:.3}]", f.point[0], f.lower[0], f.upper[0]);
    println!("h=24 {:.3} [{:.3}, {:.3}]", f.point[23], f.lower[23], f.upper[23]);
    let t = Instant::now();
    let _ = fit_arima(&window, ArimaConfig::default())?;
    println!("ARIMA on the same window in {:?}", t.elapsed());
    Ok(())
}
