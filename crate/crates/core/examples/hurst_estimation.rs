//! Estimate the Hurst exponent three ways and classify memory.
//!
//! cargo run --release --example hurst_estimation

use lrdforecast::lrd::{
    classify_memory, hurst_aggregated_variance, hurst_periodogram, hurst_rescaled_range, AggVarConfig,
};
use lrdforecast::synthgen::{generate, GenSpec};

fn main() -> lrdforecast::Result<()> {
    let cases = [
        ("white noise", GenSpec::white_noise(8192, 3)),
        ("fGn H=0.7", GenSpec::fgn(8192, 3, 0.7)),
        ("fGn H=0.9", GenSpec::fgn(8192, 3, 0.9)),
        ("ARFIMA d=0.2", GenSpec::arfima(8192, 3, 0.2)),
        ("ARFIMA d=0.4", GenSpec::arfima(8192, 3, 0.4)),
        ("AR(1) 0.8", GenSpec::arma(8192, 3, vec![0.8], vec![])),
    ];
    println!("{:<14} {:>8} {:>8} {:>8} {:>8}  verdict", "series", "aggvar", "R/S", "pgram", "median");
    for (name, spec) in &cases {
        let x = generate(spec)?;
        let av = hurst_aggregated_variance(&x, AggVarConfig::default())?;
        let rs = hurst_rescaled_range(&x, 8)?;
        let pg = hurst_periodogram(&x, 0.1)?;
        let c = classify_memory(&x)?;
        println!(
            "{name:<14} {:>8.3} {:>8.3} {:>8.3} {:>8.3}  {:?}",
            av.h, rs.h, pg.h, c.h_median, c.verdict
        );
    }

    // the regression behind one estimate
    let x = generate(&GenSpec::fgn(8192, 3, 0.8))?;
    let e = hurst_periodogram(&x, 0.1)?;
    println!(
        "\nperiodogram fit on fGn 0.8: slope {:.3}, intercept {:.3}, r2 {:.3}, {} points, H = {:.3}",
        e.slope,
        e.intercept,
        e.r_squared,
        e.points.len(),
        e.h
    );
    Ok(())
}
