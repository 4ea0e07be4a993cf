//! Rolling-origin evaluation of the four forecasters on a few series, pooled.
//!
//! cargo run --release --example rolling_cross_validation

use lrdforecast::evaluation::{aggregate_reports, rolling_cv, CvConfig};
use lrdforecast::models::ModelFamily;
use lrdforecast::synthgen::{generate, GenSpec};

fn main() -> lrdforecast::Result<()> {
    let config = CvConfig { window: 96, max_horizon: 24, step: 8, ..CvConfig::default() };
    let mut reports = Vec::new();
    for (i, d) in [0.25, 0.35, 0.45].into_iter().enumerate() {
        let series = generate(&GenSpec::arfima(400, 30 + i as u64, d).with_offset(25.0))?.with_label(format!("d{d}"));
        let report = rolling_cv(&series, &config)?;
        println!("{}: {} origins, {} excluded", report.series_label, report.origins, report.excluded.len());
        reports.push(report);
    }
    let pooled = aggregate_reports(&reports)?;

    println!("\n{:<7} {:>8} {:>8} {:>8}", "method", "MAPE h1", "h24", "mean");
    for m in &pooled.per_method {
        let mape = &m.metrics.mape;
        println!("{:<7} {:>8.3} {:>8.3} {:>8.3}", m.method.name(), mape[0], mape[23], m.metrics.mean_mape());
    }

    println!("\nmean improvement of row over column (%)");
    print!("{:<7}", "");
    for m in &config.methods {
        print!(" {:>8}", m.name());
    }
    println!();
    for (row, cand) in pooled.improvement_matrix().iter().zip(&config.methods) {
        print!("{:<7}", cand.name());
        for v in row {
            match v {
                Some(x) => print!(" {x:>8.2}"),
                None => print!(" {:>8}", "-"),
            }
        }
        println!();
    }

    let p = pooled.improvement(ModelFamily::Arima, ModelFamily::Arfima).expect("pair present");
    println!("\n{}: mean {:.2}%, max {:.2}%", p.pair_name(), p.mean.unwrap_or(f64::NAN), p.max.unwrap_or(f64::NAN));
    println!("{} forecast experiments", pooled.experiment_count());
    print!("\n{}", pooled.metrics_csv().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}
