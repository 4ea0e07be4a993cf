//! Generate each synthetic process and write one of them as a series CSV.
//!
//! cargo run --release --example simulate_series

use lrdforecast::series::acf;
use lrdforecast::synthgen::{generate, theoretical_acf_arfima0d0, GenKind, GenSpec};

fn main() -> lrdforecast::Result<()> {
    let specs = [
        ("white noise", GenSpec::white_noise(4096, 1)),
        ("AR(1) 0.6", GenSpec::arma(4096, 1, vec![0.6], vec![])),
        ("ARFIMA d=0.3", GenSpec::arfima(4096, 1, 0.3)),
        ("ARFIMA(1,0.2,1)", GenSpec::new(GenKind::Arfima { d: 0.2, phi: vec![0.3], theta: vec![-0.2] }, 4096, 1)),
        ("fGn H=0.8", GenSpec::fgn(4096, 1, 0.8)),
        ("random walk", GenSpec::random_walk(4096, 1)),
    ];
    println!("{:<18} {:>8} {:>8} {:>8} {:>8}", "process", "rho1", "rho10", "rho50", "mean");
    for (name, spec) in &specs {
        let x = generate(spec)?;
        let r = acf(&x, 50)?;
        println!("{name:<18} {:>8.3} {:>8.3} {:>8.3} {:>8.3}", r.rho[1], r.rho[10], r.rho[50], x.mean());
    }

    let theory = theoretical_acf_arfima0d0(0.3, 50)?;
    println!("ARFIMA d=0.3 theory  {:>8.3} {:>8.3} {:>8.3}", theory[1], theory[10], theory[50]);

    // the offset keeps values positive for log-transform pipelines
    let series = generate(&GenSpec::arfima(672, 7, 0.35).with_sigma(2.0).with_offset(50.0))?;
    let path = std::env::temp_dir().join("lrdforecast-simulated.csv");
    std::fs::write(&path, series.to_csv_string())?;
    println!("wrote {} rows to {}", series.len(), path.display());
    Ok(())
}
