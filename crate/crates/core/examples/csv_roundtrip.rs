//! Read a series CSV with a gap, transform it, and write it back.
//!
//! cargo run --release --example csv_roundtrip

use lrdforecast::series::{inverse_transform, parse_csv, transform, GapPolicy, TransformSpec};

fn main() -> lrdforecast::Result<()> {
    let text = "timestamp,value\n0,120.5\n900,131.25\n1800,118\n3600,142.75\n4500,125\n";

    match parse_csv(text, None, GapPolicy::Reject) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("strict ingest: {} ({})", e, e.code()),
    }
    let series = parse_csv(text, None, GapPolicy::Locf)?;
    println!("filled: {:?} every {} s", series.values(), series.interval());

    let logged = transform(&series, TransformSpec::log())?;
    let boxcox = transform(&series, TransformSpec::box_cox(0.5))?;
    println!("log:     {:?}", logged.values().iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());
    println!("lambda .5 {:?}", boxcox.values().iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());
    let back = inverse_transform(&boxcox);
    println!("back:    {:?}", back.values());

    let csv = series.to_csv_string();
    print!("\n{csv}");
    let again = parse_csv(&csv, None, GapPolicy::Reject)?;
    assert_eq!(again.values(), series.values());
    println!("round trip ok");
    Ok(())
}
