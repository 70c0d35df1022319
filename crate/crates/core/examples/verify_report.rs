// Full reconciliation report for k = 5, as a table and as JSON.

use tricorr::report::report_table;
use tricorr::verify::{verify, VerifyOptions};
use tricorr::SeqParams;

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (ctx, params) = SeqParams::setup(5, 3, None)?;
    let report = verify(&ctx, &params, &VerifyOptions::full())?;
    print!("{}", report_table(&report));
    let json = serde_json::to_string_pretty(&report)?;
    println!("JSON report: {} bytes", json.len());
    assert!(report.matched);
    Ok(())
}

fn main() {
    run_example().expect("verification example");
}
