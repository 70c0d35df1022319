// Sampled verification over GF(2^18), beyond the exhaustive limit.

use tricorr::verify::{verify, VerifyOptions};
use tricorr::SeqParams;

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let (ctx, params) = SeqParams::setup(9, 1, None)?;
    let report = verify(&ctx, &params, &VerifyOptions::sampled(samples, 1))?;
    let sample = report.sample.as_ref().expect("sampled mode records its sample");
    println!(
        "k = 9: {} shifts ({} cube, {} noncube), lemma checks at {} points",
        sample.shifts, sample.cube_shifts, sample.noncube_shifts, sample.lemma_points
    );
    for (value, count) in report.empirical.iter() {
        println!("{value:>8} {count:>8}");
    }
    println!("verdict: {}", if report.matched { "match" } else { "mismatch" });
    assert!(report.matched);
    Ok(())
}

fn main() {
    run_example().expect("sampled example");
}
