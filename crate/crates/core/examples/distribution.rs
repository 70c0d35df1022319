// Exhaustive correlation distributions next to their closed forms.

use tricorr::report::distribution_table;
use tricorr::seq::distribution;
use tricorr::verify::theoretical_distribution;
use tricorr::SeqParams;

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (k, l) in [(3, 1), (5, 1), (5, 3), (7, 1)] {
        let (ctx, params) = SeqParams::setup(k, l, None)?;
        let dist = distribution(&ctx, &params)?;
        let theory = theoretical_distribution(k)?;
        println!("k = {k}, l = {l}, d = {}", params.d);
        print!("{}", distribution_table(k, &dist));
        println!("closed forms agree: {}\n", dist == theory.as_distribution());
        assert_eq!(dist, theory.as_distribution());
    }
    Ok(())
}

fn main() {
    run_example().expect("distribution example");
}
