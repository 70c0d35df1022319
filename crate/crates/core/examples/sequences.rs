// The m-sequence u, its decimation v, and C_tau computed two ways.

use tricorr::seq::{cross_correlation, cross_correlation_field, decimated, msequence};
use tricorr::SeqParams;

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (ctx, params) = SeqParams::setup(3, 1, None)?;
    let u = msequence(&ctx);
    let v = decimated(&ctx, &params);
    let show = |bits: &[u8]| bits.iter().map(|b| b.to_string()).collect::<String>();
    println!("d = {}", params.d);
    println!("u (period {}): {}", u.period(), show(u.bits()));
    println!("v (period {}): {}", v.period(), show(v.bits()));

    for tau in [0, 1, 5, 21] {
        let direct = cross_correlation(&u, &v, tau, params.n())?;
        let field = cross_correlation_field(&ctx, &params, tau)?;
        println!("C_{tau:<2} = {direct:>4} (field sum {field:>4})");
        assert_eq!(direct, field);
    }
    Ok(())
}

fn main() {
    run_example().expect("sequence example");
}
