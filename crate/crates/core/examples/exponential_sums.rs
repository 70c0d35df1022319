// S(a), T(a, b) and the radical-dimension classification of T.

use tricorr::field::FieldElement;
use tricorr::sums::ExpSums;
use tricorr::SeqParams;

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (ctx, params) = SeqParams::setup(3, 1, None)?;
    let sums = ExpSums::new(&ctx, &params);
    println!("delta = {}, r = {}", params.delta, params.r);

    for tau in [0u64, 1, 2, 3] {
        let a = ctx.antilog(tau);
        let cover = sums.three_cover(a)?;
        println!(
            "a = g^{tau}: S = {:>4}, T(a,0) = {:>4}, T(ra,delta) = {:>4}, T(r^-1 a,delta^-1) = {:>4}, identity holds: {}",
            cover.s, cover.t_a_0, cover.t_ra_delta, cover.t_rinv_a_delta_inv, cover.holds()
        );
        for b in [FieldElement::ZERO, params.delta, ctx.square(params.delta)] {
            let rep = sums.classify(a, b)?;
            println!(
                "    b = {:>4}: radical dim {} over GF(2), {} over GF(4), type {}, T = {}",
                b.to_string(),
                rep.radical_dim_gf2,
                rep.radical_dim_gf4,
                rep.form_type,
                rep.t_direct
            );
        }
    }
    for h in [1, 3, 9] {
        let g = ctx.generator();
        println!("h = {h}: sum at g = {}, at 1 = {}", sums.gauss_sum(h, g)?, sums.gauss_sum(h, FieldElement::ONE)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("exponential sums example");
}
