//! Acceptance criteria, one line per criterion. Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tricorr::arith::gcd;
use tricorr::field::FieldElement;
use tricorr::seq::{cross_correlation, cross_correlation_field, decimated, distribution, msequence, CorrelationSweep};
use tricorr::sums::ExpSums;
use tricorr::verify::{delta_check, moment_check, theoretical_distribution, v3_identity_sweep, verify, VerifyOptions};
use tricorr::{cli, CorrelationDistribution, SeqParams};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn admissible_l(k: u32) -> Vec<u32> {
    (1..k).step_by(2).filter(|&l| gcd(u64::from(k), u64::from(l)) == 1).collect()
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn expected(k: u32, n0: u64, n2: u64, n3: u64) -> CorrelationDistribution {
    let p = 1i64 << (k + 1);
    CorrelationDistribution::from_counts([(-1, n0), (-1 + p, n2), (-1 - p, n3)])
}

/// Full verification of (k, l) against the frozen distribution, within a time budget.
fn reproduce(k: u32, l: u32, modulus: Option<u32>, frozen: &CorrelationDistribution, budget: Duration) -> Outcome {
    let (ctx, params) = SeqParams::setup(k, l, modulus).map_err(|e| e.to_string())?;
    let (report, elapsed) = timed(|| verify(&ctx, &params, &VerifyOptions::full()));
    let report = report.map_err(|e| e.to_string())?;
    ensure(&report.empirical == frozen, || format!("k={k} l={l}: distribution {:?}", report.empirical.entries()))?;
    ensure(report.matched, || {
        format!("k={k} l={l}: failed checks {:?}", report.failures().map(|c| &c.id).collect::<Vec<_>>())
    })?;
    ensure(report.theoretical.as_distribution() == *frozen, || format!("k={k}: closed forms disagree"))?;
    ensure(elapsed < budget, || format!("k={k} l={l}: took {elapsed:?}, budget {budget:?}"))?;
    Ok(format!("k={k} l={l} {:?} in {elapsed:.2?}", report.empirical.entries().iter().map(|e| (e.value, e.count)).collect::<Vec<_>>()))
}

fn criterion_1() -> Outcome {
    let frozen = expected(3, 48, 9, 6);
    let t = theoretical_distribution(3).map_err(|e| e.to_string())?;
    ensure(t.value_plus_count == 9 && t.value_minus_count == 6, || "N2/N3 formulas".into())?;
    ensure(t.value_neg1_count == 48 && t.printed_n0() == 64, || "corrected vs printed N0".into())?;
    let (ctx, params) = SeqParams::setup(3, 1, None).map_err(|e| e.to_string())?;
    let report = verify(&ctx, &params, &VerifyOptions::full()).map_err(|e| e.to_string())?;
    let note = report.annotations.iter().find(|a| a.id == "theorem-n0");
    ensure(
        note.is_some_and(|a| a.status == "typo" && a.paper_value == "(2^k+1)(7*2^k+8)/9" && a.corrected_count == 48),
        || "missing N0 typo annotation".into(),
    )?;
    reproduce(3, 1, None, &frozen, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let frozen = expected(5, 792, 121, 110);
    let mut lines = Vec::new();
    for l in [1, 3] {
        lines.push(reproduce(5, l, None, &frozen, Duration::from_secs(2))?);
    }
    Ok(lines.join("; "))
}

fn criterion_3() -> Outcome {
    let frozen = expected(7, 12728, 1849, 1806);
    let theory = theoretical_distribution(7).map_err(|e| e.to_string())?;
    ensure(theory.as_distribution() == frozen, || "closed forms at k=7".into())?;
    let mut notes = Vec::new();
    for l in admissible_l(7) {
        let (ctx, params) = SeqParams::setup(7, l, None).map_err(|e| e.to_string())?;
        let (single, t1) = timed(|| pool(1).install(|| distribution(&ctx, &params)));
        let (eight, t8) = timed(|| pool(8).install(|| distribution(&ctx, &params)));
        let (single, eight) = (single.map_err(|e| e.to_string())?, eight.map_err(|e| e.to_string())?);
        ensure(single == frozen && eight == frozen, || format!("l={l}: {:?}", single.entries()))?;
        ensure(t1 < Duration::from_secs(120), || format!("l={l}: single-threaded {t1:?}"))?;
        ensure(t8 < Duration::from_secs(30), || format!("l={l}: 8 threads {t8:?}"))?;
        notes.push(format!("l={l} {t1:.2?}/{t8:.2?}"));
    }
    // independent brute force through the unpacked definition, l = 1
    let (ctx, params) = SeqParams::setup(7, 1, None).map_err(|e| e.to_string())?;
    let (u, v) = (msequence(&ctx), decimated(&ctx, &params));
    let brute: CorrelationDistribution =
        (0..params.n()).map(|tau| cross_correlation(&u, &v, tau, params.n()).unwrap()).collect();
    ensure(brute == frozen, || format!("unpacked brute force {:?}", brute.entries()))?;
    Ok(format!("{{-1: 12728, 255: 1849, -257: 1806}} for l in {:?}; 1/8 threads {}", admissible_l(7), notes.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut shifts = 0;
    for k in [3, 5] {
        for l in admissible_l(k) {
            let (ctx, params) = SeqParams::setup(k, l, None).map_err(|e| e.to_string())?;
            let (u, v) = (msequence(&ctx), decimated(&ctx, &params));
            for tau in 0..params.n() {
                let seq = cross_correlation(&u, &v, tau, params.n()).map_err(|e| e.to_string())?;
                let field = cross_correlation_field(&ctx, &params, tau).map_err(|e| e.to_string())?;
                ensure(seq == field, || format!("k={k} l={l} tau={tau}: {seq} vs {field}"))?;
                shifts += 1;
            }
        }
    }
    Ok(format!("{shifts} shifts agree"))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for k in [3, 5, 7] {
        let (ctx, params) = SeqParams::setup(k, 1, None).map_err(|e| e.to_string())?;
        let (m1, m2) = moment_check(&ctx, &params).map_err(|e| e.to_string())?;
        ensure(m1.agrees() && m2.agrees(), || format!("k={k}: {m1:?} {m2:?}"))?;
        parts.push(format!("k={k}: {}/{}", m1.closed_form, m2.closed_form));
    }
    ensure(parts[0] == "k=3: 48/3840", || parts[0].clone())?;
    Ok(parts.join(", "))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for (k, l) in [(3, 1), (5, 1), (5, 3)] {
        let (ctx, params) = SeqParams::setup(k, l, None).map_err(|e| e.to_string())?;
        let sums = ExpSums::new(&ctx, &params);
        for a in ctx.nonzero_elements() {
            let tc = sums.three_cover(a).map_err(|e| e.to_string())?;
            ensure(tc.holds(), || format!("k={k} l={l} a={a}: {tc:?}"))?;
            count += 1;
        }
    }
    Ok(format!("3S(a) = T(a,0) + T(ra,delta) + T(r^-1 a,delta^-1) at {count} points"))
}

fn criterion_7() -> Outcome {
    let (ctx, params) = SeqParams::setup(3, 1, None).map_err(|e| e.to_string())?;
    let sums = ExpSums::new(&ctx, &params);
    let mut by_dim = [0; 3];
    for a in ctx.nonzero_elements() {
        for b in [FieldElement::ZERO, params.delta, ctx.square(params.delta)] {
            let rep = sums.classify(a, b).map_err(|e| format!("a={a} b={b}: {e}"))?;
            let want = [-8, 16, -32][rep.radical_dim_gf4 as usize];
            ensure(rep.t_direct == want && rep.t_predicted == want, || format!("a={a} b={b}: {rep:?}"))?;
            ensure(rep.t_direct.rem_euclid(3) == 1, || format!("a={a} b={b}: not 1 mod 3"))?;
            by_dim[rep.radical_dim_gf4 as usize] += 1;
        }
    }
    Ok(format!("189 pairs, dims 0/1/2 seen {}/{}/{}", by_dim[0], by_dim[1], by_dim[2]))
}

fn criterion_8() -> Outcome {
    let (ctx, params) = SeqParams::setup(3, 1, None).map_err(|e| e.to_string())?;
    let sums = ExpSums::new(&ctx, &params);
    for h in [1u64, 3, 9] {
        for a in ctx.nonzero_elements() {
            let direct = sums.gauss_sum(h, a).map_err(|e| e.to_string())?;
            let log = ctx.dlog(a).map_err(|e| e.to_string())?;
            let want = if log % h == 0 { (h as i64 - 1) * 8 } else { -8 };
            ensure(direct == want, || format!("h={h} a={a}: {direct} vs {want}"))?;
        }
    }
    Ok("h in {1, 3, 9}, all 63 a".into())
}

fn criterion_9() -> Outcome {
    let mut pairs = 0;
    for k in [3, 5, 7] {
        for l in admissible_l(k) {
            let (ctx, params) = SeqParams::setup(k, l, None).map_err(|e| e.to_string())?;
            ensure(delta_check(&ctx, &params), || format!("k={k} l={l}: delta"))?;
            pairs += 1;
        }
    }
    let checked = v3_identity_sweep(10_000).map_err(|f| format!("v3 identity fails at f={f}"))?;
    Ok(format!("delta primitive for {pairs} (k, l); v3 identity for {checked} odd f"))
}

fn criterion_10() -> Outcome {
    for (k, l) in [(3, 1), (5, 1), (5, 3)] {
        let (ctx, params) = SeqParams::setup(k, l, None).map_err(|e| e.to_string())?;
        let sweep = CorrelationSweep::for_params(&ctx, &params);
        let (plus, minus, n1) = (-1 + (1i64 << (k + 1)), -1 - (1i64 << (k + 1)), -1 - (1i64 << k));
        for (tau, c) in sweep.all().into_iter().enumerate() {
            let cube = ctx.is_cube(ctx.antilog(tau as u64)).map_err(|e| e.to_string())?;
            ensure(!(c == plus && !cube), || format!("k={k} tau={tau}: {plus} at a noncube"))?;
            ensure(!(c == minus && cube), || format!("k={k} tau={tau}: {minus} at a cube"))?;
            ensure(c != n1, || format!("k={k} tau={tau}: {n1} occurs"))?;
        }
    }
    Ok("k = 3, 5".into())
}

fn criterion_11() -> Outcome {
    let mut lines = Vec::new();
    for modulus in [0x43, 0x61] {
        lines.push(reproduce(3, 1, Some(modulus), &expected(3, 48, 9, 6), Duration::from_secs(1))?);
    }
    for modulus in [0x409, 0x481] {
        for l in [1, 3] {
            lines.push(reproduce(5, l, Some(modulus), &expected(5, 792, 121, 110), Duration::from_secs(2))?);
        }
    }
    Ok("moduli 0x43, 0x61 (m=6) and 0x409, 0x481 (m=10)".into())
}

fn criterion_12() -> Outcome {
    let outputs: Vec<(i32, Vec<u8>)> = [1, 4, 8]
        .iter()
        .map(|t| {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let threads = t.to_string();
            let argv = ["tricorr", "verify", "--k", "5", "--l", "1", "--format", "json", "--threads", &threads];
            (cli::run_with(argv, &mut out, &mut err), out)
        })
        .collect();
    ensure(outputs.iter().all(|(code, _)| *code == 0), || "nonzero exit".into())?;
    ensure(outputs.windows(2).all(|w| w[0].1 == w[1].1), || "reports differ across thread counts".into())?;
    Ok(format!("{} identical bytes for threads 1, 4, 8", outputs[0].1.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 distribution k=3", criterion_1),
        ("2 distribution k=5", criterion_2),
        ("3 distribution k=7", criterion_3),
        ("4 method equivalence", criterion_4),
        ("5 moment identities", criterion_5),
        ("6 three-cover identity", criterion_6),
        ("7 rank-value table", criterion_7),
        ("8 gauss sums", criterion_8),
        ("9 delta and v3", criterion_9),
        ("10 stratification", criterion_10),
        ("11 basis independence", criterion_11),
        ("12 determinism", criterion_12),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
