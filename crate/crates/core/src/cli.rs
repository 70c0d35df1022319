//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 for
//! usage or parameter errors, 3 when a resource guard trips.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::field::FieldCtx;
use crate::report::{
    distribution_table, field_info_table, report_table, sequence_table, sums_table, DistributionDoc, FieldInfoDoc,
    SequenceDoc, SumsDoc,
};
use crate::seq::{distribution, SeqParams};
use crate::verify::{verify, Mode, VerifyOptions, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest field the `sums` table is printed for.
pub const SUMS_TABLE_LIMIT: u64 = 1 << 10;

#[derive(Debug, Parser)]
#[command(name = "tricorr", version, about = "Cross-correlation of an m-sequence with its (2^lk+1)/(2^l+1) decimation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every closed form against brute force and print a report.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        sample_size: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exhaustive cross-correlation distribution over all q - 1 shifts.
    Distribution {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Dump one period of u and of its decimation v.
    Sequence {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// S(a) for every a and the quadratic-form report for every (a, b).
    Sums {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Describe GF(2^m) under the chosen modulus.
    FieldInfo {
        /// Extension degree; defaults to 2k when --k is given.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Odd k >= 3 with 2k <= 20.
    #[arg(long)]
    pub k: u32,
    /// Odd l with 0 < l < k and gcd(k, l) = 1.
    #[arg(long)]
    pub l: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Modulus as a hex bit vector including the leading term,
    /// e.g. 0x43 = X^6 + X + 1 (the degree-6 default).
    #[arg(long, value_parser = parse_hex)]
    pub modulus: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, env = "TRICORR_THREADS", default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Sampled,
}

fn parse_hex(s: &str) -> Result<u32, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u32::from_str_radix(digits, 16).map_err(|e| format!("invalid hex modulus {s:?}: {e}"))
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::TooLargeForExhaustive { .. } | Error::DegreeTooLarge(_) => EXIT_RESOURCE,
        Error::InvariantFailure(_) | Error::PredictionMismatch { .. } | Error::UnexpectedDimension(_) => {
            EXIT_CHECK_FAILED
        }
        _ => EXIT_USAGE,
    }
}

struct Output {
    text: String,
    code: i32,
}

fn render<T: Serialize>(format: Format, doc: &T, table: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
            s.push('\n');
            s
        }
        Format::Table => table(doc),
    }
}

fn execute(command: &Command) -> Result<Output, Error> {
    let ok = |text| Ok(Output { text, code: EXIT_OK });
    match command {
        Command::Verify { common, mode, sample_size, seed } => {
            let (ctx, params) = SeqParams::setup(common.k, common.l, common.output.modulus)?;
            let options = VerifyOptions {
                mode: match mode {
                    ModeArg::Full => Mode::Full,
                    ModeArg::Sampled => Mode::Sampled,
                },
                sample_size: usize::try_from(*sample_size).unwrap_or(usize::MAX),
                seed: *seed,
            };
            let report = verify(&ctx, &params, &options)?;
            let code = if report.matched { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(Output { text: render(common.output.format, &report, report_table), code })
        }
        Command::Distribution { common } => {
            let (ctx, params) = SeqParams::setup(common.k, common.l, common.output.modulus)?;
            let dist = distribution(&ctx, &params)?;
            let doc = DistributionDoc::new(&params, &dist);
            ok(render(common.output.format, &doc, |d| distribution_table(d.k, &d.distribution())))
        }
        Command::Sequence { common } => {
            let (ctx, params) = SeqParams::setup(common.k, common.l, common.output.modulus)?;
            ok(render(common.output.format, &SequenceDoc::new(&ctx, &params), sequence_table))
        }
        Command::Sums { common } => {
            let (ctx, params) = SeqParams::setup(common.k, common.l, common.output.modulus)?;
            if params.q > SUMS_TABLE_LIMIT {
                return Err(Error::TooLargeForExhaustive { q: params.q, limit: SUMS_TABLE_LIMIT });
            }
            ok(render(common.output.format, &SumsDoc::new(&ctx, &params)?, sums_table))
        }
        Command::FieldInfo { m, k, output } => {
            let m = match (m, k) {
                (Some(m), _) => *m,
                (None, Some(k)) => 2 * k,
                (None, None) => return Err(Error::BadParameters("field-info needs --m or --k".to_owned())),
            };
            let ctx = FieldCtx::new(m, output.modulus)?;
            ok(render(output.format, &FieldInfoDoc::new(&ctx), field_info_table))
        }
    }
}

fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Verify { common, .. }
        | Command::Distribution { common }
        | Command::Sequence { common }
        | Command::Sums { common } => &common.output,
        Command::FieldInfo { output, .. } => output,
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit status.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let out = output_args(&cli.command);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if out.threads > 0 {
        builder = builder.num_threads(out.threads);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker threads: {e}");
            return EXIT_RESOURCE;
        }
    };
    let result = pool.install(|| execute(&cli.command));
    match result {
        Ok(Output { text, code }) => {
            let written = match &out.output {
                Some(path) => fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            if code != EXIT_OK {
                let _ = writeln!(stderr, "one or more checks failed");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tricorr").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hex_parsing() {
        assert_eq!(parse_hex("0x43"), Ok(0x43));
        assert_eq!(parse_hex("409"), Ok(0x409));
        assert!(parse_hex("0xzz").is_err());
    }

    #[test]
    fn even_k_is_usage_error() {
        let (code, _, err) = run_capture(&["verify", "--k", "4", "--l", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("odd"));
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        assert_eq!(run_capture(&["verify", "--k", "3", "--l", "1", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--k", "3", "--l", "1", "--sample-size", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn version_exits_zero() {
        let (code, out, _) = run_capture(&["--version"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains(env!("CARGO_PKG_VERSION")));
    }

    #[test]
    fn resource_guards() {
        assert_eq!(run_capture(&["distribution", "--k", "9", "--l", "1"]).0, EXIT_RESOURCE);
        assert_eq!(run_capture(&["verify", "--k", "9", "--l", "1"]).0, EXIT_RESOURCE);
        assert_eq!(run_capture(&["sums", "--k", "7", "--l", "1"]).0, EXIT_RESOURCE);
        assert_eq!(run_capture(&["field-info", "--m", "22"]).0, EXIT_RESOURCE);
    }

    #[test]
    fn bad_modulus_is_usage_error() {
        assert_eq!(run_capture(&["distribution", "--k", "3", "--l", "1", "--modulus", "0x45"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["field-info"]).0, EXIT_USAGE);
    }

    #[test]
    fn field_info_json() {
        let (code, out, _) = run_capture(&["field-info", "--m", "6", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["modulus"], "0x43");
        assert_eq!(v["generator_order"], 63);
    }
}
