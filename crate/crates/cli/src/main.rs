use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use geomseq_core::correlate::{autocorrelation_profile, profile_to_csv};
use geomseq_core::gf::{ExtFieldContext, DEFAULT_MAX_FIELD};
use geomseq_core::lincomp::{berlekamp_massey, minimal_poly_gcd};
use geomseq_core::seqgen::{to_binary, to_text, NtuFamily, SeqKind, SymbolSequence};
use geomseq_core::theorems::{
    distribution_summary, sweep, verify_tuple, AChoice, SweepCase, VerificationReport, VerifyOptions,
};

mod grid;

#[derive(Parser)]
#[command(name = "geomseq", version, about = "Generalized NTU sequences: generate, analyze, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one period of a sequence.
    Gen(SeqArgs),
    /// Linear complexity and minimal polynomial, by both methods.
    Lc(SeqArgs),
    /// Periodic autocorrelation profile of a binary sequence.
    Acf(SeqArgs),
    /// Check every applicable closed form for one (p, m, ℓ, A).
    Verify(VerifyArgs),
    /// Check closed forms over a parameter grid.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
    /// Packed binary (`gen` only, ℓ = 2).
    Bin,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    ell: u32,
    /// Integer, or `residue` / `nonresidue` for the smallest such value.
    #[arg(long = "A", default_value = "1")]
    a: String,
    /// Primitive polynomial, ascending coefficients: `2,2,1` is x^2 + 2x + 2.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeqArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value = "T")]
    seq: String,
    #[arg(long)]
    e: Option<usize>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Also run Berlekamp–Massey and require it to match the gcd method.
    #[arg(long)]
    bm_check: bool,
    /// Skip the autocorrelation comparisons.
    #[arg(long)]
    no_acf: bool,
}

impl CheckArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            bm_cross_check: self.bm_check,
            correlation: !self.no_acf,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Shifts: list/ranges such as `0,3,10-12`, or `all`.
    #[arg(long)]
    e: Option<String>,
    #[command(flatten)]
    check: CheckArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Primes: list/ranges such as `3-50,53`; non-primes inside ranges are skipped.
    #[arg(long)]
    p: String,
    #[arg(long)]
    m: String,
    #[arg(long, default_value = "2")]
    ell: String,
    /// Integer, `residue`, `nonresidue`, or `all`.
    #[arg(long = "A", default_value = "1")]
    a: String,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    e: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    check: CheckArgs,
    #[command(flatten)]
    out: OutArgs,
}

fn max_field() -> Result<u64> {
    match std::env::var("GEOMSEQ_MAX_FIELD") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("GEOMSEQ_MAX_FIELD must be a positive integer (got `{v}`)")),
        Err(_) => Ok(DEFAULT_MAX_FIELD),
    }
}

fn family(args: &FieldArgs) -> Result<NtuFamily> {
    let poly = args.poly.as_deref().map(grid::parse_poly).transpose()?;
    let ctx = ExtFieldContext::with_limit(args.p, args.m, poly.as_deref(), max_field()?)?;
    let a = match grid::parse_a(&args.a)? {
        AChoice::All => bail!("--A all is only accepted by `sweep`"),
        choice => choice.select(&ctx, args.ell)?,
    };
    let Some(&a) = a.first() else {
        bail!("no nonzero A of the requested class exists for p = {}", args.p);
    };
    Ok(NtuFamily::new(ctx, args.ell, a)?)
}

fn build_sequence(args: &SeqArgs) -> Result<SymbolSequence> {
    let fam = family(&args.field)?;
    let kind: SeqKind = args.seq.parse()?;
    if kind != SeqKind::Interleaved && args.e.is_some() {
        bail!("--e only applies to --seq Se");
    }
    Ok(fam.build(kind, args.e)?)
}

/// Write all of `bytes` or nothing: a sibling temp file is renamed into place.
fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".partial");
            let tmp = PathBuf::from(tmp);
            fs::write(&tmp, bytes).with_context(|| format!("cannot write {}", tmp.display()))?;
            if let Err(err) = fs::rename(&tmp, path) {
                let _ = fs::remove_file(&tmp);
                return Err(err).with_context(|| format!("cannot write {}", path.display()));
            }
        }
    }
    Ok(())
}

fn cmd_gen(args: &SeqArgs) -> Result<Vec<u8>> {
    let seq = build_sequence(args)?;
    Ok(match args.out.format.unwrap_or(Format::Text) {
        Format::Text => to_text(&seq).into_bytes(),
        Format::Bin => to_binary(&seq)?,
        Format::Csv => {
            let mut s = String::from("n,symbol\n");
            for (i, v) in seq.symbols().iter().enumerate() {
                s.push_str(&format!("{i},{v}\n"));
            }
            s.into_bytes()
        }
        Format::Json => {
            let v = json!({
                "schema": 1,
                "tag": seq.tag(),
                "alphabet": seq.alphabet(),
                "period": seq.period(),
                "symbols": seq.symbols(),
            });
            (serde_json::to_string_pretty(&v)? + "\n").into_bytes()
        }
    })
}

fn cmd_lc(args: &SeqArgs) -> Result<Vec<u8>> {
    let seq = build_sequence(args)?;
    let gcd = minimal_poly_gcd(&seq);
    let bm = berlekamp_massey(&seq);
    if gcd.minimal_poly != bm.minimal_poly {
        bail!(
            "berlekamp_massey (L = {}) and gcd (L = {}) disagree",
            bm.linear_complexity,
            gcd.linear_complexity
        );
    }
    let poly = gcd.minimal_poly.to_string();
    let hex = gcd.minimal_poly.to_hex();
    let out = match args.out.format.unwrap_or(Format::Text) {
        Format::Text => format!(
            "sequence: {}\nperiod: {}\nlinear_complexity: {}\nminimal_poly: {poly}\nminimal_poly_hex: {hex}\nmethods: berlekamp_massey, gcd (agree)\n",
            describe(&seq),
            gcd.period,
            gcd.linear_complexity,
        ),
        Format::Csv => {
            let mut s = String::from("method,period,linear_complexity,minimal_poly_hex\n");
            for r in [&bm, &gcd] {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.method.as_str(),
                    r.period,
                    r.linear_complexity,
                    r.minimal_poly.to_hex()
                ));
            }
            s
        }
        Format::Json => {
            let v = json!({
                "schema": 1,
                "tag": seq.tag(),
                "period": gcd.period,
                "linear_complexity": gcd.linear_complexity,
                "minimal_poly": poly,
                "minimal_poly_hex": hex,
                "methods": [bm.method, gcd.method],
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Bin => bail!("--format bin is only accepted by `gen`"),
    };
    Ok(out.into_bytes())
}

fn describe(seq: &SymbolSequence) -> String {
    match seq.tag() {
        Some(t) => {
            let e = t.e.map(|e| format!(" e={e}")).unwrap_or_default();
            format!("{} (p={} m={} ell={} A={}{e})", t.kind, t.p, t.m, t.ell, t.a)
        }
        None => "custom".into(),
    }
}

fn cmd_acf(args: &SeqArgs) -> Result<Vec<u8>> {
    let seq = build_sequence(args)?;
    let profile = autocorrelation_profile(&seq)?;
    let out = match args.out.format.unwrap_or(Format::Csv) {
        Format::Csv => profile_to_csv(&profile),
        Format::Json => {
            let dist: Vec<[i64; 2]> = profile
                .distribution()
                .into_iter()
                .map(|(v, c)| [v, c as i64])
                .collect();
            let v = json!({
                "schema": 1,
                "tag": seq.tag(),
                "values": profile.values,
                "distribution": dist,
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Text => format!(
            "sequence: {}\nperiod: {}\ndistribution (value:count): {}\n",
            describe(&seq),
            profile.period(),
            distribution_summary(&profile.values)
        ),
        Format::Bin => bail!("--format bin is only accepted by `gen`"),
    };
    Ok(out.into_bytes())
}

fn render(report: &VerificationReport, format: Format) -> Result<Vec<u8>> {
    Ok(match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_table(),
        Format::Bin => bail!("--format bin is only accepted by `gen`"),
    }
    .into_bytes())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(Vec<u8>, bool)> {
    let fam = family(&args.field)?;
    let es = grid::parse_e(args.e.as_deref())?;
    if args.field.ell != 2 && es != geomseq_core::theorems::EChoice::None {
        bail!("--e needs ℓ = 2: interleaved sequences are binary");
    }
    let es = es.resolve(fam.long_period())?;
    let report = verify_tuple(&fam, &es, &args.check.options())?;
    Ok((render(&report, args.out.format.unwrap_or(Format::Text))?, report.any_violated()))
}

fn cmd_sweep(args: &SweepArgs) -> Result<(Vec<u8>, bool)> {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot configure the worker pool")?;
    }
    let ps = grid::parse_primes(&args.p)?;
    let ms: Vec<usize> = grid::parse_list(&args.m)?.into_iter().map(|(v, _)| v as usize).collect();
    let ells: Vec<u32> = grid::parse_list(&args.ell)?.into_iter().map(|(v, _)| v as u32).collect();
    let a = grid::parse_a(&args.a)?;
    let e = grid::parse_e(args.e.as_deref())?;
    let poly = args.poly.as_deref().map(grid::parse_poly).transpose()?;
    if poly.is_some() && (ps.len() != 1 || ms.len() != 1) {
        bail!("--poly needs a single p and a single m");
    }
    let limit = max_field()?;
    let mut cases = Vec::new();
    for &p in &ps {
        for &m in &ms {
            for &ell in &ells {
                // only prime ℓ dividing p - 1 qualify
                if ell < 2 || !geomseq_core::gf::is_prime(ell as u64) || (p - 1) % ell as u64 != 0 {
                    continue;
                }
                cases.push(SweepCase {
                    p,
                    m,
                    ell,
                    poly: poly.clone(),
                    a,
                    e: e.clone(),
                });
            }
        }
    }
    let report = sweep(&cases, &args.check.options(), limit)?;
    Ok((render(&report, args.out.format.unwrap_or(Format::Csv))?, report.any_violated()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (bytes, out, violated) = match &cli.command {
        Command::Gen(a) => (cmd_gen(a)?, &a.out.out, false),
        Command::Lc(a) => (cmd_lc(a)?, &a.out.out, false),
        Command::Acf(a) => (cmd_acf(a)?, &a.out.out, false),
        Command::Verify(a) => {
            let (b, v) = cmd_verify(a)?;
            (b, &a.out.out, v)
        }
        Command::Sweep(a) => {
            let (b, v) = cmd_sweep(a)?;
            (b, &a.out.out, v)
        }
    };
    emit(out.as_deref(), &bytes)?;
    if violated {
        eprintln!("at least one prediction was violated");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
