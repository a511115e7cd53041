//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 on any claim
//! failure or mismatch, 2 on usage or I/O errors.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use trigseq::bfile::{self, render_rational, Generator};
use trigseq::checks::{run_checks, RunConfig};
use trigseq::exact::{self, Rational};
use trigseq::report::VerificationReport;

#[derive(Parser)]
#[command(
    name = "trigseq",
    version,
    about = "Exact and high-precision checks for the sequences S_n, T_n and their trigonometric series identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this path instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Fan independent checks out over this many workers (0 = auto)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Working precision in bits (>= 64)
    #[arg(long = "prec-bits", global = true, default_value_t = 256)]
    prec_bits: usize,

    /// Series term budget (per-target defaults when omitted)
    #[arg(long, global = true)]
    terms: Option<u64>,

    /// Upper index for sequence sweeps
    #[arg(long = "max-n", global = true)]
    max_n: Option<u64>,

    /// Exclusive upper bound for prime sweeps
    #[arg(long = "prime-bound", global = true)]
    prime_bound: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate n, S_n, T_n
    Seq {
        #[arg(long = "min-n", default_value_t = 0)]
        min_n: u64,
    },
    /// Exact claim sweeps
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
    },
    /// Coefficient-level series identities up to --order
    Series {
        #[arg(long, default_value_t = 50)]
        order: usize,
    },
    /// High-precision analytic identity checks
    Eval {
        #[arg(value_enum)]
        target: EvalTarget,
        /// Exact rational evaluation point "p/q" (checked against the
        /// target's domain before any conversion to floating point)
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Exact rational t for the trigonometric identity
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// For conjecture: evaluate at x = ±1/(6√3) instead of --x
        #[arg(long, value_enum)]
        boundary: Option<BoundarySign>,
        /// Custom a for the integral target (rational)
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Custom b for the integral target (rational)
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Custom upper limit x1 for the integral target (rational)
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<String>,
    },
    /// Root growth of S_n and the factorial approximation behind it
    Radius,
    /// Cross-check OEIS b-files against the exact generators
    Oeis {
        /// b-file paths; the generator is inferred from the file name
        /// unless --generator is given
        files: Vec<PathBuf>,
        /// s | t | central-binomial | c3n | c6n3n
        #[arg(long)]
        generator: Option<String>,
    },
    /// Run every registered check
    Report {
        /// Additionally cross-check these b-files
        #[arg(long = "oeis-file")]
        oeis_files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Divisibility,
    Congruences,
    Integrality,
    Guo,
    Lemma32,
}

impl VerifySuite {
    fn token(self) -> &'static str {
        match self {
            VerifySuite::Divisibility => "divisibility",
            VerifySuite::Congruences => "congruences",
            VerifySuite::Integrality => "integrality",
            VerifySuite::Guo => "guo",
            VerifySuite::Lemma32 => "lemma32",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalTarget {
    Gf,
    Sum13,
    Sum14,
    Conjecture,
    Prop,
    Integral,
    Fvalue,
}

impl EvalTarget {
    fn token(self) -> &'static str {
        match self {
            EvalTarget::Gf => "gf",
            EvalTarget::Sum13 => "sum13",
            EvalTarget::Sum14 => "sum14",
            EvalTarget::Conjecture => "conjecture",
            EvalTarget::Prop => "prop",
            EvalTarget::Integral => "integral",
            EvalTarget::Fvalue => "fvalue",
        }
    }

    fn default_terms(self) -> u64 {
        match self {
            EvalTarget::Sum14 => 1_000_000,
            EvalTarget::Conjecture => 40_000,
            _ => 10_000,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundarySign {
    Pos,
    Neg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.prec_bits < 64 {
        return Err("--prec-bits must be at least 64".into());
    }

    let mut cfg = RunConfig {
        prec_bits: cli.prec_bits,
        ..RunConfig::default()
    };
    if let Some(n) = cli.max_n {
        cfg.max_n = n;
    }
    if let Some(b) = cli.prime_bound {
        cfg.prime_bound = b;
    }
    if let Some(t) = cli.terms {
        cfg.terms = t;
    }

    match &cli.command {
        Command::Seq { min_n } => {
            let max_n = cli.max_n.unwrap_or(8);
            if *min_n > max_n {
                return Err(format!("--min-n {min_n} exceeds --max-n {max_n}"));
            }
            let table = exact::sequence_table(*min_n, max_n);
            let text = render_sequence_table(&table, cli.format);
            emit(&cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => run_report(&cli, cfg, suite.token()),
        Command::Series { order } => {
            cfg.series_order = *order;
            run_report(&cli, cfg, "series")
        }
        Command::Eval {
            target,
            x,
            t,
            boundary,
            a,
            b,
            x1,
        } => {
            if cli.terms.is_none() {
                cfg.terms = target.default_terms();
            }
            if let Some(xs) = x {
                let xr = parse_rational(xs)?;
                check_domain(*target, &xr)?;
                cfg.x = Some(xr);
            }
            if let Some(ts) = t {
                cfg.t = Some(parse_rational(ts)?);
            }
            if let Some(bs) = boundary {
                cfg.conjecture_boundary = Some(match bs {
                    BoundarySign::Pos => 1,
                    BoundarySign::Neg => -1,
                });
            }
            match (a, b, x1) {
                (None, None, None) => {}
                (Some(a), Some(b), Some(x1)) => {
                    let (ar, br, x1r) =
                        (parse_rational(a)?, parse_rational(b)?, parse_rational(x1)?);
                    let two = Rational::from(exact::Integer::from(2));
                    if ar == two || ar == -two.clone() {
                        return Err("a = ±2 is a singular parameter".into());
                    }
                    let bx1 = &br * &x1r;
                    if &bx1 * &bx1 > Rational::one() {
                        return Err(format!("|b·x1| = |{}| exceeds 1", render_rational(&bx1)));
                    }
                    cfg.integral_params = Some((ar, br, x1r));
                }
                _ => return Err("--a, --b and --x1 must be given together".into()),
            }
            run_report(&cli, cfg, target.token())
        }
        Command::Radius => run_report(&cli, cfg, "radius"),
        Command::Oeis { files, generator } => {
            if files.is_empty() {
                return Err("no b-files given".into());
            }
            let mut reports = Vec::new();
            for path in files {
                reports.push(crosscheck_file(path, generator.as_deref())?);
            }
            let merged = VerificationReport::merge("oeis", reports);
            finish(&cli, merged)
        }
        Command::Report { oeis_files } => {
            cfg.terms = cli.terms.unwrap_or(40_000);
            let mut report = run_checks("all", &cfg, cli.jobs).expect("registry is not empty");
            if !oeis_files.is_empty() {
                let mut reports = vec![report];
                for path in oeis_files {
                    reports.push(crosscheck_file(path, None)?);
                }
                report = VerificationReport::merge("all", reports);
            }
            finish(&cli, report)
        }
    }
}

fn run_report(cli: &Cli, cfg: RunConfig, selector: &str) -> Result<ExitCode, String> {
    let report = run_checks(selector, &cfg, cli.jobs)
        .ok_or_else(|| format!("unknown suite {selector:?}"))?;
    finish(cli, report)
}

fn finish(cli: &Cli, report: VerificationReport) -> Result<ExitCode, String> {
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    emit(cli, &text)?;
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(path) => {
            let mut f = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            f.write_all(text.as_bytes())
                .map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(())
        }
    }
}

fn crosscheck_file(path: &PathBuf, generator: Option<&str>) -> Result<VerificationReport, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let table =
        bfile::parse_bfile(BufReader::new(file), &name).map_err(|e| format!("{name}: {e}"))?;
    let gen = match generator {
        Some(tok) => Generator::parse(tok).ok_or_else(|| format!("unknown generator {tok:?}"))?,
        None => Generator::from_name(&name)
            .ok_or_else(|| format!("cannot infer generator from {name:?}; pass --generator"))?,
    };
    bfile::crosscheck(&table, gen).map_err(|e| format!("{name}: {e}"))
}

/// Exact "p/q" (or integer) parsing; the domain checks below run on the
/// rational, so boundary cases are decided exactly, not in floating point.
fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    match text.split_once('/') {
        None => exact::Integer::from_str(text)
            .map(Rational::from)
            .map_err(|e| format!("bad rational {text:?}: {e}")),
        Some((num, den)) => {
            let n = exact::Integer::from_str(num.trim())
                .map_err(|e| format!("bad numerator {num:?}: {e}"))?;
            let d = exact::Integer::from_str(den.trim())
                .map_err(|e| format!("bad denominator {den:?}: {e}"))?;
            if d == exact::Integer::from(0) {
                return Err(format!("bad rational {text:?}: zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

fn check_domain(target: EvalTarget, x: &Rational) -> Result<(), String> {
    let zero = Rational::from(exact::Integer::from(0));
    match target {
        EvalTarget::Gf => {
            let bound = Rational::new(1.into(), 108.into());
            if x <= &zero || x >= &bound {
                return Err(format!(
                    "x = {} outside the open interval (0, 1/108); use `eval sum14` for the endpoint",
                    render_rational(x)
                ));
            }
        }
        EvalTarget::Conjecture => {
            // |x| ≤ 1/(6√3) ⇔ x² ≤ 1/108, decidable exactly
            let bound = Rational::new(1.into(), 108.into());
            if x * x > bound {
                return Err(format!(
                    "x = {} outside |x| <= 1/(6*sqrt(3))",
                    render_rational(x)
                ));
            }
        }
        EvalTarget::Prop if x * x > Rational::one() => {
            return Err(format!("x = {} outside [-1, 1]", render_rational(x)));
        }
        _ => {}
    }
    Ok(())
}

fn render_sequence_table(table: &[exact::SequenceRecord], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("n,S_n,T_n\n");
            for rec in table {
                out.push_str(&format!(
                    "{},{},{}\n",
                    rec.index,
                    render_rational(&rec.s_value),
                    rec.t_value
                        .as_ref()
                        .map(|t| t.to_string())
                        .unwrap_or_default()
                ));
            }
            out
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = table
                .iter()
                .map(|rec| {
                    serde_json::json!({
                        "n": rec.index,
                        "s": render_rational(&rec.s_value),
                        "t": rec.t_value.as_ref().map(|t| t.to_string()),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "name": "sequence-table",
                "entries": entries,
            }))
            .expect("table serialization")
        }
        Format::Text => {
            let mut out = String::from("     n  S_n                                T_n\n");
            for rec in table {
                out.push_str(&format!(
                    "{:>6}  {:<34} {}\n",
                    rec.index,
                    render_rational(&rec.s_value),
                    rec.t_value
                        .as_ref()
                        .map(|t| t.to_string())
                        .unwrap_or_else(|| "-".into())
                ));
            }
            out
        }
    }
}
