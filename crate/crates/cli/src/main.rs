//! `reals`: digits, comparisons, suprema and measurements from the command line.
//!
//! Exit codes: 0 on success, 2 for usage errors (bad flags, unknown oracle
//! or demo, expression syntax), 3 when a computation fails.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use reals_core::expr::{self, parse};
use reals_core::gallery::{run_demo, DEMOS};
use reals_core::magnitudes::{
    cardinality_sample, check_axioms, check_measure_map, length_sample, Cardinality, Lengths,
    NonStrictLengths, Segment,
};
use reals_core::real::compare_at;
use reals_core::sup::{measure, named_cut, named_oracle, supremum, SupReadout, ORACLE_PATTERNS};
use reals_core::{Comparison, RealError, SignNotation, DEFAULT_CAP};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "reals", version, about = "Exact real arithmetic on decimal expansions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// How negative values are printed: `-6` or `6*`.
    #[arg(long, value_enum, global = true, default_value_t = Notation::Minus)]
    notation: Notation,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Notation {
    Minus,
    Star,
}

impl From<Notation> for SignNotation {
    fn from(n: Notation) -> Self {
        match n {
            Notation::Minus => SignNotation::Minus,
            Notation::Star => SignNotation::Star,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    Cardinality,
    Length,
    /// Lengths ordered by `<=`: fails the axioms on purpose.
    LengthNonstrict,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First N digits of an expression.
    Digits {
        expr: String,
        #[arg(short = 'n', long = "digits", default_value_t = 10)]
        n: usize,
        /// Largest working precision, in decimal places.
        #[arg(long, env = "REALS_CAP", default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Compare two expressions at precision M: LESS, GREATER or INDISTINGUISHABLE.
    Compare {
        left: String,
        right: String,
        #[arg(short = 'm', long = "precision", default_value_t = 20)]
        m: u32,
        #[arg(long, env = "REALS_CAP", default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Supremum of a named set, digit by digit.
    Sup {
        #[arg(long)]
        oracle: String,
        #[arg(short = 'n', long = "digits", default_value_t = 10)]
        n: usize,
        /// How far a trailing run of nines is probed.
        #[arg(long, env = "REALS_CAP", default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Measure of a named object against the unit.
    Measure {
        #[arg(long)]
        oracle: String,
        #[arg(short = 'n', long = "digits", default_value_t = 10)]
        n: usize,
        #[arg(long, env = "REALS_CAP", default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Check the magnitude axioms and measure properties on a sample.
    Axioms {
        #[arg(long, value_enum)]
        system: System,
        #[arg(long, default_value_t = 50)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run a gallery demo; without a name, list them.
    Gallery {
        name: Option<String>,
        #[arg(short = 'n')]
        n: Option<u64>,
    },
}

/// Errors split by exit code.
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<RealError> for Failure {
    fn from(e: RealError) -> Self {
        match e {
            RealError::Parse { kind: "oracle", text } => Failure::Usage(format!(
                "unknown oracle {text:?}; expected one of {}",
                ORACLE_PATTERNS.join(", ")
            )),
            RealError::Parse { kind: "demo", text } => Failure::Usage(format!(
                "unknown demo {text:?}; expected one of {}",
                DEMOS.iter().map(|d| d.0).collect::<Vec<_>>().join(", ")
            )),
            e @ RealError::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Compute(e.to_string()),
        }
    }
}

fn parse_expr(text: &str) -> Result<expr::Expr, Failure> {
    parse(text).map_err(|e| Failure::Usage(e.to_string()))
}

fn sup_report(r: &SupReadout, bare: bool) -> Report {
    let value = match (&r.nines, bare) {
        (Some(_), true) => r.normalized(),
        (_, true) => r.raw(),
        (_, false) => format!("{}…", r.raw()),
    };
    let mut rep = Report::new(value, Some(r.raw()));
    rep.precision_used = Some(r.digits.len() as u32);
    if let Some(t) = &r.nines {
        rep.precision_used = Some(t.probed_to as u32);
        rep.details.push(format!(
            "nines from digit {} through digit {}; normalized: {}",
            t.from,
            t.probed_to,
            r.normalized()
        ));
    }
    rep
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let notation = SignNotation::from(cli.notation);
    match &cli.command {
        Command::Digits { expr, n, cap } => {
            if *n == 0 {
                return Err(Failure::Usage("-n must be at least 1".into()));
            }
            let e = parse_expr(expr)?;
            let r = expr::eval(&e, *n, *cap)?;
            let mut rep = Report::new(r.render(notation), Some(r.readout.plain()));
            rep.indeterminate_at = r.indeterminate_at();
            rep.precision_used = Some(r.precision_used());
            rep.sign_unknown = r.readout.sign_unknown;
            Ok(rep)
        }
        Command::Compare { left, right, m, cap } => {
            let x = expr::enclose(&parse_expr(left)?, *cap)?;
            let y = expr::enclose(&parse_expr(right)?, *cap)?;
            let word = match compare_at(&x, &y, *m)? {
                Comparison::Less => "LESS",
                Comparison::Greater => "GREATER",
                Comparison::Indistinguishable(_) => "INDISTINGUISHABLE",
            };
            let mut rep = Report::new(word.into(), None);
            rep.precision_used = Some(*m);
            Ok(rep)
        }
        Command::Sup { oracle, n, cap } => {
            let res = supremum(named_oracle(oracle)?)?;
            Ok(sup_report(&res.readout(*n, *cap as usize)?, false))
        }
        Command::Measure { oracle, n, cap } => {
            let res = measure(named_cut(oracle)?)?;
            Ok(sup_report(&res.readout(*n, *cap as usize)?, true))
        }
        Command::Axioms { system, size, seed } => {
            let (axioms, props) = match system {
                System::Cardinality => {
                    let carrier = cardinality_sample(*size, *seed);
                    (
                        check_axioms(&Cardinality, &carrier)?,
                        check_measure_map(&Cardinality, &carrier, Cardinality::count)?,
                    )
                }
                System::Length => {
                    let carrier = length_sample(*size, *seed);
                    (
                        check_axioms(&Lengths, &carrier)?,
                        check_measure_map(&Lengths, &carrier, |s: &Segment| s.length().clone())?,
                    )
                }
                System::LengthNonstrict => {
                    let carrier = length_sample(*size, *seed);
                    (
                        check_axioms(&NonStrictLengths, &carrier)?,
                        check_measure_map(&NonStrictLengths, &carrier, |s: &Segment| {
                            s.length().clone()
                        })?,
                    )
                }
            };
            let verdict = if axioms.all_pass() && props.all_pass() { "PASS" } else { "FAIL" };
            let mut rep = Report::new(verdict.into(), None);
            rep.details = axioms
                .to_string()
                .lines()
                .chain(props.to_string().lines())
                .map(String::from)
                .collect();
            Ok(rep)
        }
        Command::Gallery { name: None, .. } => {
            let mut rep = Report::new(format!("{} demos", DEMOS.len()), None);
            rep.details = DEMOS
                .iter()
                .map(|(name, param, default)| format!("{name}  -n {param} (default {default})"))
                .collect();
            Ok(rep)
        }
        Command::Gallery { name: Some(name), n } => {
            let demo = run_demo(name, *n)?;
            let mut rep = Report::new(demo.headline().to_string(), None);
            rep.details = demo.lines[1..].to_vec();
            Ok(rep)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(rep) => match cli.format {
            Format::Plain => (rep.plain(), 0),
            Format::Json => (rep.json(), 0),
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
