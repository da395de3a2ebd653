//! `newform`: exact dimensions and Hecke traces on spaces of newforms for
//! `Gamma_0(N)`, table generation, and the level 14 q-expansion checks.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage error.

mod cache;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use newform_trace::arith::{factor, format_rat, nstar, Factored};
use newform_trace::dimension::dim_newform;
use newform_trace::eigensplit::{dim_split, split_dimensions, trace_split};
use newform_trace::hecke_trace::{trace_full, trace_newform};
use newform_trace::qexpansion::{
    delta14, hecke_verify, m2_14_basis, weight4_forms, QSeries, TraceTarget, DEFAULT_PRECISION,
};
use newform_trace::{Error, TraceQuery};

const MIN_PRECISION: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "newform",
    version,
    about = "Dimensions and Hecke traces on spaces of newforms for Gamma_0(N)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of S_k^0(N), optionally of a sign subspace S_k^0(N; i).
    Dim {
        #[arg(short = 'k', long = "weight")]
        weight: u32,
        #[arg(short = 'N', long = "level")]
        level: u64,
        /// A divisor i of N^× (the part of N exactly dividing it), or `all`.
        #[arg(long)]
        split: Option<SplitArg>,
    },
    /// Exact trace of T(l) on S_k^0(N), on S_k^0(N; i), or on all of S_k(N).
    Trace {
        #[arg(short = 'k', long = "weight")]
        weight: u32,
        #[arg(short = 'N', long = "level")]
        level: u64,
        #[arg(short = 'l', long = "hecke")]
        hecke: u64,
        #[arg(long, conflicts_with = "full_space")]
        split: Option<u64>,
        /// Trace on the full cusp space S_k(N) instead of the newforms.
        #[arg(long)]
        full_space: bool,
    },
    /// Regenerate a table for all levels up to --max-level.
    Table {
        #[arg(long, value_enum)]
        which: table::Which,
        #[arg(long, default_value_t = 42)]
        max_level: u64,
        /// `a..b` (even weights in range) or a comma list.
        #[arg(long, default_value = "2..24", value_parser = table::Weights::parse)]
        weights: table::Weights,
        #[arg(long, value_enum, default_value_t = table::Format::Text)]
        format: table::Format,
    },
    /// Check the level 14 primitive forms against the Hecke relations and trace formulas.
    VerifyQexp {
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        prec: usize,
        /// Flip the sign of a_2 in the weight 2 form before checking.
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
}

#[derive(Debug, Clone, Copy)]
enum SplitArg {
    All,
    Class(u64),
}

impl std::str::FromStr for SplitArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(SplitArg::All);
        }
        s.parse()
            .map(SplitArg::Class)
            .map_err(|_| format!("expected a positive integer or `all`, got {s:?}"))
    }
}

/// A failed command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Unsupported(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn level(n: u64) -> Result<Factored, Failure> {
    if n == 0 {
        return Err(Failure::usage("level must be positive"));
    }
    Ok(factor(n)?)
}

fn check_weight(k: u32) -> Result<(), Failure> {
    if k < 2 || k % 2 == 1 {
        return Err(Failure::usage(format!(
            "weight must be even and at least 2, got {k}"
        )));
    }
    Ok(())
}

fn run_dim(k: u32, n: u64, split: Option<SplitArg>) -> Outcome {
    check_weight(k)?;
    let nf = level(n)?;
    let partition = || -> Result<String, Failure> {
        let cells: Vec<String> = split_dimensions(k, &nf)?
            .iter()
            .map(|(i, d)| format!("{}:{d}", i.value()))
            .collect();
        Ok(format!("{{{}}}\n", cells.join(", ")))
    };
    match split {
        None => Ok(format!("{}\n", dim_newform(k, &nf)?)),
        Some(SplitArg::All) => partition(),
        Some(SplitArg::Class(i)) => {
            if i == 0 || nstar(&nf).value() % i != 0 {
                return Err(Failure::usage(format!(
                    "i = {i} does not divide N^× = {}",
                    nstar(&nf).value()
                )));
            }
            Ok(format!(
                "{}\n{}",
                dim_split(k, &nf, &factor(i)?)?,
                partition()?
            ))
        }
    }
}

fn run_trace(k: u32, n: u64, l: u64, split: Option<u64>, full_space: bool) -> Outcome {
    check_weight(k)?;
    let nf = level(n)?;
    if l == 0 {
        return Err(Failure::usage("l must be positive"));
    }
    let lf = factor(l)?;
    if !lf.is_squarefree() {
        return Err(Failure::usage("unsupported: l not square-free"));
    }
    let q = TraceQuery::from_factored(k, nf.clone(), lf.clone())?;
    let value = match (split, full_space) {
        (Some(i), _) => {
            if i == 0 {
                return Err(Failure::usage("i must be positive"));
            }
            trace_split(k, &nf, &lf, &factor(i)?)?
        }
        (None, true) => trace_full(&q)?,
        (None, false) => trace_newform(&q)?,
    };
    Ok(format!("{}\n", format_rat(&value)))
}

fn run_table(
    which: table::Which,
    max_level: u64,
    weights: &[u32],
    format: table::Format,
) -> Outcome {
    if max_level == 0 {
        return Err(Failure::usage("max-level must be positive"));
    }
    let t = table::build(which, max_level, weights)?;
    table::render(&t, format).map_err(Failure::verification)
}

fn corrupt_a2(f: &QSeries) -> Result<QSeries, Failure> {
    let mut coeffs = f.coeffs().to_vec();
    coeffs[2] = -coeffs[2].clone();
    Ok(QSeries::new(coeffs, f.weight(), f.level())?)
}

fn run_verify(prec: usize, inject_corruption: bool) -> Outcome {
    if prec < MIN_PRECISION {
        return Err(Failure::usage(format!(
            "precision must be at least {MIN_PRECISION}, got {prec}"
        )));
    }
    let n14 = factor(14)?;
    let mut out = String::new();
    let mut failure = None;
    let mut record = |name: &str, ok: bool, detail: String| {
        out.push_str(&format!(
            "{} {name}: {detail}\n",
            if ok { "PASS" } else { "FAIL" }
        ));
        if !ok && failure.is_none() {
            failure = Some(format!("{name}: {detail}"));
        }
    };

    let basis = m2_14_basis(prec)?;
    let orders: Vec<Option<usize>> = basis.iter().map(QSeries::order).collect();
    let echelon = orders == [Some(0), Some(1), Some(2), Some(3)];
    let shown: Vec<String> = orders
        .iter()
        .map(|o| o.map_or_else(|| "none".into(), |v| v.to_string()))
        .collect();
    record(
        "M_2(14) echelon basis",
        echelon,
        format!("leading orders {}", shown.join(", ")),
    );

    let mut delta = delta14(prec)?;
    if inject_corruption {
        delta = corrupt_a2(&delta)?;
    }
    let (f1, f14) = weight4_forms(prec)?;
    let integral = [&delta, &f1, &f14].iter().all(|f| f.is_integral());
    record("integral coefficients", integral, "Delta, f_1, f_14".into());

    let checks: [(&str, &QSeries, u32, TraceTarget); 3] = [
        ("Delta in S_2^0(14)", &delta, 2, TraceTarget::Newform),
        (
            "f_1 in S_4^0(14; 1)",
            &f1,
            4,
            TraceTarget::Split(Factored::one()),
        ),
        (
            "f_14 in S_4^0(14; 14)",
            &f14,
            4,
            TraceTarget::Split(n14.clone()),
        ),
    ];
    for (name, f, k, target) in &checks {
        let report = hecke_verify(f, *k, &n14, prec, target)?;
        record(name, report.passed(), report.to_string());
    }

    match failure {
        None => Ok(out),
        Some(first) => {
            print!("{out}");
            Err(Failure::verification(format!("first failure: {first}")))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dim {
            weight,
            level,
            split,
        } => run_dim(weight, level, split),
        Command::Trace {
            weight,
            level,
            hecke,
            split,
            full_space,
        } => run_trace(weight, level, hecke, split, full_space),
        Command::Table {
            which,
            max_level,
            weights,
            format,
        } => run_table(which, max_level, &weights.0, format),
        Command::VerifyQexp {
            prec,
            inject_corruption,
        } => run_verify(prec, inject_corruption),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = cache::load() {
        eprintln!("warning: could not read class number cache: {e}");
    }
    let outcome = run(cli);
    if let Err(e) = cache::store() {
        eprintln!("warning: could not write class number cache: {e}");
    }
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
