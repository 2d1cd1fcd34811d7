mod commands;
mod contour;
mod svg;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use poncelet_core::classify::Center;
use poncelet_core::polycore::{parse_rational, Rational};

/// Exact Poncelet analysis for a unit circle and the confocal parabolas
/// `y² = 2px + p²`.
#[derive(Debug, Parser)]
#[command(name = "poncelet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the locus polynomial Qⁿ, or Qⁿ at a fixed p.
    Cayley {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=12))]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Option<Rational>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Classify the parabolas that form an n-Poncelet pair with the circle
    /// centred at X,Y.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=7))]
        n: u32,
        #[arg(long, value_parser = center, allow_hyphen_values = true)]
        center: Center,
    },
    /// Report the n for which every parabola works, if any.
    Isoperiodic {
        #[arg(long, value_parser = center, allow_hyphen_values = true)]
        center: Center,
    },
    /// Trace a Poncelet polygon numerically.
    Trace {
        #[arg(long, value_parser = center, allow_hyphen_values = true)]
        center: Center,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=12))]
        n: u32,
        /// Tangent parameter of the first edge, `RE` or `RE,IM`.
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        start: Option<Complex64>,
        /// Also write a picture of the polygon to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Rasterise the curve Qⁿ(p, x, y) = 0 over [-3, 3]².
    Locus {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=12))]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Rational,
        /// Cells per side.
        #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u32).range(2..=8192))]
        grid: u32,
        #[arg(long, value_enum, default_value_t = CsvOrSvg::Csv)]
        format: CsvOrSvg,
    },
    /// Evaluate the algebraic Painlevé VI solutions at the given p.
    Painleve {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=4))]
        family: u32,
        #[arg(long, required = true, num_args = 1.., value_parser = rational, allow_negative_numbers = true)]
        p: Vec<Rational>,
        #[arg(long, value_enum, default_value_t = CsvOrJson::Csv)]
        format: CsvOrJson,
        /// Largest accepted equation residual.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Check every closed-form identity against the computed polynomials.
    VerifyIdentities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CsvOrSvg {
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CsvOrJson {
    Csv,
    Json,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn center(s: &str) -> Result<Center, String> {
    s.parse().map_err(|e: poncelet_core::polycore::PolyError| e.to_string())
}

fn complex(s: &str) -> Result<Complex64, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("not a number: {t:?}"));
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(num(re)?, num(im)?)),
        None => Ok(Complex64::new(num(s)?, 0.0)),
    }
}

/// How a command ended when it did not hit an error.
#[derive(Debug, PartialEq, Eq)]
enum Status {
    Ok,
    VerificationFailed,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    /// Input that parsed but makes no sense, such as `p = 0`.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<Status, CliError> {
    match cmd {
        Command::Cayley { n, p, format } => commands::cayley(out, n, p.as_ref(), format == TextOrJson::Json),
        Command::Classify { n, center } => commands::classify(out, n, &center),
        Command::Isoperiodic { center } => commands::isoperiodic(out, &center),
        Command::Trace { center, p, n, start, svg } => {
            commands::trace(out, &center, &p, n as usize, start, svg.as_deref())
        }
        Command::Locus { n, p, grid, format } => {
            commands::locus(out, n, &p, grid as usize, format == CsvOrSvg::Svg)
        }
        Command::Painleve { family, p, format, tol } => {
            commands::painleve(out, family, &p, format == CsvOrJson::Json, tol)
        }
        Command::VerifyIdentities => commands::verify_identities(out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Status::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::VerificationFailed), Ok(())) => ExitCode::from(1),
        (Err(CliError::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
