//! `arndt`: count, enumerate and map scaled Arndt compositions.
//!
//! Exit status is 0 on success, 1 for domain errors (input outside the
//! bijection's domain, brute-force ceiling, non-normalizable constraint) and
//! 2 for usage errors.

mod tables;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use scaled_arndt::{
    arndt_compositions, backward, congruence_compositions, export_bfile, forward, normalize,
    residue_system, sequence_range, Composition, CompositionStream, Method, ScaledConstraint,
};

#[derive(Debug, Parser)]
#[command(name = "arndt", version, about = "Scaled Arndt compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a_{s,t}(n)
    Count {
        #[command(flatten)]
        cons: ConstraintArgs,
        #[arg(
            short = 'n',
            conflicts_with = "range",
            required_unless_present = "range"
        )]
        n: Option<u64>,
        /// Print one value per line for LO..HI instead of a single n
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
        /// Defaults to recurrence when k = 0 and to brute when k ≠ 0
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// List the compositions of n satisfying the constraint
    Enumerate {
        #[command(flatten)]
        cons: ConstraintArgs,
        #[arg(short = 'n')]
        n: u64,
        /// List compositions into the matching residue classes instead
        #[arg(long)]
        congruence: bool,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Map a scaled Arndt composition to its congruence-restricted partner
    Map {
        #[command(flatten)]
        cons: ConstraintArgs,
        #[arg(short = 'c', value_name = "PARTS", value_parser = parse_composition, allow_hyphen_values = true)]
        composition: Composition,
    },
    /// Map a congruence-restricted composition back to its scaled Arndt partner
    Unmap {
        #[command(flatten)]
        cons: ConstraintArgs,
        #[arg(short = 'c', value_name = "PARTS", value_parser = parse_composition, allow_hyphen_values = true)]
        composition: Composition,
    },
    /// Print the allowed residues and modulus
    Residues {
        #[command(flatten)]
        cons: ConstraintArgs,
    },
    /// Regenerate a reference table
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
    /// Export an OEIS b-file
    Bfile {
        #[command(flatten)]
        cons: ConstraintArgs,
        #[arg(long, value_parser = parse_range)]
        range: (u64, u64),
        /// Index of the first line; defaults to LO
        #[arg(long)]
        offset: Option<u64>,
    },
}

#[derive(Debug, Args)]
struct ConstraintArgs {
    #[arg(short = 's', value_parser = clap::value_parser!(u64).range(1..))]
    s: u64,
    #[arg(short = 't', value_parser = clap::value_parser!(u64).range(1..))]
    t: u64,
    /// Affine offset: s·c[2i-1] > t·c[2i] + k
    #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
    k: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Recurrence,
    Series,
    Brute,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Series => Method::Series,
            MethodArg::Brute => Method::Brute,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum TableKind {
    Residues,
    Sequences,
    Bijection6,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: scaled_arndt::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: u64 = lo.parse().map_err(|_| format!("bad lower bound {lo:?}"))?;
    let hi: u64 = hi.parse().map_err(|_| format!("bad upper bound {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<scaled_arndt::Error> for Failure {
    fn from(e: scaled_arndt::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl ConstraintArgs {
    fn resolve(&self) -> Result<ScaledConstraint, Failure> {
        let cons = normalize(self.s, self.t, self.k)?;
        let g = self.s.gcd(&self.t);
        if g > 1 {
            eprintln!(
                "note: ({},{}) normalized to ({},{}) by gcd {g}",
                self.s,
                self.t,
                cons.s(),
                cons.t()
            );
        }
        Ok(cons)
    }

    /// For commands that need the residue system: rejects k ≠ 0 up front.
    fn resolve_linear(&self, what: &str) -> Result<ScaledConstraint, Failure> {
        if self.k != 0 {
            return Err(Failure::Usage(format!(
                "{what} requires k = 0 (got k = {})",
                self.k
            )));
        }
        self.resolve()
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Count {
            cons,
            n,
            range,
            method,
        } => {
            let method = match (method, cons.k) {
                (None, 0) => Method::Recurrence,
                (None, _) => Method::Brute,
                (Some(MethodArg::Brute), _) => Method::Brute,
                (Some(m), 0) => m.into(),
                (Some(_), k) => {
                    return Err(Failure::Usage(format!(
                        "k = {k} is only supported with --method brute"
                    )))
                }
            };
            let constraint = cons.resolve()?;
            let (lo, hi) = range.unwrap_or_else(|| {
                let n = n.expect("clap requires -n or --range");
                (n, n)
            });
            for v in sequence_range(&constraint, lo, hi, method)? {
                writeln!(out, "{v}")?;
            }
        }
        Command::Enumerate {
            cons,
            n,
            congruence,
            format,
        } => {
            let stream = if congruence {
                let constraint = cons.resolve_linear("--congruence")?;
                congruence_compositions(n, &residue_system(&constraint)?)
            } else {
                arndt_compositions(n, &cons.resolve()?)
            };
            write_stream(stream, format, out)?;
        }
        Command::Map { cons, composition } => {
            let constraint = cons.resolve_linear("map")?;
            writeln!(out, "{}", forward(&composition, &constraint)?)?;
        }
        Command::Unmap { cons, composition } => {
            let constraint = cons.resolve_linear("unmap")?;
            writeln!(out, "{}", backward(&composition, &constraint)?)?;
        }
        Command::Residues { cons } => {
            let constraint = cons.resolve_linear("residues")?;
            writeln!(out, "{}", residue_system(&constraint)?)?;
        }
        Command::Table { which } => {
            out.write_all(tables::render(which).as_bytes())?;
        }
        Command::Bfile {
            cons,
            range: (lo, hi),
            offset,
        } => {
            let constraint = cons.resolve_linear("bfile")?;
            let text = export_bfile(&constraint, lo, hi, offset.unwrap_or(lo))?;
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn write_stream(
    mut stream: CompositionStream,
    format: Format,
    out: &mut impl Write,
) -> io::Result<()> {
    let join = |parts: &[u64]| {
        parts
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    match format {
        Format::Lines => {
            while stream.advance() {
                writeln!(out, "{}", join(stream.current()))?;
            }
        }
        Format::Json => {
            out.write_all(b"[")?;
            let mut first = true;
            while stream.advance() {
                if !first {
                    out.write_all(b",")?;
                }
                first = false;
                write!(out, "[{}]", join(stream.current()))?;
            }
            out.write_all(b"]\n")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            Cli::command()
                .error(clap::error::ErrorKind::ArgumentConflict, msg)
                .exit();
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
