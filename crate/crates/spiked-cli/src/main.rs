mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spiked::surface::{Beta, Family, SurfaceSpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "spiked", version, about = "Arc complexes and admissible cones of spiked surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List permitted arcs and simple connections.
    Enumerate(Common),
    /// Write the (marked) arc complex.
    Complex(Common),
    /// Certify the topological type of the arc complex and its marked variants.
    Certify(Common),
    /// Draw a random rational decorated metric.
    Realize(Common),
    /// Build the admissible cone and its face lattice.
    Cone(Common),
    /// Compare the spread-subset lattice with the cone's face lattice.
    Compare(Common),
    /// Run every check over a grid of surfaces.
    Verify(VerifyArgs),
    /// Rebuild the fully decorated 2-crown prism.
    ReproduceAppendixB(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// polygon, punctured, crown or moebius (crown when omitted; every family for verify).
    #[arg(long)]
    family: Option<String>,
    /// Number of spikes.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// all, none, or an integer bitmask (bit i decorates spike i+1; 0b/0x prefixes allowed).
    #[arg(long, default_value = "all")]
    decorate: String,
    /// Marked connections by label, e.g. B:1>2:w0 or L; repeat or separate by commas.
    #[arg(long, value_delimiter = ',')]
    mark: Vec<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest wrap of the connections used in the dominance check.
    #[arg(long, default_value_t = 4)]
    kmax: u32,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Exit with code 3 when a certificate is inconclusive.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Format::All)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = RModeArg::Full)]
    rmode: RModeArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Svg,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RModeArg {
    Full,
    All,
}

#[derive(Debug)]
pub enum Outcome {
    Success,
    Inconclusive,
    Mismatch,
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Internal(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Internal(e.into())
    }
}

pub type CliResult = Result<Outcome, CliError>;

pub fn invalid(msg: impl std::fmt::Display) -> CliError {
    CliError::Invalid(msg.to_string())
}

pub fn parse_family(name: &str) -> Result<Family, CliError> {
    Family::parse(name).ok_or_else(|| invalid(format!("unknown family '{name}'")))
}

fn parse_mask(text: &str, n: usize) -> Result<u64, CliError> {
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let value = match text {
        "all" => full,
        "none" => 0,
        t => {
            let parsed = if let Some(b) = t.strip_prefix("0b") {
                u64::from_str_radix(b, 2)
            } else if let Some(h) = t.strip_prefix("0x") {
                u64::from_str_radix(h, 16)
            } else {
                t.parse()
            };
            parsed.map_err(|_| invalid(format!("bad decoration pattern '{t}'")))?
        }
    };
    if value & !full != 0 {
        return Err(invalid(format!("decoration pattern {text} has bits beyond spike {n}")));
    }
    Ok(value)
}

impl Common {
    pub fn surface(&self) -> Result<SurfaceSpec, CliError> {
        let family = parse_family(self.family.as_deref().unwrap_or("crown"))?;
        if self.n > 16 {
            return Err(invalid("at most 16 spikes are supported"));
        }
        let mask = parse_mask(&self.decorate, self.n)?;
        SurfaceSpec::from_mask(family, self.n, mask).map_err(invalid)
    }

    pub fn marks(&self, s: &SurfaceSpec) -> Result<Vec<Beta>, CliError> {
        self.mark.iter().map(|l| Beta::parse(l.trim(), s).map_err(invalid)).collect()
    }

    pub fn wants(&self, f: Format) -> bool {
        self.format == Format::All || self.format == f
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (strict, result) = match &cli.command {
        Command::Enumerate(c) => (c.strict, commands::enumerate(c)),
        Command::Complex(c) => (c.strict, commands::complex(c)),
        Command::Certify(c) => (c.strict, commands::certify(c)),
        Command::Realize(c) => (c.strict, commands::realize(c)),
        Command::Cone(c) => (c.strict, commands::cone(c)),
        Command::Compare(c) => (c.strict, commands::compare(c)),
        Command::Verify(v) => (v.common.strict, commands::verify(v)),
        Command::ReproduceAppendixB(c) => (c.strict, commands::appendix_b(c)),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Inconclusive) if strict => {
            eprintln!("inconclusive certificate under --strict");
            ExitCode::from(3)
        }
        Ok(Outcome::Inconclusive) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => {
            eprintln!("verification mismatch");
            ExitCode::from(4)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
