use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gvm_core::rootdata::CaseFamily;
use gvm_core::{HermitianCase, Rational};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "gvm", version, about = "Simplicity of scalar generalized Verma modules of abelian type")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide simplicity of the module with parameter c zeta.
    Classify(ClassifyArgs),
    /// Sweep c over a window and compare against the closed-form set.
    Scan(ScanArgs),
    /// Regenerate one of the E6/E7 reflection tables.
    Table(TableArgs),
    /// Sweep several case instances and report any disagreement.
    Crosscheck(CrosscheckArgs),
    /// Print the root datum of a case.
    #[command(name = "datum-dump")]
    DatumDump(DatumArgs),
    /// Root datum commands.
    Datum {
        #[command(subcommand)]
        command: DatumCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum DatumCommand {
    /// Print the root datum of a case.
    Dump(DatumArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    /// AIII, CI, BI, DI, DIII, EIII or EVII.
    #[arg(long = "case")]
    pub family: CaseFamily,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

impl CaseArgs {
    pub fn case(&self) -> Result<HermitianCase, CliError> {
        Ok(HermitianCase::from_family(self.family, self.p, self.q, self.n)?)
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Scalar parameter, an integer or p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rational,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Window lo..hi in c; defaults to z in [A-5, B+10].
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Window>,
    #[arg(long, default_value = "1/6")]
    pub step: Rational,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub table: u8,
    /// Value of a for Tables 3 and 4 (defaults -5 and -7).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long = "case")]
    pub family: CaseFamily,
    /// A single value or an inclusive range lo..hi.
    #[arg(long)]
    pub p: Option<IntRange>,
    #[arg(long)]
    pub q: Option<IntRange>,
    #[arg(long)]
    pub n: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Window>,
    #[arg(long, default_value = "1/6")]
    pub step: Rational,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

impl CrosscheckArgs {
    pub fn cases(&self) -> Result<Vec<HermitianCase>, CliError> {
        let r = |v: &Option<IntRange>| v.as_ref().map(|r| r.0.clone());
        let one = |v: Option<RangeInclusive<usize>>| -> Vec<Option<usize>> {
            match v {
                Some(r) => r.map(Some).collect(),
                None => vec![None],
            }
        };
        let mut out = Vec::new();
        for p in one(r(&self.p)) {
            for q in one(r(&self.q)) {
                for n in one(r(&self.n)) {
                    out.push(HermitianCase::from_family(self.family, p, q, n)?);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Args)]
pub struct DatumArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone)]
pub struct Window(pub Rational, pub Rational);

impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
        let lo: Rational = lo.parse().map_err(|e| format!("{e}"))?;
        let hi: Rational = hi.parse().map_err(|e| format!("{e}"))?;
        if lo > hi {
            return Err(format!("empty window {lo}..{hi}"));
        }
        Ok(Window(lo, hi))
    }
}

#[derive(Debug, Clone)]
pub struct IntRange(pub RangeInclusive<usize>);

impl std::str::FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let int = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (int(lo)?, int(hi)?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(IntRange(lo..=hi))
            }
            None => {
                let v = int(s)?;
                Ok(IntRange(v..=v))
            }
        }
    }
}
