//! The `braided` command line: argument parsing, dispatch and exit codes.

mod commands;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::hecke::{HeckeSymmetry, Kind};
use crate::scalar::{parse, Scalar};
use crate::symfun::EigenvalueProfile;

pub use report::{Check, Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "braided",
    version,
    about = "Exact checks for reflection equation algebras and braided orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Also write the structured report to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Leave `elapsed_ms` empty so reports are byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Flip,
    Superflip,
    #[value(name = "dj_gl")]
    DjGl,
    #[value(name = "q_super")]
    QSuper,
}

/// Where the braiding comes from.
#[derive(Args, Debug, Clone)]
pub struct SymArgs {
    #[arg(long, value_enum, conflicts_with = "file")]
    pub builtin: Option<Builtin>,
    /// R-matrix file (JSON or TOML).
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Deformation parameter; a number or the symbol `q`.
    #[arg(long)]
    pub q: Option<String>,
}

/// Eigenvalues of an orbit; omitted lists mean symbolic eigenvalues.
#[derive(Args, Debug, Clone)]
pub struct ProfileArgs {
    /// Comma-separated even eigenvalues.
    #[arg(long)]
    pub mu: Option<String>,
    /// Comma-separated odd eigenvalues.
    #[arg(long)]
    pub nu: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KoszulCheck {
    All,
    Projectors,
    Conjecture1,
    P2Action,
    D1,
    D2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Yang-Baxter, Hecke and skew-invertibility of a braiding.
    CheckR {
        #[command(flatten)]
        sym: SymArgs,
    },
    /// Bi-rank from the Poincare series of the R-exterior algebra.
    Birank {
        #[command(flatten)]
        sym: SymArgs,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Cayley-Hamilton coefficients and their verification in the REA.
    Ch {
        #[command(flatten)]
        sym: SymArgs,
    },
    /// Quantum dimensions, power sums and Schur functions of a profile.
    Param {
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        profile: ProfileArgs,
        /// Highest power sum to list.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Regularity and the Hankel determinant of a profile.
    Orbit {
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        h: Option<String>,
        /// Check det H at random points instead of symbolically.
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        trials: usize,
    },
    /// The idempotent describing the cotangent module.
    Cotangent {
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        h: Option<String>,
        /// Largest filtered word space for the entrywise test.
        #[arg(long, default_value_t = crate::orbit::ENTRYWISE_CAP)]
        cap: usize,
    },
    /// Symmetrizers, the trace conjecture, and the first differential.
    Koszul {
        #[command(flatten)]
        sym: SymArgs,
        #[arg(long, value_enum, default_value_t = KoszulCheck::All)]
        check: KoszulCheck,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// The modified REA: hatted CH identity, hatted dimensions, NC orbits.
    Mrea {
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        profile: ProfileArgs,
        /// Value of ħ; the symbol `h` when omitted.
        #[arg(long)]
        h: Option<String>,
    },
}

/// Exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass = 0,
    CheckFailed = 1,
    Usage = 2,
    Resource = 3,
}

/// Classifies an error that aborted a command.
pub fn outcome_of(e: &Error) -> Outcome {
    match e {
        Error::ResourceLimit(_) => Outcome::Resource,
        Error::Parse(_) | Error::Io(_) | Error::UnboundSymbol(_) => Outcome::Usage,
        _ => Outcome::CheckFailed,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl SymArgs {
    pub fn scalar_q(&self) -> Result<Option<Scalar>> {
        self.q.as_deref().map(parse).transpose()
    }

    pub fn kind(&self) -> Result<Kind> {
        if let Some(path) = &self.file {
            return Ok(Kind::File(path.clone()));
        }
        let b = self
            .builtin
            .ok_or_else(|| usage("one of --builtin or --file is required"))?;
        let need =
            |x: Option<usize>, flag: &str| x.ok_or_else(|| usage(format!("--{flag} is required")));
        let q = || -> Result<Scalar> { self.scalar_q()?.ok_or_else(|| usage("--q is required")) };
        Ok(match b {
            Builtin::Flip => Kind::Flip(need(self.big_n, "N")?),
            Builtin::DjGl => Kind::DjGl(need(self.big_n, "N")?, q()?),
            Builtin::Superflip => Kind::SuperFlip(need(self.m, "m")?, need(self.n, "n")?),
            Builtin::QSuper => Kind::QSuper(need(self.m, "m")?, need(self.n, "n")?, q()?),
        })
    }

    pub fn build(&self) -> Result<HeckeSymmetry> {
        HeckeSymmetry::build(&self.kind()?)
    }

    /// The bi-rank a built-in symmetry is known to have.
    pub fn expected_birank(&self) -> Option<(usize, usize)> {
        match self.builtin? {
            Builtin::Flip | Builtin::DjGl => Some((self.big_n?, 0)),
            Builtin::Superflip | Builtin::QSuper => Some((self.m?, self.n?)),
        }
    }
}

fn parse_list(s: Option<&str>) -> Result<Option<Vec<Scalar>>> {
    let Some(s) = s else { return Ok(None) };
    if s.trim().is_empty() {
        return Ok(Some(Vec::new()));
    }
    s.split(',')
        .map(|x| parse(x.trim()))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

impl ProfileArgs {
    /// A numeric profile when `--mu`/`--nu` are given, otherwise symbolic
    /// eigenvalues of the given bi-rank.
    pub fn profile(
        &self,
        rank: (usize, usize),
        q: Scalar,
        h: Option<Scalar>,
    ) -> Result<EigenvalueProfile> {
        let mu = parse_list(self.mu.as_deref())?;
        let nu = parse_list(self.nu.as_deref())?;
        let p = match (mu, nu) {
            (None, None) => {
                if h.is_some() {
                    EigenvalueProfile::symbolic_hatted(rank.0, rank.1).with_q(q)
                } else {
                    EigenvalueProfile::symbolic(rank.0, rank.1).with_q(q)
                }
            }
            (mu, nu) => {
                EigenvalueProfile::numeric(mu.unwrap_or_default(), nu.unwrap_or_default(), q)
            }
        };
        if (p.m(), p.n()) != rank {
            return Err(usage(format!(
                "profile has {} even and {} odd eigenvalues, the bi-rank is ({}|{})",
                p.m(),
                p.n(),
                rank.0,
                rank.1
            )));
        }
        Ok(p.with_h(h))
    }
}

/// Runs a parsed command line and returns the report with its outcome.
pub fn run(cli: &Cli) -> (Report, Outcome) {
    let start = Instant::now();
    let (mut report, outcome) = match commands::dispatch(&cli.command) {
        Ok(r) => {
            let o = if r.all_pass() {
                Outcome::Pass
            } else {
                Outcome::CheckFailed
            };
            (r, o)
        }
        Err((mut r, e)) => {
            let o = outcome_of(&e);
            r.push_err("run", &e);
            (r, o)
        }
    };
    if !cli.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    (report, outcome)
}

/// Renders the report in the requested format.
pub fn render(cli: &Cli, report: &Report) -> String {
    match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    }
}
