use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fillings_core::dynamics::{basin_check, BasinConfig};
use fillings_core::lattice::{enumerate_exceptional_classes, square_one_classes, PicardLattice};
use fillings_core::replay::{builtin, run as run_script, Script};
use fillings_core::Tolerances;
use serde_json::{json, Value};

use crate::basin::par_basin_check;
use crate::input::{read_json, ElementInput};
use crate::report::{BasinSummary, ClassifyReport};
use crate::{CliError, TOL_ENV};

#[derive(Debug, Parser)]
#[command(name = "fillings", version, about = "SU(1,2) dynamics and Picard lattice bookkeeping")]
pub struct Cli {
    /// Use this value for every numerical tolerance.
    #[arg(long, global = true, env = TOL_ENV)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an element and report its fixed points.
    Classify {
        /// Matrix or algebra-parameter JSON (`-` for stdin).
        input: PathBuf,
        /// Exponentiate the input as a Lie algebra element first.
        #[arg(long)]
        exp: bool,
    },
    /// Sample the closed ball and lines through the attractive point and
    /// check that every sample lies in one of the two basins.
    Basin(BasinArgs),
    /// Intersection-lattice queries.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Run a blow-up/contraction script.
    Replay {
        /// Script JSON (`-` for stdin).
        #[arg(conflicts_with = "builtin", required_unless_present = "builtin")]
        script: Option<PathBuf>,
        /// `sigma0`, `sigma2`, `sigma-steps K` or `standard K`.
        #[arg(long, num_args = 1..=2, value_names = ["NAME", "K"])]
        builtin: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
pub struct BasinArgs {
    /// Matrix or algebra-parameter JSON (`-` for stdin).
    pub input: PathBuf,
    /// Exponentiate the input as a Lie algebra element first.
    #[arg(long)]
    pub exp: bool,
    /// Points sampled from the closed ball.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Points sampled on lines through the attractive point [default: samples / 10].
    #[arg(long)]
    pub line_samples: Option<usize>,
    /// Seed of the sampling streams.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Iteration budget per orbit.
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    /// Run on the current thread only.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    /// The Hirzebruch lattice Σₙ, or its classes of square one.
    Hirzebruch {
        /// Self-intersection of the base is -n.
        #[arg(long)]
        n: u32,
        /// List (a, b) with (aF + bB)² = 1.
        #[arg(long)]
        square_one: bool,
        /// Search |a|, |b| up to this bound.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
    },
    /// Exceptional classes of the plane blown up at k points.
    Exceptional {
        /// Number of blown-up points.
        #[arg(long)]
        blowups: usize,
        /// Largest coefficient modulus searched.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
    },
    /// Rank, signature and determinant of a lattice.
    Signature {
        /// The plane blown up at this many points.
        #[arg(long, group = "which")]
        blowups: Option<usize>,
        /// The Hirzebruch lattice Σₙ.
        #[arg(long, group = "which")]
        hirzebruch: Option<u32>,
        /// Lattice JSON `{"labels", "gram", "K"}`.
        #[arg(long, group = "which")]
        file: Option<PathBuf>,
    },
}

impl Cli {
    pub fn tolerances(&self) -> Result<Tolerances, CliError> {
        match self.tol {
            None => Ok(Tolerances::DEFAULT),
            Some(t) if t.is_finite() && t > 0.0 => Ok(Tolerances::uniform(t)),
            Some(t) => Err(CliError::Usage(format!("tolerance must be positive, got {t}"))),
        }
    }

    /// Executes the command and returns its JSON payload.
    pub fn run(&self) -> Result<Value, CliError> {
        let tol = self.tolerances()?;
        match &self.command {
            Command::Classify { input, exp } => {
                let a = read_json::<ElementInput>(input)?.element(*exp, &tol)?;
                Ok(json!(ClassifyReport::new(&a, &tol)?))
            }
            Command::Basin(args) => {
                let a = read_json::<ElementInput>(&args.input)?.element(args.exp, &tol)?;
                let config = BasinConfig {
                    ball_samples: args.samples,
                    line_samples: args.line_samples.unwrap_or(args.samples / 10),
                    seed: args.seed,
                    max_iter: args.max_iter,
                    tol: self.tol.map_or(BasinConfig::default().tol, |_| tol.convergence),
                };
                let report =
                    if args.serial { basin_check(&a, config, &tol)? } else { par_basin_check(&a, config, &tol)? };
                Ok(json!(BasinSummary::from(report)))
            }
            Command::Lattice(cmd) => lattice(cmd),
            Command::Replay { script, builtin: name } => {
                let script: Script = match (script, name) {
                    (Some(path), _) => read_json(path)?,
                    (None, Some(parts)) => {
                        let arg = match parts.get(1) {
                            None => None,
                            Some(k) => Some(k.parse().map_err(|_| CliError::Usage(format!("bad count {k:?}")))?),
                        };
                        builtin(&parts[0], arg)?
                    }
                    (None, None) => return Err(CliError::Usage("give a script or --builtin".into())),
                };
                Ok(json!(run_script(&script)?))
            }
        }
    }
}

fn lattice(cmd: &LatticeCommand) -> Result<Value, CliError> {
    match cmd {
        LatticeCommand::Hirzebruch { n, square_one: true, bound } => Ok(json!(square_one_classes(*n, *bound))),
        LatticeCommand::Hirzebruch { n, .. } => Ok(json!(PicardLattice::hirzebruch(*n))),
        LatticeCommand::Exceptional { blowups, bound } => {
            let l = PicardLattice::blown_up_plane(*blowups);
            let classes = enumerate_exceptional_classes(&l, *bound);
            let names: Vec<String> = classes.iter().map(|d| l.describe(d)).collect();
            Ok(json!({ "labels": l.labels(), "classes": classes, "names": names }))
        }
        LatticeCommand::Signature { blowups, hirzebruch, file } => {
            let l = match (blowups, hirzebruch, file) {
                (Some(k), _, _) => PicardLattice::blown_up_plane(*k),
                (_, Some(n), _) => PicardLattice::hirzebruch(*n),
                (_, _, Some(path)) => read_json(path)?,
                _ => return Err(CliError::Usage("give --blowups, --hirzebruch or --file".into())),
            };
            let (pos, neg) = l.signature();
            Ok(json!({ "rank": l.rank(), "signature": [pos, neg], "determinant": l.determinant() }))
        }
    }
}
