use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use poincare_orbit::cli::{
    cmd_contract, cmd_orbit, cmd_transform, cmd_verify, parse_c_grid, CliError, RunConfig,
    TransformKind, DEFAULT_C_GRID,
};
use poincare_orbit::coadjoint::OrbitInvariants;
use poincare_orbit::contraction::OpKind;
use poincare_orbit::{KinematicParams, Tolerances};

/// Poincaré / Galilei coadjoint-orbit toolkit and verifier.
#[derive(Debug, Parser)]
#[command(name = "poincare-orbit", version, allow_negative_numbers = true)]
struct Cli {
    /// Speed of light: a positive real, or `inf` for the Galilean regime.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    c: KinematicParams,

    /// Seed for the property sampler.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Random cases per property.
    #[arg(long, global = true, default_value_t = 1000)]
    cases: usize,

    #[arg(long = "rel-tol", global = true, default_value_t = Tolerances::default().rel, allow_hyphen_values = true)]
    rel_tol: f64,

    #[arg(long = "abs-tol", global = true, default_value_t = Tolerances::default().abs, allow_hyphen_values = true)]
    abs_tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Group,
    Coadjoint,
    Phase,
    Spacetime,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ContractOp {
    Compose,
    Spacetime,
    Phase,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the property suite; prints one JSON line per property.
    Verify,
    /// Apply a group element to a point (or to another element for kind=group).
    Transform {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Group element JSON, e.g. {"v":0.5,"tau":0,"x":1}.
        #[arg(long)]
        element: String,
        /// Point JSON matching the kind.
        #[arg(long)]
        point: String,
        /// Central moment f, required for kind=phase.
        #[arg(long, allow_hyphen_values = true)]
        f: Option<f64>,
    },
    /// Sample the orbit O_(f, K) on a (p, q) grid as CSV.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        f: f64,
        #[arg(long, allow_hyphen_values = true)]
        casimir: f64,
        /// `a` or `start:stop:n`.
        #[arg(long = "p", allow_hyphen_values = true)]
        p_range: String,
        /// `a` or `start:stop:n`.
        #[arg(long = "q", allow_hyphen_values = true)]
        q_range: String,
    },
    /// Measure the finite-c to Galilean contraction rate.
    Contract {
        #[arg(long, value_enum)]
        op: ContractOp,
        /// Comma-separated, strictly increasing c values.
        #[arg(long = "c-grid")]
        c_grid: Option<String>,
        /// Use a sample with every boost velocity set to zero.
        #[arg(long)]
        zero_boosts: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = RunConfig {
        seed: cli.seed,
        cases: cli.cases,
        rel_tol: cli.rel_tol,
        abs_tol: cli.abs_tol,
        c: cli.c,
    };
    config.validate()?;

    match cli.command {
        Command::Verify => {
            let outcome = cmd_verify(&config)?;
            print!("{}", outcome.report());
            if outcome.all_pass() {
                Ok(())
            } else {
                let failed: Vec<&str> = outcome
                    .results
                    .iter()
                    .filter(|r| !r.pass)
                    .map(|r| r.name.as_str())
                    .collect();
                Err(CliError::Verification(failed.join(", ")))
            }
        }
        Command::Transform {
            kind,
            element,
            point,
            f,
        } => {
            let kind = match kind {
                Kind::Group => TransformKind::Group,
                Kind::Coadjoint => TransformKind::Coadjoint,
                Kind::Phase => TransformKind::Phase,
                Kind::Spacetime => TransformKind::Spacetime,
            };
            println!("{}", cmd_transform(kind, &element, &point, config.c, f)?);
            Ok(())
        }
        Command::Orbit {
            f,
            casimir,
            p_range,
            q_range,
        } => {
            let inv = OrbitInvariants::new(f, casimir);
            print!(
                "{}",
                cmd_orbit(inv, &p_range, &q_range, config.c, config.abs_tol)?
            );
            Ok(())
        }
        Command::Contract {
            op,
            c_grid,
            zero_boosts,
        } => {
            let grid = match c_grid {
                Some(s) => parse_c_grid(&s)?,
                None => DEFAULT_C_GRID.to_vec(),
            };
            let kind = match op {
                ContractOp::Compose => OpKind::Compose,
                ContractOp::Spacetime => OpKind::Spacetime,
                ContractOp::Phase => OpKind::Phase,
            };
            println!("{}", cmd_contract(kind, &grid, config.seed, zero_boosts)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
