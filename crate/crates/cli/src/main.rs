//! `spinterf` command-line front end.

mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinterf_core::model::MediumMode;
use spinterf_core::sweep::Parameter;

use crate::config::RunConfig;
use crate::error::CliError;

const UNITS_NOTE: &str = "\
Units: every quantity is a pure number in a natural unit system where an
energy density and a squared magnetic field share units (ρ̄·Δu² = B_ext²).
Lengths (lambda, l, x), times (tau, t), speeds (u0) and fields (b0, b_ext)
are dimensionless; angles (theta) are in radians.

Precedence: command-line flags > --config file > $SPINTERF_CONFIG > defaults
(lambda = u0 = b0 = rho_bar = l = tau = 1, b_ext = theta = 0, mode = neutral).";

#[derive(Debug, Parser)]
#[command(name = "spinterf", version, about = "Neutron-interferometer spin-superposition simulator", after_help = UNITS_NOTE)]
struct Cli {
    /// Run configuration file (`key = value` lines, `#` comments).
    #[arg(long, global = true, env = "SPINTERF_CONFIG")]
    config: Option<PathBuf>,

    /// Format of numbers printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Output directory for written files [default: ./spinterf-run-<UTC timestamp>].
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(flatten)]
    overrides: Overrides,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Args)]
struct Overrides {
    /// Wavelength λ (length).
    #[arg(long, global = true, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Beam speed u₀ (length/time).
    #[arg(long, global = true, allow_negative_numbers = true)]
    u0: Option<f64>,
    /// Intrinsic field amplitude B₀ (field).
    #[arg(long, global = true, allow_negative_numbers = true)]
    b0: Option<f64>,
    /// Mean beam density ρ̄ (field²·time²/length²).
    #[arg(long, global = true, allow_negative_numbers = true)]
    rho_bar: Option<f64>,
    /// External field magnitude B_ext (field).
    #[arg(long, global = true, allow_negative_numbers = true)]
    b_ext: Option<f64>,
    /// External field orientation ϑ (rad).
    #[arg(long, global = true, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Magnet length l (length).
    #[arg(long, global = true, allow_negative_numbers = true)]
    l: Option<f64>,
    /// Ramp time τ (time).
    #[arg(long, global = true, allow_negative_numbers = true)]
    tau: Option<f64>,
    /// Kinetic-shift branch: neutral, charged_plus or charged_minus.
    #[arg(long, global = true)]
    mode: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the ramped E and B fields at (x, t).
    #[command(after_help = UNITS_NOTE)]
    Fields {
        /// Position, 0 ≤ x ≤ u0·tau (length).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        x: f64,
        /// Time, 0 ≤ t ≤ tau (time).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t: f64,
    },
    /// Print the interaction potential and the kinetic-potential shift.
    #[command(after_help = UNITS_NOTE)]
    Potential {
        /// Position (length) [default: u0·tau].
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        /// Time (time) [default: tau].
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Print the phase shift of the beam crossing the magnet.
    #[command(after_help = UNITS_NOTE)]
    Phase,
    /// Sweep the external field magnitude and write interferogram.csv/.svg.
    #[command(after_help = UNITS_NOTE)]
    Interferogram {
        /// Smallest field magnitude (field).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        b_min: f64,
        /// Largest field magnitude (field) [default: two fringe periods].
        #[arg(long, allow_negative_numbers = true)]
        b_max: Option<f64>,
        /// Number of samples.
        #[arg(long, default_value_t = 201)]
        count: usize,
    },
    /// Sweep the field orientation over [0, theta-max] and write orientation.csv.
    #[command(after_help = UNITS_NOTE)]
    Orientation {
        /// Number of orientations.
        #[arg(long, default_value_t = 91)]
        count: usize,
        /// Largest orientation (rad) [default: π].
        #[arg(long, allow_negative_numbers = true)]
        theta_max: Option<f64>,
        /// Magnetic moment |μ| of the classical comparison.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        moment: f64,
    },
    /// Field-equation residuals on a space-time grid; writes residuals_<nx>x<nt>.csv.
    #[command(after_help = UNITS_NOTE)]
    Residuals {
        #[arg(long, default_value_t = 65)]
        nx: usize,
        #[arg(long, default_value_t = 65)]
        nt: usize,
        /// [default: 0]
        #[arg(long, allow_negative_numbers = true)]
        x_min: Option<f64>,
        /// [default: u0·tau]
        #[arg(long, allow_negative_numbers = true)]
        x_max: Option<f64>,
        /// [default: 0]
        #[arg(long, allow_negative_numbers = true)]
        t_min: Option<f64>,
        /// [default: tau]
        #[arg(long, allow_negative_numbers = true)]
        t_max: Option<f64>,
        /// Number of grids, each halving the spacing of the previous.
        #[arg(long, default_value_t = 1)]
        levels: usize,
    },
    /// Run a TOML sweep plan and write its CSV/SVG outputs.
    #[command(after_help = UNITS_NOTE)]
    Sweep {
        /// Plan file.
        plan: PathBuf,
    },
}

impl Overrides {
    fn apply(&self, config: &mut RunConfig) -> Result<(), CliError> {
        let flags = [
            (Parameter::Lambda, self.lambda, "--lambda"),
            (Parameter::U0, self.u0, "--u0"),
            (Parameter::B0, self.b0, "--b0"),
            (Parameter::RhoBar, self.rho_bar, "--rho-bar"),
            (Parameter::BExt, self.b_ext, "--b-ext"),
            (Parameter::Theta, self.theta, "--theta"),
            (Parameter::L, self.l, "--l"),
            (Parameter::Tau, self.tau, "--tau"),
        ];
        for (param, value, flag) in flags {
            if let Some(v) = value {
                config.set(param, v, flag);
            }
        }
        if let Some(mode) = &self.mode {
            config.mode = mode
                .parse::<MediumMode>()
                .map_err(|e| CliError::Config(format!("--mode: {e}")))?;
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    cli.overrides.apply(&mut config)?;
    config.validate()?;
    let ctx = commands::Context {
        config,
        format: cli.format,
        out: cli.out,
    };
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Fields { x, t } => commands::fields(&ctx, x, t, &mut stdout),
        Command::Potential { x, t } => commands::potential(&ctx, x, t, &mut stdout),
        Command::Phase => commands::phase(&ctx, &mut stdout),
        Command::Interferogram {
            b_min,
            b_max,
            count,
        } => commands::interferogram(&ctx, b_min, b_max, count, &mut stdout),
        Command::Orientation {
            count,
            theta_max,
            moment,
        } => commands::orientation(&ctx, count, theta_max, moment, &mut stdout),
        Command::Residuals {
            nx,
            nt,
            x_min,
            x_max,
            t_min,
            t_max,
            levels,
        } => commands::residuals(
            &ctx,
            commands::GridArgs {
                nx,
                nt,
                x_min,
                x_max,
                t_min,
                t_max,
                levels,
            },
            &mut stdout,
        ),
        Command::Sweep { plan } => commands::sweep(&ctx, &plan, &mut stdout),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("spinterf: {err}");
            err.exit_code()
        }
    }
}
