//! lwig: figure data and state reports for equal-time Landau-level Wigner
//! matrices.
//!
//! Every subcommand evaluates one dataset through the landau-wigner library
//! and writes it as CSV (default) or JSON with a `#` reproducibility header.
//! Identical invocations produce byte-identical files. Exit codes: 0 on
//! success, 1 on an I/O failure, 2 on a usage or parameter-domain error,
//! 3 when a numerical routine cannot certify its result.

#![forbid(unsafe_code)]

mod commands;
mod table;

use clap::{Parser, Subcommand};
use commands::StateRequest;
use landau_wigner::spinor_wigner::{Band, Parity, Spin};
use std::path::PathBuf;
use table::Format;

/// Process failure carrying its exit code: 1 I/O, 2 usage, 3 numerical.
#[derive(Debug)]
pub enum Failure {
    /// Filesystem failure while writing output.
    Io(String),
    /// Invalid parameter values.
    Usage(String),
    /// A numerical routine exhausted its budget or refused to certify.
    Numerical(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Numerical(m) => m,
        }
    }
}

impl From<landau_wigner::Error> for Failure {
    fn from(e: landau_wigner::Error) -> Failure {
        use landau_wigner::Error as E;
        match &e {
            E::Domain(_) | E::Pole(_) | E::Construction(_) | E::Precondition(_) => {
                Failure::Usage(e.to_string())
            }
            E::Unavailable(_) | E::Inconsistent(_) | E::Numerical { .. } => {
                Failure::Numerical(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

fn parse_parity(text: &str) -> Result<Parity, String> {
    match text {
        "1" | "one" => Ok(Parity::One),
        "2" | "two" => Ok(Parity::Two),
        _ => Err(format!("expected 1 or 2, got `{text}`")),
    }
}

fn parse_spin(text: &str) -> Result<Spin, String> {
    match text {
        "+" | "plus" | "up" => Ok(Spin::Plus),
        "-" | "minus" | "down" => Ok(Spin::Minus),
        _ => Err(format!("expected + or -, got `{text}`")),
    }
}

fn parse_band(text: &str) -> Result<Band, String> {
    match text {
        "conduction" | "+" => Ok(Band::Conduction),
        "valence" | "-" => Ok(Band::Valence),
        _ => Err(format!("expected conduction or valence, got `{text}`")),
    }
}

#[derive(Parser)]
#[command(
    name = "lwig",
    version,
    about = "Figure data and state reports for Landau-level Wigner matrices",
    propagate_version = true
)]
struct Cli {
    /// Output directory; falls back to $LWIG_OUT_DIR, then the working
    /// directory.
    #[arg(long, global = true, value_name = "DIR")]
    out_dir: Option<PathBuf>,

    /// Data file format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact overlap table of the oscillator basis, with optional
    /// quadrature evidence columns.
    Basis {
        /// Largest basis index to tabulate.
        #[arg(long, default_value_t = 8)]
        max_index: u32,
        /// Re-derive every entry with the polar quadrature oracle.
        #[arg(long)]
        quadrature: bool,
    },

    /// Every information quantifier of one state as a single row.
    StateInfo {
        #[command(subcommand)]
        state: StateKind,
    },

    /// Massless level sweep over the magnetic mixing B in [0, 1]:
    /// correlation and concurrence of superpositions and mixtures at
    /// sin^2 = 0, 1/4, 1/2, 3/4.
    Fig1 {
        /// Record that the sweep uses the massless parameterization (it
        /// always does; the flag keeps sweep scripts explicit).
        #[arg(long)]
        massless: bool,
        /// Number of B points.
        #[arg(long, default_value_t = 200)]
        grid: u32,
        /// Level index; the curves are level-independent.
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Dual-route quantifiers of the geometric family at one weight.
    Gaussian {
        /// Geometric weight in [0, 1).
        #[arg(long)]
        z: f64,
    },

    /// Phase-space density profile of the geometric family.
    FigGaussianDensity {
        /// Geometric weight in [0, 1).
        #[arg(long)]
        z: f64,
        /// Points per axis.
        #[arg(long, default_value_t = 61)]
        grid: u32,
        /// Half-width of the square (s, kx) window.
        #[arg(long, default_value_t = 3.0)]
        range: f64,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Closed-form information balance of the geometric family over its
    /// weight.
    FigGaussianInfo {
        /// Number of z points.
        #[arg(long, default_value_t = 100)]
        grid: u32,
        /// Largest weight, below 1.
        #[arg(long, default_value_t = 0.99)]
        z_max: f64,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Every thermodynamic quantity at one (mu, kappa) point.
    Thermo {
        /// Inverse-temperature parameter, positive.
        #[arg(long)]
        mu: f64,
        /// Gap parameter, nonnegative.
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
        /// Zeta series order.
        #[arg(long, default_value_t = 40)]
        order: usize,
    },

    /// Internal energy, specific heat, free energy, and entropy curves.
    FigThermo {
        /// Gap values, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1.0, 10.0])]
        kappa: Vec<f64>,
        /// Smallest inverse temperature.
        #[arg(long, default_value_t = 0.1)]
        mu_min: f64,
        /// Largest inverse temperature.
        #[arg(long, default_value_t = 5.0)]
        mu_max: f64,
        /// Number of mu points.
        #[arg(long, default_value_t = 80)]
        grid: u32,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Occupation purity curves over the inverse temperature.
    FigThermalPurity {
        /// Gap values, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1.0, 10.0])]
        kappa: Vec<f64>,
        /// Sweep description start:end:step; points with mu <= 0 are
        /// skipped.
        #[arg(long, default_value = "0:20:0.1")]
        mu: String,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Gapless (kappa = 0) thermal-information profile over the inverse
    /// temperature.
    FigThermalInfo {
        /// Sweep description start:end:step; points with mu <= 0 are
        /// skipped.
        #[arg(long, default_value = "0.05:6:0.05")]
        mu: String,
        /// Also write a gnuplot companion script.
        #[arg(long)]
        gnuplot: bool,
    },

    /// Residue, dual-method, and anchor diagnostics of the zeta machinery.
    ZetaCheck {
        /// Offsets for the residue table, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0, 10.0])]
        kappa: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum StateKind {
    /// One degenerate-level member n:r:spin.
    Pure {
        /// Level index.
        #[arg(long)]
        n: u32,
        /// Intrinsic parity branch, 1 or 2.
        #[arg(long, value_parser = parse_parity)]
        parity: Parity,
        /// Spin orientation, + or -.
        #[arg(long, value_parser = parse_spin)]
        spin: Spin,
        /// Mass in units of sqrt(2eB).
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Longitudinal momentum in units of sqrt(2eB), nonnegative.
        #[arg(long, default_value_t = 0.0)]
        kz: f64,
    },
    /// Spin superposition omega(theta) inside branch r = 1.
    Superposition {
        /// Level index, at least 1.
        #[arg(long)]
        n: u32,
        /// Mixing angle.
        #[arg(long)]
        theta: f64,
        /// Mass in units of sqrt(2eB).
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Longitudinal momentum in units of sqrt(2eB), nonnegative.
        #[arg(long, default_value_t = 0.0)]
        kz: f64,
    },
    /// Two-spin mixture sin^2(phi) up + cos^2(phi) down inside branch r = 1.
    SpinMixture {
        /// Level index, at least 1.
        #[arg(long)]
        n: u32,
        /// Weight angle.
        #[arg(long)]
        phi: f64,
        /// Mass in units of sqrt(2eB).
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Longitudinal momentum in units of sqrt(2eB), nonnegative.
        #[arg(long, default_value_t = 0.0)]
        kz: f64,
    },
    /// Equal mixture of all members of one level.
    MaxMixed {
        /// Level index.
        #[arg(long)]
        n: u32,
    },
    /// Geometric level mixture at weight z.
    Gaussian {
        /// Geometric weight in [0, 1).
        #[arg(long)]
        z: f64,
    },
    /// Boltzmann ensemble of spin-down, r = 1 level members.
    Thermal {
        /// Inverse-temperature parameter, positive.
        #[arg(long)]
        mu: f64,
        /// Gap parameter, nonnegative.
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
    },
    /// Graphene-analog level state.
    Graphene {
        /// Analog level index, at least 1.
        #[arg(long)]
        n: u32,
        /// Band branch, conduction or valence.
        #[arg(long, value_parser = parse_band)]
        band: Band,
    },
}

impl From<StateKind> for StateRequest {
    fn from(kind: StateKind) -> StateRequest {
        match kind {
            StateKind::Pure {
                n,
                parity,
                spin,
                mass,
                kz,
            } => StateRequest::Pure {
                n,
                parity,
                spin,
                mass,
                kz,
            },
            StateKind::Superposition { n, theta, mass, kz } => {
                StateRequest::Superposition { n, theta, mass, kz }
            }
            StateKind::SpinMixture { n, phi, mass, kz } => {
                StateRequest::SpinMixture { n, phi, mass, kz }
            }
            StateKind::MaxMixed { n } => StateRequest::MaxMixed { n },
            StateKind::Gaussian { z } => StateRequest::Gaussian { z },
            StateKind::Thermal { mu, kappa } => StateRequest::Thermal { mu, kappa },
            StateKind::Graphene { n, band } => StateRequest::Graphene { n, band },
        }
    }
}

fn run(cli: Cli) -> Result<Vec<PathBuf>, Failure> {
    let out_dir = cli
        .out_dir
        .or_else(|| std::env::var_os("LWIG_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let (table, gnuplot) = match cli.command {
        Command::Basis {
            max_index,
            quadrature,
        } => (commands::basis(max_index, quadrature)?, false),
        Command::StateInfo { state } => (commands::state_info(&state.into())?, false),
        Command::Fig1 {
            massless,
            grid,
            n,
            gnuplot,
        } => (commands::fig1(grid, n, massless)?, gnuplot),
        Command::Gaussian { z } => (commands::gaussian(z)?, false),
        Command::FigGaussianDensity {
            z,
            grid,
            range,
            gnuplot,
        } => (commands::fig_gaussian_density(z, grid, range)?, gnuplot),
        Command::FigGaussianInfo {
            grid,
            z_max,
            gnuplot,
        } => (commands::fig_gaussian_info(grid, z_max)?, gnuplot),
        Command::Thermo { mu, kappa, order } => (commands::thermo(mu, kappa, order)?, false),
        Command::FigThermo {
            kappa,
            mu_min,
            mu_max,
            grid,
            gnuplot,
        } => (
            commands::fig_thermo(&kappa, mu_min, mu_max, grid)?,
            gnuplot,
        ),
        Command::FigThermalPurity {
            kappa,
            mu,
            gnuplot,
        } => (commands::fig_thermal_purity(&kappa, &mu)?, gnuplot),
        Command::FigThermalInfo { mu, gnuplot } => (commands::fig_thermal_info(&mu)?, gnuplot),
        Command::ZetaCheck { kappa } => (commands::zeta_check(&kappa)?, false),
    };
    Ok(table.write(&out_dir, cli.format, gnuplot)?)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(paths) => {
            for path in paths {
                println!("{}", path.display());
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            std::process::exit(failure.code());
        }
    }
}
