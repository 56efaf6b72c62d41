use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use trimer_cli::commands::{self, CliError, Grid};
use trimer_cli::pipeline::{ChiLoadOptions, OutputFormat};

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

/// Thermal entanglement of antiferromagnetic spin-1/2 Heisenberg
/// trimers from magnetic susceptibility.
#[derive(Parser)]
#[command(name = "trimer", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entanglement measure at a single temperature (closed form)
    Entanglement {
        /// Exchange constant J/k_B in Kelvin (negative, antiferromagnetic)
        #[arg(long, allow_negative_numbers = true)]
        j_over_kb: f64,
        /// Temperature in Kelvin
        #[arg(long, allow_negative_numbers = true)]
        temp: f64,
        /// g-factor (only relevant for physical-unit conversions)
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decoherence (critical) temperature T_c = |J/k_B|·1.3299…
    Tc {
        #[arg(long, allow_negative_numbers = true)]
        j_over_kb: f64,
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        /// csv or json; default is a human-readable line
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Entanglement measure over a linear temperature grid
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        j_over_kb: f64,
        #[arg(long, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long)]
        t_steps: usize,
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduced Van Vleck susceptibility χ̂(T), optionally with the
    /// exact-diagonalization value alongside
    Susceptibility {
        #[arg(long, allow_negative_numbers = true)]
        j_over_kb: f64,
        /// Single temperature; alternative to the grid flags
        #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["t_min", "t_max", "t_steps"])]
        temp: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires_all = ["t_max", "t_steps"])]
        t_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t_max: Option<f64>,
        #[arg(long)]
        t_steps: Option<usize>,
        /// Add a chi_oracle column from exact diagonalization
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Side-by-side report of the closed-form chain and the
    /// exact-diagonalization oracle
    OracleCompare {
        #[arg(long, allow_negative_numbers = true)]
        j_over_kb: f64,
        /// Grid defaults: |J|/100 .. 2|J| in 9 steps
        #[arg(long, allow_negative_numbers = true)]
        t_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t_max: Option<f64>,
        #[arg(long)]
        t_steps: Option<usize>,
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Entanglement series and estimated T_c from a susceptibility CSV
    FromData {
        /// Input CSV with columns T_K and chi
        #[arg(long)]
        input: PathBuf,
        /// Input chi values are already reduced (χ̂ = χ·k_B·T/(gμ_B)²)
        #[arg(long, conflicts_with = "chi_scale")]
        reduced: bool,
        /// Multiplicative scale bringing raw chi to SI units
        #[arg(long, allow_negative_numbers = true)]
        chi_scale: Option<f64>,
        /// g-factor used in the physical-unit reduction
        #[arg(long, default_value_t = 2.0)]
        g: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn dispatch(command: Command) -> Result<(String, Option<PathBuf>), CliError> {
    match command {
        Command::Entanglement { j_over_kb, temp, g, format, output } => {
            let model = commands::model_from_flags(j_over_kb, g)?;
            let fmt = format.map(OutputFormat::from).unwrap_or(OutputFormat::Csv);
            Ok((commands::cmd_entanglement(&model, temp, fmt)?, output))
        }
        Command::Tc { j_over_kb, g, format, output } => {
            let model = commands::model_from_flags(j_over_kb, g)?;
            Ok((commands::cmd_tc(&model, format.map(OutputFormat::from))?, output))
        }
        Command::Sweep { j_over_kb, t_min, t_max, t_steps, g, format, output } => {
            let model = commands::model_from_flags(j_over_kb, g)?;
            let grid = Grid::new(t_min, t_max, t_steps)?;
            let fmt = format.map(OutputFormat::from).unwrap_or(OutputFormat::Csv);
            Ok((commands::cmd_sweep(&model, grid, fmt)?, output))
        }
        Command::Susceptibility {
            j_over_kb,
            temp,
            t_min,
            t_max,
            t_steps,
            oracle,
            g,
            format,
            output,
        } => {
            let model = commands::model_from_flags(j_over_kb, g)?;
            let temps = match (temp, t_min) {
                (Some(t), _) => {
                    if t.is_nan() || t <= 0.0 {
                        return Err(CliError::Config(format!("--temp must be > 0 K (got {t})")));
                    }
                    vec![t]
                }
                (None, Some(t_min)) => {
                    let grid = Grid::new(
                        t_min,
                        t_max.expect("clap requires t_max with t_min"),
                        t_steps.expect("clap requires t_steps with t_min"),
                    )?;
                    grid.temperatures()
                }
                (None, None) => {
                    return Err(CliError::Config(
                        "susceptibility needs --temp or --t-min/--t-max/--t-steps".into(),
                    ))
                }
            };
            let fmt = format.map(OutputFormat::from).unwrap_or(OutputFormat::Csv);
            Ok((commands::cmd_susceptibility(&model, &temps, oracle, fmt)?, output))
        }
        Command::OracleCompare { j_over_kb, t_min, t_max, t_steps, g, format, output } => {
            let model = commands::model_from_flags(j_over_kb, g)?;
            let abs_j = j_over_kb.abs();
            let grid = Grid::new(
                t_min.unwrap_or(abs_j / 100.0),
                t_max.unwrap_or(2.0 * abs_j),
                t_steps.unwrap_or(9),
            )?;
            let fmt = format.map(OutputFormat::from).unwrap_or(OutputFormat::Csv);
            Ok((commands::cmd_oracle_compare(&model, grid, fmt)?, output))
        }
        Command::FromData { input, reduced, chi_scale, g, format, output } => {
            if g.is_nan() || g <= 0.0 {
                return Err(CliError::Config(format!("--g must be > 0 (got {g})")));
            }
            let opts = ChiLoadOptions {
                reduced: reduced || chi_scale.is_none(),
                chi_scale: chi_scale.unwrap_or(1.0),
                g_factor: g,
            };
            let fmt = format.map(OutputFormat::from).unwrap_or(OutputFormat::Csv);
            Ok((commands::cmd_from_data(&input, opts, fmt)?, output))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (text, output) = dispatch(cli.command)?;
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() {
    // clap itself exits with code 2 on flag errors, matching the
    // config-error convention used below.
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
