//! Thin command-line front end. All work happens in the library; this file
//! only parses flags, resolves defaults, and routes output to files.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use atomlaser::csvout::Table;
use atomlaser::params::{Gamma, ModelParams, Spacing, TimeGrid};
use atomlaser::plot::{write_svg, PlotOptions};
use atomlaser::presets::{figure_table, preset, PRESET_IDS};
use atomlaser::scenario::{scenario_grid, scenario_summary, scenario_table};
use atomlaser::sensitivity::sensitivity_table;
use atomlaser::verify::{run_verify, OracleKind, VerifySettings};
use atomlaser::Result;

#[derive(Parser)]
#[command(
    name = "atomlaser",
    version,
    about = "Two-mode output-coupler dynamics under Poisson-step evolution: \
             curve presets, oracle verification, scenario timescales, offset scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_gamma(s: &str) -> std::result::Result<Gamma, String> {
    if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
        return Ok(Gamma::UnitaryLimit);
    }
    s.parse::<f64>()
        .map(Gamma::Finite)
        .map_err(|e| format!("gamma must be a positive number or 'inf': {}", e))
}

fn parse_oracle(s: &str) -> std::result::Result<OracleKind, String> {
    match s {
        "heisenberg" => Ok(OracleKind::Heisenberg),
        "fock" => Ok(OracleKind::Fock),
        other => Err(format!(
            "unknown oracle {:?} (expected 'heisenberg' or 'fock')",
            other
        )),
    }
}

#[derive(Args)]
struct ParamArgs {
    /// Common mode frequency.
    #[arg(long, default_value_t = 0.0)]
    omega: f64,
    /// Collective coupling between the modes.
    #[arg(long, default_value_t = 1.0)]
    omega_prime: f64,
    /// Unitary-step rate; 'inf' selects step-free (fully unitary) evolution.
    #[arg(long, default_value = "100", value_parser = parse_gamma)]
    gamma: Gamma,
    /// Squeeze magnitude of the pump mode.
    #[arg(long, default_value_t = 0.3)]
    r: f64,
    /// Squeeze phase.
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    /// Coupling phase.
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
}

impl ParamArgs {
    fn build(&self) -> Result<ModelParams> {
        ModelParams::new(
            self.omega,
            self.omega_prime,
            self.gamma,
            self.r,
            self.phi,
            self.theta,
        )
    }
}

/// Same flags as [`ParamArgs`] with defaults tuned for the offset scan.
#[derive(Args)]
struct ScanParamArgs {
    #[arg(long, default_value_t = 10.0)]
    omega: f64,
    #[arg(long, default_value_t = 10.0)]
    omega_prime: f64,
    #[arg(long, default_value = "100", value_parser = parse_gamma)]
    gamma: Gamma,
    #[arg(long, default_value_t = 0.4)]
    r: f64,
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
}

impl ScanParamArgs {
    fn build(&self) -> Result<ModelParams> {
        ModelParams::new(
            self.omega,
            self.omega_prime,
            self.gamma,
            self.r,
            self.phi,
            self.theta,
        )
    }
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    t_start: Option<f64>,
    #[arg(long)]
    t_stop: Option<f64>,
    #[arg(long)]
    t_count: Option<usize>,
    /// Force logarithmic time spacing.
    #[arg(long)]
    t_log: bool,
}

impl GridArgs {
    fn resolve(&self, default: &TimeGrid) -> Result<TimeGrid> {
        let start = self.t_start.unwrap_or(default.start);
        let stop = self.t_stop.unwrap_or(default.stop);
        let count = self.t_count.unwrap_or(default.count);
        if self.t_log || default.spacing == Spacing::Log {
            TimeGrid::log(start, stop, count)
        } else {
            TimeGrid::linear(start, stop, count)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit one of the standard curve sets as CSV.
    Figure {
        /// Preset id: fig1..fig5.
        #[arg(long)]
        preset: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "figure.csv")]
        out: PathBuf,
        /// Also write an SVG line plot next to the CSV.
        #[arg(long)]
        plot: bool,
    },
    /// Certify the closed forms against the step-resummation and Fock oracles.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Comma-separated subset of {heisenberg, fock}.
        #[arg(long, value_delimiter = ',', default_value = "heisenberg,fock",
              value_parser = parse_oracle)]
        oracles: Vec<OracleKind>,
        #[arg(long, default_value_t = 1e-10)]
        tol_heisenberg: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol_fock: f64,
        /// Per-mode occupation cutoff of the Fock oracle.
        #[arg(long, default_value_t = 24)]
        n_max: usize,
        /// Poisson-window tail target for both oracles.
        #[arg(long, default_value_t = 1e-14)]
        tail: f64,
        /// Also write the plain-text report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Laboratory-scale output coupling: CSV over nine decades plus an
    /// envelope-timescale summary under both unit readings.
    Scenario {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "scenario.csv")]
        out: PathBuf,
        #[arg(long)]
        plot: bool,
    },
    /// Long-time response to small coupling offsets.
    Sensitivity {
        #[command(flatten)]
        params: ScanParamArgs,
        /// Comma-separated coupling offsets added to omega_prime.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1e-7, 2e-7, 3e-7])]
        deltas: Vec<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "sensitivity.csv")]
        out: PathBuf,
        #[arg(long)]
        plot: bool,
    },
}

fn emit(table: &Table, out: &Path, plot: bool, log_x: bool, title: &str) -> Result<()> {
    table.write(out)?;
    println!(
        "wrote {} ({} rows, {} columns)",
        out.display(),
        table.rows.len(),
        table.headers.len()
    );
    if plot {
        let svg_path = out.with_extension("svg");
        write_svg(
            table,
            &PlotOptions {
                title: title.to_string(),
                log_x,
                ..PlotOptions::default()
            },
            &svg_path,
        )?;
        println!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Figure {
            preset: id,
            grid,
            out,
            plot,
        } => {
            let figure = preset(&id).inspect_err(|_| {
                eprintln!("known presets: {}", PRESET_IDS.join(", "));
            })?;
            let grid = grid.resolve(&figure.default_grid)?;
            let table = figure_table(&figure, &grid)?;
            emit(&table, &out, plot, grid.spacing == Spacing::Log, figure.id)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            params,
            grid,
            oracles,
            tol_heisenberg,
            tol_fock,
            n_max,
            tail,
            out,
        } => {
            let p = params.build()?;
            let grid = grid.resolve(&TimeGrid::linear(0.0, 10.0, 50)?)?;
            let settings = VerifySettings {
                tol_heisenberg,
                tol_fock,
                n_max,
                target_tail: tail,
                ..VerifySettings::default()
            };
            let report = run_verify(&p, &grid, &oracles, &settings)?;
            let text = report.render();
            print!("{}", text);
            if let Some(path) = out {
                std::fs::write(&path, &text)?;
                println!("wrote {}", path.display());
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Scenario { grid, out, plot } => {
            let grid = grid.resolve(&scenario_grid()?)?;
            let table = scenario_table(&grid)?;
            emit(&table, &out, plot, true, "output-coupling scenario")?;
            print!("{}", scenario_summary().render());
            Ok(ExitCode::SUCCESS)
        }
        Command::Sensitivity {
            params,
            deltas,
            grid,
            out,
            plot,
        } => {
            let p = params.build()?;
            let grid = grid.resolve(&TimeGrid::log(0.1, 1e8, 2000)?)?;
            let table = sensitivity_table(&p, &deltas, &grid)?;
            emit(
                &table,
                &out,
                plot,
                grid.spacing == Spacing::Log,
                "offset scan",
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
