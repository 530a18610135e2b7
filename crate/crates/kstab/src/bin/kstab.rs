//! Command-line front end. All computation lives in the library; this binary
//! parses arguments, dispatches, and maps errors to exit codes:
//! 0 success (ξ > 0 for invariant runs), 1 success with non-positive ξ,
//! 2 input error, 3 mathematical precondition failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::{One, Zero};

use kstab::arith::{factorize, parse_rational};
use kstab::report::{self, RenderOptions};
use kstab::root_system::{DynkinDiagram, RootSystem, Weight};
use kstab::{config, BlowUpGeometry, Error, Marking, Verdict};

#[derive(Parser)]
#[command(name = "kstab", version, about = "Exact ξ/β invariants for two-orbit Fano blow-ups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in geometries.
    Preset {
        #[command(subcommand)]
        action: PresetAction,
    },
    /// Run the ξ/β computation on a JSON config file.
    Xi {
        /// Path to the config file.
        #[arg(long)]
        config: std::path::PathBuf,
        #[command(flatten)]
        render: RenderFlags,
    },
    /// Positive roots, fundamental weights, and ρ of a diagram.
    Roots {
        /// Diagram, e.g. "F4" or "A1xG2".
        diagram: String,
    },
    /// Degree of a dominant weight on the flag variety of a marking.
    Degree {
        /// Diagram, e.g. "A4".
        diagram: String,
        /// Marked nodes, comma-separated 1-based indices, e.g. "2" or "1,3".
        #[arg(long, value_delimiter = ',')]
        marked: Vec<usize>,
        /// Fundamental-weight coefficients, comma-separated rationals.
        #[arg(long, value_delimiter = ',')]
        weight: Vec<String>,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    /// List preset names.
    List,
    /// Compute the full report for a preset.
    Run {
        name: String,
        #[command(flatten)]
        render: RenderFlags,
    },
}

#[derive(Args)]
struct RenderFlags {
    /// Emit the machine-readable JSON report.
    #[arg(long)]
    json: bool,
    /// Include the per-root table in text output.
    #[arg(long)]
    table: bool,
    /// Factor integer outputs.
    #[arg(long)]
    factor: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Preset { action: PresetAction::List } => {
            for name in config::PRESET_NAMES {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Preset { action: PresetAction::Run { name, render } } => {
            let file = config::preset(&name)
                .ok_or_else(|| Error::InvalidConfig(format!("unknown preset {name:?}")))?;
            // Preset runs always show the full table and factored ξ.
            report_command(file, render, true)
        }
        Command::Xi { config: path, render } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
            let file = config::ConfigFile::from_json(&text)?;
            report_command(file, render, false)
        }
        Command::Roots { diagram } => {
            let rs = RootSystem::new(DynkinDiagram::parse(&diagram)?)?;
            print!("{}", roots_listing(&rs));
            Ok(ExitCode::SUCCESS)
        }
        Command::Degree { diagram, marked, weight } => {
            let rs = RootSystem::new(DynkinDiagram::parse(&diagram)?)?;
            let marking = Marking::new(marked)?;
            if weight.len() != rs.rank() {
                return Err(Error::InvalidConfig(format!(
                    "{} weight coefficients for rank {}",
                    weight.len(),
                    rs.rank()
                )));
            }
            let coeffs = weight
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()?;
            let value = kstab::degree(&rs, &marking, &Weight::new(coeffs))?;
            println!("{value}");
            if value.denom().is_one() && !value.is_zero() {
                println!("= {}", factorize(value.numer()));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn report_command(
    file: config::ConfigFile,
    flags: RenderFlags,
    full: bool,
) -> Result<ExitCode, Error> {
    let geometry = BlowUpGeometry::new(file.to_config()?)?;
    let report = geometry.report()?;
    if flags.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report::render_report_json(&report))
                .expect("report serializes")
        );
    } else {
        let opts = RenderOptions {
            color: report::color_enabled(),
            table: full || flags.table,
            factor: full || flags.factor,
        };
        print!("{}", report::render_report_text(&report, &opts));
    }
    Ok(match report.verdict {
        Verdict::Positive => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    })
}

fn roots_listing(rs: &RootSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}: {} positive roots (simple-basis coordinates, by height)\n",
        rs.diagram(),
        rs.positive_roots().len()
    ));
    for root in rs.positive_roots() {
        out.push_str(&format!("  {root}\n"));
    }
    out.push_str("fundamental weights (simple-basis coordinates):\n");
    let base = rs.diagram().node_label_base();
    for (i, row) in rs.fundamental_weight_matrix().iter().enumerate() {
        let coords: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&format!("  ω_{} = ({})\n", i + base, coords.join(",")));
    }
    let rho = rs
        .weight_in_simple_basis(&rs.rho())
        .expect("rho matches rank");
    let coords: Vec<String> = rho.iter().map(ToString::to_string).collect();
    out.push_str(&format!("ρ = ({})\n", coords.join(",")));
    out
}
