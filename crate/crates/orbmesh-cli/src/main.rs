//! `orbmesh` command line: scenario validation, preset catalog, and
//! experiment execution with byte-reproducible outputs.

mod experiments;
mod scenario;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use orbmesh::presets;

use crate::scenario::{check_runnable, load_scenario, CliError, CliResult, EXPERIMENTS};

#[derive(Parser)]
#[command(name = "orbmesh", version, about = "NGSO constellation analysis toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the experiment selected by a scenario file.
    Run {
        scenario: PathBuf,
        /// Output directory (default: `<scenario stem>.out` next to the file).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the scenario's `seed` field.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for parallel sweeps (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Constant set: `spherical` or `wgs-equatorial` (overrides scenario).
        #[arg(long)]
        constants: Option<String>,
    },
    /// Parse and validate a scenario file without running anything.
    Validate { scenario: PathBuf },
    /// List constellation presets, link bundles, and the ground segment.
    Presets,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Run { scenario, out, seed, threads, constants } => {
            run(&scenario, out, seed, threads, constants.as_deref())
        }
        Cmd::Validate { scenario } => validate(&scenario),
        Cmd::Presets => {
            print_presets();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ CliError::Validation(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Runtime(_)) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn run(
    path: &Path,
    out: Option<PathBuf>,
    seed: Option<u64>,
    threads: Option<usize>,
    constants: Option<&str>,
) -> CliResult<()> {
    let threads = threads.unwrap_or_else(default_threads).max(1);
    let mut resolved = load_scenario(path, seed, constants, threads)?;
    let experiment = check_runnable(&resolved)?;
    let output = experiments::run_experiment(&mut resolved, &experiment)?;

    let out_dir = out.unwrap_or_else(|| {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("scenario");
        path.with_file_name(format!("{stem}.out"))
    });
    std::fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out_dir.display())))?;

    let mut written = Vec::new();
    for (name, content) in &output.tables {
        let file = out_dir.join(name);
        std::fs::write(&file, content)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", file.display())))?;
        written.push(name.clone());
    }

    let summary = json!({
        "experiment": experiment,
        "provenance": {
            "scenario_file": path.file_name().and_then(|s| s.to_str()).unwrap_or(""),
            "scenario_sha256": resolved.sha256,
            "constants": resolved.constants_name,
            "seed": resolved.seed,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "defaults_applied": resolved.defaults,
        },
        "tables": written,
        "results": output.summary,
    });
    let summary_path = out_dir.join("summary.json");
    let mut text = serde_json::to_string_pretty(&summary)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    text.push('\n');
    std::fs::write(&summary_path, text)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", summary_path.display())))?;

    println!("{}: wrote {} table(s) + summary.json to {}", experiment, output.tables.len(), out_dir.display());
    Ok(())
}

fn validate(path: &Path) -> CliResult<()> {
    let resolved = load_scenario(path, None, None, 1)?;
    let normalized = toml::to_string_pretty(&resolved.scenario)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    println!("scenario OK (sha256 {})", &resolved.sha256[..12]);
    match &resolved.experiment {
        Some(e) => println!("experiment: {e}"),
        None => println!("experiment: (none; required for `run`)"),
    }
    if !resolved.defaults.is_empty() {
        println!("defaults applied so far:");
        for d in &resolved.defaults {
            println!("  {d}");
        }
    }
    println!("--- normalized scenario ---\n{normalized}");
    Ok(())
}

fn print_presets() {
    println!("constellation presets:");
    for name in presets::CONSTELLATION_NAMES {
        let s = presets::shell_config(name).expect("catalog preset");
        println!(
            "  {name}: {:?} geometry, N={} ({} planes x {} per plane), h={:.0} km, inclination={:.1} deg",
            s.geometry,
            s.n_sats(),
            s.n_planes,
            s.sats_per_plane,
            s.altitude_m / 1e3,
            s.inclination_rad.to_degrees()
        );
    }
    println!("link bundles:");
    for name in presets::LINK_NAMES {
        let p = presets::link_params(name).expect("catalog preset");
        println!(
            "  {name}: {:.0} GHz carrier, {:.0} MHz bandwidth, {:.0} W tx, noise {:.0} K + NF {:.1} dB, pointing loss {:.1} dB/end",
            p.carrier_hz / 1e9,
            p.bandwidth_hz / 1e6,
            p.tx_power_w,
            p.noise_temperature_k,
            p.noise_figure_db,
            p.pointing_loss_db
        );
    }
    let sites = presets::ground_segment();
    println!("ground segment: ksat23 ({} sites)", sites.len());
    for s in &sites {
        println!(
            "  {}: lat {:.2} deg, lon {:.2} deg",
            s.id,
            s.latitude_rad.to_degrees(),
            s.longitude_rad.to_degrees()
        );
    }
    println!("experiments: {}", EXPERIMENTS.join(", "));
}
