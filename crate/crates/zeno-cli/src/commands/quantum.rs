use std::time::Instant;

use serde_json::{json, Map};

use zeno_core::io::{load_hamiltonian, write_protocol_records, ProtocolRecord};
use zeno_core::quantum::{Hamiltonian, QuantumState};
use zeno_core::zeno::{evaluate_schedule, run_trajectories, ZenoSchedule};

use crate::commands::{resolve_grid, resolve_seed, resolve_time, QuantumArgs};
use crate::errors::{computation_error, input_file_error, usage_error, CliError};
use crate::manifest::{manifest_path, RunManifest};

const USAGE: &str = "zeno quantum (--rabi <OMEGA> | --hamiltonian <FILE>) --t <TIME> (--n <N> | --n-grid <SPEC>) [--trials <N>] [--seed <SEED>] [--out <FILE>]";

pub fn run(args: QuantumArgs) -> Result<(), CliError> {
    let started = Instant::now();

    let (hamiltonian, initial): (Hamiltonian<f64>, QuantumState<f64>) =
        match (&args.rabi, &args.hamiltonian) {
            (Some(omega), None) => (
                Hamiltonian::rabi(*omega).map_err(|e| usage_error(e, USAGE))?,
                QuantumState::basis(2, 0).expect("2-dimensional basis state"),
            ),
            (None, Some(path)) => load_hamiltonian(path).map_err(input_file_error)?,
            (None, None) => {
                return Err(usage_error(
                    "one of --rabi or --hamiltonian is required",
                    USAGE,
                ))
            }
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
    let t = resolve_time(args.t, USAGE)?;
    let grid = resolve_grid(args.n, &args.n_grid, USAGE)?;
    let seed = resolve_seed(args.seed)?;

    let mut records = Vec::with_capacity(grid.len());
    for (index, &n) in grid.iter().enumerate() {
        let schedule = ZenoSchedule::new(t, n).map_err(|e| usage_error(e, USAGE))?;
        let result =
            evaluate_schedule(&initial, &hamiltonian, &schedule).map_err(computation_error)?;
        let mc = match args.trials {
            Some(trials) => {
                // independent, deterministically derived stream per grid point
                let stats = run_trajectories(
                    &initial,
                    &hamiltonian,
                    &schedule,
                    trials,
                    seed.wrapping_add(index as u64),
                )
                .map_err(computation_error)?;
                Some(stats)
            }
            None => None,
        };
        records.push(ProtocolRecord {
            n,
            exact: result.exact_survival,
            taylor_product: result.taylor_product_survival,
            first_order: result.first_order_survival,
            deficit: result.deficit,
            mc_frequency: mc.map(|s| s.frequency),
            mc_halfwidth: mc.map(|s| s.halfwidth),
        });
    }

    write_protocol_records(&args.out, &records, args.trials.is_some())
        .map_err(|e| CliError::Internal(e.to_string()))?;

    let mut parameters = Map::new();
    if let Some(omega) = args.rabi {
        parameters.insert("rabi".into(), json!(omega));
    }
    if let Some(path) = &args.hamiltonian {
        parameters.insert("hamiltonian".into(), json!(path.display().to_string()));
    }
    parameters.insert("t".into(), json!(t));
    if let Some(n) = args.n {
        parameters.insert("n".into(), json!(n));
    }
    if let Some(spec) = &args.n_grid {
        parameters.insert("n-grid".into(), json!(spec));
    }
    if let Some(trials) = args.trials {
        parameters.insert("trials".into(), json!(trials));
    }
    parameters.insert("out".into(), json!(args.out.display().to_string()));

    let mut manifest = RunManifest::new("quantum", parameters, Some(seed));
    manifest.record_output(&args.out);
    manifest.duration_ms = started.elapsed().as_secs_f64() * 1e3;
    let mpath = manifest_path(&args.out);
    manifest.write(&mpath)?;

    println!(
        "quantum: wrote {} record(s) to {} (manifest {})",
        records.len(),
        args.out.display(),
        mpath.display()
    );
    Ok(())
}
