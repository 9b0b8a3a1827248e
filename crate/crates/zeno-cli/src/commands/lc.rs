use std::path::Path;
use std::time::Instant;

use serde_json::{json, Map};

use zeno_core::classical::{
    switched_charge_exact, switched_charge_taylor, switched_run_numeric, LcCircuit, SwitchProtocol,
};
use zeno_core::convergence::SystemTag;
use zeno_core::io::{format_real, load_circuit, write_protocol_records, ProtocolRecord};

use crate::commands::{resolve_grid, resolve_time, LcArgs, LcMethod};
use crate::errors::{computation_error, input_file_error, usage_error, CliError};
use crate::manifest::{manifest_path, RunManifest};

const USAGE: &str = "zeno lc (--L <L> --C <C> --q0 <Q0> | --m <M> --k <K> --x0 <X0> | --circuit <FILE> | --lc-unit) --t <TIME> (--n <N> | --n-grid <SPEC>) [--method analytic|rk4] [--step <STEP>] [--trace <FILE>] [--out <FILE>]";

pub fn run(args: LcArgs) -> Result<(), CliError> {
    let started = Instant::now();

    let (circuit, system) = resolve_circuit(&args)?;
    let t = resolve_time(args.t, USAGE)?;
    let grid = resolve_grid(args.n, &args.n_grid, USAGE)?;
    if args.trace.is_some() {
        if args.method != LcMethod::Rk4 {
            return Err(usage_error("--trace requires --method rk4", USAGE));
        }
        if args.n.is_none() {
            return Err(usage_error("--trace requires a single --n", USAGE));
        }
    }
    if args.method == LcMethod::Rk4 && !(args.step.is_finite() && args.step > 0.0) {
        return Err(usage_error(
            format!("--step must be finite and positive, got {}", args.step),
            USAGE,
        ));
    }

    let q0 = circuit.initial_charge();
    let mut records = Vec::with_capacity(grid.len());
    for &n in &grid {
        let protocol = SwitchProtocol::new(t, n).map_err(|e| usage_error(e, USAGE))?;
        let value = match args.method {
            LcMethod::Analytic => switched_charge_exact(&circuit, &protocol) / q0,
            LcMethod::Rk4 => {
                let run =
                    switched_run_numeric(&circuit, &protocol, args.step).map_err(computation_error)?;
                if let Some(trace_path) = &args.trace {
                    write_trace(trace_path, &run.trace)?;
                }
                run.final_state.charge / q0
            }
        };
        let (taylor_product, first_order) = match switched_charge_taylor(&circuit, &protocol) {
            Ok((product, first)) => {
                let first = (first >= 0.0).then_some(first / q0);
                (Some(product / q0), first)
            }
            Err(zeno_core::Error::OutOfDomain { .. }) => (None, None),
            Err(other) => return Err(computation_error(other)),
        };
        records.push(ProtocolRecord {
            n,
            exact: value,
            taylor_product,
            first_order,
            deficit: 1.0 - value,
            mc_frequency: None,
            mc_halfwidth: None,
        });
    }

    write_protocol_records(&args.out, &records, false)
        .map_err(|e| CliError::Internal(e.to_string()))?;

    let mut parameters = Map::new();
    match system {
        SystemTag::ClassicalLho => {
            parameters.insert("m".into(), json!(circuit.inductance()));
            parameters.insert("k".into(), json!(1.0 / circuit.capacitance()));
            parameters.insert("x0".into(), json!(circuit.initial_charge()));
        }
        _ => {
            parameters.insert("L".into(), json!(circuit.inductance()));
            parameters.insert("C".into(), json!(circuit.capacitance()));
            parameters.insert("q0".into(), json!(circuit.initial_charge()));
        }
    }
    parameters.insert("system".into(), json!(system.as_str()));
    parameters.insert("t".into(), json!(t));
    if let Some(n) = args.n {
        parameters.insert("n".into(), json!(n));
    }
    if let Some(spec) = &args.n_grid {
        parameters.insert("n-grid".into(), json!(spec));
    }
    parameters.insert("method".into(), json!(args.method.as_str()));
    if args.method == LcMethod::Rk4 {
        parameters.insert("step".into(), json!(args.step));
    }
    if let Some(trace) = &args.trace {
        parameters.insert("trace".into(), json!(trace.display().to_string()));
    }
    parameters.insert("out".into(), json!(args.out.display().to_string()));

    let mut manifest = RunManifest::new("lc", parameters, None);
    manifest.record_output(&args.out);
    if let Some(trace) = &args.trace {
        manifest.record_output(trace);
    }
    manifest.duration_ms = started.elapsed().as_secs_f64() * 1e3;
    let mpath = manifest_path(&args.out);
    manifest.write(&mpath)?;

    println!(
        "lc: wrote {} record(s) to {} (manifest {})",
        records.len(),
        args.out.display(),
        mpath.display()
    );
    Ok(())
}

fn resolve_circuit(args: &LcArgs) -> Result<(LcCircuit<f64>, SystemTag), CliError> {
    let electrical = [args.inductance, args.capacitance, args.q0];
    let mechanical = [args.m, args.k, args.x0];
    let groups = [
        electrical.iter().any(Option::is_some),
        mechanical.iter().any(Option::is_some),
        args.circuit.is_some(),
        args.lc_unit,
    ];
    if groups.iter().filter(|&&g| g).count() != 1 {
        return Err(usage_error(
            "specify exactly one of: --L/--C/--q0, --m/--k/--x0, --circuit, --lc-unit",
            USAGE,
        ));
    }
    if args.lc_unit {
        return Ok((
            LcCircuit::new(1.0, 1.0, 1.0).expect("unit circuit"),
            SystemTag::ClassicalLc,
        ));
    }
    if let Some(path) = &args.circuit {
        return load_circuit(path).map_err(input_file_error);
    }
    if electrical.iter().any(Option::is_some) {
        let (Some(l), Some(c), Some(q0)) = (args.inductance, args.capacitance, args.q0) else {
            return Err(usage_error("--L, --C and --q0 must be given together", USAGE));
        };
        return Ok((
            LcCircuit::new(l, c, q0).map_err(|e| usage_error(e, USAGE))?,
            SystemTag::ClassicalLc,
        ));
    }
    let (Some(m), Some(k), Some(x0)) = (args.m, args.k, args.x0) else {
        return Err(usage_error("--m, --k and --x0 must be given together", USAGE));
    };
    Ok((
        LcCircuit::from_mechanical(m, k, x0).map_err(|e| usage_error(e, USAGE))?,
        SystemTag::ClassicalLho,
    ))
}

fn write_trace(
    path: &Path,
    trace: &[zeno_core::classical::OscillatorState<f64>],
) -> Result<(), CliError> {
    let mut out = String::with_capacity(trace.len() * 64);
    out.push_str("time,q,i,switch_on\n");
    for s in trace {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_real(s.time),
            format_real(s.charge),
            format_real(s.current),
            s.switch_on
        ));
    }
    std::fs::write(path, out)
        .map_err(|e| CliError::Internal(format!("trace {}: {e}", path.display())))
}
