//! File formats: Hamiltonian and circuit JSON specs, records CSV, and the
//! fit-report JSON. File contracts are `f64`-typed; reals in CSV are written
//! with 17 significant digits so values round-trip exactly.

mod circuit_file;
mod fit_report;
mod hamiltonian_file;
mod records;

pub use circuit_file::{load_circuit, parse_circuit, CircuitFile};
pub use fit_report::{read_fit_report, write_fit_report, FitReport};
pub use hamiltonian_file::{load_hamiltonian, parse_hamiltonian, HamiltonianFile, InitialStateSpec};
pub use records::{
    read_convergence_records, read_records_flexible, read_short_time_samples,
    write_convergence_records, write_protocol_records, GenericRecord, ProtocolRecord,
};

/// Round-trip-safe decimal rendering of a real: 17 significant digits,
/// `.` separator.
pub fn format_real(value: f64) -> String {
    format!("{value:.16e}")
}
