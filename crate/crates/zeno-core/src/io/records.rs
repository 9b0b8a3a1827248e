use std::path::Path;

use crate::convergence::{ConvergenceRecord, SystemTag};
use crate::error::{Error, Result};
use crate::io::format_real;

/// A full protocol-scan row as emitted by the quantum and classical runs:
/// columns `n, exact, taylor_product, first_order, deficit` plus optional
/// Monte Carlo columns. Approximations outside their validity domain are
/// written as empty cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolRecord {
    pub n: u64,
    pub exact: f64,
    pub taylor_product: Option<f64>,
    pub first_order: Option<f64>,
    pub deficit: f64,
    pub mc_frequency: Option<f64>,
    pub mc_halfwidth: Option<f64>,
}

/// Minimal row shape shared by every records CSV: `n`, a normalized value,
/// and its deficit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenericRecord {
    pub n: u64,
    pub value: f64,
    pub deficit: f64,
}

/// Write protocol records; Monte Carlo columns appear only when
/// `include_mc` is set.
pub fn write_protocol_records(
    path: &Path,
    records: &[ProtocolRecord],
    include_mc: bool,
) -> Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    let mut header = vec!["n", "exact", "taylor_product", "first_order", "deficit"];
    if include_mc {
        header.push("mc_frequency");
        header.push("mc_halfwidth");
    }
    writer
        .write_record(&header)
        .map_err(|e| Error::Malformed(format!("csv write: {e}")))?;
    for r in records {
        let mut row = vec![
            r.n.to_string(),
            format_real(r.exact),
            r.taylor_product.map(format_real).unwrap_or_default(),
            r.first_order.map(format_real).unwrap_or_default(),
            format_real(r.deficit),
        ];
        if include_mc {
            row.push(r.mc_frequency.map(format_real).unwrap_or_default());
            row.push(r.mc_halfwidth.map(format_real).unwrap_or_default());
        }
        writer
            .write_record(&row)
            .map_err(|e| Error::Malformed(format!("csv write: {e}")))?;
    }
    writer.flush()?;
    Ok(())
}

/// Write generic convergence records: columns `n, value, deficit, system_tag`.
pub fn write_convergence_records(path: &Path, records: &[ConvergenceRecord<f64>]) -> Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    writer
        .write_record(["n", "value", "deficit", "system_tag"])
        .map_err(|e| Error::Malformed(format!("csv write: {e}")))?;
    for r in records {
        writer
            .write_record([
                r.n.to_string(),
                format_real(r.value),
                format_real(r.deficit),
                r.system.as_str().to_string(),
            ])
            .map_err(|e| Error::Malformed(format!("csv write: {e}")))?;
    }
    writer.flush()?;
    Ok(())
}

/// Read generic convergence records (columns `n, value, deficit, system_tag`).
pub fn read_convergence_records(path: &Path) -> Result<Vec<ConvergenceRecord<f64>>> {
    let mut reader = open(path)?;
    let headers = header_map(&mut reader)?;
    let n_col = require_column(&headers, "n", path)?;
    let value_col = require_column(&headers, "value", path)?;
    let deficit_col = require_column(&headers, "deficit", path)?;
    let tag_col = require_column(&headers, "system_tag", path)?;

    let mut records = Vec::new();
    for (row_index, row) in reader.records().enumerate() {
        let row = row.map_err(|e| Error::Malformed(format!("csv parse: {e}")))?;
        let line = row_index + 2; // header is line 1
        records.push(ConvergenceRecord {
            n: parse_cell::<u64>(&row, n_col, line, "n")?,
            value: parse_cell::<f64>(&row, value_col, line, "value")?,
            deficit: parse_cell::<f64>(&row, deficit_col, line, "deficit")?,
            system: SystemTag::parse(cell(&row, tag_col, line, "system_tag")?)?,
        });
    }
    Ok(records)
}

/// Read any records CSV that carries at least an `n` column and a value
/// column (`value` or `exact`). The deficit comes from a `deficit` column
/// when present and is otherwise computed as `1 - value`.
pub fn read_records_flexible(path: &Path) -> Result<Vec<GenericRecord>> {
    let mut reader = open(path)?;
    let headers = header_map(&mut reader)?;
    let n_col = require_column(&headers, "n", path)?;
    let value_col = headers
        .iter()
        .position(|h| h == "value")
        .or_else(|| headers.iter().position(|h| h == "exact"))
        .ok_or_else(|| {
            Error::Malformed(format!(
                "{}: no 'value' or 'exact' column in header {:?}",
                path.display(),
                headers
            ))
        })?;
    let deficit_col = headers.iter().position(|h| h == "deficit");

    let mut records = Vec::new();
    for (row_index, row) in reader.records().enumerate() {
        let row = row.map_err(|e| Error::Malformed(format!("csv parse: {e}")))?;
        let line = row_index + 2;
        let n = parse_cell::<u64>(&row, n_col, line, "n")?;
        let value = parse_cell::<f64>(&row, value_col, line, "value")?;
        let deficit = match deficit_col {
            Some(col) => parse_cell::<f64>(&row, col, line, "deficit")?,
            None => 1.0 - value,
        };
        records.push(GenericRecord { n, value, deficit });
    }
    Ok(records)
}

/// Read short-time samples: columns `t, value`.
pub fn read_short_time_samples(path: &Path) -> Result<Vec<(f64, f64)>> {
    let mut reader = open(path)?;
    let headers = header_map(&mut reader)?;
    let t_col = require_column(&headers, "t", path)?;
    let value_col = require_column(&headers, "value", path)?;
    let mut samples = Vec::new();
    for (row_index, row) in reader.records().enumerate() {
        let row = row.map_err(|e| Error::Malformed(format!("csv parse: {e}")))?;
        let line = row_index + 2;
        samples.push((
            parse_cell::<f64>(&row, t_col, line, "t")?,
            parse_cell::<f64>(&row, value_col, line, "value")?,
        ));
    }
    Ok(samples)
}

fn open(path: &Path) -> Result<csv::Reader<std::fs::File>> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn header_map(reader: &mut csv::Reader<std::fs::File>) -> Result<Vec<String>> {
    Ok(reader
        .headers()
        .map_err(|e| Error::Malformed(format!("csv header: {e}")))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect())
}

fn require_column(headers: &[String], name: &str, path: &Path) -> Result<usize> {
    headers.iter().position(|h| h == name).ok_or_else(|| {
        Error::Malformed(format!(
            "{}: missing column '{name}' in header {:?}",
            path.display(),
            headers
        ))
    })
}

fn cell<'a>(row: &'a csv::StringRecord, col: usize, line: usize, name: &str) -> Result<&'a str> {
    row.get(col)
        .map(str::trim)
        .ok_or_else(|| Error::Malformed(format!("row {line}, column '{name}': missing cell")))
}

fn parse_cell<T: std::str::FromStr>(
    row: &csv::StringRecord,
    col: usize,
    line: usize,
    name: &str,
) -> Result<T> {
    let raw = cell(row, col, line, name)?;
    raw.parse().map_err(|_| {
        Error::Malformed(format!(
            "row {line}, column '{name}': cannot parse '{raw}' as a number"
        ))
    })
}
