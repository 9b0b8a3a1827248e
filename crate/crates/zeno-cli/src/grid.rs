//! Parsing of `n`-grid specifications.
//!
//! Two forms: an explicit comma list `1,2,4,8`, or a geometric range
//! `start:end:xFACTOR` (values multiply by FACTOR, rounded to the nearest
//! integer, deduplicated, with `end` always included).

use crate::errors::CliError;

pub fn parse_n_grid(spec: &str) -> Result<Vec<u64>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(bad(spec, "empty specification"));
    }
    let grid = if spec.contains(':') {
        parse_geometric(spec)?
    } else {
        parse_list(spec)?
    };
    if grid.is_empty() {
        return Err(bad(spec, "produced no grid points"));
    }
    for pair in grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(bad(spec, "grid must be strictly increasing"));
        }
    }
    Ok(grid)
}

fn parse_list(spec: &str) -> Result<Vec<u64>, CliError> {
    spec.split(',')
        .map(|part| {
            let part = part.trim();
            let n: u64 = part
                .parse()
                .map_err(|_| bad(spec, &format!("'{part}' is not an unsigned integer")))?;
            if n == 0 {
                return Err(bad(spec, "grid entries must be >= 1"));
            }
            Ok(n)
        })
        .collect()
}

fn parse_geometric(spec: &str) -> Result<Vec<u64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad(spec, "expected start:end:xFACTOR"));
    }
    let start: u64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| bad(spec, "start is not an unsigned integer"))?;
    let end: u64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| bad(spec, "end is not an unsigned integer"))?;
    let factor_str = parts[2].trim();
    let factor: f64 = factor_str
        .strip_prefix('x')
        .ok_or_else(|| bad(spec, "factor must start with 'x', e.g. x2"))?
        .parse()
        .map_err(|_| bad(spec, "factor is not a number"))?;
    if start == 0 || start > end {
        return Err(bad(spec, "need 1 <= start <= end"));
    }
    if !(factor.is_finite() && factor > 1.0) {
        return Err(bad(spec, "factor must be > 1"));
    }
    let mut grid = vec![start];
    let mut current = start as f64;
    loop {
        current *= factor;
        let rounded = current.round() as u64;
        if rounded > end {
            break;
        }
        if rounded > *grid.last().unwrap() {
            grid.push(rounded);
        }
    }
    if *grid.last().unwrap() < end {
        grid.push(end);
    }
    Ok(grid)
}

fn bad(spec: &str, reason: &str) -> CliError {
    CliError::Usage(format!("invalid n grid '{spec}': {reason}"))
}
