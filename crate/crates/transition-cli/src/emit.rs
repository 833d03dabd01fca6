//! Tabular output of scan results: CSV rows or a JSON document mirroring
//! them, with every number carrying 17 significant digits so parsing the
//! output reproduces the exact binary values.

use crate::config::OutputFormat;
use crate::error::TransitionError;
use crate::report::regime_name;
use crate::scan::{ConvergenceRow, ScanResult};
use std::fmt::Write as _;
use std::path::Path;

/// A float at 17 significant digits, enough to round-trip any f64.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn header(result: &ScanResult) -> Vec<String> {
    let mut cols: Vec<String> =
        ["family", "regime", "N", "n", "m", "beta", "tau"].iter().map(|s| s.to_string()).collect();
    for j in 1..=result.config.n {
        cols.push(format!("y{j}"));
    }
    for j in 1..=result.config.m {
        cols.push(format!("sigma{j}"));
    }
    for tail in ["re_ratio", "im_ratio", "re_limit", "im_limit", "abs_error", "est_error", "seed"]
    {
        cols.push(tail.to_string());
    }
    cols
}

fn row_fields(result: &ScanResult, row: &ConvergenceRow) -> Vec<String> {
    let config = &result.config;
    let mut fields = vec![
        config.family.as_str().to_string(),
        regime_name(result.regime).to_string(),
        row.n_dim.to_string(),
        config.n.to_string(),
        config.m.to_string(),
        sig17(config.beta),
        sig17(config.tau),
    ];
    fields.extend(row.y.iter().map(|&v| sig17(v)));
    fields.extend(config.sigma.iter().map(|&v| sig17(v)));
    fields.extend([
        sig17(row.ratio.re),
        sig17(row.ratio.im),
        sig17(row.limit_value.re),
        sig17(row.limit_value.im),
        sig17(row.abs_error),
        sig17(row.est_error),
        row.seed.to_string(),
    ]);
    fields
}

fn render_csv(result: &ScanResult) -> Result<String, TransitionError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| TransitionError::Config(format!("csv rendering failed: {e}"));
    writer.write_record(header(result)).map_err(fail)?;
    for row in result.rows.iter().filter(|r| r.error.is_none()) {
        writer.write_record(row_fields(result, row)).map_err(fail)?;
    }
    let bytes = writer.into_inner().map_err(|e| {
        TransitionError::Config(format!("csv rendering failed: {}", e.error()))
    })?;
    String::from_utf8(bytes)
        .map_err(|e| TransitionError::Config(format!("csv rendering failed: {e}")))
}

fn json_array(values: &[f64]) -> String {
    let inner: Vec<String> = values.iter().map(|&v| sig17(v)).collect();
    format!("[{}]", inner.join(","))
}

/// JSON mirror of the CSV table: one object per row under `rows`, aborted
/// cells under `failures`, all floats at 17 significant digits. Raw
/// strings are escaped through the serializer.
fn render_json(result: &ScanResult) -> Result<String, TransitionError> {
    let config = &result.config;
    let quote = |s: &str| serde_json::to_string(s).expect("string serialization");
    let mut out = String::from("{\n  \"schema_version\": \"1\",\n");
    let _ = writeln!(out, "  \"family\": {},", quote(config.family.as_str()));
    let _ = writeln!(out, "  \"regime\": {},", quote(regime_name(result.regime)));
    out.push_str("  \"prefactor_placement\": \"applied to the averaged product before division\",\n");
    out.push_str("  \"rows\": [");
    let mut first = true;
    for row in result.rows.iter().filter(|r| r.error.is_none()) {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str("\n    {");
        let _ = write!(
            out,
            "\"N\": {}, \"n\": {}, \"m\": {}, \"beta\": {}, \"tau\": {}, ",
            row.n_dim,
            config.n,
            config.m,
            sig17(config.beta),
            sig17(config.tau)
        );
        let _ = write!(out, "\"y\": {}, \"sigma\": {}, ", json_array(&row.y), json_array(&config.sigma));
        let _ = write!(
            out,
            "\"re_ratio\": {}, \"im_ratio\": {}, \"re_limit\": {}, \"im_limit\": {}, ",
            sig17(row.ratio.re),
            sig17(row.ratio.im),
            sig17(row.limit_value.re),
            sig17(row.limit_value.im)
        );
        let _ = write!(
            out,
            "\"abs_error\": {}, \"est_error\": {}, \"seed\": {}}}",
            sig17(row.abs_error),
            sig17(row.est_error),
            row.seed
        );
    }
    out.push_str("\n  ],\n  \"failures\": [");
    first = true;
    for row in result.rows.iter().filter(|r| r.error.is_some()) {
        if !first {
            out.push(',');
        }
        first = false;
        let _ = write!(
            out,
            "\n    {{\"N\": {}, \"y\": {}, \"seed\": {}, \"error\": {}}}",
            row.n_dim,
            json_array(&row.y),
            row.seed,
            quote(row.error.as_deref().unwrap_or(""))
        );
    }
    out.push_str("\n  ]\n}\n");
    Ok(out)
}

/// Renders the scan in the requested format without touching the
/// filesystem; `emit` writes the same bytes to a path.
pub fn render(result: &ScanResult, format: OutputFormat) -> Result<String, TransitionError> {
    match format {
        OutputFormat::Csv => render_csv(result),
        OutputFormat::Json => render_json(result),
    }
}

/// Writes the rendered scan to `path`.
///
/// # Errors
/// I/O failures carry the path; rendering failures pass through.
pub fn emit(
    result: &ScanResult,
    path: &Path,
    format: OutputFormat,
) -> Result<(), TransitionError> {
    let body = render(result, format)?;
    std::fs::write(path, body).map_err(|source| TransitionError::Io {
        path: path.display().to_string(),
        source,
    })
}
