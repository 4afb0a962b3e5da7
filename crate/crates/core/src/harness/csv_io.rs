use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::{Source, SweepRecord, TradeoffReport};
use crate::error::{Error, Result};
use crate::Scalar;

pub const CSV_HEADER: [&str; 10] = ["alpha", "phi", "source", "epsilon", "x_a", "y_a", "x_b", "y_b", "f_a", "f_b"];

const SIGNIFICANT_DIGITS: usize = 12;

/// Renders `x` with 12 significant digits, `%.12g` style: positional for
/// exponents in `[-5, 12)`, scientific otherwise, trailing zeros dropped.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format has an exponent");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exponent) {
        let body = if exponent < 0 {
            format!("0.{}{}", "0".repeat((-exponent - 1) as usize), digits)
        } else {
            let split = exponent as usize + 1;
            format!("{}.{}", &digits[..split], &digits[split..])
        };
        format!("{sign}{}", trim_fraction(&body))
    } else {
        let mantissa = trim_fraction(mantissa);
        format!("{sign}{mantissa}e{exponent}")
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn record_fields<T: Scalar>(r: &SweepRecord<T>) -> Vec<String> {
    let num = |x: T| format_sig(x.to_f64().expect("scalar converts to f64"));
    vec![
        num(r.alpha),
        num(r.phi),
        r.source.to_string(),
        num(r.epsilon),
        num(r.x_a),
        num(r.y_a),
        num(r.x_b),
        num(r.y_b),
        num(r.f_a),
        num(r.f_b),
    ]
}

fn csv_error(path: &Path, err: csv::Error) -> Error {
    match err.into_kind() {
        csv::ErrorKind::Io(source) => Error::Io { path: path.to_path_buf(), source },
        other => Error::Format { path: path.to_path_buf(), message: format!("{other:?}") },
    }
}

/// Writes the header and one row per record. `label` names the destination in errors.
pub fn write_records<T: Scalar, W: Write>(records: &[SweepRecord<T>], out: W, label: &Path) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    writer.write_record(CSV_HEADER).map_err(|e| csv_error(label, e))?;
    for record in records {
        writer.write_record(record_fields(record)).map_err(|e| csv_error(label, e))?;
    }
    writer.flush().map_err(|source| Error::Io { path: label.to_path_buf(), source })
}

pub fn write_csv<T: Scalar>(records: &[SweepRecord<T>], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    write_records(records, file, path)
}

/// Sweep rows followed by `residual` and `frontier` columns.
pub fn write_tradeoff<T: Scalar, W: Write>(
    records: &[SweepRecord<T>],
    report: &TradeoffReport<T>,
    out: W,
    label: &Path,
) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    header.extend(["residual", "frontier"]);
    writer.write_record(&header).map_err(|e| csv_error(label, e))?;
    for (record, row) in records.iter().zip(&report.rows) {
        let mut fields = record_fields(record);
        fields.push(format_sig(row.residual.to_f64().expect("scalar converts to f64")));
        fields.push(row.frontier.to_string());
        writer.write_record(&fields).map_err(|e| csv_error(label, e))?;
    }
    writer.flush().map_err(|source| Error::Io { path: label.to_path_buf(), source })
}

/// Parses sweep rows; extra trailing columns (e.g. from a trade-off file) are ignored.
pub fn read_records<R: Read>(input: R, label: &Path) -> Result<Vec<SweepRecord<f64>>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let format_err = |message: String| Error::Format { path: label.to_path_buf(), message };
    let header = reader.headers().map_err(|e| csv_error(label, e))?.clone();
    if header.len() < CSV_HEADER.len() || header.iter().zip(CSV_HEADER).any(|(got, want)| got != want) {
        return Err(format_err(format!("unexpected header {:?}", header.iter().collect::<Vec<_>>())));
    }
    let mut records = Vec::new();
    for (line, row) in reader.records().enumerate() {
        let row = row.map_err(|e| csv_error(label, e))?;
        let field = |k: usize| -> Result<f64> {
            row[k].trim().parse().map_err(|_| {
                format_err(format!("row {}: bad number {:?} in column {}", line + 1, &row[k], CSV_HEADER[k]))
            })
        };
        let source: Source =
            row[2].trim().parse().map_err(|_| format_err(format!("row {}: bad source {:?}", line + 1, &row[2])))?;
        records.push(SweepRecord {
            alpha: field(0)?,
            phi: field(1)?,
            source,
            epsilon: field(3)?,
            x_a: field(4)?,
            y_a: field(5)?,
            x_b: field(6)?,
            y_b: field(7)?,
            f_a: field(8)?,
            f_b: field(9)?,
        });
    }
    Ok(records)
}

pub fn read_csv(path: &Path) -> Result<Vec<SweepRecord<f64>>> {
    let file = File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    read_records(file, path)
}
