use std::fs::File;
use std::io::{self, Read, Write};
use std::path::Path;

use crate::CliError;

/// A numeric CSV block, stored column by column.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Option<Vec<String>>,
    pub columns: Vec<Vec<f64>>,
}

impl Table {
    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }
}

fn parse_number(field: &str) -> Option<f64> {
    let v: f64 = field.trim().parse().ok()?;
    v.is_finite().then_some(v)
}

/// Reads CSV from a path, or stdin for `None` / `-`. The first record is a
/// header if any of its fields is not a number.
pub fn read_table(path: Option<&Path>) -> Result<Table, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        }
    }
    parse_table(&text)
}

pub fn parse_table(text: &str) -> Result<Table, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let mut header: Option<Vec<String>> = None;
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Parse(e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let values: Vec<Option<f64>> = record.iter().map(parse_number).collect();
        if line == 0 && values.iter().any(Option::is_none) {
            header = Some(record.iter().map(str::to_string).collect());
            continue;
        }
        if columns.is_empty() {
            columns = vec![Vec::new(); values.len()];
        }
        if values.len() != columns.len() {
            return Err(CliError::Parse(format!(
                "record {} has {} fields, expected {}",
                line + 1,
                values.len(),
                columns.len()
            )));
        }
        for (col, (v, raw)) in values.iter().zip(record.iter()).enumerate() {
            let v = v.ok_or_else(|| {
                CliError::Parse(format!("record {}, field {}: '{raw}' is not a finite number", line + 1, col + 1))
            })?;
            columns[col].push(v);
        }
    }
    if columns.is_empty() {
        return Err(CliError::Parse("no numeric data".into()));
    }
    if let Some(h) = &header {
        if h.len() != columns.len() {
            return Err(CliError::Parse(format!(
                "header has {} fields but records have {}",
                h.len(),
                columns.len()
            )));
        }
    }
    Ok(Table { header, columns })
}

/// Shortest text that parses back to the same double.
pub fn format_number(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn write_rows(
    out: &mut dyn Write,
    header: Option<&[String]>,
    columns: &[Vec<f64>],
) -> Result<(), CliError> {
    let mut writer = csv::WriterBuilder::new().from_writer(out);
    let io_err = |e: csv::Error| CliError::Io(e.to_string());
    if let Some(h) = header {
        writer.write_record(h).map_err(io_err)?;
    }
    let rows = columns.first().map_or(0, Vec::len);
    for r in 0..rows {
        writer
            .write_record(columns.iter().map(|c| format_number(c[r])))
            .map_err(io_err)?;
    }
    writer.flush().map_err(|e| CliError::Io(e.to_string()))
}

pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) if p != Path::new("-") => File::create(p)
            .map(|f| Box::new(io::BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        _ => Ok(Box::new(io::stdout().lock())),
    }
}
