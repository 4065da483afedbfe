use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One output record in every supported format.
pub trait Record: Serialize {
    fn text(&self) -> String;
    fn csv_header() -> Vec<&'static str>;
    fn csv_row(&self) -> Vec<String>;
}

/// Text: one block per record. JSON: one object per line. CSV: header plus
/// one row per record.
pub fn emit<R: Record, W: Write>(out: &mut W, format: Format, records: &[R]) -> Result<()> {
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text())?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(R::csv_header())?;
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
