use std::fmt::Display;
use std::io::{self, Stdout, Write};

use clap::ValueEnum;
use qgdf::{DimVector, IntPoly};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

/// One record per call: a JSON line, a text line, or a CSV row depending on
/// the format.
pub struct Out {
    format: Format,
    csv: csv::Writer<Stdout>,
    stdout: Stdout,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            csv: csv::Writer::from_writer(io::stdout()),
            stdout: io::stdout(),
        }
    }

    pub fn header(&mut self, columns: &[&str]) -> io::Result<()> {
        if self.format == Format::Csv {
            self.csv.write_record(columns)?;
        }
        Ok(())
    }

    pub fn emit(&mut self, json: &Value, text: impl Display, row: &[String]) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.stdout, "{}", json),
            Format::Text => writeln!(self.stdout, "{}", text),
            Format::Csv if row.is_empty() => Ok(()),
            Format::Csv => self.csv.write_record(row).map_err(io::Error::from),
        }
    }

    /// A CSV-only row; other formats carry the same data in the summary.
    pub fn row(&mut self, row: &[String]) -> io::Result<()> {
        if self.format == Format::Csv {
            self.csv.write_record(row)?;
        }
        Ok(())
    }

    /// A record that has no CSV row (summaries).
    pub fn summary(&mut self, json: &Value, text: impl Display) -> io::Result<()> {
        self.emit(json, text, &[])
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.csv.flush()?;
        self.stdout.flush()
    }
}

pub fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

pub fn poly(p: &IntPoly) -> Value {
    nums(p.coeffs())
}

pub fn dims(d: &DimVector) -> Value {
    nums(d.iter())
}

pub fn joined(d: &DimVector) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
