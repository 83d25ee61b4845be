use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

pub enum Status {
    Ok,
    Failed,
    Inconclusive(String),
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub table: Option<Table>,
    pub status: Status,
}

impl Report {
    pub fn new(value: &impl Serialize, text: impl Into<String>) -> Result<Self> {
        Ok(Self {
            json: serde_json::to_value(value)?,
            text: text.into(),
            table: None,
            status: Status::Ok,
        })
    }

    pub fn with_table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.table = Some(Table { header, rows });
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    /// Writes the report; `Err` only for a format the command cannot produce.
    pub fn emit(&self, format: Format, out: &mut impl Write) -> Result<std::result::Result<(), String>> {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json)?)?,
            Format::Text => {
                let text = self.text.trim_end();
                if !text.is_empty() {
                    writeln!(out, "{text}")?;
                }
            }
            Format::Csv => {
                let Some(t) = &self.table else {
                    return Ok(Err("this command has no CSV form; use --format json or text".into()));
                };
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&t.header)?;
                for r in &t.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
        }
        Ok(Ok(()))
    }
}
