use serde_json::Value;

use crate::{CliError, Format};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// One command result in all three renderings.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub plain: String,
    pub json: Value,
    /// Tabular results; other results render as `key,value` CSV.
    pub table: Option<Table>,
}

impl Output {
    pub fn new(plain: String, json: Value) -> Self {
        Output { plain, json, table: None }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Plain => {
                let mut s = self.plain.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Precondition(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.csv().map_err(|e| CliError::Precondition(e.to_string())),
        }
    }

    fn csv(&self) -> Result<String, Box<dyn std::error::Error>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some(t) => {
                w.write_record(&t.header)?;
                for row in &t.rows {
                    w.write_record(row)?;
                }
            }
            None => {
                w.write_record(["key", "value"])?;
                if let Value::Object(map) = &self.json {
                    for (k, v) in map {
                        let v = match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        w.write_record([k.as_str(), v.as_str()])?;
                    }
                }
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}
