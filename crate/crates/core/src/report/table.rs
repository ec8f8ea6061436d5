use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};

/// Rectangular table of swept parameters and computed values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
    /// Column name to the formula that produced it.
    provenance: BTreeMap<String, String>,
}

/// Round-trip exact: 17 significant digits.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

impl SweepTable {
    pub fn new(columns: Vec<String>) -> Self {
        SweepTable {
            columns,
            rows: Vec::new(),
            provenance: BTreeMap::new(),
        }
    }

    pub fn with_provenance(mut self, column: &str, formula: &str) -> Self {
        self.provenance
            .insert(column.to_string(), formula.to_string());
        self
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::domain(
                "SweepTable::push",
                format!(
                    "row has {} entries, table has {} columns",
                    row.len(),
                    self.columns.len()
                ),
            ));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn provenance(&self) -> &BTreeMap<String, String> {
        &self.provenance
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| format_f64(*v)))?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable table")
    }
}
