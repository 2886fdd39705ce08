//! Experiment reports and their CSV/JSON encodings.
//!
//! JSON schema (version [`SCHEMA_VERSION`]):
//!
//! ```text
//! {
//!   "schema_version": 1,
//!   "experiment": "<id>",
//!   "params":  { "<name>": <cell>, ... },
//!   "columns": [ { "name": "<name>", "role": "param" | "asserted" | "observed" }, ... ],
//!   "records": [ [<cell>, ...], ... ],        // one row per trial, aligned with columns
//!   "summary": { "<name>": <cell>, ... },
//!   "violations": [ "<message>", ... ],       // failed asserted invariants
//!   "flags": [ "<message>", ... ]             // clamps, ties and other notes
//! }
//! ```
//!
//! A cell is `null`, a boolean, an integer, a float or a string.
//!
//! CSV: a header of column names, one row per record, and, when there is
//! at least one record, a footer row whose first cell is `summary` and
//! whose other cells hold the column mean (numbers) or frequency of `true`
//! (booleans). Non-numeric columns are left empty in the footer.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn as_number(&self) -> Option<f64> {
        match self {
            Cell::Int(i) => Some(*i as f64),
            Cell::Float(f) => Some(*f),
            Cell::Bool(b) => Some(f64::from(u8::from(*b))),
            _ => None,
        }
    }

    /// Text form used in CSV output.
    pub fn render(&self) -> String {
        match self {
            Cell::Null => String::new(),
            Cell::Bool(b) => b.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(f) => f.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

/// Non-finite floats become `Null` so the JSON form round-trips.
impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        if v.is_finite() {
            Cell::Float(v)
        } else {
            Cell::Null
        }
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Identifies the trial (index, size, seed).
    Param,
    /// Backed by a deterministic guarantee; a failure is a violation.
    Asserted,
    /// An empirical quantity reported as is.
    Observed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub experiment: String,
    pub params: BTreeMap<String, Cell>,
    pub columns: Vec<Column>,
    pub records: Vec<Vec<Cell>>,
    pub summary: BTreeMap<String, Cell>,
    pub violations: Vec<String>,
    pub flags: Vec<String>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, columns: &[(&str, Role)]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            params: BTreeMap::new(),
            columns: columns
                .iter()
                .map(|&(name, role)| Column {
                    name: name.to_string(),
                    role,
                })
                .collect(),
            records: Vec::new(),
            summary: BTreeMap::new(),
            violations: Vec::new(),
            flags: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, value: impl Into<Cell>) {
        self.params.insert(name.to_string(), value.into());
    }

    pub fn summarize(&mut self, name: &str, value: impl Into<Cell>) {
        self.summary.insert(name.to_string(), value.into());
    }

    pub fn flag(&mut self, message: impl Into<String>) {
        self.flags.push(message.into());
    }

    /// Appends a row. Asserted cells holding `false` are recorded as
    /// violations.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        for (col, cell) in self.columns.iter().zip(&row) {
            if col.role == Role::Asserted && *cell == Cell::Bool(false) {
                self.violations.push(format!(
                    "record {}: {} failed",
                    self.records.len(),
                    col.name
                ));
            }
        }
        self.records.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Cells of one column, in record order.
    pub fn column(&self, name: &str) -> Vec<&Cell> {
        let i = self.column_index(name).expect("known column");
        self.records.iter().map(|r| &r[i]).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn footer(&self) -> Vec<String> {
        (0..self.columns.len())
            .map(|i| {
                if i == 0 {
                    return "summary".to_string();
                }
                let values: Option<Vec<f64>> =
                    self.records.iter().map(|r| r[i].as_number()).collect();
                match values {
                    Some(v) if !v.is_empty() => {
                        (v.iter().sum::<f64>() / v.len() as f64).to_string()
                    }
                    _ => String::new(),
                }
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.columns.iter().map(|c| c.name.as_str()))?;
        for row in &self.records {
            w.write_record(row.iter().map(Cell::render))?;
        }
        if !self.records.is_empty() {
            w.write_record(self.footer())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8")
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Mean of the numeric cells, or `None` when there are none.
pub fn mean(cells: &[&Cell]) -> Option<f64> {
    let v: Vec<f64> = cells.iter().filter_map(|c| c.as_number()).collect();
    (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
}

/// Fraction of `true` among boolean cells, or `None` when there are none.
pub fn frequency(cells: &[&Cell]) -> Option<f64> {
    let v: Vec<bool> = cells
        .iter()
        .filter_map(|c| match c {
            Cell::Bool(b) => Some(*b),
            _ => None,
        })
        .collect();
    (!v.is_empty()).then(|| v.iter().filter(|&&b| b).count() as f64 / v.len() as f64)
}

pub fn min_max(cells: &[&Cell]) -> Option<(f64, f64)> {
    let v: Vec<f64> = cells.iter().filter_map(|c| c.as_number()).collect();
    let lo = v.iter().copied().reduce(f64::min)?;
    let hi = v.iter().copied().reduce(f64::max)?;
    Some((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ExperimentReport {
        let mut r = ExperimentReport::new(
            "demo",
            &[
                ("trial", Role::Param),
                ("ok", Role::Asserted),
                ("x", Role::Observed),
            ],
        );
        r.param("n", 4usize);
        r.param("p", 0.25);
        r.push(vec![0usize.into(), true.into(), 1.5.into()]);
        r.push(vec![1usize.into(), true.into(), Cell::Null]);
        r.summarize("mean_x", 1.5);
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = ExperimentReport::from_json_str(&r.to_json_string()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn floats_with_integral_values_stay_floats() {
        let mut r = sample();
        r.summarize("whole", 3.0);
        let back = ExperimentReport::from_json_str(&r.to_json_string()).unwrap();
        assert_eq!(back.summary["whole"], Cell::Float(3.0));
    }

    #[test]
    fn csv_shape() {
        let r = sample();
        let csv = r.to_csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 2 + 1);
        assert_eq!(lines[0], "trial,ok,x");
        assert_eq!(lines[3], "summary,1,");
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = ExperimentReport::new("demo", &[("trial", Role::Param)]);
        assert_eq!(r.to_csv_string(), "trial\n");
    }

    #[test]
    fn asserted_false_is_a_violation() {
        let mut r = sample();
        r.push(vec![2usize.into(), false.into(), 0.5.into()]);
        assert_eq!(r.violations, vec!["record 2: ok failed".to_string()]);
    }

    #[test]
    fn aggregates() {
        let r = sample();
        assert_eq!(frequency(&r.column("ok")), Some(1.0));
        assert_eq!(mean(&r.column("x")), Some(1.5));
        assert_eq!(min_max(&r.column("trial")), Some((0.0, 1.0)));
    }
}
