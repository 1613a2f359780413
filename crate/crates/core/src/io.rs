// Copyright 2026 The qrelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! File formats: dataset CSV, replay tables and report documents.
//!
//! Dataset CSV has the header `id,class,<feature names…>` and one row per
//! sample with literal `0`/`1` feature cells. Class labels map to A and B
//! in order of first appearance.
//!
//! Replay tables are JSON:
//!
//! ```json
//! { "records": [ { "iteration": 1, "u": "S0", "sample": "S1", "p1": 0.49023438 } ] }
//! ```

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::dataset::{Class, Dataset, Sample};
use crate::error::{Error, Result};
use crate::report::RunReport;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_error(path: &Path, row: Option<usize>, column: Option<usize>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        row,
        column,
        message: message.into(),
    }
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    parse_dataset(&read(path)?, path)
}

/// Parses dataset CSV text. `origin` only labels error messages. Rows are
/// counted from 1 at the header; columns from 1.
pub fn parse_dataset(text: &str, origin: &Path) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let csv_err = |e: csv::Error| {
        let row = e.position().map(|p| p.line() as usize);
        parse_error(origin, row, None, e.to_string())
    };

    let header = reader.headers().map_err(csv_err)?.clone();
    if header.len() < 3 {
        return Err(parse_error(origin, Some(1), None, "header needs id, class and at least one feature"));
    }
    for (col, want) in [(0, "id"), (1, "class")] {
        if !header[col].eq_ignore_ascii_case(want) {
            return Err(parse_error(
                origin,
                Some(1),
                Some(col + 1),
                format!("expected column '{want}', found '{}'", &header[col]),
            ));
        }
    }
    let feature_names: Vec<String> = header.iter().skip(2).map(str::to_string).collect();

    let mut labels: Vec<String> = Vec::new();
    let mut samples = Vec::new();
    let mut seen = BTreeMap::new();
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(csv_err)?;
        let row = record.position().map_or(k + 2, |p| p.line() as usize);
        if record.len() != header.len() {
            return Err(parse_error(
                origin,
                Some(row),
                None,
                format!("{} cells, header has {}", record.len(), header.len()),
            ));
        }
        let id = record[0].to_string();
        if id.is_empty() {
            return Err(parse_error(origin, Some(row), Some(1), "empty sample id"));
        }
        if let Some(first) = seen.insert(id.clone(), row) {
            return Err(parse_error(
                origin,
                Some(row),
                Some(1),
                format!("duplicate id '{id}' (first seen at row {first})"),
            ));
        }
        let label = &record[1];
        let class = match labels.iter().position(|l| l == label) {
            Some(0) => Class::A,
            Some(_) => Class::B,
            None if labels.len() < 2 => {
                labels.push(label.to_string());
                if labels.len() == 1 { Class::A } else { Class::B }
            }
            None => {
                return Err(parse_error(
                    origin,
                    Some(row),
                    Some(2),
                    format!("third class label '{label}' (already have '{}' and '{}')", labels[0], labels[1]),
                ))
            }
        };
        let features = record
            .iter()
            .enumerate()
            .skip(2)
            .map(|(col, cell)| match cell {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(parse_error(
                    origin,
                    Some(row),
                    Some(col + 1),
                    format!("feature cell '{other}' is not 0 or 1"),
                )),
            })
            .collect::<Result<Vec<u8>>>()?;
        samples.push(Sample::new(id, features, class));
    }

    if labels.len() < 2 {
        return Err(Error::DegenerateDataset(format!(
            "{} has {} class label(s); two are required",
            origin.display(),
            labels.len()
        )));
    }
    let class_names = [labels[0].clone(), labels[1].clone()];
    Dataset::new(feature_names, class_names, samples)
}

/// Renders a dataset back into the CSV format.
pub fn dataset_to_csv(dataset: &Dataset) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["id".to_string(), "class".to_string()];
    header.extend(dataset.feature_names().iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for s in dataset.samples() {
        let mut row = vec![s.id.clone(), dataset.class_name(s.class).to_string()];
        row.extend(s.features.iter().map(|f| f.to_string()));
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Recorded swap-test probabilities keyed by (iteration, u, other sample).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReplayTable {
    records: BTreeMap<(usize, String, String), f64>,
}

#[derive(Serialize, Deserialize)]
struct ReplayRecord {
    iteration: usize,
    u: String,
    sample: String,
    p1: f64,
}

#[derive(Serialize, Deserialize)]
struct ReplayDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    records: Vec<ReplayRecord>,
}

impl ReplayTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a record; fails on a duplicate key or a probability outside
    /// `[0, 1]`.
    pub fn insert(&mut self, iteration: usize, u: &str, sample: &str, p1: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&p1) {
            return Err(Error::Validation(format!("p1 = {p1} is not a probability")));
        }
        let key = (iteration, u.to_string(), sample.to_string());
        if self.records.contains_key(&key) {
            return Err(Error::Validation(format!(
                "duplicate replay record ({iteration}, {u}, {sample})"
            )));
        }
        self.records.insert(key, p1);
        Ok(())
    }

    pub fn get(&self, iteration: usize, u: &str, sample: &str) -> Option<f64> {
        self.records
            .get(&(iteration, u.to_string(), sample.to_string()))
            .copied()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str, &str, f64)> {
        self.records
            .iter()
            .map(|((t, u, s), p)| (*t, u.as_str(), s.as_str(), *p))
    }

    pub fn to_json(&self) -> String {
        let doc = ReplayDocument {
            description: None,
            records: self
                .iter()
                .map(|(iteration, u, sample, p1)| ReplayRecord {
                    iteration,
                    u: u.into(),
                    sample: sample.into(),
                    p1,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("replay table serializes")
    }

    /// Parses a replay document. Blank input gives an empty table.
    pub fn from_json(text: &str, origin: &Path) -> Result<Self> {
        let mut table = ReplayTable::new();
        if text.trim().is_empty() {
            return Ok(table);
        }
        let doc: ReplayDocument = serde_json::from_str(text)
            .map_err(|e| parse_error(origin, Some(e.line()), Some(e.column()), e.to_string()))?;
        for (k, r) in doc.records.into_iter().enumerate() {
            table
                .insert(r.iteration, &r.u, &r.sample, r.p1)
                .map_err(|e| parse_error(origin, None, None, format!("record {}: {e}", k + 1)))?;
        }
        Ok(table)
    }
}

pub fn load_replay(path: impl AsRef<Path>) -> Result<ReplayTable> {
    let path = path.as_ref();
    ReplayTable::from_json(&read(path)?, path)
}

pub fn save_report(report: &RunReport, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &(report.to_json() + "\n"))
}

pub fn load_report(path: impl AsRef<Path>) -> Result<RunReport> {
    let path = path.as_ref();
    RunReport::from_json(&read(path)?).map_err(|e| match e {
        Error::Parse { row, column, message, .. } => Error::Parse {
            path: path.to_path_buf(),
            row,
            column,
            message,
        },
        other => other,
    })
}

/// Directory holding the bundled example dataset and replay table.
pub fn bundled_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Dataset> {
        parse_dataset(text, Path::new("test.csv"))
    }

    #[test]
    fn bundled_dataset() {
        let d = load_dataset(bundled_data_dir().join("paper_example.csv")).unwrap();
        assert_eq!(d, Dataset::paper_example());
        assert_eq!((d.len(), d.feature_count()), (4, 4));
    }

    #[test]
    fn bad_cell_is_located() {
        let err = parse("id,class,a,b\nx,P,0,1\ny,Q,2,0\n").unwrap_err();
        match err {
            Error::Parse { row, column, .. } => assert_eq!((row, column), (Some(3), Some(3))),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn class_problems() {
        assert!(matches!(
            parse("id,class,a\nx,P,0\ny,P,1\n"),
            Err(Error::DegenerateDataset(_))
        ));
        assert!(matches!(
            parse("id,class,a\nx,P,0\ny,Q,1\nz,R,1\n"),
            Err(Error::Parse { row: Some(4), column: Some(2), .. })
        ));
    }

    #[test]
    fn duplicate_id_and_ragged_rows() {
        assert!(matches!(
            parse("id,class,a\nx,P,0\nx,Q,1\n"),
            Err(Error::Parse { row: Some(3), column: Some(1), .. })
        ));
        assert!(parse("id,class,a\nx,P,0,1\ny,Q,1\n").is_err());
        assert!(parse("name,class,a\nx,P,0\ny,Q,1\n").is_err());
    }

    #[test]
    fn labels_map_by_first_occurrence() {
        let d = parse("id,class,a\nx,pos,0\ny,neg,1\nz,pos,1\n").unwrap();
        assert_eq!(d.class_names(), &["pos".to_string(), "neg".to_string()]);
        assert_eq!(d.sample(2).class, Class::A);
    }

    #[test]
    fn bundled_replay_table() {
        let t = load_replay(bundled_data_dir().join("paper_table2.json")).unwrap();
        assert_eq!(t.len(), 12);
        assert_eq!(t.get(1, "S0", "S1"), Some(0.49023438));
        assert_eq!(t.get(4, "S3", "S2"), Some(0.50195312));
        assert_eq!(t.get(5, "S0", "S1"), None);
    }

    #[test]
    fn replay_validation() {
        let p = Path::new("r.json");
        assert!(ReplayTable::from_json("", p).unwrap().is_empty());
        let dup = r#"{"records":[{"iteration":1,"u":"a","sample":"b","p1":0.5},{"iteration":1,"u":"a","sample":"b","p1":0.4}]}"#;
        assert!(matches!(ReplayTable::from_json(dup, p), Err(Error::Parse { .. })));
        let range = r#"{"records":[{"iteration":1,"u":"a","sample":"b","p1":1.5}]}"#;
        assert!(matches!(ReplayTable::from_json(range, p), Err(Error::Parse { .. })));
    }
}
