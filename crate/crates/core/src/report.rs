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

//! Run reports shared by the quantum and classical pipelines.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Which pipeline and execution mode produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportMode {
    Exact,
    Sampled,
    Replay,
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Policy {
    /// Visit samples in dataset order, cyclically.
    RoundRobin,
    /// Draw `u` uniformly from the seeded generator.
    Random,
}

/// Everything needed to rerun the pipeline bit for bit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub mode: ReportMode,
    pub policy: Policy,
    pub iterations: usize,
    pub tau: f64,
    pub shots: Option<u64>,
    pub seed: u64,
}

/// Score of `u` against one other sample. For quantum runs `value` is the
/// similarity estimate and `p1` the ancilla probability; for classical
/// runs `value` is the squared Euclidean distance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairScore {
    pub sample: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p1: Option<f64>,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    /// 1-based iteration number.
    pub t: usize,
    pub u: String,
    pub scores: Vec<PairScore>,
    pub near_hit: String,
    pub near_miss: String,
    /// Weight vector after this iteration's update.
    pub wt: Vec<f64>,
}

impl IterationRecord {
    pub fn score(&self, sample: &str) -> Option<&PairScore> {
        self.scores.iter().find(|s| s.sample == sample)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Resources {
    /// Width of one swap-test circuit: two encoded samples plus the ancilla.
    pub qubits_per_swap_test: usize,
    /// Widest circuit actually simulated (0 when nothing was simulated).
    pub qubits_used: usize,
    pub gates_applied: u64,
    pub swap_tests: u64,
    pub total_shots: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: ConfigEcho,
    pub feature_names: Vec<String>,
    pub iterations: Vec<IterationRecord>,
    /// Final weight vector WT.
    pub wt: Vec<f64>,
    /// WT / T.
    pub wt_mean: Vec<f64>,
    pub selected: Vec<usize>,
    pub selected_names: Vec<String>,
    pub resources: Resources,
}

impl RunReport {
    pub fn selected_set(&self) -> BTreeSet<usize> {
        self.selected.iter().copied().collect()
    }

    pub fn trajectory(&self) -> Vec<Vec<f64>> {
        self.iterations.iter().map(|r| r.wt.clone()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            path: "<report>".into(),
            row: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string(),
        })
    }
}

/// Agreement between a quantum and a classical report on the same data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub selected_equal: bool,
    pub quantum_selected: Vec<String>,
    pub classical_selected: Vec<String>,
    /// quantum wt_mean − classical wt_mean, per feature.
    pub wt_mean_delta: Vec<f64>,
}

impl Comparison {
    pub fn new(quantum: &RunReport, classical: &RunReport) -> Self {
        Comparison {
            selected_equal: quantum.selected == classical.selected,
            quantum_selected: quantum.selected_names.clone(),
            classical_selected: classical.selected_names.clone(),
            wt_mean_delta: quantum
                .wt_mean
                .iter()
                .zip(&classical.wt_mean)
                .map(|(q, c)| q - c)
                .collect(),
        }
    }
}
