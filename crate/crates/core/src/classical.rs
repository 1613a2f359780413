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

//! Classical Relief with squared Euclidean nearness.

use crate::dataset::{diff, Dataset, Sample};
use crate::error::{Error, Result};
use crate::quantum::{finish_report, pick_sample, WeightVector};
use crate::report::{ConfigEcho, IterationRecord, PairScore, Policy, ReportMode, Resources, RunReport};
use crate::sim::SimRng;

/// Squared Euclidean distance between two binary samples, which is their
/// Hamming distance.
pub fn squared_distance(u: &Sample, v: &Sample) -> u32 {
    (0..u.features.len()).map(|i| u32::from(diff(i, u, v))).sum()
}

/// Pairwise squared distances, indexed by dataset position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    len: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub fn new(dataset: &Dataset) -> Self {
        let s = dataset.samples();
        let len = s.len();
        let d = (0..len * len)
            .map(|k| squared_distance(&s[k / len], &s[k % len]))
            .collect();
        DistanceTable { len, d }
    }

    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.d[a * self.len + b]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// The pool member closest to `u`; ties go to the earliest pool entry. The
/// pool should not contain `u`.
pub fn nearest<'a>(u: &Sample, pool: &[&'a Sample]) -> Result<&'a Sample> {
    let mut best: Option<(&Sample, u32)> = None;
    for &s in pool {
        let d = squared_distance(u, s);
        if best.is_none_or(|(_, b)| d < b) {
            best = Some((s, d));
        }
    }
    best.map(|(s, _)| s)
        .ok_or_else(|| Error::DegenerateDataset(format!("no candidates near '{}'", u.id)))
}

/// Classical Relief over `iterations` visits, then thresholding at `tau`.
pub fn relief_run(dataset: &Dataset, iterations: usize, tau: f64, policy: Policy, seed: u64) -> Result<RunReport> {
    if iterations == 0 {
        return Err(Error::config("iteration count must be at least 1"));
    }
    if !tau.is_finite() {
        return Err(Error::config("threshold must be finite"));
    }
    let table = DistanceTable::new(dataset);
    let mut rng = SimRng::new(seed);
    let mut weights = WeightVector::zeros(dataset.feature_count());
    let mut records = Vec::with_capacity(iterations);

    for t in 1..=iterations {
        let u = pick_sample(policy, t, dataset.len(), &mut rng);
        let sample = dataset.sample(u);
        let pool = |same: bool| -> Vec<&Sample> {
            dataset
                .samples()
                .iter()
                .enumerate()
                .filter(|&(p, s)| p != u && (s.class == sample.class) == same)
                .map(|(_, s)| s)
                .collect()
        };
        let hit = nearest(sample, &pool(true))?;
        let miss = nearest(sample, &pool(false))?;
        weights.update(sample, hit, miss);
        records.push(IterationRecord {
            t,
            u: sample.id.clone(),
            scores: (0..dataset.len())
                .filter(|&v| v != u)
                .map(|v| PairScore {
                    sample: dataset.sample(v).id.clone(),
                    p1: None,
                    value: f64::from(table.get(u, v)),
                })
                .collect(),
            near_hit: hit.id.clone(),
            near_miss: miss.id.clone(),
            wt: weights.wt.clone(),
        });
    }

    let config = ConfigEcho {
        mode: ReportMode::Classical,
        policy,
        iterations,
        tau,
        shots: None,
        seed,
    };
    Ok(finish_report(dataset, config, records, weights, Resources::default()))
}
