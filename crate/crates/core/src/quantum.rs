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

//! Quantum Relief: swap-test similarities drive the Near-hit / Near-miss
//! search that updates the feature weights.

use rand::Rng;
use std::collections::BTreeSet;

use crate::circuits::{self, EncodedSample, Execution};
use crate::dataset::{diff, Class, Dataset, Sample};
use crate::error::{Error, Result};
use crate::io::ReplayTable;
pub use crate::report::Policy;
use crate::report::{ConfigEcho, IterationRecord, PairScore, ReportMode, Resources, RunReport};
use crate::sim::SimRng;

/// Scores closer than this are ties, resolved by dataset position.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Where the swap-test probability comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Read from the simulated statevector.
    Exact,
    /// Estimated from simulated shots.
    Sampled,
    /// Looked up in a table of recorded probabilities.
    Replay,
}

impl From<Mode> for ReportMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => ReportMode::Exact,
            Mode::Sampled => ReportMode::Sampled,
            Mode::Replay => ReportMode::Replay,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Number of iterations T.
    pub iterations: usize,
    /// Relevance threshold τ.
    pub tau: f64,
    pub mode: Mode,
    pub shots: u64,
    pub seed: u64,
    pub policy: Policy,
}

impl RunConfig {
    /// Round-robin over `iterations` with τ = 0.5 and 8192 shots.
    pub fn new(mode: Mode, iterations: usize) -> Self {
        RunConfig {
            iterations,
            tau: 0.5,
            mode,
            shots: 8192,
            seed: 0,
            policy: Policy::RoundRobin,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::config("iteration count must be at least 1"));
        }
        if self.mode == Mode::Sampled && self.shots == 0 {
            return Err(Error::config("sampled mode needs at least one shot"));
        }
        if !self.tau.is_finite() {
            return Err(Error::config("threshold must be finite"));
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            mode: self.mode.into(),
            policy: self.policy,
            iterations: self.iterations,
            tau: self.tau,
            shots: (self.mode == Mode::Sampled).then_some(self.shots),
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimilarityEstimate {
    /// Ancilla probability P(1).
    pub p1: f64,
    /// Estimate of |⟨u|v⟩|².
    pub similarity: f64,
    pub mode: Mode,
    pub shots: Option<u64>,
}

/// Converts an ancilla probability to a similarity: `(1 − 2·p1)·N²` in
/// exact mode, `|1 − 2·p1|·N²` for measured or recorded probabilities,
/// which can exceed 1/2 through noise.
pub fn similarity_from_p1(p1: f64, feature_count: usize, mode: Mode) -> f64 {
    let n2 = (feature_count * feature_count) as f64;
    match mode {
        Mode::Exact => (1.0 - 2.0 * p1) * n2,
        Mode::Sampled | Mode::Replay => (1.0 - 2.0 * p1).abs() * n2,
    }
}

/// Produces similarity estimates for pairs of samples of one dataset,
/// tallying the simulation resources it uses.
pub struct Estimator<'a> {
    dataset: &'a Dataset,
    mode: Mode,
    shots: u64,
    replay: Option<&'a ReplayTable>,
    encoded: Vec<EncodedSample>,
    resources: Resources,
}

impl<'a> Estimator<'a> {
    pub fn new(dataset: &'a Dataset, cfg: &RunConfig, replay: Option<&'a ReplayTable>) -> Result<Self> {
        let m = circuits::index_width(dataset.len());
        let n = circuits::index_width(dataset.feature_count());
        let encoded = match cfg.mode {
            Mode::Replay => Vec::new(),
            Mode::Exact | Mode::Sampled => dataset
                .samples()
                .iter()
                .enumerate()
                .map(|(j, s)| circuits::encode_sample(&s.as_reals(), j, m, n))
                .collect::<Result<_>>()?,
        };
        Ok(Estimator {
            dataset,
            mode: cfg.mode,
            shots: cfg.shots,
            replay,
            encoded,
            resources: Resources {
                // [sample m][feature n][flag][amp] twice, plus the ancilla
                qubits_per_swap_test: 2 * (m + n + 2) + 1,
                ..Resources::default()
            },
        })
    }

    /// Similarity of samples at positions `u` and `v` during iteration `t`.
    pub fn estimate(&mut self, t: usize, u: usize, v: usize, rng: &mut SimRng) -> Result<SimilarityEstimate> {
        if u == v {
            return Err(Error::config("similarity of a sample with itself"));
        }
        let n = self.dataset.feature_count();
        let p1 = match self.mode {
            Mode::Replay => {
                let (uid, vid) = (&self.dataset.sample(u).id, &self.dataset.sample(v).id);
                let table = self.replay.ok_or_else(|| Error::ReplayIncomplete {
                    iteration: t,
                    u: uid.clone(),
                    sample: vid.clone(),
                })?;
                table.get(t, uid, vid).ok_or_else(|| Error::ReplayIncomplete {
                    iteration: t,
                    u: uid.clone(),
                    sample: vid.clone(),
                })?
            }
            Mode::Exact | Mode::Sampled => {
                let execution = match self.mode {
                    Mode::Exact => Execution::Exact,
                    _ => Execution::Sampled { shots: self.shots },
                };
                let (eu, ev) = (&self.encoded[u], &self.encoded[v]);
                let varphi = circuits::swap_last_two(eu);
                let out = circuits::swap_test(&varphi, &ev.state, execution, rng)?;
                let r = &mut self.resources;
                r.gates_applied += (eu.gates_applied + 1 + ev.gates_applied + out.gates_applied) as u64;
                r.qubits_used = r.qubits_used.max(out.qubits);
                if let Some(c) = out.counts {
                    r.total_shots += c.shots();
                }
                out.p1
            }
        };
        self.resources.swap_tests += 1;
        Ok(SimilarityEstimate {
            p1,
            similarity: similarity_from_p1(p1, n, self.mode),
            mode: self.mode,
            shots: (self.mode == Mode::Sampled).then_some(self.shots),
        })
    }

    pub fn resources(&self) -> &Resources {
        &self.resources
    }
}

/// Finds Near-hit (best same-class score, excluding `u`) and Near-miss (best
/// other-class score) for the sample at position `u`. `scores` is indexed
/// by dataset position; `u`'s own entry is ignored. Larger is closer. Ties
/// within [`TIE_TOLERANCE`] go to the earlier dataset position.
pub fn find_near(u: usize, dataset: &Dataset, scores: &[f64]) -> Result<(usize, usize)> {
    let class = dataset.sample(u).class;
    let best = |want: Class| {
        let mut best: Option<(usize, f64)> = None;
        for (pos, s) in dataset.samples().iter().enumerate() {
            if pos == u || s.class != want {
                continue;
            }
            if best.is_none_or(|(_, b)| scores[pos] > b + TIE_TOLERANCE) {
                best = Some((pos, scores[pos]));
            }
        }
        best.map(|(pos, _)| pos)
    };
    let hit = best(class).ok_or_else(|| {
        Error::DegenerateDataset(format!(
            "sample '{}' has no other member of its class",
            dataset.sample(u).id
        ))
    })?;
    let miss = best(class.other())
        .ok_or_else(|| Error::DegenerateDataset(format!("class {:?} is empty", class.other())))?;
    Ok((hit, miss))
}

/// Per-feature relevance accumulator WT.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub wt: Vec<f64>,
    pub iterations_applied: usize,
}

impl WeightVector {
    pub fn zeros(n: usize) -> Self {
        WeightVector {
            wt: vec![0.0; n],
            iterations_applied: 0,
        }
    }

    /// `wt_i ← wt_i − diff(i, u, hit)² + diff(i, u, miss)²` for every feature.
    pub fn update(&mut self, u: &Sample, near_hit: &Sample, near_miss: &Sample) {
        for (i, w) in self.wt.iter_mut().enumerate() {
            let h = f64::from(diff(i, u, near_hit));
            let m = f64::from(diff(i, u, near_miss));
            *w += m * m - h * h;
        }
        self.iterations_applied += 1;
    }
}

pub fn update_weights(wt: &WeightVector, u: &Sample, near_hit: &Sample, near_miss: &Sample) -> WeightVector {
    let mut next = wt.clone();
    next.update(u, near_hit, near_miss);
    next
}

/// Divides by `iterations` and keeps features whose mean weight is `≥ tau`.
pub fn select_features(wt: &[f64], iterations: usize, tau: f64) -> (Vec<f64>, BTreeSet<usize>) {
    let t = iterations.max(1) as f64;
    let mean: Vec<f64> = wt.iter().map(|w| w / t).collect();
    let selected = mean
        .iter()
        .enumerate()
        .filter(|(_, &m)| m >= tau)
        .map(|(i, _)| i)
        .collect();
    (mean, selected)
}

/// Position of the sample visited in iteration `t` (1-based).
pub(crate) fn pick_sample(policy: Policy, t: usize, len: usize, rng: &mut SimRng) -> usize {
    match policy {
        Policy::RoundRobin => (t - 1) % len,
        Policy::Random => rng.gen_range(0..len),
    }
}

pub(crate) fn finish_report(
    dataset: &Dataset,
    config: ConfigEcho,
    iterations: Vec<IterationRecord>,
    weights: WeightVector,
    resources: Resources,
) -> RunReport {
    let (wt_mean, selected) = select_features(&weights.wt, config.iterations, config.tau);
    let names = dataset.feature_names();
    RunReport {
        config,
        feature_names: names.to_vec(),
        iterations,
        wt: weights.wt,
        wt_mean,
        selected_names: selected.iter().map(|&i| names[i].clone()).collect(),
        selected: selected.into_iter().collect(),
        resources,
    }
}

/// Runs the full quantum Relief loop and the final selection.
pub fn run(dataset: &Dataset, cfg: &RunConfig, replay: Option<&ReplayTable>) -> Result<RunReport> {
    cfg.validate()?;
    let mut rng = SimRng::new(cfg.seed);
    let mut estimator = Estimator::new(dataset, cfg, replay)?;
    let mut weights = WeightVector::zeros(dataset.feature_count());
    let mut records = Vec::with_capacity(cfg.iterations);

    for t in 1..=cfg.iterations {
        let u = pick_sample(cfg.policy, t, dataset.len(), &mut rng);
        let sample = dataset.sample(u);
        if dataset.class_size(sample.class) < 2 {
            return Err(Error::DegenerateDataset(format!(
                "sample '{}' is alone in its class",
                sample.id
            )));
        }

        let mut scores = vec![f64::NEG_INFINITY; dataset.len()];
        let mut pairs = Vec::with_capacity(dataset.len() - 1);
        for v in (0..dataset.len()).filter(|&v| v != u) {
            let est = estimator.estimate(t, u, v, &mut rng)?;
            scores[v] = est.similarity;
            pairs.push(PairScore {
                sample: dataset.sample(v).id.clone(),
                p1: Some(est.p1),
                value: est.similarity,
            });
        }

        let (hit, miss) = find_near(u, dataset, &scores)?;
        weights.update(sample, dataset.sample(hit), dataset.sample(miss));
        records.push(IterationRecord {
            t,
            u: sample.id.clone(),
            scores: pairs,
            near_hit: dataset.sample(hit).id.clone(),
            near_miss: dataset.sample(miss).id.clone(),
            wt: weights.wt.clone(),
        });
    }

    Ok(finish_report(
        dataset,
        cfg.echo(),
        records,
        weights,
        estimator.resources().clone(),
    ))
}
