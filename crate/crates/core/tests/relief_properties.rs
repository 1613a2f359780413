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

mod common;

use common::*;
use proptest::prelude::*;
use qrelief::classical::{relief_run, squared_distance};
use qrelief::dataset::diff;
use qrelief::io::{bundled_data_dir, load_replay};
use qrelief::quantum::{find_near, run, select_features, Estimator, Mode, Policy, RunConfig};
use qrelief::sim::SimRng;
use qrelief::Dataset;
use rand::SeedableRng;

fn dataset_from(seed: u64, samples: usize, features: usize) -> Dataset {
    random_dataset(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), samples, features)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exact_similarity_is_squared_dot_product(seed in any::<u64>(), m in 4..=8usize, n in 1..=8usize) {
        let d = dataset_from(seed, m, n);
        let cfg = RunConfig::new(Mode::Exact, 1);
        let mut est = Estimator::new(&d, &cfg, None).unwrap();
        let mut rng = SimRng::new(0);
        for u in 0..m {
            for v in (0..m).filter(|&v| v != u) {
                let s = est.estimate(1, u, v, &mut rng).unwrap();
                let expect = f64::from(dot(d.sample(u), d.sample(v)).pow(2));
                prop_assert!((s.similarity - expect).abs() < 1e-9, "{} vs {expect}", s.similarity);
                prop_assert!(s.similarity >= -1e-9 && (0.0..=0.5 + 1e-12).contains(&s.p1));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weights_stay_bounded(seed in any::<u64>(), m in 4..=8usize, n in 1..=8usize, t in 1..=12usize) {
        let d = dataset_from(seed, m, n);
        let report = run(&d, &RunConfig::new(Mode::Exact, t), None).unwrap();
        for (k, wt) in report.trajectory().iter().enumerate() {
            prop_assert!(wt.iter().all(|w| w.abs() <= (k + 1) as f64));
        }
        prop_assert!(report.wt_mean.iter().all(|w| (-1.0..=1.0).contains(w)));
        let classical = relief_run(&d, t, 0.5, Policy::RoundRobin, 0).unwrap();
        for (k, wt) in classical.trajectory().iter().enumerate() {
            prop_assert!(wt.iter().all(|w| w.abs() <= (k + 1) as f64));
        }
    }

    #[test]
    fn argmax_ignores_increasing_transforms(
        seed in any::<u64>(),
        raw in prop::collection::vec(0..=64u32, 6),
        u in 0..6usize,
    ) {
        let d = dataset_from(seed, 6, 3);
        let scores: Vec<f64> = raw.iter().map(|&x| f64::from(x)).collect();
        let base = find_near(u, &d, &scores).unwrap();
        for f in [|x: f64| 3.0 * x + 1.0, |x: f64| x.powi(3), |x: f64| (x / 8.0).exp(), |x: f64| x.sqrt()] {
            let mapped: Vec<f64> = scores.iter().map(|&x| f(x)).collect();
            prop_assert_eq!(find_near(u, &d, &mapped).unwrap(), base);
        }
    }

    #[test]
    fn raising_tau_never_adds_features(
        wt in prop::collection::vec(-10.0..10.0f64, 1..8),
        t in 1..10usize,
        lo in -1.5..1.5f64,
        step in 0.0..1.0f64,
    ) {
        let (_, low) = select_features(&wt, t, lo);
        let (_, high) = select_features(&wt, t, lo + step);
        prop_assert!(high.is_subset(&low));
    }

    #[test]
    fn hamming_equals_squared_euclidean(seed in any::<u64>(), n in 1..=16usize) {
        let d = dataset_from(seed, 4, n);
        for u in d.samples() {
            for v in d.samples() {
                let euclid: f64 = u.as_reals().iter().zip(v.as_reals()).map(|(a, b)| (a - b).powi(2)).sum();
                let diffs: u32 = (0..n).map(|i| u32::from(diff(i, u, v)).pow(2)).sum();
                prop_assert_eq!(f64::from(squared_distance(u, v)), euclid);
                prop_assert_eq!(squared_distance(u, v), diffs);
            }
        }
    }
}

#[test]
fn replay_is_deterministic() {
    let d = Dataset::paper_example();
    let table = load_replay(bundled_data_dir().join("paper_table2.json")).unwrap();
    let cfg = RunConfig::new(Mode::Replay, 4);
    let a = run(&d, &cfg, Some(&table)).unwrap();
    let b = run(&d, &cfg, Some(&table)).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.resources.gates_applied, 0);
    assert_eq!(a.resources.qubits_per_swap_test, 13);
}

#[test]
fn replay_beyond_table_is_incomplete() {
    let d = Dataset::paper_example();
    let table = load_replay(bundled_data_dir().join("paper_table2.json")).unwrap();
    let err = run(&d, &RunConfig::new(Mode::Replay, 5), Some(&table)).unwrap_err();
    assert!(matches!(err, qrelief::Error::ReplayIncomplete { iteration: 5, .. }));
}

/// Over 30 seeds of 8192 shots, the mean observed p1 of every ordered pair
/// stays within 3σ of the exact value.
#[test]
fn sampled_mode_tracks_exact_probabilities() {
    let d = Dataset::paper_example();
    let mut exact = Estimator::new(&d, &RunConfig::new(Mode::Exact, 1), None).unwrap();
    let sampled_cfg = RunConfig::new(Mode::Sampled, 1);
    for u in 0..4 {
        for v in (0..4).filter(|&v| v != u) {
            let p = exact.estimate(1, u, v, &mut SimRng::new(0)).unwrap().p1;
            let mean = (0..30u64)
                .map(|seed| {
                    let mut est = Estimator::new(&d, &sampled_cfg, None).unwrap();
                    est.estimate(1, u, v, &mut SimRng::new(seed)).unwrap().p1
                })
                .sum::<f64>()
                / 30.0;
            let bound = 3.0 * (p * (1.0 - p) / 8192.0).sqrt();
            assert!((mean - p).abs() <= bound, "pair ({u},{v}): {mean} vs {p}");
        }
    }
}

#[test]
fn classical_random_policy_depends_on_seed_only() {
    let d = dataset_from(3, 8, 5);
    let a = relief_run(&d, 10, 0.2, Policy::Random, 42).unwrap();
    let b = relief_run(&d, 10, 0.2, Policy::Random, 42).unwrap();
    assert_eq!(a, b);
}
