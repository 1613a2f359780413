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

// Shot-sampled swap tests: how far the estimated probability strays from
// the exact one at different shot counts.
//
//     cargo run --example sampled_shots

use qrelief::quantum::{run, Estimator, Mode, RunConfig};
use qrelief::sim::SimRng;
use qrelief::Dataset;

pub fn run_example() -> qrelief::Result<()> {
    let dataset = Dataset::paper_example();
    let exact = Estimator::new(&dataset, &RunConfig::new(Mode::Exact, 1), None)?
        .estimate(1, 0, 1, &mut SimRng::new(0))?
        .p1;
    println!("exact P(1) for (S0, S1): {exact}");
    for shots in [128u64, 1024, 8192] {
        let cfg = RunConfig { shots, ..RunConfig::new(Mode::Sampled, 1) };
        let estimates: Vec<f64> = (0..5)
            .map(|seed| Estimator::new(&dataset, &cfg, None)?.estimate(1, 0, 1, &mut SimRng::new(seed)).map(|s| s.p1))
            .collect::<qrelief::Result<_>>()?;
        let sigma = (exact * (1.0 - exact) / shots as f64).sqrt();
        println!("{shots:>5} shots: {estimates:.4?}  (σ = {sigma:.4})");
    }

    let cfg = RunConfig { seed: 2024, ..RunConfig::new(Mode::Sampled, 4) };
    let report = run(&dataset, &cfg, None)?;
    println!(
        "sampled run, seed {}: WT {:?}, selected {:?}, {} shots",
        report.config.seed, report.wt, report.selected_names, report.resources.total_shots
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
