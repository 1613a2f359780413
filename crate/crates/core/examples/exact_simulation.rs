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

// Noise-free run of the four-sample example on the statevector simulator.
//
//     cargo run --example exact_simulation

use qrelief::quantum::{run, Mode, RunConfig};
use qrelief::Dataset;

pub fn run_example() -> qrelief::Result<()> {
    let dataset = Dataset::paper_example();
    let report = run(&dataset, &RunConfig::new(Mode::Exact, 4), None)?;
    for rec in &report.iterations {
        let sims: Vec<String> = rec
            .scores
            .iter()
            .map(|s| format!("{}: p1={:.6} sim={:.3}", s.sample, s.p1.unwrap_or(f64::NAN), s.value))
            .collect();
        println!("t={} u={} [{}] -> WT {:?}", rec.t, rec.u, sims.join(", "), rec.wt);
    }
    let r = &report.resources;
    println!(
        "selected {:?}; {} swap tests on {} qubits, {} gates simulated",
        report.selected_names, r.swap_tests, r.qubits_used, r.gates_applied
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
