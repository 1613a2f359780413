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

// Classical Relief on the example dataset, side by side with the exact
// quantum pipeline.
//
//     cargo run --example classical_baseline

use qrelief::classical::{relief_run, DistanceTable};
use qrelief::quantum::{run, Mode, Policy, RunConfig};
use qrelief::report::Comparison;
use qrelief::Dataset;

pub fn run_example() -> qrelief::Result<()> {
    let dataset = Dataset::paper_example();
    let table = DistanceTable::new(&dataset);
    println!("squared distances:");
    for a in 0..table.len() {
        let row: Vec<u32> = (0..table.len()).map(|b| table.get(a, b)).collect();
        println!("  {} {row:?}", dataset.sample(a).id);
    }

    let classical = relief_run(&dataset, 4, 0.5, Policy::RoundRobin, 0)?;
    let quantum = run(&dataset, &RunConfig::new(Mode::Exact, 4), None)?;
    println!("classical WT trajectory {:?}", classical.trajectory());
    println!("quantum   WT trajectory {:?}", quantum.trajectory());
    let cmp = Comparison::new(&quantum, &classical);
    println!(
        "selected equal: {} ({:?} vs {:?}); wt_mean delta {:?}",
        cmp.selected_equal, cmp.quantum_selected, cmp.classical_selected, cmp.wt_mean_delta
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
