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

// Replays the recorded hardware probabilities of the four-sample example
// and prints the similarity table, the weight trajectory and the selected
// features.
//
//     cargo run --example recorded_replay

use qrelief::io::{bundled_data_dir, load_dataset, load_replay};
use qrelief::quantum::{run, Mode, RunConfig};

pub fn run_example() -> qrelief::Result<()> {
    let dataset = load_dataset(bundled_data_dir().join("paper_example.csv"))?;
    let table = load_replay(bundled_data_dir().join("paper_table2.json"))?;
    let report = run(&dataset, &RunConfig::new(Mode::Replay, 4), Some(&table))?;

    for rec in &report.iterations {
        println!("t={} u={}", rec.t, rec.u);
        for s in &rec.scores {
            println!("    {:>3}  p1={:.8}  similarity={:.5}", s.sample, s.p1.unwrap_or(f64::NAN), s.value);
        }
        println!("    near-hit={} near-miss={} WT={:?}", rec.near_hit, rec.near_miss, rec.wt);
    }
    println!("mean WT {:?}, selected {:?}", report.wt_mean, report.selected_names);
    assert_eq!(report.selected_names, ["F0", "F1"]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
