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

// Builds the threshold comparator and prints its truth table, then uses
// it to prepare a uniform superposition over five of eight basis states.
//
//     cargo run --example comparator

use qrelief::circuits::{build_comparator, prepare_uniform, Execution};
use qrelief::sim::{QuantumState, SimRng};

pub fn run_example() -> qrelief::Result<()> {
    let (n, threshold) = (3, 5);
    let cmp = build_comparator(n, threshold)?;
    println!("comparator i >= {threshold} on {n} qubits: {} gates", cmp.gates().len());
    for i in 0..(1usize << n) {
        let mut s = QuantumState::from_basis_index(cmp.layout(), i << (n + 1))?;
        s.apply_all(cmp.gates())?;
        println!("  i={i}  result={}", s.probability(cmp.result_qubit(), true)?);
    }

    let prep = prepare_uniform(n, threshold, Execution::Exact, &mut SimRng::new(0))?;
    println!("exact preparation, success probability {}", prep.success_probability);
    for (i, a) in prep.state.amplitudes().iter().enumerate() {
        println!("  |{i}⟩  {:.6}", a.re);
    }
    let sampled = prepare_uniform(n, threshold, Execution::Sampled { shots: 1 }, &mut SimRng::new(9))?;
    println!("repeat-until-success preparation took {} attempt(s)", sampled.attempts);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
