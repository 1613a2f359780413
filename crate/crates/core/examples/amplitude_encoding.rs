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

// Encodes real-valued samples and checks that the overlap of the encoded
// states is their scaled dot product.
//
//     cargo run --example amplitude_encoding

use qrelief::circuits::{encode_sample, swap_last_two, SAMPLE_REGISTER};

pub fn run_example() -> qrelief::Result<()> {
    let u = [0.6, 0.8, 0.0];
    let v = [0.5, 1.0, 0.3];
    let eu = encode_sample(&u, 0, 1, 2)?;
    let ev = encode_sample(&v, 1, 1, 2)?;
    println!("encoding of {u:?} used {} gates:", eu.gates_applied);
    for (idx, a) in eu.state.amplitudes().iter().enumerate() {
        if a.norm() > 1e-12 {
            println!("  |{idx:05b}⟩  {:+.6}", a.re);
        }
    }

    let (a, _) = swap_last_two(&eu).drop_register(SAMPLE_REGISTER)?;
    let (b, _) = ev.state.drop_register(SAMPLE_REGISTER)?;
    let overlap = a.overlap(&b)?;
    let dot: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    println!("overlap {:.12}, dot/N {:.12}", overlap.re, dot / u.len() as f64);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qrelief::Result<()> {
    run_example()
}
