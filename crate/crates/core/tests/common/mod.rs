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

//! Independent reference computations used by the integration tests. None
//! of these go through the gate simulator.

#![allow(dead_code)]

use num_complex::Complex64;
use qrelief::sim::{QuantumState, Register};
use qrelief::{Class, Dataset, Sample};
use rand::Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Amplitudes of an encoded sample written down directly from
/// `(1/√N)|j⟩ Σ_i |i⟩|1⟩(√(1−v_i²)|0⟩ + v_i|1⟩)` on `[m][n][flag][amp]`.
pub fn encoded_amplitudes(v: &[f64], j: usize, m: usize, n: usize) -> Vec<Complex64> {
    let width = m + n + 2;
    let mut amps = vec![c(0.0); 1 << width];
    let norm = 1.0 / (v.len() as f64).sqrt();
    for (i, &x) in v.iter().enumerate() {
        let base = (j << (n + 2)) | (i << 2) | 0b10;
        amps[base] = c(norm * (1.0 - x * x).sqrt());
        amps[base | 1] = c(norm * x);
    }
    amps
}

/// Same, with flag and amplitude qubits exchanged.
pub fn swapped_amplitudes(v: &[f64], j: usize, m: usize, n: usize) -> Vec<Complex64> {
    let src = encoded_amplitudes(v, j, m, n);
    let mut out = vec![c(0.0); src.len()];
    for (idx, a) in src.iter().enumerate() {
        let flag = (idx >> 1) & 1;
        let amp = idx & 1;
        out[(idx & !0b11) | (amp << 1) | flag] = *a;
    }
    out
}

pub fn encoded_layout(m: usize, n: usize) -> Vec<Register> {
    vec![
        Register::new("sample", m),
        Register::new("feature", n),
        Register::new("flag", 1),
        Register::new("amp", 1),
    ]
}

/// P(ancilla = 1) of the swap test on `|0⟩|a⟩|b⟩` computed from the output
/// formula `½|1⟩(|a⟩|b⟩ − S|a⟩|b⟩)`, where `S` exchanges every qubit of the
/// two halves except the top `spectator` qubits of each.
pub fn swap_test_p1(a: &[Complex64], b: &[Complex64], width: usize, spectator: usize) -> f64 {
    let dim = 1usize << width;
    let low_mask = (1usize << (width - spectator)) - 1;
    let mut p = 0.0;
    for x in 0..dim {
        for y in 0..dim {
            // S maps |x⟩|y⟩ to |x'⟩|y'⟩ with the low parts exchanged
            let xs = (x & !low_mask) | (y & low_mask);
            let ys = (y & !low_mask) | (x & low_mask);
            let amp = (a[x] * b[y] - a[xs] * b[ys]) * 0.5;
            p += amp.norm_sqr();
        }
    }
    p
}

/// Dense `2^k × 2^k` matrices for the small-state swap-test oracle.
pub type Dense = Vec<Vec<Complex64>>;

pub fn identity(dim: usize) -> Dense {
    (0..dim)
        .map(|r| (0..dim).map(|col| c(if r == col { 1.0 } else { 0.0 })).collect())
        .collect()
}

pub fn kron(a: &Dense, b: &Dense) -> Dense {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn mat_vec(m: &Dense, v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn hadamard() -> Dense {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    vec![vec![c(h), c(h)], vec![c(h), c(-h)]]
}

/// Controlled swap of the two `k`-qubit halves, control on the top qubit,
/// as an explicit permutation matrix.
pub fn controlled_swap(k: usize) -> Dense {
    let half = 1usize << k;
    let dim = 2 * half * half;
    let mut m = vec![vec![c(0.0); dim]; dim];
    #[allow(clippy::needless_range_loop)]
    for idx in 0..dim {
        let ctrl = idx >> (2 * k);
        let x = (idx >> k) & (half - 1);
        let y = idx & (half - 1);
        let target = if ctrl == 1 { (ctrl << (2 * k)) | (y << k) | x } else { idx };
        m[target][idx] = c(1.0);
    }
    m
}

pub fn random_state(width: usize, rng: &mut impl Rng) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..1 << width)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= norm);
    v
}

pub fn state(name: &str, amps: Vec<Complex64>) -> QuantumState {
    let width = amps.len().trailing_zeros() as usize;
    QuantumState::from_amplitudes(vec![Register::new(name, width)], amps).unwrap()
}

/// Integer dot product of two binary samples.
pub fn dot(u: &Sample, v: &Sample) -> u32 {
    u.features.iter().zip(&v.features).map(|(&a, &b)| u32::from(a & b)).sum()
}

/// Random binary dataset with both classes holding at least two samples.
pub fn random_dataset(rng: &mut impl Rng, samples: usize, features: usize) -> Dataset {
    assert!(samples >= 4);
    let rows = (0..samples)
        .map(|k| {
            let class = if k % 2 == 0 { Class::A } else { Class::B };
            let f = (0..features).map(|_| rng.gen_range(0..=1u8)).collect();
            Sample::new(format!("s{k}"), f, class)
        })
        .collect();
    Dataset::new(
        (0..features).map(|i| format!("F{i}")).collect(),
        ["A".into(), "B".into()],
        rows,
    )
    .unwrap()
}
