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

use num_complex::Complex64;
use rand::distributions::{Bernoulli, Distribution};
use rand::Rng;
use std::ops::Range;

use super::gate::{Gate, GateKind};
use super::{SimRng, IMPOSSIBLE_TOLERANCE, NORM_TOLERANCE};
use crate::error::{Error, Result};

/// A named block of consecutive qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Register {
    pub name: String,
    pub width: usize,
}

impl Register {
    pub fn new(name: impl Into<String>, width: usize) -> Self {
        Register {
            name: name.into(),
            width,
        }
    }
}

/// Outcome tallies for one measured qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Counts {
    pub ones: u64,
    pub zeros: u64,
}

impl Counts {
    pub fn shots(&self) -> u64 {
        self.ones + self.zeros
    }

    pub fn fraction_ones(&self) -> f64 {
        self.ones as f64 / self.shots() as f64
    }
}

/// Statevector over `2^n` basis states with a register layout.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    layout: Vec<Register>,
    amplitudes: Vec<Complex64>,
}

fn check_layout(layout: &[Register]) -> Result<usize> {
    let mut total = 0usize;
    for (i, reg) in layout.iter().enumerate() {
        if reg.width == 0 {
            return Err(Error::config(format!("register '{}' has width 0", reg.name)));
        }
        if layout[..i].iter().any(|r| r.name == reg.name) {
            return Err(Error::config(format!("duplicate register name '{}'", reg.name)));
        }
        total += reg.width;
    }
    if total == 0 {
        return Err(Error::config("layout has no qubits"));
    }
    if total > 30 {
        return Err(Error::config(format!("{total} qubits exceeds the 30-qubit limit")));
    }
    Ok(total)
}

impl QuantumState {
    /// Basis state `|basis⟩`, where `basis` lists one bit per qubit in
    /// qubit order (first register first).
    pub fn new(layout: Vec<Register>, basis: &str) -> Result<Self> {
        let n = check_layout(&layout)?;
        if basis.len() != n {
            return Err(Error::config(format!(
                "basis string has {} bits, layout has {n} qubits",
                basis.len()
            )));
        }
        let mut index = 0usize;
        for ch in basis.chars() {
            index = (index << 1)
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::config(format!("invalid basis character '{ch}'"))),
                };
        }
        Self::from_basis_index(layout, index)
    }

    pub fn from_basis_index(layout: Vec<Register>, index: usize) -> Result<Self> {
        let n = check_layout(&layout)?;
        if index >= 1 << n {
            return Err(Error::config(format!("basis index {index} out of range")));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(QuantumState { layout, amplitudes })
    }

    /// Wraps an explicit amplitude vector; it must be normalized.
    pub fn from_amplitudes(layout: Vec<Register>, amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = check_layout(&layout)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::config(format!(
                "{} amplitudes for a {n}-qubit layout",
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::config("non-finite amplitude"));
        }
        let state = QuantumState { layout, amplitudes };
        if (state.norm_sqr() - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::config(format!(
                "amplitudes have squared norm {}",
                state.norm_sqr()
            )));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    pub fn layout(&self) -> &[Register] {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// Amplitude of the basis state given as a bitstring in qubit order.
    pub fn amplitude_of(&self, basis: &str) -> Result<Complex64> {
        let idx = QuantumState::new(self.layout.clone(), basis)?
            .amplitudes
            .iter()
            .position(|a| a.re == 1.0)
            .expect("basis state has a unit amplitude");
        Ok(self.amplitudes[idx])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Qubit indices occupied by the named register.
    pub fn register(&self, name: &str) -> Result<Range<usize>> {
        let mut start = 0;
        for reg in &self.layout {
            if reg.name == name {
                return Ok(start..start + reg.width);
            }
            start += reg.width;
        }
        Err(Error::config(format!("no register named '{name}'")))
    }

    fn mask(&self, qubit: usize) -> Result<usize> {
        let n = self.num_qubits();
        if qubit >= n {
            return Err(Error::config(format!(
                "qubit {qubit} out of range for a {n}-qubit state"
            )));
        }
        Ok(1 << (n - 1 - qubit))
    }

    /// Applies a (controlled) gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits())?;
        let mut ctrl_mask = 0;
        let mut ctrl_value = 0;
        for c in &gate.controls {
            let m = self.mask(c.qubit)?;
            ctrl_mask |= m;
            if c.polarity {
                ctrl_value |= m;
            }
        }
        let fires = |idx: usize| idx & ctrl_mask == ctrl_value;

        if gate.kind == GateKind::Swap {
            let m1 = self.mask(gate.targets[0])?;
            let m2 = self.mask(gate.targets[1])?;
            for idx in 0..self.amplitudes.len() {
                if idx & m1 != 0 && idx & m2 == 0 && fires(idx) {
                    self.amplitudes.swap(idx, idx ^ m1 ^ m2);
                }
            }
            return Ok(());
        }

        let m = gate.matrix().expect("single-target gate has a matrix");
        let t = self.mask(gate.targets[0])?;
        for idx in 0..self.amplitudes.len() {
            if idx & t == 0 && fires(idx) {
                let a0 = self.amplitudes[idx];
                let a1 = self.amplitudes[idx | t];
                self.amplitudes[idx] = m[0][0] * a0 + m[0][1] * a1;
                self.amplitudes[idx | t] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
        Ok(())
    }

    pub fn apply_all<'a>(&mut self, gates: impl IntoIterator<Item = &'a Gate>) -> Result<usize> {
        let mut count = 0;
        for g in gates {
            self.apply(g)?;
            count += 1;
        }
        Ok(count)
    }

    /// Probability that measuring `qubit` yields `outcome`.
    pub fn probability(&self, qubit: usize, outcome: bool) -> Result<f64> {
        let m = self.mask(qubit)?;
        let want = if outcome { m } else { 0 };
        Ok(self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(idx, _)| idx & m == want)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Simulates `shots` independent measurements of `qubit` without
    /// disturbing the state.
    pub fn sample(&self, qubit: usize, shots: u64, rng: &mut SimRng) -> Result<Counts> {
        if shots == 0 {
            return Err(Error::config("shots must be at least 1"));
        }
        let p1 = self.probability(qubit, true)?.clamp(0.0, 1.0);
        let dist = Bernoulli::new(p1).expect("probability clamped to [0, 1]");
        let ones = (0..shots).filter(|_| dist.sample(rng)).count() as u64;
        Ok(Counts {
            ones,
            zeros: shots - ones,
        })
    }

    /// Projects onto `qubit = outcome` and renormalizes. Returns the
    /// probability of that outcome before the collapse. The state is left
    /// untouched when the outcome is impossible.
    pub fn postselect(&mut self, qubit: usize, outcome: bool) -> Result<f64> {
        let p = self.probability(qubit, outcome)?;
        if p <= IMPOSSIBLE_TOLERANCE {
            return Err(Error::ImpossiblePostselection {
                qubit,
                outcome: outcome as u8,
                probability: p,
            });
        }
        let m = self.mask(qubit)?;
        let want = if outcome { m } else { 0 };
        let scale = 1.0 / p.sqrt();
        for (idx, a) in self.amplitudes.iter_mut().enumerate() {
            if idx & m == want {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        Ok(p)
    }

    /// Measures `qubit` once, collapsing the state. Returns the outcome and
    /// its probability.
    pub fn measure(&mut self, qubit: usize, rng: &mut SimRng) -> Result<(bool, f64)> {
        let p1 = self.probability(qubit, true)?;
        let outcome = rng.gen::<f64>() < p1;
        let p = self.postselect(qubit, outcome)?;
        Ok((outcome, p))
    }

    /// ⟨self|other⟩ = Σ conj(self_k)·other_k.
    pub fn overlap(&self, other: &QuantumState) -> Result<Complex64> {
        if self.layout != other.layout {
            return Err(Error::config("overlap of states with different layouts"));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `self ⊗ other`; `self` takes the high-order qubits.
    pub fn tensor(&self, other: &QuantumState) -> Result<QuantumState> {
        let mut layout = self.layout.clone();
        layout.extend(other.layout.iter().cloned());
        check_layout(&layout)?;
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        Ok(QuantumState { layout, amplitudes })
    }

    /// Returns a copy with every register name prefixed, so two copies of
    /// the same layout can be tensored together.
    pub fn with_prefix(&self, prefix: &str) -> QuantumState {
        QuantumState {
            layout: self
                .layout
                .iter()
                .map(|r| Register::new(format!("{prefix}{}", r.name), r.width))
                .collect(),
            amplitudes: self.amplitudes.clone(),
        }
    }

    /// Removes a register that is in a definite basis state, returning the
    /// reduced state and the register's value. Fails if the register is
    /// entangled or in superposition.
    pub fn drop_register(&self, name: &str) -> Result<(QuantumState, usize)> {
        let range = self.register(name)?;
        if range.len() == self.num_qubits() {
            return Err(Error::config("cannot drop the only register"));
        }
        let n = self.num_qubits();
        let width = range.len();
        let shift = n - range.end;
        let field = ((1usize << width) - 1) << shift;

        let mut weight = vec![0.0; 1 << width];
        for (idx, a) in self.amplitudes.iter().enumerate() {
            weight[(idx & field) >> shift] += a.norm_sqr();
        }
        let total: f64 = weight.iter().sum();
        let (value, w) = weight
            .iter()
            .copied()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("register has at least one value");
        if total - w > NORM_TOLERANCE {
            return Err(Error::config(format!(
                "register '{name}' is not in a definite basis state"
            )));
        }

        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(idx, _)| (idx & field) >> shift == value)
            .map(|(_, a)| *a)
            .collect::<Vec<_>>();
        // increasing index order with the field removed is the reduced order
        debug_assert_eq!(amplitudes.len(), 1 << (n - width));
        let layout = self
            .layout
            .iter()
            .filter(|r| r.name != name)
            .cloned()
            .collect();
        Ok((QuantumState { layout, amplitudes }, value))
    }
}
