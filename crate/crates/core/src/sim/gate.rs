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
use std::f64::consts::FRAC_1_SQRT_2;

use super::NORM_TOLERANCE;
use crate::error::{Error, Result};

pub type Matrix2 = [[Complex64; 2]; 2];

#[derive(Clone, Debug, PartialEq)]
pub enum GateKind {
    H,
    X,
    Y,
    /// Ry(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].
    Ry(f64),
    Swap,
    Unitary(Matrix2),
}

/// A control qubit. The gate fires only when the qubit equals `polarity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Control {
    pub qubit: usize,
    pub polarity: bool,
}

/// A (multi-)controlled gate. Single-qubit kinds take one target, `Swap`
/// takes two.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
}

impl Gate {
    fn single(kind: GateKind, target: usize) -> Self {
        Gate {
            kind,
            targets: vec![target],
            controls: Vec::new(),
        }
    }

    pub fn h(target: usize) -> Self {
        Self::single(GateKind::H, target)
    }

    pub fn x(target: usize) -> Self {
        Self::single(GateKind::X, target)
    }

    pub fn y(target: usize) -> Self {
        Self::single(GateKind::Y, target)
    }

    pub fn ry(theta: f64, target: usize) -> Self {
        Self::single(GateKind::Ry(theta), target)
    }

    pub fn unitary(matrix: Matrix2, target: usize) -> Self {
        Self::single(GateKind::Unitary(matrix), target)
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate {
            kind: GateKind::Swap,
            targets: vec![a, b],
            controls: Vec::new(),
        }
    }

    /// Adds a control that fires on |1⟩.
    pub fn controlled_by(self, qubit: usize) -> Self {
        self.controlled_on(qubit, true)
    }

    pub fn controlled_on(mut self, qubit: usize, polarity: bool) -> Self {
        self.controls.push(Control { qubit, polarity });
        self
    }

    /// Relabels every qubit the gate touches.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Self {
        Gate {
            kind: self.kind.clone(),
            targets: self.targets.iter().map(|&q| map(q)).collect(),
            controls: self
                .controls
                .iter()
                .map(|c| Control {
                    qubit: map(c.qubit),
                    polarity: c.polarity,
                })
                .collect(),
        }
    }

    /// The 2×2 matrix of a single-target gate, `None` for `Swap`.
    pub fn matrix(&self) -> Option<Matrix2> {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let m = match &self.kind {
            GateKind::H => [
                [c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)],
                [c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)],
            ],
            GateKind::X => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
            GateKind::Y => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
            GateKind::Ry(theta) => {
                let (s, co) = (theta / 2.0).sin_cos();
                [[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]]
            }
            GateKind::Unitary(m) => *m,
            GateKind::Swap => return None,
        };
        Some(m)
    }

    /// Checks arity, qubit ranges, target/control disjointness and
    /// unitarity against a state of `num_qubits` qubits.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let arity = if self.kind == GateKind::Swap { 2 } else { 1 };
        if self.targets.len() != arity {
            return Err(Error::config(format!(
                "{:?} takes {arity} target(s), got {}",
                self.kind,
                self.targets.len()
            )));
        }
        let mut seen = Vec::with_capacity(self.targets.len() + self.controls.len());
        for q in self
            .targets
            .iter()
            .copied()
            .chain(self.controls.iter().map(|c| c.qubit))
        {
            if q >= num_qubits {
                return Err(Error::config(format!(
                    "qubit {q} out of range for a {num_qubits}-qubit state"
                )));
            }
            if seen.contains(&q) {
                return Err(Error::config(format!("qubit {q} used twice in one gate")));
            }
            seen.push(q);
        }
        if let GateKind::Ry(theta) = self.kind {
            if !theta.is_finite() {
                return Err(Error::config("non-finite rotation angle"));
            }
        }
        if let Some(m) = self.matrix() {
            if !is_unitary(&m) {
                return Err(Error::config(format!("matrix {m:?} is not unitary")));
            }
        }
        Ok(())
    }
}

fn is_unitary(m: &Matrix2) -> bool {
    // M†M = I
    for r in 0..2 {
        for c in 0..2 {
            let v: Complex64 = (0..2).map(|k| m[k][r].conj() * m[k][c]).sum();
            let expect = if r == c { 1.0 } else { 0.0 };
            if !v.is_finite() || (v - expect).norm() > NORM_TOLERANCE {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_matrices_are_unitary() {
        for g in [Gate::h(0), Gate::x(0), Gate::y(0), Gate::ry(1.234, 0)] {
            assert!(g.validate(1).is_ok(), "{g:?}");
        }
    }

    #[test]
    fn rejects_non_unitary_matrix() {
        let one = Complex64::new(1.0, 0.0);
        let g = Gate::unitary([[one, one], [one, one]], 0);
        assert!(matches!(g.validate(1), Err(Error::Configuration(_))));
    }

    #[test]
    fn rejects_overlapping_and_out_of_range_qubits() {
        assert!(Gate::x(0).controlled_by(0).validate(2).is_err());
        assert!(Gate::swap(1, 1).validate(2).is_err());
        assert!(Gate::x(2).validate(2).is_err());
        assert!(Gate::x(0).controlled_by(5).validate(2).is_err());
        assert!(Gate::swap(0, 1).controlled_on(2, false).validate(3).is_ok());
    }

    #[test]
    fn remap_shifts_targets_and_controls() {
        let g = Gate::x(0).controlled_on(1, false).remap(|q| q + 3);
        assert_eq!(g.targets, vec![3]);
        assert_eq!(
            g.controls,
            vec![Control {
                qubit: 4,
                polarity: false
            }]
        );
    }
}
