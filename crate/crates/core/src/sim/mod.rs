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

//! Dense complex-amplitude statevector simulation.
//!
//! States carry a named register layout so circuits can address qubits by
//! register rather than by raw index. See the crate docs for the bit
//! ordering convention.

mod gate;
mod rng;
mod state;

pub use gate::{Control, Gate, GateKind};
pub use num_complex::Complex64;
pub use rng::SimRng;
pub use state::{Counts, QuantumState, Register};

/// Tolerance for norm and unitarity checks.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Probabilities at or below this are treated as impossible outcomes.
pub const IMPOSSIBLE_TOLERANCE: f64 = 1e-12;
