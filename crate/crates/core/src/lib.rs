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

//! Quantum Relief feature selection.
//!
//! The crate is layered bottom-up:
//!
//! * [`sim`]: a dense statevector simulator (gates, probabilities, shot
//!   sampling, postselection, overlaps).
//! * [`circuits`]: the comparator, uniform-superposition preparation,
//!   amplitude encoding of a sample and the swap test.
//! * [`quantum`]: the quantum Relief loop (similarity estimation, Near-hit /
//!   Near-miss search, weight update, thresholded selection) in exact,
//!   shot-sampled and replay modes.
//! * [`classical`]: the classical Relief baseline.
//! * [`io`]: dataset CSV, replay tables and JSON run reports.
//!
//! Qubit ordering is register-ordered: the first register of a layout holds
//! the most significant bits of the amplitude index, and inside a register
//! the first qubit is the most significant. Qubit `q` of an `n`-qubit state
//! is therefore bit `n - 1 - q` of the basis index, so a basis bitstring
//! reads left to right in qubit order.

pub mod circuits;
pub mod classical;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod io;
pub mod quantum;
pub mod report;
pub mod sim;

pub use dataset::{Class, Dataset, Sample};
pub use error::{Error, Result};
pub use quantum::{run, Mode, Policy, RunConfig};
pub use report::RunReport;
