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

use std::path::PathBuf;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bad register layout, qubit index, gate or run parameter.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// Feature values or other user-supplied numbers outside their domain.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("impossible postselection: qubit {qubit} has probability {probability:e} of outcome {outcome}")]
    ImpossiblePostselection {
        qubit: usize,
        outcome: u8,
        probability: f64,
    },

    #[error("state preparation failed after {attempts} attempts")]
    PreparationFailure { attempts: usize },

    #[error("replay table has no entry for iteration {iteration}, u = {u}, sample = {sample}")]
    ReplayIncomplete {
        iteration: usize,
        u: String,
        sample: String,
    },

    #[error("degenerate dataset: {0}")]
    DegenerateDataset(String),

    /// Malformed input file; `row` and `column` are 1-based when known.
    #[error("parse error in {}{}: {message}", path.display(), location(*row, *column))]
    Parse {
        path: PathBuf,
        row: Option<usize>,
        column: Option<usize>,
        message: String,
    },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn location(row: Option<usize>, column: Option<usize>) -> String {
    match (row, column) {
        (Some(r), Some(c)) => format!(" at row {r}, column {c}"),
        (Some(r), None) => format!(" at row {r}"),
        (None, Some(c)) => format!(" at column {c}"),
        (None, None) => String::new(),
    }
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }

    /// True for errors caused by the input data rather than by the run itself.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Validation(_) | Error::DegenerateDataset(_) | Error::Parse { .. } | Error::Io { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
