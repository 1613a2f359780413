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

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::error::{Error, Result};

/// The two classes of a binary classification problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Class {
    A,
    B,
}

impl Class {
    pub fn other(self) -> Class {
        match self {
            Class::A => Class::B,
            Class::B => Class::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub id: String,
    /// Binary feature values, each 0 or 1.
    pub features: Vec<u8>,
    pub class: Class,
}

impl Sample {
    pub fn new(id: impl Into<String>, features: Vec<u8>, class: Class) -> Self {
        Sample {
            id: id.into(),
            features,
            class,
        }
    }

    pub fn as_reals(&self) -> Vec<f64> {
        self.features.iter().map(|&x| f64::from(x)).collect()
    }
}

/// Validated two-class collection of equally long binary samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dataset {
    feature_names: Vec<String>,
    /// Original label text for classes A and B.
    class_names: [String; 2],
    samples: Vec<Sample>,
}

impl Dataset {
    /// Checks shape, binary values, unique ids and that both classes are
    /// populated.
    pub fn new(feature_names: Vec<String>, class_names: [String; 2], samples: Vec<Sample>) -> Result<Self> {
        if feature_names.is_empty() {
            return Err(Error::Validation("dataset has no features".into()));
        }
        let mut ids = HashSet::new();
        for s in &samples {
            if s.features.len() != feature_names.len() {
                return Err(Error::Validation(format!(
                    "sample '{}' has {} features, expected {}",
                    s.id,
                    s.features.len(),
                    feature_names.len()
                )));
            }
            if let Some(x) = s.features.iter().find(|&&x| x > 1) {
                return Err(Error::Validation(format!(
                    "sample '{}' has non-binary feature value {x}",
                    s.id
                )));
            }
            if !ids.insert(s.id.as_str()) {
                return Err(Error::Validation(format!("duplicate sample id '{}'", s.id)));
            }
        }
        for class in [Class::A, Class::B] {
            if !samples.iter().any(|s| s.class == class) {
                return Err(Error::DegenerateDataset(format!("class {class:?} has no samples")));
            }
        }
        Ok(Dataset {
            feature_names,
            class_names,
            samples,
        })
    }

    /// The four-sample, four-feature worked example.
    pub fn paper_example() -> Self {
        let rows: [(&str, [u8; 4], Class); 4] = [
            ("S0", [1, 0, 1, 0], Class::A),
            ("S1", [1, 0, 0, 0], Class::A),
            ("S2", [0, 1, 1, 0], Class::B),
            ("S3", [0, 1, 0, 0], Class::B),
        ];
        Dataset::new(
            (0..4).map(|i| format!("F{i}")).collect(),
            ["A".into(), "B".into()],
            rows.iter()
                .map(|(id, f, c)| Sample::new(*id, f.to_vec(), *c))
                .collect(),
        )
        .expect("example dataset is valid")
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn sample(&self, position: usize) -> &Sample {
        &self.samples[position]
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn class_names(&self) -> &[String; 2] {
        &self.class_names
    }

    pub fn class_name(&self, class: Class) -> &str {
        match class {
            Class::A => &self.class_names[0],
            Class::B => &self.class_names[1],
        }
    }

    /// Number of features, N.
    pub fn feature_count(&self) -> usize {
        self.feature_names.len()
    }

    /// Number of samples, M.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.samples.iter().position(|s| s.id == id)
    }

    pub fn class_size(&self, class: Class) -> usize {
        self.samples.iter().filter(|s| s.class == class).count()
    }

    /// Same samples with classes A and B exchanged.
    pub fn with_swapped_classes(&self) -> Dataset {
        Dataset {
            feature_names: self.feature_names.clone(),
            class_names: [self.class_names[1].clone(), self.class_names[0].clone()],
            samples: self
                .samples
                .iter()
                .map(|s| Sample::new(s.id.clone(), s.features.clone(), s.class.other()))
                .collect(),
        }
    }
}

/// `0` if samples agree on feature `i`, `1` otherwise.
pub fn diff(i: usize, u: &Sample, v: &Sample) -> u8 {
    u8::from(u.features[i] != v.features[i])
}
