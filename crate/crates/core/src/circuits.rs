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

//! Circuit builders: threshold comparator, uniform superposition over the
//! first `N` basis states, amplitude encoding of one sample, and the swap
//! test.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::sim::{Counts, Gate, QuantumState, Register, SimRng};

/// Register holding the sample index `|j⟩`.
pub const SAMPLE_REGISTER: &str = "sample";
/// Register holding the feature index `|i⟩`.
pub const FEATURE_REGISTER: &str = "feature";
/// Flag qubit, `|1⟩` after encoding.
pub const FLAG_REGISTER: &str = "flag";
/// Qubit whose `|1⟩` amplitude carries the feature value.
pub const AMPLITUDE_REGISTER: &str = "amp";

const CMP_ANCILLA: &str = "cmp_ancilla";
const CMP_RESULT: &str = "cmp_result";

/// How a probabilistic step is carried out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    /// Postselect / read probabilities directly from the statevector.
    Exact,
    /// Draw measurement outcomes from the seeded generator; `shots` is used
    /// by the swap test and ignored by state preparation.
    Sampled { shots: u64 },
}

/// Reversible circuit flipping a result qubit iff the index register holds
/// a value `i ≥ threshold`.
///
/// Gates act on local qubits: `0..n` index register (most significant bit
/// first), `n..2n` one ancilla per stage, `2n` result. Stage `s` keeps in
/// ancilla `s` the predicate "index bits `0..=s` equal those of the
/// threshold". A stage where the threshold bit is 0 adds the term "prefix
/// equal and index bit is 1" to the result; after the last stage the
/// equality case `i == threshold` is added. The terms are mutually
/// exclusive, so XOR into the result is an OR. Ancillas are uncomputed in
/// reverse order.
#[derive(Clone, Debug)]
pub struct ComparatorCircuit {
    index_width: usize,
    threshold: usize,
    gates: Vec<Gate>,
}

pub fn build_comparator(n: usize, threshold: usize) -> Result<ComparatorCircuit> {
    if n == 0 || n > 12 {
        return Err(Error::config(format!("comparator width {n} not in 1..=12")));
    }
    if threshold < 1 || threshold > 1 << n {
        return Err(Error::config(format!(
            "threshold {threshold} not in 1..={}",
            1usize << n
        )));
    }
    let mut gates = Vec::new();
    if threshold < 1 << n {
        let ancilla = |s: usize| n + s;
        let result = 2 * n;
        let bit = |s: usize| (threshold >> (n - 1 - s)) & 1 == 1;
        let mut compute = Vec::with_capacity(n);
        for s in 0..n {
            let prefix = |g: Gate| if s > 0 { g.controlled_by(ancilla(s - 1)) } else { g };
            if !bit(s) {
                gates.push(prefix(Gate::x(result)).controlled_by(s));
            }
            compute.push(prefix(Gate::x(ancilla(s))).controlled_on(s, bit(s)));
            gates.push(compute[s].clone());
        }
        gates.push(Gate::x(result).controlled_by(ancilla(n - 1)));
        gates.extend(compute.into_iter().rev());
    }
    Ok(ComparatorCircuit {
        index_width: n,
        threshold,
        gates,
    })
}

impl ComparatorCircuit {
    pub fn index_width(&self) -> usize {
        self.index_width
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn num_qubits(&self) -> usize {
        2 * self.index_width + 1
    }

    pub fn result_qubit(&self) -> usize {
        2 * self.index_width
    }

    /// Gates on the local qubit numbering described on the type.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Layout matching the local numbering.
    pub fn layout(&self) -> Vec<Register> {
        vec![
            Register::new("index", self.index_width),
            Register::new("ancilla", self.index_width),
            Register::new("result", 1),
        ]
    }

    /// Gates relocated onto the given index qubits, ancillas and result.
    pub fn placed(&self, index: Range<usize>, ancilla: Range<usize>, result: usize) -> Vec<Gate> {
        assert_eq!(index.len(), self.index_width);
        assert_eq!(ancilla.len(), self.index_width);
        let n = self.index_width;
        self.gates
            .iter()
            .map(|g| {
                g.remap(|q| match q {
                    q if q < n => index.start + q,
                    q if q < 2 * n => ancilla.start + (q - n),
                    _ => result,
                })
            })
            .collect()
    }
}

/// Result of [`prepare_uniform`].
#[derive(Clone, Debug)]
pub struct UniformPreparation {
    /// `(1/√N) Σ_{i<N} |i⟩` on a single `index` register.
    pub state: QuantumState,
    /// Probability that the comparator postselection succeeds, `N / 2^n`.
    pub success_probability: f64,
    /// Number of preparation rounds; always 1 in exact mode.
    pub attempts: usize,
    pub gates_applied: usize,
}

/// Prepares the uniform superposition over `|0⟩ … |count−1⟩` on `n` qubits:
/// Hadamards on every qubit, then the comparator, then postselection of a
/// zero result. Sampled mode repeats the whole round until the simulated
/// measurement returns 0, giving up after `64·2^n/count` rounds.
pub fn prepare_uniform(
    n: usize,
    count: usize,
    execution: Execution,
    rng: &mut SimRng,
) -> Result<UniformPreparation> {
    let initial = QuantumState::from_basis_index(vec![Register::new("index", n)], 0)?;
    let (state, success_probability, attempts, gates_applied) =
        uniform_on_register(&initial, "index", count, execution, Some(rng))?;
    Ok(UniformPreparation {
        state,
        success_probability,
        attempts,
        gates_applied,
    })
}

/// Puts register `target` (assumed `|0…0⟩`) of `initial` into the uniform
/// superposition over its first `count` values. Returns the new state,
/// success probability, attempts and gate count.
fn uniform_on_register(
    initial: &QuantumState,
    target: &str,
    count: usize,
    execution: Execution,
    mut rng: Option<&mut SimRng>,
) -> Result<(QuantumState, f64, usize, usize)> {
    let index = initial.register(target)?;
    let n = index.len();
    let cmp = build_comparator(n, count)?;

    let scratch = QuantumState::from_basis_index(
        vec![Register::new(CMP_ANCILLA, n), Register::new(CMP_RESULT, 1)],
        0,
    )?;
    let fresh = initial.tensor(&scratch)?;
    let ancilla = fresh.register(CMP_ANCILLA)?;
    let result = fresh.register(CMP_RESULT)?.start;

    let mut gates: Vec<Gate> = index.clone().map(Gate::h).collect();
    gates.extend(cmp.placed(index, ancilla, result));

    let max_attempts = match execution {
        Execution::Exact => 1,
        Execution::Sampled { .. } => (64usize << n).div_ceil(count),
    };
    let mut gates_applied = 0;
    for attempt in 1..=max_attempts {
        let mut state = fresh.clone();
        gates_applied += state.apply_all(&gates)?;
        let p0 = match (execution, rng.as_deref_mut()) {
            (Execution::Sampled { .. }, Some(rng)) => {
                let (outcome, p) = state.measure(result, rng)?;
                if outcome {
                    continue;
                }
                p
            }
            (Execution::Sampled { .. }, None) => {
                return Err(Error::config("sampled preparation needs a random generator"))
            }
            (Execution::Exact, _) => state.postselect(result, false)?,
        };
        let (state, _) = state.drop_register(CMP_RESULT)?;
        let (state, _) = state.drop_register(CMP_ANCILLA)?;
        return Ok((state, p0, attempt, gates_applied));
    }
    Err(Error::PreparationFailure {
        attempts: max_attempts,
    })
}

/// One sample amplitude-encoded on `[sample: m][feature: n][flag][amp]`:
///
/// `(1/√N) |j⟩ Σ_i |i⟩ |1⟩ (√(1−v_i²) |0⟩ + v_i |1⟩)`.
#[derive(Clone, Debug)]
pub struct EncodedSample {
    pub sample_index: usize,
    pub feature_count: usize,
    pub state: QuantumState,
    pub gates_applied: usize,
}

/// Smallest register width able to index `count` items (at least 1).
pub fn index_width(count: usize) -> usize {
    count.max(2).next_power_of_two().trailing_zeros() as usize
}

/// Encodes feature vector `v` (values in `[0, 1]`) as sample `j`.
///
/// Starts from `|j⟩|0…0⟩|1⟩|0⟩`, prepares the uniform feature index, then
/// rotates the amplitude qubit by `Ry(2·asin v_i)` under a control pattern
/// selecting feature index `i`. Zero features need no rotation.
pub fn encode_sample(v: &[f64], j: usize, m: usize, n: usize) -> Result<EncodedSample> {
    if v.is_empty() {
        return Err(Error::Validation("sample has no features".into()));
    }
    if let Some((i, x)) = v
        .iter()
        .enumerate()
        .find(|(_, x)| !(0.0..=1.0).contains(*x))
    {
        return Err(Error::Validation(format!(
            "feature {i} has value {x}, outside [0, 1]"
        )));
    }
    if m == 0 || n == 0 || v.len() > 1 << n {
        return Err(Error::config(format!(
            "{} features do not fit a {n}-qubit feature register",
            v.len()
        )));
    }
    if j >= 1 << m {
        return Err(Error::config(format!(
            "sample index {j} does not fit a {m}-qubit register"
        )));
    }

    let layout = vec![
        Register::new(SAMPLE_REGISTER, m),
        Register::new(FEATURE_REGISTER, n),
        Register::new(FLAG_REGISTER, 1),
        Register::new(AMPLITUDE_REGISTER, 1),
    ];
    let mut state = QuantumState::from_basis_index(layout, 0)?;
    let mut gates: Vec<Gate> = (0..m)
        .filter(|s| (j >> (m - 1 - s)) & 1 == 1)
        .map(Gate::x)
        .collect();
    let flag = state.register(FLAG_REGISTER)?.start;
    gates.push(Gate::x(flag));
    let mut gates_applied = state.apply_all(&gates)?;

    let (mut state, _, _, prep_gates) =
        uniform_on_register(&state, FEATURE_REGISTER, v.len(), Execution::Exact, None)?;
    gates_applied += prep_gates;

    let feature = state.register(FEATURE_REGISTER)?;
    let amp = state.register(AMPLITUDE_REGISTER)?.start;
    for (i, &x) in v.iter().enumerate() {
        if x == 0.0 {
            continue;
        }
        let mut g = Gate::ry(2.0 * x.asin(), amp);
        for (k, q) in feature.clone().enumerate() {
            g = g.controlled_on(q, (i >> (n - 1 - k)) & 1 == 1);
        }
        state.apply(&g)?;
        gates_applied += 1;
    }

    Ok(EncodedSample {
        sample_index: j,
        feature_count: v.len(),
        state,
        gates_applied,
    })
}

/// Exchanges the flag and amplitude qubits of an encoded sample, moving the
/// feature amplitude onto the flag qubit.
pub fn swap_last_two(e: &EncodedSample) -> QuantumState {
    let mut state = e.state.clone();
    let flag = state.register(FLAG_REGISTER).expect("encoded layout").start;
    let amp = state.register(AMPLITUDE_REGISTER).expect("encoded layout").start;
    state
        .apply(&Gate::swap(flag, amp))
        .expect("flag and amp are distinct qubits");
    state
}

/// Outcome of one swap test.
#[derive(Clone, Debug, PartialEq)]
pub struct SwapTestOutcome {
    /// P(ancilla = 1): exact, or the observed fraction in sampled mode.
    pub p1: f64,
    pub counts: Option<Counts>,
    pub qubits: usize,
    pub gates_applied: usize,
}

/// Qubits used by a swap test between two states of `layout`.
pub fn swap_test_width(layout: &[Register]) -> usize {
    2 * layout.iter().map(|r| r.width).sum::<usize>() + 1
}

/// Swap test on `|0⟩ ⊗ a ⊗ b`: H on the ancilla, ancilla-controlled SWAP
/// of every register pair except the sample-index register, H again.
/// `P(1) = 1/2 − |⟨a|b⟩|²/2` where the overlap ignores the sample index.
pub fn swap_test(
    a: &QuantumState,
    b: &QuantumState,
    execution: Execution,
    rng: &mut SimRng,
) -> Result<SwapTestOutcome> {
    if a.layout() != b.layout() {
        return Err(Error::config("swap test on states with different layouts"));
    }
    let ancilla = QuantumState::from_basis_index(vec![Register::new("ancilla", 1)], 0)?;
    let mut state = ancilla
        .tensor(&a.with_prefix("a."))?
        .tensor(&b.with_prefix("b."))?;

    let mut gates = vec![Gate::h(0)];
    for reg in a.layout() {
        if reg.name == SAMPLE_REGISTER {
            continue;
        }
        let ra = state.register(&format!("a.{}", reg.name))?;
        let rb = state.register(&format!("b.{}", reg.name))?;
        gates.extend(ra.zip(rb).map(|(qa, qb)| Gate::swap(qa, qb).controlled_by(0)));
    }
    gates.push(Gate::h(0));
    let gates_applied = state.apply_all(&gates)?;

    let qubits = state.num_qubits();
    match execution {
        Execution::Exact => Ok(SwapTestOutcome {
            p1: state.probability(0, true)?,
            counts: None,
            qubits,
            gates_applied,
        }),
        Execution::Sampled { shots } => {
            let counts = state.sample(0, shots, rng)?;
            Ok(SwapTestOutcome {
                p1: counts.fraction_ones(),
                counts: Some(counts),
                qubits,
                gates_applied,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::Complex64;

    /// Basis-state check: result bit and ancilla cleanliness for input `i`.
    fn run_comparator(n: usize, threshold: usize, i: usize) -> (bool, bool) {
        let cmp = build_comparator(n, threshold).unwrap();
        let index = i << (n + 1);
        let mut s = QuantumState::from_basis_index(cmp.layout(), index).unwrap();
        s.apply_all(cmp.gates()).unwrap();
        let out = s.amplitudes().iter().position(|a| a.norm() > 0.5).unwrap();
        let result = out & 1 == 1;
        let ancillas = (out >> 1) & ((1 << n) - 1);
        let preserved = out >> (n + 1) == i;
        (result, ancillas == 0 && preserved)
    }

    #[test]
    fn comparator_single_qubit() {
        assert_eq!(run_comparator(1, 1, 0), (false, true));
        assert_eq!(run_comparator(1, 1, 1), (true, true));
    }

    #[test]
    fn comparator_three_qubits_threshold_five() {
        for i in 0..8 {
            assert_eq!(run_comparator(3, 5, i), (i >= 5, true), "input {i}");
        }
    }

    #[test]
    fn comparator_full_range_never_fires() {
        for i in 0..4 {
            assert_eq!(run_comparator(2, 4, i), (false, true));
        }
        assert!(build_comparator(2, 4).unwrap().gates().is_empty());
    }

    #[test]
    fn comparator_threshold_out_of_range() {
        assert!(matches!(build_comparator(2, 0), Err(Error::Configuration(_))));
        assert!(matches!(build_comparator(2, 5), Err(Error::Configuration(_))));
    }

    #[test]
    fn uniform_full_register() {
        let mut rng = SimRng::new(0);
        let prep = prepare_uniform(2, 4, Execution::Exact, &mut rng).unwrap();
        assert!((prep.success_probability - 1.0).abs() < 1e-12);
        for a in prep.state.amplitudes() {
            assert!((a - Complex64::new(0.5, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn uniform_five_of_eight() {
        let mut rng = SimRng::new(0);
        let prep = prepare_uniform(3, 5, Execution::Exact, &mut rng).unwrap();
        assert!((prep.success_probability - 5.0 / 8.0).abs() < 1e-12);
        let amp = 1.0 / 5f64.sqrt();
        for (i, a) in prep.state.amplitudes().iter().enumerate() {
            let expect = if i < 5 { amp } else { 0.0 };
            assert!((a.re - expect).abs() < 1e-12 && a.im.abs() < 1e-12, "{i}: {a}");
        }
    }

    #[test]
    fn uniform_single_branch() {
        let mut rng = SimRng::new(0);
        let prep = prepare_uniform(1, 1, Execution::Exact, &mut rng).unwrap();
        assert!((prep.success_probability - 0.5).abs() < 1e-12);
        assert!((prep.state.amplitude(0).re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_sampled_is_seed_deterministic() {
        let a = prepare_uniform(3, 3, Execution::Sampled { shots: 1 }, &mut SimRng::new(11)).unwrap();
        let b = prepare_uniform(3, 3, Execution::Sampled { shots: 1 }, &mut SimRng::new(11)).unwrap();
        assert_eq!(a.attempts, b.attempts);
        assert_eq!(a.state, b.state);
        assert!((a.success_probability - 3.0 / 8.0).abs() < 1e-12);
        let exact = prepare_uniform(3, 3, Execution::Exact, &mut SimRng::new(0)).unwrap();
        for (x, y) in a.state.amplitudes().iter().zip(exact.state.amplitudes()) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn encode_first_example_sample() {
        let e = encode_sample(&[1.0, 0.0, 1.0, 0.0], 0, 2, 2).unwrap();
        for basis in ["000011", "000110", "001011", "001110"] {
            let a = e.state.amplitude_of(basis).unwrap();
            assert!((a - Complex64::new(0.5, 0.0)).norm() < 1e-12, "{basis}: {a}");
        }
        assert!((e.state.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn encode_all_zero_sample() {
        let e = encode_sample(&[0.0; 4], 3, 2, 2).unwrap();
        for i in 0..4 {
            let basis = format!("11{i:02b}10");
            assert!((e.state.amplitude_of(&basis).unwrap().re - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn encode_real_values() {
        let e = encode_sample(&[0.6, 0.8], 0, 1, 1).unwrap();
        let r2 = 2f64.sqrt();
        // [sample][feature][flag][amp]
        assert!((e.state.amplitude_of("0011").unwrap().re - 0.6 / r2).abs() < 1e-12);
        assert!((e.state.amplitude_of("0010").unwrap().re - 0.8 / r2).abs() < 1e-12);
        assert!((e.state.amplitude_of("0111").unwrap().re - 0.8 / r2).abs() < 1e-12);
        assert!((e.state.amplitude_of("0110").unwrap().re - 0.6 / r2).abs() < 1e-12);
    }

    #[test]
    fn encode_rejects_out_of_domain() {
        assert!(matches!(
            encode_sample(&[1.5, 0.0], 0, 1, 1),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            encode_sample(&[f64::NAN], 0, 1, 1),
            Err(Error::Validation(_))
        ));
        assert!(encode_sample(&[0.0; 3], 0, 1, 1).is_err());
        assert!(encode_sample(&[0.0; 2], 2, 1, 1).is_err());
    }

    #[test]
    fn swap_last_two_is_an_involution() {
        let e = encode_sample(&[1.0, 0.0, 1.0, 0.0], 0, 2, 2).unwrap();
        let once = swap_last_two(&e);
        // |00⟩|00⟩ (amp-value)(flag=1): v_0 = 1 lands on the flag qubit
        assert!((once.amplitude_of("000011").unwrap().re - 0.5).abs() < 1e-12);
        assert!((once.amplitude_of("000101").unwrap().re - 0.5).abs() < 1e-12);
        let twice = swap_last_two(&EncodedSample {
            state: once,
            ..e.clone()
        });
        assert_eq!(twice, e.state);
    }

    #[test]
    fn swap_test_identical_and_orthogonal() {
        let mut rng = SimRng::new(0);
        let e = encode_sample(&[0.3, 0.9, 0.1], 1, 2, 2).unwrap();
        let out = swap_test(&e.state, &e.state, Execution::Exact, &mut rng).unwrap();
        assert!(out.p1.abs() < 1e-12);

        let a = QuantumState::new(vec![Register::new("x", 2)], "01").unwrap();
        let b = QuantumState::new(vec![Register::new("x", 2)], "10").unwrap();
        let out = swap_test(&a, &b, Execution::Exact, &mut rng).unwrap();
        assert!((out.p1 - 0.5).abs() < 1e-12);
        assert_eq!(out.qubits, 5);
    }
}
