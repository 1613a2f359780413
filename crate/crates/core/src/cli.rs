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

//! Command-line entry points: `run`, `classical` and `compare`.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

use crate::classical::relief_run;
use crate::error::Error;
use crate::io::{load_dataset, load_replay, save_report};
use crate::quantum::{self, Mode, RunConfig};
use crate::report::{Comparison, Policy, RunReport};
use crate::sim::SimRng;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qrelief", version, about = "Quantum and classical Relief feature selection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum Relief in exact, sampled or replay mode.
    Run(QuantumArgs),
    /// Classical Relief baseline.
    Classical(CommonArgs),
    /// Run both pipelines and summarize their agreement.
    Compare(QuantumArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long)]
    dataset: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    tau: f64,
    /// Iteration count T (default: number of samples).
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long, value_enum, default_value_t = PolicyArg::RoundRobin)]
    policy: PolicyArg,
    /// Seed for shot sampling and random sample selection; drawn from the
    /// OS when omitted and needed.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct QuantumArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Recorded probabilities for replay mode.
    #[arg(long)]
    replay: Option<PathBuf>,
    #[arg(long, default_value_t = 8192)]
    shots: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
    Replay,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    RoundRobin,
    Random,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Sampled => Mode::Sampled,
            ModeArg::Replay => Mode::Replay,
        }
    }
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::RoundRobin => Policy::RoundRobin,
            PolicyArg::Random => Policy::Random,
        }
    }
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn resolve_seed(seed: Option<u64>, needed: bool) -> u64 {
    match seed {
        Some(s) => s,
        None if needed => SimRng::from_entropy().seed(),
        None => 0,
    }
}

fn emit(report_path: &Option<PathBuf>, json: String, out: &mut dyn Write) -> Result<(), Failure> {
    match report_path {
        Some(p) => std::fs::write(p, json + "\n").map_err(|source| {
            Failure::Run(Error::Io {
                path: p.clone(),
                source,
            })
        }),
        None => {
            let _ = writeln!(out, "{json}");
            Ok(())
        }
    }
}

fn quantum_report(args: &QuantumArgs) -> Result<(crate::Dataset, RunReport), Failure> {
    let c = &args.common;
    let dataset = load_dataset(&c.dataset)?;
    let mode: Mode = args.mode.into();
    let policy: Policy = c.policy.into();
    let replay = match (mode, &args.replay) {
        (Mode::Replay, Some(p)) => Some(load_replay(p)?),
        (Mode::Replay, None) => return Err(Failure::Usage("--mode replay requires --replay".into())),
        _ => None,
    };
    let cfg = RunConfig {
        iterations: c.iterations.unwrap_or(dataset.len()),
        tau: c.tau,
        mode,
        shots: args.shots,
        seed: resolve_seed(c.seed, mode == Mode::Sampled || policy == Policy::Random),
        policy,
    };
    if let Err(e) = cfg.validate() {
        return Err(Failure::Usage(e.to_string()));
    }
    let report = quantum::run(&dataset, &cfg, replay.as_ref())?;
    Ok((dataset, report))
}

fn classical_report(c: &CommonArgs, dataset: &crate::Dataset) -> Result<RunReport, Failure> {
    let policy: Policy = c.policy.into();
    let iterations = c.iterations.unwrap_or(dataset.len());
    if iterations == 0 {
        return Err(Failure::Usage("--iterations must be at least 1".into()));
    }
    let seed = resolve_seed(c.seed, policy == Policy::Random);
    Ok(relief_run(dataset, iterations, c.tau, policy, seed)?)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Run(args) => {
            let (_, report) = quantum_report(&args)?;
            if let Some(p) = &args.common.report {
                save_report(&report, p)?;
                let _ = writeln!(out, "selected: {:?}", report.selected_names);
                Ok(())
            } else {
                emit(&None, report.to_json(), out)
            }
        }
        Command::Classical(c) => {
            let dataset = load_dataset(&c.dataset)?;
            let report = classical_report(&c, &dataset)?;
            if let Some(p) = &c.report {
                save_report(&report, p)?;
                let _ = writeln!(out, "selected: {:?}", report.selected_names);
                Ok(())
            } else {
                emit(&None, report.to_json(), out)
            }
        }
        Command::Compare(args) => {
            let (dataset, quantum) = quantum_report(&args)?;
            let classical = classical_report(&args.common, &dataset)?;
            let cmp = Comparison::new(&quantum, &classical);
            let json = serde_json::to_string_pretty(&cmp).expect("comparison serializes");
            emit(&args.common.report, json, out)
        }
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code. Output goes to `out`, diagnostics to
/// `err`.
pub fn main_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{e}");
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_data_error() {
                EXIT_DATA
            } else {
                EXIT_RUNTIME
            }
        }
    }
}
