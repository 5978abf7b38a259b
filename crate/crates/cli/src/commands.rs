//! The subcommands as library functions; `main` only parses arguments and
//! prints.

use std::fs;
use std::path::Path;
use std::time::Instant;

use congestion_core::kapprox::{solve, GuardMode, SolveError, SolverConfig};
use congestion_core::opt::{best_alpha as optimum, OptError};
use congestion_core::oracle::{oracle_best_additive_epsilon, oracle_best_alpha};
use congestion_core::rational::{format_rational, parse_rational, ParseRationalError};
use congestion_core::{
    binding_deviation, needed_alpha, ExtendedRational, GameError, Instance, LoadVector, Rational,
};
use num_traits::One;
use thiserror::Error;

use crate::document::{
    DeviationDocument, DocumentError, InstanceDocument, ResultDocument, TraceEventDocument,
    VerifyDocument,
};

/// Largest instance `best-alpha --oracle-check` will enumerate.
pub const ORACLE_CHECK_MAX_PLAYERS: usize = 12;
pub const ORACLE_CHECK_MAX_RESOURCES: usize = 5;

pub mod exit {
    pub const OK: i32 = 0;
    pub const NOT_EQUILIBRIUM: i32 = 1;
    pub const BAD_INPUT: i32 = 2;
    pub const GUARD_EXCEEDED: i32 = 3;
    pub const ORACLE_MISMATCH: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error("{0}")]
    Usage(String),
    #[error("{argument}: {source}")]
    Rational {
        argument: &'static str,
        source: ParseRationalError,
    },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Opt(#[from] OptError),
    #[error("solver found {solver} but exhaustive search found {oracle}")]
    OracleMismatch { solver: String, oracle: String },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. }
            | CliError::Document { .. }
            | CliError::Usage(_)
            | CliError::Rational { .. }
            | CliError::Game(_) => exit::BAD_INPUT,
            CliError::Solve(SolveError::GuardExceeded { .. }) => exit::GUARD_EXCEEDED,
            CliError::OracleMismatch { .. } => exit::ORACLE_MISMATCH,
            CliError::Solve(_) | CliError::Opt(_) | CliError::Write { .. } => exit::INTERNAL,
        }
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: shown.clone(),
        source,
    })?;
    let document = |source| CliError::Document {
        path: shown.clone(),
        source,
    };
    InstanceDocument::parse(&text)
        .and_then(|d| d.to_instance())
        .map_err(document)
}

pub fn parse_alpha(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|source| CliError::Rational {
        argument: "alpha",
        source,
    })
}

/// Accepts `2,2,1`, `2 2 1` or `[2,2,1]`.
pub fn parse_loads(text: &str) -> Result<Vec<usize>, CliError> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse::<usize>().map_err(|_| {
                CliError::Usage(format!("loads: `{part}` is not a non-negative integer"))
            })
        })
        .collect()
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn needed(inst: &Instance, loads: &LoadVector) -> Result<ExtendedRational, CliError> {
    Ok(needed_alpha(inst, loads)?.at_least_one())
}

/// Incremental solver at `K` rounded up to `precision` digits.
pub fn solve_k(
    inst: &Instance,
    precision: u32,
    guard: GuardMode,
    with_trace: bool,
) -> Result<ResultDocument, CliError> {
    let start = Instant::now();
    let config = SolverConfig::k_approximate(precision, guard);
    let (loads, trace) = solve(inst, &config)?;
    let mut doc = ResultDocument::new("k-approx", &loads, &needed(inst, &loads)?);
    doc.alpha = Some(format_rational(config.alpha()));
    doc.max_round_deviations = Some(trace.max_round_deviations());
    if with_trace {
        doc.trace = Some(TraceEventDocument::from_trace(&trace));
    }
    doc.elapsed_ms = Some(elapsed_ms(start));
    Ok(doc)
}

/// Optimal factor; with `oracle_check` the answer is compared against
/// exhaustive search.
pub fn best_alpha(inst: &Instance, oracle_check: bool) -> Result<ResultDocument, CliError> {
    if oracle_check
        && (inst.players() > ORACLE_CHECK_MAX_PLAYERS
            || inst.resources() > ORACLE_CHECK_MAX_RESOURCES)
    {
        return Err(CliError::Usage(format!(
            "--oracle-check needs at most {ORACLE_CHECK_MAX_PLAYERS} players and {ORACLE_CHECK_MAX_RESOURCES} resources"
        )));
    }
    let start = Instant::now();
    let result = optimum(inst)?;
    if oracle_check {
        let (oracle, _) = oracle_best_alpha(inst);
        if oracle != ExtendedRational::Finite(result.alpha_star.clone()) {
            return Err(CliError::OracleMismatch {
                solver: format_rational(&result.alpha_star),
                oracle: oracle.to_string(),
            });
        }
    }
    let mut doc = ResultDocument::new("optimal", &result.witness, &needed(inst, &result.witness)?);
    doc.alpha = Some(format_rational(&result.alpha_star));
    doc.binding = result.binding.as_ref().map(DeviationDocument::from);
    doc.elapsed_ms = Some(elapsed_ms(start));
    Ok(doc)
}

/// Exhaustive search over non-increasing profiles.
pub fn oracle(inst: &Instance) -> Result<ResultDocument, CliError> {
    let start = Instant::now();
    let (alpha, witness) = oracle_best_alpha(inst);
    let (epsilon, additive_witness) = oracle_best_additive_epsilon(inst);
    let mut doc = ResultDocument::new("oracle", &witness, &alpha);
    doc.alpha = Some(alpha.to_string());
    doc.exact_equilibrium = Some(alpha.le_rational(&Rational::one()));
    doc.binding = binding_deviation(inst, &witness)?
        .as_ref()
        .map(DeviationDocument::from);
    doc.additive_epsilon = Some(format_rational(&epsilon));
    doc.additive_witness = Some(additive_witness.into_inner());
    doc.elapsed_ms = Some(elapsed_ms(start));
    Ok(doc)
}

/// Checks `loads` against `alpha`; `holds` decides the exit status.
pub fn verify(
    inst: &Instance,
    loads: Vec<usize>,
    alpha: &Rational,
) -> Result<VerifyDocument, CliError> {
    if loads.len() != inst.resources() {
        return Err(CliError::Usage(format!(
            "loads: expected {} entries, got {}",
            inst.resources(),
            loads.len()
        )));
    }
    let total: usize = loads.iter().sum();
    if total != inst.players() {
        return Err(CliError::Usage(format!(
            "loads: entries sum to {total}, the instance has {} players",
            inst.players()
        )));
    }
    let loads = LoadVector::new(loads);
    let needed = needed_alpha(inst, &loads)?;
    let binding = binding_deviation(inst, &loads)?;
    Ok(VerifyDocument {
        holds: needed.le_rational(alpha),
        loads: loads.into_inner(),
        alpha: format_rational(alpha),
        needed_alpha: needed.to_string(),
        binding: binding.as_ref().map(DeviationDocument::from),
    })
}
