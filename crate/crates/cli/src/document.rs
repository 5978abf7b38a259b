//! JSON documents exchanged with the command line. Rationals travel as
//! strings (`"7/6"`) so no value ever passes through a float.

use congestion_core::kapprox::{EventKind, SolveTrace};
use congestion_core::rational::{format_rational, parse_rational, ParseRationalError};
use congestion_core::{Deviation, ExtendedRational, GameError, Instance, LoadVector, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {source}")]
    Rational {
        field: String,
        source: ParseRationalError,
    },
    #[error("invalid instance: {0}")]
    Instance(#[from] GameError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub players: usize,
    pub budget: String,
    pub coefficients: Vec<String>,
}

fn field_rational(field: &str, text: &str) -> Result<Rational, DocumentError> {
    parse_rational(text).map_err(|source| DocumentError::Rational {
        field: field.to_owned(),
        source,
    })
}

impl InstanceDocument {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceDocument {
            name: None,
            description: None,
            players: inst.players(),
            budget: format_rational(inst.budget()),
            coefficients: inst.coefficients().iter().map(format_rational).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_instance(&self) -> Result<Instance, DocumentError> {
        let budget = field_rational("budget", &self.budget)?;
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| field_rational(&format!("coefficients[{i}]"), c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Instance::new(coefficients, self.players, budget)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKindDocument {
    Added,
    Deviation,
}

/// One trace step; resources are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceEventDocument {
    pub kind: EventKindDocument,
    pub round: usize,
    pub from: Option<usize>,
    pub to: usize,
    /// `null` for an entering player.
    pub cost_before: Option<String>,
    pub cost_after: String,
}

impl TraceEventDocument {
    pub fn from_trace(trace: &SolveTrace) -> Vec<Self> {
        trace
            .events
            .iter()
            .map(|e| TraceEventDocument {
                kind: match e.kind {
                    EventKind::PlayerAdded => EventKindDocument::Added,
                    EventKind::Deviation => EventKindDocument::Deviation,
                },
                round: e.round,
                from: e.from.map(|r| r + 1),
                to: e.to + 1,
                cost_before: e.cost_before.finite().map(format_rational),
                cost_after: format_rational(&e.cost_after),
            })
            .collect()
    }
}

/// Loads obtained by applying `events` to an empty profile over `resources`.
/// `None` if an event names a resource out of range or leaves an empty one.
pub fn replay_trace(events: &[TraceEventDocument], resources: usize) -> Option<Vec<usize>> {
    let mut loads = vec![0usize; resources];
    for e in events {
        if let Some(from) = e.from {
            let slot = loads.get_mut(from.checked_sub(1)?)?;
            *slot = slot.checked_sub(1)?;
        }
        *loads.get_mut(e.to.checked_sub(1)?)? += 1;
    }
    Some(loads)
}

/// The most profitable move, resources numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviationDocument {
    pub from: usize,
    pub to: usize,
    pub cost: String,
    pub cost_after_move: String,
}

impl From<&Deviation> for DeviationDocument {
    fn from(d: &Deviation) -> Self {
        DeviationDocument {
            from: d.from + 1,
            to: d.to + 1,
            cost: format_rational(&d.current_cost),
            cost_after_move: format_rational(&d.deviation_cost),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub solver: String,
    pub loads: Vec<usize>,
    /// Factor the solver was asked for or proved optimal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    /// Smallest factor the returned loads satisfy; `"inf"` if none does.
    pub needed_alpha: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binding: Option<DeviationDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_equilibrium: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub additive_epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub additive_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_round_deviations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEventDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ResultDocument {
    pub fn new(solver: &str, loads: &LoadVector, needed_alpha: &ExtendedRational) -> Self {
        ResultDocument {
            solver: solver.to_owned(),
            loads: loads.as_slice().to_vec(),
            alpha: None,
            needed_alpha: needed_alpha.to_string(),
            binding: None,
            exact_equilibrium: None,
            additive_epsilon: None,
            additive_witness: None,
            max_round_deviations: None,
            trace: None,
            elapsed_ms: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn alpha_value(&self) -> Option<Result<Rational, DocumentError>> {
        self.alpha.as_deref().map(|a| field_rational("alpha", a))
    }

    pub fn needed_alpha_value(&self) -> Result<ExtendedRational, DocumentError> {
        if self.needed_alpha == "inf" {
            return Ok(ExtendedRational::Infinite);
        }
        field_rational("needed_alpha", &self.needed_alpha).map(ExtendedRational::Finite)
    }
}

/// Outcome of checking a given profile against a given factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyDocument {
    pub holds: bool,
    pub loads: Vec<usize>,
    pub alpha: String,
    pub needed_alpha: String,
    /// The move with the largest cost ratio; improving whenever `holds` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binding: Option<DeviationDocument>,
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    text.expect("documents always serialize")
}
