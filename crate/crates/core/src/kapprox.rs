//! Incremental construction of an `alpha`-approximate equilibrium.
//!
//! Players enter one at a time on a best response. After each entry, while
//! some player has an `alpha`-improving move, a player on the most expensive
//! unhappy resource (largest index on ties) moves to a best response
//! (smallest index on ties). For `alpha >= K` every round settles after at
//! most two moves per present player; the solver enforces that as a guard.

use num_traits::One;
use thiserror::Error;

use crate::constant::k_upper;
use crate::game::{CostView, GameError, Instance, LoadVector, Resource};
use crate::rational::{ExtendedRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("approximation factor {0} is below 1")]
    InvalidAlpha(Rational),
    #[error("round {round} needed more than {bound} moves")]
    GuardExceeded { round: usize, bound: usize },
    #[error("no player has an improving move")]
    NoUnhappyPlayers,
    #[error("loads {0} are not non-increasing")]
    LoadsNotDecreasing(LoadVector),
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GuardMode {
    /// At most `2k` moves in round `k`.
    Strict,
    /// At most `2k + 3m + 3` moves in round `k`.
    #[default]
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    alpha: Rational,
    guard: GuardMode,
}

impl SolverConfig {
    pub fn new(alpha: Rational, guard: GuardMode) -> Result<Self, SolveError> {
        if alpha < Rational::one() {
            return Err(SolveError::InvalidAlpha(alpha));
        }
        Ok(SolverConfig { alpha, guard })
    }

    /// `alpha` = `K` rounded up at `precision` decimal digits.
    pub fn k_approximate(precision: u32, guard: GuardMode) -> Self {
        SolverConfig {
            alpha: k_upper(precision),
            guard,
        }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn guard(&self) -> GuardMode {
        self.guard
    }

    pub fn move_bound(&self, round: usize, resources: usize) -> usize {
        match self.guard {
            GuardMode::Strict => 2 * round,
            GuardMode::Lenient => 2 * round + 3 * resources + 3,
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig::k_approximate(12, GuardMode::Lenient)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    PlayerAdded,
    Deviation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub kind: EventKind,
    /// 1-based round, i.e. the number of players present.
    pub round: usize,
    pub from: Option<Resource>,
    pub to: Resource,
    /// `+∞` for an entering player.
    pub cost_before: ExtendedRational,
    pub cost_after: Rational,
    pub loads_after: LoadVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolveTrace {
    pub events: Vec<TraceEvent>,
    /// Moves made in each round; entry `k - 1` belongs to round `k`.
    pub per_round_deviations: Vec<usize>,
}

impl SolveTrace {
    /// Re-applies every event to an empty profile with `resources` entries.
    pub fn replay(&self, resources: usize) -> LoadVector {
        let mut loads = LoadVector::zeros(resources);
        for e in &self.events {
            loads.apply(e.from, e.to);
        }
        loads
    }

    pub fn deviations(&self) -> impl Iterator<Item = &TraceEvent> {
        self.events
            .iter()
            .filter(|e| e.kind == EventKind::Deviation)
    }

    pub fn max_round_deviations(&self) -> usize {
        self.per_round_deviations.iter().copied().max().unwrap_or(0)
    }
}

fn best_response_in(view: &CostView<'_>, from: Option<Resource>) -> (Resource, Rational) {
    let mut best: Option<(Resource, Rational)> = None;
    for r in 0..view.resources() {
        let cost = if from == Some(r) {
            view.cost(r)
        } else {
            view.deviation(from, r)
        };
        if best.as_ref().is_none_or(|(_, b)| cost < *b) {
            best = Some((r, cost));
        }
    }
    best.expect("instances have at least one resource")
}

fn unhappy_in(view: &CostView<'_>, alpha: &Rational) -> Vec<(Resource, Rational)> {
    (0..view.resources())
        .filter(|&r| view.is_occupied(r))
        .filter_map(|r| {
            let cost = view.cost(r);
            let (_, alternative) = view.best_alternative(r)?;
            (cost > alpha * alternative).then_some((r, cost))
        })
        .collect()
}

fn select_in(unhappy: &[(Resource, Rational)]) -> Option<Resource> {
    let mut chosen: Option<&(Resource, Rational)> = None;
    for entry in unhappy {
        // ascending indices, so `>=` keeps the largest index among ties
        if chosen.is_none_or(|(_, c)| entry.1 >= *c) {
            chosen = Some(entry);
        }
    }
    chosen.map(|(r, _)| *r)
}

/// Cheapest resource for a player leaving `from` (or entering, for `None`),
/// where staying put is priced at the current cost. Smallest index on ties.
pub fn best_response(
    instance: &Instance,
    loads: &LoadVector,
    from: Option<Resource>,
) -> Result<Resource, GameError> {
    let view = CostView::new(instance, loads)?;
    if let Some(u) = from {
        if u >= view.resources() {
            return Err(GameError::ResourceOutOfRange {
                index: u,
                resources: view.resources(),
            });
        }
        if !view.is_occupied(u) {
            return Err(GameError::EmptySource(u));
        }
    }
    Ok(best_response_in(&view, from).0)
}

/// Occupied resources whose players have an `alpha`-improving move, ascending.
pub fn unhappy_set(
    instance: &Instance,
    loads: &LoadVector,
    alpha: &Rational,
) -> Result<Vec<Resource>, GameError> {
    let view = CostView::new(instance, loads)?;
    Ok(unhappy_in(&view, alpha)
        .into_iter()
        .map(|(r, _)| r)
        .collect())
}

/// The unhappy resource with maximum cost, largest index on ties.
pub fn select_deviator(
    instance: &Instance,
    loads: &LoadVector,
    alpha: &Rational,
) -> Result<Resource, SolveError> {
    let view = CostView::new(instance, loads)?;
    select_in(&unhappy_in(&view, alpha)).ok_or(SolveError::NoUnhappyPlayers)
}

/// Runs the incremental algorithm to completion.
///
/// On success the returned loads are an `alpha`-approximate equilibrium,
/// non-increasing along the resources, and equal to the trace's replay.
pub fn solve(
    instance: &Instance,
    config: &SolverConfig,
) -> Result<(LoadVector, SolveTrace), SolveError> {
    let m = instance.resources();
    let alpha = config.alpha();
    let mut loads = LoadVector::zeros(m);
    let mut trace = SolveTrace::default();

    for round in 1..=instance.players() {
        let (to, cost_after) = {
            let view = CostView::unchecked(instance, loads.as_slice());
            best_response_in(&view, None)
        };
        loads.apply(None, to);
        push_event(
            &mut trace,
            TraceEvent {
                kind: EventKind::PlayerAdded,
                round,
                from: None,
                to,
                cost_before: ExtendedRational::Infinite,
                cost_after,
                loads_after: loads.clone(),
            },
        )?;

        let bound = config.move_bound(round, m);
        let mut moves = 0usize;
        loop {
            let (from, to, cost_before, cost_after) = {
                let view = CostView::unchecked(instance, loads.as_slice());
                let Some(from) = select_in(&unhappy_in(&view, alpha)) else {
                    break;
                };
                let (to, cost_after) = best_response_in(&view, Some(from));
                (from, to, view.cost(from), cost_after)
            };
            moves += 1;
            if moves > bound {
                return Err(SolveError::GuardExceeded { round, bound });
            }
            debug_assert!(to != from && cost_before > alpha * &cost_after);
            loads.apply(Some(from), to);
            push_event(
                &mut trace,
                TraceEvent {
                    kind: EventKind::Deviation,
                    round,
                    from: Some(from),
                    to,
                    cost_before: ExtendedRational::Finite(cost_before),
                    cost_after,
                    loads_after: loads.clone(),
                },
            )?;
        }
        trace.per_round_deviations.push(moves);
    }
    debug_assert_eq!(loads.total(), instance.players());
    Ok((loads, trace))
}

fn push_event(trace: &mut SolveTrace, event: TraceEvent) -> Result<(), SolveError> {
    if !event.loads_after.is_non_increasing() {
        return Err(SolveError::LoadsNotDecreasing(event.loads_after));
    }
    trace.events.push(event);
    Ok(())
}
