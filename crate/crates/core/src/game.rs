//! The game model: instances, load vectors, the adversary's attack and the
//! resulting player costs.
//!
//! Players are interchangeable, so a strategy profile is represented by its
//! load vector alone. Resources are addressed by 0-based index into the
//! coefficient list, which is kept sorted non-decreasing.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::{from_usize, ExtendedRational, Rational};

/// 0-based resource index into [`Instance::coefficients`].
pub type Resource = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("an instance needs at least one resource")]
    EmptyResources,
    #[error("the adversary budget must be positive, got {0}")]
    NonPositiveBudget(Rational),
    #[error("resource coefficient {value} at position {index} is negative")]
    NegativeCoefficient { index: usize, value: Rational },
    #[error("an instance needs at least one player")]
    NonPositivePlayers,
    #[error("no player is present")]
    EmptyGame,
    #[error("resource {0} carries no player")]
    UnoccupiedResource(Resource),
    #[error("deviation source and target are both resource {0}")]
    SameResource(Resource),
    #[error("deviation source {0} carries no player")]
    EmptySource(Resource),
    #[error("resource index {index} out of range for {resources} resources")]
    ResourceOutOfRange { index: Resource, resources: usize },
    #[error("load vector has {actual} entries, instance has {expected} resources")]
    DimensionMismatch { expected: usize, actual: usize },
}

/// A game: `players` interchangeable leaders, linear per-unit costs on each
/// resource, and an adversary with a positive budget.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    players: usize,
    coefficients: Vec<Rational>,
    budget: Rational,
}

impl Instance {
    /// Validates and canonicalizes: coefficients are stable-sorted
    /// non-decreasing and the original resource order is dropped.
    pub fn new(
        coefficients: Vec<Rational>,
        players: usize,
        budget: Rational,
    ) -> Result<Self, GameError> {
        if coefficients.is_empty() {
            return Err(GameError::EmptyResources);
        }
        if players == 0 {
            return Err(GameError::NonPositivePlayers);
        }
        if !budget.is_positive() {
            return Err(GameError::NonPositiveBudget(budget));
        }
        if let Some((index, value)) = coefficients
            .iter()
            .enumerate()
            .find(|(_, a)| a.is_negative())
        {
            return Err(GameError::NegativeCoefficient {
                index,
                value: value.clone(),
            });
        }
        let mut coefficients = coefficients;
        coefficients.sort();
        Ok(Instance {
            players,
            coefficients,
            budget,
        })
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn resources(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, r: Resource) -> &Rational {
        &self.coefficients[r]
    }

    pub fn budget(&self) -> &Rational {
        &self.budget
    }

    /// Same resources and budget with a different player count.
    pub fn with_players(&self, players: usize) -> Result<Self, GameError> {
        Instance::new(self.coefficients.clone(), players, self.budget.clone())
    }

    /// Multiplies every coefficient and the budget by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self, GameError> {
        Instance::new(
            self.coefficients.iter().map(|a| a * factor).collect(),
            self.players,
            &self.budget * factor,
        )
    }

    fn check_loads(&self, loads: &LoadVector) -> Result<(), GameError> {
        if loads.len() != self.resources() {
            return Err(GameError::DimensionMismatch {
                expected: self.resources(),
                actual: loads.len(),
            });
        }
        Ok(())
    }

    fn check_resource(&self, r: Resource) -> Result<(), GameError> {
        if r >= self.resources() {
            return Err(GameError::ResourceOutOfRange {
                index: r,
                resources: self.resources(),
            });
        }
        Ok(())
    }
}

/// Number of players on each resource.
///
/// During incremental solving the entries sum to the number of players added
/// so far; everywhere else they sum to the instance's player count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoadVector(Vec<usize>);

impl LoadVector {
    pub fn new(loads: Vec<usize>) -> Self {
        LoadVector(loads)
    }

    pub fn zeros(resources: usize) -> Self {
        LoadVector(vec![0; resources])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, r: Resource) -> usize {
        self.0[r]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_load(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Resources carrying the maximum load.
    pub fn argmax(&self) -> Vec<Resource> {
        let max = self.max_load();
        (0..self.len()).filter(|&r| self.0[r] == max).collect()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Adds one player to `to`, after removing one from `from` if given.
    pub fn moved(&self, from: Option<Resource>, to: Resource) -> LoadVector {
        let mut next = self.clone();
        next.apply(from, to);
        next
    }

    pub(crate) fn apply(&mut self, from: Option<Resource>, to: Resource) {
        if let Some(u) = from {
            self.0[u] -= 1;
        }
        self.0[to] += 1;
    }
}

impl From<Vec<usize>> for LoadVector {
    fn from(value: Vec<usize>) -> Self {
        LoadVector(value)
    }
}

impl fmt::Display for LoadVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// The adversary's budget split: `B / |argmax|` on every maximum-load
/// resource and nothing elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackVector(Vec<Rational>);

impl AttackVector {
    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, r: Resource) -> &Rational {
        &self.0[r]
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }
}

pub fn attack(loads: &LoadVector, budget: &Rational) -> Result<AttackVector, GameError> {
    if loads.total() == 0 {
        return Err(GameError::EmptyGame);
    }
    let max = loads.max_load();
    let share = budget / from_usize(loads.argmax().len());
    Ok(AttackVector(
        loads
            .as_slice()
            .iter()
            .map(|&l| {
                if l == max {
                    share.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    ))
}

/// Cost evaluation for one load vector.
///
/// Caches the maximum load and how many resources sit at `M` and `M - 1`,
/// which is all the adversary's response depends on, so every cost and
/// every hypothetical single-player move is evaluated without rebuilding
/// the load vector.
#[derive(Debug, Clone)]
pub struct CostView<'a> {
    instance: &'a Instance,
    loads: &'a [usize],
    max: usize,
    at_max: usize,
    below_max: usize,
}

impl<'a> CostView<'a> {
    pub fn new(instance: &'a Instance, loads: &'a LoadVector) -> Result<Self, GameError> {
        instance.check_loads(loads)?;
        Ok(Self::unchecked(instance, loads.as_slice()))
    }

    pub(crate) fn unchecked(instance: &'a Instance, loads: &'a [usize]) -> Self {
        let max = loads.iter().copied().max().unwrap_or(0);
        let at_max = loads.iter().filter(|&&l| l == max).count();
        let below_max = if max == 0 {
            0
        } else {
            loads.iter().filter(|&&l| l + 1 == max).count()
        };
        CostView {
            instance,
            loads,
            max,
            at_max,
            below_max,
        }
    }

    pub fn instance(&self) -> &'a Instance {
        self.instance
    }

    pub fn load(&self, r: Resource) -> usize {
        self.loads[r]
    }

    pub fn resources(&self) -> usize {
        self.loads.len()
    }

    pub fn max_load(&self) -> usize {
        self.max
    }

    pub fn is_occupied(&self, r: Resource) -> bool {
        self.loads[r] > 0
    }

    /// `a_r * l_r + kappa_r`, the cost of every player on `r`.
    pub fn cost(&self, r: Resource) -> Rational {
        let congestion = self.instance.coefficient(r) * from_usize(self.loads[r]);
        if self.loads[r] == self.max && self.max > 0 {
            congestion + self.instance.budget() / from_usize(self.at_max)
        } else {
            congestion
        }
    }

    /// Cost on `to` after one player leaves `from` (or a new player enters
    /// when `from` is `None`) and joins `to`.
    pub fn deviation(&self, from: Option<Resource>, to: Resource) -> Rational {
        let target = self.loads[to] + 1;
        let congestion = self.instance.coefficient(to) * from_usize(target);
        let budget = self.instance.budget();
        let source_at_max = from.is_some_and(|u| self.loads[u] == self.max);
        let share = if target > self.max {
            Some(1)
        } else if target == self.max {
            Some(self.at_max - usize::from(source_at_max) + 1)
        } else if source_at_max && self.at_max == 1 && target + 1 == self.max {
            // the lone maximum drops to M - 1 and ties with the target
            Some(self.below_max + 2)
        } else {
            None
        };
        match share {
            Some(p) => congestion + budget / from_usize(p),
            None => congestion,
        }
    }

    /// Smallest cost reachable by a player on `r` moving elsewhere, with the
    /// smallest target index among ties. `None` when `r` is the only resource.
    pub fn best_alternative(&self, r: Resource) -> Option<(Resource, Rational)> {
        let mut best: Option<(Resource, Rational)> = None;
        for t in (0..self.resources()).filter(|&t| t != r) {
            let cost = self.deviation(Some(r), t);
            if best.as_ref().is_none_or(|(_, b)| cost < *b) {
                best = Some((t, cost));
            }
        }
        best
    }
}

pub fn resource_cost(
    instance: &Instance,
    loads: &LoadVector,
    r: Resource,
) -> Result<Rational, GameError> {
    let view = CostView::new(instance, loads)?;
    instance.check_resource(r)?;
    if !view.is_occupied(r) {
        return Err(GameError::UnoccupiedResource(r));
    }
    Ok(view.cost(r))
}

/// Cost a player would pay on `to` after a unilateral move from `from`
/// (`None`: a player entering the game). Depends only on the loads.
pub fn deviation_cost(
    instance: &Instance,
    loads: &LoadVector,
    from: Option<Resource>,
    to: Resource,
) -> Result<Rational, GameError> {
    let view = CostView::new(instance, loads)?;
    instance.check_resource(to)?;
    if let Some(u) = from {
        instance.check_resource(u)?;
        if u == to {
            return Err(GameError::SameResource(u));
        }
        if !view.is_occupied(u) {
            return Err(GameError::EmptySource(u));
        }
    }
    Ok(view.deviation(from, to))
}

/// A unilateral move `from -> to` with the mover's cost before and after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deviation {
    pub from: Resource,
    pub to: Resource,
    pub current_cost: Rational,
    pub deviation_cost: Rational,
}

impl Deviation {
    pub fn ratio(&self) -> ExtendedRational {
        ExtendedRational::quotient(&self.current_cost, &self.deviation_cost)
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r{} -> r{}: cost {} vs {} after moving",
            self.from + 1,
            self.to + 1,
            self.current_cost,
            self.deviation_cost
        )
    }
}

/// The deviation attaining the largest cost ratio: for each occupied
/// resource its best alternative, then the source with the largest ratio
/// (smallest index on ties). `None` when no resource has an alternative.
pub fn binding_deviation(
    instance: &Instance,
    loads: &LoadVector,
) -> Result<Option<Deviation>, GameError> {
    let view = CostView::new(instance, loads)?;
    if loads.total() == 0 {
        return Err(GameError::EmptyGame);
    }
    let mut binding: Option<(ExtendedRational, Deviation)> = None;
    for r in (0..view.resources()).filter(|&r| view.is_occupied(r)) {
        let Some((to, alternative)) = view.best_alternative(r) else {
            continue;
        };
        let candidate = Deviation {
            from: r,
            to,
            current_cost: view.cost(r),
            deviation_cost: alternative,
        };
        let ratio = candidate.ratio();
        if binding.as_ref().is_none_or(|(best, _)| ratio > *best) {
            binding = Some((ratio, candidate));
        }
    }
    Ok(binding.map(|(_, d)| d))
}

/// Smallest `alpha` for which no player has an `alpha`-improving move.
///
/// This is the raw maximum ratio (it can be below 1); a single resource
/// admits no move and yields 1.
pub fn needed_alpha(
    instance: &Instance,
    loads: &LoadVector,
) -> Result<ExtendedRational, GameError> {
    Ok(match binding_deviation(instance, loads)? {
        Some(d) => d.ratio(),
        None => ExtendedRational::Finite(from_usize(1)),
    })
}

pub fn is_alpha_pne(
    instance: &Instance,
    loads: &LoadVector,
    alpha: &Rational,
) -> Result<bool, GameError> {
    Ok(needed_alpha(instance, loads)?.le_rational(alpha))
}
