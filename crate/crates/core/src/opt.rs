//! Instance-optimal approximation factor.
//!
//! For `alpha <= 2` it is enough to look at load vectors that are
//! non-increasing along the (sorted) resources. Such a vector splits into a
//! block at the maximum load `M`, a block at `M - 1`, a block at `M - 2` and a
//! tail below `M - 2`; together with the cheapest alternative costs for
//! players at and below `M` (the "best alternative" values), that shape
//! pins down the equilibrium conditions. Feasibility of one shape is decided
//! by a bounded fill of the tail, and the optimum is the smallest candidate
//! ratio of two attainable costs that is feasible.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::constant::k_upper;
use crate::game::{binding_deviation, needed_alpha, Deviation, GameError, Instance, LoadVector};
use crate::rational::{ceil_int, floor_int, from_usize, ExtendedRational, Rational};

/// Digits of the rational upper bound on `K` that caps every search.
pub const CEILING_PRECISION: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptError {
    #[error("no candidate factor up to the ceiling is feasible")]
    NoFeasibleAlpha,
    #[error("witness {} for factor {} needs {}", .0.witness, .0.alpha, .0.needed)]
    UnsoundWitness(Box<UnsoundWitness>),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A constructed vector that fails the factor it was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsoundWitness {
    pub alpha: Rational,
    pub witness: LoadVector,
    pub needed: ExtendedRational,
}

/// Block structure of a non-increasing load vector that is not constant.
///
/// With 0-based half-open ranges: `[0, peak_end)` carries `max_load`,
/// `[peak_end, second_end)` carries `max_load - 1`, `[second_end, third_end)`
/// carries `max_load - 2`, and `[third_end, m)` carries at most
/// `max_load - 3`. In 1-based resource numbering the last maximum-load
/// resource is `peak_end`, the first resource below `M - 1` is
/// `second_end + 1` and the first below `M - 2` is `third_end + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub max_load: usize,
    pub peak_end: usize,
    pub second_end: usize,
    pub third_end: usize,
}

impl Shape {
    /// Shape of `loads`, or `None` when they are not non-increasing or are
    /// all equal (the full-load case has no shape).
    pub fn of(loads: &LoadVector) -> Option<Shape> {
        if !loads.is_non_increasing() {
            return None;
        }
        let l = loads.as_slice();
        let max_load = *l.first()?;
        let count_from = |start: usize, level: usize| {
            start + l[start..].iter().take_while(|&&x| x == level).count()
        };
        let peak_end = count_from(0, max_load);
        if peak_end == l.len() {
            return None;
        }
        let second_end = if max_load >= 1 {
            count_from(peak_end, max_load - 1)
        } else {
            peak_end
        };
        let third_end = if max_load >= 2 {
            count_from(second_end, max_load - 2)
        } else {
            second_end
        };
        Some(Shape {
            max_load,
            peak_end,
            second_end,
            third_end,
        })
    }

    /// Whether the shape's index ordering is valid for `resources` resources.
    pub fn is_valid(&self, resources: usize) -> bool {
        self.max_load >= 1
            && 1 <= self.peak_end
            && self.peak_end < resources
            && self.peak_end <= self.second_end
            && self.second_end <= self.third_end
            && self.third_end <= resources
    }

    fn has_second(&self) -> bool {
        self.second_end > self.peak_end
    }

    fn has_third(&self) -> bool {
        self.third_end > self.second_end
    }

    /// Players on the three fixed blocks, `None` if a block level is negative.
    fn prefix_players(&self) -> Option<usize> {
        let m = self.max_load;
        if self.has_third() && m < 2 {
            return None;
        }
        Some(
            self.peak_end * m
                + (self.second_end - self.peak_end) * (m - 1)
                + (self.third_end - self.second_end) * m.saturating_sub(2),
        )
    }
}

/// A shape plus assumed best-alternative costs for players on the maximum
/// load (`cbar_peak`) and below it (`cbar_rest`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeConfig {
    pub shape: Shape,
    pub cbar_peak: Rational,
    pub cbar_rest: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub alpha_star: Rational,
    pub witness: LoadVector,
    /// The move attaining `alpha_star`; `None` when nobody can move at all.
    pub binding: Option<Deviation>,
}

struct Terms<'a> {
    inst: &'a Instance,
    shape: Shape,
}

impl<'a> Terms<'a> {
    fn a(&self, r: usize) -> &Rational {
        self.inst.coefficient(r)
    }

    fn level(&self, offset: usize) -> Rational {
        from_usize(self.shape.max_load - offset)
    }

    fn share(&self, parts: usize) -> Rational {
        self.inst.budget() / from_usize(parts)
    }

    /// Closed-form alternatives for a maximum-load player.
    fn peak_heads(&self) -> Vec<Rational> {
        let s = self.shape;
        let k = s.peak_end;
        let mut heads = Vec::with_capacity(3);
        if k >= 2 {
            heads.push(self.a(0) * self.level(0) + self.a(0) + self.inst.budget());
        }
        if s.has_second() {
            heads.push(self.a(k) * self.level(0) + self.share(k));
        }
        if s.has_third() {
            let congestion = self.a(s.second_end) * self.level(1);
            heads.push(if k == 1 {
                congestion + self.share(s.second_end + 1)
            } else {
                congestion
            });
        }
        heads
    }

    /// Closed-form alternatives for a player below the maximum load.
    fn rest_heads(&self) -> Vec<Rational> {
        let s = self.shape;
        let k = s.peak_end;
        let mut heads = Vec::with_capacity(3);
        heads.push(self.a(0) * self.level(0) + self.a(0) + self.inst.budget());
        if s.has_second() {
            heads.push(self.a(k) * self.level(0) + self.share(k + 1));
        }
        if s.has_third() {
            heads.push(self.a(s.second_end) * self.level(1));
        }
        heads
    }

    /// Costs `a_r (l + 1)` of joining a tail resource with load `l <= M - 3`.
    fn tail_values(&self) -> Vec<Rational> {
        let top = self.shape.max_load.saturating_sub(2);
        (self.shape.third_end..self.inst.resources())
            .flat_map(|r| (1..=top).map(move |l| self.a(r) * from_usize(l)))
            .collect()
    }

    /// Equilibrium condition for the most expensive maximum-load player.
    fn peak_stable(&self, alpha: &Rational, cbar_peak: &Rational) -> bool {
        let k = self.shape.peak_end;
        self.a(k - 1) * self.level(0) + self.share(k) <= alpha * cbar_peak
    }

    /// Equilibrium conditions for the most expensive players at `M - 1` and `M - 2`.
    fn rest_stable(&self, alpha: &Rational, cbar_rest: &Rational) -> bool {
        let s = self.shape;
        let bound = alpha * cbar_rest;
        (!s.has_second() || self.a(s.second_end - 1) * self.level(1) <= bound)
            && (!s.has_third() || self.a(s.third_end - 1) * self.level(2) <= bound)
    }
}

fn sorted_unique(mut values: Vec<Rational>) -> Vec<Rational> {
    values.sort();
    values.dedup();
    values
}

/// Every value the best-alternative costs can take for loads of this shape:
/// `(for maximum-load players, for the others)`, each sorted and deduplicated.
pub fn cbar_candidates(inst: &Instance, shape: &Shape) -> (Vec<Rational>, Vec<Rational>) {
    let terms = Terms {
        inst,
        shape: *shape,
    };
    let tail = terms.tail_values();
    let mut peak = terms.peak_heads();
    peak.extend(tail.iter().cloned());
    let mut rest = terms.rest_heads();
    rest.extend(tail);
    (sorted_unique(peak), sorted_unique(rest))
}

/// Best-alternative costs actually realized by `loads`.
pub fn realized_config(inst: &Instance, loads: &LoadVector) -> Option<ShapeConfig> {
    let shape = Shape::of(loads)?;
    let terms = Terms { inst, shape };
    let tail: Vec<Rational> = (shape.third_end..inst.resources())
        .map(|r| inst.coefficient(r) * from_usize(loads.get(r) + 1))
        .collect();
    let min_of = |heads: Vec<Rational>| heads.into_iter().chain(tail.iter().cloned()).min();
    Some(ShapeConfig {
        shape,
        cbar_peak: min_of(terms.peak_heads())?,
        cbar_rest: min_of(terms.rest_heads())?,
    })
}

fn to_i64_saturating(x: &BigInt) -> i64 {
    x.to_i64()
        .unwrap_or(if x.is_negative() { i64::MIN } else { i64::MAX })
}

/// Decides whether an `alpha`-approximate equilibrium with the given shape
/// exists whose best-alternative costs are at least the configured ones,
/// and builds one.
///
/// The fixed blocks are set from the shape; each tail resource gets a load
/// range from its own equilibrium condition and from the configured
/// best-alternative costs, and the remaining players are poured into the
/// tail left to right on top of the lower bounds.
pub fn feasible_load_vector(
    inst: &Instance,
    config: &ShapeConfig,
    alpha: &Rational,
) -> Option<LoadVector> {
    let shape = config.shape;
    let m = inst.resources();
    if !shape.is_valid(m) || config.cbar_peak.is_negative() || config.cbar_rest.is_negative() {
        return None;
    }
    let terms = Terms { inst, shape };
    // blocks at negative load cannot exist
    let prefix = shape.prefix_players()?;

    // head conditions
    if !terms.peak_stable(alpha, &config.cbar_peak) || !terms.rest_stable(alpha, &config.cbar_rest)
    {
        return None;
    }
    if terms.peak_heads().iter().any(|h| *h < config.cbar_peak)
        || terms.rest_heads().iter().any(|h| *h < config.cbar_rest)
    {
        return None;
    }

    // fixed blocks
    let mut remaining = inst.players().checked_sub(prefix)? as i64;
    let mut loads = vec![0usize; m];
    loads[..shape.peak_end].fill(shape.max_load);
    loads[shape.peak_end..shape.second_end].fill(shape.max_load - 1);
    loads[shape.second_end..shape.third_end].fill(shape.max_load.saturating_sub(2));

    // tail ranges
    let cap = shape.max_load as i64 - 3;
    let scaled_rest = alpha * &config.cbar_rest;
    let mut lower = Vec::with_capacity(m - shape.third_end);
    let mut upper = Vec::with_capacity(m - shape.third_end);
    for r in shape.third_end..m {
        let a = inst.coefficient(r);
        let mut lo = 0i64;
        let mut hi = cap;
        if a.is_zero() {
            // a free tail resource forces both best alternatives to zero
            if config.cbar_rest.is_positive() || config.cbar_peak.is_positive() {
                return None;
            }
        } else {
            hi = hi.min(to_i64_saturating(&floor_int(&(&scaled_rest / a))));
            for cbar in [&config.cbar_rest, &config.cbar_peak] {
                let needed = ceil_int(&(cbar / a)) - BigInt::one();
                lo = lo.max(to_i64_saturating(&needed));
            }
        }
        if lo > hi {
            return None;
        }
        lower.push(lo);
        upper.push(hi);
    }
    let low_sum: i64 = lower.iter().sum();
    let high_sum: i64 = upper.iter().sum();
    if remaining < low_sum || remaining > high_sum {
        return None;
    }

    // fill
    remaining -= low_sum;
    for (i, r) in (shape.third_end..m).enumerate() {
        let extra = remaining.min(upper[i] - lower[i]);
        loads[r] = (lower[i] + extra) as usize;
        remaining -= extra;
    }
    debug_assert_eq!(remaining, 0);
    Some(LoadVector::new(loads))
}

fn full_load_vector(inst: &Instance, alpha: &Rational) -> Option<LoadVector> {
    let (n, m) = (inst.players(), inst.resources());
    if n % m != 0 {
        return None;
    }
    let level = from_usize(n / m);
    let a = inst.coefficients();
    let b = inst.budget();
    let cost = &a[m - 1] * &level + b / from_usize(m);
    let alternative = &a[0] * (&level + Rational::one()) + b;
    (cost <= alpha * alternative).then(|| LoadVector::new(vec![n / m; m]))
}

/// All shapes in lexicographic order whose fixed blocks fit the player count
/// and whose tail can absorb the rest.
pub fn shapes(inst: &Instance) -> impl Iterator<Item = Shape> + '_ {
    let (n, m) = (inst.players(), inst.resources());
    let lowest = n.div_ceil(m).max(1);
    (lowest..=n).flat_map(move |max_load| {
        (1..m).flat_map(move |peak_end| {
            (peak_end..=m).flat_map(move |second_end| {
                (second_end..=m).filter_map(move |third_end| {
                    let shape = Shape {
                        max_load,
                        peak_end,
                        second_end,
                        third_end,
                    };
                    let rest = n.checked_sub(shape.prefix_players()?)?;
                    let capacity = (m - third_end) * max_load.saturating_sub(3);
                    (rest <= capacity).then_some(shape)
                })
            })
        })
    })
}

/// A non-increasing `alpha`-approximate equilibrium, if one exists.
///
/// Tries the full-load vector, then every shape with each candidate
/// best-alternative cost for the lower blocks; the first success wins.
pub fn feasible_at(inst: &Instance, alpha: &Rational) -> Option<LoadVector> {
    if let Some(loads) = full_load_vector(inst, alpha) {
        return Some(loads);
    }
    for shape in shapes(inst) {
        let terms = Terms { inst, shape };
        let peak_heads = terms.peak_heads();
        let rest_heads = terms.rest_heads();
        let (peak, rest) = cbar_candidates(inst, &shape);
        // a smaller peak value only loosens the remaining conditions, so the
        // smallest one passing its own threshold dominates the others
        let Some(cbar_peak) = peak
            .into_iter()
            .find(|c| terms.peak_stable(alpha, c))
            .filter(|c| peak_heads.iter().all(|h| h >= c))
        else {
            continue;
        };
        let rest: Vec<Rational> = rest
            .into_iter()
            .filter(|c| terms.rest_stable(alpha, c) && rest_heads.iter().all(|h| h >= c))
            .collect();
        for cbar_rest in rest {
            let config = ShapeConfig {
                shape,
                cbar_peak: cbar_peak.clone(),
                cbar_rest,
            };
            if let Some(loads) = feasible_load_vector(inst, &config, alpha) {
                return Some(loads);
            }
        }
    }
    None
}

/// Sorted, deduplicated set of every cost a player can face: `a_r l` and
/// `a_r l + B / p` for `0 <= l <= n`, `1 <= p <= m`.
pub fn cost_values(inst: &Instance) -> Vec<Rational> {
    let (n, m) = (inst.players(), inst.resources());
    let shares: Vec<Rational> = (1..=m).map(|p| inst.budget() / from_usize(p)).collect();
    let mut values = Vec::with_capacity(m * (n + 1) * (m + 1));
    for a in inst.coefficients() {
        for l in 0..=n {
            let congestion = a * from_usize(l);
            values.extend(shares.iter().map(|s| &congestion + s));
            values.push(congestion);
        }
    }
    sorted_unique(values)
}

/// Every ratio `u / v` of two cost values that lies in `[1, K]` (with `K`
/// rounded up), sorted ascending. Always contains 1.
pub fn candidate_alphas(inst: &Instance) -> Vec<Rational> {
    let ceiling = k_upper(CEILING_PRECISION);
    let values = cost_values(inst);
    let mut ratios = vec![Rational::one()];
    for v in values.iter().filter(|v| v.is_positive()) {
        let start = values.partition_point(|u| u < v);
        let limit = &ceiling * v;
        for u in values[start..].iter().take_while(|u| **u <= limit) {
            ratios.push(u / v);
        }
    }
    sorted_unique(ratios)
}

/// Largest candidate ratio in `[1, x)`, evaluated without materializing
/// the ratio set.
pub fn largest_candidate_below(values: &[Rational], x: &Rational) -> Option<Rational> {
    let one = Rational::one();
    if *x <= one {
        return None;
    }
    let mut best = one;
    for v in values.iter().filter(|v| v.is_positive()) {
        let limit = x * v;
        let idx = values.partition_point(|u| *u < limit);
        if idx == 0 {
            continue;
        }
        let ratio = &values[idx - 1] / v;
        if ratio > best {
            best = ratio;
        }
    }
    Some(best)
}

fn quality(
    inst: &Instance,
    alpha: &Rational,
    witness: LoadVector,
) -> Result<(Rational, LoadVector), OptError> {
    let needed = needed_alpha(inst, &witness)?.at_least_one();
    match needed.finite() {
        Some(q) if q <= alpha => Ok((q.clone(), witness)),
        _ => Err(OptError::UnsoundWitness(Box::new(UnsoundWitness {
            alpha: alpha.clone(),
            witness,
            needed,
        }))),
    }
}

/// Smallest `alpha` admitting an `alpha`-approximate equilibrium, with a
/// witness.
///
/// Starts from a feasible vector at the ceiling and repeatedly asks whether
/// the next smaller candidate below the current witness's factor is still
/// feasible. Each success strictly lowers the factor; the first failure
/// proves optimality because no candidate lies in between.
pub fn best_alpha(inst: &Instance) -> Result<OptResult, OptError> {
    let ceiling = k_upper(CEILING_PRECISION);
    let start = feasible_at(inst, &ceiling).ok_or(OptError::NoFeasibleAlpha)?;
    let (mut alpha, mut witness) = quality(inst, &ceiling, start)?;
    let values = cost_values(inst);
    while let Some(next) = largest_candidate_below(&values, &alpha) {
        match feasible_at(inst, &next) {
            Some(found) => (alpha, witness) = quality(inst, &next, found)?,
            None => break,
        }
    }
    let binding = binding_deviation(inst, &witness)?;
    Ok(OptResult {
        alpha_star: alpha,
        witness,
        binding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::is_alpha_pne;
    use crate::rational::{integer, ratio};

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| integer(v)).collect()
    }

    fn example1() -> Instance {
        Instance::new(ints(&[0, 2, 5]), 5, integer(6)).unwrap()
    }

    fn loads(values: &[usize]) -> LoadVector {
        LoadVector::new(values.to_vec())
    }

    #[test]
    fn shape_of_examples() {
        assert_eq!(
            Shape::of(&loads(&[2, 2, 1])),
            Some(Shape {
                max_load: 2,
                peak_end: 2,
                second_end: 3,
                third_end: 3
            })
        );
        assert_eq!(
            Shape::of(&loads(&[5, 4, 3, 3, 1, 0])),
            Some(Shape {
                max_load: 5,
                peak_end: 1,
                second_end: 2,
                third_end: 4
            })
        );
        assert_eq!(Shape::of(&loads(&[2, 2, 2])), None);
        assert_eq!(Shape::of(&loads(&[1, 2, 0])), None);
    }

    #[test]
    fn single_peak_uses_shared_share_toward_second_block() {
        // loads (4, 2, 0): one maximum, no M-1 block, an M-2 block at r2
        let inst = Instance::new(ints(&[1, 2, 3]), 6, integer(12)).unwrap();
        let shape = Shape::of(&loads(&[4, 2, 0])).unwrap();
        assert_eq!(
            shape,
            Shape {
                max_load: 4,
                peak_end: 1,
                second_end: 1,
                third_end: 2
            }
        );
        let (peak, rest) = cbar_candidates(&inst, &shape);
        // a_2 (M-1) + B / 2 is present, a_1 (M+1) + B is not
        assert!(peak.contains(&(integer(2 * 3) + integer(6))));
        assert!(!peak.contains(&integer(5 + 12)));
        assert!(rest.contains(&integer(5 + 12)));
        // tail r3 with load 0 or 1 contributes a_3 and 2 a_3
        assert!(peak.contains(&integer(3)) && peak.contains(&integer(6)));
    }

    #[test]
    fn short_shape_has_only_heads() {
        let inst = example1();
        let shape = Shape {
            max_load: 3,
            peak_end: 1,
            second_end: 2,
            third_end: 3,
        };
        let (peak, rest) = cbar_candidates(&inst, &shape);
        assert!(peak.len() <= 3 && rest.len() <= 3);
    }

    #[test]
    fn example1_candidates_contain_realized_values() {
        let inst = example1();
        let config = realized_config(&inst, &loads(&[2, 2, 1])).unwrap();
        assert_eq!(config.cbar_peak, integer(6));
        assert_eq!(config.cbar_rest, integer(6));
        let (peak, rest) = cbar_candidates(&inst, &config.shape);
        assert!(peak.contains(&integer(6)));
        assert!(rest.contains(&integer(6)));
    }

    #[test]
    fn example1_procedure_rebuilds_witness() {
        let inst = example1();
        let config = realized_config(&inst, &loads(&[2, 2, 1])).unwrap();
        assert_eq!(
            feasible_load_vector(&inst, &config, &ratio(7, 6)),
            Some(loads(&[2, 2, 1]))
        );
        assert_eq!(feasible_load_vector(&inst, &config, &ratio(8, 7)), None);
    }

    #[test]
    fn oversized_prefix_is_infeasible() {
        let inst = example1();
        let config = ShapeConfig {
            shape: Shape {
                max_load: 4,
                peak_end: 2,
                second_end: 2,
                third_end: 2,
            },
            cbar_peak: integer(1),
            cbar_rest: integer(1),
        };
        assert_eq!(feasible_load_vector(&inst, &config, &integer(2)), None);
    }

    #[test]
    fn free_tail_resource_requires_zero_alternatives() {
        // (4, 0, 0): both free resources sit in the tail
        let inst = Instance::new(ints(&[0, 0, 0]), 4, integer(1)).unwrap();
        let shape = Shape {
            max_load: 4,
            peak_end: 1,
            second_end: 1,
            third_end: 1,
        };
        let positive = ShapeConfig {
            shape,
            cbar_peak: integer(1),
            cbar_rest: integer(1),
        };
        assert_eq!(feasible_load_vector(&inst, &positive, &integer(2)), None);
    }

    #[test]
    fn candidate_list_examples() {
        let c = candidate_alphas(&example1());
        assert!(c.contains(&ratio(7, 6)));
        assert_eq!(c[0], integer(1));
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        let flat = Instance::new(ints(&[3, 3]), 4, integer(7)).unwrap();
        assert!(candidate_alphas(&flat).contains(&integer(1)));
    }

    #[test]
    fn largest_below_agrees_with_materialized_list() {
        for inst in [
            example1(),
            Instance::new(ints(&[1, 4, 4, 10, 10]), 7, integer(9)).unwrap(),
            Instance::new(vec![ratio(1, 3), ratio(5, 2)], 3, ratio(7, 4)).unwrap(),
        ] {
            let list = candidate_alphas(&inst);
            let values = cost_values(&inst);
            for w in list.windows(2) {
                assert_eq!(largest_candidate_below(&values, &w[1]), Some(w[0].clone()));
            }
            assert_eq!(largest_candidate_below(&values, &integer(1)), None);
        }
    }

    #[test]
    fn example1_optimum() {
        let result = best_alpha(&example1()).unwrap();
        assert_eq!(result.alpha_star, ratio(7, 6));
        assert_eq!(result.witness, loads(&[2, 2, 1]));
        let binding = result.binding.unwrap();
        assert_eq!((binding.from, binding.to), (1, 0));
    }

    #[test]
    fn small_games_have_exact_equilibria() {
        let two = Instance::new(ints(&[1, 10]), 9, integer(3)).unwrap();
        assert_eq!(best_alpha(&two).unwrap().alpha_star, integer(1));
        let four = Instance::new(ints(&[0, 2, 5, 6]), 4, integer(6)).unwrap();
        let r = best_alpha(&four).unwrap();
        assert_eq!(r.alpha_star, integer(1));
        assert!(is_alpha_pne(&four, &r.witness, &integer(1)).unwrap());
        let single = Instance::new(ints(&[2]), 3, integer(5)).unwrap();
        let r = best_alpha(&single).unwrap();
        assert_eq!((r.alpha_star, r.witness), (integer(1), loads(&[3])));
    }

    #[test]
    fn seven_player_optimum_is_at_most_solver_quality() {
        let inst = Instance::new(ints(&[1, 4, 4, 10, 10]), 7, integer(9)).unwrap();
        let r = best_alpha(&inst).unwrap();
        assert!(r.alpha_star <= ratio(25, 24));
        assert!(is_alpha_pne(&inst, &r.witness, &r.alpha_star).unwrap());
    }
}
