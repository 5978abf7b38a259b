#![allow(dead_code)]

use congestion_core::rational::ratio;
use congestion_core::{Instance, LoadVector, Rational};
use proptest::prelude::*;

/// Random instance with small rational coefficients and budget.
pub fn instance(max_players: usize, max_resources: usize) -> impl Strategy<Value = Instance> {
    (1..=max_players, 1..=max_resources).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec((0i64..=10, 1i64..=4), m),
            (1i64..=12, 1i64..=4),
        )
            .prop_map(move |(coeffs, (bn, bd))| {
                let coeffs = coeffs.into_iter().map(|(p, q)| ratio(p, q)).collect();
                Instance::new(coeffs, n, ratio(bn, bd)).unwrap()
            })
    })
}

/// An instance together with an arbitrary (not necessarily sorted) load
/// vector holding all of its players.
pub fn instance_and_loads(
    max_players: usize,
    max_resources: usize,
) -> impl Strategy<Value = (Instance, LoadVector)> {
    instance(max_players, max_resources).prop_flat_map(|inst| {
        let (n, m) = (inst.players(), inst.resources());
        prop::collection::vec(0..m, n).prop_map(move |choices| {
            let mut loads = vec![0; m];
            for r in choices {
                loads[r] += 1;
            }
            (inst.clone(), LoadVector::new(loads))
        })
    })
}

/// Instances with a free resource and a large budget, where exact
/// equilibria are often missing.
pub fn skewed_instance() -> impl Strategy<Value = Instance> {
    (5usize..=10, 3usize..=4).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec((0i64..=10, 1i64..=4), m - 1),
            (1i64..=40, 1i64..=4),
        )
            .prop_map(move |(coeffs, (bn, bd))| {
                let mut coeffs: Vec<Rational> =
                    coeffs.into_iter().map(|(p, q)| ratio(p, q)).collect();
                coeffs.push(ratio(0, 1));
                Instance::new(coeffs, n, ratio(bn, bd)).unwrap()
            })
    })
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=7).prop_map(|(p, q)| ratio(p, q))
}

/// Attack recomputed from its definition: the budget split evenly over
/// the resources of maximum load.
pub fn naive_attack(loads: &[usize], budget: &Rational) -> Vec<Rational> {
    let max = *loads.iter().max().unwrap();
    let hit = loads.iter().filter(|&&l| l == max).count() as i64;
    loads
        .iter()
        .map(|&l| {
            if l == max {
                budget / Rational::from_integer(hit.into())
            } else {
                Rational::from_integer(0.into())
            }
        })
        .collect()
}

pub fn naive_cost(inst: &Instance, loads: &[usize], r: usize) -> Rational {
    let attack = naive_attack(loads, inst.budget());
    inst.coefficient(r) * Rational::from_integer((loads[r] as i64).into()) + &attack[r]
}

/// Deviation cost by literally moving the player and pricing the new profile.
pub fn naive_deviation(
    inst: &Instance,
    loads: &[usize],
    from: Option<usize>,
    to: usize,
) -> Rational {
    let mut moved = loads.to_vec();
    if let Some(u) = from {
        moved[u] -= 1;
    }
    moved[to] += 1;
    naive_cost(inst, &moved, to)
}

/// Largest ratio cost / best alternative by brute force; `None` means +inf.
pub fn naive_needed_alpha(inst: &Instance, loads: &[usize]) -> Option<Rational> {
    let one = Rational::from_integer(1.into());
    if loads.len() == 1 {
        return Some(one);
    }
    let zero = Rational::from_integer(0.into());
    let mut worst = zero.clone();
    for u in (0..loads.len()).filter(|&u| loads[u] > 0) {
        let cost = naive_cost(inst, loads, u);
        let best = (0..loads.len())
            .filter(|&r| r != u)
            .map(|r| naive_deviation(inst, loads, Some(u), r))
            .min()
            .unwrap();
        if best == zero {
            if cost > zero {
                return None;
            }
            continue;
        }
        worst = worst.max(cost / best);
    }
    Some(worst)
}
