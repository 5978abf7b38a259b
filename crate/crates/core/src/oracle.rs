//! Exhaustive ground truth over non-increasing load vectors.
//!
//! For factors up to 2 an approximate equilibrium exists iff one exists
//! with loads non-increasing along the sorted resources, so enumerating the
//! partitions of `n` into at most `m` parts suffices. Only usable at desk
//! scale: the number of partitions grows quickly.

use num_traits::{Signed, Zero};

use crate::game::needed_alpha;
use crate::game::{CostView, Instance, LoadVector};
use crate::rational::{ExtendedRational, Rational};

/// Partitions of `n` into at most `m` parts, as zero-padded non-increasing
/// vectors of length `m`, in lexicographically descending order.
#[derive(Debug, Clone)]
pub struct ProfileEnumeration {
    resources: usize,
    next: Option<Vec<usize>>,
}

pub fn enumerate_profiles(players: usize, resources: usize) -> ProfileEnumeration {
    let next = (resources > 0).then(|| {
        let mut first = vec![0; resources];
        first[0] = players;
        first
    });
    ProfileEnumeration { resources, next }
}

impl ProfileEnumeration {
    /// Lexicographic successor (downward): lower the rightmost part that can
    /// be lowered and refill everything after it as greedily as possible.
    fn successor(&self, current: &[usize]) -> Option<Vec<usize>> {
        let m = self.resources;
        let mut tail: usize = 0;
        for i in (0..m).rev() {
            let part = current[i];
            if i + 1 < m && part >= 1 {
                let cap = part - 1;
                let spill = tail + 1;
                if cap >= 1 && cap * (m - 1 - i) >= spill {
                    let mut next = current[..i].to_vec();
                    next.push(cap);
                    let mut left = spill;
                    for _ in i + 1..m {
                        let take = left.min(cap);
                        next.push(take);
                        left -= take;
                    }
                    return Some(next);
                }
            }
            tail += part;
        }
        None
    }
}

impl Iterator for ProfileEnumeration {
    type Item = LoadVector;

    fn next(&mut self) -> Option<LoadVector> {
        let current = self.next.take()?;
        self.next = self.successor(&current);
        Some(LoadVector::new(current))
    }
}

/// Minimum of `max(needed_alpha, 1)` over all non-increasing profiles, with
/// the lexicographically largest minimizer as witness.
pub fn oracle_best_alpha(inst: &Instance) -> (ExtendedRational, LoadVector) {
    let mut best: Option<(ExtendedRational, LoadVector)> = None;
    for loads in enumerate_profiles(inst.players(), inst.resources()) {
        let quality = needed_alpha(inst, &loads)
            .expect("enumerated profiles match the instance")
            .at_least_one();
        if best.as_ref().is_none_or(|(b, _)| quality < *b) {
            best = Some((quality, loads));
        }
    }
    best.expect("every instance has at least one profile")
}

/// A non-increasing exact equilibrium, if any exists.
pub fn oracle_has_exact_pne(inst: &Instance) -> Option<LoadVector> {
    let (quality, witness) = oracle_best_alpha(inst);
    quality
        .le_rational(&Rational::from_integer(1.into()))
        .then_some(witness)
}

/// Largest additive gain any player gets from a unilateral move, floored at 0.
pub fn additive_slack(inst: &Instance, loads: &LoadVector) -> Rational {
    let view = CostView::new(inst, loads).expect("loads match the instance");
    (0..view.resources())
        .filter(|&r| view.is_occupied(r))
        .filter_map(|r| {
            let (_, alternative) = view.best_alternative(r)?;
            Some(view.cost(r) - alternative)
        })
        .filter(|gain| gain.is_positive())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Smallest additive slack over non-increasing profiles, with the
/// lexicographically largest minimizer.
///
/// Restricting to non-increasing profiles is only known to be lossless for
/// multiplicative factors, so this value is exact only under that restriction.
pub fn oracle_best_additive_epsilon(inst: &Instance) -> (Rational, LoadVector) {
    let mut best: Option<(Rational, LoadVector)> = None;
    for loads in enumerate_profiles(inst.players(), inst.resources()) {
        let slack = additive_slack(inst, &loads);
        if best.as_ref().is_none_or(|(b, _)| slack < *b) {
            best = Some((slack, loads));
        }
    }
    best.expect("every instance has at least one profile")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| integer(v)).collect()
    }

    fn example1() -> Instance {
        Instance::new(ints(&[0, 2, 5]), 5, integer(6)).unwrap()
    }

    /// Partitions of `n` into parts of size at most `k`.
    fn partition_count(n: usize, k: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let with_k = if n >= k { partition_count(n - k, k) } else { 0 };
        with_k + partition_count(n, k - 1)
    }

    #[test]
    fn five_into_three() {
        let got: Vec<Vec<usize>> = enumerate_profiles(5, 3)
            .map(LoadVector::into_inner)
            .collect();
        assert_eq!(
            got,
            vec![
                vec![5, 0, 0],
                vec![4, 1, 0],
                vec![3, 2, 0],
                vec![3, 1, 1],
                vec![2, 2, 1]
            ]
        );
    }

    #[test]
    fn trivial_enumerations() {
        let got: Vec<_> = enumerate_profiles(1, 4).collect();
        assert_eq!(got, vec![LoadVector::new(vec![1, 0, 0, 0])]);
        assert_eq!(enumerate_profiles(6, 3).count(), 7);
        assert_eq!(enumerate_profiles(3, 1).count(), 1);
    }

    #[test]
    fn counts_follow_partition_recurrence() {
        for n in 1..=14 {
            for m in 1..=7 {
                let profiles: Vec<LoadVector> = enumerate_profiles(n, m).collect();
                assert_eq!(profiles.len(), partition_count(n, m), "n={n} m={m}");
                assert!(profiles.windows(2).all(|w| w[0] > w[1]));
                assert!(profiles
                    .iter()
                    .all(|p| p.total() == n && p.is_non_increasing()));
            }
        }
    }

    #[test]
    fn example1_best_alpha_and_no_exact_equilibrium() {
        let inst = example1();
        let (alpha, witness) = oracle_best_alpha(&inst);
        assert_eq!(alpha, ExtendedRational::Finite(ratio(7, 6)));
        assert_eq!(witness, LoadVector::new(vec![2, 2, 1]));
        assert_eq!(oracle_has_exact_pne(&inst), None);
    }

    #[test]
    fn single_resource() {
        let inst = Instance::new(ints(&[4]), 6, integer(1)).unwrap();
        assert_eq!(
            oracle_best_alpha(&inst),
            (
                ExtendedRational::Finite(integer(1)),
                LoadVector::new(vec![6])
            )
        );
    }

    #[test]
    fn two_players_two_resources() {
        let inst = Instance::new(ints(&[1, 10]), 2, integer(1)).unwrap();
        let witness = oracle_has_exact_pne(&inst).unwrap();
        assert!(witness == LoadVector::new(vec![2, 0]) || witness == LoadVector::new(vec![1, 1]));
    }

    #[test]
    fn additive_epsilon() {
        let inst = example1();
        let (eps, witness) = oracle_best_additive_epsilon(&inst);
        assert_eq!(eps, integer(1));
        assert_eq!(
            additive_slack(&inst, &LoadVector::new(vec![2, 2, 1])),
            integer(1)
        );
        // (3,2,0), (3,1,1) and (2,2,1) all leave a gain of exactly 1
        assert_eq!(witness, LoadVector::new(vec![3, 2, 0]));
        let scaled = inst.scaled(&integer(10)).unwrap();
        assert_eq!(oracle_best_additive_epsilon(&scaled).0, integer(10));
        let exact = Instance::new(ints(&[1, 10]), 2, integer(1)).unwrap();
        assert_eq!(oracle_best_additive_epsilon(&exact).0, integer(0));
    }
}
