//! Seeded random instances.

use congestion_core::rational::format_rational;
use congestion_core::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::InstanceDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub players: usize,
    pub resources: usize,
    pub seed: u64,
    /// Coefficient numerators are drawn from `0..=coeff_max`.
    pub coeff_max: u64,
    /// Budget numerators are drawn from `1..=budget_max`.
    pub budget_max: u64,
    /// Denominators are drawn from `1..=denom_max`.
    pub denom_max: u64,
}

impl GenParams {
    pub fn new(players: usize, resources: usize, seed: u64) -> Self {
        GenParams {
            players,
            resources,
            seed,
            coeff_max: 10,
            budget_max: 10,
            denom_max: 4,
        }
    }
}

fn draw(rng: &mut ChaCha8Rng, numer_min: u64, numer_max: u64, denom_max: u64) -> Rational {
    let numer = rng.gen_range(numer_min..=numer_max);
    let denom = rng.gen_range(1..=denom_max.max(1));
    Rational::new(numer.into(), denom.into())
}

/// Coefficients come out sorted; the same parameters always give the same
/// document.
pub fn generate(params: &GenParams) -> InstanceDocument {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut coefficients: Vec<Rational> = (0..params.resources)
        .map(|_| draw(&mut rng, 0, params.coeff_max, params.denom_max))
        .collect();
    coefficients.sort();
    let budget = draw(&mut rng, 1, params.budget_max.max(1), params.denom_max);
    InstanceDocument {
        name: Some(format!(
            "random-n{}-m{}-seed{}",
            params.players, params.resources, params.seed
        )),
        description: None,
        players: params.players,
        budget: format_rational(&budget),
        coefficients: coefficients.iter().map(format_rational).collect(),
    }
}
