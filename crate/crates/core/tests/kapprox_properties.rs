mod common;

use common::instance;
use congestion_core::{
    is_alpha_pne, k_upper, needed_alpha, oracle_best_alpha, solve, unhappy_set, EventKind,
    GuardMode, SolverConfig,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn strict_run_terminates_in_an_equilibrium(inst in instance(30, 10)) {
        let config = SolverConfig::k_approximate(12, GuardMode::Strict);
        let (loads, trace) = solve(&inst, &config).unwrap();
        let n = inst.players();
        prop_assert_eq!(loads.total(), n);
        prop_assert!(is_alpha_pne(&inst, &loads, config.alpha()).unwrap());
        prop_assert_eq!(trace.replay(inst.resources()), loads.clone());

        prop_assert_eq!(trace.per_round_deviations.len(), n);
        for (i, &moves) in trace.per_round_deviations.iter().enumerate() {
            prop_assert!(moves <= 2 * (i + 1));
        }
        prop_assert!(trace.per_round_deviations.iter().take(2).all(|&moves| moves == 0));

        let added = trace.events.iter().filter(|e| e.kind == EventKind::PlayerAdded).count();
        prop_assert_eq!(added, n);
        for event in &trace.events {
            prop_assert!(event.loads_after.is_non_increasing());
            // nobody sharing the landing resource's load wants to move
            let landed = event.loads_after.get(event.to);
            let unhappy = unhappy_set(&inst, &event.loads_after, config.alpha()).unwrap();
            prop_assert!(
                unhappy.iter().all(|&r| event.loads_after.get(r) != landed),
                "event {:?} leaves {:?} unhappy", event, unhappy
            );
            if event.kind == EventKind::Deviation {
                let before = event.cost_before.finite().unwrap();
                prop_assert!(*before > config.alpha() * &event.cost_after);
            }
        }
    }

    #[test]
    fn runs_are_deterministic(inst in instance(20, 8)) {
        let config = SolverConfig::default();
        prop_assert_eq!(solve(&inst, &config).unwrap(), solve(&inst, &config).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn output_sits_between_the_optimum_and_the_ceiling(inst in instance(9, 4)) {
        let (loads, _) = solve(&inst, &SolverConfig::default()).unwrap();
        let needed = needed_alpha(&inst, &loads).unwrap().at_least_one();
        prop_assert!(needed.le_rational(&k_upper(12)));
        let (best, _) = oracle_best_alpha(&inst);
        prop_assert!(best <= needed);
    }
}
