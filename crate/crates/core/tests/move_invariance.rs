use proptest::prelude::*;
use threemove::braid::{braid_closure, BraidWord};
use threemove::burnside::{burnside3_order, fox_coloring_dim};
use threemove::invariants::jones;
use threemove::rewrite::MoveKinds;

mod common;
use common::walk;

fn braid_strategy() -> impl Strategy<Value = BraidWord> {
    (2u32..=4).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        prop::collection::vec(letter, 1..=10).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn coloring_and_burnside_survive_all_moves(
        w in braid_strategy(),
        choices in prop::collection::vec(any::<usize>(), 1..=8),
    ) {
        let d = braid_closure(&w);
        let (e, trace) = walk(&d, MoveKinds::ALL, &choices);
        prop_assert_eq!(fox_coloring_dim(&d), fox_coloring_dim(&e), "moves {:?}", trace);
        let (b0, b1) = (burnside3_order(&d).unwrap(), burnside3_order(&e).unwrap());
        prop_assert_eq!(b0.exponent, b1.exponent, "moves {:?}", trace);
    }

    #[test]
    fn jones_survives_reidemeister_moves(
        w in braid_strategy(),
        choices in prop::collection::vec(any::<usize>(), 1..=8),
    ) {
        let d = braid_closure(&w);
        let (e, trace) = walk(&d, MoveKinds::REIDEMEISTER, &choices);
        prop_assert!(e.is_oriented());
        prop_assert_eq!(jones(&d).unwrap(), jones(&e).unwrap(), "moves {:?}", trace);
    }
}
