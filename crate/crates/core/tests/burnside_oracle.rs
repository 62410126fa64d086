//! `B(r,3)` normal forms checked against coset enumeration of
//! `<a_1..a_r | w^3 for short w>`.

use proptest::prelude::*;
use threemove::braid::{braid_closure, parse_braid};
use threemove::burnside::{burnside3_order, e3_multiply, ExponentThreeElement, Layout};
use threemove::groups::CosetTable;

mod common;
use common::{all_elements, oracle};

#[test]
fn free_orders_from_enumeration() {
    assert_eq!(oracle(2).index(), 27);
    assert_eq!(oracle(3).index(), 2187);
}

#[test]
fn normal_forms_biject_onto_cosets() {
    for r in [2, 3] {
        let t = oracle(r);
        let l = Layout::new(r);
        let mut hit = vec![false; t.index()];
        for x in all_elements(r) {
            let c = t.act_word(0, &l.word(&x)) as usize;
            assert!(!hit[c], "two normal forms name one element");
            hit[c] = true;
        }
    }
}

#[test]
fn products_match_rank_two_exhaustively() {
    let t = oracle(2);
    let l = Layout::new(2);
    let all = all_elements(2);
    for x in &all {
        for y in &all {
            let z = e3_multiply(x, y).unwrap();
            let w = [l.word(x), l.word(y)].concat();
            assert_eq!(t.act_word(0, &w), t.act_word(0, &l.word(&z)));
        }
    }
}

#[test]
fn chen_closure_exponent() {
    let chen = parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4").unwrap();
    assert_eq!(burnside3_order(&braid_closure(&chen)).unwrap().exponent, 10);
}

fn element(r: usize) -> impl Strategy<Value = ExponentThreeElement> {
    let p = r * (r - 1) / 2;
    let q = r * (r - 1) * (r - 2) / 6;
    (
        prop::collection::vec(0u8..3, r),
        prop::collection::vec(0u8..3, p),
        prop::collection::vec(0u8..3, q),
    )
        .prop_map(|(deg1, deg2, deg3)| ExponentThreeElement { deg1, deg2, deg3 })
}

proptest! {
    #[test]
    fn products_match_rank_three(x in element(3), y in element(3)) {
        thread_local!(static T: CosetTable = oracle(3));
        let l = Layout::new(3);
        let z = e3_multiply(&x, &y).unwrap();
        let w = [l.word(&x), l.word(&y)].concat();
        let (a, b) = T.with(|t| (t.act_word(0, &w), t.act_word(0, &l.word(&z))));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn group_laws(x in element(5), y in element(5), z in element(5)) {
        let l = Layout::new(5);
        prop_assert_eq!(l.multiply(&l.multiply(&x, &y), &z), l.multiply(&x, &l.multiply(&y, &z)));
        let cube = l.multiply(&l.multiply(&x, &x), &x);
        prop_assert!(cube.is_identity());
        prop_assert!(l.multiply(&x, &l.inverse(&x)).is_identity());
        prop_assert_eq!(l.evaluate(&l.word(&x)), x);
    }
}
