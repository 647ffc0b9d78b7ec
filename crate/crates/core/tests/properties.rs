mod common;

use common::{group, Check};
use hurwitz_core::hurwitz::{braid_move, hurwitz_orbit, Direction, Factorization, ReducedEnumerator, DEFAULT_CAP};
use hurwitz_core::par::Execution;
use hurwitz_core::verify::{verify, Scope, Theorem, VerifyOptions};
use hurwitz_core::CoxeterType;
use proptest::prelude::*;

fn ok(check: Check) {
    if let Err(e) = check {
        panic!("{e}");
    }
}

#[test]
fn reflection_length_matches_bfs() {
    for g in common::oracle_groups() {
        ok(common::length_matches_bfs(&g));
    }
}

#[test]
fn determinant_is_sign_of_length() {
    for g in common::oracle_groups() {
        ok(common::determinant_parity(&g));
    }
}

#[test]
fn absolute_order_is_a_partial_order() {
    ok(common::absolute_order_axioms(&group(CoxeterType::A, 3)));
    ok(common::absolute_order_axioms(&group(CoxeterType::B, 3)));
    ok(common::absolute_order_axioms(&group(CoxeterType::I2, 7)));
}

#[test]
fn braid_group_relations() {
    for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::B, 3), (CoxeterType::H, 4), (CoxeterType::E, 7), (CoxeterType::I2, 5)] {
        ok(common::braid_identities(&group(ty, n), 100, 11));
    }
}

#[test]
fn orbits_preserve_products() {
    for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::B, 4), (CoxeterType::D, 5), (CoxeterType::F, 4), (CoxeterType::H, 3)] {
        ok(common::orbit_product_invariance(&group(ty, n), 15, 12));
    }
}

#[test]
fn conjugation_is_equivariant() {
    for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::D, 4), (CoxeterType::F, 4), (CoxeterType::E, 6)] {
        ok(common::conjugation_equivariance(&group(ty, n), 15, 13));
    }
}

#[test]
fn closure_identities_in_simply_laced_groups() {
    for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::D, 4), (CoxeterType::D, 5)] {
        ok(common::closure_identities(&group(ty, n), 500, 14));
    }
}

#[test]
fn execution_modes_agree() {
    let runs = [
        (CoxeterType::D, 4, Theorem::ParabolicClosure),
        (CoxeterType::D, 4, Theorem::ConnectionIndex),
        (CoxeterType::B, 3, Theorem::Transitivity),
        (CoxeterType::H, 3, Theorem::Generation),
        (CoxeterType::F, 4, Theorem::CorankOnePrefix),
    ];
    for (ty, n, theorem) in runs {
        let g = group(ty, n);
        let seq = VerifyOptions { exec: Execution::Sequential, ..VerifyOptions::with_scope(Scope::Exhaustive) };
        let par = VerifyOptions { exec: Execution::Parallel, ..seq };
        let a = verify(&g, theorem, &seq).unwrap().without_timing();
        let b = verify(&g, theorem, &par).unwrap().without_timing();
        assert_eq!(serde_json::to_value(&a).unwrap(), serde_json::to_value(&b).unwrap(), "{} {theorem}", g.label());
    }
    let g = group(CoxeterType::E, 6);
    let mut en = ReducedEnumerator::new(&g);
    let c = g.element_from_word(g.simple_root_ids()).unwrap();
    let f = Factorization::reduced(&g, en.first(&c)).unwrap();
    let a = hurwitz_orbit(&g, &f, DEFAULT_CAP, Execution::Sequential);
    let b = hurwitz_orbit(&g, &f, DEFAULT_CAP, Execution::Parallel);
    assert_eq!(a.len(), b.len());
    assert!(a.members().all(|m| b.contains(&m)));
}

#[test]
fn sampling_is_reproducible() {
    let g = group(CoxeterType::E, 7);
    let opts = VerifyOptions { sample_size: 6, ..VerifyOptions::with_scope(Scope::Sampled) };
    let a = verify(&g, Theorem::Transitivity, &opts).unwrap().without_timing();
    let b = verify(&g, Theorem::Transitivity, &opts).unwrap().without_timing();
    assert_eq!(serde_json::to_value(&a).unwrap(), serde_json::to_value(&b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_moves_invert(entries in prop::collection::vec(0usize..36, 2..7), pos in 0usize..6) {
        let g = group(CoxeterType::E, 6);
        let f = Factorization::new(&g, entries.clone()).unwrap();
        let i = pos % (entries.len() - 1);
        let there = braid_move(&g, &f, i, Direction::Forward).unwrap();
        prop_assert_eq!(there.product(), f.product());
        prop_assert_eq!(braid_move(&g, &there, i, Direction::Inverse).unwrap(), f);
    }

    #[test]
    fn first_factorization_is_reduced(word in prop::collection::vec(0usize..24, 1..6)) {
        let g = group(CoxeterType::F, 4);
        let w = g.element_from_word(&word).unwrap();
        let mut en = ReducedEnumerator::new(&g);
        let first = en.first(&w);
        prop_assert_eq!(first.len(), g.reflection_length(&w));
        prop_assert!(g.element_from_word(&first).unwrap() == w);
        prop_assert!(g.reflection_length(&w) <= word.len());
    }
}
