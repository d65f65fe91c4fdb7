mod common;

use common::Naive;
use domlab::erratum::{run_erratum, run_erratum_at, ClaimId, ErratumVerdict};
use domlab::{verify, Family, ParamKind};

#[test]
fn exact_values_agree_with_subset_enumeration() {
    for claim in ClaimId::ALL {
        let r = run_erratum(claim).unwrap();
        let naive = Naive::product(r.family, r.n, r.m);
        assert_eq!(naive.minimum_up_to(ParamKind::Dom, 6), Some(r.exact), "{claim}");
        let g = domlab::product_instance(r.family, r.n, r.m).unwrap();
        assert!(verify(&g, ParamKind::Dom, &r.certificate).unwrap().ok);
    }
}

#[test]
fn path_and_cycle_values_differ() {
    let path = run_erratum(ClaimId::SitthiwiratthamPath).unwrap();
    let cycle = run_erratum(ClaimId::SitthiwiratthamCycle).unwrap();
    assert_eq!((path.family, cycle.family), (Family::PathClique, Family::CycleClique));
    assert_ne!(path.exact, cycle.exact);
}

#[test]
fn gravier_bound_fails_at_eight_rows() {
    let r = run_erratum_at(ClaimId::GravierBound, 8).unwrap();
    assert_eq!((r.claimed, r.exact, r.verdict), (4, 5, ErratumVerdict::Refuted));
}

#[test]
fn claims_hold_where_they_should() {
    // On P_3 x K_3 the formula min{3, 3} = 3 is the true value.
    let g = domlab::product_instance(Family::PathClique, 3, 3).unwrap();
    let naive = Naive::from_graph(&g);
    assert_eq!(naive.minimum(ParamKind::Dom), domlab::erratum::sitthiwirattham_formula(3, 3, 1));
}
