mod common;

use common::Naive;
use domlab::constructions::{build, build_and_verify, ConstructionKind};
use domlab::solver::certify;
use domlab::{ParamKind, ProductCoords};

fn grid(kind: ConstructionKind) -> impl Iterator<Item = (usize, usize)> {
    (2..=30)
        .flat_map(|n| (3..=6).map(move |m| (n, m)))
        .filter(move |&(n, m)| kind.check_guard(n, m).is_ok())
}

/// `R_1 ∪ {(2,2), (n-1,2)}` is not secure for three and five columns.
fn rowplus_insecure(n: usize) -> bool {
    n == 3 || n == 5
}

#[test]
fn sizes_match_closed_forms() {
    for kind in ConstructionKind::ALL {
        for (n, m) in grid(kind) {
            let r = build_and_verify(kind, n, m).unwrap();
            let expected = r.expected_size.unwrap();
            if kind == ConstructionKind::SdomPathRowPlus && n == 3 {
                // (2,2) and (n-1,2) coincide.
                assert_eq!((r.set.len(), expected), (4, 5));
            } else {
                assert_eq!(r.set.len(), expected, "{kind} n={n} m={m}");
            }
        }
    }
}

#[test]
fn domination_sets_dominate_and_are_12_sets() {
    for kind in [ConstructionKind::DomCycle, ConstructionKind::DomPath] {
        for (n, m) in grid(kind) {
            let r = build_and_verify(kind, n, m).unwrap();
            assert!(r.verdict(ParamKind::Dom).unwrap().ok, "{kind} n={n} m={m}");
            assert!(r.verdict(ParamKind::Dom12).unwrap().ok, "{kind} n={n} m={m}");
        }
    }
}

#[test]
fn cycle_domination_sets_are_independent() {
    for (n, m) in grid(ConstructionKind::DomCycle) {
        let r = build_and_verify(ConstructionKind::DomCycle, n, m).unwrap();
        assert!(r.verdict(ParamKind::IndependentDom).unwrap().ok, "n={n} m={m}");
    }
}

#[test]
fn path_domination_sets_lose_independence_at_one_mod_three() {
    // For n = 3k+1, k >= 2, the last interior block (3k-1, r) touches the
    // tail vertex (3k, 3).
    for (n, m) in grid(ConstructionKind::DomPath) {
        let r = build_and_verify(ConstructionKind::DomPath, n, m).unwrap();
        let independent = r.verdict(ParamKind::IndependentDom).unwrap().ok;
        assert_eq!(independent, !(n % 3 == 1 && n >= 7), "n={n} m={m}");
        if !independent {
            let c = ProductCoords::new(n, m);
            let k = n / 3;
            assert!(r.set.contains(c.index(3 * k - 1, 1)) || r.set.contains(c.index(3 * k - 1, 2)));
            assert!(r.set.contains(c.index(3 * k, 3)));
        }
    }
}

#[test]
fn secure_sets_are_secure() {
    for kind in [
        ConstructionKind::SdomCycleRow,
        ConstructionKind::SdomPathM3Columns,
        ConstructionKind::SdomC2,
        ConstructionKind::SdomPathRowPlus,
    ] {
        for (n, m) in grid(kind) {
            let r = build_and_verify(kind, n, m).unwrap();
            let secure = r.verdict(ParamKind::SecureDom).unwrap().ok;
            let expected = !(kind == ConstructionKind::SdomPathRowPlus && rowplus_insecure(n));
            assert_eq!(secure, expected, "{kind} n={n} m={m}");
        }
    }
}

#[test]
fn two_domination_verdicts() {
    for kind in [
        ConstructionKind::SdomCycleRow,
        ConstructionKind::SdomPathM3Columns,
        ConstructionKind::SdomC2,
    ] {
        for (n, m) in grid(kind) {
            let r = build_and_verify(kind, n, m).unwrap();
            assert!(r.verdict(ParamKind::TwoDom).unwrap().ok, "{kind} n={n} m={m}");
        }
    }
    // (1, 2) has the single in-set neighbour (2, 1).
    for (n, m) in grid(ConstructionKind::SdomPathRowPlus) {
        let r = build_and_verify(ConstructionKind::SdomPathRowPlus, n, m).unwrap();
        assert!(!r.verdict(ParamKind::TwoDom).unwrap().ok, "n={n} m={m}");
    }
}

#[test]
fn reports_agree_with_reference_checks() {
    for kind in ConstructionKind::ALL {
        for (n, m) in grid(kind).filter(|&(n, m)| n * m <= 40) {
            let r = build_and_verify(kind, n, m).unwrap();
            let naive = Naive::from_graph(&r.graph);
            for (param, verdict) in &r.checks {
                assert_eq!(verdict.ok, naive.holds_set(*param, &r.set), "{kind} {param} n={n} m={m}");
            }
        }
    }
}

#[test]
fn small_constructions_are_optimal() {
    for kind in ConstructionKind::ALL {
        for (n, m) in grid(kind).filter(|&(n, m)| n * m <= 30) {
            let set = build(kind, n, m).unwrap();
            let r = build_and_verify(kind, n, m).unwrap();
            let optimal = certify(&r.graph, kind.param(), set.len(), &set).unwrap();
            let known_bad = kind == ConstructionKind::SdomPathRowPlus && rowplus_insecure(n);
            assert_eq!(optimal, !known_bad, "{kind} n={n} m={m}");
        }
    }
}
