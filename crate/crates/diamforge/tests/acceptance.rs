//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use diamforge::assembly::{
    attach_4k3, attach_4k4, attach_4k6, construct_optimal, method_for, small_table, table_orders, Method,
};
use diamforge::complex::{covered_edges, dual_diameter, encode_triples, expand_pair, hs_max_diameter, is_good};
use diamforge::genseq::{
    circular_complex, gs_full, gs_missing_12, gs_missing_1248, residue_prediction, verify_generating_sequence,
    GeneratingSequence,
};
use diamforge::hampack::{builtin_105, decompose_prime, is_prime, ord_mod, square_edges, verify_partition};
use diamforge::oracle::search_max_diameter;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn optimum(n: u32) -> u64 {
    hs_max_diameter(n as u64).unwrap()
}

fn c1_construct_reaches_optimum() {
    assert_eq!(optimum(6), 5);
    for n in 3..=200 {
        let (_, cert) = construct_optimal(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        assert!(cert.matches_optimum, "n = {n}: {cert:?}");
        assert_eq!(cert.diameter, Some(optimum(n)), "n = {n}");
    }
}

fn c2_search_is_exhaustive() {
    for n in 3..=7 {
        let r = search_max_diameter(n, None).unwrap();
        assert!(r.exhaustive, "n = {n}");
        assert_eq!(r.best_diameter, optimum(n), "n = {n}");
    }
}

fn audit(kind: &str, k: u32, plan: &diamforge::assembly::AttachmentPlan, count: u32) {
    let edges = plan.new_edges();
    assert_eq!(edges.len(), count as usize, "{kind} k = {k}");
    assert_eq!(2 * plan.triangles.len(), edges.len(), "{kind} k = {k}: an edge is covered twice");
    assert_eq!(edges, common::expected_classes(kind, k), "{kind} k = {k}");
}

fn c3_attachment_audits() {
    for k in 4..=40 {
        audit("4k+4", k, &attach_4k4(k).unwrap(), 20 * k + 8);
    }
    for k in 5..=40 {
        audit("4k+3", k, &attach_4k3(k).unwrap(), 16 * k + 6);
    }
    for k in 7..=40 {
        let (a, b) = attach_4k6(k).unwrap();
        audit("4k+6a", k, &a, 16 * k + 6);
        audit("4k+6b", k, &b, 20 * k + 14);
    }
}

fn check_family(gs: &GeneratingSequence, missing: &[u32]) {
    let r = verify_generating_sequence(gs);
    assert!(r.valid, "n = {}: {:?}", gs.n, r.reason);
    assert_eq!(r.missing, missing, "n = {}", gs.n);
}

fn c4_families_verify() {
    for k in 3..=60 {
        check_family(&gs_full(k).unwrap(), &[]);
    }
    for k in 4..=60 {
        check_family(&gs_missing_12(k).unwrap().0, &[1, 2]);
    }
    for k in 7..=60 {
        check_family(&gs_missing_1248(k).unwrap().0, &[1, 2, 4, 8]);
    }
}

fn c5_coverage_matches_prediction() {
    let mut all = Vec::new();
    for k in 3..=62 {
        all.push(gs_full(k).unwrap());
        if k >= 4 {
            all.push(gs_missing_12(k).unwrap().0);
        }
        if k >= 7 {
            all.push(gs_missing_1248(k).unwrap().0);
        }
    }
    for gs in all.iter().filter(|g| g.n <= 250) {
        let seq = circular_complex(gs).unwrap();
        assert!(is_good(&seq), "n = {}", gs.n);
        assert_eq!(covered_edges(&seq), residue_prediction(gs), "n = {} terms {:?}", gs.n, gs.terms);
    }
}

fn c6_prime_decompositions() {
    let mut tested = 0;
    for p in (5..=500u32).filter(|&p| is_prime(p as u64)) {
        if !ord_mod(2, p as u64).unwrap().is_multiple_of(4) {
            continue;
        }
        let d = decompose_prime(p).unwrap();
        assert_eq!(d.cycles.len() as u32, (p - 1) / 4, "p = {p}");
        assert!(verify_partition(&d).success, "p = {p}");
        tested += 1;
    }
    assert!(tested > 0);
}

fn c7_order_of_two() {
    for p in (5..=100_000u64).step_by(8).filter(|&p| is_prime(p)) {
        assert_eq!(ord_mod(2, p).unwrap() % 4, 0, "p = {p}");
    }
}

fn c8_builtin_105() {
    let d = builtin_105().unwrap();
    assert_eq!(d.cycles.len(), 26);
    let mut all = BTreeSet::new();
    let mut total = 0;
    for c in &d.cycles {
        let e = square_edges(c).unwrap();
        total += e.len();
        all.extend(e);
    }
    assert_eq!((total, all.len()), (5460, 5460));
    let r = verify_partition(&d);
    assert!(r.success && r.missing.is_empty() && r.doubled.is_empty());
}

fn c9_table_and_general_range() {
    for n in table_orders() {
        let entry = small_table(n).unwrap();
        let seq = expand_pair(&entry.pair).unwrap();
        assert!(is_good(&seq), "table n = {n}");
        assert_eq!(dual_diameter(&seq).unwrap() as u64, optimum(n), "table n = {n}");
    }
    for n in [13, 17, 20, 21, 23, 24, 25, 27, 28, 29] {
        assert_ne!(method_for(n), Some(Method::Table), "n = {n}");
        let (_, cert) = construct_optimal(n).unwrap();
        assert!(cert.matches_optimum, "n = {n}");
    }
}

fn c10_core_properties() {
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    let strategy = (4u32..=16, prop::collection::vec(any::<u32>(), 0..80));
    runner
        .run(&strategy, |(n, choices)| {
            let seq = common::random_good_walk(n, &choices);
            prop_assert!(is_good(&seq));
            let pair = encode_triples(&seq).unwrap();
            let back = expand_pair(&pair).unwrap();
            prop_assert!(common::same_walk(&back.triangles, &seq.triangles));
            prop_assert_eq!(covered_edges(&seq).len(), 2 * seq.len() + 1);
            let d = dual_diameter(&seq).unwrap();
            prop_assert_eq!(d, seq.len() - 1);
            prop_assert!(d as u64 <= optimum(n));
            Ok(())
        })
        .unwrap();
}

fn main() {
    let criteria: [(&str, fn()); 10] = [
        ("construct reaches the optimum for n = 3..200", c1_construct_reaches_optimum),
        ("exhaustive search agrees for n = 3..7", c2_search_is_exhaustive),
        ("attachment plans cover their edge classes exactly once, k <= 40", c3_attachment_audits),
        ("sequence families verify with the stated missing residues, k <= 60", c4_families_verify),
        ("circular coverage equals the residue prediction, n <= 250", c5_coverage_matches_prediction),
        ("prime decompositions partition K_p, p <= 500", c6_prime_decompositions),
        ("ord_p(2) = 0 mod 4 for p = 5 mod 8, p <= 10^5", c7_order_of_two),
        ("built-in K_105 decomposition: 26 squares, 5460 edges", c8_builtin_105),
        ("table entries and the general range are optimal", c9_table_and_general_range),
        ("core properties over 10^4 random good walks", c10_core_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        println!("{} {:>2}: {name}", if ok { "PASS" } else { "FAIL" }, i + 1);
        failed += usize::from(!ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
