use std::collections::BTreeSet;

use diamforge::complex::{expand_pair, is_good, tri, Edge, LabelsLayout, Triangle};
use diamforge::genseq::*;
use num_integer::Integer;

fn gs(n: u32, terms: &[i64], turns: &[usize]) -> GeneratingSequence {
    GeneratingSequence::new(n, terms, turns).unwrap()
}

fn signed(g: &GeneratingSequence) -> Vec<i64> {
    g.terms.iter().map(|&a| if a > g.n / 2 { a as i64 - g.n as i64 } else { a as i64 }).collect()
}

#[test]
fn blue_terms_examples() {
    assert_eq!(blue_terms(&gs(13, &[1, 2, 4], &[])), vec![3, 6, 5]);
    assert_eq!(blue_terms(&gs(17, &[3, 2, 7, 6], &[3])), vec![5, 9, 13, 16]);
    assert_eq!(blue_terms(&gs(13, &[5], &[])), vec![10]);
}

#[test]
fn verification_examples() {
    let r = verify_generating_sequence(&gs(13, &[1, 2, 4], &[]));
    assert!(r.valid && r.missing.is_empty());
    let r = verify_generating_sequence(&gs(17, &[3, 4, 8], &[]));
    assert!(r.valid);
    assert_eq!(r.missing, vec![1, 2]);
    assert!(!verify_generating_sequence(&gs(13, &[1, 2, 3], &[])).valid);
    // adjacent turns, read cyclically
    assert!(!verify_generating_sequence(&gs(17, &[3, 2, 7, 6], &[0, 3])).valid);
}

#[test]
fn family_instances() {
    let f = |k| gs_full(k).unwrap();
    assert_eq!((signed(&f(3)), f(3).turns.len()), (vec![1, 2, 4], 0));
    assert_eq!(signed(&f(4)), vec![1, 2, 6, 4]);
    assert_eq!(signed(&f(8)), vec![3, 2, 7, 6, 11, 10, 15, 14]);
    assert_eq!(f(8).turns, BTreeSet::from([7]));
    assert!(gs_full(2).is_err());

    let m = |k| gs_missing_12(k).unwrap().0;
    assert_eq!(signed(&m(4)), vec![3, 4, 8]);
    assert_eq!(signed(&m(7)), vec![11, 8, -12, 7, 6, 3]);
    assert_eq!(blue_terms(&m(7)).iter().map(|&c| residue(c as i64, 29)).collect::<Vec<_>>(), vec![10, 4, 5, 13, 9, 14]);
    assert_eq!(verify_generating_sequence(&m(9)).missing, vec![1, 2]);
    assert!(gs_missing_12(3).is_err());

    let q = |k| gs_missing_1248(k).unwrap().0;
    assert_eq!((signed(&q(7)), q(7).turns), (vec![5, 14, 3, 6, 11], BTreeSet::from([1])));
    assert_eq!((signed(&q(8)), q(8).turns), (vec![3, 9, 5, 6, 11, 7], BTreeSet::from([2])));
    let r = verify_generating_sequence(&q(11));
    assert!(r.valid);
    assert_eq!(r.missing, vec![1, 2, 4, 8]);
    assert!(gs_missing_1248(6).is_err());
}

#[test]
fn odd_family_sum_is_a_unit() {
    for l in 3i64..=2000 {
        assert_eq!((4 * l * l - 7 * l - 6).gcd(&(8 * l + 5)), 1, "l = {l}");
    }
}

#[test]
fn thirteen_vertex_labels() {
    let p = expand_to_circular(&gs(13, &[1, 2, 4], &[])).unwrap();
    assert_eq!(p.labels.len(), 41);
    assert_eq!(&p.labels[..9], &[0, 1, 3, 7, 8, 10, 1, 2, 4]);
    assert_eq!(&p.labels[39..], &[0, 1]);
    assert!(p.layout.iter().all(|&b| b == 0));
    let seq = expand_pair(&p).unwrap();
    assert!(seq.circular && is_good(&seq));
}

#[test]
fn seventeen_vertex_walk_with_a_turn() {
    let seq = circular_complex(&gs(17, &[3, 2, 7, 6], &[3])).unwrap();
    let want: Vec<Triangle> =
        [[0, 3, 5], [3, 5, 12], [5, 12, 1], [5, 1, 4], [1, 4, 6], [4, 6, 13], [6, 13, 2], [6, 2, 5]]
            .iter()
            .map(|&[a, b, c]| tri(a, b, c))
            .collect();
    assert_eq!(&seq.triangles[..8], &want[..]);
    assert!(seq.circular && is_good(&seq));
    assert_eq!(seq.len(), 68);
}

#[test]
fn coverage_is_twice_the_length() {
    for k in 3..=20 {
        let g = gs_full(k).unwrap();
        let seq = circular_complex(&g).unwrap();
        let mult = diamforge::complex::edge_multiplicity(&seq);
        assert!(mult.values().all(|&c| c <= 2));
        assert_eq!(mult.len(), 2 * g.m() * g.n as usize);
    }
}

#[test]
fn cuts_at_single_edges() {
    let seq = circular_complex(&gs_full(3).unwrap()).unwrap();
    let mult = diamforge::complex::edge_multiplicity(&seq);
    let singles: Vec<Edge> = mult.iter().filter(|(_, &c)| c == 1).map(|(e, _)| *e).collect();
    assert_eq!(singles.len(), 13 * 3);
    for e in singles {
        let cut = cut_circular(&seq, &CutSpec { destroyed_edge: e, end_edge: None, second_end_edge: None }).unwrap();
        assert_eq!(cut.len(), 38);
        assert!(is_good(&cut));
        assert_eq!(diamforge::complex::covered_edges(&cut).len(), 77);
    }
    let doubled = *mult.iter().find(|(_, &c)| c == 2).unwrap().0;
    assert!(cut_circular(&seq, &CutSpec { destroyed_edge: doubled, end_edge: None, second_end_edge: None }).is_err());
}

#[test]
fn named_cut_edges() {
    for k in 4..=60 {
        let (g, spec) = gs_missing_12(k).unwrap();
        let seq = circular_complex(&g).unwrap();
        let mult = diamforge::complex::edge_multiplicity(&seq);
        let end = Edge::new(0, 4 * k - 2);
        assert_eq!(mult.get(&spec.destroyed_edge), Some(&1), "k = {k}");
        let cut = cut_circular(&seq, &spec).unwrap();
        assert!(cut.triangles.last().unwrap().contains_edge(end));
        assert_eq!(diamforge::complex::edge_multiplicity(&cut)[&end], 1, "k = {k}");
        if k >= 5 {
            assert_eq!(mult.get(&Edge::new(0, 13)), Some(&1), "k = {k}");
            let cut = cut_circular(&seq, &cut_spec_0_13(k).unwrap()).unwrap();
            assert!(cut.triangles.last().unwrap().contains_edge(Edge::new(0, 7)));
        }
    }
    assert!(cut_spec_0_13(4).is_err());
    for k in 7..=60 {
        let (g, spec) = gs_missing_1248(k).unwrap();
        let seq = circular_complex(&g).unwrap();
        assert!(seq.triangles.contains(&tri(0, 6, 17)), "k = {k}");
        let cut = cut_circular(&seq, &spec).unwrap();
        assert!(cut.triangles[0].contains_edge(Edge::new(0, 6)));
        assert!(cut.triangles.last().unwrap().contains_edge(Edge::new(6, 17)));
        assert!(is_good(&cut));
    }
}

/// Every length-3 turn-free sequence mod 13 with a unit sum: the conditions
/// hold exactly when the raw expansion is a good circular walk.
#[test]
fn brute_force_thirteen() {
    let n = 13u32;
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                if (a + b + c) % n == 0 {
                    continue;
                }
                let g = gs(n, &[a as i64, b as i64, c as i64], &[]);
                let terms = [a, b, c];
                let mut x = 0;
                let mut labels = Vec::new();
                for i in 0..3 * n as usize + 2 {
                    labels.push(x);
                    x = (x + terms[i % 3]) % n;
                }
                let layout = vec![0; labels.len() - 3];
                let good = expand_pair(&LabelsLayout { n, labels, layout })
                    .map(|s| s.circular && is_good(&s))
                    .unwrap_or(false);
                assert_eq!(verify_generating_sequence(&g).valid, good, "({a},{b},{c})");
            }
        }
    }
}
