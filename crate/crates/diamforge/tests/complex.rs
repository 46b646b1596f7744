mod common;

use diamforge::complex::*;
use diamforge::genseq::{circular_complex, cut_circular, gs_full, CutSpec};
use proptest::prelude::*;

fn pair(n: u32, labels: &[u32], layout: &[u8]) -> LabelsLayout {
    LabelsLayout { n, labels: labels.to_vec(), layout: layout.to_vec() }
}

fn n9() -> LabelsLayout {
    pair(
        9,
        &[0, 1, 2, 3, 4, 0, 5, 6, 1, 7, 4, 8, 6, 2, 5, 7, 3, 8, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
    )
}

/// The straight strip of eight triangles on seven vertices.
fn strip7() -> TriangleSeq {
    TriangleSeq::linear(vec![
        tri(0, 1, 2),
        tri(1, 2, 3),
        tri(2, 3, 4),
        tri(3, 4, 0),
        tri(4, 0, 5),
        tri(0, 5, 6),
        tri(5, 6, 1),
        tri(6, 1, 4),
    ])
}

#[test]
fn five_vertex_pair_expands() {
    let seq = expand_pair(&pair(5, &[0, 1, 2, 3, 4, 0], &[0, 0, 0])).unwrap();
    assert_eq!(seq.triangles, vec![tri(0, 1, 2), tri(1, 2, 3), tri(2, 3, 4), tri(3, 4, 0)]);
    assert!(!seq.circular);
    assert_eq!(encode_triples(&seq).unwrap().labels, vec![0, 1, 2, 3, 4, 0]);
}

#[test]
fn single_triangle() {
    let seq = expand_pair(&pair(3, &[0, 1, 2], &[])).unwrap();
    assert_eq!(seq.triangles, vec![tri(0, 1, 2)]);
    assert!(is_good(&seq));
    assert_eq!(dual_diameter(&seq), Ok(0));
    let edges: Vec<Edge> = covered_edges(&seq).into_iter().collect();
    assert_eq!(edges, vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(1, 2)]);
}

#[test]
fn two_triangles_encode_as_forced() {
    let seq = TriangleSeq::linear(vec![tri(0, 1, 2), tri(1, 2, 3)]);
    let p = encode_triples(&seq).unwrap();
    assert_eq!((p.labels, p.layout), (vec![0, 1, 2, 3], vec![0]));
}

#[test]
fn nine_vertex_pair() {
    let seq = expand_pair(&n9()).unwrap();
    assert_eq!(seq.len(), 17);
    assert!(is_good(&seq));
    assert_eq!(dual_diameter(&seq), Ok(16));
    let cert = certify(&seq, 9).unwrap();
    assert_eq!(cert.covered_edges, 35);
    assert_eq!(cert.uncovered_edges, vec![Edge::new(3, 6)]);
    assert!(cert.matches_optimum);
    let back = expand_pair(&encode_triples(&seq).unwrap()).unwrap();
    assert!(common::same_walk(&back.triangles, &seq.triangles));
}

#[test]
fn seven_vertex_strip() {
    let seq = strip7();
    assert!(is_good(&seq));
    assert_eq!(dual_diameter(&seq), Ok(7));
    for x in [0, 2, 3, 5, 6] {
        let mut t = seq.triangles.clone();
        t.push(tri(1, 4, x));
        assert!(!is_good(&TriangleSeq::linear(t)), "apex {x}");
    }
}

#[test]
fn upper_bound_values() {
    assert_eq!(hs_max_diameter(3), Ok(0));
    assert_eq!(hs_max_diameter(6), Ok(5));
    assert_eq!(hs_max_diameter(7), Ok(9));
    assert_eq!(hs_max_diameter(13), Ok(37));
    assert!(hs_max_diameter(2).is_err());
}

#[test]
fn thirteen_vertex_circular_walk() {
    let seq = circular_complex(&gs_full(3).unwrap()).unwrap();
    assert!(seq.circular && is_good(&seq));
    let mult = edge_multiplicity(&seq);
    assert_eq!(mult.len(), 78);
    assert!(mult.values().all(|&c| c <= 2));
    let single = mult.iter().find(|(_, &c)| c == 1).map(|(e, _)| *e).unwrap();
    let cut = cut_circular(&seq, &CutSpec { destroyed_edge: single, end_edge: None, second_end_edge: None }).unwrap();
    assert_eq!(dual_diameter(&cut), Ok(37));
}

#[test]
fn schema_violations() {
    assert!(matches!(pair(5, &[0, 1, 2, 3], &[]).validate(), Err(diamforge::Error::LengthMismatch { .. })));
    assert!(matches!(pair(5, &[0, 1, 2, 3], &[2]).validate(), Err(diamforge::Error::BadBit { .. })));
    assert!(matches!(pair(3, &[0, 1, 5], &[]).validate(), Err(diamforge::Error::LabelOutOfRange { .. })));
    assert!(matches!(expand_pair(&pair(5, &[0, 1, 1], &[])), Err(diamforge::Error::Degenerate { index: 0 })));
}

#[test]
fn disconnected_dual_graph() {
    let seq = TriangleSeq::linear(vec![tri(0, 1, 2), tri(3, 4, 5)]);
    assert_eq!(dual_diameter(&seq), Err(diamforge::Error::Disconnected));
    assert!(!is_good(&seq));
}

proptest! {
    #[test]
    fn codec_round_trip(n in 4u32..=16, choices in prop::collection::vec(any::<u32>(), 0..50)) {
        let seq = common::random_good_walk(n, &choices);
        let back = expand_pair(&encode_triples(&seq).unwrap()).unwrap();
        prop_assert!(common::same_walk(&back.triangles, &seq.triangles));
    }

    #[test]
    fn diameter_and_bound(n in 4u32..=16, choices in prop::collection::vec(any::<u32>(), 0..50)) {
        let seq = common::random_good_walk(n, &choices);
        let d = dual_diameter(&seq).unwrap();
        prop_assert_eq!(d, seq.len() - 1);
        prop_assert!(d as u64 <= hs_max_diameter(n as u64).unwrap());
    }

    /// On arbitrary walks (consecutive triangles sharing an edge), goodness
    /// is exactly the edge-count law.
    #[test]
    fn edge_count_law(n in 5u32..=9, steps in prop::collection::vec((any::<u32>(), 0u8..2), 0..12)) {
        let mut labels = vec![0, 1, 2];
        let mut layout = Vec::new();
        let (mut carried, mut prev, mut last) = (0, 1, 2);
        for (c, y) in steps {
            let keep = if y == 0 { prev } else { carried };
            let options: Vec<u32> = (0..n).filter(|&v| v != keep && v != last).collect();
            let v = options[c as usize % options.len()];
            labels.push(v);
            layout.push(y);
            if y == 0 {
                carried = prev;
            }
            prev = last;
            last = v;
        }
        let seq = expand_pair(&LabelsLayout { n, labels, layout }).unwrap();
        let seq = TriangleSeq::linear(seq.triangles);
        prop_assert_eq!(is_good(&seq), covered_edges(&seq).len() == 2 * seq.len() + 1);
    }
}
