mod common;

use bicolor_core::generate::random_pattern;
use bicolor_core::{parse_coloring, parse_pattern, serialize_coloring, Color, HostColoring, PatternGraph, Side};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn kbc_round_trip_on_seeded_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let c = common::random_coloring(&mut rng, n);
        let text = serialize_coloring(&c);
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(serialize_coloring(&back), text);
    }
}

#[test]
fn serialization_examples() {
    let red = HostColoring::uniform(1, Color::Red).unwrap();
    assert_eq!(serialize_coloring(&red), "1\nR\n");
    let blue = HostColoring::uniform(2, Color::Blue).unwrap();
    assert_eq!(serialize_coloring(&blue), "2\nBB\nBB\n");
    let m = parse_coloring("2\nRB\nBR\n").unwrap();
    assert_eq!(m.color_counts(), (2, 2));
    assert_eq!(HostColoring::uniform(3, Color::Red).unwrap().color_counts(), (9, 0));
}

#[test]
fn malformed_colorings_are_rejected() {
    for bad in ["", "0\n", "2\nRB\n", "2\nRB\nBR", "2\nRBR\nBR\n", "x\nR\n", "1\nG\n", "2\nRB\nBR\nRR\n"] {
        assert!(parse_coloring(bad).is_err(), "{bad:?} accepted");
    }
}

#[test]
fn pattern_examples() {
    let e = parse_pattern("1 1 1\n0 0\n").unwrap();
    assert_eq!(e.edge_count(), 1);
    let c4 = parse_pattern("2 2 4\n0 0\n0 1\n1 0\n1 1\n").unwrap();
    assert_eq!(c4.components().len(), 1);
    assert_eq!(c4.degree_multiset(Side::Left), vec![2, 2]);
    let p4 = parse_pattern("3 2 4\n0 0\n1 0\n1 1\n2 1\n").unwrap();
    assert_eq!(p4.degree_multiset(Side::Left), vec![1, 1, 2]);
    assert_eq!(p4.degree_multiset(Side::Right), vec![2, 2]);
    assert_eq!(p4, PatternGraph::path(4));
    for bad in ["1 1 1\n0 1\n", "2 2 2\n0 0\n0 0\n", "1 1\n0 0\n", "1 1 2\n0 0\n"] {
        assert!(parse_pattern(bad).is_err(), "{bad:?} accepted");
    }
}

fn pattern_strategy(max_vertices: usize) -> impl Strategy<Value = PatternGraph> {
    any::<u64>().prop_map(move |seed| random_pattern(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices))
}

proptest! {
    #[test]
    fn bg_round_trip(g in pattern_strategy(16)) {
        prop_assert_eq!(parse_pattern(&g.to_bg()).unwrap(), g);
    }

    #[test]
    fn component_degrees_partition_the_pattern(g in pattern_strategy(16)) {
        let mut all0 = Vec::new();
        let mut all1 = Vec::new();
        let mut edges = 0;
        for comp in g.components() {
            let s0: usize = comp.deg0.iter().sum();
            let s1: usize = comp.deg1.iter().sum();
            prop_assert_eq!(s0, comp.edge_count);
            prop_assert_eq!(s1, comp.edge_count);
            all0.extend(comp.deg0.iter().copied());
            all1.extend(comp.deg1.iter().copied());
            edges += comp.edge_count;
        }
        all0.sort_unstable();
        all1.sort_unstable();
        prop_assert_eq!(all0, g.degree_multiset(Side::Left));
        prop_assert_eq!(all1, g.degree_multiset(Side::Right));
        prop_assert_eq!(edges, g.edge_count());
    }

    #[test]
    fn complement_and_transpose_are_involutions(seed in any::<u64>(), n in 1usize..10) {
        let c = common::random_coloring(&mut ChaCha8Rng::seed_from_u64(seed), n);
        prop_assert_eq!(c.complement().complement(), c.clone());
        prop_assert_eq!(c.transpose().transpose(), c.clone());
        let (r, b) = c.color_counts();
        prop_assert_eq!(r + b, n * n);
        prop_assert_eq!(c.complement().color_counts(), (b, r));
    }
}
