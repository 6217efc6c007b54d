use std::collections::HashSet;

use bicolor_core::extremal::even_part;
use bicolor_core::{
    bbal_path_formula, bbal_star_formula, construct_half_split, construct_path_extremal,
    construct_star_extremal, find_balanced_copy, matches_extremal_family, ExtremalFamily, HostColoring,
    PatternGraph, Side, Vertex,
};
use itertools::Itertools;

#[test]
fn path_constructions_attain_the_formula() {
    for k in (2..=14).step_by(2) {
        for n in 2..=40 {
            let Ok(c) = construct_path_extremal(n, k) else {
                assert!((k - 2) / 4 + usize::from(k % 4 == 0) > n);
                continue;
            };
            assert_eq!(c.red_count() as i64, bbal_path_formula(n, k).unwrap().value, "n={n} k={k}");
        }
    }
}

#[test]
fn star_constructions_have_no_balanced_vertex() {
    for k in (2..=10).step_by(2) {
        for n in k..=30 {
            let c = construct_star_extremal(n, k).unwrap();
            assert_eq!(c.red_count() as i64, bbal_star_formula(n, k).unwrap().value);
            for v in (0..n).map(Vertex::left).chain((0..n).map(Vertex::right)) {
                let r = c.red_degree(v);
                assert!(r.min(n - r) < k / 2, "n={n} k={k} {v}");
            }
        }
    }
}

#[test]
fn half_split_shape() {
    for n in (2..=20).step_by(2) {
        let c = construct_half_split(n).unwrap();
        assert_eq!(c.color_counts(), (n * n / 2, n * n / 2));
        for i in 0..n {
            assert_eq!(c.red_degree(Vertex::left(i)), n / 2);
            let r = c.red_degree(Vertex::new(Side::Right, i));
            assert!(r == 0 || r == n);
        }
    }
}

#[test]
fn path_extremal_colorings_avoid_balanced_paths() {
    for k in (2..=8).step_by(2) {
        let t = bbal_path_formula(2, k).unwrap().threshold as usize;
        for n in (t + 1).max(2)..=t + 3 {
            let c = construct_path_extremal(n, k).unwrap();
            assert!(bbal_path_formula(n, k).unwrap().hypothesis_met);
            for len in [k, k + 1] {
                let g = PatternGraph::path(len);
                if g.fits_in(n) {
                    assert!(find_balanced_copy(&c, &g).unwrap().is_none(), "n={n} k={k} len={len}");
                }
            }
        }
    }
}

#[test]
fn odd_k_uses_the_even_case() {
    for n in 2..20 {
        for k in (3..=15).step_by(2) {
            assert_eq!(bbal_path_formula(n, k).unwrap(), bbal_path_formula(n, k - 1).unwrap());
            assert_eq!(bbal_star_formula(n, k).unwrap(), bbal_star_formula(n, k - 1).unwrap());
        }
    }
    assert_eq!(even_part(7), 6);
}

fn mask(c: &HostColoring) -> u64 {
    c.to_mask().unwrap()
}

/// All images of a red graph under row and column permutations and side
/// swap.
fn relabelings(c: &HostColoring) -> HashSet<u64> {
    let n = c.n();
    let mut out = HashSet::new();
    for base in [c.clone(), c.transpose()] {
        for rows in (0..n).permutations(n) {
            for cols in (0..n).permutations(n) {
                let img = HostColoring::from_fn(n, |i, j| base.is_red(rows[i], cols[j])).unwrap();
                out.insert(mask(&img));
            }
        }
    }
    out
}

/// On `K_{4,4}`, every coloring whose red or blue graph has the right edge
/// count is classified against brute-force isomorphism (no isolated vertices
/// are lost since relabeling keeps every vertex).
#[test]
fn family_matcher_agrees_with_brute_isomorphism_on_k44() {
    let n = 4;
    for (family, k) in [
        (ExtremalFamily::Path, 4),
        (ExtremalFamily::Path, 6),
        (ExtremalFamily::Path, 8),
        (ExtremalFamily::Star, 4),
    ] {
        let target = match family {
            ExtremalFamily::Path => construct_path_extremal(n, k).unwrap(),
            ExtremalFamily::Star => construct_star_extremal(n, k).unwrap(),
        };
        let images = relabelings(&target);
        let m = target.red_count() as u32;
        for x in 0u64..1 << 16 {
            let red = x.count_ones();
            if red != m && 16 - red != m {
                continue;
            }
            let c = HostColoring::from_mask(n, x).unwrap();
            let brute = images.contains(&x) || images.contains(&(!x & 0xffff));
            assert_eq!(matches_extremal_family(&c, family, n, k), brute, "{c:?} {family:?} k={k}");
        }
    }
}

#[test]
fn family_matcher_examples() {
    let one = construct_path_extremal(3, 4).unwrap();
    assert!(matches_extremal_family(&one, ExtremalFamily::Path, 3, 4));
    let moved = HostColoring::from_red_edges(3, [(1, 2)]).unwrap();
    assert!(matches_extremal_family(&moved, ExtremalFamily::Path, 3, 4));
    let matching = HostColoring::from_fn(3, |i, j| i == j).unwrap();
    assert!(!matches_extremal_family(&matching, ExtremalFamily::Path, 3, 4));
    for (n, k) in [(10, 4), (22, 6)] {
        let h = construct_star_extremal(n, k).unwrap();
        assert!(matches_extremal_family(&h, ExtremalFamily::Star, n, k));
        assert!(matches_extremal_family(&h.complement().transpose(), ExtremalFamily::Star, n, k));
    }
}
