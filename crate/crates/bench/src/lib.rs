//! Fixed inputs shared by the benchmarks under `benches/`.

use bicolor_core::{construct_path_extremal, HostColoring, PatternGraph};

/// A coloring with the given red fraction, from a fixed xorshift stream so
/// every run measures the same host.
pub fn dense_host(n: usize, red_per_mille: u64) -> HostColoring {
    let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ n as u64;
    HostColoring::from_fn(n, |_, _| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % 1000 < red_per_mille
    })
    .expect("n is positive")
}

/// Host on which no balanced copy of `P_k` exists, so search must exhaust.
pub fn avoiding_host(n: usize, k: usize) -> HostColoring {
    construct_path_extremal(n, k).expect("valid extremal parameters")
}

/// Ladder-like pattern: a path with a chord every other step.
pub fn ladder(rungs: usize) -> PatternGraph {
    let mut edges = Vec::new();
    for i in 0..rungs {
        edges.push((i, i));
        if i + 1 < rungs {
            edges.push((i, i + 1));
            edges.push((i + 1, i));
        }
    }
    PatternGraph::new(rungs, rungs, edges).expect("edges are distinct")
}
