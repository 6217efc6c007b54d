//! Pattern generators: labeled trees from Prüfer sequences, random
//! patterns, and an exhaustive enumerator of bipartite edge sets up to
//! relabeling.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::model::PatternGraph;

/// Edges of the labeled tree on `seq.len() + 2` vertices with Prüfer
/// sequence `seq`.
pub fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Calls `f` on every Prüfer sequence for trees on `vertices >= 2`
/// vertices, in lexicographic order.
pub fn for_each_prufer(vertices: usize, mut f: impl FnMut(&[usize])) {
    assert!(vertices >= 2, "Prüfer sequences need at least two vertices");
    let len = vertices - 2;
    let mut seq = vec![0; len];
    loop {
        f(&seq);
        let Some(pos) = (0..len).rev().find(|&i| seq[i] + 1 < vertices) else {
            return;
        };
        seq[pos] += 1;
        seq[pos + 1..].fill(0);
    }
}

/// Splits the vertices `0..vertices` of a bipartite graph into sides by
/// breadth-first 2-coloring (each component's smallest vertex on side 0).
pub fn bipartite_pattern(vertices: usize, edges: &[(usize, usize)]) -> Result<PatternGraph> {
    let mut adj = vec![Vec::new(); vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side = vec![u8::MAX; vertices];
    for s in 0..vertices {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Err(Error::InvalidPattern(format!("odd cycle through {u} and {v}")));
                }
            }
        }
    }
    let mut index = vec![0; vertices];
    let mut sizes = [0usize; 2];
    for v in 0..vertices {
        let s = side[v] as usize;
        index[v] = sizes[s];
        sizes[s] += 1;
    }
    let pattern_edges = edges
        .iter()
        .map(|&(u, v)| {
            if side[u] == 0 {
                (index[u], index[v])
            } else {
                (index[v], index[u])
            }
        })
        .collect();
    PatternGraph::new(sizes[0], sizes[1], pattern_edges)
}

/// The tree with Prüfer sequence `seq`, as a pattern.
pub fn tree_from_prufer(seq: &[usize]) -> PatternGraph {
    bipartite_pattern(seq.len() + 2, &prufer_edges(seq)).expect("trees are bipartite")
}

/// Uniform labeled tree on `vertices >= 1` vertices.
pub fn random_tree(rng: &mut impl Rng, vertices: usize) -> PatternGraph {
    match vertices {
        0 => panic!("a tree needs a vertex"),
        1 => PatternGraph::new(1, 0, Vec::new()).expect("single vertex"),
        _ => {
            let seq: Vec<usize> = (0..vertices - 2).map(|_| rng.gen_range(0..vertices)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Random pattern with `1..=max_vertices` vertices split randomly between
/// the sides, each possible edge present with a random density drawn once.
pub fn random_pattern(rng: &mut impl Rng, max_vertices: usize) -> PatternGraph {
    assert!(max_vertices >= 1);
    let total = rng.gen_range(1..=max_vertices);
    let p = rng.gen_range(0..=total);
    let q = total - p;
    let density: f64 = rng.gen();
    let edges = (0..p)
        .flat_map(|i| (0..q).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    PatternGraph::new(p, q, edges).expect("generated edges are distinct and in range")
}

/// Calls `f` on every `p × q` biadjacency matrix with at most `max_edges`
/// ones whose rows and columns are both lexicographically non-increasing.
///
/// Every 0/1 matrix can be brought into this doubly lexical form by
/// permuting rows and columns, so the enumeration meets every bipartite
/// graph with labeled sides of sizes `p` and `q` up to relabeling (some
/// classes more than once).
pub fn for_each_doubly_lexical(p: usize, q: usize, max_edges: usize, mut f: impl FnMut(&PatternGraph)) {
    assert!(q < 32, "rows are packed in 32 bits");
    let mut rows = vec![0u32; p];
    // `tied[j]`: columns j and j+1 agree on every row placed so far.
    let tied = vec![true; q.saturating_sub(1)];
    fill(p, q, 0, max_edges, &mut rows, &tied, &mut f);
}

fn fill(
    p: usize,
    q: usize,
    i: usize,
    budget: usize,
    rows: &mut [u32],
    tied: &[bool],
    f: &mut impl FnMut(&PatternGraph),
) {
    if i == p {
        let edges = rows
            .iter()
            .enumerate()
            .flat_map(|(r, &bits)| (0..q).filter(move |&j| bits >> (q - 1 - j) & 1 == 1).map(move |j| (r, j)))
            .collect();
        f(&PatternGraph::new(p, q, edges).expect("matrix entries are distinct"));
        return;
    }
    let top = if i == 0 { (1u32 << q) - 1 } else { rows[i - 1] };
    let bit = |row: u32, j: usize| (row >> (q - 1 - j)) & 1;
    let mut next_tied = vec![false; tied.len()];
    for row in (0..=top).rev() {
        let ones = row.count_ones() as usize;
        if ones > budget {
            continue;
        }
        let mut ok = true;
        for j in 0..tied.len() {
            let (a, b) = (bit(row, j), bit(row, j + 1));
            if tied[j] && a < b {
                ok = false;
                break;
            }
            next_tied[j] = tied[j] && a == b;
        }
        if ok {
            rows[i] = row;
            fill(p, q, i + 1, budget - ones, rows, &next_tied.clone(), f);
        }
    }
}
