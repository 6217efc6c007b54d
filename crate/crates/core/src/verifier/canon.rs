//! Exact canonical forms of small bipartite graphs under row permutations,
//! column permutations and side swap.

use itertools::Itertools;

/// Row-major key: row 0 occupies the most significant `n` bits and column 0
/// is the most significant bit of each row. Comparing keys compares matrices
/// lexicographically.
fn key_of_sorted(rows: &mut [u64], n: usize) -> u64 {
    rows.sort_unstable();
    rows.iter().fold(0, |acc, &r| (acc << n) | r)
}

fn transpose(mask: u64, n: usize) -> u64 {
    let mut t = 0;
    for i in 0..n {
        for j in 0..n {
            if (mask >> (i * n + j)) & 1 == 1 {
                t |= 1 << (j * n + i);
            }
        }
    }
    t
}

/// Smallest key over all `2 (n!)²` relabelings of the red graph encoded by
/// `mask` (bit `i * n + j` is edge `(i, j)`). For a fixed column order the
/// best row order is the sorted one, so only column orders are enumerated.
pub fn canonical_key(mask: u64, n: usize) -> u64 {
    assert!(n * n <= 64, "canonical forms need n <= 8");
    let mut best = u64::MAX;
    let mut rows = vec![0u64; n];
    for m in [mask, transpose(mask, n)] {
        for perm in (0..n).permutations(n) {
            for (i, row) in rows.iter_mut().enumerate() {
                *row = perm
                    .iter()
                    .fold(0, |acc, &j| (acc << 1) | ((m >> (i * n + j)) & 1));
            }
            best = best.min(key_of_sorted(&mut rows, n));
        }
    }
    best
}

/// Edge list of the matrix encoded by a canonical key.
pub fn key_edges(key: u64, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let bit = (n - 1 - i) * n + (n - 1 - j);
            if (key >> bit) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    edges
}
