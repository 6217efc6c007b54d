use std::time::Instant;

use super::flow::Circulation;
use super::{BbalReport, Method};
use crate::error::{Error, Result};
use crate::model::HostColoring;
use crate::search::has_balanced_star;

/// Per-vertex red-degree intervals for `a` red-bounded left vertices and
/// `b` red-bounded right vertices; the rest are blue-bounded.
fn intervals(n: usize, cap: usize, bounded: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|v| if v < bounded { (0, cap) } else { (n - cap, n) })
        .collect()
}

/// A red edge set with the given red-degree intervals and a total in
/// `[tau, n² - tau]`, if one exists.
fn realize(
    n: usize,
    left: &[(usize, usize)],
    right: &[(usize, usize)],
    tau: usize,
) -> Option<HostColoring> {
    // Nodes: source 0, left 1..=n, right n+1..=2n, sink 2n+1.
    let (s, t) = (0, 2 * n + 1);
    let mut c = Circulation::new(2 * n + 2);
    for (i, &(lo, hi)) in left.iter().enumerate() {
        c.add_edge(s, 1 + i, lo as i64, hi as i64);
    }
    let first_cell = left.len();
    for i in 0..n {
        for j in 0..n {
            c.add_edge(1 + i, 1 + n + j, 0, 1);
        }
    }
    for (j, &(lo, hi)) in right.iter().enumerate() {
        c.add_edge(1 + n + j, t, lo as i64, hi as i64);
    }
    c.add_edge(t, s, tau as i64, (n * n - tau) as i64);
    let flows = c.solve()?;
    HostColoring::from_fn(n, |i, j| flows[first_cell + i * n + j] == 1).ok()
}

/// Exact maximum of `min(|R|, |B|)` over colorings of `K_{n,n}` without a
/// balanced `K_{1,k}`, for even `k`.
///
/// Such a coloring is exactly one where every vertex has red degree at most
/// `c = k/2 - 1` or blue degree at most `c`. Because the host is complete,
/// only the numbers of red-bounded vertices per side matter, so each pair
/// `(a, b)` in `[0, n]²` is one degree-constrained subgraph problem. For each
/// the largest feasible `tau` is found by binary search over circulation
/// feasibility, and the maximum over all pairs is reported with a realizing
/// coloring.
pub fn exact_bbal_star(n: usize, k: usize) -> Result<BbalReport> {
    if k < 2 || k % 2 == 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need even k with 2 <= k <= n (k = {k}, n = {n})"
        )));
    }
    let start = Instant::now();
    let cap = k / 2 - 1;
    let half = n * n / 2;
    let mut best: Option<(usize, HostColoring)> = None;
    let mut examined = 0u64;
    for a in 0..=n {
        let left = intervals(n, cap, a);
        for b in 0..=n {
            examined += 1;
            let right = intervals(n, cap, b);
            // Only values above the current best are worth proving.
            let floor = best.as_ref().map_or(0, |(v, _)| v + 1);
            if floor > half {
                continue;
            }
            let Some(mut witness) = realize(n, &left, &right, floor) else {
                continue;
            };
            let (mut lo, mut hi) = (floor, half);
            while lo < hi {
                let mid = (lo + hi).div_ceil(2);
                match realize(n, &left, &right, mid) {
                    Some(c) => {
                        lo = mid;
                        witness = c;
                    }
                    None => hi = mid - 1,
                }
            }
            best = Some((lo, witness));
        }
    }
    let (value, coloring) = best.expect("the all-blue coloring always satisfies a = n, b = n");
    let (red, blue) = coloring.color_counts();
    let minority = if red <= blue { coloring.clone() } else { coloring.complement() };
    let verified = red.min(blue) == value && has_balanced_star(&coloring, k)?.is_none();
    Ok(BbalReport {
        n,
        pattern_description: format!("star K_{{1,{k}}}"),
        exact_value: value,
        extremal_red_graphs: vec![minority.red_edges().collect()],
        colorings_examined: examined,
        extremal_verified: verified,
        method: Method::FlowOracle,
        shard: None,
        elapsed_millis: start.elapsed().as_millis() as u64,
    })
}
