//! Closed-form balancing numbers and the extremal colorings that attain them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{HostColoring, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FormulaResult {
    /// The closed form evaluated literally; below the threshold it need not
    /// be a balancing number (the star form can even be negative).
    pub value: i64,
    /// Smallest admissible `n` is `threshold + 1` for paths and `threshold`
    /// for stars.
    pub threshold: u64,
    pub hypothesis_met: bool,
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and k >= 2 (n = {n}, k = {k})")));
    }
    Ok(())
}

/// Odd `k` shares its balancing number with `k - 1`.
pub fn even_part(k: usize) -> usize {
    k - k % 2
}

/// Balancing number of the path with `k` edges:
/// `floor((k-2)/4) * n + [k ≡ 0 mod 4]`, valid for
/// `n > (k-2)/2 * (k/2 - floor((k-2)/4))`.
pub fn bbal_path_formula(n: usize, k: usize) -> Result<FormulaResult> {
    check_nk(n, k)?;
    let k = even_part(k) as i64;
    let n = n as i64;
    let s = (k - 2) / 4;
    let pendant = i64::from(k % 4 == 0);
    let threshold = (k - 2) / 2 * (k / 2 - s);
    Ok(FormulaResult {
        value: s * n + pendant,
        threshold: threshold as u64,
        hypothesis_met: n > threshold,
    })
}

/// Balancing number of the star `K_{1,k}`: `(k-2)(n - (k-2)/4)`, valid for
/// `n >= k²/2 + k - 2`.
pub fn bbal_star_formula(n: usize, k: usize) -> Result<FormulaResult> {
    check_nk(n, k)?;
    let k = even_part(k) as i64;
    let n = n as i64;
    let h = (k - 2) / 2;
    // (k-2)(n - (k-2)/4) = 2hn - h², integral for even k.
    let value = 2 * h * n - h * h;
    let threshold = k * k / 2 + k - 2;
    Ok(FormulaResult {
        value,
        threshold: threshold as u64,
        hypothesis_met: n >= threshold,
    })
}

/// Kővári–Sós–Turán upper bound `(t-1)^{1/t} n^{2-1/t} + (t-1) n / 2`.
/// For `t = 1` the expression is `0.0`.
pub fn kst_upper(n: usize, t: usize) -> Result<f64> {
    if n < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 1 and t >= 1 (n = {n}, t = {t})")));
    }
    let (n, t) = (n as f64, t as f64);
    Ok((t - 1.0).powf(1.0 / t) * n.powf(2.0 - 1.0 / t) + 0.5 * (t - 1.0) * n)
}

/// Red graph `K_{s,n}` on left vertices `0..s` (`s = floor((k-2)/4)`), plus
/// the pendant edge `(s, 0)` when `k ≡ 0 mod 4`. All other edges blue.
pub fn construct_path_extremal(n: usize, k: usize) -> Result<HostColoring> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("k = {k} must be even and at least 2")));
    }
    let s = (k - 2) / 4;
    let pendant = k.is_multiple_of(4);
    let rows_needed = s + usize::from(pendant);
    if rows_needed > n {
        return Err(Error::InvalidParameter(format!(
            "extremal path coloring needs {rows_needed} left vertices, n = {n}"
        )));
    }
    HostColoring::from_fn(n, |i, j| i < s || (pendant && i == s && j == 0))
}

/// Red graph `H`: left `A = A1 ⊔ A2`, right `B = B1 ⊔ B2` with
/// `|A2| = |B1| = (k-2)/2`; red edges `A1 × B1` and `A2 × B`.
/// Here `A2` is left `0..h` and `B1` is right `0..h`.
pub fn construct_star_extremal(n: usize, k: usize) -> Result<HostColoring> {
    if k < 2 || k % 2 == 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need even k with 2 <= k <= n (k = {k}, n = {n})"
        )));
    }
    let h = (k - 2) / 2;
    HostColoring::from_fn(n, |i, j| i < h || j < h)
}

/// Red edges are `X × Y_r` where `Y_r` is the first half of the right side.
pub fn construct_half_split(n: usize) -> Result<HostColoring> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("half-split needs even n >= 2, got {n}")));
    }
    HostColoring::from_fn(n, |_, j| j < n / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalFamily {
    Path,
    Star,
}

/// Extremal coloring of the family for `(n, k)`, odd `k` mapped to `k - 1`.
pub fn construct_extremal(family: ExtremalFamily, n: usize, k: usize) -> Result<HostColoring> {
    match family {
        ExtremalFamily::Path => construct_path_extremal(n, even_part(k)),
        ExtremalFamily::Star => construct_star_extremal(n, even_part(k)),
    }
}

/// Per side: sorted `(degree, class size)` pairs, where a class groups the
/// non-isolated vertices with identical neighbourhoods.
type SideFingerprint = Vec<(usize, usize)>;

fn side_fingerprint(adj: &BTreeMap<usize, Vec<usize>>) -> SideFingerprint {
    let mut classes: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
    for nbrs in adj.values() {
        *classes.entry(nbrs).or_default() += 1;
    }
    let mut fp: Vec<(usize, usize)> = classes.into_iter().map(|(nb, size)| (nb.len(), size)).collect();
    fp.sort_unstable();
    fp
}

/// Fingerprint of a bipartite edge set with isolated vertices dropped, as an
/// unordered pair of side fingerprints.
fn fingerprint(edges: impl Iterator<Item = (usize, usize)>) -> (SideFingerprint, SideFingerprint) {
    let mut left: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut right: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, j) in edges {
        left.entry(i).or_default().push(j);
        right.entry(j).or_default().push(i);
    }
    let (a, b) = (side_fingerprint(&left), side_fingerprint(&right));
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Whether the red graph or the blue graph of `c` (isolated vertices
/// discarded) has the shape of the family's extremal graph for `(n, k)`.
///
/// The comparison uses degree and neighbourhood-class fingerprints. For the
/// three extremal shapes (`K_{s,n}`, `K_{s,n}` plus a pendant, and the star
/// block graph) every full-degree vertex is adjacent to the entire opposite
/// side, which pins the remaining adjacencies, so fingerprint equality is
/// isomorphism for them.
pub fn matches_extremal_family(c: &HostColoring, family: ExtremalFamily, n: usize, k: usize) -> bool {
    if c.n() != n {
        return false;
    }
    let Ok(target) = construct_extremal(family, n, k) else {
        return false;
    };
    let target_red = target.red_count();
    let target_fp = fingerprint(target.red_edges());
    let (red, blue) = c.color_counts();
    let red_match = red == target_red && fingerprint(c.red_edges()) == target_fp;
    let blue_match = blue == target_red && fingerprint(c.complement().red_edges()) == target_fp;
    red_match || blue_match
}

/// Minimum of `deg_R` and `deg_B` over one vertex.
pub fn min_color_degree(c: &HostColoring, v: Vertex) -> usize {
    let r = c.red_degree(v);
    r.min(c.n() - r)
}
