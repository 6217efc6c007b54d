//! Tonality spectra and the r-tonal / omnitonal decisions.
//!
//! A value `r` is achievable when some vertex set `U`, lying entirely on one
//! host side after orienting each component, has exactly `r` edges between
//! `U` and its neighbourhood. Such a `U` is independent, so the edge count is
//! just the degree sum over `U`; the spectrum is therefore the Minkowski sum,
//! over components, of the subset sums of either side's degree multiset.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Orientation, PatternGraph, Side, Vertex};

/// `achievable[r]` for `r` in `0..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TonalitySpectrum {
    pub m: usize,
    pub achievable: Vec<bool>,
}

impl TonalitySpectrum {
    pub fn contains(&self, r: usize) -> bool {
        self.achievable.get(r).copied().unwrap_or(false)
    }

    pub fn values(&self) -> Vec<usize> {
        (0..=self.m).filter(|&r| self.achievable[r]).collect()
    }

    pub fn is_full(&self) -> bool {
        self.achievable.iter().all(|&a| a)
    }
}

/// Whether components may be oriented independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bipartition {
    /// Each component chooses its own orientation.
    #[default]
    Free,
    /// `U` must lie inside side 0 or inside side 1 of the pattern as labeled.
    Fixed,
}

/// Reachable subset sums of `degrees`, as a boolean vector of length
/// `sum + 1`.
fn subset_sums(degrees: &[usize]) -> Vec<bool> {
    let total: usize = degrees.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    let mut hi = 0;
    for &d in degrees.iter().filter(|&&d| d > 0) {
        for s in (0..=hi).rev() {
            if reach[s] {
                reach[s + d] = true;
            }
        }
        hi += d;
    }
    reach
}

fn minkowski(a: &[bool], b: &[bool]) -> Vec<bool> {
    let mut out = vec![false; a.len() + b.len() - 1];
    for (x, _) in a.iter().enumerate().filter(|(_, &v)| v) {
        for (y, _) in b.iter().enumerate().filter(|(_, &v)| v) {
            out[x + y] = true;
        }
    }
    out
}

fn union(a: &[bool], b: &[bool]) -> Vec<bool> {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).copied().unwrap_or(false) || b.get(i).copied().unwrap_or(false))
        .collect()
}

/// Component-wise reachable values under free orientation.
fn component_options(g: &PatternGraph) -> Vec<Vec<bool>> {
    g.components()
        .iter()
        .map(|c| union(&subset_sums(&c.deg0), &subset_sums(&c.deg1)))
        .collect()
}

pub fn tonality_spectrum(g: &PatternGraph) -> TonalitySpectrum {
    tonality_spectrum_with(g, Bipartition::Free)
}

pub fn tonality_spectrum_with(g: &PatternGraph, mode: Bipartition) -> TonalitySpectrum {
    let m = g.edge_count();
    let achievable = match mode {
        Bipartition::Free => {
            let mut acc = vec![true];
            for opt in component_options(g) {
                acc = minkowski(&acc, &opt);
            }
            acc
        }
        Bipartition::Fixed => {
            let side0: Vec<usize> = g.degree_multiset(Side::Left);
            let side1: Vec<usize> = g.degree_multiset(Side::Right);
            union(&subset_sums(&side0), &subset_sums(&side1))
        }
    };
    let mut achievable = achievable;
    achievable.resize(m + 1, false);
    TonalitySpectrum { m, achievable }
}

/// Largest pattern accepted by [`spectrum_bruteforce`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

/// Independent oracle for [`tonality_spectrum`]: enumerates every vertex set
/// `U` that is one-sided inside each component (which is exactly what some
/// orientation vector makes one-sided globally) and counts the edges leaving
/// `U` by inspecting the edge list.
pub fn spectrum_bruteforce(g: &PatternGraph) -> Result<TonalitySpectrum> {
    let nv = g.vertex_count();
    if nv > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::SizeGuard(format!(
            "brute-force spectrum needs at most {BRUTE_FORCE_MAX_VERTICES} vertices, pattern has {nv}"
        )));
    }
    // Bit layout: side-0 vertex i is bit i, side-1 vertex j is bit p + j.
    let p = g.p();
    let bit = |v: Vertex| match v.side {
        Side::Left => 1u32 << v.index,
        Side::Right => 1u32 << (p + v.index),
    };
    let sides: Vec<(u32, u32)> = g
        .components()
        .iter()
        .map(|c| {
            let s0 = c.side0.iter().fold(0, |acc, &i| acc | bit(Vertex::left(i)));
            let s1 = c.side1.iter().fold(0, |acc, &j| acc | bit(Vertex::right(j)));
            (s0, s1)
        })
        .collect();
    let edge_masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(i, j)| bit(Vertex::left(i)) | bit(Vertex::right(j)))
        .collect();

    let m = g.edge_count();
    let mut achievable = vec![false; m + 1];
    for u in 0u32..(1u32 << nv) {
        if sides.iter().any(|&(s0, s1)| u & s0 != 0 && u & s1 != 0) {
            continue;
        }
        let e = edge_masks.iter().filter(|&&em| em & u != 0).count();
        achievable[e] = true;
    }
    Ok(TonalitySpectrum { m, achievable })
}

/// Whether `g` is bipartite `r`-tonal, for `0 <= r <= floor(m / 2)`.
pub fn is_r_tonal(g: &PatternGraph, r: usize) -> Result<bool> {
    let m = g.edge_count();
    if r > m / 2 {
        return Err(Error::InvalidParameter(format!(
            "r = {r} outside the tonal range 0..={}",
            m / 2
        )));
    }
    Ok(tonality_spectrum(g).contains(r))
}

pub fn is_omnitonal(g: &PatternGraph) -> bool {
    tonality_spectrum(g).is_full()
}

/// A one-sided vertex set `U` with `e(U, N(U)) = achieved_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TonalWitness {
    /// Orientation per component; every vertex of `U` lands on the host's
    /// left side under it.
    pub orientation_per_component: Vec<Orientation>,
    /// Pattern vertices of `U`, sorted.
    #[serde(rename = "U")]
    pub u: Vec<Vertex>,
    pub achieved_r: usize,
}

impl TonalWitness {
    /// Recounts the witness by direct edge inspection.
    pub fn validate(&self, g: &PatternGraph) -> std::result::Result<(), String> {
        if self.orientation_per_component.len() != g.components().len() {
            return Err("one orientation per component expected".into());
        }
        for &v in &self.u {
            let o = self.orientation_per_component[g.component_of(v)];
            if o.host_side(v.side) != Side::Left {
                return Err(format!("{v} is not on the chosen side"));
            }
        }
        let in_u = |v: Vertex| self.u.binary_search(&v).is_ok();
        let count = g
            .edges()
            .iter()
            .filter(|&&(i, j)| in_u(Vertex::left(i)) || in_u(Vertex::right(j)))
            .count();
        if count != self.achieved_r {
            return Err(format!("e(U, N(U)) = {count}, witness claims {}", self.achieved_r));
        }
        Ok(())
    }
}

/// Lexicographically smallest index subset of `degrees` (positive entries
/// only) with sum `target`, if any.
fn smallest_subset(degrees: &[usize], target: usize) -> Option<Vec<usize>> {
    let k = degrees.len();
    // suffix[i][s]: some subset of degrees[i..] sums to s.
    let mut suffix = vec![vec![false; target + 1]; k + 1];
    suffix[k][0] = true;
    for i in (0..k).rev() {
        let d = degrees[i];
        for s in 0..=target {
            suffix[i][s] = suffix[i + 1][s] || (d > 0 && s >= d && suffix[i + 1][s - d]);
        }
    }
    if !suffix[0][target] {
        return None;
    }
    let mut picked = Vec::new();
    let mut s = target;
    for i in 0..k {
        let d = degrees[i];
        if s == 0 {
            break;
        }
        if d > 0 && d <= s && suffix[i + 1][s - d] {
            picked.push(i);
            s -= d;
        }
    }
    Some(picked)
}

/// Reconstructs a one-sided `U` achieving `r` by subset-sum traceback and
/// validates it before returning.
pub fn witness_set(g: &PatternGraph, r: usize) -> Result<TonalWitness> {
    let options = component_options(g);
    // prefix[c][s]: the first c components reach s.
    let mut prefix: Vec<Vec<bool>> = vec![vec![true]];
    for opt in &options {
        let next = minkowski(prefix.last().expect("non-empty"), opt);
        prefix.push(next);
    }
    if !prefix.last().expect("non-empty").get(r).copied().unwrap_or(false) {
        return Err(Error::NotAchievable { r });
    }

    let comps = g.components();
    let mut orientation = vec![Orientation::AsIs; comps.len()];
    let mut u = Vec::new();
    let mut remaining = r;
    for c in (0..comps.len()).rev() {
        let before = &prefix[c];
        let comp = &comps[c];
        // Smallest contribution first, side 0 before side 1.
        let choice = (0..=remaining.min(comp.edge_count)).find_map(|v| {
            if !before.get(remaining - v).copied().unwrap_or(false) {
                return None;
            }
            [Side::Left, Side::Right].into_iter().find_map(|side| {
                smallest_subset(comp.degrees(side), v).map(|picked| (v, side, picked))
            })
        });
        let (v, side, picked) = choice.expect("prefix table guarantees a choice");
        if !picked.is_empty() {
            orientation[c] = Orientation::sending_to_left(side);
            u.extend(picked.into_iter().map(|k| Vertex::new(side, comp.vertices(side)[k])));
        }
        remaining -= v;
    }
    u.sort_unstable();

    let witness = TonalWitness {
        orientation_per_component: orientation,
        u,
        achieved_r: r,
    };
    witness
        .validate(g)
        .map_err(|e| Error::InvalidPattern(format!("witness failed validation: {e}")))?;
    Ok(witness)
}
