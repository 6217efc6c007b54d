use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::canon::{canonical_key, key_edges};
use super::{describe_pattern, BbalReport, Method, ShardInfo};
use crate::error::{Error, Result};
use crate::model::{Color, HostColoring, PatternGraph};
use crate::search::{find_balanced_copy, for_each_copy};

/// Largest host side the enumeration accepts at all (`2^25` colorings).
const HARD_MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveOptions {
    /// Largest `n` accepted without `long_run`.
    pub max_n: usize,
    /// Permits `n = 5`.
    pub long_run: bool,
    pub shards: usize,
    /// Maximum number of colorings a single shard may enumerate.
    pub budget: Option<u64>,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            max_n: 4,
            long_run: false,
            shards: 1,
            budget: None,
        }
    }
}

/// Edge masks of every copy of the pattern in `K_{n,n}`, ordered so that
/// typical colorings meet a balanced one early.
struct CopyMasks {
    masks: Vec<u64>,
    lo: u32,
    hi: u32,
}

impl CopyMasks {
    fn new(n: usize, g: &PatternGraph) -> Result<Self> {
        let host = HostColoring::uniform(n, Color::Blue)?;
        let mut masks = Vec::new();
        // A pattern that does not fit has no copies, so every coloring avoids it.
        if g.fits_in(n) {
            for_each_copy(&host, g, |edges, _| {
                masks.push(edges.fold(0u64, |m, (i, j)| m | 1 << (i * n + j)));
                true
            })?;
        }
        masks.sort_unstable();
        masks.dedup();
        let m = g.edge_count() as u32;
        let mut copies = CopyMasks {
            masks,
            lo: m / 2,
            hi: m.div_ceil(2),
        };
        copies.order_greedily(n);
        Ok(copies)
    }

    #[inline]
    fn balanced(&self, mask: u64, red: u64) -> bool {
        let r = (mask & red).count_ones();
        self.lo <= r && r <= self.hi
    }

    /// Greedy hitting order on a fixed sample of uniform colorings: repeatedly
    /// move to the front the mask that is balanced on the most samples not
    /// yet hit. Masks that never help keep their sorted order at the back.
    fn order_greedily(&mut self, n: usize) {
        const SAMPLES: usize = 256;
        let full = full_mask(n);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut open: Vec<u64> = (0..SAMPLES).map(|_| rng.gen::<u64>() & full).collect();
        let mut rest = std::mem::take(&mut self.masks);
        let mut front = Vec::new();
        while !open.is_empty() && !rest.is_empty() {
            let (best, hits) = rest
                .iter()
                .enumerate()
                .map(|(ix, &m)| (ix, open.iter().filter(|&&s| self.balanced(m, s)).count()))
                .max_by_key(|&(ix, hits)| (hits, std::cmp::Reverse(ix)))
                .expect("rest is non-empty");
            if hits == 0 {
                break;
            }
            let m = rest.remove(best);
            open.retain(|&s| !self.balanced(m, s));
            front.push(m);
        }
        front.extend(rest);
        self.masks = front;
    }

    fn avoided_by(&self, red: u64) -> bool {
        !self.masks.iter().any(|&m| self.balanced(m, red))
    }
}

fn full_mask(n: usize) -> u64 {
    if n * n == 64 {
        u64::MAX
    } else {
        (1u64 << (n * n)) - 1
    }
}

fn check_size(n: usize, opts: &ExhaustiveOptions) -> Result<()> {
    if n == 0 || opts.shards == 0 {
        return Err(Error::InvalidParameter("n and the shard count must be positive".into()));
    }
    let allowed = if opts.long_run {
        opts.max_n.max(HARD_MAX_N)
    } else {
        opts.max_n
    };
    if n > allowed.min(HARD_MAX_N) {
        return Err(Error::SizeGuard(format!(
            "exhaustive enumeration of 2^{} colorings needs {}",
            n * n,
            if n <= HARD_MAX_N { "the long-run option" } else { "n <= 5" }
        )));
    }
    Ok(())
}

/// Enumerates the colorings `x ≡ shard (mod shards)` of `K_{n,n}`, where bit
/// `i * n + j` of `x` marks `(i, j)` red.
///
/// Only colorings with at most half the edges red are tested: complementing
/// preserves balanced copies, and the minority color class is what the
/// report records. Colorings whose minority class is smaller than the best
/// found so far are skipped.
pub fn exhaustive_bbal_shard(
    n: usize,
    g: &PatternGraph,
    opts: &ExhaustiveOptions,
    shard: usize,
) -> Result<BbalReport> {
    check_size(n, opts)?;
    if shard >= opts.shards {
        return Err(Error::InvalidParameter(format!(
            "shard {shard} out of range for {} shards",
            opts.shards
        )));
    }
    let start = Instant::now();
    let copies = CopyMasks::new(n, g)?;
    let full = full_mask(n);
    let edges = (n * n) as u32;
    let total: u64 = 1 << (n * n);

    let mut best = 0u32;
    let mut classes: BTreeSet<u64> = BTreeSet::new();
    let mut examined = 0u64;
    let mut x = shard as u64;
    while x < total {
        examined += 1;
        if let Some(budget) = opts.budget {
            if examined > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    examined: examined - 1,
                });
            }
        }
        let red = x.count_ones();
        if 2 * red <= edges && red >= best && copies.avoided_by(x) {
            if red > best {
                best = red;
                classes.clear();
            }
            classes.insert(canonical_key(x, n));
            if 2 * red == edges {
                classes.insert(canonical_key(!x & full, n));
            }
        }
        x += opts.shards as u64;
    }

    let mut report = BbalReport {
        n,
        pattern_description: describe_pattern(g),
        exact_value: best as usize,
        extremal_red_graphs: Vec::new(),
        colorings_examined: examined,
        extremal_verified: false,
        method: Method::Exhaustive,
        shard: (opts.shards > 1).then_some(ShardInfo {
            index: shard,
            count: opts.shards,
        }),
        elapsed_millis: 0,
    };
    // Listed in edge order so merged and unmerged reports agree.
    report.extremal_red_graphs = classes.into_iter().map(|k| key_edges(k, n)).collect();
    report.extremal_red_graphs.sort();
    report.extremal_verified = reverify(&report, g)?;
    report.elapsed_millis = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Installs each extremal graph as the red class and searches it again.
fn reverify(report: &BbalReport, g: &PatternGraph) -> Result<bool> {
    for edges in &report.extremal_red_graphs {
        let c = HostColoring::from_red_edges(report.n, edges.iter().copied())?;
        match find_balanced_copy(&c, g) {
            Ok(None) | Err(Error::PatternTooLarge { .. }) => {}
            Ok(Some(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Combines two shard reports: larger value wins, equal values union their
/// extremal graphs, and the enumeration counts add up. Associative and
/// commutative; the merged shard tag is cleared once every shard is in.
pub fn merge_reports(a: &BbalReport, b: &BbalReport) -> Result<BbalReport> {
    if a.n != b.n || a.pattern_description != b.pattern_description || a.method != b.method {
        return Err(Error::InvalidParameter("reports describe different runs".into()));
    }
    let graphs = match a.exact_value.cmp(&b.exact_value) {
        std::cmp::Ordering::Greater => a.extremal_red_graphs.clone(),
        std::cmp::Ordering::Less => b.extremal_red_graphs.clone(),
        std::cmp::Ordering::Equal => {
            let set: BTreeSet<&Vec<(usize, usize)>> =
                a.extremal_red_graphs.iter().chain(&b.extremal_red_graphs).collect();
            set.into_iter().cloned().collect()
        }
    };
    let shard = match (a.shard, b.shard) {
        (Some(x), Some(y)) if x.count == y.count && x.index != y.index => {
            // Merged partials keep the smaller index as a representative tag;
            // completeness is visible from the enumeration count.
            Some(ShardInfo {
                index: x.index.min(y.index),
                count: x.count,
            })
        }
        (x, y) => x.or(y),
    };
    let examined = a.colorings_examined + b.colorings_examined;
    let complete = examined == 1u64 << (a.n * a.n);
    Ok(BbalReport {
        n: a.n,
        pattern_description: a.pattern_description.clone(),
        exact_value: a.exact_value.max(b.exact_value),
        extremal_red_graphs: graphs,
        colorings_examined: examined,
        extremal_verified: a.extremal_verified && b.extremal_verified,
        method: a.method,
        shard: if complete { None } else { shard },
        elapsed_millis: a.elapsed_millis.max(b.elapsed_millis),
    })
}

/// Runs every shard (concurrently when `opts.shards > 1`) and merges them.
pub fn exhaustive_bbal(n: usize, g: &PatternGraph, opts: &ExhaustiveOptions) -> Result<BbalReport> {
    check_size(n, opts)?;
    let start = Instant::now();
    let parts: Vec<BbalReport> = (0..opts.shards)
        .into_par_iter()
        .map(|s| exhaustive_bbal_shard(n, g, opts, s))
        .collect::<Result<_>>()?;
    let mut merged = parts[0].clone();
    for p in &parts[1..] {
        merged = merge_reports(&merged, p)?;
    }
    merged.shard = None;
    merged.elapsed_millis = start.elapsed().as_millis() as u64;
    Ok(merged)
}
