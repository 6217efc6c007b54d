use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::HostColoring;
use crate::search::find_unavoidable_pattern;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentReport {
    pub n: usize,
    pub t: usize,
    #[serde(rename = "T")]
    pub big_t: usize,
    pub min_per_color: usize,
    pub trials: u64,
    pub seed: u64,
    pub found: u64,
    /// `.kbc` text of every sampled coloring without the pattern.
    pub missing: Vec<String>,
}

/// The coloring of trial `trial`: ChaCha8 keyed by `seed`, stream `trial`,
/// drawing uniform colorings row by row until both colors have at least
/// `min_per_color` edges. Independent of how trials are scheduled.
pub fn sample_coloring(n: usize, min_per_color: usize, seed: u64, trial: u64) -> HostColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    loop {
        let c = HostColoring::from_fn(n, |_, _| rng.gen::<bool>()).expect("n >= 1");
        let (red, blue) = c.color_counts();
        if red >= min_per_color && blue >= min_per_color {
            return c;
        }
    }
}

/// Samples `trials` colorings with at least `min_per_color` edges of each
/// color and scans each for the unavoidable patterns with parameters
/// `(t, T)`. Misses are reported, never treated as failures.
pub fn random_pattern_experiment(
    n: usize,
    t: usize,
    big_t: usize,
    min_per_color: usize,
    trials: u64,
    seed: u64,
) -> Result<ExperimentReport> {
    if n == 0 || t < 1 || big_t < t || t + big_t > n || 2 * big_t > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= t <= T, t + T <= n and 2T <= n (n = {n}, t = {t}, T = {big_t})"
        )));
    }
    if min_per_color > n * n / 2 {
        return Err(Error::InvalidParameter(format!(
            "min-per-color {min_per_color} is infeasible: at most {} edges can have each color",
            n * n / 2
        )));
    }
    let outcomes: Vec<Option<String>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let c = sample_coloring(n, min_per_color, seed, trial);
            let hit = find_unavoidable_pattern(&c, t, big_t)?;
            Ok(hit.is_none().then(|| c.to_kbc()))
        })
        .collect::<Result<_>>()?;
    let missing: Vec<String> = outcomes.into_iter().flatten().collect();
    Ok(ExperimentReport {
        n,
        t,
        big_t,
        min_per_color,
        trials,
        seed,
        found: trials - missing.len() as u64,
        missing,
    })
}
