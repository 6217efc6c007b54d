//! Exact combinatorics on 2-edge-colored complete bipartite graphs `K_{n,n}`.
//!
//! * [`model`]: hosts, patterns, embeddings and their text formats.
//! * [`tonality`]: tonality spectra, r-tonal and omnitonal decisions.
//! * [`search`]: colored copies, balanced stars and unavoidable patterns.
//! * [`extremal`]: closed-form balancing numbers and extremal colorings.
//! * [`verifier`]: exhaustive and flow-based balancing-number oracles.
//! * [`generate`]: Prüfer trees and random patterns for tests and probes.

mod bits;
pub mod error;
pub mod extremal;
pub mod generate;
pub mod model;
pub mod search;
pub mod tonality;
pub mod verifier;

pub use error::{Error, Result};
pub use extremal::{
    bbal_path_formula, bbal_star_formula, construct_extremal, construct_half_split,
    construct_path_extremal, construct_star_extremal, kst_upper, matches_extremal_family,
    ExtremalFamily, FormulaResult,
};
pub use model::{
    color_counts, parse_coloring, parse_pattern, serialize_coloring, Color, ColoredEmbedding,
    Component, HostColoring, Orientation, PatternGraph, Side, Vertex,
};
pub use search::{
    find_balanced_copy, find_copy_in_range, find_copy_with_red_count, find_unavoidable_pattern,
    has_balanced_star, red_count_histogram, BalancedStar, UnavoidableKind, UnavoidableWitness,
    DEFAULT_HISTOGRAM_BUDGET,
};
pub use tonality::{
    is_omnitonal, is_r_tonal, spectrum_bruteforce, tonality_spectrum, tonality_spectrum_with,
    witness_set, Bipartition, TonalWitness, TonalitySpectrum,
};
pub use verifier::{
    certify_extremal, exact_bbal_star, exhaustive_bbal, exhaustive_bbal_shard, merge_reports,
    random_pattern_experiment, BbalReport, ExhaustiveOptions, ExperimentReport, Method, ShardInfo,
};
