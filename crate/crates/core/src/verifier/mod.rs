//! Independent checks of balancing numbers: exhaustive enumeration of every
//! coloring at tiny `n`, and an exact max-min flow oracle for stars.

mod canon;
mod exhaustive;
mod experiment;
mod flow;
mod star_oracle;

pub use canon::{canonical_key, key_edges};
pub use exhaustive::{exhaustive_bbal, exhaustive_bbal_shard, merge_reports, ExhaustiveOptions};
pub use experiment::{random_pattern_experiment, sample_coloring, ExperimentReport};
pub use star_oracle::exact_bbal_star;

use serde::Serialize;

use crate::error::Error;
use crate::model::{HostColoring, PatternGraph};
use crate::search::find_balanced_copy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    FlowOracle,
}

/// Which residue class of the enumeration a partial report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShardInfo {
    pub index: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BbalReport {
    pub n: usize,
    pub pattern_description: String,
    pub exact_value: usize,
    /// Color-class graphs attaining the maximum. Exhaustive runs list every
    /// class up to relabeling and side swap, in canonical form; the flow
    /// oracle lists the single graph it realized.
    pub extremal_red_graphs: Vec<Vec<(usize, usize)>>,
    /// Number of colorings enumerated (exhaustive) or cap quadruples solved
    /// (flow oracle).
    pub colorings_examined: u64,
    /// Every listed graph, installed as the red class, avoids balanced copies.
    pub extremal_verified: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shard: Option<ShardInfo>,
    pub elapsed_millis: u64,
}

impl BbalReport {
    /// The report with its timing zeroed, for comparisons.
    pub fn without_timing(&self) -> BbalReport {
        BbalReport {
            elapsed_millis: 0,
            ..self.clone()
        }
    }
}

/// Short human-readable name of a pattern.
pub fn describe_pattern(g: &PatternGraph) -> String {
    let m = g.edge_count();
    if m > 0 && *g == PatternGraph::path(m) {
        format!("path P_{m} ({m} edges)")
    } else if m > 0 && *g == PatternGraph::star(m) {
        format!("star K_{{1,{m}}}")
    } else {
        format!("{}x{} pattern with {m} edges", g.p(), g.q())
    }
}

/// `min(red, blue) == claimed` and the coloring has no balanced copy of `g`.
/// A pattern too large for the host has no copies at all.
pub fn certify_extremal(c: &HostColoring, g: &PatternGraph, claimed: usize) -> bool {
    let (red, blue) = c.color_counts();
    if red.min(blue) != claimed {
        return false;
    }
    match find_balanced_copy(c, g) {
        Ok(found) => found.is_none(),
        Err(Error::PatternTooLarge { .. }) => true,
        Err(_) => false,
    }
}
