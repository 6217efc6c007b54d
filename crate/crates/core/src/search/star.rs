use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::model::{HostColoring, Side, Vertex};

/// A balanced `K_{1,k}` found by degree tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BalancedStar {
    pub center: Vertex,
    pub red_leaves: Vec<Vertex>,
    pub blue_leaves: Vec<Vertex>,
}

/// Looks for a vertex with at least `floor(k/2)` edges of each color.
///
/// For even `k` that is exactly a balanced star. For odd `k` the remaining
/// leaf comes from whichever color has spare degree, which always exists
/// because `deg_R + deg_B = n >= k`.
pub fn has_balanced_star(c: &HostColoring, k: usize) -> Result<Option<BalancedStar>> {
    let n = c.n();
    if k < 2 {
        return Err(Error::InvalidParameter(format!("star size k = {k} must be at least 2")));
    }
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "K_{{1,{k}}} does not fit K_{{{n},{n}}}"
        )));
    }
    let half = k / 2;
    let centers = (0..n).map(Vertex::left).chain((0..n).map(Vertex::right));
    for center in centers {
        let red = c.red_degree(center);
        let blue = n - red;
        if red.min(blue) < half {
            continue;
        }
        let red_take = if k % 2 == 1 && red > half { half + 1 } else { half };
        let blue_take = k - red_take;
        let row = c.red_neighbours(center);
        let leaf_side = match center.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        let red_leaves = bits::ones(row)
            .take(red_take)
            .map(|i| Vertex::new(leaf_side, i))
            .collect();
        let blue_leaves = (0..n)
            .filter(|&i| !bits::get(row, i))
            .take(blue_take)
            .map(|i| Vertex::new(leaf_side, i))
            .collect();
        return Ok(Some(BalancedStar {
            center,
            red_leaves,
            blue_leaves,
        }));
    }
    Ok(None)
}
