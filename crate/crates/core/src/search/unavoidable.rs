use itertools::Itertools;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::model::{Color, HostColoring, Side, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnavoidableKind {
    /// `K_{T, t+T}` whose core `A × B1` is a monochromatic `K_{T,T}`.
    #[serde(rename = "T-by-(t+T)")]
    TByTPlusT,
    /// `K_{t, 2T}` whose core `A × B1` is a monochromatic `K_{t,T}`.
    #[serde(rename = "t-by-(2T)")]
    SmallByTwoT,
}

/// `A × B1` is entirely `core_color`, `A × B2` entirely the other color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UnavoidableWitness {
    pub kind: UnavoidableKind,
    pub core_color: Color,
    pub a: Vec<Vertex>,
    pub b1: Vec<Vertex>,
    pub b2: Vec<Vertex>,
    pub t: usize,
    #[serde(rename = "T")]
    pub big_t: usize,
}

impl UnavoidableWitness {
    /// Re-checks every block edge against the host.
    pub fn validate(&self, host: &HostColoring) -> std::result::Result<(), String> {
        let (a_len, b1_len, b2_len) = match self.kind {
            UnavoidableKind::TByTPlusT => (self.big_t, self.big_t, self.t),
            UnavoidableKind::SmallByTwoT => (self.t, self.big_t, self.big_t),
        };
        if self.a.len() != a_len || self.b1.len() != b1_len || self.b2.len() != b2_len {
            return Err("block sizes do not match the kind".into());
        }
        let a_side = self.a.first().map(|v| v.side).ok_or("empty A")?;
        if self.a.iter().any(|v| v.side != a_side)
            || self.b1.iter().chain(&self.b2).any(|v| v.side == a_side)
        {
            return Err("blocks are not on opposite sides".into());
        }
        if self.b1.iter().any(|v| self.b2.contains(v)) || !self.a.iter().all_unique() {
            return Err("blocks overlap".into());
        }
        for (block, color) in [(&self.b1, self.core_color), (&self.b2, self.core_color.other())] {
            for &x in &self.a {
                for &y in block.iter() {
                    if host.edge_color(x, y) != color {
                        return Err(format!("edge {x}-{y} is not {color:?}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exhaustive search for either colored pattern with parameters `t <= T`.
///
/// For every candidate `A` on either host side, each opposite vertex is
/// classified as all-red to `A`, all-blue to `A`, or mixed, by a masked
/// popcount of its red row.
pub fn find_unavoidable_pattern(
    c: &HostColoring,
    t: usize,
    big_t: usize,
) -> Result<Option<UnavoidableWitness>> {
    let n = c.n();
    if t < 1 || big_t < t || t + big_t > n || 2 * big_t > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= t <= T, t + T <= n and 2T <= n (t = {t}, T = {big_t}, n = {n})"
        )));
    }
    for kind in [UnavoidableKind::SmallByTwoT, UnavoidableKind::TByTPlusT] {
        let (a_len, b1_len, b2_len) = match kind {
            UnavoidableKind::TByTPlusT => (big_t, big_t, t),
            UnavoidableKind::SmallByTwoT => (t, big_t, big_t),
        };
        for a_side in [Side::Left, Side::Right] {
            let b_side = a_side.other();
            for a in (0..n).combinations(a_len) {
                let a_mask = bits::from_indices(n, &a);
                let mut all_red = Vec::new();
                let mut all_blue = Vec::new();
                for y in 0..n {
                    let row = c.red_neighbours(Vertex::new(b_side, y));
                    match bits::count_and(row, &a_mask) {
                        0 => all_blue.push(y),
                        k if k == a_len => all_red.push(y),
                        _ => {}
                    }
                }
                for core in [Color::Red, Color::Blue] {
                    let (core_set, other_set) = match core {
                        Color::Red => (&all_red, &all_blue),
                        Color::Blue => (&all_blue, &all_red),
                    };
                    if core_set.len() >= b1_len && other_set.len() >= b2_len {
                        let side = |s: Side, ix: &[usize]| ix.iter().map(|&i| Vertex::new(s, i)).collect();
                        return Ok(Some(UnavoidableWitness {
                            kind,
                            core_color: core,
                            a: side(a_side, &a),
                            b1: side(b_side, &core_set[..b1_len]),
                            b2: side(b_side, &other_set[..b2_len]),
                            t,
                            big_t,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
