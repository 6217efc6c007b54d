//! Colored copies of a pattern inside a host coloring.
//!
//! The search is an exhaustive backtracking over pattern vertices. Each
//! component picks an orientation when its first vertex is placed, vertices
//! are expanded along edges (highest degree first), and host candidates are
//! tried in ascending index. Partial red counts are bounded from both sides.
//!
//! Two host vertices on the same side with identical color rows are twins:
//! exchanging them is an automorphism of the colored host. When both are
//! unused, placing the current pattern vertex on either leads to isomorphic
//! subtrees, so only the lowest unused member of each twin class is tried.
//! This keeps the search exact while collapsing the block-structured hosts
//! (extremal colorings, half-splits) to a handful of branches.

mod star;
mod unavoidable;

pub use star::{has_balanced_star, BalancedStar};
pub use unavoidable::{find_unavoidable_pattern, UnavoidableKind, UnavoidableWitness};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{Color, ColoredEmbedding, HostColoring, Orientation, PatternGraph, Side, Vertex};

/// Default embedding budget for [`red_count_histogram`].
pub const DEFAULT_HISTOGRAM_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone)]
struct Step {
    vertex: Vertex,
    component: usize,
    opens_component: bool,
    /// Pattern neighbours placed before this step.
    back: Vec<Vertex>,
    /// Edges fully placed once this step is done.
    edges_after: usize,
}

/// Placement order for the non-isolated part of a pattern.
#[derive(Debug, Clone)]
struct Plan {
    steps: Vec<Step>,
    isolated: Vec<(usize, Vertex)>,
    /// Component placed first (most edges), if any.
    primary: Option<usize>,
}

impl Plan {
    fn new(g: &PatternGraph) -> Plan {
        let comps = g.components();
        let mut order: Vec<usize> = (0..comps.len())
            .filter(|&c| !comps[c].is_isolated_vertex())
            .collect();
        order.sort_by_key(|&c| std::cmp::Reverse(comps[c].edge_count));

        let mut placed0 = vec![false; g.p()];
        let mut placed1 = vec![false; g.q()];
        let is_placed = |p0: &[bool], p1: &[bool], v: Vertex| match v.side {
            Side::Left => p0[v.index],
            Side::Right => p1[v.index],
        };
        let mut steps = Vec::with_capacity(g.vertex_count());
        let mut edges_done = 0;
        for &c in &order {
            let comp = &comps[c];
            let members: Vec<Vertex> = comp
                .side0
                .iter()
                .map(|&i| Vertex::left(i))
                .chain(comp.side1.iter().map(|&j| Vertex::right(j)))
                .collect();
            let mut first = true;
            for _ in 0..members.len() {
                // Highest degree among frontier vertices (any vertex for the
                // first step), then most placed neighbours, then lowest id.
                let next = members
                    .iter()
                    .copied()
                    .filter(|&v| !is_placed(&placed0, &placed1, v))
                    .filter(|&v| {
                        first
                            || g.neighbours(v)
                                .iter()
                                .any(|&u| is_placed(&placed0, &placed1, Vertex::new(v.side.other(), u)))
                    })
                    .max_by_key(|&v| {
                        let back = g
                            .neighbours(v)
                            .iter()
                            .filter(|&&u| is_placed(&placed0, &placed1, Vertex::new(v.side.other(), u)))
                            .count();
                        (g.degree(v), back, std::cmp::Reverse(v))
                    })
                    .expect("component is connected");
                let back: Vec<Vertex> = g
                    .neighbours(next)
                    .iter()
                    .map(|&u| Vertex::new(next.side.other(), u))
                    .filter(|&u| is_placed(&placed0, &placed1, u))
                    .collect();
                edges_done += back.len();
                match next.side {
                    Side::Left => placed0[next.index] = true,
                    Side::Right => placed1[next.index] = true,
                }
                steps.push(Step {
                    vertex: next,
                    component: c,
                    opens_component: first,
                    back,
                    edges_after: edges_done,
                });
                first = false;
            }
        }
        let isolated = comps
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_isolated_vertex())
            .map(|(id, c)| {
                let v = match (c.side0.first(), c.side1.first()) {
                    (Some(&i), _) => Vertex::left(i),
                    (None, Some(&j)) => Vertex::right(j),
                    _ => unreachable!("components are non-empty"),
                };
                (id, v)
            })
            .collect();
        Plan {
            steps,
            isolated,
            primary: order.first().copied(),
        }
    }
}

/// Twin classes of host vertices: equal red rows (left) or columns (right).
#[derive(Debug, Clone)]
struct TwinClasses {
    left: Vec<usize>,
    right: Vec<usize>,
    left_count: usize,
    right_count: usize,
}

impl TwinClasses {
    fn new(host: &HostColoring) -> Self {
        let classify = |rows: Vec<&[u64]>| {
            let mut ids: HashMap<&[u64], usize> = HashMap::new();
            let classes: Vec<usize> = rows
                .into_iter()
                .map(|r| {
                    let next = ids.len();
                    *ids.entry(r).or_insert(next)
                })
                .collect();
            (classes, ids.len())
        };
        let n = host.n();
        let (left, left_count) = classify((0..n).map(|i| host.red_row(i)).collect());
        let (right, right_count) = classify((0..n).map(|j| host.red_col(j)).collect());
        TwinClasses {
            left,
            right,
            left_count,
            right_count,
        }
    }

    /// Every vertex in its own class.
    fn discrete(n: usize) -> Self {
        TwinClasses {
            left: (0..n).collect(),
            right: (0..n).collect(),
            left_count: n,
            right_count: n,
        }
    }

    fn class(&self, v: Vertex) -> usize {
        match v.side {
            Side::Left => self.left[v.index],
            Side::Right => self.right[v.index],
        }
    }
}

enum Mode<'f> {
    /// Stop at the first embedding in range.
    Find,
    /// Visit every embedding of the non-isolated part; the callback returns
    /// `false` to abort.
    Visit(&'f mut dyn FnMut(&Searcher<'_>, usize) -> bool),
}

struct Searcher<'a> {
    host: &'a HostColoring,
    g: &'a PatternGraph,
    plan: &'a Plan,
    twins: TwinClasses,
    lo: usize,
    hi: usize,
    fix_primary: bool,
    map0: Vec<Vertex>,
    map1: Vec<Vertex>,
    used_left: Vec<bool>,
    used_right: Vec<bool>,
    orientation: Vec<Orientation>,
    marks: Vec<Vec<u32>>,
    stamps: Vec<u32>,
    aborted: bool,
}

impl<'a> Searcher<'a> {
    fn new(
        host: &'a HostColoring,
        g: &'a PatternGraph,
        plan: &'a Plan,
        twins: TwinClasses,
        lo: usize,
        hi: usize,
    ) -> Self {
        let depth = plan.steps.len();
        let classes = twins.left_count.max(twins.right_count);
        Searcher {
            host,
            g,
            plan,
            lo,
            hi,
            fix_primary: false,
            map0: vec![Vertex::left(usize::MAX); g.p()],
            map1: vec![Vertex::left(usize::MAX); g.q()],
            used_left: vec![false; host.n()],
            used_right: vec![false; host.n()],
            orientation: vec![Orientation::AsIs; g.components().len()],
            marks: vec![vec![0; classes]; depth],
            stamps: vec![0; depth],
            twins,
            aborted: false,
        }
    }

    fn image(&self, v: Vertex) -> Vertex {
        match v.side {
            Side::Left => self.map0[v.index],
            Side::Right => self.map1[v.index],
        }
    }

    fn assign(&mut self, v: Vertex, h: Vertex) {
        match v.side {
            Side::Left => self.map0[v.index] = h,
            Side::Right => self.map1[v.index] = h,
        }
        self.set_used(h, true);
    }

    fn set_used(&mut self, h: Vertex, used: bool) {
        match h.side {
            Side::Left => self.used_left[h.index] = used,
            Side::Right => self.used_right[h.index] = used,
        }
    }

    fn is_used(&self, h: Vertex) -> bool {
        match h.side {
            Side::Left => self.used_left[h.index],
            Side::Right => self.used_right[h.index],
        }
    }

    /// Returns `true` when a Find-mode search has succeeded.
    fn run(&mut self, depth: usize, red: usize, mode: &mut Mode<'_>) -> bool {
        if depth == self.plan.steps.len() {
            return match mode {
                Mode::Find => true,
                Mode::Visit(f) => {
                    if !f(self, red) {
                        self.aborted = true;
                    }
                    false
                }
            };
        }
        let plan: &'a Plan = self.plan;
        let step = &plan.steps[depth];
        let m = self.g.edge_count();
        let opts = if !step.opens_component {
            vec![self.orientation[step.component]]
        } else if self.fix_primary && Some(step.component) == plan.primary {
            vec![Orientation::AsIs]
        } else {
            Orientation::BOTH.to_vec()
        };
        let prune_twins = matches!(mode, Mode::Find);

        for o in opts {
            self.orientation[step.component] = o;
            let side = o.host_side(step.vertex.side);
            self.stamps[depth] += 1;
            let stamp = self.stamps[depth];
            for idx in 0..self.host.n() {
                let h = Vertex::new(side, idx);
                if self.is_used(h) {
                    continue;
                }
                if prune_twins {
                    let class = self.twins.class(h);
                    if self.marks[depth][class] == stamp {
                        continue;
                    }
                    self.marks[depth][class] = stamp;
                }
                let added = step
                    .back
                    .iter()
                    .filter(|&&u| self.host.edge_color(h, self.image(u)) == Color::Red)
                    .count();
                let new_red = red + added;
                if new_red > self.hi || new_red + (m - step.edges_after) < self.lo {
                    continue;
                }
                let v = step.vertex;
                self.assign(v, h);
                if self.run(depth + 1, new_red, mode) {
                    // Success keeps the map and the used flags in place.
                    return true;
                }
                self.set_used(h, false);
                if self.aborted {
                    return false;
                }
            }
        }
        false
    }

    /// Completes the current partial map into an embedding by putting the
    /// isolated pattern vertices on the lowest unused host vertices.
    fn embedding(&mut self, red: usize) -> ColoredEmbedding {
        let mut orientation = self.orientation.clone();
        for &(comp, v) in &self.plan.isolated {
            let h = match self.used_left.iter().position(|&u| !u) {
                Some(i) => Vertex::left(i),
                None => Vertex::right(self.used_right.iter().position(|&u| !u).expect("room left")),
            };
            orientation[comp] = if h.side == v.side {
                Orientation::AsIs
            } else {
                Orientation::Flipped
            };
            self.assign(v, h);
        }
        ColoredEmbedding {
            orientation_per_component: orientation,
            side0_map: self.map0.clone(),
            side1_map: self.map1.clone(),
            red_count: red,
            blue_count: self.g.edge_count() - red,
        }
    }
}

fn check_fits(c: &HostColoring, g: &PatternGraph) -> Result<()> {
    if g.fits_in(c.n()) {
        Ok(())
    } else {
        Err(Error::PatternTooLarge {
            vertices: g.vertex_count(),
            n: c.n(),
        })
    }
}

/// Any embedding whose red count lies in `lo..=hi`.
pub fn find_copy_in_range(
    c: &HostColoring,
    g: &PatternGraph,
    lo: usize,
    hi: usize,
) -> Result<Option<ColoredEmbedding>> {
    let m = g.edge_count();
    if lo > hi || hi > m {
        return Err(Error::InvalidParameter(format!(
            "red range {lo}..={hi} outside 0..={m}"
        )));
    }
    check_fits(c, g)?;
    let plan = Plan::new(g);
    let mut searcher = Searcher::new(c, g, &plan, TwinClasses::new(c), lo, hi);
    if searcher.run(0, 0, &mut Mode::Find) {
        // The red count of the found map is recomputed from the map itself.
        let mut e = searcher.embedding(0);
        let red = e.host_edges(g).filter(|&(i, j)| c.is_red(i, j)).count();
        e.red_count = red;
        e.blue_count = m - red;
        debug_assert!(e.validate(c, g).is_ok());
        Ok(Some(e))
    } else {
        Ok(None)
    }
}

/// A copy of `g` with exactly `r` red edges, or `None` if the host has none.
pub fn find_copy_with_red_count(
    c: &HostColoring,
    g: &PatternGraph,
    r: usize,
) -> Result<Option<ColoredEmbedding>> {
    find_copy_in_range(c, g, r, r)
}

/// A copy whose red and blue counts differ by at most one.
pub fn find_balanced_copy(c: &HostColoring, g: &PatternGraph) -> Result<Option<ColoredEmbedding>> {
    let m = g.edge_count();
    find_copy_in_range(c, g, m / 2, m.div_ceil(2))
}

/// Visits every embedding of the non-isolated part of `g` (all orientation
/// vectors, no twin pruning). The callback receives the host edges of the
/// copy and its red count; returning `false` stops the walk.
pub(crate) fn for_each_copy(
    c: &HostColoring,
    g: &PatternGraph,
    mut visit: impl FnMut(&mut dyn Iterator<Item = (usize, usize)>, usize) -> bool,
) -> Result<()> {
    check_fits(c, g)?;
    let plan = Plan::new(g);
    let mut searcher = Searcher::new(c, g, &plan, TwinClasses::discrete(c.n()), 0, g.edge_count());
    let mut cb = |s: &Searcher<'_>, red: usize| {
        let mut edges = g.edges().iter().map(|&(i, j)| {
            let a = s.map0[i];
            let b = s.map1[j];
            match a.side {
                Side::Left => (a.index, b.index),
                Side::Right => (b.index, a.index),
            }
        });
        visit(&mut edges, red)
    };
    searcher.run(0, 0, &mut Mode::Visit(&mut cb));
    Ok(())
}

/// Number of labeled embeddings per red count `r = 0..=m`.
///
/// Embeddings are vertex maps. The component with the most edges keeps the
/// file orientation, every other component (isolated vertices included) is
/// free, so an embedding and its image under a global side swap are counted
/// once. Automorphic images are otherwise distinct.
pub fn red_count_histogram(c: &HostColoring, g: &PatternGraph, budget: u64) -> Result<Vec<u64>> {
    check_fits(c, g)?;
    let m = g.edge_count();
    let plan = Plan::new(g);
    let n = c.n();
    let placed = plan.steps.len();
    let free = 2 * n - placed;
    let k = plan.isolated.len();
    // Labeled injective placements of the isolated vertices on free vertices.
    let multiplicity: u128 = (0..k).map(|i| (free - i) as u128).product();
    let multiplicity = if plan.primary.is_none() && k > 0 {
        // No edges at all: pin the first isolated vertex to the left side.
        multiplicity * n as u128 / free as u128
    } else {
        multiplicity
    };

    let mut counts = vec![0u64; m + 1];
    let mut total: u128 = 0;
    let mut exceeded = false;
    let mut searcher = Searcher::new(c, g, &plan, TwinClasses::discrete(n), 0, m);
    searcher.fix_primary = true;
    let mut cb = |_: &Searcher<'_>, red: usize| {
        total += multiplicity;
        if total > budget as u128 {
            exceeded = true;
            return false;
        }
        counts[red] += multiplicity as u64;
        true
    };
    searcher.run(0, 0, &mut Mode::Visit(&mut cb));
    if exceeded {
        return Err(Error::BudgetExceeded {
            budget,
            examined: budget,
        });
    }
    Ok(counts)
}
