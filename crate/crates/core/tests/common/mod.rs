//! Naive reference implementations shared by the integration tests. They
//! enumerate definitions directly and share no code with the library's
//! algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bicolor_core::{HostColoring, PatternGraph, Side, Vertex};
use rand::Rng;

pub fn random_coloring(rng: &mut impl Rng, n: usize) -> HostColoring {
    HostColoring::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap()
}

/// Every coloring of `K_{n,n}` for `n <= 4`.
pub fn all_colorings(n: usize) -> impl Iterator<Item = HostColoring> {
    (0..1u64 << (n * n)).map(move |m| HostColoring::from_mask(n, m).unwrap())
}

fn pattern_vertices(g: &PatternGraph) -> Vec<Vertex> {
    (0..g.p()).map(Vertex::left).chain((0..g.q()).map(Vertex::right)).collect()
}

/// Calls `visit(red_count, images)` for every injective map of the pattern
/// vertices into the `2n` host vertices that sends each pattern edge across
/// the host bipartition.
pub fn for_each_injection(c: &HostColoring, g: &PatternGraph, mut visit: impl FnMut(usize, &[Vertex])) {
    let n = c.n();
    let verts = pattern_vertices(g);
    let hosts: Vec<Vertex> = (0..n).map(Vertex::left).chain((0..n).map(Vertex::right)).collect();
    let mut image: Vec<Option<Vertex>> = vec![None; verts.len()];
    let pos = |v: Vertex| match v.side {
        Side::Left => v.index,
        Side::Right => g.p() + v.index,
    };
    #[allow(clippy::too_many_arguments)]
    fn go(
        d: usize,
        verts: &[Vertex],
        hosts: &[Vertex],
        image: &mut Vec<Option<Vertex>>,
        g: &PatternGraph,
        c: &HostColoring,
        pos: &dyn Fn(Vertex) -> usize,
        visit: &mut dyn FnMut(usize, &[Vertex]),
    ) {
        if d == verts.len() {
            let imgs: Vec<Vertex> = image.iter().map(|x| x.unwrap()).collect();
            let red = g
                .edges()
                .iter()
                .filter(|&&(i, j)| {
                    let a = imgs[pos(Vertex::left(i))];
                    let b = imgs[pos(Vertex::right(j))];
                    let (l, r) = if a.side == Side::Left { (a, b) } else { (b, a) };
                    c.is_red(l.index, r.index)
                })
                .count();
            visit(red, &imgs);
            return;
        }
        let v = verts[d];
        for &h in hosts {
            if image.contains(&Some(h)) {
                continue;
            }
            let crosses = g.neighbours(v).iter().all(|&u| {
                let u = Vertex::new(v.side.other(), u);
                match image[pos(u)] {
                    Some(hu) => hu.side != h.side,
                    None => true,
                }
            });
            if !crosses {
                continue;
            }
            image[d] = Some(h);
            go(d + 1, verts, hosts, image, g, c, pos, visit);
            image[d] = None;
        }
    }
    go(0, &verts, &hosts, &mut image, g, c, &pos, &mut visit);
}

/// Red counts realized by some copy of `g` in `c`.
pub fn naive_red_counts(c: &HostColoring, g: &PatternGraph) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for_each_injection(c, g, |red, _| {
        out.insert(red);
    });
    out
}

/// Histogram over the maps in which the first component with the most edges
/// has its side-0 vertices on the host's left side.
pub fn naive_histogram(c: &HostColoring, g: &PatternGraph) -> Vec<u64> {
    let primary = g
        .components()
        .iter()
        .filter(|comp| comp.edge_count > 0)
        .min_by_key(|comp| std::cmp::Reverse(comp.edge_count))
        .expect("pattern has an edge")
        .side0
        .clone();
    let mut counts = vec![0; g.edge_count() + 1];
    for_each_injection(c, g, |red, imgs| {
        if primary.iter().all(|&i| imgs[i].side == Side::Left) {
            counts[red] += 1;
        }
    });
    counts
}

/// Spectrum by enumerating orientation vectors and then every subset of the
/// vertices placed on the left, counting edges that touch the subset.
pub fn naive_spectrum(g: &PatternGraph) -> BTreeSet<usize> {
    let comps = g.components();
    let mut out = BTreeSet::new();
    for orient in 0..1u32 << comps.len() {
        let mut left: Vec<Vertex> = Vec::new();
        for (ci, comp) in comps.iter().enumerate() {
            let side = if orient >> ci & 1 == 0 { Side::Left } else { Side::Right };
            left.extend(comp.vertices(side).iter().map(|&x| Vertex::new(side, x)));
        }
        for subset in 0..1u32 << left.len() {
            let chosen: Vec<Vertex> = (0..left.len()).filter(|&b| subset >> b & 1 == 1).map(|b| left[b]).collect();
            let touching = g
                .edges()
                .iter()
                .filter(|&&(i, j)| chosen.contains(&Vertex::left(i)) || chosen.contains(&Vertex::right(j)))
                .count();
            out.insert(touching);
        }
    }
    out
}
