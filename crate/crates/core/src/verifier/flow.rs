//! Dinic maximum flow and feasibility of circulations with lower bounds.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Residual network; arc `2e` is the forward arc of edge `e`, `2e + 1` its
/// reverse.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    initial: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            initial: Vec::new(),
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let e = self.initial.len();
        self.adj[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.adj[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap: 0 });
        self.initial.push(cap);
        e
    }

    /// Flow currently routed through edge `e`.
    pub fn flow(&self, e: usize) -> i64 {
        self.initial[e] - self.arcs[2 * e].cap
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && level[to] == usize::MAX {
                    level[to] = level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let a = self.adj[u][next[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, t, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut next = vec![0; self.adj.len()];
            loop {
                let pushed = self.augment(s, t, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

/// A circulation problem where every edge carries a flow in `[lo, hi]`.
#[derive(Debug, Clone)]
pub(crate) struct Circulation {
    net: FlowNetwork,
    excess: Vec<i64>,
    lower: Vec<i64>,
}

impl Circulation {
    pub fn new(nodes: usize) -> Self {
        Circulation {
            net: FlowNetwork::new(nodes),
            excess: vec![0; nodes],
            lower: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, lo: i64, hi: i64) -> usize {
        debug_assert!(0 <= lo && lo <= hi);
        self.excess[u] -= lo;
        self.excess[v] += lo;
        self.lower.push(lo);
        self.net.add_edge(u, v, hi - lo)
    }

    /// Solves the standard reduction: a super source feeds every node with
    /// positive lower-bound excess, a super sink drains the deficits, and the
    /// circulation exists iff the resulting maximum flow saturates both.
    pub fn solve(mut self) -> Option<Vec<i64>> {
        let edges = self.lower.len();
        let source = self.net.add_node();
        let sink = self.net.add_node();
        let mut demand = 0;
        for (v, &x) in self.excess.iter().enumerate() {
            if x > 0 {
                self.net.add_edge(source, v, x);
                demand += x;
            } else if x < 0 {
                self.net.add_edge(v, sink, -x);
            }
        }
        if self.net.max_flow(source, sink) != demand {
            return None;
        }
        Some((0..edges).map(|e| self.lower[e] + self.net.flow(e)).collect())
    }
}
