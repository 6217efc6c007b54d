//! Colored hosts, bipartite patterns and embeddings, plus the `.kbc` and
//! `.bg` text formats.
//!
//! A host is always the complete bipartite graph `K_{n,n}`; only the red
//! edges are stored, blue is the complement. A pattern is a bipartite graph
//! with two labeled sides (side 0 and side 1). Searches may place either
//! pattern side on either host side, independently per connected component.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::bits;
use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Side of a bipartite graph. For patterns `Left` is side 0 of the file and
/// `Right` is side 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn new(side: Side, index: usize) -> Self {
        Vertex { side, index }
    }

    pub fn left(index: usize) -> Self {
        Vertex::new(Side::Left, index)
    }

    pub fn right(index: usize) -> Self {
        Vertex::new(Side::Right, index)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "L{}", self.index),
            Side::Right => write!(f, "R{}", self.index),
        }
    }
}

/// How a pattern component is laid onto the host: `AsIs` sends pattern
/// side 0 to the host's left side, `Flipped` sends it to the right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    AsIs,
    Flipped,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::AsIs, Orientation::Flipped];

    /// Host side receiving pattern vertices from `pattern_side`.
    pub fn host_side(self, pattern_side: Side) -> Side {
        match self {
            Orientation::AsIs => pattern_side,
            Orientation::Flipped => pattern_side.other(),
        }
    }

    /// Orientation that sends `pattern_side` to the host's left side.
    pub fn sending_to_left(pattern_side: Side) -> Orientation {
        match pattern_side {
            Side::Left => Orientation::AsIs,
            Side::Right => Orientation::Flipped,
        }
    }
}

/// A 2-edge coloring of `K_{n,n}`.
///
/// Row `i` (left vertex `i`) and column `j` (right vertex `j`) are both kept
/// as packed bit sets of red neighbours, so monochromatic-block tests are
/// word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HostColoring {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
}

impl HostColoring {
    pub fn uniform(n: usize, color: Color) -> Result<Self> {
        Self::from_fn(n, |_, _| color == Color::Red)
    }

    /// Builds a coloring where `(i, j)` is red iff `is_red(i, j)`.
    pub fn from_fn(n: usize, mut is_red: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("host side size n must be at least 1".into()));
        }
        let stride = bits::words_for(n);
        let mut host = HostColoring {
            n,
            stride,
            rows: vec![0; n * stride],
            cols: vec![0; n * stride],
        };
        for i in 0..n {
            for j in 0..n {
                if is_red(i, j) {
                    host.set_red_unchecked(i, j, true);
                }
            }
        }
        Ok(host)
    }

    pub fn from_red_edges(n: usize, red: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut host = Self::uniform(n, Color::Blue)?;
        for (i, j) in red {
            if i >= n || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "red edge ({i}, {j}) outside K_{{{n},{n}}}"
                )));
            }
            host.set_red_unchecked(i, j, true);
        }
        Ok(host)
    }

    /// Decodes a row-major bit mask, bit `i * n + j` set iff `(i, j)` is red.
    /// Only meaningful for `n <= 8`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n * n > 64 {
            return Err(Error::InvalidParameter(format!("n = {n} does not fit a 64-bit mask")));
        }
        Self::from_fn(n, |i, j| (mask >> (i * n + j)) & 1 == 1)
    }

    /// Row-major bit mask of the red edges. Only valid for `n <= 8`.
    pub fn to_mask(&self) -> Option<u64> {
        if self.n * self.n > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (i, j) in self.red_edges() {
            mask |= 1 << (i * self.n + j);
        }
        Some(mask)
    }

    fn set_red_unchecked(&mut self, i: usize, j: usize, red: bool) {
        let s = self.stride;
        bits::set(&mut self.rows[i * s..(i + 1) * s], j, red);
        bits::set(&mut self.cols[j * s..(j + 1) * s], i, red);
    }

    pub fn set_color(&mut self, i: usize, j: usize, color: Color) {
        assert!(i < self.n && j < self.n, "edge ({i}, {j}) out of range");
        self.set_red_unchecked(i, j, color == Color::Red);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_red(&self, i: usize, j: usize) -> bool {
        bits::get(self.red_row(i), j)
    }

    pub fn color(&self, i: usize, j: usize) -> Color {
        if self.is_red(i, j) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    /// Color of the host edge joining `a` and `b`, which must lie on
    /// opposite sides.
    pub fn edge_color(&self, a: Vertex, b: Vertex) -> Color {
        match (a.side, b.side) {
            (Side::Left, Side::Right) => self.color(a.index, b.index),
            (Side::Right, Side::Left) => self.color(b.index, a.index),
            _ => panic!("{a} and {b} are on the same side"),
        }
    }

    /// Red neighbours of left vertex `i`, as packed bits over right vertices.
    #[inline]
    pub fn red_row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.stride..(i + 1) * self.stride]
    }

    /// Red neighbours of right vertex `j`, as packed bits over left vertices.
    #[inline]
    pub fn red_col(&self, j: usize) -> &[u64] {
        &self.cols[j * self.stride..(j + 1) * self.stride]
    }

    pub(crate) fn red_neighbours(&self, v: Vertex) -> &[u64] {
        match v.side {
            Side::Left => self.red_row(v.index),
            Side::Right => self.red_col(v.index),
        }
    }

    pub fn red_degree(&self, v: Vertex) -> usize {
        bits::count(self.red_neighbours(v))
    }

    pub fn blue_degree(&self, v: Vertex) -> usize {
        self.n - self.red_degree(v)
    }

    pub fn red_count(&self) -> usize {
        bits::count(&self.rows)
    }

    /// `(red, blue)` edge counts; they always sum to `n²`.
    pub fn color_counts(&self) -> (usize, usize) {
        let red = self.red_count();
        (red, self.n * self.n - red)
    }

    pub fn red_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| bits::ones(self.red_row(i)).map(move |j| (i, j)))
    }

    /// Swaps the roles of red and blue.
    pub fn complement(&self) -> HostColoring {
        HostColoring::from_fn(self.n, |i, j| !self.is_red(i, j)).expect("n >= 1")
    }

    /// Swaps the host sides.
    pub fn transpose(&self) -> HostColoring {
        HostColoring::from_fn(self.n, |i, j| self.is_red(j, i)).expect("n >= 1")
    }

    /// Parses `.kbc` text; see [`parse_coloring`].
    pub fn parse(text: &str) -> Result<Self> {
        parse_coloring(text)
    }

    /// Canonical `.kbc` text.
    pub fn to_kbc(&self) -> String {
        serialize_coloring(self)
    }
}

impl fmt::Debug for HostColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HostColoring({})", self.to_kbc().replace('\n', "/"))
    }
}

/// Parses a `.kbc` coloring: a decimal `n` on line 1, then `n` rows of `n`
/// characters from `{R, B}`, every line terminated by `\n`.
pub fn parse_coloring(text: &str) -> Result<HostColoring> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    // `split` yields a trailing empty piece exactly when the text ends in '\n'.
    let last = lines.pop().unwrap_or("");
    if !last.is_empty() || lines.is_empty() {
        let line_no = lines.len() + 1;
        return Err(parse_err(
            line_no,
            last.chars().count() + 1,
            "missing trailing newline",
        ));
    }

    let header = lines[0];
    if header.is_empty() {
        return Err(parse_err(1, 1, "expected decimal side size n"));
    }
    if let Some((col, c)) = header.chars().enumerate().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(parse_err(1, col + 1, format!("unexpected character {c:?} in header")));
    }
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(1, 1, "side size n does not fit in an integer"))?;
    if n == 0 {
        return Err(parse_err(1, 1, "side size n must be at least 1"));
    }

    let rows = &lines[1..];
    if rows.len() < n {
        return Err(parse_err(
            rows.len() + 2,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    if rows.len() > n {
        return Err(parse_err(n + 2, 1, format!("unexpected content after row {n}")));
    }

    let mut host = HostColoring::uniform(n, Color::Blue)?;
    for (i, row) in rows.iter().enumerate() {
        let line_no = i + 2;
        let mut len = 0;
        for (j, c) in row.chars().enumerate() {
            if j >= n {
                return Err(parse_err(line_no, j + 1, format!("row longer than {n} cells")));
            }
            match c {
                'R' => host.set_red_unchecked(i, j, true),
                'B' => {}
                other => {
                    return Err(parse_err(
                        line_no,
                        j + 1,
                        format!("expected 'R' or 'B', found {other:?}"),
                    ))
                }
            }
            len = j + 1;
        }
        if len < n {
            return Err(parse_err(
                line_no,
                len + 1,
                format!("row has {len} cells, expected {n}"),
            ));
        }
    }
    Ok(host)
}

pub fn serialize_coloring(c: &HostColoring) -> String {
    let mut out = String::with_capacity((c.n + 1) * (c.n + 1) + 4);
    out.push_str(&c.n.to_string());
    out.push('\n');
    for i in 0..c.n {
        for j in 0..c.n {
            out.push(if c.is_red(i, j) { 'R' } else { 'B' });
        }
        out.push('\n');
    }
    out
}

pub fn color_counts(c: &HostColoring) -> (usize, usize) {
    c.color_counts()
}

/// A connected component of a pattern, with its vertices on each side (in
/// ascending index order) and their degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub side0: Vec<usize>,
    pub side1: Vec<usize>,
    /// `deg0[k]` is the degree of `side0[k]`.
    pub deg0: Vec<usize>,
    pub deg1: Vec<usize>,
    pub edge_count: usize,
}

impl Component {
    pub fn vertex_count(&self) -> usize {
        self.side0.len() + self.side1.len()
    }

    pub fn is_isolated_vertex(&self) -> bool {
        self.edge_count == 0
    }

    pub fn vertices(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.side0,
            Side::Right => &self.side1,
        }
    }

    pub fn degrees(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.deg0,
            Side::Right => &self.deg1,
        }
    }

    /// Sorted degree multiset of one side.
    pub fn degree_multiset(&self, side: Side) -> Vec<usize> {
        let mut d = self.degrees(side).to_vec();
        d.sort_unstable();
        d
    }
}

/// A finite bipartite graph with fixed side labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    p: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
    adj0: Vec<Vec<usize>>,
    adj1: Vec<Vec<usize>>,
    components: Vec<Component>,
    component_of0: Vec<usize>,
    component_of1: Vec<usize>,
}

impl PatternGraph {
    /// Builds a pattern with `p` side-0 vertices, `q` side-1 vertices and the
    /// given `(side-0 index, side-1 index)` edges.
    pub fn new(p: usize, q: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            if i >= p || j >= q {
                return Err(Error::InvalidPattern(format!(
                    "edge ({i}, {j}) out of range for sides {p} and {q}"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidPattern(format!("duplicate edge ({i}, {j})")));
            }
        }

        let mut adj0 = vec![Vec::new(); p];
        let mut adj1 = vec![Vec::new(); q];
        for &(i, j) in &edges {
            adj0[i].push(j);
            adj1[j].push(i);
        }
        for a in adj0.iter_mut().chain(adj1.iter_mut()) {
            a.sort_unstable();
        }

        let mut component_of0 = vec![usize::MAX; p];
        let mut component_of1 = vec![usize::MAX; q];
        let mut components = Vec::new();
        let starts = (0..p).map(Vertex::left).chain((0..q).map(Vertex::right));
        for start in starts {
            let assigned = match start.side {
                Side::Left => component_of0[start.index],
                Side::Right => component_of1[start.index],
            };
            if assigned != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut side0 = Vec::new();
            let mut side1 = Vec::new();
            let mut queue = VecDeque::from([start]);
            match start.side {
                Side::Left => component_of0[start.index] = id,
                Side::Right => component_of1[start.index] = id,
            }
            while let Some(v) = queue.pop_front() {
                match v.side {
                    Side::Left => {
                        side0.push(v.index);
                        for &j in &adj0[v.index] {
                            if component_of1[j] == usize::MAX {
                                component_of1[j] = id;
                                queue.push_back(Vertex::right(j));
                            }
                        }
                    }
                    Side::Right => {
                        side1.push(v.index);
                        for &i in &adj1[v.index] {
                            if component_of0[i] == usize::MAX {
                                component_of0[i] = id;
                                queue.push_back(Vertex::left(i));
                            }
                        }
                    }
                }
            }
            side0.sort_unstable();
            side1.sort_unstable();
            let deg0: Vec<usize> = side0.iter().map(|&i| adj0[i].len()).collect();
            let deg1: Vec<usize> = side1.iter().map(|&j| adj1[j].len()).collect();
            let edge_count = deg0.iter().sum();
            components.push(Component {
                side0,
                side1,
                deg0,
                deg1,
                edge_count,
            });
        }

        Ok(PatternGraph {
            p,
            q,
            edges,
            adj0,
            adj1,
            components,
            component_of0,
            component_of1,
        })
    }

    /// Path with `k` edges, vertices alternating between side 0 and side 1.
    pub fn path(k: usize) -> Self {
        let vertices = k + 1;
        let p = vertices.div_ceil(2);
        let q = vertices / 2;
        let edges = (0..k)
            .map(|e| if e % 2 == 0 { (e / 2, e / 2) } else { (e / 2 + 1, e / 2) })
            .collect();
        PatternGraph::new(p, q, edges).expect("valid path")
    }

    /// Star `K_{1,k}` with its centre on side 0.
    pub fn star(k: usize) -> Self {
        PatternGraph::new(1, k, (0..k).map(|j| (0, j)).collect()).expect("valid star")
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let edges = (0..p).flat_map(|i| (0..q).map(move |j| (i, j))).collect();
        PatternGraph::new(p, q, edges).expect("valid complete bipartite graph")
    }

    /// Even cycle with `2 * half` edges (`half >= 2`).
    pub fn cycle(half: usize) -> Self {
        assert!(half >= 2, "cycle needs at least 4 edges");
        let mut edges = Vec::with_capacity(2 * half);
        for i in 0..half {
            edges.push((i, i));
            edges.push(((i + 1) % half, i));
        }
        PatternGraph::new(half, half, edges).expect("valid cycle")
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_pattern(text)
    }

    pub fn to_bg(&self) -> String {
        let mut out = format!("{} {} {}\n", self.p, self.q, self.edges.len());
        for &(i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of edges `m`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.p + self.q
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        match v.side {
            Side::Left => self.component_of0[v.index],
            Side::Right => self.component_of1[v.index],
        }
    }

    pub fn neighbours(&self, v: Vertex) -> &[usize] {
        match v.side {
            Side::Left => &self.adj0[v.index],
            Side::Right => &self.adj1[v.index],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).len()
    }

    pub fn side_size(&self, side: Side) -> usize {
        match side {
            Side::Left => self.p,
            Side::Right => self.q,
        }
    }

    /// Sorted degree multiset of one whole side.
    pub fn degree_multiset(&self, side: Side) -> Vec<usize> {
        let adj = match side {
            Side::Left => &self.adj0,
            Side::Right => &self.adj1,
        };
        let mut d: Vec<usize> = adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Whether the pattern is a tree (connected, `m = |V| - 1`).
    pub fn is_tree(&self) -> bool {
        self.components.len() == 1 && self.edges.len() + 1 == self.vertex_count()
    }

    /// Whether some per-component orientation places at most `n` vertices on
    /// each host side.
    pub fn fits_in(&self, n: usize) -> bool {
        if self.vertex_count() > 2 * n {
            return false;
        }
        // Reachable left-side loads over the non-isolated components; isolated
        // vertices can fill whichever side has room.
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        let mut placed = 0;
        for c in self.components.iter().filter(|c| !c.is_isolated_vertex()) {
            let (a, b) = (c.side0.len(), c.side1.len());
            let mut next = vec![false; n + 1];
            for load in (0..=n).filter(|&l| reach[l]) {
                for add in [a, b] {
                    if load + add <= n {
                        next[load + add] = true;
                    }
                }
            }
            reach = next;
            placed += a + b;
        }
        (0..=n).any(|left| reach[left] && placed - left.min(placed) <= n && left <= placed)
    }
}

/// Parses a `.bg` pattern: header `p q m`, then `m` lines `i j` (0-based).
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_pattern(text: &str) -> Result<PatternGraph> {
    let mut content = text
        .split('\n')
        .enumerate()
        .map(|(i, line)| (i + 1, line.strip_suffix('\r').unwrap_or(line)))
        .filter(|(_, line)| {
            let t = line.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = content
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header \"p q m\""))?;
    let fields = numeric_fields(header_line, header, 3, "header \"p q m\"")?;
    let (p, q, m) = (fields[0].0, fields[1].0, fields[2].0);

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for _ in 0..m {
        let (line_no, line) = content.next().ok_or_else(|| {
            parse_err(
                last_line + 1,
                1,
                format!("expected {m} edge lines, found {}", edges.len()),
            )
        })?;
        last_line = line_no;
        let f = numeric_fields(line_no, line, 2, "edge line \"i j\"")?;
        let ((i, col_i), (j, col_j)) = (f[0], f[1]);
        if i >= p {
            return Err(parse_err(line_no, col_i, format!("side-0 index {i} out of range 0..{p}")));
        }
        if j >= q {
            return Err(parse_err(line_no, col_j, format!("side-1 index {j} out of range 0..{q}")));
        }
        if !seen.insert((i, j)) {
            return Err(parse_err(line_no, col_i, format!("duplicate edge ({i}, {j})")));
        }
        edges.push((i, j));
    }
    if let Some((line_no, _)) = content.next() {
        return Err(parse_err(line_no, 1, format!("unexpected content after {m} edge lines")));
    }
    PatternGraph::new(p, q, edges)
}

/// Splits a line into exactly `expected` unsigned integers, returning each
/// value with its 1-based column.
fn numeric_fields(
    line_no: usize,
    line: &str,
    expected: usize,
    what: &str,
) -> Result<Vec<(usize, usize)>> {
    let mut fields = Vec::with_capacity(expected);
    let mut col = 0;
    let chars: Vec<char> = line.chars().collect();
    while col < chars.len() {
        if chars[col].is_whitespace() {
            col += 1;
            continue;
        }
        let start = col;
        while col < chars.len() && !chars[col].is_whitespace() {
            col += 1;
        }
        let token: String = chars[start..col].iter().collect();
        if fields.len() == expected {
            return Err(parse_err(line_no, start + 1, format!("too many fields in {what}")));
        }
        if !token.chars().all(|c| c.is_ascii_digit()) {
            return Err(parse_err(
                line_no,
                start + 1,
                format!("expected unsigned integer in {what}, found {token:?}"),
            ));
        }
        let value = token
            .parse()
            .map_err(|_| parse_err(line_no, start + 1, "integer too large"))?;
        fields.push((value, start + 1));
    }
    if fields.len() < expected {
        return Err(parse_err(
            line_no,
            chars.len() + 1,
            format!("expected {expected} fields in {what}, found {}", fields.len()),
        ));
    }
    Ok(fields)
}

/// A side-respecting injective placement of a pattern into a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ColoredEmbedding {
    /// One entry per pattern component, in `PatternGraph::components` order.
    pub orientation_per_component: Vec<Orientation>,
    /// Host vertex receiving each side-0 pattern vertex.
    pub side0_map: Vec<Vertex>,
    /// Host vertex receiving each side-1 pattern vertex.
    pub side1_map: Vec<Vertex>,
    pub red_count: usize,
    pub blue_count: usize,
}

impl ColoredEmbedding {
    pub fn image(&self, v: Vertex) -> Vertex {
        match v.side {
            Side::Left => self.side0_map[v.index],
            Side::Right => self.side1_map[v.index],
        }
    }

    /// Host edges covered by the pattern edges, as `(left, right)` pairs.
    pub fn host_edges<'a>(&'a self, g: &'a PatternGraph) -> impl Iterator<Item = (usize, usize)> + 'a {
        g.edges().iter().map(move |&(i, j)| {
            let a = self.side0_map[i];
            let b = self.side1_map[j];
            match a.side {
                Side::Left => (a.index, b.index),
                Side::Right => (b.index, a.index),
            }
        })
    }

    /// Checks the embedding from scratch against the host: shape, injectivity,
    /// side consistency with the stated orientations, and the red count.
    pub fn validate(&self, host: &HostColoring, g: &PatternGraph) -> std::result::Result<(), String> {
        if self.side0_map.len() != g.p() || self.side1_map.len() != g.q() {
            return Err("vertex map does not cover the pattern".into());
        }
        if self.orientation_per_component.len() != g.components().len() {
            return Err("one orientation per component expected".into());
        }
        let mut used = BTreeSet::new();
        for (side, map) in [(Side::Left, &self.side0_map), (Side::Right, &self.side1_map)] {
            for (idx, &h) in map.iter().enumerate() {
                if h.index >= host.n() {
                    return Err(format!("host vertex {h} out of range"));
                }
                if !used.insert(h) {
                    return Err(format!("host vertex {h} used twice"));
                }
                let pv = Vertex::new(side, idx);
                let o = self.orientation_per_component[g.component_of(pv)];
                if o.host_side(side) != h.side {
                    return Err(format!("pattern vertex {pv} placed on the wrong side"));
                }
            }
        }
        let red = self
            .host_edges(g)
            .filter(|&(i, j)| host.is_red(i, j))
            .count();
        if red != self.red_count {
            return Err(format!("recounted {red} red edges, embedding claims {}", self.red_count));
        }
        if self.red_count + self.blue_count != g.edge_count() {
            return Err("red + blue differs from the pattern edge count".into());
        }
        Ok(())
    }
}
