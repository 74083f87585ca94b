//! Undirected multigraphs with loops and parallel edges.
//!
//! Vertices are always labelled `1..=n`. Every surgery operation (edge
//! deletion, contraction, vertex deletion, component extraction) compacts the
//! surviving labels in an order-preserving way, so results are deterministic
//! and two graphs with the same vertex count and edge multiset compare equal.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex label, `1..=n`.
pub type Vertex = u32;

/// Default cap on the vertex count accepted by [`KeyMode::Canonical`].
pub const DEFAULT_CANONICAL_LIMIT: usize = 10;

/// An unordered endpoint pair, stored with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn is_loop(self) -> bool {
        self.lo == self.hi
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A vertex or one member of the edge multiset. Parallel copies of an edge
/// are interchangeable, so an edge focus is identified by its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Focus {
    Vertex(Vertex),
    Edge(Edge),
}

/// The graph families used throughout: paths, cycles and the chorded path
/// that realises the three-factor identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(u32),
    Cycle(u32),
    /// Path on `r+s+t+1` vertices plus the chord `{r, r+s+1}`.
    Sneaky { r: u32, s: u32, t: u32 },
}

impl Family {
    pub fn build(self) -> Result<MultiGraph> {
        build_family(self)
    }
}

/// Construct a member of one of the named families.
///
/// `Cycle(1)` is a single vertex with a loop and `Cycle(2)` is two vertices
/// joined by two parallel edges.
pub fn build_family(spec: Family) -> Result<MultiGraph> {
    match spec {
        Family::Path(n) => {
            if n == 0 {
                return Err(Error::Input("path requires n >= 1".into()));
            }
            Ok(MultiGraph::from_sorted(n, (1..n).map(|i| Edge::new(i, i + 1)).collect()))
        }
        Family::Cycle(n) => {
            if n == 0 {
                return Err(Error::Input("cycle requires n >= 1".into()));
            }
            let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i, i + 1)).collect();
            edges.push(Edge::new(n, 1));
            Ok(MultiGraph::from_unsorted(n, edges))
        }
        Family::Sneaky { r, s, t } => {
            if r < 2 || s < 2 || t < 1 {
                return Err(Error::Input(format!(
                    "sneaky graph requires r >= 2, s >= 2, t >= 1 (got r={r}, s={s}, t={t})"
                )));
            }
            let n = r + s + t + 1;
            let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i, i + 1)).collect();
            edges.push(Edge::new(r, r + s + 1));
            Ok(MultiGraph::from_unsorted(n, edges))
        }
    }
}

/// Memoization key flavour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeyMode {
    /// Serialization of the labelled graph.
    Labeled,
    /// Lexicographically least labelled key over all relabelings; refuses
    /// graphs with more than `limit` vertices.
    Canonical { limit: usize },
}

impl KeyMode {
    pub fn canonical() -> Self {
        KeyMode::Canonical { limit: DEFAULT_CANONICAL_LIMIT }
    }
}

/// Labelled undirected multigraph on vertices `1..=n`.
///
/// The edge list is kept sorted, which makes derived equality and hashing
/// agree with multiset equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: u32,
    edges: Vec<Edge>,
}

impl MultiGraph {
    /// Graph on `n` vertices with the given endpoint pairs.
    pub fn new(n: u32, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::Input(format!("endpoint {w} outside 1..={n}")));
                }
            }
            edges.push(Edge::new(u, v));
        }
        Ok(Self::from_unsorted(n, edges))
    }

    /// Edgeless graph on `n` vertices. `empty(0)` is the empty graph.
    pub fn empty(n: u32) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    fn from_unsorted(n: u32, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        MultiGraph { n, edges }
    }

    fn from_sorted(n: u32, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] <= w[1]));
        MultiGraph { n, edges }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The edge multiset in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.is_loop())
    }

    pub fn has_loop_at(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.is_loop() && e.lo == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn multiplicity(&self, e: Edge) -> usize {
        self.edges.iter().filter(|&&f| f == e).count()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter(|e| e.touches(v) && !e.is_loop())
            .map(|e| if e.lo == v { e.hi } else { e.lo })
            .collect()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::Input(format!("vertex {v} not in 1..={}", self.n)))
        }
    }

    fn check_edge(&self, e: Edge) -> Result<usize> {
        self.edges
            .binary_search(&e)
            .map_err(|_| Error::Input(format!("edge {e} not present")))
    }

    /// `G \ e`: one copy of `e` removed.
    pub fn delete_edge(&self, e: Edge) -> Result<MultiGraph> {
        let at = self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(at);
        Ok(MultiGraph::from_sorted(self.n, edges))
    }

    /// `G / e` together with the vertex `e` contracts to.
    ///
    /// For `e = {u,v}` with `u < v`, `v` is merged into `u` and the labels
    /// above `v` shift down by one, so the merged vertex is `u`. Remaining
    /// copies of `{u,v}` become loops at `u`. Contracting a loop only removes
    /// that loop.
    pub fn contract_edge(&self, e: Edge) -> Result<(MultiGraph, Vertex)> {
        let at = self.check_edge(e)?;
        let (u, v) = e.endpoints();
        if u == v {
            let mut edges = self.edges.clone();
            edges.remove(at);
            return Ok((MultiGraph::from_sorted(self.n, edges), u));
        }
        let relabel = |w: Vertex| match w.cmp(&v) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != at)
            .map(|(_, f)| Edge::new(relabel(f.lo), relabel(f.hi)))
            .collect();
        Ok((MultiGraph::from_unsorted(self.n - 1, edges), u))
    }

    /// `G \ S`: drop every vertex of `S` and every edge touching one.
    pub fn delete_vertices(&self, set: &BTreeSet<Vertex>) -> Result<MultiGraph> {
        for &v in set {
            self.check_vertex(v)?;
        }
        // new label of w = w - |{s in S : s < w}|
        let removed: Vec<Vertex> = set.iter().copied().collect();
        let relabel = |w: Vertex| w - removed.partition_point(|&s| s < w) as Vertex;
        let edges = self
            .edges
            .iter()
            .filter(|e| !set.contains(&e.lo) && !set.contains(&e.hi))
            .map(|e| Edge::new(relabel(e.lo), relabel(e.hi)))
            .collect();
        Ok(MultiGraph::from_sorted(self.n - set.len() as u32, edges))
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<MultiGraph> {
        self.delete_vertices(&BTreeSet::from([v]))
    }

    /// Vertex set of `link(v)` or `link(e)`.
    pub fn closed_neighborhood(&self, focus: Focus) -> Result<BTreeSet<Vertex>> {
        match focus {
            Focus::Vertex(v) => {
                self.check_vertex(v)?;
                let mut set = self.neighbors(v);
                set.insert(v);
                Ok(set)
            }
            Focus::Edge(e) => {
                self.check_edge(e)?;
                if e.is_loop() {
                    return Err(Error::UnsupportedFocus(format!("loop {e} has no link")));
                }
                let (u, v) = e.endpoints();
                let mut set = self.neighbors(u);
                set.extend(self.neighbors(v));
                set.insert(u);
                set.insert(v);
                Ok(set)
            }
        }
    }

    /// Vertex degree counts endpoints with multiplicity (a loop counts 2);
    /// the degree of an edge `{u,v}` is `deg(u) + deg(v) - 2`.
    pub fn degree(&self, focus: Focus) -> Result<usize> {
        match focus {
            Focus::Vertex(v) => {
                self.check_vertex(v)?;
                Ok(self.vertex_degree(v))
            }
            Focus::Edge(e) => {
                self.check_edge(e)?;
                if e.is_loop() {
                    return Err(Error::UnsupportedFocus(format!("loop {e} has no edge degree")));
                }
                let (u, v) = e.endpoints();
                Ok(self.vertex_degree(u) + self.vertex_degree(v) - 2)
            }
        }
    }

    fn vertex_degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.lo == v) + usize::from(e.hi == v))
            .sum()
    }

    /// Connected components, ordered by their smallest original label, each
    /// relabelled to `1..=n'`.
    pub fn components(&self) -> Vec<MultiGraph> {
        let n = self.n as usize;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, e.lo as usize);
            let b = find(&mut parent, e.hi as usize);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        // roots are the minimal labels of their class
        let mut comp_of = vec![usize::MAX; n + 1];
        let mut local = vec![0 as Vertex; n + 1];
        let mut sizes: Vec<u32> = Vec::new();
        for v in 1..=n {
            let root = find(&mut parent, v);
            if comp_of[root] == usize::MAX {
                comp_of[root] = sizes.len();
                sizes.push(0);
            }
            let c = comp_of[root];
            comp_of[v] = c;
            sizes[c] += 1;
            local[v] = sizes[c];
        }
        let mut edges: Vec<Vec<Edge>> = vec![Vec::new(); sizes.len()];
        for e in &self.edges {
            let c = comp_of[e.lo as usize];
            edges[c].push(Edge::new(local[e.lo as usize], local[e.hi as usize]));
        }
        sizes
            .into_iter()
            .zip(edges)
            .map(|(size, es)| MultiGraph::from_unsorted(size, es))
            .collect()
    }

    /// Apply a vertex permutation (`perm[v-1]` is the new label of `v`).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<MultiGraph> {
        let mut seen = vec![false; self.n as usize + 1];
        if perm.len() != self.n as usize
            || perm.iter().any(|&p| p == 0 || p > self.n || std::mem::replace(&mut seen[p as usize], true))
        {
            return Err(Error::Input("relabeling is not a permutation of 1..=n".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.lo as usize - 1], perm[e.hi as usize - 1]))
            .collect();
        Ok(MultiGraph::from_unsorted(self.n, edges))
    }

    /// Graph with parallel copies collapsed to one.
    pub fn without_parallel_edges(&self) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.dedup();
        MultiGraph::from_sorted(self.n, edges)
    }

    /// Byte key for memoization. Equal keys imply isomorphic graphs (and
    /// identical graphs in labelled mode).
    pub fn canonical_key(&self, mode: KeyMode) -> Result<Vec<u8>> {
        match mode {
            KeyMode::Labeled => Ok(encode_key(b'L', self.n, &self.edges)),
            KeyMode::Canonical { limit } => {
                if self.n as usize > limit {
                    return Err(Error::Capacity(format!(
                        "canonical key limited to {limit} vertices, graph has {}",
                        self.n
                    )));
                }
                Ok(encode_key(b'C', self.n, &self.min_relabeled_edges()))
            }
        }
    }

    /// Lexicographically least sorted edge list over all relabelings.
    fn min_relabeled_edges(&self) -> Vec<Edge> {
        let n = self.n as usize;
        let mut perm: Vec<Vertex> = (1..=self.n).collect();
        let mut best = self.edges.clone();
        let mut scratch = Vec::with_capacity(self.edges.len());
        let mut consider = |perm: &[Vertex], best: &mut Vec<Edge>| {
            scratch.clear();
            scratch.extend(
                self.edges
                    .iter()
                    .map(|e| Edge::new(perm[e.lo as usize - 1], perm[e.hi as usize - 1])),
            );
            scratch.sort_unstable();
            if scratch < *best {
                best.clone_from(&scratch);
            }
        };
        // Heap's algorithm, iterative form
        let mut c = vec![0usize; n];
        let mut i = 1;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                consider(&perm, &mut best);
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }
}

fn encode_key(tag: u8, n: u32, edges: &[Edge]) -> Vec<u8> {
    let mut key = Vec::with_capacity(5 + 8 * edges.len());
    key.push(tag);
    key.extend_from_slice(&n.to_be_bytes());
    for e in edges {
        key.extend_from_slice(&e.lo.to_be_bytes());
        key.extend_from_slice(&e.hi.to_be_bytes());
    }
    key
}

/// Parse the line-oriented `.mg` format: `#` comments, a `p <n> <m>` header,
/// then exactly `m` lines `e <u> <v>`.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<&str> = fields.collect();
        let number = |s: &str| s.parse::<u64>().map_err(|_| err(format!("expected a nonnegative integer, found {s:?}")));
        match (tag, &header) {
            ("p", None) => {
                if nums.len() != 2 {
                    return Err(err("header must be `p <n> <m>`".into()));
                }
                let n = u32::try_from(number(nums[0])?).map_err(|_| err("vertex count too large".into()))?;
                let m = usize::try_from(number(nums[1])?).map_err(|_| err("edge count too large".into()))?;
                header = Some((n, m, line_no));
            }
            ("p", Some(_)) => return Err(err("duplicate header".into())),
            ("e", Some((n, m, _))) => {
                if nums.len() != 2 {
                    return Err(err("edge line must be `e <u> <v>`".into()));
                }
                if edges.len() == *m {
                    return Err(err(format!("more than the declared {m} edges")));
                }
                let mut ends = [0; 2];
                for (slot, s) in ends.iter_mut().zip(&nums) {
                    let w = number(s)?;
                    if w == 0 || w > u64::from(*n) {
                        return Err(err(format!("endpoint {w} outside 1..={n}")));
                    }
                    *slot = w as Vertex;
                }
                edges.push(Edge::new(ends[0], ends[1]));
            }
            ("e", None) => return Err(err("edge line before `p` header".into())),
            _ => return Err(err(format!("unrecognised line {line:?}"))),
        }
    }
    let (n, m, _) = header.ok_or_else(|| Error::Parse { line: last_line.max(1), message: "missing `p <n> <m>` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Ok(MultiGraph::from_unsorted(n, edges))
}

/// Emit the `.mg` form with edges sorted by `(min, max)` endpoint.
pub fn serialize_graph(g: &MultiGraph) -> String {
    let mut out = format!("p {} {}\n", g.n, g.edges.len());
    for e in &g.edges {
        out.push_str(&format!("e {} {}\n", e.lo, e.hi));
    }
    out
}

impl FromStr for MultiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32, pairs: &[(u32, u32)]) -> MultiGraph {
        MultiGraph::new(n, pairs.iter().copied()).unwrap()
    }

    fn path(n: u32) -> MultiGraph {
        Family::Path(n).build().unwrap()
    }

    fn cycle(n: u32) -> MultiGraph {
        Family::Cycle(n).build().unwrap()
    }

    fn sneaky(r: u32, s: u32, t: u32) -> MultiGraph {
        Family::Sneaky { r, s, t }.build().unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(path(3), g(3, &[(1, 2), (2, 3)]));
        assert_eq!(cycle(1), g(1, &[(1, 1)]));
        assert_eq!(cycle(2), g(2, &[(1, 2), (1, 2)]));
        assert_eq!(cycle(4), g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]));
        let mut expected: Vec<(u32, u32)> = (1..7).map(|i| (i, i + 1)).collect();
        expected.push((2, 5));
        assert_eq!(sneaky(2, 2, 2), g(7, &expected));
    }

    #[test]
    fn family_parameter_errors() {
        assert!(Family::Path(0).build().is_err());
        assert!(Family::Cycle(0).build().is_err());
        assert!(Family::Sneaky { r: 1, s: 2, t: 1 }.build().is_err());
        assert!(Family::Sneaky { r: 2, s: 1, t: 1 }.build().is_err());
        assert!(Family::Sneaky { r: 2, s: 2, t: 0 }.build().is_err());
    }

    #[test]
    fn edge_order_is_irrelevant() {
        assert_eq!(g(3, &[(2, 3), (2, 1)]), g(3, &[(1, 2), (3, 2)]));
        assert!(MultiGraph::new(2, [(1, 3)]).is_err());
    }

    #[test]
    fn delete_edge_examples() {
        assert_eq!(cycle(3).delete_edge(Edge::new(3, 1)).unwrap(), path(3));
        assert_eq!(cycle(1).delete_edge(Edge::new(1, 1)).unwrap(), MultiGraph::empty(1));
        assert_eq!(cycle(2).delete_edge(Edge::new(1, 2)).unwrap(), path(2));
        assert!(path(3).delete_edge(Edge::new(1, 3)).is_err());
    }

    #[test]
    fn contract_edge_examples() {
        let (h, v) = path(3).contract_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(h, path(2));
        assert_eq!(h.degree(Focus::Vertex(v)).unwrap(), 1);

        let (h, v) = cycle(2).contract_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(h, cycle(1));
        assert_eq!(v, 1);

        let (h, v) = cycle(1).contract_edge(Edge::new(1, 1)).unwrap();
        assert_eq!(h, MultiGraph::empty(1));
        assert_eq!(v, 1);

        assert!(path(2).contract_edge(Edge::new(2, 2)).is_err());
    }

    #[test]
    fn contraction_keeps_distant_parallels() {
        // 1-2, 2=3 doubled, contract 1-2
        let h = g(3, &[(1, 2), (2, 3), (2, 3)]);
        let (c, v) = h.contract_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(v, 1);
        assert_eq!(c, g(2, &[(1, 2), (1, 2)]));
        // contracting a middle vertex relabels the tail
        let (c, v) = path(4).contract_edge(Edge::new(2, 3)).unwrap();
        assert_eq!((c, v), (path(3), 2));
    }

    #[test]
    fn delete_vertices_examples() {
        let h = path(4).delete_vertices(&BTreeSet::from([2])).unwrap();
        assert_eq!(h, g(3, &[(2, 3)]));
        assert_eq!(cycle(4).delete_vertices(&BTreeSet::from([1])).unwrap(), path(3));
        assert_eq!(path(3).delete_vertices(&BTreeSet::from([1, 2, 3])).unwrap(), MultiGraph::empty(0));
        assert!(path(3).delete_vertices(&BTreeSet::from([4])).is_err());
    }

    #[test]
    fn links_and_degrees() {
        assert_eq!(cycle(4).closed_neighborhood(Focus::Vertex(1)).unwrap(), BTreeSet::from([1, 2, 4]));
        assert_eq!(
            path(5).closed_neighborhood(Focus::Edge(Edge::new(2, 3))).unwrap(),
            BTreeSet::from([1, 2, 3, 4])
        );
        assert_eq!(
            sneaky(2, 2, 2).closed_neighborhood(Focus::Vertex(5)).unwrap(),
            BTreeSet::from([2, 4, 5, 6])
        );
        assert_eq!(cycle(1).degree(Focus::Vertex(1)).unwrap(), 2);
        assert_eq!(path(5).degree(Focus::Edge(Edge::new(2, 3))).unwrap(), 2);
        assert_eq!(sneaky(2, 2, 2).degree(Focus::Edge(Edge::new(2, 5))).unwrap(), 4);
        assert_eq!(cycle(2).degree(Focus::Vertex(1)).unwrap(), 2);
    }

    #[test]
    fn loop_focus_is_unsupported() {
        let c1 = cycle(1);
        let e = Edge::new(1, 1);
        assert!(matches!(c1.degree(Focus::Edge(e)), Err(Error::UnsupportedFocus(_))));
        assert!(matches!(c1.closed_neighborhood(Focus::Edge(e)), Err(Error::UnsupportedFocus(_))));
    }

    #[test]
    fn components_examples() {
        assert_eq!(path(3).components(), vec![path(3)]);
        assert!(MultiGraph::empty(0).components().is_empty());
        let split = path(4).delete_vertex(2).unwrap();
        assert_eq!(split.components(), vec![path(1), path(2)]);
        let h = g(5, &[(4, 2), (1, 3), (5, 5)]);
        assert_eq!(h.components(), vec![path(2), path(2), cycle(1)]);
    }

    #[test]
    fn keys() {
        let swapped = path(2).relabel(&[2, 1]).unwrap();
        assert_eq!(
            path(2).canonical_key(KeyMode::Labeled).unwrap(),
            swapped.canonical_key(KeyMode::Labeled).unwrap()
        );
        let canon = KeyMode::canonical();
        assert_ne!(cycle(3).canonical_key(canon).unwrap(), path(3).canonical_key(canon).unwrap());
        let bent = g(3, &[(1, 3), (3, 2)]);
        assert_ne!(bent.canonical_key(KeyMode::Labeled).unwrap(), path(3).canonical_key(KeyMode::Labeled).unwrap());
        assert_eq!(bent.canonical_key(canon).unwrap(), path(3).canonical_key(canon).unwrap());
        assert!(matches!(
            path(5).canonical_key(KeyMode::Canonical { limit: 4 }),
            Err(Error::Capacity(_))
        ));
        // labelled and canonical keys never collide
        assert_ne!(path(1).canonical_key(canon).unwrap(), path(1).canonical_key(KeyMode::Labeled).unwrap());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_graph("p 2 1\ne 1 2").unwrap(), path(2));
        assert_eq!(parse_graph("p 1 1\ne 1 1").unwrap(), cycle(1));
        assert_eq!(parse_graph("p 2 2\ne 1 2\ne 1 2").unwrap(), cycle(2));
        assert_eq!(parse_graph("# triangle\n\np 3 3\ne 2 1\ne 3 2\ne 1 3\n").unwrap(), cycle(3));
        assert_eq!(serialize_graph(&cycle(3)), "p 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let line = |text: &str| match parse_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("e 1 2\np 2 1"), 1);
        assert_eq!(line("# c\np two 1"), 2);
        assert_eq!(line("p 2 1\ne 1 3"), 2);
        assert_eq!(line("p 2 1\ne 1 2\ne 1 2"), 3);
        assert_eq!(line("p 2 2\ne 1 2"), 2);
        assert_eq!(line("p 2\n"), 1);
        assert_eq!(line("p 2 1\nx 1 2"), 2);
        assert_eq!(line(""), 1);
    }
}
