//! Computing the (k,l)-coloring polynomial.
//!
//! [`ChiEngine`] evaluates `chi_G(x,y)` symbolically by memoized
//! deletion-contraction:
//!
//! ```text
//! chi(G) = chi(G \ e) - chi(G / e) + y * chi((G / e) \ v)
//! ```
//!
//! where `v` is the vertex `e` contracts to. Edgeless graphs on `n` vertices
//! contribute `(x+y)^n` and disconnected graphs factor over components.
//!
//! Two counting oracles sit beside it: [`count_bruteforce`] enumerates every
//! color map, and [`count_subset_expansion`] counts
//! ordered partitions of the vertices into independent color classes and a
//! wildcard class, using subset convolution. [`chi_wildcard`] applies the
//! vertex and edge removal rules that hold at `x = 1`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::bipoly::{power_xy, BiPoly};
use crate::error::{Error, Result};
use crate::multigraph::{Edge, Focus, KeyMode, MultiGraph, Vertex};

/// `k` proper colors and `l` wildcards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoringParams {
    pub k: u32,
    pub l: u32,
}

impl ColoringParams {
    pub fn new(k: u32, l: u32) -> Self {
        ColoringParams { k, l }
    }

    pub fn colors(self) -> u32 {
        self.k + self.l
    }
}

/// A color index per vertex; `0..k` are proper colors, `k..k+l` wildcards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringAssignment {
    colors: Vec<u32>,
}

impl ColoringAssignment {
    pub fn new(g: &MultiGraph, params: ColoringParams, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != g.vertex_count() as usize {
            return Err(Error::Input(format!(
                "assignment covers {} vertices, graph has {}",
                colors.len(),
                g.vertex_count()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c >= params.colors()) {
            return Err(Error::Input(format!("color {c} outside 0..{}", params.colors())));
        }
        Ok(ColoringAssignment { colors })
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v as usize - 1]
    }

    /// No edge (loops included) has both ends on the same proper color.
    pub fn is_proper(&self, g: &MultiGraph, params: ColoringParams) -> bool {
        is_proper_slice(&self.colors, g.edges(), params.k)
    }
}

fn is_proper_slice(colors: &[u32], edges: &[Edge], k: u32) -> bool {
    edges.iter().all(|e| {
        let (u, v) = e.endpoints();
        let (cu, cv) = (colors[u as usize - 1], colors[v as usize - 1]);
        !(cu == cv && cu < k)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EdgeStrategy {
    /// Loops, then a parallel edge, then the edge maximizing `deg(u)+deg(v)`.
    #[default]
    LoopsThenMaxDegree,
    /// The smallest edge in sorted order.
    FirstEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    pub memo: KeyMode,
    pub strategy: EdgeStrategy,
    /// Collapse parallel copies before branching.
    pub drop_parallel: bool,
    /// Remove a looped vertex `v` via `chi(G) = y * chi(G \ v)`.
    pub factor_loops: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            memo: KeyMode::Labeled,
            strategy: EdgeStrategy::default(),
            drop_parallel: true,
            factor_loops: true,
        }
    }
}

impl EngineConfig {
    /// Every combination of memo mode, strategy and simplification toggles.
    pub fn all() -> Vec<EngineConfig> {
        let mut out = Vec::new();
        for memo in [KeyMode::Labeled, KeyMode::Canonical { limit: 7 }] {
            for strategy in [EdgeStrategy::LoopsThenMaxDegree, EdgeStrategy::FirstEdge] {
                for drop_parallel in [false, true] {
                    for factor_loops in [false, true] {
                        out.push(EngineConfig { memo, strategy, drop_parallel, factor_loops });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub calls: u64,
    pub memo_hits: u64,
    pub max_depth: usize,
}

/// Memoized deletion-contraction evaluator. The memo table persists across
/// calls, so reusing one engine for a family of related graphs is cheap.
#[derive(Debug, Default)]
pub struct ChiEngine {
    config: EngineConfig,
    memo: HashMap<Vec<u8>, BiPoly>,
    stats: EngineStats,
}

impl ChiEngine {
    pub fn new(config: EngineConfig) -> Self {
        ChiEngine { config, memo: HashMap::new(), stats: EngineStats::default() }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn chi(&mut self, g: &MultiGraph) -> BiPoly {
        self.chi_at_depth(g, 0)
    }

    /// One deletion-contraction step on the given edge; the three smaller
    /// graphs are evaluated normally.
    pub fn deletion_contraction_at(&mut self, g: &MultiGraph, e: Edge) -> Result<BiPoly> {
        self.expand(g, e, 0)
    }

    fn expand(&mut self, g: &MultiGraph, e: Edge, depth: usize) -> Result<BiPoly> {
        let deleted = g.delete_edge(e)?;
        let (contracted, v) = g.contract_edge(e)?;
        let removed = contracted.delete_vertex(v)?;
        let a = self.chi_at_depth(&deleted, depth + 1);
        let b = self.chi_at_depth(&contracted, depth + 1);
        let c = self.chi_at_depth(&removed, depth + 1).scale_y(1);
        Ok(&(&a - &b) + &c)
    }

    fn key(&self, g: &MultiGraph) -> Vec<u8> {
        match g.canonical_key(self.config.memo) {
            Ok(k) => k,
            // too large for canonical relabeling; labelled keys carry a different tag
            Err(_) => g.canonical_key(KeyMode::Labeled).expect("labelled keys are total"),
        }
    }

    fn chi_at_depth(&mut self, g: &MultiGraph, depth: usize) -> BiPoly {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let mut multiplier = BiPoly::one();
        let mut graph = std::borrow::Cow::Borrowed(g);
        if self.config.drop_parallel && graph.has_parallel_edges() {
            graph = std::borrow::Cow::Owned(graph.without_parallel_edges());
        }
        if self.config.factor_loops && graph.has_loops() {
            let looped: BTreeSet<Vertex> =
                graph.edges().iter().filter(|e| e.is_loop()).map(|e| e.endpoints().0).collect();
            multiplier = BiPoly::monomial(1, 0, looped.len() as u32);
            graph = std::borrow::Cow::Owned(graph.delete_vertices(&looped).expect("looped vertices exist"));
        }
        if graph.is_edgeless() {
            return &multiplier * &power_xy(graph.vertex_count());
        }
        let parts = graph.components();
        if parts.len() > 1 {
            let product: BiPoly = parts.iter().map(|c| self.chi_at_depth(c, depth + 1)).product();
            return &multiplier * &product;
        }

        let key = self.key(&graph);
        if let Some(hit) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return &multiplier * hit;
        }
        let e = self.pick_edge(&graph);
        let value = self.expand(&graph, e, depth).expect("picked edge exists");
        let out = &multiplier * &value;
        self.memo.insert(key, value);
        out
    }

    fn pick_edge(&self, g: &MultiGraph) -> Edge {
        let edges = g.edges();
        match self.config.strategy {
            EdgeStrategy::FirstEdge => edges[0],
            EdgeStrategy::LoopsThenMaxDegree => {
                if let Some(&e) = edges.iter().find(|e| e.is_loop()) {
                    return e;
                }
                if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                    return w[0];
                }
                let mut deg = vec![0usize; g.vertex_count() as usize + 1];
                for e in edges {
                    let (u, v) = e.endpoints();
                    deg[u as usize] += 1;
                    deg[v as usize] += 1;
                }
                let score = |e: &Edge| {
                    let (u, v) = e.endpoints();
                    deg[u as usize] + deg[v as usize]
                };
                // first edge among those with the highest score
                let best = edges.iter().map(score).max().unwrap_or(0);
                *edges.iter().find(|e| score(e) == best).expect("graph has edges")
            }
        }
    }
}

/// `chi_G(x,y)` with a fresh engine.
pub fn compute_chi(g: &MultiGraph, config: EngineConfig) -> BiPoly {
    ChiEngine::new(config).chi(g)
}

/// Limits for exhaustive enumeration of `(k+l)^n` color maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceBudget {
    pub max_vertices: u32,
    pub max_colors: u32,
}

impl Default for BruteForceBudget {
    fn default() -> Self {
        BruteForceBudget { max_vertices: 8, max_colors: 6 }
    }
}

/// Count proper `(k,l)`-colorings by visiting every color map.
pub fn count_bruteforce(g: &MultiGraph, params: ColoringParams, budget: BruteForceBudget) -> Result<BigInt> {
    let n = g.vertex_count();
    let q = params.colors();
    if n > budget.max_vertices || q > budget.max_colors {
        return Err(Error::Capacity(format!(
            "brute force limited to n <= {} and k+l <= {} (got n={n}, k+l={q})",
            budget.max_vertices, budget.max_colors
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    if q == 0 {
        return Ok(BigInt::zero());
    }
    let edges = g.edges();
    let mut colors = vec![0u32; n as usize];
    let mut count: u64 = 0;
    loop {
        if is_proper_slice(&colors, edges, params.k) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == colors.len() {
                return Ok(BigInt::from(count));
            }
            colors[i] += 1;
            if colors[i] < q {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetBudget {
    pub max_vertices: u32,
    pub max_k: u32,
}

impl Default for SubsetBudget {
    fn default() -> Self {
        SubsetBudget { max_vertices: 12, max_k: 4 }
    }
}

/// Bitmask of loop-free independent vertex sets, indexed by subset mask.
fn independent_masks(g: &MultiGraph) -> Vec<bool> {
    let n = g.vertex_count() as usize;
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        adj[u as usize - 1] |= 1 << (v - 1);
        adj[v as usize - 1] |= 1 << (u - 1);
    }
    let mut indep = vec![false; 1 << n];
    indep[0] = true;
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        indep[mask] = indep[rest] && (adj[low] as usize & mask) == 0;
    }
    indep
}

/// `sum over W of l^|W| * P(G[V \ W], k)`, where `W` is the set of
/// wildcard-colored vertices and `P` counts proper `k`-colorings.
///
/// A coloring is an ordered partition of `V` into `k` independent sets and
/// one unrestricted wildcard set, so the count is the `k+1`-fold subset
/// convolution of the independence indicator (`k` times) with `l^|S|`,
/// evaluated at `V`. The convolution goes through the ranked zeta transform;
/// no color map is ever enumerated.
pub fn count_subset_expansion(g: &MultiGraph, params: ColoringParams, budget: SubsetBudget) -> Result<BigInt> {
    let n = g.vertex_count();
    if n > budget.max_vertices || params.k > budget.max_k {
        return Err(Error::Capacity(format!(
            "subset expansion limited to n <= {} and k <= {} (got n={n}, k={})",
            budget.max_vertices, budget.max_k, params.k
        )));
    }
    let overflow = || Error::Capacity("subset expansion overflowed 128-bit intermediates".into());
    let n = n as usize;
    let full = (1usize << n) - 1;
    // ranked[mask][r]: independent subsets of `mask` with exactly r vertices
    let mut ranked: Vec<Vec<i128>> = independent_masks(g)
        .into_iter()
        .enumerate()
        .map(|(mask, ok)| {
            let mut row = vec![0i128; n + 1];
            if ok {
                row[mask.count_ones() as usize] = 1;
            }
            row
        })
        .collect();
    for bit in 0..n {
        for mask in 0..=full {
            if mask & (1 << bit) != 0 {
                let below = ranked[mask ^ (1 << bit)].clone();
                for (slot, add) in ranked[mask].iter_mut().zip(below) {
                    *slot += add;
                }
            }
        }
    }
    let mul = |a: &[i128], b: &[i128]| -> Result<Vec<i128>> {
        let mut out = vec![0i128; n + 1];
        for (i, &x) in a.iter().enumerate().filter(|&(_, &x)| x != 0) {
            for (j, &y) in b[..=n - i].iter().enumerate() {
                let term = x.checked_mul(y).ok_or_else(overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or_else(overflow)?;
            }
        }
        Ok(out)
    };
    let l = i128::from(params.l);
    let mut total: i128 = 0;
    for (mask, indep) in ranked.iter().enumerate() {
        let size = mask.count_ones() as usize;
        // ranked zeta of l^|S| at `mask` is C(size, r) * l^r
        let mut acc = vec![0i128; n + 1];
        let mut binom: i128 = 1;
        let mut power: i128 = 1;
        for (r, slot) in acc.iter_mut().enumerate().take(size + 1) {
            *slot = binom.checked_mul(power).ok_or_else(overflow)?;
            if r < size {
                binom = binom * (size - r) as i128 / (r + 1) as i128;
                power = power.checked_mul(l).ok_or_else(overflow)?;
            }
        }
        for _ in 0..params.k {
            acc = mul(&acc, indep)?;
        }
        let top = acc[n];
        total = if (n - size).is_multiple_of(2) { total.checked_add(top) } else { total.checked_sub(top) }.ok_or_else(overflow)?;
    }
    Ok(BigInt::from(total))
}

/// `sum over loop-free independent S of l^(n - |S|)`, the value of
/// `chi_G(1, l)` read as "vertices colored with the single proper color form
/// an independent set".
pub fn independence_weighted_sum(g: &MultiGraph, l: u32) -> BigInt {
    let n = g.vertex_count();
    let l = BigInt::from(l);
    independent_masks(g)
        .into_iter()
        .enumerate()
        .filter(|&(_, ok)| ok)
        .map(|(mask, _)| Pow::pow(&l, n - mask.count_ones()))
        .sum()
}

/// Result of [`simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    /// Simple graph left after deduplication and loop factoring.
    pub residual: MultiGraph,
    /// Monomial `y^m` with `m` the number of looped vertices removed.
    pub multiplier: BiPoly,
    /// `label_map[v-1]` is the residual label of original vertex `v`, or
    /// `None` if it was a looped vertex.
    pub label_map: Vec<Option<Vertex>>,
}

/// Reduce to a simple graph: drop parallel copies, then remove every looped
/// vertex `v` using `chi(G) = y * chi(G \ v)`. The polynomial satisfies
/// `chi(G) = multiplier * chi(residual)`.
pub fn simplify(g: &MultiGraph) -> Simplified {
    let deduped = g.without_parallel_edges();
    let looped: BTreeSet<Vertex> = deduped.vertices().filter(|&v| deduped.has_loop_at(v)).collect();
    let residual = deduped.delete_vertices(&looped).expect("looped vertices exist");
    let mut next = 0;
    let label_map = g
        .vertices()
        .map(|v| {
            if looped.contains(&v) {
                None
            } else {
                next += 1;
                Some(next)
            }
        })
        .collect();
    Simplified { residual, multiplier: BiPoly::monomial(1, 0, looped.len() as u32), label_map }
}

/// `chi_G(1, y)` by one application of a wildcard removal rule at `focus`:
///
/// * vertex `v`: `y * chi(G \ v) + y^deg(v) * chi(G \ link(v))`
/// * edge `e`: `chi(G \ e) - y^w * chi(G \ link(e))`, where `w` counts the
///   vertices of `link(e)` other than the endpoints of `e`
///
/// The graph is simplified first and the focus is mapped into the residual.
/// With no common neighbour of the endpoints `w = deg(u) + deg(v) - 2`;
/// on an edge of a triangle the shared neighbour must be counted once.
pub fn chi_wildcard(g: &MultiGraph, focus: Focus, engine: &mut ChiEngine) -> Result<BiPoly> {
    match focus {
        Focus::Vertex(v) if !g.contains_vertex(v) => {
            return Err(Error::Input(format!("vertex {v} not in graph")));
        }
        Focus::Edge(e) if !g.contains_edge(e) => return Err(Error::Input(format!("edge {e} not in graph"))),
        Focus::Edge(e) if e.is_loop() => {
            return Err(Error::UnsupportedFocus(format!("loop {e} has no link")));
        }
        _ => {}
    }
    let simple = simplify(g);
    let map = |v: Vertex| {
        simple.label_map[v as usize - 1]
            .ok_or_else(|| Error::UnsupportedFocus(format!("vertex {v} carries a loop and is factored out")))
    };
    let h = &simple.residual;
    let mut at_one = |graph: &MultiGraph| engine.chi(graph).subs_x(1);
    let value = match focus {
        Focus::Vertex(v) => {
            let v = map(v)?;
            let degree = h.neighbors(v).len() as u32;
            let without_v = at_one(&h.delete_vertex(v)?);
            let without_link = at_one(&h.delete_vertices(&h.closed_neighborhood(Focus::Vertex(v))?)?);
            &without_v.scale_y(1) + &without_link.scale_y(degree)
        }
        Focus::Edge(e) => {
            let (a, b) = e.endpoints();
            let e = Edge::new(map(a)?, map(b)?);
            let link = h.closed_neighborhood(Focus::Edge(e))?;
            let outside = link.len() as u32 - 2;
            let without_e = at_one(&h.delete_edge(e)?);
            let without_link = at_one(&h.delete_vertices(&link)?);
            &without_e - &without_link.scale_y(outside)
        }
    };
    Ok(&simple.multiplier * &value)
}
