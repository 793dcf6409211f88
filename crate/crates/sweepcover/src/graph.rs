//! Weighted graphs, spanning forests with forced edges, edge doubling,
//! Eulerian circuits and minimum-weight perfect matching on plane points.
//!
//! Everything here is deterministic: Kruskal ties break on
//! `(weight, u, v)` and Hierholzer consumes adjacency lists sorted by
//! `(neighbor, edge insertion index)`, so identical inputs always yield
//! identical tours.

use crate::error::{Error, Result};
use crate::geometry::Point2D;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphEdge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl GraphEdge {
    pub fn new(u: usize, v: usize, weight: f64) -> Self {
        GraphEdge { u, v, weight }
    }

    /// Endpoints with the smaller id first, for deterministic ordering.
    fn normalized(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, Default)]
pub struct WeightedGraph {
    pub vertex_count: usize,
    pub edges: Vec<GraphEdge>,
}

impl WeightedGraph {
    pub fn new(vertex_count: usize) -> Self {
        WeightedGraph { vertex_count, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: f64) -> Result<()> {
        if u >= self.vertex_count {
            return Err(Error::VertexOutOfRange { id: u, count: self.vertex_count });
        }
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange { id: v, count: self.vertex_count });
        }
        if !weight.is_finite() || weight < 0.0 {
            return Err(Error::BadEdgeWeight(weight));
        }
        self.edges.push(GraphEdge::new(u, v, weight));
        Ok(())
    }
}

/// Acyclic subgraph of a parent graph with a known component count
/// (`component_count = vertex_count - edges.len()`).
#[derive(Debug, Clone)]
pub struct Forest {
    pub vertex_count: usize,
    pub edges: Vec<GraphEdge>,
    pub component_count: usize,
}

impl Forest {
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    pub components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n], components: n }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when `x` and `y` were already connected.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        self.components -= 1;
        true
    }
}

/// Minimum-weight spanning forest with exactly `k` components that contains
/// every edge in `forced`.
///
/// Forced edges are unioned first, then edges are scanned in
/// `(weight, u, v)` order until the component count reaches `k`.
pub fn kruskal_forest(g: &WeightedGraph, k: usize, forced: &[GraphEdge]) -> Result<Forest> {
    let n = g.vertex_count;
    if k == 0 || k > n {
        return Err(Error::ComponentCountUnreachable { requested: k, min: 1, max: n });
    }
    let mut uf = UnionFind::new(n);
    let mut edges = Vec::new();
    for e in forced {
        if e.u >= n {
            return Err(Error::VertexOutOfRange { id: e.u, count: n });
        }
        if e.v >= n {
            return Err(Error::VertexOutOfRange { id: e.v, count: n });
        }
        if !uf.union(e.u, e.v) {
            return Err(Error::ForcedEdgeCycle);
        }
        edges.push(*e);
    }
    if uf.components < k {
        return Err(Error::ComponentCountUnreachable { requested: k, min: 1, max: uf.components });
    }
    let mut sorted: Vec<GraphEdge> = g.edges.clone();
    sorted.sort_by(|a, b| {
        let (au, av) = a.normalized();
        let (bu, bv) = b.normalized();
        (a.weight, au, av)
            .partial_cmp(&(b.weight, bu, bv))
            .unwrap()
    });
    for e in sorted {
        if uf.components == k {
            break;
        }
        if uf.union(e.u, e.v) {
            edges.push(e);
        }
    }
    if uf.components != k {
        return Err(Error::ComponentCountUnreachable { requested: k, min: uf.components, max: n });
    }
    Ok(Forest { vertex_count: n, edges, component_count: k })
}

/// Undirected multigraph; parallel edges are distinct entries of `edges`.
#[derive(Debug, Clone)]
pub struct Multigraph {
    pub vertex_count: usize,
    pub positions: Option<Vec<Point2D>>,
    pub edges: Vec<GraphEdge>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph { vertex_count, positions: None, edges: Vec::new() }
    }

    pub fn from_forest(f: &Forest) -> Self {
        Multigraph { vertex_count: f.vertex_count, positions: None, edges: f.edges.clone() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: f64) {
        self.edges.push(GraphEdge::new(u, v, weight));
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }
}

/// Multigraph with every edge duplicated; all degrees become even.
pub fn double_edges(m: &Multigraph) -> Multigraph {
    let mut edges = Vec::with_capacity(m.edges.len() * 2);
    for e in &m.edges {
        edges.push(*e);
        edges.push(*e);
    }
    Multigraph { vertex_count: m.vertex_count, positions: m.positions.clone(), edges }
}

/// Eulerian circuit as a closed vertex walk starting and ending at `start`.
pub fn eulerian_tour(m: &Multigraph, start: usize) -> Result<Vec<usize>> {
    Ok(eulerian_circuit(m, start)?.0)
}

/// Eulerian circuit as `(vertex walk, edge-index walk)`; the edge walk has
/// one entry per traversed edge and indexes into `m.edges`.
pub fn eulerian_circuit(m: &Multigraph, start: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if start >= m.vertex_count {
        return Err(Error::VertexOutOfRange { id: start, count: m.vertex_count });
    }
    if m.edges.is_empty() {
        // Trivial circuit: sit at the start vertex.
        return Ok((vec![start], vec![]));
    }
    for (v, d) in m.degrees().iter().enumerate() {
        if d % 2 != 0 {
            return Err(Error::OddDegree(v));
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m.vertex_count];
    for (id, e) in m.edges.iter().enumerate() {
        adj[e.u].push((e.v, id));
        adj[e.v].push((e.u, id));
    }
    for list in &mut adj {
        list.sort();
    }
    if adj[start].is_empty() {
        return Err(Error::IsolatedStart(start));
    }

    let mut used = vec![false; m.edges.len()];
    let mut next = vec![0usize; m.vertex_count];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut walk_rev: Vec<usize> = Vec::with_capacity(m.edges.len() + 1);
    let mut edges_rev: Vec<usize> = Vec::with_capacity(m.edges.len());
    while let Some(&(v, via)) = stack.last() {
        let mut advanced = false;
        while next[v] < adj[v].len() {
            let (to, id) = adj[v][next[v]];
            if used[id] {
                next[v] += 1;
                continue;
            }
            used[id] = true;
            stack.push((to, Some(id)));
            advanced = true;
            break;
        }
        if !advanced {
            stack.pop();
            walk_rev.push(v);
            if let Some(id) = via {
                edges_rev.push(id);
            }
        }
    }
    if edges_rev.len() != m.edges.len() {
        return Err(Error::DisconnectedEdges);
    }
    walk_rev.reverse();
    edges_rev.reverse();
    Ok((walk_rev, edges_rev))
}

/// A perfect matching on a point set. `exact` is false when the greedy
/// fallback produced it.
#[derive(Debug, Clone)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: f64,
    pub exact: bool,
}

/// Number of points up to which the matching is solved exactly.
pub const EXACT_MATCHING_LIMIT: usize = 16;

/// Minimum-weight perfect matching under Euclidean distance.
///
/// Up to [`EXACT_MATCHING_LIMIT`] points this is exact (bitmask dynamic
/// programming over point subsets); beyond that a greedy
/// closest-pair-first matching is returned and flagged `exact: false`.
pub fn min_weight_perfect_matching(points: &[Point2D]) -> Result<Matching> {
    let n = points.len();
    if n % 2 != 0 {
        return Err(Error::OddMatchingCardinality(n));
    }
    if n == 0 {
        return Ok(Matching { pairs: vec![], weight: 0.0, exact: true });
    }
    if n <= EXACT_MATCHING_LIMIT {
        Ok(matching_bitmask_dp(points))
    } else {
        Ok(matching_greedy(points))
    }
}

fn matching_bitmask_dp(points: &[Point2D]) -> Matching {
    let n = points.len();
    let full = (1usize << n) - 1;
    let mut dp = vec![f64::INFINITY; full + 1];
    let mut choice = vec![usize::MAX; full + 1];
    dp[0] = 0.0;
    for mask in 1..=full {
        if (mask as u32).count_ones() % 2 != 0 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = rest & !(1 << j);
            let cand = dp[prev] + points[i].dist(points[j]);
            if cand < dp[mask] {
                dp[mask] = cand;
                choice[mask] = j;
            }
        }
    }
    let mut pairs = Vec::with_capacity(n / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let j = choice[mask];
        pairs.push((i, j));
        mask &= !(1 << i);
        mask &= !(1 << j);
    }
    pairs.sort();
    Matching { pairs, weight: dp[full], exact: true }
}

fn matching_greedy(points: &[Point2D]) -> Matching {
    let n = points.len();
    let mut cands: Vec<(f64, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            cands.push((points[i].dist(points[j]), i, j));
        }
    }
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut matched = vec![false; n];
    let mut pairs = Vec::with_capacity(n / 2);
    let mut weight = 0.0;
    for (d, i, j) in cands {
        if !matched[i] && !matched[j] {
            matched[i] = true;
            matched[j] = true;
            pairs.push((i, j));
            weight += d;
        }
    }
    pairs.sort();
    Matching { pairs, weight, exact: false }
}
