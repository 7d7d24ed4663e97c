//! Simple undirected graphs with dense vertex ids, plus the loop/multi-edge
//! variant produced by suppressing internal 2-vertices.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("NotSimple: loop at vertex {0}")]
    Loop(VertexId),
    #[error("NotSimple: duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("UnknownVertex: {0}")]
    UnknownVertex(VertexId),
    #[error("InfeasibleSpec: {0}")]
    InfeasibleSpec(&'static str),
}

/// Simple undirected graph. Neighbour lists are kept sorted so every walk
/// over the graph is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex(u));
            }
            if v >= n {
                return Err(GraphError::UnknownVertex(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<VertexId> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Induced subgraph on the vertices flagged in `keep`, re-indexed densely
    /// in increasing original order.
    pub fn induced(&self, keep: &[bool]) -> (Graph, IdMap) {
        assert_eq!(keep.len(), self.n());
        let map = IdMap::from_keep(keep);
        let mut adj = vec![Vec::new(); map.new_to_old.len()];
        let mut m = 0;
        for (new_u, &old_u) in map.new_to_old.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if let Some(new_v) = map.old_to_new[old_v] {
                    adj[new_u].push(new_v);
                    if new_v > new_u {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, map)
    }

    /// `G - S`, re-indexed, with the explicit id map back to `self`.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<(Graph, IdMap), GraphError> {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            if v >= self.n() {
                return Err(GraphError::UnknownVertex(v));
            }
            keep[v] = false;
        }
        Ok(self.induced(&keep))
    }

    /// Number of edges of `G[S]` for the vertices flagged in `mask`.
    pub fn edges_within(&self, mask: &[bool]) -> usize {
        let mut e = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if !mask[u] {
                continue;
            }
            e += list.iter().filter(|&&v| v > u && mask[v]).count();
        }
        e
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}

/// Translation between a graph and one of its induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    pub old_to_new: Vec<Option<VertexId>>,
    pub new_to_old: Vec<VertexId>,
}

impl IdMap {
    fn from_keep(keep: &[bool]) -> Self {
        let mut old_to_new = vec![None; keep.len()];
        let mut new_to_old = Vec::new();
        for (old, &k) in keep.iter().enumerate() {
            if k {
                old_to_new[old] = Some(new_to_old.len());
                new_to_old.push(old);
            }
        }
        IdMap {
            old_to_new,
            new_to_old,
        }
    }
}

/// Graph with parallel edges and loops allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let edges = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        Multigraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn loops(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Multiplicity of the edge `{u, v}`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.edges.iter().filter(|&&e| e == key).count()
    }
}

/// Degree-based role of a vertex for a fixed `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexTag {
    Deg1OrLess,
    /// 2-vertex with at least one small neighbour.
    Leaf2,
    /// 2-vertex whose neighbours are both big.
    NonLeaf2,
    Small3Plus,
    Big,
}

/// Per-vertex tags for a given `d`. Big means degree at least `d + 2`,
/// small means degree at most `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub d: usize,
    pub tags: Vec<VertexTag>,
}

/// Degree at least `d + 2`. A 2-vertex is never big, even for `d = 0`.
#[inline]
pub fn is_big(g: &Graph, v: VertexId, d: usize) -> bool {
    let k = g.degree(v);
    k >= d + 2 && k != 2
}

#[inline]
pub fn is_small(g: &Graph, v: VertexId, d: usize) -> bool {
    g.degree(v) <= d + 1
}

/// Tags every vertex. Degree 2 takes precedence over the big/small split,
/// which only matters for `d = 0` where 2-vertices are also big.
pub fn classify(g: &Graph, d: usize) -> VertexClass {
    let tags = g
        .vertices()
        .map(|v| match g.degree(v) {
            0 | 1 => VertexTag::Deg1OrLess,
            2 => {
                if g.neighbors(v).iter().any(|&w| is_small(g, w, d)) {
                    VertexTag::Leaf2
                } else {
                    VertexTag::NonLeaf2
                }
            }
            k if k <= d + 1 => VertexTag::Small3Plus,
            _ => VertexTag::Big,
        })
        .collect();
    VertexClass { d, tags }
}

/// Graph families used for corpora and examples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// Replace each edge by a path with `k` interior vertices.
    Subdivide(Graph, usize),
    /// Uniform simple graph with exactly `m` edges.
    Random { n: usize, m: usize, seed: u64 },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    match *spec {
        GeneratorSpec::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InfeasibleSpec("cycle needs n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Path(n) => {
            if n < 1 {
                return Err(GraphError::InfeasibleSpec("path needs n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Complete(n) => {
            if n < 1 {
                return Err(GraphError::InfeasibleSpec("complete graph needs n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        GeneratorSpec::Subdivide(ref g, k) => Ok(subdivide(g, k)),
        GeneratorSpec::Random { n, m, seed } => random_graph(n, m, seed),
    }
}

/// Each edge `uv` becomes a path `u - x1 - ... - xk - v`; the new vertices
/// are numbered after the originals, edge by edge in lexicographic order.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let old = g.edges();
    let n = g.n() + old.len() * k;
    let mut edges = Vec::with_capacity(old.len() * (k + 1));
    let mut next = g.n();
    for (u, v) in old {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(n, &edges).expect("subdivision of a simple graph is simple")
}

fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GraphError::InfeasibleSpec("m exceeds n(n-1)/2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    if m * 2 > max {
        // dense: shuffle the full edge list and take a prefix
        let mut all = Vec::with_capacity(max);
        for u in 0..n {
            for v in u + 1..n {
                all.push((u, v));
            }
        }
        for i in 0..m {
            let j = rng.gen_range(i..all.len());
            all.swap(i, j);
        }
        all.truncate(m);
        all.sort_unstable();
        edges = all;
    } else {
        let mut present = alloc::collections::BTreeSet::new();
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let e = if u < v { (u, v) } else { (v, u) };
            if present.insert(e) {
                edges.push(e);
            }
        }
        edges.sort_unstable();
    }
    Graph::from_edges(n, &edges)
}
