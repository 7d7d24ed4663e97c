//! Orientations with out-degree lower bounds: the flow-based feasibility
//! test, extraction of a subgraph that can be oriented, and pruning of
//! degree-1 vertices.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::flow::{Cap, FlowNetwork};
use crate::graph::{Graph, IdMap, VertexId};

/// Edge orientation, stored as one `(tail, head)` pair per edge in the
/// order of [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(VertexId, VertexId)>,
}

impl Orientation {
    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(t, _) in &self.arcs {
            out[t] += 1;
        }
        out
    }

    /// Out-degree of every vertex is at least its weight.
    pub fn is_good(&self, n: usize, omega: &[usize]) -> bool {
        self.out_degrees(n)
            .iter()
            .zip(omega)
            .all(|(&o, &w)| o >= w)
    }

    pub fn tail_of(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        self.arcs
            .iter()
            .find(|&&(t, h)| (t, h) == (u, v) || (t, h) == (v, u))
            .map(|&(t, _)| t)
    }
}

/// A set `X` with `ω(X)` larger than the number of edges touching `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolatingSet {
    pub set: Vec<VertexId>,
    pub omega_sum: usize,
    pub incident_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Violating(ViolatingSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("Infeasible: set {:?} has weight {} but only {} incident edges", .0.set, .0.omega_sum, .0.incident_edges)]
    Infeasible(ViolatingSet),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(&'static str),
    #[error("SizeMismatch: graph has {graph} vertices, weights cover {weights}")]
    SizeMismatch { graph: usize, weights: usize },
}

/// Number of edges with at least one endpoint in `mask`.
pub fn incident_edges(h: &Graph, mask: &[bool]) -> usize {
    h.edges()
        .into_iter()
        .filter(|&(u, v)| mask[u] || mask[v])
        .count()
}

fn weight_of(omega: &[usize], mask: &[bool]) -> usize {
    omega
        .iter()
        .zip(mask)
        .filter(|(_, &m)| m)
        .map(|(&w, _)| w)
        .sum()
}

struct Solved {
    net: FlowNetwork,
    edge_arcs: Vec<[crate::flow::ArcId; 2]>,
    value: Cap,
    total: Cap,
    source: usize,
}

fn run_flow(h: &Graph, omega: &[usize]) -> Solved {
    let edges = h.edges();
    let m = edges.len();
    let n = h.n();
    let source = 0;
    let sink = m + n + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut edge_arcs = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(source, 1 + i, 1);
        let a = net.add_arc(1 + i, 1 + m + u, 1);
        let b = net.add_arc(1 + i, 1 + m + v, 1);
        edge_arcs.push([a, b]);
    }
    let mut total: Cap = 0;
    for v in h.vertices() {
        let w = omega[v] as Cap;
        total += w;
        if w > 0 {
            net.add_arc(1 + m + v, sink, w);
        }
    }
    let value = net.max_flow(source, sink);
    Solved {
        net,
        edge_arcs,
        value,
        total,
        source,
    }
}

fn check_len(h: &Graph, omega: &[usize]) -> Result<(), OrientationError> {
    if omega.len() != h.n() {
        return Err(OrientationError::SizeMismatch {
            graph: h.n(),
            weights: omega.len(),
        });
    }
    Ok(())
}

/// Decides whether an orientation with `outdeg(v) >= ω(v)` exists. When it
/// does not, returns an inclusion-minimal violating set cut out of a
/// minimum cut.
pub fn check_feasible(h: &Graph, omega: &[usize]) -> Result<Feasibility, OrientationError> {
    check_len(h, omega)?;
    let solved = run_flow(h, omega);
    if solved.value == solved.total {
        return Ok(Feasibility::Feasible);
    }
    let m = h.m();
    let side = solved.net.source_side(solved.source);
    let mut mask: Vec<bool> = h.vertices().map(|v| !side[1 + m + v]).collect();
    let violates = |mask: &[bool]| weight_of(omega, mask) > incident_edges(h, mask);
    debug_assert!(violates(&mask));
    for v in h.vertices() {
        if mask[v] {
            mask[v] = false;
            if !violates(&mask) {
                mask[v] = true;
            }
        }
    }
    let set: Vec<VertexId> = h.vertices().filter(|&v| mask[v]).collect();
    Ok(Feasibility::Violating(ViolatingSet {
        omega_sum: weight_of(omega, &mask),
        incident_edges: incident_edges(h, &mask),
        set,
    }))
}

/// A good ω-orientation read off an integral maximum flow. Each edge is
/// oriented out of the endpoint its unit of flow reached; edges carrying no
/// flow leave their lower endpoint.
pub fn orient(h: &Graph, omega: &[usize]) -> Result<Orientation, OrientationError> {
    if let Feasibility::Violating(x) = check_feasible(h, omega)? {
        return Err(OrientationError::Infeasible(x));
    }
    let solved = run_flow(h, omega);
    let arcs = h
        .edges()
        .into_iter()
        .zip(&solved.edge_arcs)
        .map(|((u, v), &[a, b])| {
            if solved.net.flow(b) > 0 && solved.net.flow(a) == 0 {
                (v, u)
            } else {
                (u, v)
            }
        })
        .collect();
    Ok(Orientation { arcs })
}

/// Restricts an orientation of `g` to the induced subgraph described by
/// `map` (old ids are those of `g`).
fn restrict(o: &Orientation, map: &IdMap) -> Orientation {
    let mut arcs: Vec<(VertexId, VertexId)> = o
        .arcs
        .iter()
        .filter_map(|&(t, h)| Some((map.old_to_new[t]?, map.old_to_new[h]?)))
        .collect();
    arcs.sort_unstable_by_key(|&(t, h)| (t.min(h), t.max(h)));
    Orientation { arcs }
}

/// Deletes violating sets until what remains can be oriented. The result is
/// an induced subgraph of `h` with at least one vertex, its id map and a
/// good orientation of it.
pub fn extract_orientable_subgraph(
    h: &Graph,
    omega: &[usize],
) -> Result<(Graph, IdMap, Orientation), OrientationError> {
    check_len(h, omega)?;
    if h.n() == 0 {
        return Err(OrientationError::PreconditionViolated("graph has no vertices"));
    }
    if omega.iter().sum::<usize>() > h.m() {
        return Err(OrientationError::PreconditionViolated(
            "total weight exceeds the number of edges",
        ));
    }
    let mut keep = vec![true; h.n()];
    loop {
        let (sub, map) = h.induced(&keep);
        if sub.n() == 0 {
            return Err(OrientationError::PreconditionViolated(
                "every vertex was deleted",
            ));
        }
        let w: Vec<usize> = map.new_to_old.iter().map(|&v| omega[v]).collect();
        match check_feasible(&sub, &w)? {
            Feasibility::Feasible => {
                let o = orient(&sub, &w)?;
                return Ok((sub, map, o));
            }
            Feasibility::Violating(x) => {
                for v in x.set {
                    keep[map.new_to_old[v]] = false;
                }
            }
        }
    }
}

/// Repeatedly deletes the lowest vertex of degree 1. With every weight at
/// least 1 such a vertex's only edge points away from it, so the other
/// out-degrees do not change.
pub fn prune_degree_one(
    s: &Graph,
    o: &Orientation,
    omega: &[usize],
) -> Result<(Graph, IdMap, Orientation), OrientationError> {
    check_len(s, omega)?;
    if omega.contains(&0) {
        return Err(OrientationError::PreconditionViolated("some weight is 0"));
    }
    if o.arcs.len() != s.m() || !o.is_good(s.n(), omega) {
        return Err(OrientationError::PreconditionViolated(
            "orientation is not a good orientation of the graph",
        ));
    }
    let mut keep = vec![true; s.n()];
    let mut deg: Vec<usize> = s.vertices().map(|v| s.degree(v)).collect();
    while let Some(v) = s.vertices().find(|&v| keep[v] && deg[v] <= 1) {
        keep[v] = false;
        for &w in s.neighbors(v) {
            if keep[w] {
                deg[w] -= 1;
            }
        }
    }
    let (sub, map) = s.induced(&keep);
    if sub.n() == 0 {
        return Err(OrientationError::PreconditionViolated("nothing left after pruning"));
    }
    let o2 = restrict(o, &map);
    Ok((sub, map, o2))
}
