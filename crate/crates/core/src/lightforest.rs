//! Buds, the light forest, its hat graph with internal 2-vertices, and the
//! two extension primitives used by the reductions: colouring a bud and
//! descending a 2-vertex.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{is_big, is_small, Graph, IdMap, Multigraph, VertexId};
use crate::partition::{PartialPartition, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LightForestError {
    #[error("PreconditionViolated: {reason} (vertex {vertex})")]
    PreconditionViolated {
        reason: &'static str,
        vertex: VertexId,
    },
    #[error("NotInForest: vertex {0}")]
    NotInForest(VertexId),
    #[error("FatherUncolored: bud father {0} has no colour")]
    FatherUncolored(VertexId),
    #[error("FatherOverloaded: bud father {father} is in F with {f_degree} F-neighbours")]
    FatherOverloaded { father: VertexId, f_degree: usize },
}

fn violated(reason: &'static str, vertex: VertexId) -> LightForestError {
    LightForestError::PreconditionViolated { reason, vertex }
}

/// Small vertex of degree at least 3.
#[inline]
pub fn is_small3(g: &Graph, v: VertexId, d: usize) -> bool {
    g.degree(v) >= 3 && is_small(g, v, d)
}

/// A maximal connected set of small 3⁺-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallComponent {
    /// Sorted.
    pub vertices: Vec<VertexId>,
    pub is_tree: bool,
    /// Edges `(inside, outside)` to 3⁺-vertices outside the component.
    pub outer: Vec<(VertexId, VertexId)>,
}

/// All maximal small 3⁺ components, ordered by smallest vertex.
pub fn small_components(g: &Graph, d: usize) -> Vec<SmallComponent> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] || !is_small3(g, s, d) {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut i = 0;
        while i < vertices.len() {
            let x = vertices[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !seen[y] && is_small3(g, y, d) {
                    seen[y] = true;
                    vertices.push(y);
                }
            }
        }
        vertices.sort_unstable();
        let mut inner_twice = 0;
        let mut outer = Vec::new();
        for &x in &vertices {
            for &y in g.neighbors(x) {
                if is_small3(g, y, d) {
                    inner_twice += 1;
                } else if g.degree(y) >= 3 {
                    outer.push((x, y));
                }
            }
        }
        out.push(SmallComponent {
            is_tree: inner_twice / 2 + 1 == vertices.len(),
            vertices,
            outer,
        });
    }
    out
}

/// A tree of small 3⁺-vertices hanging off a single big vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bud {
    /// Sorted.
    pub vertices: Vec<VertexId>,
    pub father: VertexId,
    /// The bud vertex adjacent to the father.
    pub gate: VertexId,
}

fn check_reduced(g: &Graph, d: usize) -> Result<(), LightForestError> {
    for v in g.vertices() {
        if g.degree(v) <= 1 {
            return Err(violated("vertex of degree at most 1", v));
        }
        if g.degree(v) == 2 && !g.neighbors(v).iter().any(|&w| is_big(g, w, d)) {
            return Err(violated("2-vertex without a big neighbour", v));
        }
    }
    Ok(())
}

/// Every maximal small 3⁺ component that induces a tree and has exactly one
/// edge to an outside 3⁺-vertex, that vertex being big. Sorted by gate.
pub fn find_buds(g: &Graph, d: usize) -> Result<Vec<Bud>, LightForestError> {
    check_reduced(g, d)?;
    let mut buds: Vec<Bud> = small_components(g, d)
        .into_iter()
        .filter(|c| c.is_tree && c.outer.len() == 1 && is_big(g, c.outer[0].1, d))
        .map(|c| Bud {
            gate: c.outer[0].0,
            father: c.outer[0].1,
            vertices: c.vertices,
        })
        .collect();
    buds.sort_by_key(|b| b.gate);
    Ok(buds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LTag {
    /// Big vertex.
    BigL,
    /// 2-vertex with a small neighbour, added as son of its big neighbour.
    Leaf2,
    /// 2-vertex between two big vertices, added to extend a root.
    Chain2,
    /// Vertex of a bud.
    BudV,
}

impl LTag {
    pub fn name(self) -> &'static str {
        match self {
            LTag::BigL => "bigL",
            LTag::Leaf2 => "leaf2",
            LTag::Chain2 => "chain2",
            LTag::BudV => "budV",
        }
    }
}

/// Rooted forest of big vertices, 2-vertices and buds. Fathers point
/// towards the roots; son lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LightForest {
    pub d: usize,
    pub members: Vec<bool>,
    pub father: Vec<Option<VertexId>>,
    pub sons: Vec<Vec<VertexId>>,
    pub tag: Vec<Option<LTag>>,
    pub buds: Vec<Bud>,
    /// Index into `buds` for bud vertices.
    pub bud_of: Vec<Option<usize>>,
    /// Sorted.
    pub roots: Vec<VertexId>,
}

impl LightForest {
    fn empty(n: usize, d: usize) -> Self {
        LightForest {
            d,
            members: vec![false; n],
            father: vec![None; n],
            sons: vec![Vec::new(); n],
            tag: vec![None; n],
            buds: Vec::new(),
            bud_of: vec![None; n],
            roots: Vec::new(),
        }
    }

    fn join(&mut self, v: VertexId, tag: LTag) {
        if !self.members[v] {
            self.members[v] = true;
            self.tag[v] = Some(tag);
        }
    }

    fn link(&mut self, son: VertexId, father: VertexId) {
        debug_assert!(self.father[son].is_none());
        self.father[son] = Some(father);
        let s = &mut self.sons[father];
        let pos = s.binary_search(&son).unwrap_err();
        s.insert(pos, son);
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members[v]
    }

    pub fn member_list(&self) -> Vec<VertexId> {
        (0..self.members.len()).filter(|&v| self.members[v]).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Everything strictly below `v`, sorted.
    pub fn descendants(&self, v: VertexId) -> Result<Vec<VertexId>, LightForestError> {
        if !self.members.get(v).copied().unwrap_or(false) {
            return Err(LightForestError::NotInForest(v));
        }
        let mut out = Vec::new();
        let mut stack: Vec<VertexId> = self.sons[v].clone();
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend_from_slice(&self.sons[x]);
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn root_of(&self, mut v: VertexId) -> VertexId {
        while let Some(f) = self.father[v] {
            v = f;
        }
        v
    }

    /// The whole L-component of `v`, sorted.
    pub fn component(&self, v: VertexId) -> Result<Vec<VertexId>, LightForestError> {
        if !self.members.get(v).copied().unwrap_or(false) {
            return Err(LightForestError::NotInForest(v));
        }
        let r = self.root_of(v);
        let mut c = self.descendants(r)?;
        let pos = c.binary_search(&r).unwrap_err();
        c.insert(pos, r);
        Ok(c)
    }

    pub fn is_l_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.father[u] == Some(v) || self.father[v] == Some(u)
    }

    /// Buds whose father is `u`, in gate order.
    pub fn buds_of(&self, u: VertexId) -> impl Iterator<Item = &Bud> + '_ {
        self.buds.iter().filter(move |b| b.father == u)
    }

    /// Checks the structural invariants of the forest against `g`.
    pub fn check_invariants(&self, g: &Graph) -> Result<(), &'static str> {
        let d = self.d;
        for v in g.vertices() {
            if let Some(f) = self.father[v] {
                if !self.members[v] || !self.members[f] {
                    return Err("father link outside the forest");
                }
                if !g.has_edge(v, f) {
                    return Err("father link is not an edge");
                }
                let (bv, bf) = (is_big(g, v, d), is_big(g, f, d));
                if bv && bf {
                    return Err("two big vertices joined in L");
                }
                if g.degree(v) == 2 && g.degree(f) == 2 {
                    return Err("two 2-vertices joined in L");
                }
            }
            match self.tag[v] {
                Some(LTag::Leaf2) => {
                    if !self.father[v].is_some_and(|f| is_big(g, f, d)) {
                        return Err("leaf without a big father");
                    }
                }
                Some(LTag::Chain2) => {
                    if !self.father[v].is_some_and(|f| is_big(g, f, d)) {
                        return Err("chain vertex without a big father");
                    }
                    if !(self.sons[v].len() == 1 && is_big(g, self.sons[v][0], d)) {
                        return Err("chain vertex without a big son");
                    }
                }
                _ => {}
            }
        }
        // acyclic: every climb must end
        for v in g.vertices() {
            let mut x = v;
            let mut steps = 0;
            while let Some(f) = self.father[x] {
                x = f;
                steps += 1;
                if steps > g.n() {
                    return Err("father relation has a cycle");
                }
            }
        }
        for b in &self.buds {
            let mask: Vec<bool> = g.vertices().map(|v| b.vertices.binary_search(&v).is_ok()).collect();
            if g.edges_within(&mask) + 1 != b.vertices.len() {
                return Err("bud does not induce a tree");
            }
            let mut outer = 0;
            for &x in &b.vertices {
                for &y in g.neighbors(x) {
                    if !mask[y] && g.degree(y) >= 3 {
                        outer += 1;
                    }
                }
            }
            if outer != 1 || !g.has_edge(b.gate, b.father) || !is_big(g, b.father, d) {
                return Err("bud does not have a single big gate edge");
            }
            for &x in &b.vertices {
                let mut y = x;
                while y != b.father {
                    match self.father[y] {
                        Some(f) => y = f,
                        None => return Err("bud vertex does not reach its father"),
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the light forest. Leaves first, then buds, then chains through
/// non-leaf 2-vertices until nothing changes, always lowest id first.
pub fn build_light_forest(g: &Graph, d: usize) -> Result<LightForest, LightForestError> {
    let buds = find_buds(g, d)?;
    let mut l = LightForest::empty(g.n(), d);

    for v in g.vertices() {
        if g.degree(v) != 2 || !g.neighbors(v).iter().any(|&w| is_small(g, w, d)) {
            continue;
        }
        let u = *g
            .neighbors(v)
            .iter()
            .find(|&&w| is_big(g, w, d))
            .ok_or(violated("leaf without a big neighbour", v))?;
        l.join(v, LTag::Leaf2);
        l.join(u, LTag::BigL);
        l.link(v, u);
    }

    for (i, bud) in buds.iter().enumerate() {
        for &x in &bud.vertices {
            l.join(x, LTag::BudV);
            l.bud_of[x] = Some(i);
        }
        l.join(bud.father, LTag::BigL);
        l.link(bud.gate, bud.father);
        let mut queue = VecDeque::from([bud.gate]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if l.bud_of[y] == Some(i) && y != bud.gate && l.father[y].is_none() {
                    l.link(y, x);
                    queue.push_back(y);
                }
            }
        }
    }
    l.buds = buds;

    'grow: loop {
        for w in g.vertices() {
            if !l.members[w] || !is_big(g, w, d) || l.sons[w].len() + 1 != g.degree(w) {
                continue;
            }
            let last = *g
                .neighbors(w)
                .iter()
                .find(|&&x| l.sons[w].binary_search(&x).is_err())
                .expect("degree exceeds son count");
            if g.degree(last) != 2 || l.members[last] {
                continue;
            }
            let u = g.neighbors(last).iter().copied().find(|&x| x != w).unwrap();
            if !is_big(g, u, d) {
                return Err(violated("non-leaf 2-vertex with a small neighbour", last));
            }
            l.join(last, LTag::Chain2);
            l.join(u, LTag::BigL);
            l.link(w, last);
            l.link(last, u);
            continue 'grow;
        }
        break;
    }

    l.roots = g
        .vertices()
        .filter(|&v| l.members[v] && l.father[v].is_none())
        .collect();
    Ok(l)
}

/// The light forest without its buds and without edges joining two roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LHat {
    pub graph: Graph,
    /// Between ids of the host graph (old) and of `graph` (new).
    pub map: IdMap,
    /// Host ids of the 2-vertices whose two neighbours are both present.
    pub internal2: Vec<VertexId>,
}

impl LHat {
    /// Host ids of the vertices of degree 2 in the host graph.
    pub fn two_vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.map
            .new_to_old
            .iter()
            .copied()
            .filter(|&v| g.degree(v) == 2)
            .collect()
    }

    /// `Σ (deg(v) − d − 1)` over the big vertices present.
    pub fn big_excess(&self, g: &Graph, d: usize) -> usize {
        self.map
            .new_to_old
            .iter()
            .filter(|&&v| is_big(g, v, d))
            .map(|&v| g.degree(v) - d - 1)
            .sum()
    }
}

pub fn build_lhat(g: &Graph, l: &LightForest) -> LHat {
    let keep: Vec<bool> = g
        .vertices()
        .map(|v| l.members[v] && l.bud_of[v].is_none())
        .collect();
    let (_, map) = g.induced(&keep);
    let is_root = |v: VertexId| l.members[v] && l.father[v].is_none();
    let edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| keep[u] && keep[v] && !(is_root(u) && is_root(v)))
        .map(|(u, v)| (map.old_to_new[u].unwrap(), map.old_to_new[v].unwrap()))
        .collect();
    let graph = Graph::from_edges(map.new_to_old.len(), &edges).expect("subgraph of a simple graph");
    let internal2 = graph
        .vertices()
        .filter(|&x| graph.degree(x) == 2 && g.degree(map.new_to_old[x]) == 2)
        .map(|x| map.new_to_old[x])
        .collect();
    LHat {
        graph,
        map,
        internal2,
    }
}

/// Replaces each internal 2-vertex `u – x – w` by an edge `u – w`, in
/// increasing order. Vertex ids are those of `lhat.graph`; suppressed
/// vertices stay as isolated vertices.
pub fn suppress_internal(lhat: &LHat) -> Multigraph {
    let h = &lhat.graph;
    let mut edges: Vec<Option<(VertexId, VertexId)>> = h.edges().into_iter().map(Some).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, e) in edges.iter().enumerate() {
        let (u, v) = e.unwrap();
        incident[u].push(i);
        incident[v].push(i);
    }
    for &host in &lhat.internal2 {
        let x = lhat.map.old_to_new[host].unwrap();
        let mut live: Vec<usize> = incident[x].iter().copied().filter(|&i| edges[i].is_some()).collect();
        live.dedup();
        let ends: Vec<VertexId> = live
            .iter()
            .map(|&i| {
                let (a, b) = edges[i].unwrap();
                if a == x {
                    b
                } else {
                    a
                }
            })
            .collect();
        for &i in &live {
            edges[i] = None;
        }
        if let [a, b] = ends[..] {
            if a != x && b != x {
                let id = edges.len();
                edges.push(Some((a, b)));
                incident[a].push(id);
                if b != a {
                    incident[b].push(id);
                }
            }
        }
        incident[x].clear();
    }
    Multigraph::new(h.n(), edges.into_iter().flatten().collect())
}

/// Colours a bud from its gate outwards: `I` when no neighbour is in `I`
/// yet, `F` otherwise.
pub fn colour_bud(
    g: &Graph,
    p: &mut PartialPartition,
    bud: &Bud,
    d: usize,
) -> Result<(), LightForestError> {
    match p.get(bud.father) {
        None => return Err(LightForestError::FatherUncolored(bud.father)),
        Some(Side::F) => {
            let f_degree = p.f_degree(g, bud.father);
            if f_degree + 1 > d {
                return Err(LightForestError::FatherOverloaded {
                    father: bud.father,
                    f_degree,
                });
            }
        }
        Some(Side::I) => {}
    }
    let mut order = vec![bud.gate];
    let mut seen = vec![bud.gate];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in g.neighbors(x) {
            if bud.vertices.binary_search(&y).is_ok() && !seen.contains(&y) {
                seen.push(y);
                order.push(y);
            }
        }
    }
    for x in order {
        let side = if p.has_i_neighbor(g, x) { Side::F } else { Side::I };
        p.set(x, side);
    }
    Ok(())
}

/// Extends a partial partition to a 2-vertex `v` of `L` and everything
/// below it. Big descendants go to `I`, the 2-vertices go to `F`, small
/// neighbours of the leaves involved move to `I` where needed, then the buds
/// hanging below are coloured.
pub fn descend(
    g: &Graph,
    p: &mut PartialPartition,
    l: &LightForest,
    v: VertexId,
) -> Result<(), LightForestError> {
    let d = l.d;
    if !l.contains(v) {
        return Err(LightForestError::NotInForest(v));
    }
    if g.degree(v) != 2 {
        return Err(violated("descended vertex is not a 2-vertex", v));
    }
    let below = l.descendants(v)?;
    if p.is_coloured(v) {
        return Err(violated("descended vertex already coloured", v));
    }
    if let Some(&x) = below.iter().find(|&&x| p.is_coloured(x)) {
        return Err(violated("descendant already coloured", x));
    }
    let mut subtree = below.clone();
    subtree.push(v);
    subtree.sort_unstable();
    let inside = |x: VertexId| subtree.binary_search(&x).is_ok();

    for &x in &below {
        if is_big(g, x, d) {
            p.set(x, Side::I);
        }
    }
    // small neighbours of the leaves: those outside L move to I when they
    // can; those inside L only when the new F-neighbours overload them
    let watched: Vec<VertexId> = subtree
        .iter()
        .filter(|&&x| l.tag[x] == Some(LTag::Leaf2))
        .flat_map(|&x| g.neighbors(x).iter().copied().filter(move |&w| Some(w) != l.father[x]))
        .filter(|&w| !inside(w) && is_small(g, w, d))
        .collect();
    for &w in &watched {
        if !l.contains(w) && p.get(w) == Some(Side::F) && !p.has_i_neighbor(g, w) {
            p.set(w, Side::I);
        }
    }
    for &x in &subtree {
        if g.degree(x) == 2 {
            p.set(x, Side::F);
        }
    }
    for &w in &watched {
        if l.contains(w)
            && p.get(w) == Some(Side::F)
            && !p.has_i_neighbor(g, w)
            && p.f_degree(g, w) > d
        {
            p.set(w, Side::I);
        }
    }
    for bud in &l.buds {
        if inside(bud.father) {
            colour_bud(g, p, bud, d)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::partition::verify_good_partial;

    /// Hub 0 of degree 4 with four 2-vertices 1..4 whose other ends are the
    /// degree-3 vertices 5..8 of a cycle 5-6-7-8, each also adjacent to a
    /// common small partner so they are small 3⁺ but never a tree.
    fn hub_with_leaf_sons() -> Graph {
        let mut e = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 8)];
        e.extend([(5, 6), (6, 7), (7, 8), (5, 8)]);
        Graph::from_edges(9, &e).unwrap()
    }

    #[test]
    fn no_small3_means_no_buds() {
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        assert!(find_buds(&k4, 1).unwrap().is_empty());
    }

    /// d=2: big hub 0 (degree 4) with a bud {1} of degree 3. The two other
    /// neighbours of 1 are 2-vertices 2, 3 leading back to the hub through
    /// big vertices 4 and 5, which close up through 2-vertices 6, 7.
    fn bud_instance() -> Graph {
        let e = [
            (0, 1),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 5),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 7),
            (0, 6),
            (6, 7),
        ];
        Graph::from_edges(8, &e).unwrap()
    }

    #[test]
    fn single_vertex_bud() {
        let g = bud_instance();
        assert_eq!(g.degree(0), 4);
        let buds = find_buds(&g, 2).unwrap();
        assert_eq!(
            buds,
            vec![Bud {
                vertices: vec![1],
                father: 0,
                gate: 1
            }]
        );
    }

    #[test]
    fn cyclic_small_component_is_not_a_bud() {
        let g = hub_with_leaf_sons();
        assert_eq!(small_components(&g, 2).len(), 1);
        assert!(!small_components(&g, 2)[0].is_tree);
        assert!(find_buds(&g, 2).unwrap().is_empty());
    }

    #[test]
    fn find_buds_rejects_pendant_vertices() {
        let p = generate(&GeneratorSpec::Path(3)).unwrap();
        assert!(matches!(
            find_buds(&p, 1),
            Err(LightForestError::PreconditionViolated { vertex: 0, .. })
        ));
    }

    #[test]
    fn no_two_vertices_and_no_buds_give_empty_forest() {
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        assert!(build_light_forest(&k4, 2).unwrap().is_empty());
    }

    #[test]
    fn leaf_step_builds_a_star() {
        let g = hub_with_leaf_sons();
        let l = build_light_forest(&g, 2).unwrap();
        assert_eq!(l.sons[0], vec![1, 2, 3, 4]);
        assert_eq!(l.roots, vec![0]);
        assert!((1..=4).all(|v| l.tag[v] == Some(LTag::Leaf2)));
        assert_eq!(l.descendants(0).unwrap(), vec![1, 2, 3, 4]);
        assert!(l.descendants(1).unwrap().is_empty());
        assert_eq!(l.descendants(5), Err(LightForestError::NotInForest(5)));
        l.check_invariants(&g).unwrap();
    }

    /// d=1. Big w=0 (degree 3) has leaves 1, 2 whose small partners 3, 4 are
    /// 2-vertices on a path to big 6; its last neighbour is the non-leaf
    /// 2-vertex 5 whose other end is big 6.
    fn chain_instance() -> Graph {
        let e = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 6), (4, 6), (0, 5), (5, 6)];
        Graph::from_edges(7, &e).unwrap()
    }

    #[test]
    fn chain_step_extends_a_full_root() {
        let g = chain_instance();
        let l = build_light_forest(&g, 1).unwrap();
        assert_eq!(l.father[0], Some(5));
        assert_eq!(l.father[5], Some(6));
        assert_eq!(l.tag[5], Some(LTag::Chain2));
        assert_eq!(l.roots, vec![6]);
        assert_eq!(l.descendants(5).unwrap(), vec![0, 1, 2]);
        l.check_invariants(&g).unwrap();
    }

    #[test]
    fn lhat_examples() {
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        let l = build_light_forest(&k4, 2).unwrap();
        let h = build_lhat(&k4, &l);
        assert_eq!((h.graph.n(), h.internal2.len()), (0, 0));

        let g = chain_instance();
        let l = build_light_forest(&g, 1).unwrap();
        let h = build_lhat(&g, &l);
        assert!(h.internal2.contains(&5));
        assert_eq!(suppress_internal(&h).m(), h.graph.m() - h.internal2.len());
    }

    #[test]
    fn root_root_edges_are_dropped() {
        // d = 1: hubs 0 and 1 are adjacent, each with a pair of adjacent leaves
        let e = [(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)];
        let g = Graph::from_edges(6, &e).unwrap();
        let l = build_light_forest(&g, 1).unwrap();
        assert_eq!(l.roots, vec![0, 1]);
        let h = build_lhat(&g, &l);
        let (a, b) = (h.map.old_to_new[0].unwrap(), h.map.old_to_new[1].unwrap());
        assert!(g.has_edge(0, 1));
        assert!(!h.graph.has_edge(a, b));
        assert_eq!(h.graph.m(), g.m() - 1);
        assert_eq!(h.internal2, vec![2, 3, 4, 5]);
    }

    #[test]
    fn suppression_examples() {
        let mk = |n, e: &[(usize, usize)], internal: Vec<usize>| {
            let graph = Graph::from_edges(n, e).unwrap();
            let map = IdMap {
                old_to_new: (0..n).map(Some).collect(),
                new_to_old: (0..n).collect(),
            };
            LHat {
                graph,
                map,
                internal2: internal,
            }
        };
        let path = mk(3, &[(0, 1), (1, 2)], vec![1]);
        assert_eq!(suppress_internal(&path).edges(), &[(0, 2)]);
        let c4 = mk(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], vec![1, 3]);
        let s = suppress_internal(&c4);
        assert_eq!(s.multiplicity(0, 2), 2);
        assert_eq!(s.m(), 2);
        let plain = mk(3, &[(0, 1), (1, 2)], vec![]);
        assert_eq!(suppress_internal(&plain).m(), 2);
    }

    #[test]
    fn colour_bud_examples() {
        let g = bud_instance();
        let buds = find_buds(&g, 2).unwrap();
        let mut p = PartialPartition::uncoloured(8);
        assert_eq!(
            colour_bud(&g, &mut p, &buds[0], 2),
            Err(LightForestError::FatherUncolored(0))
        );
        p.set(0, Side::I);
        colour_bud(&g, &mut p, &buds[0], 2).unwrap();
        assert_eq!(p.get(1), Some(Side::F));

        let mut p = PartialPartition::uncoloured(8);
        p.set(0, Side::F);
        colour_bud(&g, &mut p, &buds[0], 2).unwrap();
        assert_eq!(p.get(1), Some(Side::I));

        let mut p = PartialPartition::uncoloured(8);
        for v in [0, 4, 5] {
            p.set(v, Side::F);
        }
        assert!(matches!(
            colour_bud(&g, &mut p, &buds[0], 2),
            Err(LightForestError::FatherOverloaded { father: 0, f_degree: 2 })
        ));
    }

    #[test]
    fn colour_path_bud_under_i_father() {
        // d = 3: father 0 has degree 5; bud path 1-2-3 with gate 1; every
        // bud vertex has degree 3 via 2-vertices 4..8 that return to 0 or 9.
        let e = [
            (0, 1),
            (1, 2),
            (2, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (3, 7),
            (4, 9),
            (5, 9),
            (6, 9),
            (7, 9),
            (0, 9),
            (0, 8),
            (8, 9),
            (0, 10),
            (10, 9),
            (0, 11),
            (11, 9),
        ];
        let g = Graph::from_edges(12, &e).unwrap();
        let buds = find_buds(&g, 3).unwrap();
        assert_eq!(buds.len(), 1);
        assert_eq!((buds[0].gate, buds[0].father), (1, 0));
        let mut p = PartialPartition::uncoloured(12);
        p.set(0, Side::I);
        colour_bud(&g, &mut p, &buds[0], 3).unwrap();
        assert_eq!(p.get(1), Some(Side::F));
        assert_eq!(p.get(2), Some(Side::I));
        assert_eq!(p.get(3), Some(Side::F));
        assert!(verify_good_partial(&g, &p, 3).unwrap().valid);
    }

    #[test]
    fn descend_leaf_recolours_pending() {
        let g = hub_with_leaf_sons();
        let l = build_light_forest(&g, 2).unwrap();
        let mut p = PartialPartition::uncoloured(9);
        for v in 5..9 {
            p.set(v, Side::F);
        }
        p.set(6, Side::I);
        p.set(8, Side::I);
        // pending 5 has I-neighbours 6 and 8, so stays F
        descend(&g, &mut p, &l, 1).unwrap();
        assert_eq!(p.get(1), Some(Side::F));
        assert_eq!(p.get(5), Some(Side::F));

        let mut p = PartialPartition::uncoloured(9);
        for v in 5..9 {
            p.set(v, Side::F);
        }
        descend(&g, &mut p, &l, 1).unwrap();
        assert_eq!(p.get(5), Some(Side::I));
        assert_eq!(p.get(1), Some(Side::F));
    }

    #[test]
    fn descend_chain_puts_big_son_in_i() {
        let g = chain_instance();
        let l = build_light_forest(&g, 1).unwrap();
        let mut p = PartialPartition::uncoloured(7);
        for v in [3, 4] {
            p.set(v, Side::F);
        }
        p.set(6, Side::I);
        descend(&g, &mut p, &l, 5).unwrap();
        assert_eq!(p.get(0), Some(Side::I));
        assert_eq!(p.get(5), Some(Side::F));
        assert_eq!(p.get(1), Some(Side::F));
        assert_eq!(p.get(2), Some(Side::F));
        assert!(verify_good_partial(&g, &p, 1).unwrap().valid);
    }

    #[test]
    fn descend_requires_uncoloured_subtree() {
        let g = chain_instance();
        let l = build_light_forest(&g, 1).unwrap();
        let mut p = PartialPartition::uncoloured(7);
        p.set(1, Side::F);
        assert!(matches!(
            descend(&g, &mut p, &l, 5),
            Err(LightForestError::PreconditionViolated { vertex: 1, .. })
        ));
    }
}
