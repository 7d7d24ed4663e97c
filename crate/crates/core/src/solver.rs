//! Reduce-and-extend solver. Each round finds a reducible configuration,
//! deletes part of the graph, and on the way back extends the partition of
//! the smaller graph over the deleted vertices.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::density::{mad_exact, DensityWitness};
use crate::graph::{is_big, is_small, Graph, IdMap, VertexId};
use crate::lightforest::{
    build_lhat, build_light_forest, colour_bud, descend, small_components, LHat, LightForest,
    LightForestError,
};
use crate::orientation::{extract_orientable_subgraph, prune_degree_one, OrientationError};
use crate::partition::{normalize, verify_good_partial, verify_ifd, PartialPartition, Partition, Side};

pub use crate::discharge::{SolveParams, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigKind {
    LowDegree,
    TwoSmall,
    NoBudTree,
    KRoot,
    HatDense,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 5] = [
        ConfigKind::LowDegree,
        ConfigKind::TwoSmall,
        ConfigKind::NoBudTree,
        ConfigKind::KRoot,
        ConfigKind::HatDense,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::LowDegree => "LowDegree",
            ConfigKind::TwoSmall => "TwoSmall",
            ConfigKind::NoBudTree => "NoBudTree",
            ConfigKind::KRoot => "KRoot",
            ConfigKind::HatDense => "HatDense",
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What the dense-hat reduction deletes and where its extension starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    /// Vertices of the pruned orientable subgraph, sorted.
    pub h: Vec<VertexId>,
    /// Vertices of `h` with no proper L-ancestor in `h`.
    pub r0: Vec<VertexId>,
    /// L-descendants of `h` outside `h`.
    pub s_desc: Vec<VertexId>,
    /// `(h ∖ r0) ∪ s_desc`, sorted.
    pub removal: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Config {
    /// A vertex of degree at most 1.
    LowDegree(VertexId),
    /// A 2-vertex with two small neighbours.
    TwoSmall(VertexId),
    /// A maximal small 3⁺ component inducing a tree, with only 2-vertices
    /// around it.
    NoBudTree(Vec<VertexId>),
    /// A big vertex all of whose neighbours are its sons in L.
    KRoot { root: VertexId, forest: LightForest },
    /// The hat of L carries at least as many edges as its weight.
    HatDense {
        forest: LightForest,
        lhat: LHat,
        /// Arcs `(tail, head)` of a good orientation of the pruned subgraph.
        orientation: Vec<(VertexId, VertexId)>,
        plan: ReductionPlan,
    },
}

impl Config {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Config::LowDegree(_) => ConfigKind::LowDegree,
            Config::TwoSmall(_) => ConfigKind::TwoSmall,
            Config::NoBudTree(_) => ConfigKind::NoBudTree,
            Config::KRoot { .. } => ConfigKind::KRoot,
            Config::HatDense { .. } => ConfigKind::HatDense,
        }
    }

    /// Vertices deleted before recursing.
    pub fn removal(&self, _g: &Graph) -> Vec<VertexId> {
        match self {
            Config::LowDegree(v) | Config::TwoSmall(v) => vec![*v],
            Config::NoBudTree(b) => b.clone(),
            Config::KRoot { root, forest } => forest.component(*root).expect("root is in L"),
            Config::HatDense { plan, .. } => plan.removal.clone(),
        }
    }

    /// The vertices that identify the configuration in a trace.
    pub fn anchor(&self) -> Vec<VertexId> {
        match self {
            Config::LowDegree(v) | Config::TwoSmall(v) => vec![*v],
            Config::NoBudTree(b) => b.clone(),
            Config::KRoot { root, .. } => vec![*root],
            Config::HatDense { plan, .. } => plan.h.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("ExtensionFailed: {0}")]
    ExtensionFailed(String),
    #[error("RecursionFailed: {0}")]
    RecursionFailed(String),
    #[error("InternalError: {0}")]
    Internal(String),
}

impl From<LightForestError> for SolverError {
    fn from(e: LightForestError) -> Self {
        SolverError::ExtensionFailed(format!("{e}"))
    }
}

impl From<OrientationError> for SolverError {
    fn from(e: OrientationError) -> Self {
        SolverError::Internal(format!("{e}"))
    }
}

/// Weight for the dense-hat test: 1 on 2-vertices, `deg − d − 1` on big
/// vertices.
pub fn hat_weights(g: &Graph, lhat: &LHat, d: usize) -> Vec<usize> {
    lhat.map
        .new_to_old
        .iter()
        .map(|&v| if g.degree(v) == 2 { 1 } else { g.degree(v) - d - 1 })
        .collect()
}

/// `|E(L̂)| >= n₂ + Σ_big (deg − d − 1)` on a nonempty hat.
pub fn hat_is_dense(g: &Graph, lhat: &LHat, d: usize) -> bool {
    lhat.graph.n() > 0 && lhat.graph.m() >= lhat.two_vertices(g).len() + lhat.big_excess(g, d)
}

/// Looks for a configuration in the fixed order LowDegree, TwoSmall,
/// NoBudTree, KRoot, then HatDense for the second theorem. Ties go to the
/// lowest id.
pub fn find_config(g: &Graph, params: &SolveParams) -> Result<Option<Config>, SolverError> {
    let d = params.d;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) <= 1) {
        return Ok(Some(Config::LowDegree(v)));
    }
    if let Some(v) = g
        .vertices()
        .find(|&v| g.degree(v) == 2 && g.neighbors(v).iter().all(|&w| is_small(g, w, d)))
    {
        return Ok(Some(Config::TwoSmall(v)));
    }
    if let Some(c) = small_components(g, d)
        .into_iter()
        .find(|c| c.is_tree && c.outer.is_empty())
    {
        return Ok(Some(Config::NoBudTree(c.vertices)));
    }
    let Ok(forest) = build_light_forest(g, d) else {
        return Ok(None);
    };
    if let Some(root) = g
        .vertices()
        .find(|&u| forest.contains(u) && is_big(g, u, d) && forest.sons[u].len() == g.degree(u))
    {
        return Ok(Some(Config::KRoot { root, forest }));
    }
    if params.theorem == Theorem::T2 {
        let lhat = build_lhat(g, &forest);
        if hat_is_dense(g, &lhat, d) {
            return hat_dense(g, d, forest, lhat).map(Some);
        }
    }
    Ok(None)
}

fn hat_dense(g: &Graph, d: usize, forest: LightForest, lhat: LHat) -> Result<Config, SolverError> {
    let omega = hat_weights(g, &lhat, d);
    let (s, smap, o) = extract_orientable_subgraph(&lhat.graph, &omega)?;
    let s_omega: Vec<usize> = smap.new_to_old.iter().map(|&x| omega[x]).collect();
    let (pruned, pmap, o2) = prune_degree_one(&s, &o, &s_omega)?;
    let host = |x: VertexId| lhat.map.new_to_old[smap.new_to_old[pmap.new_to_old[x]]];
    let mut h: Vec<VertexId> = pruned.vertices().map(host).collect();
    h.sort_unstable();
    let orientation: Vec<(VertexId, VertexId)> =
        o2.arcs.iter().map(|&(t, hd)| (host(t), host(hd))).collect();

    let mut in_h = vec![false; g.n()];
    for &v in &h {
        in_h[v] = true;
    }
    let r0: Vec<VertexId> = h
        .iter()
        .copied()
        .filter(|&v| {
            let mut x = v;
            while let Some(f) = forest.father[x] {
                if in_h[f] {
                    return false;
                }
                x = f;
            }
            true
        })
        .collect();
    if let Some(&v) = r0.iter().find(|&&v| !is_big(g, v, d)) {
        return Err(SolverError::Internal(format!(
            "top vertex {v} of the orientable subgraph is not big"
        )));
    }
    let mut s_desc = Vec::new();
    for &v in &h {
        for x in forest.descendants(v)? {
            if !in_h[x] {
                s_desc.push(x);
            }
        }
    }
    s_desc.sort_unstable();
    s_desc.dedup();
    let mut removal: Vec<VertexId> = h.iter().copied().filter(|v| r0.binary_search(v).is_err()).collect();
    if removal.is_empty() {
        return Err(SolverError::Internal(
            "orientable subgraph consists of top vertices only".into(),
        ));
    }
    removal.extend_from_slice(&s_desc);
    removal.sort_unstable();
    removal.dedup();
    Ok(Config::HatDense {
        forest,
        lhat,
        orientation,
        plan: ReductionPlan {
            h,
            r0,
            s_desc,
            removal,
        },
    })
}

fn rule(g: &Graph, p: &PartialPartition, v: VertexId) -> Side {
    if p.has_i_neighbor(g, v) {
        Side::F
    } else {
        Side::I
    }
}

pub fn extend_low_degree(g: &Graph, p: &mut PartialPartition, v: VertexId) {
    let side = rule(g, p, v);
    p.set(v, side);
}

pub fn extend_two_small(g: &Graph, p: &mut PartialPartition, v: VertexId) -> Result<(), SolverError> {
    let (a, b) = match g.neighbors(v) {
        &[a, b] => (a, b),
        _ => return Err(SolverError::ExtensionFailed(format!("{v} is not a 2-vertex"))),
    };
    match (p.get(a), p.get(b)) {
        (Some(Side::F), Some(Side::F)) => p.set(v, Side::I),
        (Some(Side::I), Some(Side::I)) => p.set(v, Side::F),
        (Some(sa), Some(_)) => {
            let w = if sa == Side::F { a } else { b };
            if !p.has_i_neighbor(g, w) {
                p.set(w, Side::I);
            }
            p.set(v, Side::F);
        }
        _ => {
            return Err(SolverError::ExtensionFailed(format!(
                "neighbours of {v} are not coloured"
            )))
        }
    }
    Ok(())
}

pub fn extend_nobud(g: &Graph, p: &mut PartialPartition, tree: &[VertexId]) {
    let Some(&root) = tree.iter().min() else { return };
    let mut order = vec![root];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in g.neighbors(x) {
            if !seen[y] && tree.binary_search(&y).is_ok() {
                seen[y] = true;
                order.push(y);
            }
        }
    }
    for x in order {
        let side = rule(g, p, x);
        p.set(x, side);
    }
}

pub fn extend_kroot(
    g: &Graph,
    p: &mut PartialPartition,
    forest: &LightForest,
    root: VertexId,
) -> Result<(), SolverError> {
    for &v in &forest.sons[root] {
        if g.degree(v) == 2 {
            descend(g, p, forest, v)?;
        }
    }
    if p.has_i_neighbor(g, root) {
        return Err(SolverError::ExtensionFailed(format!(
            "root {root} has a neighbour in I"
        )));
    }
    p.set(root, Side::I);
    for bud in forest.buds_of(root) {
        colour_bud(g, p, bud, forest.d)?;
    }
    Ok(())
}

pub fn extend_hat_dense(
    g: &Graph,
    p: &mut PartialPartition,
    forest: &LightForest,
    orientation: &[(VertexId, VertexId)],
    plan: &ReductionPlan,
) -> Result<(), SolverError> {
    let d = forest.d;
    let tails: BTreeMap<(VertexId, VertexId), VertexId> = orientation
        .iter()
        .map(|&(t, h)| ((t.min(h), t.max(h)), t))
        .collect();
    let in_h = |v: VertexId| plan.h.binary_search(&v).is_ok();

    for &v in &plan.r0 {
        if p.get(v) == Some(Side::F) && !p.has_i_neighbor(g, v) {
            p.set(v, Side::I);
        }
    }
    let mut queue: VecDeque<VertexId> = plan.r0.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        let two_sons: Vec<VertexId> = forest.sons[u]
            .iter()
            .copied()
            .filter(|&v| g.degree(v) == 2)
            .collect();
        match p.get(u) {
            Some(Side::I) => {
                for v in two_sons {
                    descend(g, p, forest, v)?;
                }
            }
            Some(Side::F) => {
                let mut rest = Vec::new();
                for v in two_sons {
                    let outward = in_h(v) && tails.get(&(u.min(v), u.max(v))) == Some(&u);
                    if !outward {
                        rest.push(v);
                        continue;
                    }
                    if p.has_i_neighbor(g, v) {
                        return Err(SolverError::ExtensionFailed(format!(
                            "2-vertex {v} under {u} already sees I"
                        )));
                    }
                    p.set(v, Side::I);
                    for &s in &forest.sons[v] {
                        p.set(s, Side::F);
                        queue.push_back(s);
                    }
                }
                for v in rest {
                    descend(g, p, forest, v)?;
                }
            }
            None => {
                return Err(SolverError::ExtensionFailed(format!(
                    "vertex {u} reached uncoloured"
                )))
            }
        }
        for bud in forest.buds_of(u) {
            colour_bud(g, p, bud, d)?;
        }
    }
    Ok(())
}

/// Applies the extension matching `config` to a partition coloured
/// everywhere except on the configuration's removal set.
pub fn extend(g: &Graph, p: &mut PartialPartition, config: &Config) -> Result<(), SolverError> {
    match config {
        Config::LowDegree(v) => {
            extend_low_degree(g, p, *v);
            Ok(())
        }
        Config::TwoSmall(v) => extend_two_small(g, p, *v),
        Config::NoBudTree(b) => {
            extend_nobud(g, p, b);
            Ok(())
        }
        Config::KRoot { root, forest } => extend_kroot(g, p, forest, *root),
        Config::HatDense {
            forest,
            orientation,
            plan,
            ..
        } => extend_hat_dense(g, p, forest, orientation, plan),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub kind: ConfigKind,
    /// Identifying vertices, in ids of the input graph.
    pub vertices: Vec<VertexId>,
    /// Number of vertices deleted by the reduction.
    pub removed: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} removed={}", self.kind, self.removed)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Partition(Partition),
    /// No configuration was found and the graph is too dense for `M`.
    PreconditionViolated(DensityWitness),
    InternalError(String),
}

impl SolveOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            SolveOutcome::Partition(_) => "Partition",
            SolveOutcome::PreconditionViolated(_) => "PreconditionViolated",
            SolveOutcome::InternalError(_) => "InternalError",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: SolveOutcome,
    pub trace: Vec<TraceEntry>,
    /// The good partition of the input graph as extended by the last
    /// unwinding step, before its normalization.
    pub good: Option<Partition>,
}

struct Frame {
    g: Graph,
    config: Config,
    child: IdMap,
}

/// Runs the reductions with an explicit stack, then unwinds the extensions.
/// Each level's partition is checked to be good, normalized, and checked
/// again before it is handed to the level above.
pub fn solve(g: &Graph, params: &SolveParams) -> SolveResult {
    let mut trace = Vec::new();
    let mut good = None;
    match run(g, params, &mut trace, &mut good) {
        Ok(outcome) => SolveResult { outcome, trace, good },
        Err(e) => SolveResult {
            outcome: SolveOutcome::InternalError(format!("{e}")),
            trace,
            good,
        },
    }
}

fn run(
    g0: &Graph,
    params: &SolveParams,
    trace: &mut Vec<TraceEntry>,
    good: &mut Option<Partition>,
) -> Result<SolveOutcome, SolverError> {
    let d = params.d;
    let mut stack: Vec<Frame> = Vec::new();
    let mut cur = g0.clone();
    let mut to_orig: Vec<VertexId> = g0.vertices().collect();
    loop {
        if cur.n() == 0 {
            break;
        }
        let Some(config) = find_config(&cur, params)? else {
            let w = mad_exact(&cur).map_err(|e| SolverError::Internal(format!("{e}")))?;
            if w.value >= params.m {
                let mut subset: Vec<VertexId> = w.subset.iter().map(|&v| to_orig[v]).collect();
                subset.sort_unstable();
                return Ok(SolveOutcome::PreconditionViolated(DensityWitness {
                    value: w.value,
                    subset,
                }));
            }
            return Err(SolverError::Internal(format!(
                "no configuration in a graph on {} vertices with mad {} < {}",
                cur.n(),
                w.value,
                params.m
            )));
        };
        let removal = config.removal(&cur);
        trace.push(TraceEntry {
            kind: config.kind(),
            vertices: config.anchor().iter().map(|&v| to_orig[v]).collect(),
            removed: removal.len(),
        });
        let (child, map) = cur
            .remove_vertices(&removal)
            .map_err(|e| SolverError::Internal(format!("{e}")))?;
        to_orig = map.new_to_old.iter().map(|&v| to_orig[v]).collect();
        stack.push(Frame {
            g: cur,
            config,
            child: map,
        });
        cur = child;
    }

    let mut part = Partition::new(Vec::new());
    while let Some(frame) = stack.pop() {
        let g = &frame.g;
        let mut pp = PartialPartition::uncoloured(g.n());
        for (c, &old) in frame.child.new_to_old.iter().enumerate() {
            pp.set(old, part.side(c));
        }
        extend(g, &mut pp, &frame.config)?;
        let kind = frame.config.kind();
        let Some(total) = pp.to_total() else {
            return Err(SolverError::ExtensionFailed(format!(
                "{kind} left vertices uncoloured"
            )));
        };
        let report = verify_good_partial(g, &pp, d).map_err(|e| SolverError::Internal(format!("{e}")))?;
        if !report.valid {
            return Err(SolverError::ExtensionFailed(format!(
                "{kind} produced {}",
                report.violations[0]
            )));
        }
        part = normalize(g, &total, d).map_err(|e| SolverError::Internal(format!("{e}")))?;
        if stack.is_empty() {
            *good = Some(total);
        }
    }

    let report = verify_ifd(g0, &part, d).map_err(|e| SolverError::Internal(format!("{e}")))?;
    if !report.valid {
        return Err(SolverError::Internal(format!(
            "final partition fails verification: {}",
            report.violations[0]
        )));
    }
    Ok(SolveOutcome::Partition(part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::Rational;
    use crate::graph::{generate, GeneratorSpec};

    fn params(m: (i64, i64), d: usize, t: Theorem) -> SolveParams {
        SolveParams::new(Rational::new(m.0, m.1), d, t).unwrap()
    }

    #[test]
    fn find_config_examples() {
        let p = params((5, 2), 2, Theorem::T1);
        let c5 = generate(&GeneratorSpec::Cycle(5)).unwrap();
        assert_eq!(find_config(&c5, &p).unwrap(), Some(Config::TwoSmall(0)));
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        assert_eq!(find_config(&k4, &params((14, 5), 8, Theorem::T1)).unwrap(), None);
        let p2 = generate(&GeneratorSpec::Path(2)).unwrap();
        assert_eq!(find_config(&p2, &p).unwrap(), Some(Config::LowDegree(0)));
    }

    #[test]
    fn low_degree_extension() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let mut p = PartialPartition::uncoloured(3);
        extend_low_degree(&g, &mut p, 2);
        assert_eq!(p.get(2), Some(Side::I));
        p.set(0, Side::I);
        extend_low_degree(&g, &mut p, 1);
        assert_eq!(p.get(1), Some(Side::F));
        let mut p = PartialPartition::uncoloured(3);
        p.set(0, Side::F);
        extend_low_degree(&g, &mut p, 1);
        assert_eq!(p.get(1), Some(Side::I));
    }

    #[test]
    fn two_small_cases() {
        // path 1 - 0 - 2, with 2 also adjacent to 3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let colour = |a, b, c| {
            let mut p = PartialPartition::uncoloured(4);
            p.set(1, a);
            p.set(2, b);
            p.set(3, c);
            extend_two_small(&g, &mut p, 0).unwrap();
            p
        };
        assert_eq!(colour(Side::F, Side::F, Side::I).get(0), Some(Side::I));
        assert_eq!(colour(Side::I, Side::I, Side::F).get(0), Some(Side::F));
        let p = colour(Side::I, Side::F, Side::F);
        assert_eq!((p.get(2), p.get(0)), (Some(Side::I), Some(Side::F)));
        let p = colour(Side::I, Side::F, Side::I);
        assert_eq!((p.get(2), p.get(0)), (Some(Side::F), Some(Side::F)));
    }

    #[test]
    fn nobud_single_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut p = PartialPartition::uncoloured(4);
        for v in 1..4 {
            p.set(v, Side::F);
        }
        extend_nobud(&g, &mut p, &[0]);
        assert_eq!(p.get(0), Some(Side::I));
        p.set(1, Side::I);
        extend_nobud(&g, &mut p, &[0]);
        assert_eq!(p.get(0), Some(Side::F));
    }

    #[test]
    fn solve_examples() {
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let r = solve(&tree, &params((2, 1), 0, Theorem::T1));
        let SolveOutcome::Partition(p) = r.outcome else { panic!("{:?}", r.outcome) };
        assert!(verify_ifd(&tree, &p, 0).unwrap().valid);

        let c5 = generate(&GeneratorSpec::Cycle(5)).unwrap();
        let r = solve(&c5, &params((5, 2), 2, Theorem::T1));
        let SolveOutcome::Partition(p) = r.outcome else { panic!("{:?}", r.outcome) };
        assert!(verify_ifd(&c5, &p, 2).unwrap().valid);

        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        let r = solve(&k4, &params((14, 5), 8, Theorem::T1));
        let SolveOutcome::PreconditionViolated(w) = r.outcome else { panic!("{:?}", r.outcome) };
        assert_eq!(w.value, Rational::from(3i64));
        assert_eq!(w.subset, vec![0, 1, 2, 3]);
    }

    #[test]
    fn kroot_reduction_on_spider() {
        // hub 0 with four leaf sons leading into a 4-cycle of 3-vertices, d = 2
        let mut e = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 8)];
        e.extend([(5, 6), (6, 7), (7, 8), (5, 8)]);
        let g = Graph::from_edges(9, &e).unwrap();
        let p = params((5, 2), 2, Theorem::T1);
        let c = find_config(&g, &p).unwrap().unwrap();
        assert_eq!(c.kind(), ConfigKind::KRoot);
        let r = solve(&g, &p);
        assert_eq!(r.trace[0].kind, ConfigKind::KRoot);
        let SolveOutcome::Partition(part) = r.outcome else { panic!("{:?}", r.outcome) };
        assert!(verify_ifd(&g, &part, 2).unwrap().valid);
    }

    #[test]
    fn hat_dense_on_paired_hubs() {
        // two adjacent degree-5 hubs, each with two pairs of adjacent leaves
        let e = [
            (0, 5),
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (3, 4),
            (5, 6),
            (5, 7),
            (5, 8),
            (5, 9),
            (6, 7),
            (8, 9),
        ];
        let g = Graph::from_edges(10, &e).unwrap();
        let p = params((8, 3), 3, Theorem::T2);
        let c = find_config(&g, &p).unwrap().unwrap();
        assert_eq!(c.kind(), ConfigKind::HatDense);
        let r = solve(&g, &p);
        let SolveOutcome::Partition(part) = r.outcome else { panic!("{:?}", r.outcome) };
        assert!(verify_ifd(&g, &part, 3).unwrap().valid);
    }
}
