//! `(I, F)` vertex partitions, the two verifiers and the normalization loop
//! that turns a good d-partition into an `(I, F_d)`-partition.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::dsu::Dsu;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    I,
    F,
}

impl Side {
    pub fn as_char(self) -> char {
        match self {
            Side::I => 'I',
            Side::F => 'F',
        }
    }
}

/// Total assignment of every vertex to `I` or `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    sides: Vec<Side>,
}

impl Partition {
    pub fn new(sides: Vec<Side>) -> Self {
        Partition { sides }
    }

    /// `I` on the listed vertices, `F` elsewhere.
    pub fn with_independent(n: usize, i_set: &[VertexId]) -> Self {
        let mut sides = vec![Side::F; n];
        for &v in i_set {
            sides[v] = Side::I;
        }
        Partition { sides }
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    #[inline]
    pub fn side(&self, v: VertexId) -> Side {
        self.sides[v]
    }

    pub fn set(&mut self, v: VertexId, side: Side) {
        self.sides[v] = side;
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn i_set(&self) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.sides[v] == Side::I).collect()
    }

    pub fn f_set(&self) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.sides[v] == Side::F).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sides {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Partition under construction; `None` is the explicit uncoloured state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPartition {
    slots: Vec<Option<Side>>,
}

impl PartialPartition {
    pub fn uncoloured(n: usize) -> Self {
        PartialPartition {
            slots: vec![None; n],
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Option<Side> {
        self.slots[v]
    }

    #[inline]
    pub fn set(&mut self, v: VertexId, side: Side) {
        self.slots[v] = Some(side);
    }

    pub fn is_coloured(&self, v: VertexId) -> bool {
        self.slots[v].is_some()
    }

    pub fn coloured_set(&self) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.slots[v].is_some()).collect()
    }

    pub fn has_i_neighbor(&self, g: &Graph, v: VertexId) -> bool {
        g.neighbors(v).iter().any(|&w| self.slots[w] == Some(Side::I))
    }

    pub fn f_degree(&self, g: &Graph, v: VertexId) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.slots[w] == Some(Side::F))
            .count()
    }

    /// The total partition, if every vertex is coloured.
    pub fn to_total(&self) -> Option<Partition> {
        self.slots
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(Partition::new)
    }
}

impl From<&Partition> for PartialPartition {
    fn from(p: &Partition) -> Self {
        PartialPartition {
            slots: p.sides.iter().map(|&s| Some(s)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeInI(VertexId, VertexId),
    DegreeInF { vertex: VertexId, degree: usize },
    /// A cycle of `G[F]`, listed from its smallest vertex.
    CycleInF(Vec<VertexId>),
    /// A cycle of `G[F]` avoiding every vertex of degree 2 in `G`.
    BadCycleInF(Vec<VertexId>),
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::EdgeInI(..) => "EdgeInI",
            Violation::DegreeInF { .. } => "DegreeInF",
            Violation::CycleInF(_) => "CycleInF",
            Violation::BadCycleInF(_) => "BadCycleInF",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeInI(u, v) => write!(f, "EdgeInI {u} {v}"),
            Violation::DegreeInF { vertex, degree } => {
                write!(f, "DegreeInF {vertex} degree={degree}")
            }
            Violation::CycleInF(c) | Violation::BadCycleInF(c) => {
                write!(f, "{}", self.kind())?;
                for v in c {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerifyReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("SizeMismatch: graph has {graph} vertices, partition has {partition}")]
    SizeMismatch { graph: usize, partition: usize },
    #[error("NotGoodPartition: input is not a good d-partition")]
    NotGoodPartition,
    #[error("NormalizationStuck: F still contains a cycle after normalization")]
    NormalizationStuck,
}

fn check_len(g: &Graph, len: usize) -> Result<(), PartitionError> {
    if g.n() != len {
        return Err(PartitionError::SizeMismatch {
            graph: g.n(),
            partition: len,
        });
    }
    Ok(())
}

/// Rotates a cycle to start at its minimum and to continue towards the
/// smaller of that vertex's two cycle neighbours.
fn canonical_cycle(mut c: Vec<VertexId>) -> Vec<VertexId> {
    let pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
    c.rotate_left(pos);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// One cycle per edge that closes a cycle in `G[mask]`, scanning edges in
/// lexicographic order against the forest built so far.
fn cycles_in(g: &Graph, mask: &[bool]) -> Vec<Vec<VertexId>> {
    let mut dsu = Dsu::new(g.n());
    let mut forest: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if !(mask[u] && mask[v]) {
            continue;
        }
        if dsu.union(u, v) {
            forest[u].push(v);
            forest[v].push(u);
        } else {
            out.push(canonical_cycle(forest_path(&forest, v, u)));
        }
    }
    out
}

/// Path from `from` to `to` in a forest, both ends included.
fn forest_path(forest: &[Vec<VertexId>], from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut prev = vec![usize::MAX; forest.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &forest[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CycleRule {
    /// No cycles at all in `G[F]`.
    Acyclic,
    /// Cycles must meet a vertex of degree 2 in `G`.
    ThroughDegreeTwo,
}

fn check(g: &Graph, slot: impl Fn(VertexId) -> Option<Side>, d: usize, rule: CycleRule) -> VerifyReport {
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        if slot(u) == Some(Side::I) && slot(v) == Some(Side::I) {
            violations.push(Violation::EdgeInI(u, v));
        }
    }
    for v in g.vertices() {
        if slot(v) != Some(Side::F) {
            continue;
        }
        let degree = g
            .neighbors(v)
            .iter()
            .filter(|&&w| slot(w) == Some(Side::F))
            .count();
        if degree > d {
            violations.push(Violation::DegreeInF { vertex: v, degree });
        }
    }
    let mask: Vec<bool> = g
        .vertices()
        .map(|v| {
            slot(v) == Some(Side::F) && (rule == CycleRule::Acyclic || g.degree(v) != 2)
        })
        .collect();
    for c in cycles_in(g, &mask) {
        violations.push(match rule {
            CycleRule::Acyclic => Violation::CycleInF(c),
            CycleRule::ThroughDegreeTwo => Violation::BadCycleInF(c),
        });
    }
    VerifyReport::from_violations(violations)
}

/// Valid iff `G[I]` is edgeless, `G[F]` is a forest, and `Δ(G[F]) <= d`.
pub fn verify_ifd(g: &Graph, p: &Partition, d: usize) -> Result<VerifyReport, PartitionError> {
    check_len(g, p.len())?;
    Ok(check(g, |v| Some(p.side(v)), d, CycleRule::Acyclic))
}

/// Valid iff `G[I]` is edgeless, `Δ(G[F]) <= d`, and every cycle of `G[F]`
/// passes through a vertex of degree 2 in `G`.
pub fn verify_good(g: &Graph, p: &Partition, d: usize) -> Result<VerifyReport, PartitionError> {
    check_len(g, p.len())?;
    Ok(check(g, |v| Some(p.side(v)), d, CycleRule::ThroughDegreeTwo))
}

/// [`verify_good`] restricted to the coloured vertices of a partial partition.
pub fn verify_good_partial(
    g: &Graph,
    p: &PartialPartition,
    d: usize,
) -> Result<VerifyReport, PartitionError> {
    check_len(g, p.len())?;
    Ok(check(g, |v| p.get(v), d, CycleRule::ThroughDegreeTwo))
}

/// Moves every `F` vertex of degree 2 in `G` whose two neighbours are in `F`
/// over to `I`, lowest id first.
///
/// Eligibility only ever drops as vertices leave `F`, so one ascending pass
/// is the same as repeatedly taking the lowest eligible vertex.
pub fn normalize(g: &Graph, p: &Partition, d: usize) -> Result<Partition, PartitionError> {
    if !verify_good(g, p, d)?.valid {
        return Err(PartitionError::NotGoodPartition);
    }
    let mut out = p.clone();
    for v in g.vertices() {
        if out.side(v) == Side::F
            && g.degree(v) == 2
            && g.neighbors(v).iter().all(|&w| out.side(w) == Side::F)
        {
            out.set(v, Side::I);
        }
    }
    if !verify_ifd(g, &out, d)?.valid {
        return Err(PartitionError::NormalizationStuck);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};

    fn cycle(n: usize) -> Graph {
        generate(&GeneratorSpec::Cycle(n)).unwrap()
    }

    fn all_f(n: usize) -> Partition {
        Partition::new(vec![Side::F; n])
    }

    #[test]
    fn verify_ifd_examples() {
        let c4 = cycle(4);
        let p = Partition::with_independent(4, &[0, 2]);
        assert!(verify_ifd(&c4, &p, 1).unwrap().valid);

        let r = verify_ifd(&c4, &all_f(4), 2).unwrap();
        assert_eq!(r.violations, vec![Violation::CycleInF(vec![0, 1, 2, 3])]);

        let c3 = cycle(3);
        let r = verify_ifd(&c3, &Partition::with_independent(3, &[0]), 0).unwrap();
        assert!(!r.valid);
        assert_eq!(
            r.violations[0],
            Violation::DegreeInF {
                vertex: 1,
                degree: 1
            }
        );

        assert_eq!(
            verify_ifd(&c3, &all_f(2), 2),
            Err(PartitionError::SizeMismatch {
                graph: 3,
                partition: 2
            })
        );
    }

    #[test]
    fn verify_good_examples() {
        assert!(verify_good(&cycle(4), &all_f(4), 2).unwrap().valid);
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        let r = verify_good(&k4, &all_f(4), 3).unwrap();
        assert!(!r.valid);
        assert!(r
            .violations
            .iter()
            .all(|v| matches!(v, Violation::BadCycleInF(_))));
        let r = verify_good(&k4, &Partition::with_independent(4, &[0, 1]), 3).unwrap();
        assert_eq!(r.violations[0], Violation::EdgeInI(0, 1));
    }

    #[test]
    fn normalize_c4() {
        let out = normalize(&cycle(4), &all_f(4), 2).unwrap();
        assert_eq!(out, Partition::with_independent(4, &[0, 2]));
    }

    #[test]
    fn normalize_c6_with_pendant() {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.push((0, 6));
        let g = Graph::from_edges(7, &e).unwrap();
        // with the pendant in F too, vertex 0 would have F-degree 3 > d
        assert_eq!(normalize(&g, &all_f(7), 2), Err(PartitionError::NotGoodPartition));
        let p = Partition::with_independent(7, &[6]);
        let out = normalize(&g, &p, 2).unwrap();
        assert!(verify_ifd(&g, &out, 2).unwrap().valid);
        // vertex 0 has degree 3 and never moves
        assert_eq!(out.i_set(), vec![1, 3, 5, 6]);
    }

    #[test]
    fn normalize_rejects_bad_input_and_keeps_valid_input() {
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        assert_eq!(
            normalize(&k4, &all_f(4), 3),
            Err(PartitionError::NotGoodPartition)
        );
        let c4 = cycle(4);
        let p = Partition::with_independent(4, &[1, 3]);
        assert_eq!(normalize(&c4, &p, 1).unwrap(), p);
    }

    #[test]
    fn partial_verification_ignores_uncoloured() {
        let c4 = cycle(4);
        let mut pp = PartialPartition::uncoloured(4);
        pp.set(0, Side::I);
        pp.set(1, Side::F);
        assert!(verify_good_partial(&c4, &pp, 0).unwrap().valid);
        pp.set(3, Side::I);
        pp.set(2, Side::F);
        assert!(!verify_good_partial(&c4, &pp, 0).unwrap().valid);
        assert_eq!(pp.to_total().unwrap(), Partition::with_independent(4, &[0, 3]));
    }
}
