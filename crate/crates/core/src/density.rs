//! Exact rationals, maximum average degree, girth, and the `(M, d)`
//! threshold arithmetic of the two partition theorems.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::flow::{Cap, FlowNetwork};
use crate::graph::{Graph, VertexId};

/// Exact fraction, always reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn min(self, other: Rational) -> Rational {
        core::cmp::min(self, other)
    }

    pub fn max(self, other: Rational) -> Rational {
        core::cmp::max(self, other)
    }

    /// `(numerator, denominator)` as machine integers, when they fit.
    pub fn to_i128_pair(&self) -> Option<(i128, i128)> {
        Some((self.numer().to_i128()?, self.denom().to_i128()?))
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including integers (`3/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ParseError: not a fraction `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| err())?;
        let q: BigInt = q.parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> core::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("EmptyGraph: maximum average degree needs at least one vertex")]
    EmptyGraph,
}

/// A densest subgraph certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub value: Rational,
    pub subset: Vec<VertexId>,
}

/// `2 |E(G[S])| / |S|`; zero for the empty set.
pub fn density(g: &Graph, subset: &[VertexId]) -> Rational {
    if subset.is_empty() {
        return Rational::zero();
    }
    let mut mask = vec![false; g.n()];
    for &v in subset {
        mask[v] = true;
    }
    let e = g.edges_within(&mask);
    Rational::from(2 * e) / Rational::from(subset.len())
}

pub fn average_degree(g: &Graph) -> Option<Rational> {
    (g.n() > 0).then(|| Rational::from(2 * g.m()) / Rational::from(g.n()))
}

/// Some subset with density strictly greater than `threshold`, if one exists.
///
/// Maximises `sum_{e in E(S)} 2q - sum_{v in S} p` for `threshold = p/q` as a
/// closure problem: source -> edge node (2q), edge node -> endpoints
/// (unbounded), vertex -> sink (p).
pub fn denser_subset(g: &Graph, threshold: &Rational) -> Option<Vec<VertexId>> {
    if threshold.is_negative() {
        return (g.n() > 0).then(|| g.vertices().collect());
    }
    let (p, q) = threshold
        .to_i128_pair()
        .expect("density threshold exceeds 128-bit range");
    let edges = g.edges();
    let n = g.n();
    let source = n + edges.len();
    let sink = source + 1;
    let mut net = FlowNetwork::new(sink + 1);
    let unbounded: Cap = 2 * q * (edges.len() as Cap + 1);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let e = n + i;
        net.add_arc(source, e, 2 * q);
        net.add_arc(e, u, unbounded);
        net.add_arc(e, v, unbounded);
    }
    for v in 0..n {
        net.add_arc(v, sink, p);
    }
    let cut = net.max_flow(source, sink);
    if 2 * q * edges.len() as Cap - cut <= 0 {
        return None;
    }
    let side = net.source_side(source);
    let subset: Vec<_> = (0..n).filter(|&v| side[v]).collect();
    debug_assert!(!subset.is_empty());
    Some(subset)
}

/// Exact maximum average degree with a witness subset.
///
/// Bisects on the density with the flow test. The lower end always carries
/// an achieved density; once the bracket is narrower than `1/n^2` no other
/// admissible density (denominator at most `n`) fits, so the lower end is
/// the maximum.
pub fn mad_exact(g: &Graph) -> Result<DensityWitness, DensityError> {
    let n = g.n();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    let mut best: Vec<VertexId> = g.vertices().collect();
    let mut lo = density(g, &best);
    let mut hi = Rational::from(g.max_degree());
    let gap = Rational::new(1, 1) / Rational::from(n * n);
    let two = Rational::from_integer(2);
    while &hi - &lo >= gap {
        let mid = (&lo + &hi) / &two;
        match denser_subset(g, &mid) {
            Some(s) => {
                lo = density(g, &s);
                best = s;
            }
            None => hi = mid,
        }
    }
    Ok(DensityWitness {
        value: lo,
        subset: best,
    })
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Which degree thresholds the two theorems give for a strict bound `mad < B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub bound: Rational,
    pub d_thm1: Option<u64>,
    pub d_thm2: Option<u64>,
    pub d_min: Option<u64>,
}

fn least_integer_at_least(x: &Rational) -> u64 {
    let c = x.ceil();
    if c.is_negative() {
        0
    } else {
        c.to_u64().expect("threshold exceeds u64")
    }
}

/// Least `d` for each theorem under the hypothesis `mad < bound`.
pub fn thresholds(bound: &Rational) -> ThresholdReport {
    let three = Rational::from_integer(3);
    if *bound >= three || !(bound > &Rational::zero()) {
        return ThresholdReport {
            bound: bound.clone(),
            d_thm1: None,
            d_thm2: None,
            d_min: None,
        };
    }
    let two = Rational::from_integer(2);
    let eps = &three - bound;
    let d1 = least_integer_at_least(&(&two / &eps - &two));
    let m2 = bound.clone().max(Rational::new(8, 3));
    let d2 = least_integer_at_least(&(Rational::one() / (&three - &m2)));
    ThresholdReport {
        bound: bound.clone(),
        d_thm1: Some(d1),
        d_thm2: Some(d2),
        d_min: Some(d1.min(d2)),
    }
}

/// Planar graphs of girth at least `g` have `mad < 2g / (g - 2)`.
pub fn girth_bound(g: u64) -> Option<Rational> {
    (g >= 3).then(|| Rational::from_integer(2 * g as i64) / Rational::from_integer(g as i64 - 2))
}
