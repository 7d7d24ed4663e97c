//! Exhaustive reference implementations, written independently of the
//! library algorithms. Only meant for tiny graphs.

#![allow(dead_code)]

use ifd_core::partition::Side;
use ifd_core::{Graph, Rational};

/// Largest `2|E(S)|/|S|` over all non-empty vertex subsets.
pub fn mad(g: &Graph) -> Rational {
    let n = g.n();
    assert!(n <= 20);
    let edges = g.edges();
    let mut best = (0usize, 1usize);
    for mask in 1u32..(1 << n) {
        let s = mask.count_ones() as usize;
        let e = edges.iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count();
        if 2 * e * best.1 > best.0 * s {
            best = (2 * e, s);
        }
    }
    Rational::new(best.0 as i64, best.1 as i64)
}

/// Some orientation meets every out-degree demand.
pub fn orientable(g: &Graph, omega: &[usize]) -> bool {
    let edges = g.edges();
    assert!(edges.len() <= 20);
    (0u32..1 << edges.len()).any(|mask| {
        let mut out = vec![0usize; g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            out[if mask >> i & 1 == 1 { u } else { v }] += 1;
        }
        out.iter().zip(omega).all(|(o, w)| o >= w)
    })
}

/// Every vertex set carries at most as much demand as it has incident edges.
pub fn hall(g: &Graph, omega: &[usize]) -> bool {
    let edges = g.edges();
    (0u32..1 << g.n()).all(|mask| {
        let demand: usize = (0..g.n()).filter(|&v| mask >> v & 1 == 1).map(|v| omega[v]).sum();
        let incident = edges.iter().filter(|&&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1).count();
        demand <= incident
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// The vertices selected by `keep` induce a forest.
pub fn acyclic(g: &Graph, keep: &[bool]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for (u, v) in g.edges() {
        if keep[u] && keep[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

fn independent_and_bounded(g: &Graph, sides: &[Side], d: usize) -> bool {
    g.edges().iter().all(|&(u, v)| sides[u] == Side::F || sides[v] == Side::F)
        && g.vertices()
            .filter(|&v| sides[v] == Side::F)
            .all(|v| g.neighbors(v).iter().filter(|&&w| sides[w] == Side::F).count() <= d)
}

/// `I` independent and `G[F]` a forest of maximum degree at most `d`.
pub fn is_ifd(g: &Graph, sides: &[Side], d: usize) -> bool {
    let in_f: Vec<bool> = sides.iter().map(|&s| s == Side::F).collect();
    independent_and_bounded(g, sides, d) && acyclic(g, &in_f)
}

/// Like [`is_ifd`] but cycles of `G[F]` are allowed when they pass a vertex
/// of degree 2 in `G`: the `F` vertices of other degrees must be acyclic.
pub fn is_good(g: &Graph, sides: &[Side], d: usize) -> bool {
    let keep: Vec<bool> = g.vertices().map(|v| sides[v] == Side::F && g.degree(v) != 2).collect();
    independent_and_bounded(g, sides, d) && acyclic(g, &keep)
}

fn sides_of(mask: u32, n: usize) -> Vec<Side> {
    (0..n).map(|v| if mask >> v & 1 == 1 { Side::I } else { Side::F }).collect()
}

/// Whether any of the `2^n` splits is an `(I, F_d)`-partition.
pub fn exists_ifd(g: &Graph, d: usize) -> bool {
    assert!(g.n() <= 20);
    (0u32..1 << g.n()).any(|mask| is_ifd(g, &sides_of(mask, g.n()), d))
}

/// Shortest cycle length by trying every edge as the closing edge.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best = None;
    for (u, v) in g.edges() {
        // BFS from u to v avoiding the edge uv
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b: usize| b.min(len)));
        }
    }
    best
}

/// All simple graphs on `n` labelled vertices whose degrees are
/// non-increasing in vertex order. Every isomorphism class appears.
pub fn graphs_sorted_degrees(n: usize, max_edges: usize, mut f: impl FnMut(&Graph)) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() <= 30);
    let mut chosen = Vec::new();
    let mut deg = vec![0usize; n];
    fn rec(
        i: usize,
        pairs: &[(usize, usize)],
        max_edges: usize,
        chosen: &mut Vec<(usize, usize)>,
        deg: &mut Vec<usize>,
        n: usize,
        f: &mut dyn FnMut(&Graph),
    ) {
        if i == pairs.len() {
            if deg.windows(2).all(|w| w[0] >= w[1]) {
                f(&Graph::from_edges(n, chosen).unwrap());
            }
            return;
        }
        // once every pair at vertex u is decided, u's degree is final and
        // must not be below the degree of u + 1 so far
        let (u, _) = pairs[i];
        if i > 0 && pairs[i - 1].0 != u {
            let done = pairs[i - 1].0;
            if done + 1 < n && deg[done] < deg[done + 1] {
                return;
            }
        }
        rec(i + 1, pairs, max_edges, chosen, deg, n, f);
        if chosen.len() < max_edges {
            let (a, b) = pairs[i];
            chosen.push((a, b));
            deg[a] += 1;
            deg[b] += 1;
            rec(i + 1, pairs, max_edges, chosen, deg, n, f);
            deg[a] -= 1;
            deg[b] -= 1;
            chosen.pop();
        }
    }
    rec(0, &pairs, max_edges, &mut chosen, &mut deg, n, &mut f);
}
