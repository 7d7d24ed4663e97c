#![allow(dead_code)]

use ifd_core::partition::Side;
use ifd_core::Graph;
use proptest::prelude::*;

/// Simple graph on `lo..=hi` vertices, each pair present with
/// probability `p`.
pub fn graph(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(p), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn sides(n: usize) -> impl Strategy<Value = Vec<Side>> {
    proptest::collection::vec(prop_oneof![Just(Side::I), Just(Side::F)], n)
}

pub fn graph_and_sides(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = (Graph, Vec<Side>)> {
    graph(lo, hi, p).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), sides(n))
    })
}

/// Hubs from a random base graph with every base edge subdivided, each hub
/// topped up with pendant triangles (two 2-vertices) and small 3-vertex
/// gadgets whose other two edges run back to the hub through 2-vertices.
pub fn hubby(seed: u64, d: usize) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let base = rng.gen_range(2..=7usize);
    let mut n = base;
    let mut edges = Vec::new();
    let add = |n: &mut usize| {
        *n += 1;
        *n - 1
    };
    for u in 0..base {
        for v in u + 1..base {
            if rng.gen_bool(0.5) {
                let x = add(&mut n);
                edges.push((u, x));
                edges.push((v, x));
            }
        }
    }
    for hub in 0..base {
        let target = d + 2 + rng.gen_range(0..3);
        let mut deg = edges.iter().filter(|&&(a, b)| a == hub || b == hub).count();
        while deg < target {
            match rng.gen_range(0..3) {
                0 => {
                    let (a, b) = (add(&mut n), add(&mut n));
                    edges.extend([(hub, a), (hub, b), (a, b)]);
                    deg += 2;
                }
                1 if d >= 2 => {
                    let (x, y, z) = (add(&mut n), add(&mut n), add(&mut n));
                    edges.extend([(hub, x), (x, y), (y, hub), (x, z), (z, hub)]);
                    deg += 3;
                }
                _ => {
                    let a = add(&mut n);
                    edges.extend([(hub, a)]);
                    let other = (hub + 1 + rng.gen_range(0..base)) % base;
                    if other != hub {
                        edges.push((a, other));
                    }
                    deg += 1;
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_edges(n, &edges).unwrap()
}
