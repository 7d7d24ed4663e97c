//! Seeded corpus families, each gated to `mad < M` by peeling edges out of
//! dense witnesses.

use ifd_core::density::mad_exact;
use ifd_core::graph::{generate, GeneratorSpec};
use ifd_core::{Graph, Rational, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform random graph near the target density.
    Random,
    /// Dense random base with every edge replaced by a short path.
    Subdivided,
    /// Big hubs carrying leaf pairs, chains, buds and links to a sparse
    /// background of small vertices.
    Hubs,
    /// Hubs joined along a random tree, topped up with adjacent leaf pairs.
    Paired,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Random, Family::Subdivided, Family::Hubs, Family::Paired];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Subdivided => "subdivided",
            Family::Hubs => "hubs",
            Family::Paired => "paired",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Peel {
    /// Delete random edges of the densest witness.
    Remove,
    /// Subdivide random edges of the densest witness, preferring edges
    /// between 3⁺-vertices; falls back to deletion once `n_max` is reached
    /// or when subdividing cannot help (`bound <= 2`).
    Subdivide { n_max: usize },
}

/// Thins `g` until `mad < bound`, one densest witness at a time.
pub fn gate(g: &Graph, bound: &Rational, peel: Peel, rng: &mut impl Rng) -> Graph {
    let mut edges = g.edges();
    let mut n = g.n();
    let two = Rational::from(2i64);
    loop {
        let cur = Graph::from_edges(n, &edges).expect("thinning keeps the graph simple");
        let w = mad_exact(&cur).expect("non-empty graph");
        if w.value < *bound {
            return cur;
        }
        let mut inside = vec![false; n];
        for &v in &w.subset {
            inside[v] = true;
        }
        let mut within: Vec<usize> = (0..edges.len())
            .filter(|&i| inside[edges[i].0] && inside[edges[i].1])
            .collect();
        within.shuffle(rng);
        let subdivide = match peel {
            Peel::Subdivide { n_max } => *bound > two && n < n_max,
            Peel::Remove => false,
        };
        if subdivide {
            let pick = within
                .iter()
                .copied()
                .find(|&i| cur.degree(edges[i].0) >= 3 && cur.degree(edges[i].1) >= 3)
                .unwrap_or(within[0]);
            let (u, v) = edges[pick];
            edges[pick] = (u, n);
            edges.push((v, n));
            n += 1;
            continue;
        }
        // keep at most the largest edge count strictly below bound*|S|/2
        let half = bound.clone() * Rational::from(w.subset.len()) / two.clone();
        let keep = usize::try_from(half.ceil()).expect("small graph") - 1;
        let mut gone = vec![false; edges.len()];
        for &i in &within[..within.len() - keep] {
            gone[i] = true;
        }
        edges = edges
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| !gone[i])
            .map(|(_, e)| e)
            .collect();
    }
}

/// One corpus graph on at most `n_max` vertices with `mad < bound`,
/// determined by the arguments.
pub fn corpus_graph(family: Family, n_max: usize, bound: &Rational, d: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (raw, peel) = match family {
        Family::Random => (random_near(n_max, bound, &mut rng), Peel::Remove),
        Family::Subdivided => (subdivided(n_max, &mut rng), Peel::Subdivide { n_max }),
        Family::Hubs | Family::Paired => {
            let build = |rng: &mut ChaCha8Rng| match family {
                Family::Hubs => hubs(n_max, d, rng),
                _ => paired(n_max, d, rng),
            };
            let mut g = build(&mut rng);
            for _ in 0..30 {
                if mad_exact(&g).expect("non-empty graph").value < *bound {
                    break;
                }
                g = build(&mut rng);
            }
            (g, Peel::Subdivide { n_max })
        }
    };
    gate(&raw, bound, peel, &mut rng)
}

fn random_near(n_max: usize, bound: &Rational, rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2.min(n_max)..=n_max.max(2));
    let (p, q) = bound.to_i128_pair().expect("small bound");
    let target = (n as i128 * p / (2 * q)) as usize;
    let m = (target + rng.gen_range(0..=target / 4 + 1)).min(n * (n - 1) / 2);
    generate(&GeneratorSpec::Random { n, m, seed: rng.gen() }).expect("m within range")
}

fn subdivided(n_max: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n0 = rng.gen_range(4..=12usize);
    let m0 = rng.gen_range(n0..=n0 * (n0 - 1) / 2);
    let base = generate(&GeneratorSpec::Random { n: n0, m: m0, seed: rng.gen() }).expect("m within range");
    let mut b = Builder::new(n0);
    for (u, v) in base.edges() {
        let k = if b.n + 2 > n_max { 0 } else { rng.gen_range(0..=2) };
        b.path(u, v, k);
    }
    b.finish()
}

fn hubs(n_max: usize, d: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n_max = n_max.max(d + 12);
    let h = rng.gen_range(1..=5usize).min(n_max / (d + 8)).max(1);
    let mut b = Builder::new(h);
    // a cycle of small vertices, each later topped up to degree 3 by leaves
    let s = if d >= 2 { rng.gen_range(0..=6usize) } else { 0 };
    let pool: Vec<VertexId> = (0..s).map(|_| b.vertex()).collect();
    for i in 0..s {
        b.edge(pool[i], pool[(i + 1) % s]);
    }
    let mut deg = vec![0usize; s];
    for hub in 0..h {
        let mut spokes = rng.gen_range(d + 2..=d + 4);
        while spokes > 0 && b.n + 6 < n_max {
            let open: Vec<usize> = (0..s).filter(|&i| deg[i] == 0 || deg[i] + 2 < d + 1).collect();
            let mut kinds = vec![0, 0, 0];
            if d >= 2 {
                kinds.push(1);
            }
            if !open.is_empty() {
                kinds.push(2);
            }
            if h > 1 {
                kinds.extend([3, 4]);
            }
            match *kinds.choose(rng).unwrap() {
                // two adjacent 2-vertices hanging off the hub
                0 => {
                    let (x, y) = (b.vertex(), b.vertex());
                    b.edge(hub, x);
                    b.edge(hub, y);
                    b.edge(x, y);
                    spokes = spokes.saturating_sub(2);
                }
                // a small 3-vertex whose other neighbours are 2-vertices to hubs
                1 => {
                    let bud = b.vertex();
                    b.edge(hub, bud);
                    for _ in 0..2 {
                        b.path(bud, rng.gen_range(0..h), 1);
                    }
                    spokes -= 1;
                }
                // a leaf into the small cycle
                2 => {
                    let i = *open.choose(rng).unwrap();
                    deg[i] += 1;
                    b.path(hub, pool[i], 1);
                    spokes -= 1;
                }
                // an edge to another hub
                3 => {
                    let other = (hub + rng.gen_range(1..h)) % h;
                    b.edge(hub, other);
                    spokes -= 1;
                }
                // a 2-vertex to another hub
                _ => {
                    let other = (hub + rng.gen_range(1..h)) % h;
                    b.path(hub, other, 1);
                    spokes -= 1;
                }
            }
        }
    }
    for i in 0..s {
        if deg[i] == 0 {
            b.path(rng.gen_range(0..h), pool[i], 1);
        }
    }
    b.finish()
}

fn paired(n_max: usize, d: usize, rng: &mut ChaCha8Rng) -> Graph {
    let per_hub = d + 6;
    let h = rng.gen_range(2..=6usize).min(n_max / per_hub).max(1);
    let mut b = Builder::new(h);
    let mut deg = vec![0usize; h];
    for v in 1..h {
        let u = rng.gen_range(0..v);
        b.edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
    }
    for (hub, k) in deg.iter_mut().enumerate() {
        let target = rng.gen_range(d + 2..=d + 3);
        while *k < target {
            let (x, y) = (b.vertex(), b.vertex());
            b.edge(hub, x);
            b.edge(hub, y);
            b.edge(x, y);
            *k += 2;
        }
    }
    b.finish()
}

struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new() }
    }

    fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: VertexId, v: VertexId) {
        if u != v && !self.edges.contains(&(u.min(v), u.max(v))) {
            self.edges.push((u.min(v), u.max(v)));
        }
    }

    fn path(&mut self, u: VertexId, v: VertexId, inner: usize) {
        let mut prev = u;
        for _ in 0..inner {
            let x = self.vertex();
            self.edge(prev, x);
            prev = x;
        }
        self.edge(prev, v);
    }

    fn finish(self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("builder keeps edges simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_gated_and_deterministic() {
        let bound = Rational::new(8, 3);
        for f in Family::ALL {
            for seed in 0..20 {
                let g = corpus_graph(f, 60, &bound, 3, seed);
                assert!(g.n() <= 60);
                assert!(mad_exact(&g).unwrap().value < bound);
                assert_eq!(g, corpus_graph(f, 60, &bound, 3, seed));
            }
        }
    }
}
