//! Exhaustive backtracking search for `(I, F_d)`-partitions of small
//! graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::dsu::Dsu;
use crate::graph::{Graph, VertexId};
use crate::partition::{Partition, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    /// Only enforced with the `std` feature.
    pub max_millis: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            max_millis: 60_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(Partition),
    NoneExists,
    BudgetExhausted,
}

/// Vertices in reverse of the order obtained by repeatedly removing a
/// minimum-degree vertex (lowest id on ties).
pub fn degeneracy_order(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !gone[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        gone[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    order: Vec<VertexId>,
    side: Vec<Option<Side>>,
    f_deg: Vec<usize>,
    dsu: Dsu,
    nodes: u64,
    budget: SearchBudget,
    #[cfg(feature = "std")]
    start: std::time::Instant,
}

enum Step {
    Found,
    Exhausted,
    Dead,
}

impl Search<'_> {
    fn out_of_budget(&self) -> bool {
        if self.nodes > self.budget.max_nodes {
            return true;
        }
        #[cfg(feature = "std")]
        if self.nodes.is_multiple_of(1024)
            && self.start.elapsed().as_millis() > u128::from(self.budget.max_millis)
        {
            return true;
        }
        false
    }

    fn run(&mut self, i: usize) -> Step {
        if i == self.order.len() {
            return Step::Found;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return Step::Exhausted;
        }
        let v = self.order[i];
        let g = self.g;

        if !g.neighbors(v).iter().any(|&w| self.side[w] == Some(Side::I)) {
            self.side[v] = Some(Side::I);
            match self.run(i + 1) {
                Step::Dead => {}
                other => return other,
            }
            self.side[v] = None;
        }

        let f_nb: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.side[w] == Some(Side::F))
            .collect();
        if f_nb.len() > self.d || f_nb.iter().any(|&w| self.f_deg[w] + 1 > self.d) {
            return Step::Dead;
        }
        let mark = self.dsu.checkpoint();
        if !f_nb.iter().all(|&w| self.dsu.union(v, w)) {
            self.dsu.rollback(mark);
            return Step::Dead;
        }
        self.side[v] = Some(Side::F);
        self.f_deg[v] = f_nb.len();
        for &w in &f_nb {
            self.f_deg[w] += 1;
        }
        let r = self.run(i + 1);
        if matches!(r, Step::Dead) {
            for &w in &f_nb {
                self.f_deg[w] -= 1;
            }
            self.f_deg[v] = 0;
            self.side[v] = None;
            self.dsu.rollback(mark);
        }
        r
    }
}

/// Searches for an `(I, F_d)`-partition. `NoneExists` is only returned
/// after the whole search space has been refuted.
pub fn oracle_find(g: &Graph, d: usize, budget: SearchBudget) -> OracleOutcome {
    let mut s = Search {
        g,
        d,
        order: degeneracy_order(g),
        side: vec![None; g.n()],
        f_deg: vec![0; g.n()],
        dsu: Dsu::new(g.n()),
        nodes: 0,
        budget,
        #[cfg(feature = "std")]
        start: std::time::Instant::now(),
    };
    match s.run(0) {
        Step::Found => OracleOutcome::Found(Partition::new(
            s.side.into_iter().map(|x| x.expect("all assigned")).collect(),
        )),
        Step::Dead => OracleOutcome::NoneExists,
        Step::Exhausted => OracleOutcome::BudgetExhausted,
    }
}
