//! Dinic maximum flow with integral capacities. Backs the densest-subgraph
//! test and the orientation feasibility check.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

pub type Cap = i128;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: Cap,
    rev: usize,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to an arc added with [`FlowNetwork::add_arc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcId {
    from: usize,
    idx: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: Cap) -> ArcId {
        let idx = self.arcs[from].len();
        let rev = self.arcs[to].len() + usize::from(from == to);
        self.arcs[from].push(Arc { to, cap, rev });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: idx,
        });
        ArcId { from, idx }
    }

    /// Flow currently routed through `arc` (the residual of its reverse).
    pub fn flow(&self, arc: ArcId) -> Cap {
        let a = &self.arcs[arc.from][arc.idx];
        self.arcs[a.to][a.rev].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: Cap) -> Cap {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.arcs[u].len() {
            let i = self.iter[u];
            let (to, cap) = (self.arcs[u][i].to, self.arcs[u][i].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[u][i].cap -= d;
                    let rev = self.arcs[u][i].rev;
                    self.arcs[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> Cap {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, Cap::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network: the source side of
    /// a minimum cut once [`max_flow`](Self::max_flow) has run.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}
