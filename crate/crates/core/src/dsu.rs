use alloc::vec::Vec;

/// Union-find with union by size and undo. No path compression, so `find`
/// is logarithmic and every union can be rolled back.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Returns `false` (and records a no-op) when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    pub fn rollback(&mut self, to: usize) {
        while self.history.len() > to {
            if let Some((ra, rb)) = self.history.pop().flatten() {
                self.parent[rb] = rb;
                self.size[ra] -= self.size[rb];
            }
        }
    }
}
