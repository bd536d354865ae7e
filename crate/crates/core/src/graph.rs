//! Simple undirected graphs on indexed vertices with adjacency bitsets.
//!
//! This is the common currency between the geometry and the solvers: diameter
//! graphs, orthogonality graphs, and far graphs all land here.

use fixedbitset::FixedBitSet;
use serde::Serialize;

/// Undirected, irreflexive graph. Adjacency is symmetric by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adj(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Graph induced by relabeling vertex i as perm[i].
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Degeneracy and a vertex order witnessing it (repeatedly remove a
    /// minimum-degree vertex, smallest index on ties).
    pub fn degeneracy(&self) -> usize {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = FixedBitSet::with_capacity(self.n);
        alive.insert_range(..);
        let mut best = 0;
        for _ in 0..self.n {
            let v = alive
                .ones()
                .min_by_key(|&v| (deg[v], v))
                .expect("nonempty");
            best = best.max(deg[v]);
            alive.remove(v);
            for u in self.adj[v].ones() {
                if alive.contains(u) {
                    deg[u] -= 1;
                }
            }
        }
        best
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The Petersen graph: outer 5-cycle, inner 5-star, spokes.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }
}

/// Stable summary used in reports.
#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        let degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            min_degree: degs.iter().copied().min().unwrap_or(0),
            max_degree: degs.iter().copied().max().unwrap_or(0),
        }
    }
}
