//! Simple undirected graphs on at most 64 vertices, stored as adjacency bit rows.

mod canon;
mod invariants;
mod matching;
mod named;
mod products;

pub use canon::{canonical_form, canonical_labeling, canonical_form_colored, CanonicalForm, Labeling};
pub use invariants::{four_path_closure, invariants, Invariants};
pub use matching::{add_perfect_matching, remove_perfect_matching};
pub use named::{cayley, named, GroupSpec, Named};
pub use products::{cartesian_product, lexicographic_product};

use std::fmt;

use crate::error::{Error, Result};
use crate::hadamard::{low_mask, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    Ok(())
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_size(n)?;
        let all = low_mask(n);
        Ok(Graph { n, adj: (0..n).map(|v| all & !(1 << v)).collect() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadIndex { index: u.max(v), order: n });
            }
            if u == v {
                return Err(Error::BadParams(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Rows must be symmetric with an empty diagonal.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_size(n)?;
        let mask = low_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::BadParams(format!("row {u} has bits beyond order {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::BadParams(format!("loop at vertex {u}")));
            }
            let mut bits = row;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::BadParams(format!("edge {u}-{v} is not symmetric")));
                }
                bits &= bits - 1;
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut bits = self.adj[u] & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some((u, v))
            })
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common degree, or `None` if the graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |r| r.count_ones() as usize);
        self.adj.iter().all(|r| r.count_ones() as usize == d).then_some(d)
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        Graph { n: self.n, adj: self.adj.iter().enumerate().map(|(v, r)| !r & all & !(1 << v)).collect() }
    }

    /// Vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                adj[pu] |= 1 << perm[v];
                bits &= bits - 1;
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let adj = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &v)| acc | (u64::from(self.has_edge(u, v)) << j))
            })
            .collect();
        Graph { n: vertices.len(), adj }
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        let entries = (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| {
                        if u == v {
                            self.degree(u) as i64
                        } else if self.has_edge(u, v) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        LaplacianMatrix { n: self.n, entries }
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_size(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == low_mask(self.n)
    }

    pub(crate) fn component_of(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                next |= self.adj[u];
                bits &= bits - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// `D - A` with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.entries[u][v]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}
