//! Exclusivity graphs: simple undirected graphs over dense 0-based vertex
//! indices, with the constructions the correlation analyses are built on.

mod catalog;
mod edge_list;
mod graph6;
mod iso;
mod random;

pub use catalog::{all_graphs_up_to_iso, named_graph};
pub use edge_list::parse_edge_list;
pub use graph6::{parse_graph6, to_graph6};
pub use iso::{is_isomorphic, is_self_complementary, MAX_ISO_VERTICES};
pub use random::{random_bipartite, random_chordal, random_gnp};

use crate::bitset::BitSet;
use thiserror::Error;

/// Largest vertex count accepted for a disjunctive product.
pub const MAX_PRODUCT_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("product of {0} x {1} vertices exceeds the cap of {MAX_PRODUCT_VERTICES}")]
    ProductTooLarge(usize, usize),
    #[error("isomorphism test limited to {MAX_ISO_VERTICES} vertices, got {0}")]
    TooLargeForIsomorphism(usize),
    #[error("unknown catalog graph '{0}'")]
    UnknownName(String),
}

/// Simple undirected graph stored as a symmetric bit matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    rows: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            rows: vec![BitSet::new(n); n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for v in [i, j] {
            if v >= n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        self.rows[i].insert(j);
        self.rows[j].insert(i);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..n {
            for j in self.rows[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let full = BitSet::full(n);
        let rows = (0..n)
            .map(|i| {
                let mut r = full.difference(&self.rows[i]);
                r.remove(i);
                r
            })
            .collect();
        Graph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph {
            rows: vec![BitSet::new(keep.len()); keep.len()],
            labels: None,
        };
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.adjacent(i, j) {
                    g.rows[a].insert(b);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph {
            rows: vec![BitSet::new(n); n],
            labels: None,
        };
        for (i, j) in self.edges() {
            g.rows[perm[i]].insert(perm[j]);
            g.rows[perm[j]].insert(perm[i]);
        }
        g
    }
}

/// Index map between vertex pairs of two factors and vertices of their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndexMap {
    left: usize,
    right: usize,
}

impl ProductIndexMap {
    pub fn new(left: usize, right: usize) -> Self {
        ProductIndexMap { left, right }
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left && j < self.right);
        i * self.right + j
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.right, idx % self.right)
    }
}

/// `(i, j) ~ (k, l)` iff `i ~ k` in `g` or `j ~ l` in `h`.
pub fn disjunctive_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndexMap), GraphError> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if ng * nh > MAX_PRODUCT_VERTICES {
        return Err(GraphError::ProductTooLarge(ng, nh));
    }
    let map = ProductIndexMap::new(ng, nh);
    let n = map.len();
    let mut rows = vec![BitSet::new(n); n];
    for a in 0..n {
        let (i, j) = map.pair(a);
        for b in 0..n {
            let (k, l) = map.pair(b);
            if a != b && (g.adjacent(i, k) || h.adjacent(j, l)) {
                rows[a].insert(b);
            }
        }
    }
    Ok((Graph { rows, labels: None }, map))
}
