//! Simple undirected graphs on bitset rows, and their triangle-degrees.

use crate::bits::{Row, MAX_VERTICES};
use crate::error::{GraphError, IdentityError};

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency holds the neighbours of `v`. Rows are kept
/// symmetric and irreflexive by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Row>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![Row::EMPTY; n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from 0-based edges. Self loops are rejected; repeated
    /// edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::LabelOutOfRange {
                    line: 0,
                    label: u.max(v) + 1,
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u + 1));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Row::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &Row {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> u32 {
        self.adj[u].intersection_len(&self.adj[v])
    }

    /// Inserts `uv`. The caller guarantees `u != v` and both are in range.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// The common degree if the graph is regular. The graph on zero
    /// vertices is reported as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Row::len);
        self.adj.iter().all(|row| row.len() == r).then_some(r)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    pub fn complement(&self) -> Graph {
        let full = Row::full(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = full.and_not(row);
                c.remove(v);
                c
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Per-vertex triangle counts, via one row intersection per edge.
    pub fn triangle_profile(&self) -> TriangleProfile {
        // Each triangle at v is seen twice, once from each other corner.
        let t = (0..self.n)
            .map(|v| {
                let nv = &self.adj[v];
                nv.iter()
                    .map(|u| self.adj[u].intersection_len(nv))
                    .sum::<u32>()
                    / 2
            })
            .collect();
        TriangleProfile(t)
    }

    /// Checks the symmetry and irreflexivity invariants.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v]
                    .iter()
                    .all(|u| u < self.n && self.adj[u].contains(v))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Free-function form of [`Graph::triangle_profile`].
pub fn triangle_degrees(g: &Graph) -> TriangleProfile {
    g.triangle_profile()
}

/// Triangle-degrees `t[v]`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleProfile(pub(crate) Vec<u32>);

impl TriangleProfile {
    pub fn new(values: Vec<u32>) -> Self {
        TriangleProfile(values)
    }

    #[inline]
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Values ordered `t1 >= t2 >= ... >= tn`.
    pub fn sorted_desc(&self) -> Vec<u32> {
        let mut s = self.0.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Total number of triangles in the graph.
    pub fn triangle_count(&self) -> u64 {
        self.0.iter().map(|&t| u64::from(t)).sum::<u64>() / 3
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl std::ops::Index<usize> for TriangleProfile {
    type Output = u32;
    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Triangle-degree of a vertex in the complement of an `r`-regular graph on
/// `n` vertices, given its triangle-degree `t` in the graph itself:
/// `C(n-1, 2) - 3r(n-r-1)/2 - t`.
pub fn complement_triangle_degree(n: usize, r: usize, t: u64) -> Result<u64, IdentityError> {
    let (nn, rr) = (n as u64, r as u64);
    let cross = 3 * rr * (nn.saturating_sub(rr + 1));
    if !cross.is_multiple_of(2) {
        return Err(IdentityError::NonIntegerResult { n, r });
    }
    choose2(nn.saturating_sub(1))
        .checked_sub(cross / 2)
        .and_then(|x| x.checked_sub(t))
        .ok_or(IdentityError::NegativeResult { n, r, t })
}
