//! Simple undirected graphs on dense vertex indices.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Vertex index in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0}-{1} refers to a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("{family} needs at least {min}, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// A simple undirected graph.
///
/// Edges are stored as normalized pairs `(u, v)` with `u < v`, sorted
/// lexicographically; the position of an edge in that order is its edge index.
/// Connectivity is not required.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge iterator. Endpoint order is irrelevant;
    /// loops, repeated edges and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let e = normalize(a, b);
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of vertices plus number of edges.
    pub fn element_count(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Δ; zero for the graph without vertices.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ; zero for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in the sorted edge list.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&normalize(a, b)).ok()
    }

    /// Indices of the edges incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v]
            .iter()
            .map(move |&w| self.edge_index(v, w).expect("adjacency out of sync"))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Copy of the graph without edge `{a, b}`; vertex numbering is kept.
    pub fn without_edge(&self, a: Vertex, b: Vertex) -> Graph {
        let e = normalize(a, b);
        let edges = self.edges.iter().copied().filter(|&x| x != e).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Subgraph on the given edge indices; all vertices are kept.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = usize>) -> Graph {
        let mut edges: Vec<_> = keep.into_iter().map(|i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(self.n, edges)
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| normalize(perm[u], perm[v]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Orders an unordered pair as `(min, max)`.
pub fn normalize(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
