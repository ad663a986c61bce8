//! Finite directed graphs and walks over them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite directed graph without parallel edges. Self-loops are allowed.
pub trait Digraph {
    fn vertex_count(&self) -> usize;

    fn has_edge(&self, from: Vertex, to: Vertex) -> bool;

    /// Successors in increasing vertex order.
    fn successors(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.vertex_count()).filter(|&w| self.has_edge(v, w)).collect()
    }
}

/// Adjacency-matrix graph, used for small fixtures such as complete graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    adj: Vec<bool>,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Self {
        DenseGraph { n, adj: vec![false; n * n] }
    }

    /// `K_n`, optionally with a self-loop on every vertex.
    pub fn complete(n: usize, self_loops: bool) -> Self {
        let mut g = DenseGraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v || self_loops {
                    g.adj[u * n + v] = true;
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = DenseGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n {
            return Err(Error::BadVertex(u));
        }
        if v >= self.n {
            return Err(Error::BadVertex(v));
        }
        self.adj[u * self.n + v] = true;
        Ok(())
    }
}

impl Digraph for DenseGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, from: Vertex, to: Vertex) -> bool {
        from < self.n && to < self.n && self.adj[from * self.n + to]
    }
}

/// A non-empty vertex sequence with an edge between consecutive vertices.
/// Its length is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk(Vec<Vertex>);

impl Walk {
    pub fn new<G: Digraph + ?Sized>(g: &G, vertices: Vec<Vertex>) -> Result<Self> {
        check_walk(g, &vertices)?;
        Ok(Walk(vertices))
    }

    /// The empty walk `(v)`.
    pub fn single(v: Vertex) -> Self {
        Walk(vec![v])
    }

    /// Builds a walk without checking adjacency. Callers guarantee the
    /// sequence is a walk.
    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty());
        Walk(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn source(&self) -> Vertex {
        self.0[0]
    }

    pub fn target(&self) -> Vertex {
        *self.0.last().expect("walks are non-empty")
    }

    /// `self ⊙ other`; `None` unless `target(self) == source(other)`.
    pub fn connect(&self, other: &Walk) -> Option<Walk> {
        if self.target() != other.source() {
            return None;
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Some(Walk(v))
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.0.iter().copied().collect()
    }
}

pub(crate) fn check_walk<G: Digraph + ?Sized>(g: &G, vertices: &[Vertex]) -> Result<()> {
    if vertices.is_empty() {
        return Err(Error::EmptyWalk);
    }
    if let Some(&bad) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::BadVertex(bad));
    }
    for pair in vertices.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Error::NotAWalk { from: pair[0], to: pair[1] });
        }
    }
    Ok(())
}
