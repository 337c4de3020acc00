//! Simple undirected graphs on the vertex set `0..n`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(x, y)` with `x < y`, sorted
/// lexicographically, so iteration order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y)));
        Self::from_sorted_unique(n, edges.collect())
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges
    /// and out-of-range endpoints. Pairs may be given in either order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if x == y {
                return Err(Error::Loop(x));
            }
            let e = (x.min(y), x.max(y));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_unique(n, set.into_iter().collect()))
    }

    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(x, y) in &edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Neighbours of `x` in increasing order.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.n && self.adj[x].binary_search(&y).is_ok()
    }

    /// Number of edges with at least one endpoint in `members`.
    pub fn edges_meeting(&self, members: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y)| members[x] || members[y])
            .count()
    }

    /// Connected components with at least one edge, each as a sorted
    /// vertex list, ordered by smallest vertex.
    pub fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] || self.adj[root].is_empty() {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.nontrivial_components().len() <= 1
            && (self.n <= 1 || self.adj.iter().all(|row| !row.is_empty()))
    }
}
