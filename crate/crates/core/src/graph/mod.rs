//! Classical graphs and their invariants.
//!
//! Vertices are the indices `0..vertex_count`. Edges are unordered pairs
//! stored with the smaller endpoint first; an edge is identified by its
//! position in [`Graph::edges`]. Public constructors build simple graphs;
//! loops and parallel edges only appear through [`Graph::multigraph`] or
//! edge contraction.

mod color;
mod digraph;
mod edit;
mod generate;
mod io;
mod metrics;
mod polynomial;
mod structure;
mod tours;
mod trees;
mod tutte;

pub use color::{chromatic_polynomial, MAX_POLYNOMIAL_EDGES, coloring, edge_coloring, vertex_coloring, ColoringReport, EdgeColoring, VertexColoring};
pub use digraph::Digraph;
pub use edit::{combine, complement, edit, line_graph, Combine, EditOp};
pub use generate::{generate, Family};
pub use metrics::{metrics, Metrics};
pub(crate) use generate::petersen_edges;
pub(crate) use metrics::bfs_distances;
pub use polynomial::Polynomial;
pub use structure::{connectivity, degree_report, is_bipartite, Bipartiteness, Connectivity, DegreeReport};
pub use tours::{closure, closure_by_order, eulerian, hamiltonian, EulerReport, HamiltonReport};
pub use trees::spanning_tree_count;
pub use tutte::{has_perfect_matching, tutte, tutte_matrix, BRUTE_FORCE_LIMIT, TUTTE_PRIME, TutteConfig, TutteEntry, TutteReport};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive searches (Hamiltonicity,
/// vertex coloring, longest cycle).
pub const MAX_EXACT_VERTICES: usize = 14;
/// Largest edge count accepted by exhaustive edge coloring.
pub const MAX_EXACT_EDGES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    allow_multi: bool,
    allow_loops: bool,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            allow_multi: false,
            allow_loops: false,
        }
    }

    /// Simple graph; rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::build(vertex_count, edges, false, false)
    }

    /// Graph that may carry loops and parallel edges.
    pub fn multigraph(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::build(vertex_count, edges, true, true)
    }

    fn build(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        allow_multi: bool,
        allow_loops: bool,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v && !allow_loops {
                return Err(Error::domain(format!("loop at vertex {u} in a simple graph")));
            }
            let e = ordered(u, v);
            if !seen.insert(e) && !allow_multi {
                return Err(Error::domain(format!("duplicate edge ({u}, {v}) in a simple graph")));
            }
            list.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            allow_multi,
            allow_loops,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn allows_multi(&self) -> bool {
        self.allow_multi
    }

    pub fn allows_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().any(|e| !seen.insert(*e))
    }

    /// True when the graph currently has no loops and no parallel edges,
    /// whatever its flags allow.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = ordered(u, v);
        self.edges.contains(&e)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = ordered(u, v);
        self.edges.iter().position(|&x| x == e)
    }

    /// Neighbour lists; a loop contributes its vertex twice, parallel edges
    /// contribute once per copy.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Boolean adjacency matrix of the underlying simple graph (loops and
    /// multiplicity dropped).
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.vertex_count]; self.vertex_count];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        adj
    }

    /// The simple graph obtained by dropping loops and merging parallel edges.
    pub fn underlying_simple(&self) -> Graph {
        let set: BTreeSet<_> = self.edges.iter().copied().filter(|&(u, v)| u != v).collect();
        Graph {
            vertex_count: self.vertex_count,
            edges: set.into_iter().collect(),
            allow_multi: false,
            allow_loops: false,
        }
    }

    pub(crate) fn require_simple(&self, what: &str) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::domain(format!("{what} requires a simple graph")))
        }
    }

    pub(crate) fn require_loopless(&self, what: &str) -> Result<()> {
        if self.has_loops() {
            Err(Error::domain(format!("{what} requires a loopless graph")))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validation() {
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::multigraph(2, [(0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(g.has_loops() && g.has_parallel_edges() && !g.is_simple());
        assert_eq!(g.underlying_simple().edges(), &[(0, 1)]);
    }
}
