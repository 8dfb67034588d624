use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    /// Same-index vertices are identified; vertex set `0..max(n1, n2)`.
    Union,
    /// Vertex set `0..min(n1, n2)`, edges present in both.
    Intersection,
    /// Disjoint union; the second graph is relabeled after the first.
    Sum,
    /// Disjoint union plus every edge between the two vertex sets.
    Join,
    /// Vertex `(a, b)` is `a * n2 + b`.
    CartesianProduct,
}

pub fn combine(kind: Combine, g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let multi = g1.allows_multi() || g2.allows_multi() || g1.allows_loops() || g2.allows_loops();
    let build = |n: usize, edges: Vec<(usize, usize)>| {
        if multi {
            Graph::multigraph(n, edges)
        } else {
            Graph::from_edges(n, edges)
        }
    };
    match kind {
        Combine::Union => {
            let mut edges = g1.edges().to_vec();
            let mut remaining: Vec<(usize, usize)> = g1.edges().to_vec();
            for &e in g2.edges() {
                if let Some(pos) = remaining.iter().position(|&x| x == e) {
                    remaining.swap_remove(pos);
                } else {
                    edges.push(e);
                }
            }
            build(n1.max(n2), edges)
        }
        Combine::Intersection => {
            if n1.min(n2) == 0 {
                return Err(Error::domain("intersection needs overlapping vertex sets"));
            }
            let mut remaining = g2.edges().to_vec();
            let mut edges = Vec::new();
            for &e in g1.edges() {
                if let Some(pos) = remaining.iter().position(|&x| x == e) {
                    remaining.swap_remove(pos);
                    edges.push(e);
                }
            }
            build(n1.min(n2), edges)
        }
        Combine::Sum | Combine::Join => {
            let mut edges = g1.edges().to_vec();
            edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
            if kind == Combine::Join {
                edges.extend((0..n1).flat_map(|u| (0..n2).map(move |v| (u, v + n1))));
            }
            build(n1 + n2, edges)
        }
        Combine::CartesianProduct => {
            let mut edges = Vec::new();
            for a in 0..n1 {
                for &(u, v) in g2.edges() {
                    edges.push((a * n2 + u, a * n2 + v));
                }
            }
            for &(u, v) in g1.edges() {
                for b in 0..n2 {
                    edges.push((u * n2 + b, v * n2 + b));
                }
            }
            build(n1 * n2, edges)
        }
    }
}

pub fn complement(g: &Graph) -> Result<Graph> {
    g.require_simple("complement")?;
    let n = g.vertex_count();
    let adj = g.adjacency_matrix();
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !adj[u][v]))
}

/// Vertex `i` of the line graph is edge `i` of `g`; two vertices are
/// adjacent when the edges share an endpoint (parallel edges share two but
/// still give one line-graph edge).
pub fn line_graph(g: &Graph) -> Result<Graph> {
    g.require_loopless("line graph")?;
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EditOp {
    /// Remaining vertices keep their relative order and are renumbered.
    DeleteVertices(Vec<usize>),
    /// Edge indices into [`Graph::edges`].
    DeleteEdges(Vec<usize>),
    /// Identifies the endpoints of the edge (the merged vertex takes the
    /// smaller label); other edges between them become loops and edges to
    /// common neighbours become parallel.
    ContractEdge(usize),
}

pub fn edit(g: &Graph, op: &EditOp) -> Result<Graph> {
    let n = g.vertex_count();
    match op {
        EditOp::DeleteVertices(vertices) => {
            let doomed: BTreeSet<usize> = vertices.iter().copied().collect();
            if let Some(&v) = doomed.iter().find(|&&v| v >= n) {
                return Err(Error::NotFound(format!("vertex {v}")));
            }
            let mut relabel = vec![usize::MAX; n];
            let mut next = 0;
            for (v, slot) in relabel.iter_mut().enumerate() {
                if !doomed.contains(&v) {
                    *slot = next;
                    next += 1;
                }
            }
            let edges = g
                .edges()
                .iter()
                .filter(|(u, v)| !doomed.contains(u) && !doomed.contains(v))
                .map(|&(u, v)| (relabel[u], relabel[v]));
            Graph::build_like(g, next, edges)
        }
        EditOp::DeleteEdges(indices) => {
            let doomed: BTreeSet<usize> = indices.iter().copied().collect();
            if let Some(&e) = doomed.iter().find(|&&e| e >= g.edge_count()) {
                return Err(Error::NotFound(format!("edge {e}")));
            }
            let edges = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| !doomed.contains(i))
                .map(|(_, &e)| e);
            Graph::build_like(g, n, edges)
        }
        EditOp::ContractEdge(index) => {
            let &(keep, gone) = g
                .edges()
                .get(*index)
                .ok_or_else(|| Error::NotFound(format!("edge {index}")))?;
            if keep == gone {
                return Err(Error::domain("cannot contract a loop"));
            }
            let map = |v: usize| {
                let v = if v == gone { keep } else { v };
                if v > gone {
                    v - 1
                } else {
                    v
                }
            };
            let edges: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != *index)
                .map(|(_, &(u, v))| (map(u), map(v)))
                .collect();
            Graph::multigraph(n - 1, edges)
        }
    }
}

impl Graph {
    fn build_like(template: &Graph, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::multigraph(n, edges)?;
        g.allow_multi = template.allow_multi;
        g.allow_loops = template.allow_loops;
        Ok(g)
    }
}
