use std::collections::{BTreeSet, HashMap};

use super::structure::component_labels;
use super::{Graph, Polynomial, MAX_EXACT_EDGES, MAX_EXACT_VERTICES};
use crate::error::{Error, Result};

/// Edge limit for the deletion-contraction recursion.
pub const MAX_POLYNOMIAL_EDGES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    pub chromatic_number: usize,
    /// Color of each vertex, in `0..chromatic_number`.
    pub colors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub chromatic_index: usize,
    /// Color of each edge by edge index.
    pub colors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    pub vertex: VertexColoring,
    pub edge: EdgeColoring,
}

pub fn coloring(g: &Graph) -> Result<ColoringReport> {
    Ok(ColoringReport {
        vertex: vertex_coloring(g)?,
        edge: edge_coloring(g)?,
    })
}

/// Exact minimum proper vertex coloring by backtracking.
pub fn vertex_coloring(g: &Graph) -> Result<VertexColoring> {
    g.require_loopless("vertex coloring")?;
    let n = g.vertex_count();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count for exact coloring",
            actual: n,
            limit: MAX_EXACT_VERTICES,
        });
    }
    let adj = g.adjacency_matrix();
    let neighbours: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| adj[u][v]).collect()).collect();
    let (chromatic_number, colors) = min_coloring(&neighbours);
    Ok(VertexColoring { chromatic_number, colors })
}

/// Exact minimum proper edge coloring by backtracking; parallel edges
/// conflict with each other.
pub fn edge_coloring(g: &Graph) -> Result<EdgeColoring> {
    g.require_loopless("edge coloring")?;
    let m = g.edge_count();
    if m > MAX_EXACT_EDGES {
        return Err(Error::TooLarge {
            what: "edge count for exact edge coloring",
            actual: m,
            limit: MAX_EXACT_EDGES,
        });
    }
    let edges = g.edges();
    let conflicts: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let (a, b) = edges[i];
            (0..m)
                .filter(|&j| {
                    let (c, d) = edges[j];
                    j != i && (a == c || a == d || b == c || b == d)
                })
                .collect()
        })
        .collect();
    let (chromatic_index, colors) = min_coloring(&conflicts);
    Ok(EdgeColoring { chromatic_index, colors })
}

/// Smallest `k` admitting a proper coloring of the conflict graph, with a
/// witness.
fn min_coloring(conflicts: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let n = conflicts.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(conflicts[v].len()));
    let lower = if conflicts.iter().any(|c| !c.is_empty()) { 2 } else { 1 };
    for k in lower..=n {
        let mut colors = vec![usize::MAX; n];
        if color_from(conflicts, &order, 0, k, 0, &mut colors) {
            return (k, colors);
        }
    }
    unreachable!("n colors always suffice")
}

fn color_from(conflicts: &[Vec<usize>], order: &[usize], at: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // A fresh color is tried only once, which removes color permutations.
    for c in 0..k.min(used + 1) {
        if conflicts[v].iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_from(conflicts, order, at + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// `f(G; λ)` by deletion minus contraction. Loops give the zero polynomial
/// and parallel edges are merged.
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial> {
    if g.has_loops() {
        return Ok(Polynomial::zero());
    }
    let simple = g.underlying_simple();
    if simple.edge_count() > MAX_POLYNOMIAL_EDGES {
        return Err(Error::TooLarge {
            what: "edge count for deletion-contraction",
            actual: simple.edge_count(),
            limit: MAX_POLYNOMIAL_EDGES,
        });
    }
    let edges: BTreeSet<(usize, usize)> = simple.edges().iter().copied().collect();
    let mut memo = HashMap::new();
    Ok(deletion_contraction(simple.vertex_count(), edges, &mut memo))
}

fn deletion_contraction(
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    memo: &mut HashMap<(usize, BTreeSet<(usize, usize)>), Polynomial>,
) -> Polynomial {
    if edges.is_empty() {
        return Polynomial::monomial(n);
    }
    if edges.len() == n * (n - 1) / 2 {
        return (0..n).fold(Polynomial::constant(1), |acc, k| &acc * &Polynomial::linear_root(k as i128));
    }
    let key = (n, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (n, edges) = key;
    let graph = Graph::from_edges(n, edges.iter().copied()).expect("edge set stays simple");
    let (_, components) = component_labels(&graph, None, None);
    let result = if edges.len() + components == n {
        // Forest: λ^c (λ-1)^m.
        &Polynomial::monomial(components) * &Polynomial::linear_root(1).pow(edges.len())
    } else {
        let &(u, v) = edges.iter().next_back().expect("nonempty");
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        let contracted: BTreeSet<(usize, usize)> = deleted
            .iter()
            .map(|&(a, b)| {
                let relabel = |x: usize| {
                    let x = if x == v { u } else { x };
                    if x > v {
                        x - 1
                    } else {
                        x
                    }
                };
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .collect();
        let del = deletion_contraction(n, deleted, memo);
        let con = deletion_contraction(n - 1, contracted, memo);
        &del - &con
    };
    memo.insert((n, edges), result.clone());
    result
}
