use std::collections::VecDeque;

use super::{Graph, MAX_EXACT_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    /// `None` marks vertices in different components.
    pub distances: Vec<Vec<Option<usize>>>,
    /// Absent when the graph has no cycle.
    pub girth: Option<usize>,
    /// Absent when the graph has no cycle.
    pub circumference: Option<usize>,
    /// Absent when the graph is disconnected or has no vertices.
    pub diameter: Option<usize>,
}

pub fn metrics(g: &Graph) -> Result<Metrics> {
    if g.vertex_count() > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count for longest-cycle search",
            actual: g.vertex_count(),
            limit: MAX_EXACT_VERTICES,
        });
    }
    let distances = distance_matrix(g);
    let connected = distances.iter().flatten().all(Option::is_some);
    let diameter = if connected && g.vertex_count() > 0 {
        distances.iter().flatten().flatten().copied().max()
    } else {
        None
    };
    let simple = g.underlying_simple();
    let short_cycle = if g.has_loops() {
        Some(1)
    } else if g.has_parallel_edges() {
        Some(2)
    } else {
        None
    };
    let girth = short_cycle.or_else(|| simple_girth(&simple));
    let circumference = longest_simple_cycle(&simple).or(if g.has_parallel_edges() {
        Some(2)
    } else {
        short_cycle
    });
    Ok(Metrics {
        distances,
        girth,
        circumference,
        diameter,
    })
}

pub(crate) fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub(crate) fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let adj = g.adjacency_lists();
    (0..g.vertex_count()).map(|s| bfs_distances(&adj, s)).collect()
}

/// Shortest cycle of a simple graph: from every root, each non-tree edge
/// `x-y` closes a closed walk of length `d(x) + d(y) + 1`; the minimum over
/// all roots is attained by a true cycle.
fn simple_girth(g: &Graph) -> Option<usize> {
    let adj = g.adjacency_lists();
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Longest cycle of a simple graph by DFS over paths whose least vertex is
/// the start.
fn longest_simple_cycle(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut best = 0;
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        extend_cycle(&adj, start, start, 1, &mut on_path, &mut best, n);
        on_path[start] = false;
        if best == n {
            break;
        }
    }
    (best >= 3).then_some(best)
}

fn extend_cycle(
    adj: &[Vec<usize>],
    start: usize,
    at: usize,
    length: usize,
    on_path: &mut [bool],
    best: &mut usize,
    n: usize,
) {
    for &next in &adj[at] {
        if *best == n {
            return;
        }
        if next == start && length >= 3 {
            *best = (*best).max(length);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            extend_cycle(adj, start, next, length + 1, on_path, best, n);
            on_path[next] = false;
        }
    }
}
