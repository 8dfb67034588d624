use super::structure::component_labels;
use super::{Graph, MAX_EXACT_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub is_eulerian: bool,
    /// Closed tour as edge indices, starting at the least non-isolated vertex.
    pub tour: Option<Vec<usize>>,
}

/// Eulerian iff there is at least one edge, the non-isolated vertices are
/// connected and every degree is even.
pub fn eulerian(g: &Graph) -> EulerReport {
    let not_eulerian = EulerReport {
        is_eulerian: false,
        tour: None,
    };
    let n = g.vertex_count();
    let mut degree = vec![0usize; n];
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    let Some(start) = degree.iter().position(|&d| d > 0) else {
        return not_eulerian;
    };
    if degree.iter().any(|d| d % 2 == 1) {
        return not_eulerian;
    }
    let (label, _) = component_labels(g, None, None);
    if (0..n).any(|v| degree[v] > 0 && label[v] != label[start]) {
        return not_eulerian;
    }
    EulerReport {
        is_eulerian: true,
        tour: Some(hierholzer(g, start)),
    }
}

fn hierholzer(g: &Graph, start: usize) -> Vec<usize> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        if u != v {
            incident[v].push(i);
        }
    }
    for list in &mut incident {
        list.reverse();
    }
    let mut used = vec![false; g.edge_count()];
    // Stack of (vertex, edge used to reach it).
    let mut stack = vec![(start, usize::MAX)];
    let mut tour = Vec::with_capacity(g.edge_count());
    while let Some(&(v, via)) = stack.last() {
        while incident[v].last().is_some_and(|&e| used[e]) {
            incident[v].pop();
        }
        match incident[v].pop() {
            Some(e) => {
                used[e] = true;
                let (a, b) = g.edges()[e];
                stack.push((if a == v { b } else { a }, e));
            }
            None => {
                stack.pop();
                if via != usize::MAX {
                    tour.push(via);
                }
            }
        }
    }
    tour.reverse();
    tour
}

/// `cl(G)`: repeatedly joins nonadjacent `u, v` with `deg u + deg v ≥ n`.
pub fn closure(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    closure_by_order(g, &pairs)
}

/// Closure scanning candidate pairs in the given order, rescanning until no
/// pair qualifies. Pairs outside the list are never added.
pub fn closure_by_order(g: &Graph, order: &[(usize, usize)]) -> Result<Graph> {
    g.require_simple("closure")?;
    let n = g.vertex_count();
    let mut adj = g.adjacency_matrix();
    let mut degree: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    let mut edges = g.edges().to_vec();
    loop {
        let mut changed = false;
        for &(u, v) in order {
            if u >= n || v >= n {
                return Err(Error::NotFound(format!("vertex pair ({u}, {v})")));
            }
            if u != v && !adj[u][v] && degree[u] + degree[v] >= n {
                adj[u][v] = true;
                adj[v][u] = true;
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u.min(v), u.max(v)));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Graph::from_edges(n, edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonReport {
    pub closure: Graph,
    pub is_hamiltonian: bool,
    /// Spanning cycle as a vertex sequence starting at 0 (the closing edge
    /// back to 0 is implied).
    pub cycle: Option<Vec<usize>>,
}

pub fn hamiltonian(g: &Graph) -> Result<HamiltonReport> {
    g.require_simple("Hamiltonicity")?;
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::domain(format!("Hamiltonicity needs at least 3 vertices, got {n}")));
    }
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count for Hamiltonian search",
            actual: n,
            limit: MAX_EXACT_VERTICES,
        });
    }
    let closure = closure(g)?;
    let adj = g.adjacency_lists();
    let mut path = vec![0];
    let mut on_path = vec![false; n];
    on_path[0] = true;
    let cycle = extend_path(&adj, &mut path, &mut on_path).then_some(path);
    debug_assert!(closure.edge_count() < n * (n - 1) / 2 || cycle.is_some());
    Ok(HamiltonReport {
        closure,
        is_hamiltonian: cycle.is_some(),
        cycle,
    })
}

fn extend_path(adj: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let n = adj.len();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        return adj[last].contains(&0);
    }
    for &next in &adj[last] {
        if on_path[next] {
            continue;
        }
        // Fixes the orientation: the second vertex is below the last.
        if path.len() == n - 1 && path[1] > next {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        if extend_path(adj, path, on_path) {
            return true;
        }
        path.pop();
        on_path[next] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn check_tour(g: &Graph, tour: &[usize]) {
        assert_eq!(tour.len(), g.edge_count());
        let mut sorted = tour.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..g.edge_count()).collect::<Vec<_>>());
        let (a, b) = g.edges()[tour[0]];
        let (c, d) = g.edges()[*tour.last().unwrap()];
        // Consecutive edges share an endpoint and the walk closes.
        let mut at = if a == c || a == d { a } else { b };
        let start = at;
        for &e in tour {
            let (u, v) = g.edges()[e];
            assert!(u == at || v == at);
            at = if u == at { v } else { u };
        }
        assert_eq!(at, start);
    }

    #[test]
    fn euler_examples() {
        let c4 = generate(Family::Cycle(4)).unwrap();
        let r = eulerian(&c4);
        assert!(r.is_eulerian);
        check_tour(&c4, r.tour.as_deref().unwrap());
        assert!(!eulerian(&generate(Family::Complete(4)).unwrap()).is_eulerian);
        let k5 = generate(Family::Complete(5)).unwrap();
        check_tour(&k5, eulerian(&k5).tour.as_deref().unwrap());
        assert!(!eulerian(&Graph::empty(3)).is_eulerian);
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!eulerian(&two_triangles).is_eulerian);
        let with_isolated = Graph::from_edges(4, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(eulerian(&with_isolated).is_eulerian);
        let looped = Graph::multigraph(2, [(0, 1), (0, 1), (1, 1)]).unwrap();
        check_tour(&looped, eulerian(&looped).tour.as_deref().unwrap());
    }

    #[test]
    fn hamilton_examples() {
        let c5 = hamiltonian(&generate(Family::Cycle(5)).unwrap()).unwrap();
        assert!(c5.is_hamiltonian);
        assert_eq!(c5.cycle.as_ref().unwrap().len(), 5);
        assert!(!hamiltonian(&generate(Family::CompleteBipartite(2, 3)).unwrap()).unwrap().is_hamiltonian);
        assert!(!hamiltonian(&generate(Family::Petersen).unwrap()).unwrap().is_hamiltonian);
        assert!(hamiltonian(&generate(Family::Wheel(6)).unwrap()).unwrap().is_hamiltonian);
        assert!(matches!(hamiltonian(&generate(Family::Path(2)).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn closure_of_dense_graph_is_complete() {
        let g = generate(Family::Wheel(4)).unwrap();
        let cl = closure(&g).unwrap();
        assert_eq!(cl.edge_count(), 10);
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!(closure(&c5).unwrap().edge_count(), 5);
    }
}
