use std::collections::VecDeque;

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degrees: Vec<usize>,
    /// `None` on the graph with no vertices.
    pub min: Option<usize>,
    pub max: Option<usize>,
    /// Degrees sorted in non-increasing order.
    pub sequence: Vec<usize>,
}

/// Loops count twice.
pub fn degree_report(g: &Graph) -> DegreeReport {
    let mut degrees = vec![0; g.vertex_count()];
    for &(u, v) in g.edges() {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    let mut sequence = degrees.clone();
    sequence.sort_unstable_by(|a, b| b.cmp(a));
    DegreeReport {
        min: degrees.iter().copied().min(),
        max: degrees.iter().copied().max(),
        sequence,
        degrees,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    /// Vertex sets of the components, each sorted, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    pub is_connected: bool,
    pub cut_vertices: Vec<usize>,
    /// Indices into [`Graph::edges`].
    pub cut_edges: Vec<usize>,
}

/// Component labels, skipping the edge `skip_edge` and the vertex
/// `skip_vertex` (which gets label `usize::MAX`).
pub(crate) fn component_labels(g: &Graph, skip_vertex: Option<usize>, skip_edge: Option<usize>) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if Some(i) == skip_edge || Some(u) == skip_vertex || Some(v) == skip_vertex {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX || Some(start) == skip_vertex {
            continue;
        }
        label[start] = count;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub(crate) fn components_of(g: &Graph) -> Vec<Vec<usize>> {
    let (label, count) = component_labels(g, None, None);
    let mut components = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        components[l].push(v);
    }
    components
}

/// Cut vertices and cut edges are found by deletion and recount: a vertex
/// is a cut vertex when removing it raises the component count, an edge is
/// a cut edge when removing it separates its endpoints.
pub fn connectivity(g: &Graph) -> Connectivity {
    let components = components_of(g);
    let base = components.len();
    let cut_vertices = (0..g.vertex_count())
        .filter(|&v| {
            let (_, count) = component_labels(g, Some(v), None);
            count > base
        })
        .collect();
    let cut_edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| {
            if u == v {
                return false;
            }
            let (label, _) = component_labels(g, None, Some(i));
            label[u] != label[v]
        })
        .map(|(i, _)| i)
        .collect();
    Connectivity {
        is_connected: base <= 1,
        components,
        cut_vertices,
        cut_edges,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// Vertices of an odd cycle in traversal order (a loop gives a single
    /// vertex).
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS two-coloring; each component's least vertex goes to `left`.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    if let Some(&(u, _)) = g.edges().iter().find(|&&(u, v)| u == v) {
        return Bipartiteness::OddCycle(vec![u]);
    }
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartiteness::OddCycle(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    let left = (0..n).filter(|&v| side[v] == 0).collect();
    let right = (0..n).filter(|&v| side[v] == 1).collect();
    Bipartiteness::Bipartite { left, right }
}

/// Walks both BFS-tree branches up to their meeting point; the conflict
/// edge `u-w` closes the cycle.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut from_u = vec![a];
    let mut from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_w.push(b);
    }
    from_w.pop();
    from_w.reverse();
    from_u.extend(from_w);
    from_u
}
