use std::collections::BTreeSet;

use super::{Classification, EdgeTag, NeutroGraph};
use crate::error::{Error, Result};
use crate::graph::{edge_coloring, eulerian, vertex_coloring, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroDegreeReport {
    /// `(vertex, degree)` for each indeterminate vertex; loops count twice.
    pub indet_degrees: Vec<(usize, usize)>,
    pub min: Option<usize>,
    pub max: Option<usize>,
    /// `k` when every indeterminate vertex has degree `k`.
    pub k_neutro_regular: Option<usize>,
    /// `k`-neutrosophic regular and every real vertex has degree `k` too.
    pub strongly_regular: bool,
    pub isolated: Vec<usize>,
    pub pendent: Vec<usize>,
}

/// Degrees over all incident edges, ignoring direction.
pub fn neutro_degree_report(g: &NeutroGraph) -> NeutroDegreeReport {
    let mut degree = vec![0usize; g.order()];
    for e in g.edges() {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let indet_degrees: Vec<(usize, usize)> = (g.real_vertices()..g.order()).map(|v| (v, degree[v])).collect();
    let min = indet_degrees.iter().map(|d| d.1).min();
    let max = indet_degrees.iter().map(|d| d.1).max();
    let k_neutro_regular = min.filter(|_| min == max);
    let strongly_regular = k_neutro_regular.is_some_and(|k| degree[..g.real_vertices()].iter().all(|&d| d == k));
    NeutroDegreeReport {
        isolated: indet_degrees.iter().filter(|d| d.1 == 0).map(|d| d.0).collect(),
        pendent: indet_degrees.iter().filter(|d| d.1 == 1).map(|d| d.0).collect(),
        indet_degrees,
        min,
        max,
        k_neutro_regular,
        strongly_regular,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkKind {
    Walk,
    Trail,
    Path,
    Cycle,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkReport {
    pub kind: WalkKind,
    pub neutrosophic: bool,
    pub closed: bool,
    /// Edge indices used, one per step.
    pub edges: Vec<usize>,
}

/// Classifies a vertex sequence. Each step uses an edge joining the two
/// vertices (respecting direction), preferring one not yet used.
///
/// The neutrosophic flag needs an indeterminate edge in edge-neutrosophic
/// graphs, an indeterminate vertex in vertex-neutrosophic graphs and both in
/// strong graphs.
pub fn classify_walk(g: &NeutroGraph, seq: &[usize]) -> WalkReport {
    let invalid = WalkReport {
        kind: WalkKind::Invalid,
        neutrosophic: false,
        closed: false,
        edges: Vec::new(),
    };
    if seq.is_empty() || seq.iter().any(|&v| v >= g.order()) {
        return invalid;
    }
    let mut used = Vec::with_capacity(seq.len() - 1);
    for w in seq.windows(2) {
        let joins = |i: &usize| {
            let e = g.edges()[*i];
            (e.u == w[0] && e.v == w[1]) || (!g.is_directed() && e.u == w[1] && e.v == w[0])
        };
        let candidates: Vec<usize> = (0..g.edges().len()).filter(joins).collect();
        let Some(&pick) = candidates.iter().find(|i| !used.contains(*i)).or(candidates.first()) else {
            return invalid;
        };
        used.push(pick);
    }
    let closed = seq.len() > 1 && seq[0] == seq[seq.len() - 1];
    let distinct_edges = used.iter().collect::<BTreeSet<_>>().len() == used.len();
    let points = if closed { &seq[..seq.len() - 1] } else { seq };
    let distinct_points = points.iter().collect::<BTreeSet<_>>().len() == points.len();
    let kind = if closed && distinct_points && points.len() >= 3 && distinct_edges {
        WalkKind::Cycle
    } else if !closed && distinct_points {
        WalkKind::Path
    } else if distinct_edges {
        WalkKind::Trail
    } else {
        WalkKind::Walk
    };
    let has_indet_edge = used.iter().any(|&i| g.edges()[i].tag == EdgeTag::Indeterminate);
    let has_indet_vertex = seq.iter().any(|&v| g.is_indeterminate(v));
    let neutrosophic = match g.classify() {
        Classification::Plain => false,
        Classification::EdgeNeutrosophic => has_indet_edge,
        Classification::VertexNeutrosophic => has_indet_vertex,
        Classification::Strong => has_indet_edge && has_indet_vertex,
    };
    WalkReport {
        kind,
        neutrosophic,
        closed,
        edges: used,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroComponents {
    /// Vertex sets by ordinary connectivity, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// Indices into `components` of the components that are not plain.
    pub neutrosophic_components: Vec<usize>,
    /// At least two neutrosophic components.
    pub is_neutro_disconnected: bool,
}

pub fn neutro_components(g: &NeutroGraph) -> NeutroComponents {
    let components = crate::graph::connectivity(&g.underlying()).components;
    let neutrosophic_components: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|(_, c)| g.induced_subgraph(c).expect("component vertices exist").classify() != Classification::Plain)
        .map(|(i, _)| i)
        .collect();
    NeutroComponents {
        is_neutro_disconnected: neutrosophic_components.len() >= 2,
        components,
        neutrosophic_components,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroTree {
    pub is_neutro_tree: bool,
    /// `(indeterminate vertex, eccentricity among indeterminate vertices)`;
    /// empty when there are no indeterminate vertices or the graph is
    /// disconnected.
    pub eccentricities: Vec<(usize, usize)>,
    pub radius: Option<usize>,
    pub neutro_diameter: Option<usize>,
    pub neutro_center: Vec<usize>,
}

pub fn neutro_tree(g: &NeutroGraph) -> NeutroTree {
    let graph = g.underlying();
    let conn = crate::graph::connectivity(&graph);
    let connected = conn.components.len() == 1;
    let acyclic = graph.is_simple() && graph.edge_count() + conn.components.len() == graph.vertex_count();
    let is_neutro_tree = connected && acyclic && g.classify() != Classification::Plain;
    let mut eccentricities = Vec::new();
    if connected && g.indet_vertices() > 0 {
        let adj = graph.adjacency_lists();
        for n in g.real_vertices()..g.order() {
            let dist = crate::graph::bfs_distances(&adj, n);
            let e = (g.real_vertices()..g.order()).filter_map(|m| dist[m]).max().unwrap_or(0);
            eccentricities.push((n, e));
        }
    }
    let radius = eccentricities.iter().map(|e| e.1).min();
    let neutro_diameter = eccentricities.iter().map(|e| e.1).max();
    let neutro_center = eccentricities.iter().filter(|e| Some(e.1) == radius).map(|e| e.0).collect();
    NeutroTree {
        is_neutro_tree,
        eccentricities,
        radius,
        neutro_diameter,
        neutro_center,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeutroEuler {
    pub is_eulerian: bool,
    pub is_neutro_eulerian: bool,
    pub is_strong_neutro_eulerian: bool,
}

pub fn neutro_eulerian(g: &NeutroGraph) -> NeutroEuler {
    let base = eulerian(&g.underlying()).is_eulerian;
    let vertex = g.indet_vertices() > 0;
    let edge = g.indeterminate_edge_count() > 0;
    NeutroEuler {
        is_eulerian: base,
        is_neutro_eulerian: base && (vertex || edge),
        is_strong_neutro_eulerian: base && vertex && edge,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroColoring {
    pub chromatic_number: usize,
    pub vertex_colors: Vec<usize>,
    pub chromatic_index: usize,
    /// Color per edge index; indeterminate edges get color 0.
    pub edge_colors: Vec<usize>,
}

/// Only real vertices joined by a real edge must differ, and only real edges
/// sharing an endpoint must differ. Indeterminate vertices take color 0. A
/// graph with vertices but no real vertex still uses one color.
pub fn neutro_coloring(g: &NeutroGraph) -> Result<NeutroColoring> {
    if g.has_loops() {
        return Err(Error::domain("neutrosophic coloring requires a loopless graph"));
    }
    let real = g.real_vertices();
    let real_pairs: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.tag == EdgeTag::Real && e.u < real && e.v < real)
        .map(|e| (e.u.min(e.v), e.u.max(e.v)))
        .collect();
    let core = Graph::from_edges(real, real_pairs).expect("pairs are distinct and loopless");
    let vc = vertex_coloring(&core)?;
    let mut vertex_colors = vc.colors;
    vertex_colors.resize(g.order(), 0);
    let chromatic_number = if g.order() > 0 { vc.chromatic_number.max(1) } else { 0 };

    let real_edges: Vec<usize> = (0..g.edges().len()).filter(|&i| g.edges()[i].tag == EdgeTag::Real).collect();
    let real_graph = Graph::multigraph(g.order(), real_edges.iter().map(|&i| (g.edges()[i].u, g.edges()[i].v)))
        .expect("endpoints validated");
    let ec = edge_coloring(&real_graph)?;
    let mut edge_colors = vec![0; g.edges().len()];
    for (k, &i) in real_edges.iter().enumerate() {
        edge_colors[i] = ec.colors[k];
    }
    Ok(NeutroColoring {
        chromatic_number,
        vertex_colors,
        chromatic_index: ec.chromatic_index,
        edge_colors,
    })
}

/// Which Petersen elements are indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PetersenKind {
    /// The first `k` canonical vertices (inner pentagram first).
    Vertex(usize),
    /// The first `k` canonical edges.
    Edge(usize),
    /// The first `j` vertices and the first `k` edges.
    Strong(usize, usize),
}

/// Petersen graph with the canonical labeling of
/// [`crate::graph::Family::Petersen`]. Canonical vertex `i < j` becomes
/// indeterminate vertex `N(i+1)`; the others keep their order as real
/// vertices. Edges keep the canonical order.
pub fn neutro_petersen(kind: PetersenKind) -> Result<NeutroGraph> {
    let (j, k) = match kind {
        PetersenKind::Vertex(j) => (j, 0),
        PetersenKind::Edge(k) => (0, k),
        PetersenKind::Strong(j, k) => (j, k),
    };
    let needs_vertex = !matches!(kind, PetersenKind::Edge(_));
    let needs_edge = !matches!(kind, PetersenKind::Vertex(_));
    if (needs_vertex && !(1..=10).contains(&j)) || (needs_edge && !(1..=15).contains(&k)) {
        return Err(Error::domain(format!(
            "Petersen variant {kind:?} needs 1..=10 indeterminate vertices and/or 1..=15 indeterminate edges"
        )));
    }
    let real = 10 - j;
    let relabel = |i: usize| if i < j { real + i } else { i - j };
    let edges = crate::graph::petersen_edges().into_iter().enumerate().map(|(index, (u, v))| {
        let tag = if index < k { EdgeTag::Indeterminate } else { EdgeTag::Real };
        (relabel(u), relabel(v), tag)
    });
    NeutroGraph::new(real, j, edges, false)
}
