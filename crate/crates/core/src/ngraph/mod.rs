//! Graphs with indeterminate vertices and indeterminate (dotted) edges.
//!
//! Vertices `0..real_vertices` are real (labelled `v1, v2, ...`); the
//! remaining `indet_vertices` are indeterminate (labelled `N1, N2, ...`).
//! Undirected edges are stored with the smaller endpoint first.

mod analysis;
mod isomorphism;

pub use analysis::{
    classify_walk, neutro_coloring, neutro_components, neutro_degree_report, neutro_eulerian, neutro_petersen,
    neutro_tree, NeutroColoring, NeutroComponents, NeutroDegreeReport, NeutroEuler, NeutroTree, PetersenKind,
    WalkKind, WalkReport,
};
pub use isomorphism::{neutro_isomorphic, MAX_ISOMORPHISM_ORDER};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::NeutroMatrix;
use crate::number::NeutroNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTag {
    Real,
    Indeterminate,
}

impl EdgeTag {
    pub fn symbol(self) -> char {
        match self {
            EdgeTag::Real => 'R',
            EdgeTag::Indeterminate => 'I',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NeutroEdge {
    pub u: usize,
    pub v: usize,
    pub tag: EdgeTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Plain,
    VertexNeutrosophic,
    EdgeNeutrosophic,
    Strong,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Plain => "plain",
            Classification::VertexNeutrosophic => "vertex-neutrosophic",
            Classification::EdgeNeutrosophic => "edge-neutrosophic",
            Classification::Strong => "strong",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NeutroGraph {
    real_vertices: usize,
    indet_vertices: usize,
    edges: Vec<NeutroEdge>,
    directed: bool,
    allow_multi: bool,
}

impl NeutroGraph {
    /// Rejects loops, repeated vertex pairs and out-of-range endpoints.
    pub fn new(
        real_vertices: usize,
        indet_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeTag)>,
        directed: bool,
    ) -> Result<Self> {
        NeutroGraph::build(real_vertices, indet_vertices, edges, directed, false)
    }

    /// Permits loops and parallel edges.
    pub fn multigraph(
        real_vertices: usize,
        indet_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeTag)>,
        directed: bool,
    ) -> Result<Self> {
        NeutroGraph::build(real_vertices, indet_vertices, edges, directed, true)
    }

    fn build(
        real_vertices: usize,
        indet_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeTag)>,
        directed: bool,
        allow_multi: bool,
    ) -> Result<Self> {
        let order = real_vertices + indet_vertices;
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v, tag) in edges {
            if u >= order || v >= order {
                return Err(Error::domain(format!("edge ({u}, {v}) has an endpoint outside 0..{order}")));
            }
            let (u, v) = if directed || u <= v { (u, v) } else { (v, u) };
            if !allow_multi {
                if u == v {
                    return Err(Error::domain(format!("loop at vertex {u} in a simple graph")));
                }
                if !seen.insert((u, v)) {
                    return Err(Error::domain(format!("repeated edge ({u}, {v}) in a simple graph")));
                }
            }
            list.push(NeutroEdge { u, v, tag });
        }
        Ok(NeutroGraph {
            real_vertices,
            indet_vertices,
            edges: list,
            directed,
            allow_multi,
        })
    }

    /// Plain graph with every vertex and edge real.
    pub fn from_graph(g: &Graph) -> Self {
        NeutroGraph {
            real_vertices: g.vertex_count(),
            indet_vertices: 0,
            edges: g.edges().iter().map(|&(u, v)| NeutroEdge { u, v, tag: EdgeTag::Real }).collect(),
            directed: false,
            allow_multi: !g.is_simple(),
        }
    }

    pub fn real_vertices(&self) -> usize {
        self.real_vertices
    }

    pub fn indet_vertices(&self) -> usize {
        self.indet_vertices
    }

    /// `n(G) + N`.
    pub fn order(&self) -> usize {
        self.real_vertices + self.indet_vertices
    }

    pub fn edges(&self) -> &[NeutroEdge] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn allows_multi(&self) -> bool {
        self.allow_multi
    }

    pub fn is_indeterminate(&self, v: usize) -> bool {
        v >= self.real_vertices
    }

    /// `v1, v2, ...` for real vertices, `N1, N2, ...` for indeterminate ones.
    pub fn label(&self, v: usize) -> String {
        if self.is_indeterminate(v) {
            format!("N{}", v - self.real_vertices + 1)
        } else {
            format!("v{}", v + 1)
        }
    }

    /// Inverse of [`NeutroGraph::label`].
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        let index = |rest: &str| rest.parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1);
        if let Some(k) = label.strip_prefix('N').and_then(index) {
            (k < self.indet_vertices).then_some(self.real_vertices + k)
        } else {
            label.strip_prefix('v').and_then(index).filter(|&k| k < self.real_vertices)
        }
    }

    pub fn indeterminate_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.tag == EdgeTag::Indeterminate).count()
    }

    pub fn real_edge_count(&self) -> usize {
        self.edges.len() - self.indeterminate_edge_count()
    }

    /// Strong iff at least one indeterminate vertex and at least one
    /// indeterminate edge.
    pub fn classify(&self) -> Classification {
        match (self.indet_vertices > 0, self.indeterminate_edge_count() > 0) {
            (true, true) => Classification::Strong,
            (true, false) => Classification::VertexNeutrosophic,
            (false, true) => Classification::EdgeNeutrosophic,
            (false, false) => Classification::Plain,
        }
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.u == e.v)
    }

    /// No loops and no repeated vertex pair (ordered pairs when directed).
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| e.u != e.v && seen.insert(self.pair(e.u, e.v)))
    }

    /// No loop at an indeterminate vertex and no repeated pair with an
    /// indeterminate endpoint.
    pub fn is_neutro_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| {
            let touches = self.is_indeterminate(e.u) || self.is_indeterminate(e.v);
            !touches || (e.u != e.v && seen.insert(self.pair(e.u, e.v)))
        })
    }

    /// Directed, with no pair of opposite indeterminate arcs.
    pub fn is_neutro_oriented(&self) -> bool {
        if !self.directed {
            return false;
        }
        let dotted: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| e.tag == EdgeTag::Indeterminate)
            .map(|e| (e.u, e.v))
            .collect();
        dotted.iter().all(|&(u, v)| u == v || !dotted.contains(&(v, u)))
    }

    fn pair(&self, u: usize, v: usize) -> (usize, usize) {
        if self.directed || u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Undirected multigraph on the same vertex set, tags dropped.
    pub fn underlying(&self) -> Graph {
        Graph::multigraph(self.order(), self.edges.iter().map(|e| (e.u, e.v))).expect("endpoints validated")
    }

    /// Induced subgraph on the given vertices, renumbered in increasing order
    /// (real vertices stay first).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<NeutroGraph> {
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.order()) {
            return Err(Error::NotFound(format!("vertex {v}")));
        }
        let mut relabel = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let real = keep.iter().filter(|&&v| !self.is_indeterminate(v)).count();
        Ok(NeutroGraph {
            real_vertices: real,
            indet_vertices: keep.len() - real,
            edges: self
                .edges
                .iter()
                .filter(|e| keep.contains(&e.u) && keep.contains(&e.v))
                .map(|e| NeutroEdge {
                    u: relabel[e.u],
                    v: relabel[e.v],
                    tag: e.tag,
                })
                .collect(),
            directed: self.directed,
            allow_multi: self.allow_multi,
        })
    }

    /// Deletes every indeterminate vertex and its incident edges.
    pub fn strip_indeterminates(&self) -> NeutroGraph {
        let real: Vec<usize> = (0..self.real_vertices).collect();
        self.induced_subgraph(&real).expect("real vertices exist")
    }

    /// Spanning subgraph keeping only the real-tagged edges.
    pub fn without_indeterminate_edges(&self) -> NeutroGraph {
        NeutroGraph {
            edges: self.edges.iter().filter(|e| e.tag == EdgeTag::Real).copied().collect(),
            ..self.clone()
        }
    }

    /// Entry `1` for a real edge, `I` for an indeterminate one, `0` otherwise;
    /// symmetric unless directed. Needs a simple graph with at least one
    /// vertex.
    pub fn adjacency(&self) -> Result<NeutroMatrix> {
        if !self.is_simple() {
            return Err(Error::domain("neutrosophic adjacency matrix requires a simple graph"));
        }
        let n = self.order();
        let mut rows = vec![vec![NeutroNumber::zero(); n]; n];
        for e in &self.edges {
            let value = match e.tag {
                EdgeTag::Real => NeutroNumber::one(),
                EdgeTag::Indeterminate => NeutroNumber::i(),
            };
            if !self.directed {
                rows[e.v][e.u] = value.clone();
            }
            rows[e.u][e.v] = value;
        }
        NeutroMatrix::from_rows(rows)
    }

    /// Inverse of [`NeutroGraph::adjacency`]; the last `indet_vertices` rows
    /// are indeterminate vertices. Edges are read row by row.
    pub fn from_adjacency(m: &NeutroMatrix, indet_vertices: usize, directed: bool) -> Result<NeutroGraph> {
        if !m.is_square() {
            return Err(Error::Shape(format!("adjacency matrix must be square, got {}x{}", m.rows(), m.cols())));
        }
        let n = m.rows();
        if indet_vertices > n {
            return Err(Error::domain(format!("{indet_vertices} indeterminate vertices in a graph of order {n}")));
        }
        let one = NeutroNumber::one();
        let i = NeutroNumber::i();
        let tag_of = |r: usize, c: usize| -> Result<Option<EdgeTag>> {
            let x = m.get(r, c);
            if x.is_zero() {
                Ok(None)
            } else if *x == one {
                Ok(Some(EdgeTag::Real))
            } else if *x == i {
                Ok(Some(EdgeTag::Indeterminate))
            } else {
                Err(Error::domain(format!("entry ({}, {}) = {x} is not in {{0, 1, I}}", r + 1, c + 1)))
            }
        };
        let mut edges = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let tag = tag_of(r, c)?;
                if directed {
                    if let Some(tag) = tag {
                        edges.push((r, c, tag));
                    }
                    continue;
                }
                if tag != tag_of(c, r)? {
                    return Err(Error::domain(format!(
                        "undirected adjacency matrix is not symmetric at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
                if r == c && tag.is_some() {
                    return Err(Error::domain(format!("nonzero diagonal entry at ({}, {})", r + 1, r + 1)));
                }
                if let (true, Some(tag)) = (r < c, tag) {
                    edges.push((r, c, tag));
                }
            }
        }
        NeutroGraph::new(n - indet_vertices, indet_vertices, edges, directed)
    }

    /// Header `n_real n_indet m directed` (directed is `0` or `1`), then one
    /// `u v R|I` line per edge; `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<NeutroGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, 1, "missing 'n_real n_indet m directed' header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::parse(line_no, 1, "header must be 'n_real n_indet m directed'"));
        }
        let count = |k: usize| -> Result<usize> {
            fields[k]
                .parse()
                .map_err(|_| Error::parse(line_no, column_of(header, fields[k]), format!("'{}' is not a count", fields[k])))
        };
        let (real, indet, m) = (count(0)?, count(1)?, count(2)?);
        let directed = match fields[3] {
            "0" | "false" => false,
            "1" | "true" => true,
            other => {
                return Err(Error::parse(
                    line_no,
                    column_of(header, other),
                    format!("directed flag must be 0 or 1, got '{other}'"),
                ))
            }
        };
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::parse(line_no, 1, "edge lines are 'u v R|I'"));
            }
            let vertex = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|_| Error::parse(line_no, column_of(line, s), format!("'{s}' is not a vertex index")))
            };
            let tag = match parts[2] {
                "R" => EdgeTag::Real,
                "I" => EdgeTag::Indeterminate,
                other => {
                    return Err(Error::parse(line_no, column_of(line, other), format!("edge tag must be R or I, got '{other}'")))
                }
            };
            edges.push((vertex(parts[0])?, vertex(parts[1])?, tag));
        }
        if edges.len() != m {
            return Err(Error::parse(line_no, 1, format!("header declares {m} edges, found {}", edges.len())));
        }
        match NeutroGraph::new(real, indet, edges.iter().copied(), directed) {
            Ok(g) => Ok(g),
            Err(_) => NeutroGraph::multigraph(real, indet, edges, directed),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.real_vertices,
            self.indet_vertices,
            self.edges.len(),
            u8::from(self.directed)
        );
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.tag.symbol()));
        }
        out
    }
}

fn column_of(line: &str, field: &str) -> usize {
    line.find(field).map_or(1, |p| p + 1)
}
