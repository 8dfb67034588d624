use neutro_core::model::{Model, ModelFile};
use neutro_core::ngraph::{
    classify_walk, neutro_coloring, neutro_components, neutro_degree_report, neutro_eulerian, neutro_petersen,
    neutro_tree, NeutroGraph, PetersenKind,
};
use neutro_core::{Error, Result};

use crate::input;
use crate::report::{list, optional, Report};

fn labels(g: &NeutroGraph, vertices: impl IntoIterator<Item = usize>) -> String {
    list(vertices.into_iter().map(|v| g.label(v)))
}

pub fn classify(file: &str, from_csv: bool) -> Result<Report> {
    let g = input::neutro_graph(file, from_csv)?;
    let mut r = Report::new();
    r.line("classification", g.classify());
    r.line("real_vertices", g.real_vertices());
    r.line("indeterminate_vertices", g.indet_vertices());
    r.line("real_edges", g.real_edge_count());
    r.line("indeterminate_edges", g.indeterminate_edge_count());
    r.line("directed", g.is_directed());
    r.line("simple", g.is_simple());
    r.line("neutro_simple", g.is_neutro_simple());
    let d = neutro_degree_report(&g);
    r.line(
        "indeterminate_degrees",
        list(d.indet_degrees.iter().map(|&(v, k)| format!("{}={k}", g.label(v)))),
    );
    r.line("neutro_regular", optional(d.k_neutro_regular));
    r.line("strongly_regular", d.strongly_regular);
    r.line("isolated", labels(&g, d.isolated));
    r.line("pendent", labels(&g, d.pendent));
    let c = neutro_components(&g);
    r.line("components", c.components.len());
    r.line("neutro_disconnected", c.is_neutro_disconnected);
    let t = neutro_tree(&g);
    r.line("neutro_tree", t.is_neutro_tree);
    if t.is_neutro_tree {
        r.line("radius", optional(t.radius));
        r.line("neutro_diameter", optional(t.neutro_diameter));
        r.line("neutro_center", labels(&g, t.neutro_center));
    }
    let e = neutro_eulerian(&g);
    r.line("eulerian", e.is_eulerian);
    r.line("neutro_eulerian", e.is_neutro_eulerian);
    r.line("strong_neutro_eulerian", e.is_strong_neutro_eulerian);
    Ok(r)
}

pub fn color(file: &str, from_csv: bool) -> Result<Report> {
    let g = input::neutro_graph(file, from_csv)?;
    let c = neutro_coloring(&g)?;
    let mut r = Report::new();
    r.line("chromatic_number", c.chromatic_number);
    r.line(
        "vertex_colors",
        list((0..g.order()).map(|v| format!("{}={}", g.label(v), c.vertex_colors[v]))),
    );
    r.line("chromatic_index", c.chromatic_index);
    r.line(
        "edge_colors",
        list(
            g.edges()
                .iter()
                .zip(&c.edge_colors)
                .map(|(e, k)| format!("{}-{}:{}={k}", g.label(e.u), g.label(e.v), e.tag.symbol())),
        ),
    );
    Ok(r)
}

pub fn petersen(vertex: usize, edge: usize) -> Result<String> {
    let kind = match (vertex, edge) {
        (0, 0) => return Err(Error::Domain("give --vertex, --edge or both".into())),
        (j, 0) => PetersenKind::Vertex(j),
        (0, k) => PetersenKind::Edge(k),
        (j, k) => PetersenKind::Strong(j, k),
    };
    Ok(ModelFile::from(Model::NeutroGraph(neutro_petersen(kind)?)).to_text())
}

pub fn adjacency(file: &str, from_csv: bool) -> Result<Report> {
    let g = input::neutro_graph(file, from_csv)?;
    let a = g.adjacency()?;
    let mut r = Report::new();
    r.line("vertices", labels(&g, 0..g.order()));
    r.text("adjacency", &a.to_text());
    Ok(r)
}

pub fn walk(file: &str, sequence: &str, from_csv: bool) -> Result<Report> {
    let g = input::neutro_graph(file, from_csv)?;
    let seq = sequence
        .split(',')
        .map(|l| g.vertex_by_label(l.trim()).ok_or_else(|| Error::NotFound(format!("vertex '{}'", l.trim()))))
        .collect::<Result<Vec<_>>>()?;
    let w = classify_walk(&g, &seq);
    let mut r = Report::new();
    r.line("kind", format!("{:?}", w.kind).to_lowercase());
    r.line("neutrosophic", w.neutrosophic);
    r.line("closed", w.closed);
    Ok(r)
}
