//! Graphviz DOT rendering. Indeterminate edges are dotted and labeled `I`;
//! indeterminate vertices are boxes.

use crate::cognitive::{ConceptModel, RelationalModel};
use crate::graph::Graph;
use crate::matrix::NeutroMatrix;
use crate::model::Model;
use crate::ngraph::{EdgeTag, NeutroGraph};

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Edge attributes for a weight in `{−1, 1, I}`.
fn weight_attrs(matrix: &NeutroMatrix, r: usize, c: usize) -> String {
    let w = matrix.get(r, c);
    if w.is_real() {
        let label = if w.to_string().starts_with('-') { "-1" } else { "+1" };
        format!("[label=\"{label}\"]")
    } else {
        "[style=dotted, label=\"I\"]".to_string()
    }
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn neutro_graph_to_dot(g: &NeutroGraph) -> String {
    let (keyword, arrow) = if g.is_directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{keyword} G {{\n");
    for v in 0..g.order() {
        let shape = if g.is_indeterminate(v) { "box" } else { "circle" };
        out.push_str(&format!("  {} [shape={shape}];\n", quote(&g.label(v))));
    }
    for e in g.edges() {
        let attrs = match e.tag {
            EdgeTag::Real => "",
            EdgeTag::Indeterminate => " [style=dotted, label=\"I\"]",
        };
        out.push_str(&format!("  {} {arrow} {}{attrs};\n", quote(&g.label(e.u)), quote(&g.label(e.v))));
    }
    out.push_str("}\n");
    out
}

pub fn concept_model_to_dot(m: &ConceptModel) -> String {
    let mut out = String::from("digraph G {\n");
    for name in m.names() {
        out.push_str(&format!("  {};\n", quote(name)));
    }
    let w = m.weights();
    for r in 0..w.rows() {
        for c in 0..w.cols() {
            if !w.get(r, c).is_zero() {
                out.push_str(&format!(
                    "  {} -> {} {};\n",
                    quote(&m.names()[r]),
                    quote(&m.names()[c]),
                    weight_attrs(w, r, c)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Domain and range concepts on two ranks.
pub fn relational_model_to_dot(m: &RelationalModel) -> String {
    let mut out = String::from("digraph G {\n  rankdir=LR;\n");
    for (side, names) in [("domain", m.domain_names()), ("range", m.range_names())] {
        out.push_str(&format!("  subgraph cluster_{side} {{\n    label=\"{side}\";\n    rank=same;\n"));
        for name in names {
            out.push_str(&format!("    {};\n", quote(name)));
        }
        out.push_str("  }\n");
    }
    let w = m.weights();
    for r in 0..w.rows() {
        for c in 0..w.cols() {
            if !w.get(r, c).is_zero() {
                out.push_str(&format!(
                    "  {} -> {} {};\n",
                    quote(&m.domain_names()[r]),
                    quote(&m.range_names()[c]),
                    weight_attrs(w, r, c)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Sagittal diagram: rows on the left, columns on the right, one edge per
/// nonzero membership labeled with its grade.
pub fn relation_to_dot(r: &crate::relation::FuzzyNeutroRelation) -> String {
    let mut out = String::from("digraph G {\n  rankdir=LR;\n");
    let row_id = |i: usize| quote(&format!("row:{}", r.row_labels()[i]));
    let col_id = |j: usize| quote(&format!("col:{}", r.col_labels()[j]));
    for i in 0..r.rows() {
        out.push_str(&format!("  {} [label={}];\n", row_id(i), quote(&r.row_labels()[i])));
    }
    for j in 0..r.cols() {
        out.push_str(&format!("  {} [label={}];\n", col_id(j), quote(&r.col_labels()[j])));
    }
    for i in 0..r.rows() {
        for j in 0..r.cols() {
            let v = r.get(i, j);
            if v.is_zero() {
                continue;
            }
            let style = if v.is_indeterminate() { "style=dotted, " } else { "" };
            out.push_str(&format!("  {} -> {} [{style}label=\"{v}\"];\n", row_id(i), col_id(j)));
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_dot(model: &Model) -> String {
    match model {
        Model::Graph(g) => graph_to_dot(g),
        Model::NeutroGraph(g) => neutro_graph_to_dot(g),
        Model::Relation(r) => relation_to_dot(r),
        Model::Concept(m) => concept_model_to_dot(m),
        Model::Relational(m) => relational_model_to_dot(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ngraph::EdgeTag::{Indeterminate as D, Real as R};

    #[test]
    fn dotted_c4() {
        let g = NeutroGraph::new(4, 0, [(0, 1, R), (1, 2, R), (2, 3, R), (3, 0, D)], false).unwrap();
        let dot = neutro_graph_to_dot(&g);
        assert_eq!(dot.lines().filter(|l| l.contains("shape=")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ") && !l.contains("dotted")).count(), 3);
        assert_eq!(dot.lines().filter(|l| l.contains("dotted")).count(), 1);
        assert_eq!(dot, neutro_graph_to_dot(&g));
    }

    #[test]
    fn concept_labels() {
        let w: NeutroMatrix = NeutroMatrix::parse_text("0, -1\nI, 0\n").unwrap();
        let m = ConceptModel::new(vec!["a \"x\"".into(), "b".into()], w).unwrap();
        let dot = concept_model_to_dot(&m);
        assert!(dot.contains("\"a \\\"x\\\"\" -> \"b\" [label=\"-1\"];"));
        assert!(dot.contains("\"b\" -> \"a \\\"x\\\"\" [style=dotted, label=\"I\"];"));
    }
}
