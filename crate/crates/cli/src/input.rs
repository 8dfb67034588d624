use std::io::Read;

use neutro_core::cognitive::{ConceptModel, RelationalModel};
use neutro_core::graph::{generate, Family, Graph};
use neutro_core::model::{Model, ModelFile, ModelKind};
use neutro_core::ngraph::NeutroGraph;
use neutro_core::relation::FuzzyNeutroRelation;
use neutro_core::{Error, NeutroMatrix, Result};

/// File contents, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::NotFound(format!("standard input: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| Error::NotFound(format!("file '{path}': {e}")))
}

pub fn read_matrix(path: &str) -> Result<NeutroMatrix> {
    NeutroMatrix::parse_text(&read_source(path)?)
}

/// Interprets a CSV matrix as a model of `kind`.
fn model_from_csv(text: &str, kind: ModelKind) -> Result<Model> {
    match kind {
        ModelKind::Relation => Ok(Model::Relation(FuzzyNeutroRelation::unlabeled(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| l.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        )?)),
        _ => {
            let m = NeutroMatrix::parse_text(text)?;
            Ok(match kind {
                ModelKind::ConceptModel => Model::Concept(ConceptModel::unnamed(m)?),
                ModelKind::RelationalModel => Model::Relational(RelationalModel::unnamed(m)?),
                ModelKind::NeutroGraph => {
                    let directed = m.transpose() != m;
                    Model::NeutroGraph(NeutroGraph::from_adjacency(&m, 0, directed)?)
                }
                _ => Model::Graph(graph_from_adjacency(&m)?),
            })
        }
    }
}

fn graph_from_adjacency(m: &NeutroMatrix) -> Result<Graph> {
    if !m.is_square() || m.transpose() != *m {
        return Err(Error::Shape("graph adjacency matrix must be square and symmetric".into()));
    }
    let n = m.rows();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u..n {
            let x = m.get(u, v);
            if !x.is_zero() {
                let count = x.to_string().parse::<usize>().map_err(|_| {
                    Error::Domain(format!("graph adjacency entry {x} at ({}, {}) is not a count", u + 1, v + 1))
                })?;
                edges.extend(std::iter::repeat_n((u, v), count));
            }
        }
    }
    Graph::multigraph(n, edges)
}

/// Loads a model file, or a CSV matrix read as `kind` when `from_csv`.
pub fn load(path: &str, from_csv: bool, kind: ModelKind) -> Result<ModelFile> {
    let text = read_source(path)?;
    if from_csv {
        return Ok(model_from_csv(&text, kind)?.into());
    }
    ModelFile::parse(&text)
}

fn wrong_kind(path: &str, found: ModelKind, wanted: ModelKind) -> Error {
    Error::Domain(format!("'{path}' holds a {found}, expected a {wanted}"))
}

pub fn concept_model(path: &str, from_csv: bool) -> Result<(ConceptModel, Option<Vec<usize>>)> {
    let file = load(path, from_csv, ModelKind::ConceptModel)?;
    let clamp = file.resolve_clamp()?;
    match file.model {
        Model::Concept(m) => Ok((m, clamp)),
        other => Err(wrong_kind(path, other.kind(), ModelKind::ConceptModel)),
    }
}

pub fn relational_model(path: &str, from_csv: bool) -> Result<(RelationalModel, Option<Vec<usize>>)> {
    let file = load(path, from_csv, ModelKind::RelationalModel)?;
    let clamp = file.resolve_clamp()?;
    match file.model {
        Model::Relational(m) => Ok((m, clamp)),
        other => Err(wrong_kind(path, other.kind(), ModelKind::RelationalModel)),
    }
}

pub fn relation(path: &str, from_csv: bool) -> Result<FuzzyNeutroRelation> {
    match load(path, from_csv, ModelKind::Relation)?.model {
        Model::Relation(r) => Ok(r),
        other => Err(wrong_kind(path, other.kind(), ModelKind::Relation)),
    }
}

pub fn neutro_graph(path: &str, from_csv: bool) -> Result<NeutroGraph> {
    match load(path, from_csv, ModelKind::NeutroGraph)?.model {
        Model::NeutroGraph(g) => Ok(g),
        Model::Graph(g) => Ok(NeutroGraph::from_graph(&g)),
        other => Err(wrong_kind(path, other.kind(), ModelKind::NeutroGraph)),
    }
}

/// A file path, `-`, or a family name such as `petersen` or `complete:5`.
pub fn graph(source: &str, from_csv: bool) -> Result<Graph> {
    if source != "-" && !std::path::Path::new(source).exists() {
        if let Ok(family) = source.parse::<Family>() {
            return generate(family);
        }
    }
    match load(source, from_csv, ModelKind::Graph)?.model {
        Model::Graph(g) => Ok(g),
        Model::NeutroGraph(g) => Ok(g.underlying()),
        other => Err(wrong_kind(source, other.kind(), ModelKind::Graph)),
    }
}

/// Any model, for export.
pub fn any_model(path: &str, from_csv: bool) -> Result<Model> {
    Ok(load(path, from_csv, ModelKind::ConceptModel)?.model)
}
