//! Versioned text container for every model kind.
//!
//! ```text
//! neutro-model 1
//! kind concept-model
//! names C1, C2, C3
//! clamp C1
//! data
//! 0, 1, I
//! ...
//! ```
//!
//! Header keys: `kind` (required), `names` (concept models), `domain` and
//! `range` (relational models), `clamp` (optional, concept models and
//! relational models). The body after `data` uses the native text format
//! of the kind. Comments (`#`) and blank lines in the header are dropped
//! by [`ModelFile::to_text`].

use std::fmt;
use std::str::FromStr;

use crate::cognitive::{default_names, ConceptModel, RelationalModel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::NeutroMatrix;
use crate::ngraph::NeutroGraph;
use crate::relation::FuzzyNeutroRelation;

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "neutro-model";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Graph,
    NeutroGraph,
    Relation,
    ConceptModel,
    RelationalModel,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Graph => "graph",
            ModelKind::NeutroGraph => "neutro-graph",
            ModelKind::Relation => "relation",
            ModelKind::ConceptModel => "concept-model",
            ModelKind::RelationalModel => "relational-model",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        [
            ModelKind::Graph,
            ModelKind::NeutroGraph,
            ModelKind::Relation,
            ModelKind::ConceptModel,
            ModelKind::RelationalModel,
        ]
        .into_iter()
        .find(|k| k.name() == text)
        .ok_or_else(|| Error::parse(1, 1, format!("unknown model kind '{text}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Graph(Graph),
    NeutroGraph(NeutroGraph),
    Relation(FuzzyNeutroRelation),
    Concept(ConceptModel),
    Relational(RelationalModel),
}

impl Model {
    pub fn kind(&self) -> ModelKind {
        match self {
            Model::Graph(_) => ModelKind::Graph,
            Model::NeutroGraph(_) => ModelKind::NeutroGraph,
            Model::Relation(_) => ModelKind::Relation,
            Model::Concept(_) => ModelKind::ConceptModel,
            Model::Relational(_) => ModelKind::RelationalModel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub model: Model,
    /// Default clamp set by concept name.
    pub clamp: Option<Vec<String>>,
}

impl From<Model> for ModelFile {
    fn from(model: Model) -> Self {
        ModelFile { model, clamp: None }
    }
}

fn name_list(text: &str, line: usize, column: usize) -> Result<Vec<String>> {
    let names: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if names.iter().any(String::is_empty) {
        return Err(Error::parse(line, column, "empty name in list"));
    }
    Ok(names)
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<ModelFile> {
        let lines: Vec<&str> = text.lines().collect();
        let mut header = lines
            .iter()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match header.next() {
            Some((_, first)) if first == format!("{MAGIC} {FORMAT_VERSION}") => {}
            Some((line, first)) if first.starts_with(MAGIC) => {
                return Err(Error::parse(line, MAGIC.len() + 2, format!("unsupported format version in '{first}'")))
            }
            Some((line, _)) => return Err(Error::parse(line, 1, format!("expected '{MAGIC} {FORMAT_VERSION}'"))),
            None => return Err(Error::parse(1, 1, "empty model file")),
        }
        let mut kind = None;
        let mut names = None;
        let mut domain = None;
        let mut range = None;
        let mut clamp = None;
        let mut body_start = None;
        for (line, content) in header.by_ref() {
            if content == "data" {
                body_start = Some(line);
                break;
            }
            let (key, value) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let value = value.trim();
            let column = content.len() - value.len() + 1;
            let slot = match key {
                "kind" => {
                    let k = value.parse::<ModelKind>().map_err(|_| {
                        Error::parse(line, column, format!("unknown model kind '{value}'"))
                    })?;
                    if kind.replace(k).is_some() {
                        return Err(Error::parse(line, 1, "duplicate 'kind' line"));
                    }
                    continue;
                }
                "names" => &mut names,
                "domain" => &mut domain,
                "range" => &mut range,
                "clamp" => &mut clamp,
                other => return Err(Error::parse(line, 1, format!("unknown header key '{other}'"))),
            };
            if slot.replace(name_list(value, line, column)?).is_some() {
                return Err(Error::parse(line, 1, format!("duplicate '{key}' line")));
            }
        }
        let body_line = body_start.ok_or_else(|| Error::parse(lines.len().max(1), 1, "missing 'data' line"))?;
        let kind = kind.ok_or_else(|| Error::parse(body_line, 1, "missing 'kind' line before 'data'"))?;
        let body = lines[body_line..].join("\n");
        let at_body = |e: Error| e.offset_line(body_line);
        let misplaced = |key: &str| Error::parse(body_line, 1, format!("'{key}' does not apply to {kind}"));
        match kind {
            ModelKind::ConceptModel | ModelKind::RelationalModel => {}
            _ if clamp.is_some() => return Err(misplaced("clamp")),
            _ => {}
        }
        if kind != ModelKind::ConceptModel && names.is_some() {
            return Err(misplaced("names"));
        }
        if kind != ModelKind::RelationalModel && (domain.is_some() || range.is_some()) {
            return Err(misplaced(if domain.is_some() { "domain" } else { "range" }));
        }
        let model = match kind {
            ModelKind::Graph => Model::Graph(Graph::parse_edge_list(&body).map_err(at_body)?),
            ModelKind::NeutroGraph => Model::NeutroGraph(NeutroGraph::parse(&body).map_err(at_body)?),
            ModelKind::Relation => Model::Relation(FuzzyNeutroRelation::parse(&body).map_err(at_body)?),
            ModelKind::ConceptModel => {
                let weights = NeutroMatrix::parse_text(&body).map_err(at_body)?;
                let names = names.unwrap_or_else(|| default_names("C", weights.rows()));
                Model::Concept(ConceptModel::new(names, weights)?)
            }
            ModelKind::RelationalModel => {
                let weights = NeutroMatrix::parse_text(&body).map_err(at_body)?;
                let domain = domain.unwrap_or_else(|| default_names("D", weights.rows()));
                let range = range.unwrap_or_else(|| default_names("R", weights.cols()));
                Model::Relational(RelationalModel::new(domain, range, weights)?)
            }
        };
        let file = ModelFile { model, clamp };
        file.resolve_clamp()?;
        Ok(file)
    }

    /// Clamp indices on the side each name belongs to.
    pub fn resolve_clamp(&self) -> Result<Option<Vec<usize>>> {
        let Some(names) = &self.clamp else { return Ok(None) };
        let lookup = |name: &String| -> Result<usize> {
            match &self.model {
                Model::Concept(m) => m.index_of(name),
                Model::Relational(m) => m
                    .domain_names()
                    .iter()
                    .chain(m.range_names())
                    .position(|n| n == name)
                    .map(|i| if i < m.domain_names().len() { i } else { i - m.domain_names().len() })
                    .ok_or_else(|| Error::NotFound(format!("concept '{name}'"))),
                _ => Err(Error::domain("clamp applies only to cognitive models")),
            }
        };
        names.iter().map(lookup).collect::<Result<Vec<_>>>().map(Some)
    }

    /// Canonical form: no comments, header keys in fixed order, names
    /// written out in full.
    pub fn to_text(&self) -> String {
        let mut out = format!("{MAGIC} {FORMAT_VERSION}\nkind {}\n", self.model.kind());
        let body = match &self.model {
            Model::Graph(g) => g.to_edge_list(),
            Model::NeutroGraph(g) => g.to_text(),
            Model::Relation(r) => r.to_text(),
            Model::Concept(m) => {
                out.push_str(&format!("names {}\n", m.names().join(", ")));
                m.weights().to_text()
            }
            Model::Relational(m) => {
                out.push_str(&format!("domain {}\n", m.domain_names().join(", ")));
                out.push_str(&format!("range {}\n", m.range_names().join(", ")));
                m.weights().to_text()
            }
        };
        if let Some(clamp) = &self.clamp {
            out.push_str(&format!("clamp {}\n", clamp.join(", ")));
        }
        out.push_str("data\n");
        out.push_str(&body);
        out
    }
}
