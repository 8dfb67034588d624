use neutro_core::number::parse_rational;
use neutro_core::relation::{
    check_homomorphism, dom_ran_height, inverse, maxmin_compose, properties, relational_join, transitive_closure,
    FuzzyNeutroRelation,
};
use neutro_core::{Error, Result};

use crate::input;
use crate::report::{list, Report};
use crate::RelCommand;

fn relation_block(r: &mut Report, key: &str, rel: &FuzzyNeutroRelation) {
    r.text(key, &rel.to_text());
}

/// Parses `a=alpha,b=beta` against the labels of both relations.
fn parse_map(text: &str, r: &FuzzyNeutroRelation, q: &FuzzyNeutroRelation) -> Result<Vec<usize>> {
    let mut map = vec![None; r.rows()];
    for pair in text.split(',') {
        let (x, y) = pair
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("map entry '{pair}' is not 'x=y'")))?;
        let xi = r.row_index(x.trim()).ok_or_else(|| Error::NotFound(format!("element '{}'", x.trim())))?;
        let yi = q.row_index(y.trim()).ok_or_else(|| Error::NotFound(format!("element '{}'", y.trim())))?;
        map[xi] = Some(yi);
    }
    map.iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Domain(format!("map leaves '{}' unassigned", r.row_labels()[i]))))
        .collect()
}

pub fn run(cmd: &RelCommand, csv: bool) -> Result<Report> {
    let mut r = Report::new();
    match cmd {
        RelCommand::Compose { p, q } => {
            let c = maxmin_compose(&input::relation(p, csv)?, &input::relation(q, csv)?)?;
            relation_block(&mut r, "composition", &c);
        }
        RelCommand::Closure { r: path } => {
            let c = transitive_closure(&input::relation(path, csv)?)?;
            relation_block(&mut r, "closure", &c);
        }
        RelCommand::Props { r: path, epsilon } => {
            let eps = parse_rational(epsilon)
                .ok_or_else(|| Error::Parse { line: 1, column: 1, message: format!("'{epsilon}' is not a rational") })?;
            let p = properties(&input::relation(path, csv)?, &eps)?;
            for (name, verdict) in p.entries() {
                r.line(name, verdict);
            }
        }
        RelCommand::Join { p, q } => {
            let j = relational_join(&input::relation(p, csv)?, &input::relation(q, csv)?)?;
            let triples: Vec<String> = j
                .support()
                .into_iter()
                .map(|(x, y, z, v)| format!("{}, {}, {}: {v}", j.x_labels[x], j.y_labels[y], j.z_labels[z]))
                .collect();
            r.line("triples", triples.len());
            r.block("join", triples);
        }
        RelCommand::Inverse { r: path } => {
            relation_block(&mut r, "inverse", &inverse(&input::relation(path, csv)?));
        }
        RelCommand::Height { r: path } => {
            let rel = input::relation(path, csv)?;
            let d = dom_ran_height(&rel);
            r.line(
                "domain",
                list(rel.row_labels().iter().zip(&d.domain).map(|(l, v)| format!("{l}={v}"))),
            );
            r.line(
                "range",
                list(rel.col_labels().iter().zip(&d.range).map(|(l, v)| format!("{l}={v}"))),
            );
            r.line("height", d.height);
        }
        RelCommand::Hom { r: rp, q: qp, map, strong } => {
            let (rel, q) = (input::relation(rp, csv)?, input::relation(qp, csv)?);
            let h = parse_map(map, &rel, &q)?;
            let report = check_homomorphism(&h, &rel, &q, *strong)?;
            let describe = |v: &neutro_core::relation::HomomorphismViolation| {
                format!(
                    "({}, {}){}",
                    rel.row_labels()[v.x1],
                    rel.row_labels()[v.x2],
                    if v.converse { " converse" } else { "" }
                )
            };
            r.line("holds", report.holds);
            r.line("violations", list(report.violations.iter().map(describe)));
            r.line("undecided", list(report.undecided.iter().map(describe)));
        }
    }
    Ok(r)
}
