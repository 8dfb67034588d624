//! Fuzzy and neutrosophic binary relations as membership matrices, with
//! max-min composition under the lattice operations of [`lattice_min`] and
//! [`lattice_max`].

mod properties;
mod value;

pub use properties::{
    check_homomorphism, properties, transitive_closure, HomomorphismReport, HomomorphismViolation, PropertyReport,
};
pub use value::{eq, ge, gt, lattice_max, lattice_min, FuzzyNeutroValue, Truth};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuzzyNeutroRelation {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    values: Vec<Vec<FuzzyNeutroValue>>,
}

impl FuzzyNeutroRelation {
    /// Labels must be distinct within each side and match the matrix shape.
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, values: Vec<Vec<FuzzyNeutroValue>>) -> Result<Self> {
        if values.len() != row_labels.len() || values.iter().any(|r| r.len() != col_labels.len()) {
            return Err(Error::Shape(format!(
                "relation with {} row labels and {} column labels does not match its matrix",
                row_labels.len(),
                col_labels.len()
            )));
        }
        for labels in [&row_labels, &col_labels] {
            let mut seen = BTreeSet::new();
            if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(Error::domain(format!("duplicate label '{dup}'")));
            }
        }
        Ok(FuzzyNeutroRelation {
            row_labels,
            col_labels,
            values,
        })
    }

    /// Square relation on one label set.
    pub fn on(labels: Vec<String>, values: Vec<Vec<FuzzyNeutroValue>>) -> Result<Self> {
        FuzzyNeutroRelation::new(labels.clone(), labels, values)
    }

    /// Labels `x1..xm` and `y1..yn`.
    pub fn unlabeled(values: Vec<Vec<FuzzyNeutroValue>>) -> Result<Self> {
        let rows = values.len();
        let cols = values.first().map_or(0, Vec::len);
        FuzzyNeutroRelation::new(
            (1..=rows).map(|i| format!("x{i}")).collect(),
            (1..=cols).map(|j| format!("y{j}")).collect(),
            values,
        )
    }

    /// Parses a grid of value tokens such as `"0.3, I; 1, 0"` (rows split by
    /// `;` or newlines) with generated labels.
    pub fn from_grid(text: &str) -> Result<Self> {
        let rows = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FuzzyNeutroRelation::unlabeled(rows)
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, row: usize, col: usize) -> &FuzzyNeutroValue {
        &self.values[row][col]
    }

    pub fn values(&self) -> &[Vec<FuzzyNeutroValue>] {
        &self.values
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    /// Same labels, values replaced.
    pub fn with_values(&self, values: Vec<Vec<FuzzyNeutroValue>>) -> Result<Self> {
        FuzzyNeutroRelation::new(self.row_labels.clone(), self.col_labels.clone(), values)
    }

    pub fn is_crisp(&self) -> bool {
        self.values.iter().flatten().all(|v| !v.is_indeterminate() && (v.is_zero() || *v == FuzzyNeutroValue::one()))
    }

    pub fn has_indeterminates(&self) -> bool {
        self.values.iter().flatten().any(FuzzyNeutroValue::is_indeterminate)
    }

    /// Header line of column labels, then `rowlabel, v1, ..., vk` per row.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing header of column labels"))?;
        let col_labels: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        let mut row_labels = Vec::new();
        let mut values = Vec::new();
        for (line_no, line) in lines {
            let mut fields = line.split(',');
            let label = fields.next().unwrap_or_default();
            let mut column = label.len() + 2;
            let mut row = Vec::new();
            for field in fields {
                let lead = field.len() - field.trim_start().len();
                let value = field.trim().parse::<FuzzyNeutroValue>().map_err(|e| match e {
                    Error::Parse { column: c, message, .. } => Error::parse(line_no, column + lead + c - 1, message),
                    other => other,
                })?;
                row.push(value);
                column += field.len() + 1;
            }
            if row.len() != col_labels.len() {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("row '{}' has {} values, header has {} labels", label.trim(), row.len(), col_labels.len()),
                ));
            }
            row_labels.push(label.trim().to_string());
            values.push(row);
        }
        FuzzyNeutroRelation::new(row_labels, col_labels, values)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.col_labels.join(", ");
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.values) {
            out.push_str(label);
            for v in row {
                out.push_str(", ");
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// `dom`, `ran` and height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomRanHeight {
    pub domain: Vec<FuzzyNeutroValue>,
    pub range: Vec<FuzzyNeutroValue>,
    pub height: FuzzyNeutroValue,
}

fn lattice_max_all<'a>(items: impl IntoIterator<Item = &'a FuzzyNeutroValue>) -> FuzzyNeutroValue {
    items.into_iter().fold(FuzzyNeutroValue::zero(), |acc, v| lattice_max(&acc, v))
}

pub fn dom_ran_height(r: &FuzzyNeutroRelation) -> DomRanHeight {
    let domain: Vec<_> = r.values.iter().map(|row| lattice_max_all(row)).collect();
    let range: Vec<_> = (0..r.cols()).map(|j| lattice_max_all(r.values.iter().map(|row| &row[j]))).collect();
    let height = lattice_max_all(&domain);
    DomRanHeight { domain, range, height }
}

/// `R⁻¹(y, x) = R(x, y)`.
pub fn inverse(r: &FuzzyNeutroRelation) -> FuzzyNeutroRelation {
    FuzzyNeutroRelation {
        row_labels: r.col_labels.clone(),
        col_labels: r.row_labels.clone(),
        values: (0..r.cols()).map(|j| r.values.iter().map(|row| row[j].clone()).collect()).collect(),
    }
}

fn check_middle(p: &FuzzyNeutroRelation, q: &FuzzyNeutroRelation) -> Result<()> {
    if p.cols() != q.rows() {
        return Err(Error::domain(format!(
            "cannot compose {}x{} with {}x{}",
            p.rows(),
            p.cols(),
            q.rows(),
            q.cols()
        )));
    }
    if p.col_labels != q.row_labels {
        return Err(Error::domain(format!(
            "middle label sets differ: [{}] vs [{}]",
            p.col_labels.join(", "),
            q.row_labels.join(", ")
        )));
    }
    Ok(())
}

/// `r_ij = max_k min(p_ik, q_kj)`.
pub fn maxmin_compose(p: &FuzzyNeutroRelation, q: &FuzzyNeutroRelation) -> Result<FuzzyNeutroRelation> {
    check_middle(p, q)?;
    Ok(compose_unchecked(p, q))
}

fn compose_unchecked(p: &FuzzyNeutroRelation, q: &FuzzyNeutroRelation) -> FuzzyNeutroRelation {
    let values = (0..p.rows())
        .map(|i| {
            (0..q.cols())
                .map(|j| {
                    (0..p.cols()).fold(FuzzyNeutroValue::zero(), |acc, k| {
                        lattice_max(&acc, &lattice_min(&p.values[i][k], &q.values[k][j]))
                    })
                })
                .collect()
        })
        .collect();
    FuzzyNeutroRelation {
        row_labels: p.row_labels.clone(),
        col_labels: q.col_labels.clone(),
        values,
    }
}

/// Ternary relation `R(x, y, z) = min(P(x, y), Q(y, z))`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinTable {
    pub x_labels: Vec<String>,
    pub y_labels: Vec<String>,
    pub z_labels: Vec<String>,
    values: Vec<FuzzyNeutroValue>,
}

impl JoinTable {
    pub fn get(&self, x: usize, y: usize, z: usize) -> &FuzzyNeutroValue {
        &self.values[(x * self.y_labels.len() + y) * self.z_labels.len() + z]
    }

    /// `max_y R(x, y, z)`, which equals the max-min composition.
    pub fn project(&self) -> FuzzyNeutroRelation {
        let values = (0..self.x_labels.len())
            .map(|x| {
                (0..self.z_labels.len())
                    .map(|z| lattice_max_all((0..self.y_labels.len()).map(|y| self.get(x, y, z))))
                    .collect()
            })
            .collect();
        FuzzyNeutroRelation {
            row_labels: self.x_labels.clone(),
            col_labels: self.z_labels.clone(),
            values,
        }
    }

    /// Triples with nonzero membership, in `(x, y, z)` order.
    pub fn support(&self) -> Vec<(usize, usize, usize, &FuzzyNeutroValue)> {
        let (ny, nz) = (self.y_labels.len(), self.z_labels.len());
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i / (ny * nz), (i / nz) % ny, i % nz, v))
            .collect()
    }
}

pub fn relational_join(p: &FuzzyNeutroRelation, q: &FuzzyNeutroRelation) -> Result<JoinTable> {
    check_middle(p, q)?;
    let mut values = Vec::with_capacity(p.rows() * p.cols() * q.cols());
    for x in 0..p.rows() {
        for y in 0..p.cols() {
            for z in 0..q.cols() {
                values.push(lattice_min(&p.values[x][y], &q.values[y][z]));
            }
        }
    }
    Ok(JoinTable {
        x_labels: p.row_labels.clone(),
        y_labels: p.col_labels.clone(),
        z_labels: q.col_labels.clone(),
        values,
    })
}

/// Entrywise [`lattice_max`] of two relations with equal shapes.
pub(crate) fn entrywise_max(a: &FuzzyNeutroRelation, b: &FuzzyNeutroRelation) -> FuzzyNeutroRelation {
    FuzzyNeutroRelation {
        values: a
            .values
            .iter()
            .zip(&b.values)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| lattice_max(x, y)).collect())
            .collect(),
        ..a.clone()
    }
}

pub(crate) fn self_compose(r: &FuzzyNeutroRelation) -> FuzzyNeutroRelation {
    compose_unchecked(r, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sagittal() -> FuzzyNeutroRelation {
        let mut r = FuzzyNeutroRelation::from_grid("I, 0, 0, 0.5; 0.3, 0, 0.4, 0; 1, 0, 0, 0.2; 0, I, 0, 0; 0, 0, 0.5, 0.7")
            .unwrap();
        r.row_labels = (1..=5).map(|i| format!("x{i}")).collect();
        r
    }

    #[test]
    fn sagittal_dom_ran_height() {
        let d = dom_ran_height(&sagittal());
        assert_eq!(d.height, FuzzyNeutroValue::one());
        assert_eq!(d.domain[0], FuzzyNeutroValue::i());
        assert_eq!(d.height, lattice_max_all(&d.range));
        let zero = FuzzyNeutroRelation::from_grid("0, 0; 0, 0").unwrap();
        assert_eq!(dom_ran_height(&zero).height, FuzzyNeutroValue::zero());
    }

    #[test]
    fn inverse_is_transpose() {
        let r = sagittal();
        let inv = inverse(&r);
        assert_eq!((inv.rows(), inv.cols()), (4, 5));
        assert_eq!(inv.get(3, 4), r.get(4, 3));
        assert_eq!(inverse(&inv), r);
    }

    #[test]
    fn hand_composition() {
        let p = FuzzyNeutroRelation::from_grid("0.2, 0.8, 0; 1, 0.1, 0.5; 0, 0.4, 0.6").unwrap();
        let mut q = FuzzyNeutroRelation::from_grid("0.9, 0.3, 0; 0.5, 1, 0.2; 0.7, 0, 0.4").unwrap();
        q.row_labels = p.col_labels.clone();
        let r = maxmin_compose(&p, &q).unwrap();
        let expected = FuzzyNeutroRelation::from_grid("0.5, 0.8, 0.2; 0.9, 0.3, 0.4; 0.6, 0.4, 0.4").unwrap();
        assert_eq!(r.values, expected.values);
        assert!(maxmin_compose(&p, &p).is_err());
    }

    #[test]
    fn join_projects_to_composition() {
        let p = FuzzyNeutroRelation::from_grid("1, 0; 0, 1; 1, 1").unwrap();
        let mut q = FuzzyNeutroRelation::from_grid("0, 1, 1; 1, 0, 0").unwrap();
        q.row_labels = p.col_labels.clone();
        let join = relational_join(&p, &q).unwrap();
        assert_eq!(join.project(), maxmin_compose(&p, &q).unwrap());
        // Crisp join lists exactly the chains x -> y -> z.
        let triples: Vec<_> = join.support().iter().map(|t| (t.0, t.1, t.2)).collect();
        assert_eq!(triples, vec![(0, 0, 1), (0, 0, 2), (1, 1, 0), (2, 0, 1), (2, 0, 2), (2, 1, 0)]);
    }

    #[test]
    fn text_round_trip() {
        let r = sagittal();
        let text = r.to_text();
        assert!(text.starts_with("y1, y2, y3, y4\nx1, I, 0, 0, 0.5\n"));
        assert_eq!(FuzzyNeutroRelation::parse(&text).unwrap(), r);
        match FuzzyNeutroRelation::parse("a, b\nx, 0.5, 7\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 9)),
            other => panic!("{other:?}"),
        }
    }
}
