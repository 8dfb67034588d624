//! Dense matrices over `Q(I)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number::{NeutroNumber, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NeutroMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NeutroNumber>,
}

impl NeutroMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<NeutroNumber>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("matrix must be at least 1x1, got {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(NeutroMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<NeutroNumber>>) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(Error::Shape(format!(
                "row {} has {} entries, expected {width}",
                i + 1,
                row.len()
            )));
        }
        NeutroMatrix::new(height, width, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer rows; handy for `{-1, 0, 1}` data.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        NeutroMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| NeutroNumber::from(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        NeutroMatrix::new(rows, cols, vec![NeutroNumber::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = NeutroMatrix::zeros(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = NeutroNumber::one();
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &NeutroNumber {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[NeutroNumber] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[NeutroNumber] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<NeutroNumber>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&NeutroNumber) -> NeutroNumber) -> NeutroMatrix {
        NeutroMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &NeutroMatrix) -> Result<NeutroMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                entries.push((0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum());
            }
        }
        NeutroMatrix::new(self.rows, rhs.cols, entries)
    }

    /// Row vector times matrix.
    pub fn left_mul_vector(&self, vector: &[NeutroNumber]) -> Result<Vec<NeutroNumber>> {
        if vector.len() != self.rows {
            return Err(Error::Shape(format!(
                "cannot multiply a length-{} vector by a {}x{} matrix",
                vector.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.cols)
            .map(|j| {
                vector
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| x * self.get(i, j))
                    .sum()
            })
            .collect())
    }

    pub fn transpose(&self) -> NeutroMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        NeutroMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The two rational component matrices `(A|I=0, A|I=1)`.
    pub fn split(&self) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let mut first = Vec::with_capacity(self.rows);
        let mut second = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let pairs: Vec<_> = self.row(r).iter().map(NeutroNumber::split).collect();
            first.push(pairs.iter().map(|p| p.first.clone()).collect());
            second.push(pairs.into_iter().map(|p| p.second).collect());
        }
        (first, second)
    }

    pub fn unsplit(first: &[Vec<Rational>], second: &[Vec<Rational>]) -> Result<NeutroMatrix> {
        if first.len() != second.len() || first.iter().zip(second).any(|(a, b)| a.len() != b.len()) {
            return Err(Error::Shape("split components differ in shape".into()));
        }
        NeutroMatrix::from_rows(
            first
                .iter()
                .zip(second)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| crate::number::SplitPair::new(x.clone(), y.clone()).unsplit())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> RankReport {
        let (first, second) = self.split();
        let rank_first = rational_rank(first);
        let rank_second = rational_rank(second);
        let invertible = self.is_square() && rank_first == self.rows && rank_second == self.rows;
        RankReport {
            rank_first,
            rank_second,
            invertible,
        }
    }

    /// Parses the comma/newline matrix text format. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_text(text: &str) -> Result<NeutroMatrix> {
        let mut rows = Vec::new();
        for (index, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            let mut column = 1;
            for field in line.split(',') {
                let value = field.parse::<NeutroNumber>().map_err(|e| match e {
                    Error::Parse { column: c, message, .. } => Error::Parse {
                        line: index + 1,
                        column: column + c - 1,
                        message,
                    },
                    other => other,
                })?;
                row.push(value);
                column += field.len() + 1;
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse(1, 1, "matrix has no rows"));
        }
        NeutroMatrix::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(", "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for NeutroMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank_first: usize,
    pub rank_second: usize,
    pub invertible: bool,
}

/// Rank by exact Gauss-Jordan elimination.
pub fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_value = rows[rank][col].clone();
        for r in 0..height {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot_value;
            for c in col..width {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == height {
            break;
        }
    }
    rank
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    /// Scalars from the ordinary field `K`.
    OrdinaryField,
    /// Scalars from `K(I)` itself (strong dimension).
    NeutrosophicField,
}

/// Dimension of `K(I)^n` over the chosen scalars.
pub fn neutro_dimension(n: usize, base: Base) -> Result<usize> {
    if n == 0 {
        return Err(Error::domain("dimension is defined for n >= 1"));
    }
    Ok(match base {
        Base::NeutrosophicField => n,
        Base::OrdinaryField => 2 * n,
    })
}
