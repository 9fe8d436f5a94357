//! Small dense matrices of polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational, Var};

/// Dense `rows x cols` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<MultiPoly>>,
    cols: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows: vec![vec![MultiPoly::zero(); cols]; rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = MultiPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        Matrix {
            rows: (0..rows)
                .map(|r| (0..cols).map(|c| f(r, c)).collect())
                .collect(),
            cols,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.rows[r][c] = v;
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.n_rows(), "dimension mismatch");
        Matrix::from_fn(self.n_rows(), other.cols, |r, c| {
            (0..self.cols)
                .filter(|&j| !self.rows[r][j].is_zero() && !other.rows[j][c].is_zero())
                .map(|j| &self.rows[r][j] * &other.rows[j][c])
                .sum()
        })
    }

    pub fn mul_vec(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        assert!(v.len() >= self.cols, "vector too short");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Top-left `n x m` block.
    pub fn block(&self, n: usize, m: usize) -> Matrix {
        Matrix::from_fn(n, m, |r, c| self.rows[r][c].clone())
    }

    /// Drops the first row.
    pub fn without_top_row(&self) -> Matrix {
        Matrix {
            rows: self.rows[1..].to_vec(),
            cols: self.cols,
        }
    }

    pub fn map(&self, mut f: impl FnMut(&MultiPoly) -> MultiPoly) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
            cols: self.cols,
        }
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Matrix {
        self.map(|p| p.substitute_rational(v, value))
    }

    /// Inverse of a square lower-triangular matrix with unit diagonal, by
    /// forward substitution.
    pub fn unit_lower_inverse(&self) -> Result<Matrix> {
        let n = self.n_rows();
        assert_eq!(n, self.cols, "matrix must be square");
        for i in 0..n {
            if !self.rows[i][i].is_one() {
                return Err(Error::InsufficientData(format!(
                    "diagonal entry ({i}, {i}) is `{}`, expected 1",
                    self.rows[i][i]
                )));
            }
            if let Some(c) = (i + 1..n).find(|&c| !self.rows[i][c].is_zero()) {
                return Err(Error::InsufficientData(format!(
                    "entry ({i}, {c}) above the diagonal is nonzero"
                )));
            }
        }
        let mut inv = Matrix::identity(n);
        for r in 0..n {
            for c in 0..r {
                let s: MultiPoly = (c..r)
                    .filter(|&j| !self.rows[r][j].is_zero())
                    .map(|j| &self.rows[r][j] * &inv.rows[j][c])
                    .sum();
                inv.rows[r][c] = -s;
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n_rows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {}", render_row(row))?;
        }
        write!(f, "]")
    }
}

/// Lower-triangular array; row `r` stores columns `0..=r`.
#[derive(Clone, PartialEq, Eq)]
pub struct TriMatrix {
    rows: Vec<Vec<MultiPoly>>,
}

impl TriMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Self {
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), r + 1, "row {r} must hold {} entries", r + 1);
        }
        TriMatrix { rows }
    }

    pub fn from_fn(n_rows: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        TriMatrix {
            rows: (0..n_rows)
                .map(|r| (0..=r).map(|c| f(r, c)).collect())
                .collect(),
        }
    }

    /// Reads the lower triangle of a square matrix.
    pub fn from_matrix(m: &Matrix) -> Self {
        TriMatrix::from_fn(m.n_rows(), |r, c| m.get(r, c).clone())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(r, c)`; zero above the diagonal.
    pub fn get(&self, r: usize, c: usize) -> MultiPoly {
        if c > r {
            MultiPoly::zero()
        } else {
            self.rows[r][c].clone()
        }
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> Vec<MultiPoly> {
        (c..self.n_rows())
            .map(|r| self.rows[r][c].clone())
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.n_rows();
        Matrix::from_fn(n, n, |r, c| self.get(r, c))
    }

    pub fn map(&self, mut f: impl FnMut(&MultiPoly) -> MultiPoly) -> TriMatrix {
        TriMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
        }
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> TriMatrix {
        self.map(|p| p.substitute_rational(v, value))
    }

    pub fn truncate(&self, n_rows: usize) -> TriMatrix {
        TriMatrix {
            rows: self.rows[..n_rows].to_vec(),
        }
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TriMatrix {} rows [", self.n_rows())?;
        for row in &self.rows {
            writeln!(f, "  {}", render_row(row))?;
        }
        write!(f, "]")
    }
}

/// Renders one entry so that a space-separated row stays unambiguous:
/// multi-term polynomials are parenthesized.
pub fn render_entry(p: &MultiPoly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

pub fn render_row(row: &[MultiPoly]) -> String {
    row.iter().map(render_entry).collect::<Vec<_>>().join(" ")
}
