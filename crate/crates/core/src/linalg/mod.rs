//! Dense exact matrices: determinant, rank, maximal-minor selection and
//! linear solving.

pub mod kernels;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix over an exact field, with optional axis labels.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

/// Which side of a full-rank matrix a maximal minor is chosen from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// All rows kept; choose a set of columns (the matrix must be onto).
    Cols,
    /// All columns kept; choose a set of rows (the matrix must be into).
    Rows,
}

/// A non-zero maximal minor: sorted index sets of equal size and its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSelection<E> {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub minor_value: E,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix { field, rows, cols, data, row_labels: None, col_labels: None })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        ExactMatrix { field, rows, cols, data, row_labels: None, col_labels: None }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: F, rows: &[&[i64]]) -> Result<Self> {
        let conv = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, conv)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        check_labels(&row_labels, self.rows, "row")?;
        check_labels(&col_labels, self.cols, "column")?;
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` to entry `(i, j)`.
    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// Submatrix on the given row and column index lists, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        let pick = |labels: &Option<Vec<String>>, idx: &[usize]| {
            labels.as_ref().map(|l| idx.iter().map(|&i| l[i].clone()).collect())
        };
        ExactMatrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: cols.len(),
            data,
            row_labels: pick(&self.row_labels, rows),
            col_labels: pick(&self.col_labels, cols),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.get(k, j));
                    out.add_at(i, j, &t);
                }
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<F::Elem> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(self.field.det_kernel(self.data.clone(), self.rows))
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    /// Pivot columns under the first-nonzero rule: the lexicographically
    /// first maximal set of independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Vec::new();
        }
        self.field
            .pivot_columns_kernel(self.data.clone(), self.rows, self.cols)
    }

    /// Chooses a non-zero maximal minor by greedy pivot scan. For
    /// [`Axis::Cols`] every row is kept and the matrix must have full row
    /// rank; for [`Axis::Rows`] every column is kept and it must have full
    /// column rank.
    pub fn select_nonzero_maximal_minor(&self, axis: Axis) -> Result<MinorSelection<F::Elem>> {
        match axis {
            Axis::Cols => {
                let pivots = self.pivot_columns();
                if pivots.len() < self.rows {
                    return Err(Error::NotFullRank);
                }
                let rows: Vec<usize> = (0..self.rows).collect();
                let minor_value = self.submatrix(&rows, &pivots).det()?;
                Ok(MinorSelection { row_indices: rows, col_indices: pivots, minor_value })
            }
            Axis::Rows => {
                let t = self.transpose();
                let sel = t.select_nonzero_maximal_minor(Axis::Cols)?;
                Ok(MinorSelection {
                    row_indices: sel.col_indices,
                    col_indices: sel.row_indices,
                    minor_value: sel.minor_value,
                })
            }
        }
    }

    /// Solves `self * X = rhs` for every column of `rhs`, returning one
    /// particular solution (free variables set to zero), or `None` if some
    /// column is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        if rhs.rows != self.rows {
            return Err(Error::Shape("right-hand side row count mismatch".into()));
        }
        let f = &self.field;
        let width = self.cols + rhs.cols;
        let mut aug = Vec::with_capacity(self.rows * width);
        for i in 0..self.rows {
            aug.extend_from_slice(self.row(i));
            aug.extend_from_slice(rhs.row(i));
        }
        let pivots = kernels::gauss_jordan(f, &mut aug, self.rows, width);
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(f.clone(), self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, aug[r * width + self.cols + j].clone());
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Ok(None);
        }
        self.solve(&Self::identity(self.field.clone(), self.rows))
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length mismatch".into()));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }
}

fn check_labels(labels: &[String], len: usize, axis: &str) -> Result<()> {
    if labels.len() != len {
        return Err(Error::Shape(format!("{} {axis} labels for {len} {axis}s", labels.len())));
    }
    let mut seen = HashSet::with_capacity(len);
    if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(Error::Shape(format!("duplicate {axis} label `{dup}`")));
    }
    Ok(())
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(fm, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
