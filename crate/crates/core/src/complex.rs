//! Determinant of an exact complex of finite-dimensional vector spaces.
//!
//! A complex `0 -> C_s -> ... -> C_1 -> C_0 -> 0` is given by the matrices
//! of its differentials (`d_k` has rows `C_{k-1}` and columns `C_k`). Both
//! decompositions split every term into the part hit by the incoming map and
//! a complement, choosing non-zero maximal minors greedily. The determinant is
//! `prod_k det(phi_k)^{(-1)^{k-1}}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::koszul::GradedComplex;
use crate::linalg::{Axis, ExactMatrix, MinorSelection};

/// Read access to a bounded complex of matrices.
pub trait ChainComplex<F: Field> {
    fn field(&self) -> &F;
    /// Number of differentials `s`.
    fn length(&self) -> usize;
    fn dim(&self, k: usize) -> usize;
    /// Matrix of `d_k`, `1 <= k <= length`.
    fn map(&self, k: usize) -> &ExactMatrix<F>;
}

impl<F: Field> ChainComplex<F> for GradedComplex<F> {
    fn field(&self) -> &F {
        GradedComplex::field(self)
    }

    fn length(&self) -> usize {
        self.s()
    }

    fn dim(&self, k: usize) -> usize {
        self.term(k).len()
    }

    fn map(&self, k: usize) -> &ExactMatrix<F> {
        &self.differentials()[k - 1]
    }
}

/// A complex given directly by its differential matrices.
#[derive(Clone, Debug)]
pub struct MatrixComplex<F: Field> {
    field: F,
    dims: Vec<usize>,
    maps: Vec<ExactMatrix<F>>,
}

impl<F: Field> MatrixComplex<F> {
    /// `maps[k - 1]` is `d_k`; shapes must chain.
    pub fn new(field: F, maps: Vec<ExactMatrix<F>>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Shape("a complex needs at least one differential".into()));
        }
        let mut dims = vec![maps[0].rows()];
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != dims[k] {
                return Err(Error::Shape(format!("d_{} has {} rows, expected {}", k + 1, m.rows(), dims[k])));
            }
            dims.push(m.cols());
        }
        Ok(MatrixComplex { field, dims, maps })
    }
}

impl<F: Field> ChainComplex<F> for MatrixComplex<F> {
    fn field(&self) -> &F {
        &self.field
    }

    fn length(&self) -> usize {
        self.maps.len()
    }

    fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    fn map(&self, k: usize) -> &ExactMatrix<F> {
        &self.maps[k - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Ascending,
    Descending,
}

/// The non-zero minor chosen for `d_k`, in indices of `C_{k-1}` and `C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage<E> {
    pub k: usize,
    pub selection: MinorSelection<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTrace<E> {
    pub method: Decomposition,
    pub stages: Vec<Stage<E>>,
    pub value: E,
}

/// The complex has no decomposition: the rank condition fails at `d_k`
/// (`k = 0` when a leftover block in `C_0` or `C_s` remains).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotExact {
    pub k: usize,
}

impl fmt::Display for NotExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex is not exact at d_{}", self.k)
    }
}

impl std::error::Error for NotExact {}

pub fn det_complex_ascending<F: Field, C: ChainComplex<F>>(c: &C) -> Result<DecompositionTrace<F::Elem>, NotExact> {
    let s = c.length();
    let mut rows: Vec<usize> = (0..c.dim(0)).collect();
    let mut stages = Vec::with_capacity(s);
    for k in 1..=s {
        let all_cols: Vec<usize> = (0..c.dim(k)).collect();
        let sel = choose(c, k, &rows, &all_cols, Axis::Cols)?;
        rows = complement(c.dim(k), &sel.col_indices);
        stages.push(Stage { k, selection: sel });
    }
    if !rows.is_empty() {
        return Err(NotExact { k: s });
    }
    Ok(finish(c.field(), Decomposition::Ascending, stages))
}

pub fn det_complex_descending<F: Field, C: ChainComplex<F>>(c: &C) -> Result<DecompositionTrace<F::Elem>, NotExact> {
    let s = c.length();
    let mut cols: Vec<usize> = (0..c.dim(s)).collect();
    let mut stages = Vec::with_capacity(s);
    for k in (1..=s).rev() {
        let all_rows: Vec<usize> = (0..c.dim(k - 1)).collect();
        let sel = choose(c, k, &all_rows, &cols, Axis::Rows)?;
        cols = complement(c.dim(k - 1), &sel.row_indices);
        stages.push(Stage { k, selection: sel });
    }
    if !cols.is_empty() {
        return Err(NotExact { k: 0 });
    }
    stages.reverse();
    Ok(finish(c.field(), Decomposition::Descending, stages))
}

/// Non-zero maximal minor of `d_k` restricted to `rows x cols`, reported in
/// indices of the full matrix.
fn choose<F: Field, C: ChainComplex<F>>(
    c: &C,
    k: usize,
    rows: &[usize],
    cols: &[usize],
    axis: Axis,
) -> Result<MinorSelection<F::Elem>, NotExact> {
    let sub = c.map(k).submatrix(rows, cols);
    let sel = sub.select_nonzero_maximal_minor(axis).map_err(|_| NotExact { k })?;
    Ok(MinorSelection {
        row_indices: sel.row_indices.iter().map(|&i| rows[i]).collect(),
        col_indices: sel.col_indices.iter().map(|&j| cols[j]).collect(),
        minor_value: sel.minor_value,
    })
}

fn complement(n: usize, chosen: &[usize]) -> Vec<usize> {
    let mut mask = vec![true; n];
    for &i in chosen {
        mask[i] = false;
    }
    (0..n).filter(|&i| mask[i]).collect()
}

fn finish<F: Field>(f: &F, method: Decomposition, stages: Vec<Stage<F::Elem>>) -> DecompositionTrace<F::Elem> {
    let mut num = f.one();
    let mut den = f.one();
    for st in &stages {
        if st.k % 2 == 1 {
            num = f.mul(&num, &st.selection.minor_value);
        } else {
            den = f.mul(&den, &st.selection.minor_value);
        }
    }
    let value = f.div(&num, &den).expect("stage minors are non-zero");
    DecompositionTrace { method, stages, value }
}

/// Determinant by the ascending decomposition, `None` when not exact.
pub fn det_complex<F: Field, C: ChainComplex<F>>(c: &C) -> Option<F::Elem> {
    det_complex_ascending(c).ok().map(|t| t.value)
}
