//! Macaulay matrices and resultants, Sylvester matrices and classical
//! univariate subresultants.
//!
//! Forms `f_1..f_n` live in `N >= n` variables; the variables restricted by
//! the Macaulay row conditions are the last `n` ones (`x_1..x_n` when an
//! extra homogenizing variable `x_0` is present).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::ExactMatrix;
use crate::poly::{monomials_of_degree, HomogeneousSystem, Monomial, MultiPoly};

/// Row and column indexing of a degree-`t` Macaulay matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayLayout {
    pub t: u32,
    pub nvars: usize,
    /// Rows `(i, a)` standing for `x^a f_i`.
    pub rows: Vec<(usize, Monomial)>,
    /// Columns: the degree-`t` monomials not deleted, ascending.
    pub columns: Vec<Monomial>,
    pub deleted: Vec<Monomial>,
}

impl MacaulayLayout {
    /// Rows restricted by `a_{j} < d_j` for `j < i` (over the last `n`
    /// variables), sorted by the monomial `x^a x_i^{d_i}`.
    pub fn restricted(nvars: usize, degrees: &[u32], t: u32, deleted: &[Monomial]) -> Result<Self> {
        Self::build(nvars, degrees, t, deleted, true)
    }

    /// All degree-`t` multiples `x^a f_i`.
    pub fn full(nvars: usize, degrees: &[u32], t: u32) -> Result<Self> {
        Self::build(nvars, degrees, t, &[], false)
    }

    fn build(nvars: usize, degrees: &[u32], t: u32, deleted: &[Monomial], restrict: bool) -> Result<Self> {
        let n = degrees.len();
        if n > nvars {
            return Err(Error::Shape(format!("{n} forms in only {nvars} variables")));
        }
        let offset = nvars - n;
        let mut rows = Vec::new();
        for (i, &d) in degrees.iter().enumerate() {
            if d > t {
                continue;
            }
            for a in monomials_of_degree(nvars, t - d) {
                if restrict && (0..i).any(|j| a.exponents()[offset + j] >= degrees[j]) {
                    continue;
                }
                rows.push((i, a));
            }
        }
        let key = |(i, a): &(usize, Monomial)| {
            let mut e = a.exponents().to_vec();
            e[offset + i] += degrees[*i];
            (Monomial::new(e), *i)
        };
        rows.sort_by_cached_key(key);
        let all = monomials_of_degree(nvars, t);
        let mut del = Vec::with_capacity(deleted.len());
        for m in deleted {
            if m.nvars() != nvars || m.degree() != t {
                return Err(Error::Input(format!("deleted monomial {m} is not of degree {t} in {nvars} variables")));
            }
            if del.contains(m) {
                return Err(Error::Input(format!("monomial {m} deleted twice")));
            }
            del.push(m.clone());
        }
        del.sort();
        let columns = all.into_iter().filter(|m| del.binary_search(m).is_err()).collect();
        Ok(MacaulayLayout { t, nvars, rows, columns, deleted: del })
    }

    pub fn matrix<F: Field>(&self, forms: &HomogeneousSystem<F>) -> Result<ExactMatrix<F>> {
        let f = forms.field();
        let col_index: HashMap<&Monomial, usize> = self.columns.iter().enumerate().map(|(j, m)| (m, j)).collect();
        let mut mat = ExactMatrix::zeros(f.clone(), self.rows.len(), self.columns.len());
        for (r, (i, a)) in self.rows.iter().enumerate() {
            for (m, c) in forms.forms()[*i].terms() {
                if let Some(&col) = col_index.get(&a.mul(m)) {
                    mat.set(r, col, c.clone());
                }
            }
        }
        let row_labels = self.rows.iter().map(|(i, a)| format!("{a}*f{}", i + 1)).collect();
        let col_labels = self.columns.iter().map(ToString::to_string).collect();
        mat.with_labels(row_labels, col_labels)
    }
}

/// `{x^a : |a| = t, a_i < d_i}` over the last `n` variables.
pub fn reduced_monomials(nvars: usize, degrees: &[u32], t: u32) -> Vec<Monomial> {
    let offset = nvars - degrees.len();
    monomials_of_degree(nvars, t)
        .into_iter()
        .filter(|m| degrees.iter().enumerate().all(|(j, &d)| m.exponents()[offset + j] < d))
        .collect()
}

/// The matrices `M` (columns of `deleted` removed) and `M'` (reduced
/// monomials removed) of the restricted degree-`t` map `(p_i) -> sum p_i f_i`.
pub fn macaulay_matrices<F: Field>(
    forms: &HomogeneousSystem<F>,
    t: u32,
    deleted: &[Monomial],
) -> Result<(ExactMatrix<F>, ExactMatrix<F>)> {
    if let Some(&d) = forms.degrees().iter().max() {
        if t < d {
            return Err(Error::Input(format!("degree {t} is below the largest form degree {d}")));
        }
    }
    let layout = MacaulayLayout::restricted(forms.nvars(), forms.degrees(), t, deleted)?;
    if layout.rows.len() != layout.columns.len() {
        return Err(Error::Shape(format!(
            "{} rows but {} columns after deleting {} monomials",
            layout.rows.len(),
            layout.columns.len(),
            deleted.len()
        )));
    }
    let m = layout.matrix(forms)?;
    let reduced = reduced_monomials(forms.nvars(), forms.degrees(), t);
    let layout2 = MacaulayLayout::restricted(forms.nvars(), forms.degrees(), t, &reduced)?;
    let m2 = layout2.matrix(forms)?;
    Ok((m, m2))
}

/// Matrix of all degree-`t` multiples `x^a f_i` (rows) against all degree-`t`
/// monomials (columns).
pub fn full_macaulay_matrix<F: Field>(forms: &HomogeneousSystem<F>, t: u32) -> Result<ExactMatrix<F>> {
    MacaulayLayout::full(forms.nvars(), forms.degrees(), t)?.matrix(forms)
}

/// Resultant of `n` forms in `n` variables, normalized by
/// `Res(x_1^{d_1}, ..., x_n^{d_n}) = 1`.
pub fn resultant_macaulay<F: Field>(forms: &HomogeneousSystem<F>) -> Result<F::Elem> {
    let n = forms.len();
    if n == 0 || forms.nvars() != n {
        return Err(Error::Shape(format!("resultant needs n forms in n variables, got {n} in {}", forms.nvars())));
    }
    let f = forms.field();
    let bezout: u64 = forms.degrees().iter().map(|&d| d as u64).product();
    for perm in variable_orders(n) {
        let permuted = forms.permute_variables(&perm);
        if let Some(v) = macaulay_quotient(&permuted)? {
            // Res(f(Px)) = det(P)^{d_1...d_n} Res(f)
            return Ok(if permutation_is_odd(&perm) && bezout % 2 == 1 { f.neg(&v) } else { v });
        }
    }
    let t: u32 = forms.degrees().iter().map(|d| d - 1).sum::<u32>() + 1;
    let full = full_macaulay_matrix(forms, t)?;
    if full.rank() < full.cols() {
        Ok(f.zero())
    } else {
        Err(Error::EvaluationDegenerate)
    }
}

/// `det(D) / det(D')` at degree `rho + 1`, `None` when `D'` is singular.
fn macaulay_quotient<F: Field>(forms: &HomogeneousSystem<F>) -> Result<Option<F::Elem>> {
    let f = forms.field();
    let degrees = forms.degrees();
    let t: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
    let layout = MacaulayLayout::restricted(forms.nvars(), degrees, t, &[])?;
    let d = layout.matrix(forms)?;
    let extraneous: Vec<usize> = layout
        .columns
        .iter()
        .enumerate()
        .filter(|(_, m)| m.exponents().iter().zip(degrees).filter(|(e, d)| e >= d).count() >= 2)
        .map(|(j, _)| j)
        .collect();
    let den = d.submatrix(&extraneous, &extraneous).det()?;
    if f.is_zero(&den) {
        return Ok(None);
    }
    let num = d.det()?;
    Ok(Some(f.div(&num, &den).expect("non-zero denominator")))
}

/// Identity, cyclic shifts, then their reversals.
fn variable_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(2 * n);
    for shift in 0..n {
        out.push((0..n).map(|i| (i + shift) % n).collect::<Vec<_>>());
    }
    for shift in 0..n {
        out.push((0..n).rev().map(|i| (i + shift) % n).collect());
    }
    out.dedup();
    out
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Coefficients `c_0..c_d` of a univariate polynomial of formal degree `d`.
pub fn univariate_coefficients<F: Field>(p: &MultiPoly<F>, d: u32) -> Result<Vec<F::Elem>> {
    if p.nvars() != 1 {
        return Err(Error::Shape(format!("expected a univariate polynomial, got {} variables", p.nvars())));
    }
    if let Some(actual) = p.degree() {
        if actual > d {
            return Err(Error::Degree { declared: d, actual });
        }
    }
    Ok((0..=d).map(|k| p.coeff(&Monomial::new(vec![k]))).collect())
}

/// `F(x, 1)` for a binary form `F(x1, x2)`.
pub fn dehomogenize_binary<F: Field>(form: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    if form.nvars() != 2 {
        return Err(Error::Shape("expected a binary form".into()));
    }
    let mut out = MultiPoly::zero(form.field().clone(), 1);
    for (m, c) in form.terms() {
        out.add_term(Monomial::new(vec![m.exponents()[0]]), c.clone());
    }
    Ok(out)
}

/// Rows `x^j f` (`j < d2 - k`) then `x^j g` (`j < d1 - k`), highest shift
/// first; columns are the powers `d1 + d2 - k - 1` down to `k`.
pub fn subresultant_matrix<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    d1: u32,
    d2: u32,
    k: u32,
) -> Result<ExactMatrix<F>> {
    if k > d1.min(d2) {
        return Err(Error::Input(format!("subresultant index {k} exceeds min({d1}, {d2})")));
    }
    let field = f.field();
    let cf = univariate_coefficients(f, d1)?;
    let cg = univariate_coefficients(g, d2)?;
    let size = (d1 + d2 - 2 * k) as usize;
    let top = d1 + d2 - k - 1;
    let mut mat = ExactMatrix::zeros(field.clone(), size, size);
    let mut r = 0;
    for (coeffs, shifts) in [(&cf, d2 - k), (&cg, d1 - k)] {
        for j in (0..shifts).rev() {
            for (e, c) in coeffs.iter().enumerate() {
                let power = e as u32 + j;
                if power < k || power > top {
                    continue;
                }
                mat.set(r, (top - power) as usize, c.clone());
            }
            r += 1;
        }
    }
    Ok(mat)
}

pub fn sylvester_matrix<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, d1: u32, d2: u32) -> Result<ExactMatrix<F>> {
    subresultant_matrix(f, g, d1, d2, 0)
}

/// Determinant of the Sylvester matrix of univariate `f`, `g` at formal
/// degrees `d1`, `d2`.
pub fn sylvester_resultant<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, d1: u32, d2: u32) -> Result<F::Elem> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::Input("declared degrees must be at least 1".into()));
    }
    sylvester_matrix(f, g, d1, d2)?.det()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalSubresultantSequence<E> {
    /// `values[k - 1] = R_k` for `k = 1..d1 - 1`.
    pub values: Vec<E>,
}

impl<E> ClassicalSubresultantSequence<E> {
    pub fn get(&self, k: usize) -> Option<&E> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }
}

/// Principal subresultant coefficients `R_1..R_{d1-1}` for `d1 <= d2`.
pub fn classical_subresultants<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    d1: u32,
    d2: u32,
) -> Result<ClassicalSubresultantSequence<F::Elem>> {
    if d1 == 0 || d1 > d2 {
        return Err(Error::Input(format!("need 1 <= d1 <= d2, got ({d1}, {d2})")));
    }
    let values = (1..d1).map(|k| subresultant_matrix(f, g, d1, d2, k)?.det()).collect::<Result<_>>()?;
    Ok(ClassicalSubresultantSequence { values })
}
