//! Degree-`t` Koszul complexes with the target modified by a monomial set,
//! and candidate monomial sets.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::DegreeProfile;
use crate::linalg::ExactMatrix;
use crate::poly::{monomials_of_degree, HomogeneousSystem, Monomial};

/// `x^a e_{i1} ^ ... ^ e_{ik}`; wedge indices are zero-based positions in
/// the form list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasisElement {
    pub monomial: Monomial,
    pub wedge_indices: Vec<usize>,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.monomial)?;
        if !self.wedge_indices.is_empty() {
            let w: Vec<String> = self.wedge_indices.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, " {}", w.join("^"))?;
        }
        Ok(())
    }
}

/// `0 -> C_s -> ... -> C_1 -> A<M_t \ S> -> 0` with explicit bases.
#[derive(Clone, Debug)]
pub struct GradedComplex<F: Field> {
    field: F,
    nvars: usize,
    t: u32,
    /// `terms[k]` is the basis `B_k`; `terms[0]` is `M_t \ S`.
    terms: Vec<Vec<BasisElement>>,
    /// `differentials[k - 1]` is the matrix of `d_k : C_k -> C_{k-1}`.
    differentials: Vec<ExactMatrix<F>>,
    removed: Vec<Monomial>,
}

impl<F: Field> GradedComplex<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn s(&self) -> usize {
        self.differentials.len()
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn term(&self, k: usize) -> &[BasisElement] {
        &self.terms[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    pub fn removed(&self) -> &[Monomial] {
        &self.removed
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    pub fn differentials(&self) -> &[ExactMatrix<F>] {
        &self.differentials
    }

    /// Matrix of `d_k` (rows `B_{k-1}`, columns `B_k`), `1 <= k <= s`.
    pub fn differential_matrix(&self, k: usize) -> Result<&ExactMatrix<F>> {
        if k == 0 || k > self.s() {
            return Err(Error::Input(format!("differential index {k} outside 1..={}", self.s())));
        }
        Ok(&self.differentials[k - 1])
    }
}

/// Builds the degree-`t` Koszul complex of the first `s` forms, with the
/// monomials of `removed` dropped from the degree-`t` target.
pub fn build_complex<F: Field>(
    forms: &HomogeneousSystem<F>,
    s: usize,
    t: u32,
    removed: &[Monomial],
) -> Result<GradedComplex<F>> {
    let nvars = forms.nvars();
    if s > forms.len() {
        return Err(Error::Input(format!("s = {s} exceeds the {} available forms", forms.len())));
    }
    if s > nvars {
        return Err(Error::Input(format!("s = {s} exceeds the {nvars} variables")));
    }
    let mut removed_set = HashSet::with_capacity(removed.len());
    for m in removed {
        if m.nvars() != nvars || m.degree() != t {
            return Err(Error::Input(format!("{m} is not a degree-{t} monomial in {nvars} variables")));
        }
        if !removed_set.insert(m.clone()) {
            return Err(Error::Input(format!("monomial {m} listed twice")));
        }
    }
    let degrees = &forms.degrees()[..s];
    let field = forms.field().clone();

    let mut terms: Vec<Vec<BasisElement>> = Vec::with_capacity(s + 1);
    for k in 0..=s {
        let mut basis = Vec::new();
        for wedge in subsets(s, k) {
            let used: u32 = wedge.iter().map(|&i| degrees[i]).sum();
            if used > t {
                continue;
            }
            for m in monomials_of_degree(nvars, t - used) {
                if k == 0 && removed_set.contains(&m) {
                    continue;
                }
                basis.push(BasisElement { monomial: m, wedge_indices: wedge.clone() });
            }
        }
        terms.push(basis);
    }

    let labels: Vec<Vec<String>> = terms.iter().map(|b| b.iter().map(ToString::to_string).collect()).collect();
    let mut differentials = Vec::with_capacity(s);
    for k in 1..=s {
        let index: HashMap<&BasisElement, usize> = terms[k - 1].iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut mat = ExactMatrix::zeros(field.clone(), terms[k - 1].len(), terms[k].len());
        for (col, elem) in terms[k].iter().enumerate() {
            for (j, &i) in elem.wedge_indices.iter().enumerate() {
                let mut rest = elem.wedge_indices.clone();
                rest.remove(j);
                for (m, c) in forms.forms()[i].terms() {
                    let target = BasisElement { monomial: elem.monomial.mul(m), wedge_indices: rest.clone() };
                    let Some(&row) = index.get(&target) else {
                        // only monomials of the removed set are missing
                        continue;
                    };
                    let v = if j % 2 == 0 { c.clone() } else { field.neg(c) };
                    mat.add_at(row, col, &v);
                }
            }
        }
        differentials.push(mat.with_labels(labels[k - 1].clone(), labels[k].clone())?);
    }

    let mut removed_sorted = removed.to_vec();
    removed_sorted.sort();
    Ok(GradedComplex { field, nvars, t, terms, differentials, removed: removed_sorted })
}

/// `k`-subsets of `0..s` in lexicographic order.
pub fn subsets(s: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, s: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..s {
            if s - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(out, cur, i + 1, s, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, s, k);
    out
}

/// A list of distinct monomials in the affine variables `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    nvars: usize,
    monomials: Vec<Monomial>,
}

impl MonomialSet {
    pub fn new(nvars: usize, monomials: Vec<Monomial>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(monomials.len());
        for m in &monomials {
            if m.nvars() != nvars {
                return Err(Error::Shape(format!("monomial {m} is not in {nvars} variables")));
            }
            if !seen.insert(m) {
                return Err(Error::Input(format!("monomial {} listed twice", crate::poly::format_affine(m))));
            }
        }
        Ok(MonomialSet { nvars, monomials })
    }

    /// `{x^a : a_i < d_i}`, in increasing monomial order.
    pub fn macaulay_box(profile: &DegreeProfile) -> Self {
        let n = profile.n();
        let mut monomials: Vec<Monomial> = (0..=profile.rho())
            .flat_map(|t| monomials_of_degree(n, t))
            .filter(|m| m.exponents().iter().zip(profile.degrees()).all(|(e, d)| e < d))
            .collect();
        monomials.sort();
        MonomialSet { nvars: n, monomials }
    }

    /// `{x1^a x2^b : a < d1, b <= d1 + d2 - 2a - 2}` for `d1 <= d2`.
    pub fn bivariate_staircase(d1: u32, d2: u32) -> Result<Self> {
        if d1 == 0 || d1 > d2 {
            return Err(Error::Input(format!("staircase needs 1 <= d1 <= d2, got ({d1}, {d2})")));
        }
        let mut monomials = Vec::new();
        for a in 0..d1 {
            for b in 0..=(d1 + d2 - 2 * a - 2) {
                monomials.push(Monomial::new(vec![a, b]));
            }
        }
        monomials.sort();
        Ok(MonomialSet { nvars: 2, monomials })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Maximal degree; 0 for the empty set.
    pub fn delta(&self) -> u32 {
        self.monomials.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn of_degree(&self, t: u32) -> Vec<Monomial> {
        self.monomials.iter().filter(|m| m.degree() == t).cloned().collect()
    }

    /// `{m x0^{t - deg m}}`.
    pub fn homogenize_to(&self, t: u32) -> Result<Vec<Monomial>> {
        self.monomials
            .iter()
            .map(|m| {
                let d = m.degree();
                if d > t {
                    Err(Error::Degree { declared: t, actual: d })
                } else {
                    Ok(m.lift(t - d))
                }
            })
            .collect()
    }

    pub fn check_cardinality(&self, profile: &DegreeProfile) -> Result<()> {
        if self.nvars != profile.n() {
            return Err(Error::Shape(format!(
                "monomials in {} variables for a system in {}",
                self.nvars,
                profile.n()
            )));
        }
        if self.len() as u64 != profile.bezout() {
            return Err(Error::Input(format!(
                "a basis candidate needs {} monomials, got {}",
                profile.bezout(),
                self.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.monomials.iter().map(crate::poly::format_affine).collect();
        write!(f, "{}", s.join(","))
    }
}
