//! Monomials, sparse multivariate polynomials and polynomial systems.
//!
//! Monomials are ordered graded-lexicographically with `x0 < x1 < ... < xn`:
//! first by total degree, then by comparing exponents from the last variable
//! down. Every deterministic enumeration in the crate uses this order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Exponent vector `x^a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if divisible.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Prepends `x0^k`.
    pub fn lift(&self, k: u32) -> Monomial {
        let mut e = Vec::with_capacity(self.0.len() + 1);
        e.push(k);
        e.extend_from_slice(&self.0);
        Monomial(e)
    }

    /// Drops the `x0` exponent.
    pub fn drop_first(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }

    pub fn evaluate<F: Field>(&self, f: &F, point: &[F::Elem]) -> F::Elem {
        self.0
            .iter()
            .zip(point)
            .fold(f.one(), |acc, (&e, x)| f.mul(&acc, &f.pow(x, e as u64)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    /// Variables print as `x0, x1, ...` by position.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Formats a monomial in `n` affine variables as `x1..xn`.
pub fn format_affine(m: &Monomial) -> String {
    m.lift(0).to_string()
}

/// All monomials of total degree `deg` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, deg);
    out.sort();
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, rem: u32) {
    if i + 1 == cur.len() {
        cur[i] = rem;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in 0..=rem {
        cur[i] = e;
        fill(out, cur, i + 1, rem - e);
    }
}

/// All monomials of degree at most `deg`, ascending.
pub fn monomials_up_to_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    (0..=deg).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn monomial(field: F, m: Monomial, c: F::Elem) -> Self {
        let mut p = Self::zero(field, m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        let one = field.one();
        Self::monomial(field, Monomial::var(nvars, i), one)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms(field: F, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, F::Elem)>) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Shape(format!(
                    "monomial with {} exponents in a {nvars}-variable ring",
                    e.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Small-integer constructor, mostly for tests and examples.
    pub fn from_i64_terms(field: F, nvars: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        let conv: Vec<_> = terms.iter().map(|(e, c)| (e.to_vec(), field.from_i64(*c))).collect();
        Self::from_terms(field, nvars, conv)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = self.field.add(v, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f.clone(), self.nvars);
        }
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), f.mul(v, c))).collect(),
        }
    }

    /// Product with `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        if f.is_zero(c) {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.mul(m), f.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), f.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.field.clone(), self.nvars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree-`d` homogeneous component, possibly zero.
    pub fn leading_form(&self, d: u32) -> Self {
        MultiPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogenizes to degree `declared_degree` with a new variable `x0` at
    /// index 0. The zero polynomial stays zero.
    pub fn homogenize(&self, declared_degree: u32) -> Result<Self> {
        if let Some(actual) = self.degree() {
            if actual > declared_degree {
                return Err(Error::Degree { declared: declared_degree, actual });
            }
        }
        Ok(MultiPoly {
            field: self.field.clone(),
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.lift(declared_degree - m.degree()), c.clone()))
                .collect(),
        })
    }

    /// Sets `x0 = 1` and drops it.
    pub fn dehomogenize(&self) -> Result<Self> {
        if self.nvars == 0 {
            return Err(Error::Shape("no variable to dehomogenize".into()));
        }
        let mut out = Self::zero(self.field.clone(), self.nvars - 1);
        for (m, c) in &self.terms {
            out.add_term(m.drop_first(), c.clone());
        }
        Ok(out)
    }

    /// Sets `x0 = 0` and drops it.
    pub fn restrict_x0_zero(&self) -> Result<Self> {
        if self.nvars == 0 {
            return Err(Error::Shape("no variable to restrict".into()));
        }
        let mut out = Self::zero(self.field.clone(), self.nvars - 1);
        for (m, c) in self.terms.iter().filter(|(m, _)| m.exponents()[0] == 0) {
            out.add_term(m.drop_first(), c.clone());
        }
        Ok(out)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial(exps), f.mul(c, &f.from_i64(e as i64)));
        }
        out
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::Shape(format!(
                "point of length {} for a {}-variable polynomial",
                point.len(),
                self.nvars
            )));
        }
        let f = &self.field;
        let max_exp = self.terms.keys().flat_map(|m| m.exponents().iter().copied()).max().unwrap_or(0);
        // powers[i][e] = point[i]^e
        let powers: Vec<Vec<F::Elem>> = point
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(max_exp as usize + 1);
                row.push(f.one());
                for e in 1..=max_exp as usize {
                    row.push(f.mul(&row[e - 1], x));
                }
                row
            })
            .collect();
        Ok(self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .enumerate()
                .fold(c.clone(), |v, (i, &e)| f.mul(&v, &powers[i][e as usize]));
            f.add(&acc, &v)
        }))
    }

    /// Substitutes `x_i -> subs[i]` (polynomials in a common ring).
    pub fn compose(&self, subs: &[MultiPoly<F>]) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::Shape("substitution length mismatch".into()));
        }
        let target = subs.first().map_or(0, |p| p.nvars);
        let mut cache: Vec<Vec<MultiPoly<F>>> = subs
            .iter()
            .map(|p| vec![MultiPoly::constant(self.field.clone(), target, self.field.one()), p.clone()])
            .collect();
        let mut out = Self::zero(self.field.clone(), target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(self.field.clone(), target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul(&subs[i]);
                    cache[i].push(next);
                }
                term = term.mul(&cache[i][e as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Text form in the variables `x<offset>, x<offset+1>, ...`.
    pub fn format_with_offset(&self, offset: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.field;
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + offset)
                    } else {
                        format!("x{}^{e}", i + offset)
                    }
                })
                .collect();
            let mut coeff = f.format(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            match (mono.is_empty(), coeff == "1") {
                (true, _) => s.push_str(&coeff),
                (false, true) => s.push_str(&mono.join("*")),
                (false, false) => {
                    s.push_str(&coeff);
                    s.push('*');
                    s.push_str(&mono.join("*"));
                }
            }
        }
        s
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_offset(0))
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion.
fn poly_det<F: Field>(rows: &[Vec<MultiPoly<F>>], field: &F, nvars: usize) -> MultiPoly<F> {
    let n = rows.len();
    if n == 0 {
        return MultiPoly::constant(field.clone(), nvars, field.one());
    }
    let mut acc = MultiPoly::zero(field.clone(), nvars);
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly<F>>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = rows[0][j].mul(&poly_det(&minor, field, nvars));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `n` affine polynomials in `n` variables with declared degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem<F: Field> {
    field: F,
    polys: Vec<MultiPoly<F>>,
    degrees: Vec<u32>,
}

impl<F: Field> PolySystem<F> {
    pub fn new(polys: Vec<MultiPoly<F>>, degrees: Vec<u32>) -> Result<Self> {
        let n = polys.len();
        if n == 0 {
            return Err(Error::Shape("empty system".into()));
        }
        if degrees.len() != n {
            return Err(Error::Shape(format!("{n} polynomials but {} declared degrees", degrees.len())));
        }
        let field = polys[0].field.clone();
        for (p, &d) in polys.iter().zip(&degrees) {
            if p.nvars != n {
                return Err(Error::Shape(format!(
                    "system of {n} polynomials must live in {n} variables, found {}",
                    p.nvars
                )));
            }
            if d == 0 {
                return Err(Error::Input("declared degrees must be positive".into()));
            }
            if p.field != field {
                return Err(Error::Shape("polynomials over different fields".into()));
            }
            if let Some(actual) = p.degree() {
                if actual > d {
                    return Err(Error::Degree { declared: d, actual });
                }
            }
        }
        Ok(PolySystem { field, polys, degrees })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[MultiPoly<F>] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `f_i^0`: each polynomial homogenized to its declared degree.
    pub fn homogenize(&self) -> HomogeneousSystem<F> {
        let forms = self
            .polys
            .iter()
            .zip(&self.degrees)
            .map(|(p, &d)| p.homogenize(d).expect("checked at construction"))
            .collect();
        HomogeneousSystem { field: self.field.clone(), nvars: self.n() + 1, forms, degrees: self.degrees.clone() }
    }

    /// `f_{i d_i}`: the declared-degree components, as forms in `n` variables.
    pub fn leading_forms(&self) -> HomogeneousSystem<F> {
        let forms = self.polys.iter().zip(&self.degrees).map(|(p, &d)| p.leading_form(d)).collect();
        HomogeneousSystem { field: self.field.clone(), nvars: self.n(), forms, degrees: self.degrees.clone() }
    }

    pub fn jacobian(&self) -> MultiPoly<F> {
        let n = self.n();
        let rows: Vec<Vec<MultiPoly<F>>> = self
            .polys
            .iter()
            .map(|p| (0..n).map(|j| p.derivative(j)).collect())
            .collect();
        poly_det(&rows, &self.field, n)
    }

    /// Common zero test.
    pub fn is_root(&self, point: &[F::Elem]) -> Result<bool> {
        for p in &self.polys {
            if !self.field.is_zero(&p.evaluate(point)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Replaces the polynomials while keeping declared degrees.
    pub fn map_polys(&self, f: impl Fn(&MultiPoly<F>) -> MultiPoly<F>) -> Result<Self> {
        PolySystem::new(self.polys.iter().map(f).collect(), self.degrees.clone())
    }
}

/// Jacobian determinant of an arbitrary square family (checked shape).
pub fn jacobian<F: Field>(polys: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
    let n = polys.len();
    let Some(first) = polys.first() else {
        return Err(Error::Shape("empty family".into()));
    };
    if polys.iter().any(|p| p.nvars != n) {
        return Err(Error::Shape(format!(
            "jacobian needs {n} polynomials in {n} variables"
        )));
    }
    let rows: Vec<Vec<MultiPoly<F>>> = polys.iter().map(|p| (0..n).map(|j| p.derivative(j)).collect()).collect();
    Ok(poly_det(&rows, first.field(), n))
}

/// Homogeneous forms with declared degrees in an arbitrary number of
/// variables: the homogenized system (`n + 1` variables) or the leading
/// forms (`n` variables).
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousSystem<F: Field> {
    field: F,
    nvars: usize,
    forms: Vec<MultiPoly<F>>,
    degrees: Vec<u32>,
}

impl<F: Field> HomogeneousSystem<F> {
    pub fn new(field: F, nvars: usize, forms: Vec<MultiPoly<F>>, degrees: Vec<u32>) -> Result<Self> {
        if forms.len() != degrees.len() {
            return Err(Error::Shape("form count does not match degree count".into()));
        }
        for (p, &d) in forms.iter().zip(&degrees) {
            if p.nvars != nvars {
                return Err(Error::Shape(format!("form in {} variables, expected {nvars}", p.nvars)));
            }
            if p.terms.keys().any(|m| m.degree() != d) {
                return Err(Error::Input(format!("form is not homogeneous of degree {d}")));
            }
        }
        Ok(HomogeneousSystem { field, nvars, forms, degrees })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn forms(&self) -> &[MultiPoly<F>] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Views forms in `n` variables as an affine system (used to lift a
    /// leading-form system back to a full system).
    pub fn as_affine_system(&self) -> Result<PolySystem<F>> {
        PolySystem::new(self.forms.clone(), self.degrees.clone())
    }

    /// Permutes the variables: new variable `i` is old variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        let forms = self
            .forms
            .iter()
            .map(|p| {
                let mut out = MultiPoly::zero(self.field.clone(), self.nvars);
                for (m, c) in &p.terms {
                    let e = perm.iter().map(|&old| m.exponents()[old]).collect();
                    out.add_term(Monomial(e), c.clone());
                }
                out
            })
            .collect();
        HomogeneousSystem { field: self.field.clone(), nvars: self.nvars, forms, degrees: self.degrees.clone() }
    }
}
