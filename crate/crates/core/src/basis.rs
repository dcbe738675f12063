//! Certification of monomial bases of `K[x1..xn]/(f1..fn)`, the rank oracle,
//! factorization of the certificate, generalized Vandermonde identities and
//! multiplication matrices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::DegreeProfile;
use crate::koszul::MonomialSet;
use crate::linalg::ExactMatrix;
use crate::poly::{monomials_of_degree, HomogeneousSystem, Monomial, MultiPoly, PolySystem};
use crate::resultant::{classical_subresultants, dehomogenize_binary, full_macaulay_matrix, resultant_macaulay};
use crate::subresultant::{delta_of_set, subresultant_D};

pub fn profile_of<F: Field>(sys: &PolySystem<F>) -> DegreeProfile {
    DegreeProfile::new(sys.degrees().to_vec()).expect("systems have positive degrees")
}

/// True when `delta(M) < rho`, in which case `M` cannot be a basis.
pub fn degree_bound_reject(set: &MonomialSet, profile: &DegreeProfile) -> bool {
    set.delta() < profile.rho()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Basis,
    NotBasis,
}

impl Verdict {
    pub fn is_basis(self) -> bool {
        self == Verdict::Basis
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisCertificate<E> {
    /// Resultant of the leading forms.
    pub res_value: E,
    /// `Delta^delta_{M_delta}` of the homogenized system.
    pub delta_value: E,
    pub t_used: u32,
    pub product: E,
    pub verdict: Verdict,
}

/// Decides whether `set` is a basis of the quotient algebra: the resultant of
/// the leading forms and the subresultant of `M_delta` must both be non-zero.
pub fn certify_basis<F: Field>(sys: &PolySystem<F>, set: &MonomialSet) -> Result<BasisCertificate<F::Elem>> {
    let f = sys.field();
    set.check_cardinality(&profile_of(sys))?;
    let res_value = resultant_macaulay(&sys.leading_forms())?;
    let delta_value = delta_of_set(sys, set)?.value;
    let product = f.mul(&res_value, &delta_value);
    let verdict = if f.is_zero(&product) { Verdict::NotBasis } else { Verdict::Basis };
    Ok(BasisCertificate { res_value, delta_value, t_used: set.delta(), product, verdict })
}

/// Rows of the full degree-`t` multiples matrix followed by unit rows for
/// the monomials in `extra`.
fn stacked<F: Field>(forms: &HomogeneousSystem<F>, t: u32, extra: &[Monomial]) -> Result<(ExactMatrix<F>, ExactMatrix<F>)> {
    let f = forms.field();
    let j = full_macaulay_matrix(forms, t)?;
    let all = monomials_of_degree(forms.nvars(), t);
    let mut rows: Vec<Vec<F::Elem>> = (0..j.rows()).map(|i| j.row(i).to_vec()).collect();
    for m in extra {
        rows.push(all.iter().map(|c| if c == m { f.one() } else { f.zero() }).collect());
    }
    let both = if rows.is_empty() {
        ExactMatrix::zeros(f.clone(), 0, all.len())
    } else {
        ExactMatrix::from_rows(f.clone(), rows)?
    };
    Ok((j, both))
}

/// Independent basis test by plain ranks at `t = max(delta, rho)`: the
/// multiples of the homogenized forms have codimension `d` and together with
/// `M_t` span every degree-`t` monomial.
pub fn rank_oracle<F: Field>(sys: &PolySystem<F>, set: &MonomialSet) -> Result<bool> {
    let profile = profile_of(sys);
    set.check_cardinality(&profile)?;
    let f = sys.field();
    if f.is_zero(&resultant_macaulay(&sys.leading_forms())?) {
        return Ok(false);
    }
    let t = set.delta().max(profile.rho());
    let homog = sys.homogenize();
    let (j, both) = stacked(&homog, t, &set.homogenize_to(t)?)?;
    let dim = both.cols();
    Ok(j.rank() as u64 == dim as u64 - profile.bezout() && both.rank() == dim)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport<E> {
    pub applicable: bool,
    /// `(t, D^t_{M(t)})` for `t = min d_i ..= rho`.
    pub factors: Vec<(u32, E)>,
    pub product: Option<E>,
}

/// Splits the certificate into `n`-variable subresultants of the leading
/// forms, one per degree, when `#M(t) = h(t)` for every `t <= rho`.
pub fn factorize_delta<F: Field>(leading_forms: &HomogeneousSystem<F>, set: &MonomialSet) -> Result<FactorizationReport<F::Elem>> {
    let n = leading_forms.len();
    if leading_forms.nvars() != n || set.nvars() != n {
        return Err(Error::Shape("expected n leading forms and monomials in n variables".into()));
    }
    let profile = DegreeProfile::new(leading_forms.degrees().to_vec())?;
    let rho = profile.rho();
    let applicable = set.monomials().iter().all(|m| m.degree() <= rho)
        && (0..=rho).all(|t| set.of_degree(t).len() as u64 == profile.hilbert_h_affine(t));
    if !applicable {
        return Ok(FactorizationReport { applicable, factors: Vec::new(), product: None });
    }
    let f = leading_forms.field();
    let mut factors = Vec::new();
    let mut product = f.one();
    for t in profile.min_degree()..=rho {
        let v = subresultant_D(leading_forms, t, &set.of_degree(t))?.value;
        product = f.mul(&product, &v);
        factors.push((t, v));
    }
    Ok(FactorizationReport { applicable, factors, product: Some(product) })
}

/// `E_n = sum_j d_1..d_{j-1} (d_j - 1) d_j / 2 d_{j+1}..d_n`.
pub fn sign_exponent(profile: &DegreeProfile) -> u128 {
    let d = profile.degrees();
    (0..d.len())
        .map(|j| {
            let others: u128 = d.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x as u128).product();
            others * (d[j] as u128 * (d[j] as u128 - 1) / 2)
        })
        .sum()
}

/// `(-1)^{E_n}`.
pub fn sign_constant(profile: &DegreeProfile) -> i32 {
    if sign_exponent(profile).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub struct VandermondeReport<F: Field> {
    pub roots: Vec<Vec<F::Elem>>,
    pub matrix: ExactMatrix<F>,
    pub det_m: F::Elem,
    pub jacobian_product: F::Elem,
    pub delta_value: F::Elem,
    pub res_value: F::Elem,
    /// `2 delta - rho + 1`.
    pub res_exponent: i64,
    pub sign_constant: i32,
    /// Sign closing `det^2 Res^e = s J Delta^2`, if either does.
    pub closing_sign: Option<i32>,
    /// `lhs - s rhs` for the closing sign, or `lhs - rhs` when none closes.
    pub identity_residual: F::Elem,
    /// For `M = M^0`: whether the identity holds with `s = (-1)^{E_n}`.
    pub constant_holds: Option<bool>,
}

/// Checks `det(M(M))^2 Res^{2 delta - rho + 1} = +/- J (Delta^delta)^2` from
/// supplied simple roots, and for `M^0` the exact sign `(-1)^{E_n}`.
pub fn vandermonde_verify<F: Field>(
    sys: &PolySystem<F>,
    roots: &[Vec<F::Elem>],
    set: &MonomialSet,
) -> Result<VandermondeReport<F>> {
    let f = sys.field();
    let profile = profile_of(sys);
    set.check_cardinality(&profile)?;
    if roots.len() as u64 != profile.bezout() {
        return Err(Error::Input(format!("expected {} roots, got {}", profile.bezout(), roots.len())));
    }
    let mut seen = HashSet::with_capacity(roots.len());
    for r in roots {
        if !sys.is_root(r)? {
            let pt: Vec<String> = r.iter().map(|x| f.format(x)).collect();
            return Err(Error::Input(format!("({}) is not a common zero", pt.join(", "))));
        }
        if !seen.insert(r.clone()) {
            return Err(Error::Input("roots must be distinct".into()));
        }
    }
    let res_value = resultant_macaulay(&sys.leading_forms())?;
    if f.is_zero(&res_value) {
        return Err(Error::Undefined("the leading forms have a common zero".into()));
    }
    let rows: Vec<Vec<F::Elem>> = roots
        .iter()
        .map(|r| set.monomials().iter().map(|m| m.evaluate(f, r)).collect())
        .collect();
    let matrix = ExactMatrix::from_rows(f.clone(), rows)?;
    let det_m = matrix.det()?;
    let jac = sys.jacobian();
    let mut jacobian_product = f.one();
    for r in roots {
        jacobian_product = f.mul(&jacobian_product, &jac.evaluate(r)?);
    }
    let delta_value = delta_of_set(sys, set)?.value;
    let res_exponent = 2 * set.delta() as i64 - profile.rho() as i64 + 1;
    let mut lhs = f.mul(&det_m, &det_m);
    let mut rhs = f.mul(&jacobian_product, &f.mul(&delta_value, &delta_value));
    if res_exponent >= 0 {
        lhs = f.mul(&lhs, &f.pow(&res_value, res_exponent as u64));
    } else {
        rhs = f.mul(&rhs, &f.pow(&res_value, (-res_exponent) as u64));
    }
    let plus = f.sub(&lhs, &rhs);
    let minus = f.add(&lhs, &rhs);
    let c = sign_constant(&profile);
    let c_closes = f.is_zero(if c == 1 { &plus } else { &minus });
    let (closing_sign, identity_residual) = if f.is_zero(&plus) {
        (Some(1), plus)
    } else if f.is_zero(&minus) {
        (Some(-1), minus)
    } else {
        (None, plus)
    };
    // d distinct monomials inside the box are the whole box
    let is_m0 = set
        .monomials()
        .iter()
        .all(|m| m.exponents().iter().zip(profile.degrees()).all(|(e, d)| e < d));
    let constant_holds = is_m0.then_some(c_closes);
    Ok(VandermondeReport {
        roots: roots.to_vec(),
        matrix,
        det_m,
        jacobian_product,
        delta_value,
        res_value,
        res_exponent,
        sign_constant: c,
        closing_sign,
        identity_residual,
        constant_holds,
    })
}

/// Closed form for `Upsilon` with `det(M(M^1))^2 = Upsilon J` in two
/// variables: `c (R_1..R_{d1-1})^2 c1^{(d2-d1)(d2-d1+1)} / Res^{rho+1}`, where
/// `R_k` are the classical subresultants of the dehomogenized leading forms
/// and `c1` is the `x1^{d1}` coefficient of the first leading form.
pub fn upsilon_bivariate<F: Field>(sys: &PolySystem<F>) -> Result<F::Elem> {
    if sys.n() != 2 {
        return Err(Error::Shape("upsilon is defined for two polynomials in two variables".into()));
    }
    let (d1, d2) = (sys.degrees()[0], sys.degrees()[1]);
    if d1 > d2 {
        return Err(Error::Input(format!("need d1 <= d2, got ({d1}, {d2})")));
    }
    let f = sys.field();
    let lead = sys.leading_forms();
    let res = resultant_macaulay(&lead)?;
    if f.is_zero(&res) {
        return Err(Error::Undefined("resultant of the leading forms vanishes".into()));
    }
    let p = dehomogenize_binary(&lead.forms()[0])?;
    let q = dehomogenize_binary(&lead.forms()[1])?;
    let seq = classical_subresultants(&p, &q, d1, d2)?;
    let r_prod = seq.values.iter().fold(f.one(), |acc, r| f.mul(&acc, r));
    let c1 = lead.forms()[0].coeff(&Monomial::new(vec![d1, 0]));
    let e = ((d2 - d1) * (d2 - d1 + 1)) as u64;
    let rho = d1 + d2 - 2;
    let num = f.mul(&f.mul(&r_prod, &r_prod), &f.pow(&c1, e));
    let mut value = f.div(&num, &f.pow(&res, (rho + 1) as u64)).expect("non-zero resultant");
    if sign_constant(&profile_of(sys)) == -1 {
        value = f.neg(&value);
    }
    Ok(value)
}

#[derive(Clone, Debug)]
pub struct MultiplicationMatrix<F: Field> {
    /// Column `j` holds the coordinates of `m_j g` in the basis.
    pub b: ExactMatrix<F>,
    pub g: MultiPoly<F>,
    pub kernel_dim: usize,
}

/// Matrix of `p -> p g` on the quotient algebra in a certified basis `set`,
/// by solving the homogeneous degree-`T` linear system with
/// `T = max(delta, rho, delta + deg g)`.
pub fn multiplication_matrix<F: Field>(sys: &PolySystem<F>, set: &MonomialSet, g: &MultiPoly<F>) -> Result<MultiplicationMatrix<F>> {
    let f = sys.field();
    let profile = profile_of(sys);
    set.check_cardinality(&profile)?;
    if g.nvars() != sys.n() {
        return Err(Error::Shape("g must live in the system's variables".into()));
    }
    let cert = certify_basis(sys, set)?;
    if !cert.verdict.is_basis() {
        return Err(Error::Input("the monomial set is not a basis for this system".into()));
    }
    let delta = set.delta();
    let t = delta.max(profile.rho()).max(delta + g.degree().unwrap_or(0));
    let all = monomials_of_degree(sys.n() + 1, t);
    let index: std::collections::HashMap<&Monomial, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = set.len();
    let homog = sys.homogenize();
    let j = full_macaulay_matrix(&homog, t)?;
    // columns: M_t then the multiples
    let mut a = ExactMatrix::zeros(f.clone(), all.len(), d + j.rows());
    for (k, m) in set.homogenize_to(t)?.iter().enumerate() {
        a.set(index[m], k, f.one());
    }
    for r in 0..j.rows() {
        for c in 0..j.cols() {
            a.set(c, d + r, j.get(r, c).clone());
        }
    }
    let mut rhs = ExactMatrix::zeros(f.clone(), all.len(), d);
    for (col, m) in set.monomials().iter().enumerate() {
        let p = g.mul_term(m, &f.one()).homogenize(t)?;
        for (mono, c) in p.terms() {
            rhs.set(index[mono], col, c.clone());
        }
    }
    let sol = a
        .solve(&rhs)?
        .ok_or_else(|| Error::Internal("reduction system inconsistent for a certified basis".into()))?;
    let rows: Vec<usize> = (0..d).collect();
    let cols: Vec<usize> = (0..d).collect();
    let b = sol.submatrix(&rows, &cols);
    let kernel_dim = d - b.rank();
    Ok(MultiplicationMatrix { b, g: g.clone(), kernel_dim })
}
