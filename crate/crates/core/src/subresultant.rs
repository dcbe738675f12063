//! Multivariate subresultants as determinants of modified Koszul complexes.

use crate::complex::{det_complex_ascending, DecompositionTrace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::series_coefficient;
use crate::koszul::{build_complex, MonomialSet};
use crate::poly::{HomogeneousSystem, Monomial, PolySystem};
use crate::resultant::resultant_macaulay;

/// A specialized subresultant value. `exact` is false when the cardinality
/// of `S` is wrong or the complex has no decomposition; the value is then 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SubresultantValue<E> {
    pub value: E,
    pub t: u32,
    pub removed: Vec<Monomial>,
    pub exact: bool,
    pub trace: Option<DecompositionTrace<E>>,
}

/// Subresultant of `removed` with respect to `forms` (n forms in any number
/// of variables) at degree `t`.
pub fn subresultant_of_forms<F: Field>(
    forms: &HomogeneousSystem<F>,
    t: u32,
    removed: &[Monomial],
) -> Result<SubresultantValue<F::Elem>> {
    let f = forms.field();
    let mut sorted = removed.to_vec();
    sorted.sort();
    let expected = series_coefficient(forms.degrees(), forms.nvars(), t);
    if expected != removed.len() as i128 {
        for m in removed {
            if m.nvars() != forms.nvars() || m.degree() != t {
                return Err(Error::Input(format!("{m} is not a degree-{t} monomial in {} variables", forms.nvars())));
            }
        }
        return Ok(SubresultantValue { value: f.zero(), t, removed: sorted, exact: false, trace: None });
    }
    let complex = build_complex(forms, forms.len(), t, removed)?;
    Ok(match det_complex_ascending(&complex) {
        Ok(trace) => SubresultantValue { value: trace.value.clone(), t, removed: sorted, exact: true, trace: Some(trace) },
        Err(_) => SubresultantValue { value: f.zero(), t, removed: sorted, exact: false, trace: None },
    })
}

/// `Delta^t_S` for the homogenized system, `S` in `x0..xn` of degree `t`.
pub fn subresultant_delta<F: Field>(
    sys: &PolySystem<F>,
    t: u32,
    removed: &[Monomial],
) -> Result<SubresultantValue<F::Elem>> {
    subresultant_of_forms(&sys.homogenize(), t, removed)
}

/// `D^t_S` for forms in `x1..xn`, `S` of degree `t`.
#[allow(non_snake_case)]
pub fn subresultant_D<F: Field>(
    leading_forms: &HomogeneousSystem<F>,
    t: u32,
    removed: &[Monomial],
) -> Result<SubresultantValue<F::Elem>> {
    if leading_forms.nvars() != leading_forms.len() {
        return Err(Error::Shape("expected n forms in n variables".into()));
    }
    subresultant_of_forms(leading_forms, t, removed)
}

/// `Delta^delta_{M_delta}` where `delta = delta(M)`.
pub fn delta_of_set<F: Field>(sys: &PolySystem<F>, set: &MonomialSet) -> Result<SubresultantValue<F::Elem>> {
    let delta = set.delta();
    subresultant_delta(sys, delta, &set.homogenize_to(delta)?)
}

/// Both sides of `Delta^t_{M_t} = Delta^delta_{M_delta} Res^{t - delta}`.
pub fn delta_shift_check<F: Field>(sys: &PolySystem<F>, set: &MonomialSet, t: u32) -> Result<(F::Elem, F::Elem)> {
    let delta = set.delta();
    if t < delta {
        return Err(Error::Input(format!("degree {t} is below delta = {delta}")));
    }
    let f = sys.field();
    let lhs = subresultant_delta(sys, t, &set.homogenize_to(t)?)?.value;
    let base = subresultant_delta(sys, delta, &set.homogenize_to(delta)?)?.value;
    let res = resultant_macaulay(&sys.leading_forms())?;
    let rhs = f.mul(&base, &f.pow(&res, (t - delta) as u64));
    Ok((lhs, rhs))
}
