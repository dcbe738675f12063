//! Hilbert functions of complete intersections.

use crate::error::{Error, Result};

/// Degrees `d_1..d_n` of a square system with derived `rho` and Bezout number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeProfile {
    degrees: Vec<u32>,
}

impl DegreeProfile {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Input("degree profile needs n >= 1".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Input("degrees must be positive".into()));
        }
        Ok(DegreeProfile { degrees })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `sum d_i - n`.
    pub fn rho(&self) -> u32 {
        self.degrees.iter().map(|d| d - 1).sum()
    }

    /// `prod d_i`.
    pub fn bezout(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    pub fn min_degree(&self) -> u32 {
        *self.degrees.iter().min().unwrap()
    }

    pub fn max_degree(&self) -> u32 {
        *self.degrees.iter().max().unwrap()
    }

    /// Hilbert function in `n + 1` variables.
    pub fn hilbert_h_projective(&self, tau: u32) -> u64 {
        series_coefficient(&self.degrees, self.n() + 1, tau) as u64
    }

    /// Hilbert function in `n` variables.
    pub fn hilbert_h_affine(&self, tau: u32) -> u64 {
        series_coefficient(&self.degrees, self.n(), tau) as u64
    }
}

/// Coefficient of `T^tau` in `prod (1 - T^{d_j}) / (1 - T)^nvars`.
///
/// May be negative when there are more forms than variables.
pub fn series_coefficient(degrees: &[u32], nvars: usize, tau: u32) -> i128 {
    let len = tau as usize + 1;
    let mut c = vec![0i128; len];
    c[0] = 1;
    for &d in degrees {
        let d = d as usize;
        for k in (d..len).rev() {
            c[k] -= c[k - d];
        }
    }
    for _ in 0..nvars {
        for k in 1..len {
            c[k] += c[k - 1];
        }
    }
    c[tau as usize]
}

/// `H(tau)`: coefficient of `T^tau` in `prod (1 - T^{d_j}) / (1 - T)^{n+1}`.
#[allow(non_snake_case)]
pub fn hilbert_H(profile: &DegreeProfile, tau: i64) -> Result<u64> {
    let tau = check_tau(tau)?;
    Ok(profile.hilbert_h_projective(tau))
}

/// `h(tau)`: coefficient of `T^tau` in `prod (1 - T^{d_j}) / (1 - T)^n`.
pub fn hilbert_h(profile: &DegreeProfile, tau: i64) -> Result<u64> {
    let tau = check_tau(tau)?;
    Ok(profile.hilbert_h_affine(tau))
}

fn check_tau(tau: i64) -> Result<u32> {
    u32::try_from(tau).map_err(|_| Error::Input(format!("degree {tau} out of range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::binomial;

    fn profiles(max_n: usize, max_d: u32) -> Vec<DegreeProfile> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(out: &mut Vec<DegreeProfile>, cur: &mut Vec<u32>, max_n: usize, max_d: u32) {
            if !cur.is_empty() {
                out.push(DegreeProfile::new(cur.clone()).unwrap());
            }
            if cur.len() == max_n {
                return;
            }
            for d in 1..=max_d {
                cur.push(d);
                rec(out, cur, max_n, max_d);
                cur.pop();
            }
        }
        rec(&mut out, &mut cur, max_n, max_d);
        out
    }

    /// Counts monomials of degree `tau` in `nvars` variables outside the
    /// ideal generated by `x_i^{d_i}` (a regular sequence with the same
    /// Hilbert function).
    fn standard_monomials(degrees: &[u32], nvars: usize, tau: u32) -> u64 {
        crate::poly::monomials_of_degree(nvars, tau)
            .iter()
            .filter(|m| {
                let e = m.exponents();
                degrees.iter().enumerate().all(|(i, &d)| e[nvars - degrees.len() + i] < d)
            })
            .count() as u64
    }

    #[test]
    fn quadrics_in_three_variables() {
        let p = DegreeProfile::new(vec![2, 2, 2]).unwrap();
        assert_eq!(p.rho(), 3);
        assert_eq!(p.bezout(), 8);
        assert_eq!(hilbert_H(&p, 2).unwrap(), 7);
        assert_eq!(hilbert_H(&p, 3).unwrap(), 8);
        assert_eq!((0..4).map(|t| hilbert_h(&p, t).unwrap()).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn small_profiles() {
        let p = DegreeProfile::new(vec![2, 2]).unwrap();
        assert_eq!((0..4).map(|t| hilbert_h(&p, t).unwrap()).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
        let p = DegreeProfile::new(vec![4, 4]).unwrap();
        assert_eq!(p.rho(), 6);
        assert_eq!(hilbert_h(&p, 5).unwrap(), 2);
        assert_eq!(hilbert_h(&p, 6).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(DegreeProfile::new(vec![]).is_err());
        assert!(DegreeProfile::new(vec![2, 0]).is_err());
        let p = DegreeProfile::new(vec![2]).unwrap();
        assert!(hilbert_H(&p, -1).is_err());
        assert!(hilbert_h(&p, -1).is_err());
    }

    #[test]
    fn matches_standard_monomial_count() {
        for p in profiles(3, 4) {
            let n = p.n();
            for tau in 0..=p.rho() + 3 {
                assert_eq!(p.hilbert_h_projective(tau), standard_monomials(p.degrees(), n + 1, tau), "{p:?} {tau}");
                assert_eq!(p.hilbert_h_affine(tau), standard_monomials(p.degrees(), n, tau), "{p:?} {tau}");
            }
        }
    }

    #[test]
    fn structural_identities() {
        for p in profiles(3, 4) {
            let rho = p.rho();
            let d = p.bezout();
            let mut acc = 0;
            for tau in 0..=rho + 3 {
                acc += p.hilbert_h_affine(tau);
                assert_eq!(p.hilbert_h_projective(tau), acc);
                if tau < rho {
                    assert!(p.hilbert_h_projective(tau) < d);
                } else {
                    assert_eq!(p.hilbert_h_projective(tau), d);
                }
                if tau > rho {
                    assert_eq!(p.hilbert_h_affine(tau), 0);
                }
            }
            assert_eq!(p.hilbert_h_affine(rho), 1);
            assert_eq!((0..=rho).map(|t| p.hilbert_h_affine(t)).sum::<u64>(), d);
        }
    }

    #[test]
    fn no_forms_gives_binomials() {
        for n in 1..5 {
            for t in 0..6 {
                assert_eq!(series_coefficient(&[], n, t) as u64, binomial((t as usize + n - 1) as u64, n as u64 - 1));
            }
        }
    }
}
