#![allow(dead_code)]

use monobasis_core::poly::{monomials_of_degree, monomials_up_to_degree};
use monobasis_core::{Field, HomogeneousSystem, MultiPoly, PolySystem};
use rand::Rng;

pub fn random_poly<F: Field, R: Rng>(f: &F, rng: &mut R, nvars: usize, d: u32) -> MultiPoly<F> {
    let terms: Vec<_> = monomials_up_to_degree(nvars, d)
        .into_iter()
        .map(|m| (m.exponents().to_vec(), f.random(rng)))
        .collect();
    MultiPoly::from_terms(f.clone(), nvars, terms).unwrap()
}

pub fn random_form<F: Field, R: Rng>(f: &F, rng: &mut R, nvars: usize, d: u32) -> MultiPoly<F> {
    let terms: Vec<_> = monomials_of_degree(nvars, d)
        .into_iter()
        .map(|m| (m.exponents().to_vec(), f.random(rng)))
        .collect();
    MultiPoly::from_terms(f.clone(), nvars, terms).unwrap()
}

/// Dense polynomials of the declared degrees.
pub fn random_system<F: Field, R: Rng>(f: &F, rng: &mut R, degrees: &[u32]) -> PolySystem<F> {
    let n = degrees.len();
    let polys = degrees.iter().map(|&d| random_poly(f, rng, n, d)).collect();
    PolySystem::new(polys, degrees.to_vec()).unwrap()
}

/// Homogeneous forms in `nvars` variables.
pub fn random_forms<F: Field, R: Rng>(f: &F, rng: &mut R, nvars: usize, degrees: &[u32]) -> HomogeneousSystem<F> {
    let forms = degrees.iter().map(|&d| random_form(f, rng, nvars, d)).collect();
    HomogeneousSystem::new(f.clone(), nvars, forms, degrees.to_vec()).unwrap()
}

/// Replaces every term below the declared degree with fresh random values.
pub fn rerandomize_lower<F: Field, R: Rng>(sys: &PolySystem<F>, rng: &mut R) -> PolySystem<F> {
    let f = sys.field();
    let n = sys.n();
    let polys = sys
        .polys()
        .iter()
        .zip(sys.degrees())
        .map(|(p, &d)| {
            let lower = if d == 0 { MultiPoly::zero(f.clone(), n) } else { random_poly(f, rng, n, d - 1) };
            p.leading_form(d).add(&lower)
        })
        .collect();
    PolySystem::new(polys, sys.degrees().to_vec()).unwrap()
}

/// Every degree vector with `1 <= n <= max_n` and entries in `1..=max_d`.
pub fn profiles(max_n: usize, max_d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_n {
        let mut next = Vec::new();
        for p in &frontier {
            for d in 1..=max_d {
                let mut q = p.clone();
                q.push(d);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn equal_up_to_sign<F: Field>(f: &F, a: &F::Elem, b: &F::Elem) -> bool {
    a == b || *a == f.neg(b)
}
