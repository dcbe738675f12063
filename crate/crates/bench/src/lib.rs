//! Deterministic inputs shared by the benchmarks.

use monobasis_core::poly::monomials_up_to_degree;
use monobasis_core::{ExactMatrix, Field, MultiPoly, PolySystem, PrimeField, Rationals};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn prime_field() -> PrimeField {
    PrimeField::new(1_000_000_007).unwrap()
}

pub fn random_matrix<F: Field>(f: &F, n: usize, seed: u64) -> ExactMatrix<F> {
    let mut rng = StdRng::seed_from_u64(seed);
    let rows = (0..n).map(|_| (0..n).map(|_| f.random(&mut rng)).collect()).collect();
    ExactMatrix::from_rows(f.clone(), rows).unwrap()
}

/// Small signed integers, so Bareiss growth rather than input size dominates.
pub fn integer_matrix(n: usize, seed: u64) -> ExactMatrix<Rationals> {
    let q = Rationals;
    let mut rng = StdRng::seed_from_u64(seed);
    let rows = (0..n).map(|_| (0..n).map(|_| q.from_i64(rng.gen_range(-9..=9))).collect()).collect();
    ExactMatrix::from_rows(q, rows).unwrap()
}

pub fn random_system<F: Field>(f: &F, degrees: &[u32], seed: u64) -> PolySystem<F> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = degrees.len();
    let polys = degrees
        .iter()
        .map(|&d| {
            let terms: Vec<_> = monomials_up_to_degree(n, d)
                .into_iter()
                .map(|m| (m.exponents().to_vec(), f.random(&mut rng)))
                .collect();
            MultiPoly::from_terms(f.clone(), n, terms).unwrap()
        })
        .collect();
    PolySystem::new(polys, degrees.to_vec()).unwrap()
}
