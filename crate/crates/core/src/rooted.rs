//! Systems constructed together with their full set of simple roots.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::ExactMatrix;
use crate::poly::{monomials_up_to_degree, MultiPoly, PolySystem};

#[derive(Clone, Debug)]
pub struct RootedSystem<F: Field> {
    pub system: PolySystem<F>,
    pub roots: Vec<Vec<F::Elem>>,
}

/// `f_i = prod_k (x_i - nodes[i][k])`: the roots form the product grid.
pub fn grid_system<F: Field>(field: &F, nodes: &[Vec<F::Elem>]) -> Result<RootedSystem<F>> {
    let n = nodes.len();
    let mut polys = Vec::with_capacity(n);
    for (i, row) in nodes.iter().enumerate() {
        for (a, x) in row.iter().enumerate() {
            if row[..a].contains(x) {
                return Err(Error::Input(format!("repeated node {} in coordinate {}", field.format(x), i + 1)));
            }
        }
        let mut p = MultiPoly::constant(field.clone(), n, field.one());
        for x in row {
            let lin = MultiPoly::var(field.clone(), n, i).sub(&MultiPoly::constant(field.clone(), n, x.clone()));
            p = p.mul(&lin);
        }
        polys.push(p);
    }
    let degrees: Vec<u32> = nodes.iter().map(|r| r.len() as u32).collect();
    let system = PolySystem::new(polys, degrees)?;
    let mut roots: Vec<Vec<F::Elem>> = vec![Vec::new()];
    for row in nodes {
        roots = roots
            .into_iter()
            .flat_map(|r| {
                row.iter().map(move |x| {
                    let mut r = r.clone();
                    r.push(x.clone());
                    r
                })
            })
            .collect();
    }
    Ok(RootedSystem { system, roots })
}

/// `f_i = x_i^{d_i} - b_i^{d_i}` over `F_p` with `d_i | p - 1`; the roots are
/// `b_i` times the `d_i`-th roots of unity.
pub fn roots_of_unity_system(field: &PrimeField, degrees: &[u32], scales: &[u64]) -> Result<RootedSystem<PrimeField>> {
    if degrees.len() != scales.len() {
        return Err(Error::Shape("one scale per degree".into()));
    }
    let mut nodes = Vec::with_capacity(degrees.len());
    for (&d, &b) in degrees.iter().zip(scales) {
        let z = field
            .root_of_unity(d as u64)
            .ok_or_else(|| Error::Input(format!("{d} does not divide {} - 1", field.modulus())))?;
        let b = b % field.modulus();
        if b == 0 {
            return Err(Error::Input("scales must be non-zero".into()));
        }
        nodes.push((0..d as u64).map(|k| field.mul(&b, &field.pow(&z, k))).collect());
    }
    grid_system(field, &nodes)
}

impl<F: Field> RootedSystem<F> {
    pub fn field(&self) -> &F {
        self.system.field()
    }

    /// Substitutes `x = A y`; the new roots are `A^{-1} xi`.
    pub fn linear_change(&self, a: &ExactMatrix<F>) -> Result<Self> {
        let f = self.field();
        let n = self.system.n();
        if a.rows() != n || a.cols() != n {
            return Err(Error::Shape(format!("expected an {n}x{n} matrix")));
        }
        let inv = a.inverse()?.ok_or_else(|| Error::Input("change of variables is singular".into()))?;
        let subs: Vec<MultiPoly<F>> = (0..n)
            .map(|i| {
                let mut p = MultiPoly::zero(f.clone(), n);
                for j in 0..n {
                    p = p.add(&MultiPoly::var(f.clone(), n, j).scale(a.get(i, j)));
                }
                p
            })
            .collect();
        let polys = self.system.polys().iter().map(|p| p.compose(&subs)).collect::<Result<Vec<_>>>()?;
        let system = PolySystem::new(polys, self.system.degrees().to_vec())?;
        let roots = self.roots.iter().map(|r| inv.apply(r)).collect::<Result<Vec<_>>>()?;
        Ok(RootedSystem { system, roots })
    }

    /// Random invertible change of variables.
    pub fn random_linear_change<R: Rng>(&self, rng: &mut R) -> Result<Self> {
        let f = self.field().clone();
        let n = self.system.n();
        loop {
            let rows = (0..n).map(|_| (0..n).map(|_| f.random(rng)).collect()).collect();
            let a = ExactMatrix::from_rows(f.clone(), rows)?;
            if !f.is_zero(&a.det()?) {
                return self.linear_change(&a);
            }
        }
    }

    /// `g_i = f_i + sum_j q_ij f_j` over earlier equations of no larger
    /// degree, with random `q_ij` of degree `d_i - d_j`. The transformation is
    /// unitriangular, so the ideal and the roots are unchanged.
    pub fn mix_equations<R: Rng>(&self, rng: &mut R) -> Result<Self> {
        let f = self.field().clone();
        let n = self.system.n();
        let d = self.system.degrees();
        let old = self.system.polys();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (d[i], i));
        let mut polys = old.to_vec();
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                let terms = monomials_up_to_degree(n, d[i] - d[j])
                    .into_iter()
                    .map(|m| (m.exponents().to_vec(), f.random(rng)))
                    .collect::<Vec<_>>();
                let q = MultiPoly::from_terms(f.clone(), n, terms)?;
                polys[i] = polys[i].add(&q.mul(&old[j]));
            }
        }
        let system = PolySystem::new(polys, d.to_vec())?;
        Ok(RootedSystem { system, roots: self.roots.clone() })
    }

    /// Roots are pairwise distinct, are common zeros, and are simple.
    pub fn check(&self) -> Result<bool> {
        let f = self.field();
        let jac = self.system.jacobian();
        for (k, r) in self.roots.iter().enumerate() {
            if self.roots[..k].contains(r) || !self.system.is_root(r)? || f.is_zero(&jac.evaluate(r)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn grid_over_rationals() {
        let f = Rationals;
        let nodes = vec![vec![f.from_i64(1), f.from_i64(-1)], vec![f.from_i64(0), f.from_i64(2), f.from_i64(3)]];
        let rs = grid_system(&f, &nodes).unwrap();
        assert_eq!(rs.roots.len(), 6);
        assert!(rs.check().unwrap());
        assert!(grid_system(&f, &[vec![f.one(), f.one()]]).is_err());
    }

    #[test]
    fn roots_of_unity_over_f13() {
        let f = PrimeField::new(13).unwrap();
        let rs = roots_of_unity_system(&f, &[2, 3, 4], &[1, 2, 5]).unwrap();
        assert_eq!(rs.roots.len(), 24);
        assert!(rs.check().unwrap());
        assert!(roots_of_unity_system(&f, &[5], &[1]).is_err());
    }

    #[test]
    fn transformations_keep_roots() {
        let f = PrimeField::new(97).unwrap();
        let mut rng = StdRng::seed_from_u64(1);
        for degrees in [vec![2, 3], vec![2, 2, 3], vec![4]] {
            let rs = roots_of_unity_system(&f, &degrees, &vec![3; degrees.len()]).unwrap();
            let rs = rs.random_linear_change(&mut rng).unwrap().mix_equations(&mut rng).unwrap();
            assert_eq!(rs.system.degrees(), &degrees[..]);
            assert!(rs.check().unwrap());
        }
    }
}
