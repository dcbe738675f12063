//! Elimination kernels on row-major buffers.
//!
//! Generic Gaussian elimination over any [`Field`], plus fraction-free
//! (Bareiss) elimination over the integers used by the rational backend.
//! All kernels use the first-nonzero pivot rule in row-major scan order so
//! that results are reproducible.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::Field;

pub fn gauss_det<F: Field>(f: &F, mut a: Vec<F::Elem>, n: usize) -> F::Elem {
    debug_assert_eq!(a.len(), n * n);
    let mut det = f.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !f.is_zero(&a[i * n + k])) else {
            return f.zero();
        };
        if p != k {
            swap_rows(&mut a, n, p, k);
            det = f.neg(&det);
        }
        let pivot = a[k * n + k].clone();
        det = f.mul(&det, &pivot);
        let pinv = f.inv(&pivot).expect("nonzero pivot");
        for i in k + 1..n {
            if f.is_zero(&a[i * n + k]) {
                continue;
            }
            let factor = f.mul(&a[i * n + k], &pinv);
            for j in k + 1..n {
                let t = f.mul(&factor, &a[k * n + j]);
                a[i * n + j] = f.sub(&a[i * n + j], &t);
            }
        }
    }
    det
}

pub fn gauss_pivots<F: Field>(f: &F, mut a: Vec<F::Elem>, rows: usize, cols: usize) -> Vec<usize> {
    debug_assert_eq!(a.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i * cols + c])) else {
            continue;
        };
        if p != r {
            swap_rows(&mut a, cols, p, r);
        }
        let pinv = f.inv(&a[r * cols + c]).expect("nonzero pivot");
        for i in r + 1..rows {
            if f.is_zero(&a[i * cols + c]) {
                continue;
            }
            let factor = f.mul(&a[i * cols + c], &pinv);
            for j in c + 1..cols {
                let t = f.mul(&factor, &a[r * cols + j]);
                a[i * cols + j] = f.sub(&a[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn gauss_jordan<F: Field>(f: &F, a: &mut [F::Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i * cols + c])) else {
            continue;
        };
        if p != r {
            swap_rows(a, cols, p, r);
        }
        let pinv = f.inv(&a[r * cols + c]).expect("nonzero pivot");
        for j in c..cols {
            a[r * cols + j] = f.mul(&a[r * cols + j], &pinv);
        }
        for i in 0..rows {
            if i == r || f.is_zero(&a[i * cols + c]) {
                continue;
            }
            let factor = a[i * cols + c].clone();
            for j in c..cols {
                let t = f.mul(&factor, &a[r * cols + j]);
                a[i * cols + j] = f.sub(&a[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            swap_rows(&mut a, n, p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = exact_div(v, &prev);
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Fraction-free echelon form; returns the pivot columns.
pub fn bareiss_pivots(mut a: Vec<BigInt>, rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            swap_rows(&mut a, cols, p, r);
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r * cols + c] * &a[i * cols + j] - &a[i * cols + c] * &a[r * cols + j];
                a[i * cols + j] = exact_div(v, &prev);
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = a[r * cols + c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[inline]
fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return v;
    }
    debug_assert!((&v % d).is_zero(), "Bareiss division not exact");
    v / d
}

fn swap_rows<T>(a: &mut [T], cols: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let (head, tail) = a.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}
