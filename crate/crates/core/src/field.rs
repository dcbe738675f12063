//! Exact coefficient fields.
//!
//! Two backends are provided: [`Rationals`] (reduced fractions over
//! arbitrary-precision integers) and [`PrimeField`] (residues modulo an odd
//! prime below 2^62). Algorithms are generic over [`Field`]; the field value
//! is a small context object carried alongside the elements.

use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::kernels;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 62;

/// An exact field together with its element representation.
///
/// Elements are plain values; every operation goes through the field
/// context so that prime-field elements can stay bare `u64` residues.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of the fraction `num/den`; fails when `den` is not invertible.
    #[allow(clippy::wrong_self_convention)]
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Uniformly random element for prime fields; small integers and
    /// fractions for the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Canonical text form: `a/b` with `b > 0` (or `a`) over Q, the residue
    /// in `[0, p)` over F_p.
    fn format(&self, a: &Self::Elem) -> String;

    /// `None` for characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    fn powi(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow(&ai, e.unsigned_abs()))
        }
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Determinant of a square row-major block. Consumes the buffer.
    fn det_kernel(&self, data: Vec<Self::Elem>, n: usize) -> Self::Elem {
        kernels::gauss_det(self, data, n)
    }

    /// Pivot columns of a row echelon form computed with the first-nonzero
    /// pivot rule. These index the lexicographically first column basis.
    fn pivot_columns_kernel(&self, data: Vec<Self::Elem>, rows: usize, cols: usize) -> Vec<usize> {
        kernels::gauss_pivots(self, data, rows, cols)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num = BigInt::from(rng.gen_range(-9i64..=9));
        let den = if rng.gen_bool(0.2) {
            BigInt::from(rng.gen_range(2i64..=5))
        } else {
            BigInt::one()
        };
        BigRational::new(num, den)
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn characteristic(&self) -> Option<u64> {
        None
    }

    fn name(&self) -> String {
        "Q".into()
    }

    fn det_kernel(&self, data: Vec<BigRational>, n: usize) -> BigRational {
        let (ints, scale) = integer_rows(data, n, n);
        let det = kernels::bareiss_det(ints, n);
        BigRational::new(det, scale)
    }

    fn pivot_columns_kernel(&self, data: Vec<BigRational>, rows: usize, cols: usize) -> Vec<usize> {
        let (ints, _) = integer_rows(data, rows, cols);
        kernels::bareiss_pivots(ints, rows, cols)
    }
}

/// Scales every row by the lcm of its denominators. Returns the integer
/// matrix and the product of the scale factors.
fn integer_rows(data: Vec<BigRational>, rows: usize, cols: usize) -> (Vec<BigInt>, BigInt) {
    let mut out = Vec::with_capacity(rows * cols);
    let mut scale = BigInt::one();
    let mut it = data.into_iter();
    for _ in 0..rows {
        let row: Vec<BigRational> = it.by_ref().take(cols).collect();
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for x in row {
            out.push(x.numer() * (&l / x.denom()));
        }
        scale *= l;
    }
    (out, scale)
}

/// Residues modulo an odd prime `p < 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^62"
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer.
    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    /// An element of multiplicative order exactly `d`, if `d | p - 1`.
    pub fn root_of_unity(&self, d: u64) -> Option<u64> {
        if d == 0 || !(self.p - 1).is_multiple_of(d) {
            return None;
        }
        if d == 1 {
            return Some(1);
        }
        let primes = prime_factors(d);
        let cofactor = (self.p - 1) / d;
        (2..self.p).find_map(|a| {
            let z = self.pow(&a, cofactor);
            primes
                .iter()
                .all(|q| self.pow(&z, d / q) != 1)
                .then_some(z)
        })
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_bigint(den);
        let di = self.inv(&d).ok_or_else(|| {
            Error::Arithmetic(format!("denominator {den} is not invertible mod {}", self.p))
        })?;
        Ok(self.mul(&self.reduce_bigint(num), &di))
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed 128-bit values
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.p as i128) as u64)
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= d {
        if d.is_multiple_of(q) {
            out.push(q);
            while d.is_multiple_of(q) {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Parses `q` or `fp:<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeField),
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("FP:"))
            .ok_or_else(|| Error::InvalidField(format!("expected `q` or `fp:<p>`, got `{s}`")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus `{p}`")))?;
        Ok(FieldSpec::Prime(PrimeField::new(p)?))
    }
}

/// Sign of a rational, used when printing and in tests.
pub fn rational_sign(a: &BigRational) -> Sign {
    if a.is_positive() {
        Sign::Plus
    } else if a.is_negative() {
        Sign::Minus
    } else {
        Sign::NoSign
    }
}
