//! Exact certification of monomial bases for zero-dimensional polynomial
//! systems via multivariate resultants and subresultants.

mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod hilbert;
pub mod koszul;
pub mod complex;
pub mod resultant;
pub mod subresultant;
pub mod basis;
pub mod rooted;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::{Axis, ExactMatrix, MinorSelection};
pub use poly::{HomogeneousSystem, Monomial, MultiPoly, PolySystem};
pub use hilbert::DegreeProfile;
pub use koszul::{GradedComplex, MonomialSet};
pub use complex::{ChainComplex, DecompositionTrace, MatrixComplex};
pub use subresultant::SubresultantValue;
pub use basis::{BasisCertificate, FactorizationReport, MultiplicationMatrix, VandermondeReport, Verdict};
pub use rooted::RootedSystem;
