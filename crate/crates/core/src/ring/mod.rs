//! Exact scalar arithmetic: Laurent polynomials in (q, a1, a2), rational
//! functions over them, coefficient-domain membership, and sparse exact
//! linear algebra.

pub mod domain;
pub mod linalg;
pub mod poly;
pub mod ratfunc;

pub use domain::CoefficientDomain;
pub use linalg::{Echelon, SparseVec};
pub use poly::{quantum_factorial, quantum_int, LaurentPoly, Monomial, QSign};
pub use ratfunc::RatFunc;
