//! Exact scalars, sparse multivariate polynomials, univariate polynomials in
//! the dilation variable, and integer linear algebra.

mod identity;
mod matrix;
mod poly;
mod scalar;
mod unipoly;

pub use identity::{euler_expansion_identity, euler_expansion_terms, EULER_IDENTITY_MAX};
pub use matrix::{int_det, rational_det, rational_inverse, rational_solve, IntMatrix};
pub use poly::{Monomial, MultiPoly};
pub use scalar::Scalar;
pub(crate) use scalar::gcd_slice as scalar_gcd;
pub use unipoly::UniPoly;
