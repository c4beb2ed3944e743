//! Exact lattice-point enumeration for Delzant polytopes.
//!
//! A polytope is given by its half-space description `x · n_i <= lambda_i`
//! with primitive integer normals. From that description this crate builds
//!
//! - the vertex charts and face lattice of the polytope ([`polytope`]),
//! - the volume polynomial `vol(Delta(lambda))` and its boundary companion
//!   `sum_i d/d(lambda_i) vol` ([`volume`]),
//! - brute-force lattice-point counts and Ehrhart polynomials ([`lattice`]),
//! - the Todd and A-hat operator formulas for interior and boundary counts
//!   ([`operator`]),
//! - the boundary Hilbert polynomial computed three independent ways
//!   ([`hilbert`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals and no
//! floating point is used anywhere. The crate is `no_std` and only needs
//! `alloc`; file formats, the CLI and threaded enumeration live in the
//! companion `ehrhart-tools` crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod hilbert;
pub mod lattice;
pub mod operator;
pub mod polytope;
pub mod volume;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Monomial, MultiPoly, Scalar, UniPoly};
pub use hilbert::{HilbertReport, inclusion_exclusion_count};
pub use lattice::{CountReport, EhrhartKind, EhrhartPoly, Region};
pub use operator::{OperatorProduct, SeriesKind, SeriesSpec};
pub use polytope::{FaceLattice, FacetSet, HalfSpaceSpec, VertexChart};
pub use volume::{BoundaryVolumePolynomial, VolumePolynomial};
