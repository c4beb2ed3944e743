use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exact::Scalar;
use crate::hilbert::HilbertReport;
use crate::polytope::FacetSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("argument {value} outside supported range {min}..={max}")]
    OutOfRange { value: usize, min: usize, max: usize },

    #[error("invalid half-space description: {0}")]
    InvalidSpec(String),

    #[error("vertex {vertex:?} lies on {active} facets; the polytope is not simple")]
    NonSimple { vertex: Vec<Scalar>, active: usize },

    #[error("polytope is unbounded (recession direction {direction:?})")]
    Unbounded { direction: Vec<Scalar> },

    #[error("polytope is empty")]
    Empty,

    #[error("polytope is not full-dimensional; facet {facet} is an implicit equality")]
    NotFullDimensional { facet: usize },

    #[error("facet {facet} contains no vertex; the inequality is redundant")]
    Redundant { facet: usize },

    #[error("polytope is not Delzant: {failures} vertex chart(s) have |det| != 1")]
    NotDelzant { failures: usize },

    #[error("simplex {simplex:?} has zero volume at the anchor offsets")]
    DegenerateTriangulation { simplex: Vec<usize> },

    #[error("sample offsets leave the chamber of the anchor offsets")]
    ChamberCrossed,

    #[error("enumeration needs {required} points, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("{kind} counts are not polynomial: predicted {predicted} at k={k}, counted {counted}")]
    NotPolynomial {
        kind: String,
        k: u64,
        predicted: Scalar,
        counted: u64,
    },

    #[error("series truncated at order {order} cannot act exactly on degree {degree}")]
    Truncation { order: usize, degree: u32 },

    #[error("{formula} produced {value}, which is not a nonnegative integer")]
    FormulaViolation { formula: &'static str, value: Scalar },

    #[error("boundary Hilbert polynomial computations disagree")]
    Disagreement(Box<HilbertReport>),

    #[error("face {0} is not part of the face lattice")]
    UnknownFace(FacetSet),
}
