//! Half-space descriptions, vertex charts, Delzant validation and the face
//! lattice.

mod delzant;
mod faces;
mod facet_set;
mod spec;
mod vertices;

pub use delzant::{validate_delzant, DelzantFailure, DelzantReport};
pub use faces::{FaceLattice, FaceQuery, FaceRecord};
pub use facet_set::FacetSet;
pub use spec::{HalfSpaceSpec, Location, MAX_FACETS};
pub use vertices::{enumerate_vertices, enumerate_vertices_at, VertexChart};

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A validated Delzant polytope together with its vertex charts and face
/// lattice. Everything downstream of validation takes one of these.
#[derive(Clone, Debug)]
pub struct DelzantPolytope {
    spec: HalfSpaceSpec,
    charts: Vec<VertexChart>,
    lattice: FaceLattice,
}

impl DelzantPolytope {
    pub fn new(spec: HalfSpaceSpec) -> Result<Self> {
        let charts = enumerate_vertices(&spec)?;
        let report = DelzantReport::from_charts(&charts);
        if !report.passed() {
            return Err(Error::NotDelzant {
                failures: report.failures.len(),
            });
        }
        let lattice = FaceLattice::from_charts(spec.dim(), spec.num_facets(), &charts);
        Ok(DelzantPolytope {
            spec,
            charts,
            lattice,
        })
    }

    pub fn spec(&self) -> &HalfSpaceSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn num_facets(&self) -> usize {
        self.spec.num_facets()
    }

    pub fn charts(&self) -> &[VertexChart] {
        &self.charts
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }
}

/// Enumerates the face lattice of a Delzant-validated spec.
pub fn build_face_lattice(spec: &HalfSpaceSpec) -> Result<FaceLattice> {
    DelzantPolytope::new(spec.clone()).map(|p| p.lattice)
}
