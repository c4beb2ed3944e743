use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::Scalar;
use crate::polytope::{enumerate_vertices, FacetSet, HalfSpaceSpec, VertexChart};

/// A vertex whose active normals do not form a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantFailure {
    pub vertex: Vec<Scalar>,
    pub active: FacetSet,
    pub det: BigInt,
}

impl fmt::Display for DelzantFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex (")?;
        for (i, c) in self.vertex.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "): det {} \u{2260} \u{b1}1", self.det)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DelzantReport {
    pub vertices: usize,
    pub failures: Vec<DelzantFailure>,
}

impl DelzantReport {
    pub fn from_charts(charts: &[VertexChart]) -> Self {
        let failures = charts
            .iter()
            .filter(|c| !c.is_unimodular())
            .map(|c| DelzantFailure {
                vertex: c.anchor().to_vec(),
                active: c.active(),
                det: c.det().clone(),
            })
            .collect();
        DelzantReport {
            vertices: charts.len(),
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `|det N_S| = 1` at every vertex. Offsets are integers by
/// construction of [`HalfSpaceSpec`], so with unimodular charts every vertex
/// is a lattice point.
pub fn validate_delzant(spec: &HalfSpaceSpec) -> Result<DelzantReport> {
    let charts = enumerate_vertices(spec)?;
    let report = DelzantReport::from_charts(&charts);
    debug_assert!(
        !report.passed() || charts.iter().all(|c| c.anchor_int().is_some()),
        "unimodular charts with integer offsets have integral vertices"
    );
    Ok(report)
}
