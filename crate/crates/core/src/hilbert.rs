//! The boundary counting polynomial `#(k ∂Delta ∩ Z^m)` (the Hilbert
//! polynomial of the anticanonical hypersurface) computed three ways:
//! inclusion-exclusion over faces, the A-hat operator formula, and direct
//! boundary counts.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{count_report, fit_counts, CountReport, EhrhartKind, EhrhartPoly};
use crate::operator::symbolic_ehrhart;
use crate::polytope::{DelzantPolytope, FaceQuery, FacetSet};
use crate::volume::volume_polynomial;

/// One size class of the inclusion-exclusion sum:
/// `sign * sum_{|I| = size} #(k F_I ∩ Z^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InclusionExclusionTerm {
    pub size: usize,
    pub sign: i8,
    pub sum: u64,
}

/// Terms for `l = 1..=d`, looking up every one of the `2^d - 1` nonempty
/// facet subsets in the face lattice; empty intersections contribute 0.
pub fn inclusion_exclusion_terms_from(polytope: &DelzantPolytope, report: &CountReport) -> Vec<InclusionExclusionTerm> {
    let d = polytope.num_facets();
    (1..=d)
        .map(|size| {
            let sum = FacetSet::subsets_of_size(d, size)
                .map(|set| match polytope.lattice().resolve(set) {
                    FaceQuery::Face(_) => report.per_face.get(&set).copied().unwrap_or(0),
                    FaceQuery::Whole(_) | FaceQuery::Empty => 0,
                })
                .sum();
            InclusionExclusionTerm {
                size,
                sign: if size % 2 == 1 { 1 } else { -1 },
                sum,
            }
        })
        .collect()
}

pub fn inclusion_exclusion_terms(polytope: &DelzantPolytope, k: u64, budget: u128) -> Result<Vec<InclusionExclusionTerm>> {
    let report = count_report(polytope, k, budget)?;
    Ok(inclusion_exclusion_terms_from(polytope, &report))
}

pub fn signed_total(terms: &[InclusionExclusionTerm]) -> i128 {
    terms
        .iter()
        .map(|t| i128::from(t.sign) * i128::from(t.sum))
        .sum()
}

/// `sum_{l>=1} (-1)^{l+1} sum_{|I|=l} #(k F_I ∩ Z^m)`.
pub fn inclusion_exclusion_count(polytope: &DelzantPolytope, k: u64, budget: u128) -> Result<u64> {
    let total = signed_total(&inclusion_exclusion_terms(polytope, k, budget)?);
    Ok(u64::try_from(total).expect("inclusion-exclusion of counts is nonnegative"))
}

/// The three boundary polynomials and, for each nonempty proper face, its
/// own counting polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub by_inclusion_exclusion: EhrhartPoly,
    pub by_operator_formula: EhrhartPoly,
    pub by_oracle: EhrhartPoly,
    pub agree: bool,
    pub per_face: BTreeMap<FacetSet, EhrhartPoly>,
}

/// Builds the report without judging it.
pub fn hilbert_report(polytope: &DelzantPolytope, budget: u128) -> Result<HilbertReport> {
    let m = polytope.dim();
    // k = 1..=m+1 fits degree m-1 with a check, and every face of
    // dimension <= m-1 likewise
    let reports: Vec<CountReport> = (1..=m as u64 + 1)
        .map(|k| count_report(polytope, k, budget))
        .collect::<Result<_>>()?;
    hilbert_report_from(polytope, &reports)
}

/// Builds the report from count reports at `k = 1..=m+1`, in order.
pub fn hilbert_report_from(polytope: &DelzantPolytope, reports: &[CountReport]) -> Result<HilbertReport> {
    let m = polytope.dim();
    if reports.len() < m + 1 {
        return Err(Error::DimensionMismatch {
            expected: m + 1,
            got: reports.len(),
        });
    }

    let ie_counts: Vec<u64> = reports
        .iter()
        .map(|r| {
            let total = signed_total(&inclusion_exclusion_terms_from(polytope, r));
            u64::try_from(total).expect("inclusion-exclusion of counts is nonnegative")
        })
        .collect();
    let by_inclusion_exclusion = fit_counts(EhrhartKind::Boundary, m - 1, &ie_counts)?;

    let boundary_counts: Vec<u64> = reports.iter().map(|r| r.boundary).collect();
    let by_oracle = fit_counts(EhrhartKind::Boundary, m - 1, &boundary_counts)?;

    let volume = volume_polynomial(polytope)?;
    let by_operator_formula = symbolic_ehrhart(&volume, EhrhartKind::Boundary)?;

    let mut per_face = BTreeMap::new();
    for (face, rec) in polytope.lattice().proper_faces() {
        let counts: Vec<u64> = reports[..rec.dim + 2]
            .iter()
            .map(|r| r.per_face.get(&face).copied().unwrap_or(0))
            .collect();
        per_face.insert(face, fit_counts(EhrhartKind::Face(face), rec.dim, &counts)?);
    }

    let agree = by_inclusion_exclusion.poly == by_oracle.poly
        && by_operator_formula.poly == by_oracle.poly;
    Ok(HilbertReport {
        by_inclusion_exclusion,
        by_operator_formula,
        by_oracle,
        agree,
        per_face,
    })
}

/// The boundary Hilbert polynomial, failing with the full report when the
/// three computations disagree.
pub fn cy_hilbert_polynomial(polytope: &DelzantPolytope, budget: u128) -> Result<HilbertReport> {
    let report = hilbert_report(polytope, budget)?;
    if !report.agree {
        return Err(Error::Disagreement(Box::new(report)));
    }
    Ok(report)
}
