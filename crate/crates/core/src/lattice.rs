//! Brute-force lattice-point counts in dilates of a polytope and Ehrhart
//! polynomials fitted to them. This is the ground truth every formula is
//! checked against.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::exact::{Scalar, UniPoly};
use crate::polytope::{DelzantPolytope, FaceQuery, FacetSet};

/// Default cap on the number of bounding-box points classified per count.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Which lattice points of `k · Delta` to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Full,
    Interior,
    Boundary,
    /// Points of the face `F_I`, i.e. tight on every facet in `I`.
    Face(FacetSet),
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Full => write!(f, "full"),
            Region::Interior => write!(f, "interior"),
            Region::Boundary => write!(f, "boundary"),
            Region::Face(set) => write!(f, "face{set}"),
        }
    }
}

/// Counts for one dilate, classified in a single pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountReport {
    pub k: u64,
    pub total: u64,
    pub interior: u64,
    pub boundary: u64,
    /// Count for every nonempty proper face, keyed by active facet set.
    pub per_face: BTreeMap<FacetSet, u64>,
}

impl CountReport {
    /// Adds the counts of a disjoint slab of the same dilate.
    pub fn merge(&mut self, other: &CountReport) {
        self.total += other.total;
        self.interior += other.interior;
        self.boundary += other.boundary;
        for (face, n) in &other.per_face {
            *self.per_face.entry(*face).or_insert(0) += n;
        }
    }

    pub fn region(&self, region: Region) -> u64 {
        match region {
            Region::Full => self.total,
            Region::Interior => self.interior,
            Region::Boundary => self.boundary,
            Region::Face(set) if set.is_empty() => self.total,
            Region::Face(set) => self.per_face.get(&set).copied().unwrap_or(0),
        }
    }
}

fn check_k(k: u64) -> Result<i64> {
    if k == 0 || k > i64::MAX as u64 {
        return Err(Error::OutOfRange {
            value: k as usize,
            min: 1,
            max: i64::MAX as usize,
        });
    }
    Ok(k as i64)
}

/// Integer bounding box `[lo, hi]` per coordinate of `k` times the given
/// vertices of the polytope.
fn bounding_box_of(polytope: &DelzantPolytope, vertices: &[usize], k: i64) -> Vec<(i64, i64)> {
    let m = polytope.dim();
    let ks = Scalar::from(k);
    (0..m)
        .map(|j| {
            let coords = vertices
                .iter()
                .map(|&v| &polytope.charts()[v].anchor()[j] * &ks);
            let mut lo: Option<Scalar> = None;
            let mut hi: Option<Scalar> = None;
            for c in coords {
                if lo.as_ref().is_none_or(|l| c < *l) {
                    lo = Some(c.clone());
                }
                if hi.as_ref().is_none_or(|h| c > *h) {
                    hi = Some(c);
                }
            }
            let lo = lo.expect("faces have vertices").ceil();
            let hi = hi.expect("faces have vertices").floor();
            (
                i64::try_from(lo).expect("coordinates fit in i64"),
                i64::try_from(hi).expect("coordinates fit in i64"),
            )
        })
        .collect()
}

/// Bounding box of `k · Delta`.
pub fn bounding_box(polytope: &DelzantPolytope, k: u64) -> Result<Vec<(i64, i64)>> {
    let k = check_k(k)?;
    let all: Vec<usize> = (0..polytope.charts().len()).collect();
    Ok(bounding_box_of(polytope, &all, k))
}

pub fn box_size(bbox: &[(i64, i64)]) -> u128 {
    bbox.iter()
        .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo) as u128 + 1 })
        .fold(1u128, |acc, n| acc.saturating_mul(n))
}

fn check_budget(bbox: &[(i64, i64)], budget: u128) -> Result<()> {
    let required = box_size(bbox);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Visits every point of the box in lexicographic order.
fn for_each_point(bbox: &[(i64, i64)], mut f: impl FnMut(&[i64])) {
    if bbox.iter().any(|&(lo, hi)| hi < lo) {
        return;
    }
    let mut x: Vec<i64> = bbox.iter().map(|&(lo, _)| lo).collect();
    loop {
        f(&x);
        let mut j = x.len();
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if x[j] < bbox[j].1 {
                x[j] += 1;
                break;
            }
            x[j] = bbox[j].0;
        }
    }
}

/// Splits the range of the first coordinate of `k · Delta` into at most
/// `parts` disjoint slabs.
pub fn slabs(polytope: &DelzantPolytope, k: u64, parts: usize) -> Result<Vec<Range<i64>>> {
    let bbox = bounding_box(polytope, k)?;
    let (lo, hi) = bbox[0];
    let width = (hi - lo + 1).max(0);
    let parts = (parts.max(1) as i64).min(width.max(1));
    let step = (width + parts - 1) / parts;
    Ok((0..parts)
        .map(|p| (lo + p * step)..(lo + (p + 1) * step).min(hi + 1))
        .filter(|r| !r.is_empty())
        .collect())
}

/// Counts the points of `k · Delta` whose first coordinate lies in `slab`.
/// No budget check; callers partition an already budgeted box.
pub fn count_report_in_slab(polytope: &DelzantPolytope, k: u64, slab: Range<i64>) -> Result<CountReport> {
    let ki = check_k(k)?;
    let mut bbox = bounding_box(polytope, k)?;
    bbox[0] = (bbox[0].0.max(slab.start), bbox[0].1.min(slab.end - 1));
    let spec = polytope.spec();
    let mut report = CountReport {
        k,
        ..CountReport::default()
    };
    for_each_point(&bbox, |x| {
        let Some(tight) = spec.tight_set_unchecked(x, ki) else {
            return;
        };
        report.total += 1;
        if tight.is_empty() {
            report.interior += 1;
            return;
        }
        report.boundary += 1;
        // in a simple polytope every subset of a tight set is a face
        let bits = tight.bits();
        let mut sub = bits;
        while sub != 0 {
            *report.per_face.entry(FacetSet::from_bits(sub)).or_insert(0) += 1;
            sub = (sub - 1) & bits;
        }
    });
    Ok(report)
}

/// Classifies every point of the bounding box of `k · Delta` once.
pub fn count_report(polytope: &DelzantPolytope, k: u64, budget: u128) -> Result<CountReport> {
    let bbox = bounding_box(polytope, k)?;
    check_budget(&bbox, budget)?;
    count_report_in_slab(polytope, k, bbox[0].0..bbox[0].1 + 1)
}

/// Decides from a point's tight set and the requested face whether it counts.
type Selector = fn(FacetSet, FacetSet) -> bool;

/// Number of lattice points of `k · Delta` in `region`.
pub fn count_points(polytope: &DelzantPolytope, k: u64, region: Region, budget: u128) -> Result<u64> {
    let ki = check_k(k)?;
    let spec = polytope.spec();
    let (bbox, want): (Vec<(i64, i64)>, Selector) = match region {
        Region::Full => (bounding_box(polytope, k)?, |_, _| true),
        Region::Interior => (bounding_box(polytope, k)?, |t, _| t.is_empty()),
        Region::Boundary => (bounding_box(polytope, k)?, |t, _| !t.is_empty()),
        Region::Face(set) => match polytope.lattice().resolve(set) {
            FaceQuery::Empty => return Ok(0),
            FaceQuery::Whole(rec) | FaceQuery::Face(rec) => {
                (bounding_box_of(polytope, &rec.vertices, ki), |t, s| s.is_subset(t))
            }
        },
    };
    check_budget(&bbox, budget)?;
    let target = match region {
        Region::Face(set) => set,
        _ => FacetSet::empty(),
    };
    let mut n = 0u64;
    for_each_point(&bbox, |x| {
        if let Some(tight) = spec.tight_set_unchecked(x, ki) {
            if want(tight, target) {
                n += 1;
            }
        }
    });
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EhrhartKind {
    Full,
    Interior,
    Boundary,
    Face(FacetSet),
}

impl EhrhartKind {
    pub fn region(self) -> Region {
        match self {
            EhrhartKind::Full => Region::Full,
            EhrhartKind::Interior => Region::Interior,
            EhrhartKind::Boundary => Region::Boundary,
            EhrhartKind::Face(set) => Region::Face(set),
        }
    }

    /// Degree of the counting polynomial for this kind on `polytope`;
    /// `None` for an empty face.
    pub fn degree(self, polytope: &DelzantPolytope) -> Option<usize> {
        let m = polytope.dim();
        match self {
            EhrhartKind::Full | EhrhartKind::Interior => Some(m),
            EhrhartKind::Boundary => Some(m - 1),
            EhrhartKind::Face(set) => polytope.lattice().get(set).map(|r| r.dim),
        }
    }
}

impl fmt::Display for EhrhartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EhrhartKind::Full => write!(f, "full"),
            EhrhartKind::Interior => write!(f, "interior"),
            EhrhartKind::Boundary => write!(f, "boundary"),
            EhrhartKind::Face(set) => write!(f, "face{set}"),
        }
    }
}

/// A counting polynomial in the dilation `k`, valid for `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPoly {
    pub poly: UniPoly,
    pub kind: EhrhartKind,
}

impl fmt::Display for EhrhartPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Fits a polynomial of degree `degree` through `counts[j]` at `k = j + 1`
/// for `j = 0..=degree`, and checks it predicts `counts[degree + 1]`.
pub fn fit_counts(kind: EhrhartKind, degree: usize, counts: &[u64]) -> Result<EhrhartPoly> {
    assert!(
        counts.len() >= degree + 2,
        "need degree + 2 counts to fit and verify"
    );
    let nodes: Vec<(Scalar, Scalar)> = counts[..=degree]
        .iter()
        .enumerate()
        .map(|(j, &c)| (Scalar::from(j as i64 + 1), Scalar::from(c)))
        .collect();
    let poly = UniPoly::interpolate(&nodes);
    let check_k = degree as u64 + 2;
    let predicted = poly.eval_int(check_k as i64);
    let counted = counts[degree + 1];
    if predicted != Scalar::from(counted) {
        return Err(Error::NotPolynomial {
            kind: kind_label(kind),
            k: check_k,
            predicted,
            counted,
        });
    }
    Ok(EhrhartPoly { poly, kind })
}

fn kind_label(kind: EhrhartKind) -> String {
    format!("{kind}")
}

/// Ehrhart polynomial of the given kind from brute-force counts at
/// `k = 1..=deg+2`.
pub fn ehrhart_interpolate(polytope: &DelzantPolytope, kind: EhrhartKind, budget: u128) -> Result<EhrhartPoly> {
    let Some(degree) = kind.degree(polytope) else {
        return Ok(EhrhartPoly {
            poly: UniPoly::zero(),
            kind,
        });
    };
    let counts: Vec<u64> = (1..=degree as u64 + 2)
        .map(|k| count_points(polytope, k, kind.region(), budget))
        .collect::<Result<_>>()?;
    fit_counts(kind, degree, &counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::HalfSpaceSpec;

    fn simplex(m: usize) -> DelzantPolytope {
        DelzantPolytope::new(HalfSpaceSpec::unit_simplex(m).unwrap()).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_points(&simplex(2), 1, Region::Full, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(count_points(&simplex(2), 3, Region::Interior, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(count_points(&simplex(3), 1, Region::Boundary, DEFAULT_BUDGET).unwrap(), 4);
        // the origin vertex of 5 Delta
        let origin = FacetSet::from_indices([0, 1]);
        assert_eq!(count_points(&simplex(2), 5, Region::Face(origin), DEFAULT_BUDGET).unwrap(), 1);
        let none = FacetSet::from_indices([0, 1, 2]);
        assert_eq!(count_points(&simplex(2), 5, Region::Face(none), DEFAULT_BUDGET).unwrap(), 0);
        assert!(count_points(&simplex(2), 0, Region::Full, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn report_agrees_with_region_counts() {
        let p = simplex(3);
        for k in 1..4 {
            let r = count_report(&p, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.total, r.interior + r.boundary);
            for region in [Region::Full, Region::Interior, Region::Boundary] {
                assert_eq!(r.region(region), count_points(&p, k, region, DEFAULT_BUDGET).unwrap());
            }
            for (face, _) in p.lattice().proper_faces() {
                assert_eq!(
                    r.region(Region::Face(face)),
                    count_points(&p, k, Region::Face(face), DEFAULT_BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced_before_enumeration() {
        match count_points(&simplex(3), 10, Region::Full, 100) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 11 * 11 * 11);
                assert_eq!(budget, 100);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn slabs_partition_the_count() {
        let p = DelzantPolytope::new(HalfSpaceSpec::cube(3, 2).unwrap()).unwrap();
        let whole = count_report(&p, 3, DEFAULT_BUDGET).unwrap();
        let mut merged = CountReport {
            k: 3,
            ..CountReport::default()
        };
        for slab in slabs(&p, 3, 4).unwrap() {
            merged.merge(&count_report_in_slab(&p, 3, slab).unwrap());
        }
        assert_eq!(merged, whole);
    }

    #[test]
    fn triangle_ehrhart_polynomials() {
        let full = ehrhart_interpolate(&simplex(2), EhrhartKind::Full, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            full.poly,
            UniPoly::new(alloc::vec![Scalar::one(), Scalar::new(3, 2), Scalar::new(1, 2)])
        );
        let bd = ehrhart_interpolate(&simplex(2), EhrhartKind::Boundary, DEFAULT_BUDGET).unwrap();
        assert_eq!(bd.poly, UniPoly::from_ints(&[0, 3]));
        let bd3 = ehrhart_interpolate(&simplex(3), EhrhartKind::Boundary, DEFAULT_BUDGET).unwrap();
        assert_eq!(bd3.poly, UniPoly::from_ints(&[2, 0, 2]));
    }

    #[test]
    fn fit_detects_non_polynomial_counts() {
        assert!(matches!(
            fit_counts(EhrhartKind::Full, 1, &[1, 2, 4]),
            Err(Error::NotPolynomial { k: 3, .. })
        ));
    }
}
