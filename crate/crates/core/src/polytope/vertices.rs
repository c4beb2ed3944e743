use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{int_det, rational_det, rational_inverse, IntMatrix, MultiPoly, Scalar};
use crate::polytope::{FacetSet, HalfSpaceSpec};

/// One vertex of a simple polytope, described by the `m` facets meeting
/// there.
///
/// The vertex moves affinely with the offsets: `v_S(lambda) = N_S^{-1}
/// lambda_S`, where `N_S` stacks the normals of the active facets. `anchor`
/// is that vertex at the offsets the chart was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexChart {
    active: FacetSet,
    active_list: Vec<usize>,
    normal_matrix: IntMatrix,
    det: BigInt,
    inverse: Vec<Vec<Scalar>>,
    anchor: Vec<Scalar>,
}

impl VertexChart {
    pub fn active(&self) -> FacetSet {
        self.active
    }

    /// Active facet indices in increasing order; row `r` of the normal
    /// matrix is the normal of facet `active_list()[r]`.
    pub fn active_list(&self) -> &[usize] {
        &self.active_list
    }

    pub fn normal_matrix(&self) -> &IntMatrix {
        &self.normal_matrix
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.abs().is_one()
    }

    /// `N_S^{-1}`: coordinate `j` of the vertex is
    /// `sum_r inverse[j][r] * lambda_{active_list[r]}`.
    pub fn inverse(&self) -> &[Vec<Scalar>] {
        &self.inverse
    }

    pub fn anchor(&self) -> &[Scalar] {
        &self.anchor
    }

    /// The anchor as integers, if it is a lattice point.
    pub fn anchor_int(&self) -> Option<Vec<i64>> {
        self.anchor.iter().map(Scalar::to_i64).collect()
    }

    /// The vertex at arbitrary offsets (`lambda` indexed by facet).
    pub fn vertex_at(&self, lambda: &[Scalar]) -> Vec<Scalar> {
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.active_list)
                    .map(|(c, &i)| c * &lambda[i])
                    .sum()
            })
            .collect()
    }

    /// The vertex coordinates as linear forms in `lambda_1..lambda_d`.
    pub fn symbolic_vertex(&self, num_facets: usize) -> Vec<MultiPoly> {
        self.inverse
            .iter()
            .map(|row| {
                let mut coeffs = alloc::vec![Scalar::zero(); num_facets];
                for (c, &i) in row.iter().zip(&self.active_list) {
                    coeffs[i] = c.clone();
                }
                MultiPoly::linear(&coeffs, Scalar::zero())
            })
            .collect()
    }

    /// Edge directions leaving the vertex, one per active facet: moving
    /// along edge `r` keeps every active facet tight except
    /// `active_list()[r]`, which is left towards the interior.
    pub fn edge_directions(&self) -> Vec<Vec<Scalar>> {
        let m = self.inverse.len();
        (0..m)
            .map(|r| (0..m).map(|j| -&self.inverse[j][r]).collect())
            .collect()
    }
}

fn dot(n: &[i64], x: &[Scalar]) -> Scalar {
    n.iter().zip(x).map(|(&a, c)| c * Scalar::from(a)).sum()
}

fn rational_rows(spec: &HalfSpaceSpec, rows: impl Iterator<Item = usize>) -> Vec<Vec<Scalar>> {
    rows.map(|i| spec.normal(i).iter().map(|&a| Scalar::from(a)).collect())
        .collect()
}

/// A nonzero `x` with `x · n_i <= 0` for every facet, if one exists.
fn recession_direction(spec: &HalfSpaceSpec) -> Result<Option<Vec<Scalar>>> {
    let m = spec.dim();
    let d = spec.num_facets();
    let feasible = |r: &[Scalar]| spec.normals().iter().all(|n| !dot(n, r).is_positive());
    // The cone {x : N x <= 0} is pointed once N has rank m, so it is
    // nontrivial iff it has an extreme ray. Each extreme ray is the kernel
    // of m-1 independent rows, spanned by their generalized cross product.
    for rows in FacetSet::subsets_of_size(d, m - 1) {
        let sub = rational_rows(spec, rows.iter());
        let mut ray = Vec::with_capacity(m);
        for col in 0..m {
            let minor: Vec<Vec<Scalar>> = sub
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let det = rational_det(&minor)?;
            ray.push(if col % 2 == 0 { det } else { -det });
        }
        if ray.iter().all(Scalar::is_zero) {
            continue;
        }
        if feasible(&ray) {
            return Ok(Some(ray));
        }
        let neg: Vec<Scalar> = ray.iter().map(|v| -v).collect();
        if feasible(&neg) {
            return Ok(Some(neg));
        }
    }
    Ok(None)
}

fn lineality_direction(spec: &HalfSpaceSpec) -> Result<Option<Vec<Scalar>>> {
    let m = spec.dim();
    let all = rational_rows(spec, 0..spec.num_facets());
    // rank m iff some m x m minor is nonzero
    for rows in FacetSet::subsets_of_size(spec.num_facets(), m) {
        let sub: Vec<Vec<Scalar>> = rows.iter().map(|i| all[i].clone()).collect();
        if !rational_det(&sub)?.is_zero() {
            return Ok(None);
        }
    }
    // rank deficient: find a kernel vector by elimination
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in all {
        let mut r = row;
        for (b, &p) in basis.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|v| !v.is_zero()) {
            let inv = r[p].recip();
            for x in r.iter_mut() {
                *x *= &inv;
            }
            for b in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    let free = (0..m).find(|c| !pivots.contains(c)).unwrap_or(0);
    let mut x = alloc::vec![Scalar::zero(); m];
    x[free] = Scalar::one();
    for (b, &p) in basis.iter().zip(&pivots) {
        x[p] = -&b[free];
    }
    Ok(Some(x))
}

/// Enumerates the vertices of the polytope with the spec's normals and the
/// given (rational) offsets, certifying along the way that it is bounded,
/// nonempty, full-dimensional, simple and irredundant.
pub fn enumerate_vertices_at(spec: &HalfSpaceSpec, offsets: &[Scalar]) -> Result<Vec<VertexChart>> {
    let m = spec.dim();
    let d = spec.num_facets();
    if offsets.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: offsets.len(),
        });
    }
    if let Some(direction) = lineality_direction(spec)? {
        return Err(Error::Unbounded { direction });
    }
    if let Some(direction) = recession_direction(spec)? {
        return Err(Error::Unbounded { direction });
    }

    let mut points: BTreeMap<Vec<Scalar>, FacetSet> = BTreeMap::new();
    for subset in FacetSet::subsets_of_size(d, m) {
        let rows = rational_rows(spec, subset.iter());
        let Some(inverse) = rational_inverse(&rows)? else {
            continue;
        };
        let rhs: Vec<Scalar> = subset.iter().map(|i| offsets[i].clone()).collect();
        let x: Vec<Scalar> = inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, b)| a * b).sum())
            .collect();
        let mut active = FacetSet::empty();
        let mut feasible = true;
        for (i, n) in spec.normals().iter().enumerate() {
            let lhs = dot(n, &x);
            if lhs > offsets[i] {
                feasible = false;
                break;
            }
            if lhs == offsets[i] {
                active.insert(i);
            }
        }
        if feasible {
            points.insert(x, active);
        }
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }

    // The vertex centroid is in the relative interior; a facet tight there
    // is an implicit equality.
    let count = Scalar::from(points.len() as i64);
    let centroid: Vec<Scalar> = (0..m)
        .map(|j| points.keys().map(|p| &p[j]).sum::<Scalar>() / &count)
        .collect();
    for (i, n) in spec.normals().iter().enumerate() {
        if dot(n, &centroid) == offsets[i] {
            return Err(Error::NotFullDimensional { facet: i });
        }
    }

    let mut covered = FacetSet::empty();
    for (p, active) in &points {
        if active.len() > m {
            return Err(Error::NonSimple {
                vertex: p.clone(),
                active: active.len(),
            });
        }
        covered = covered.union(*active);
    }
    if let Some(facet) = (0..d).find(|&i| !covered.contains(i)) {
        return Err(Error::Redundant { facet });
    }

    let mut charts = Vec::with_capacity(points.len());
    for (anchor, active) in points {
        let active_list = active.to_vec();
        let int_rows: Vec<Vec<i64>> = active_list.iter().map(|&i| spec.normal(i).to_vec()).collect();
        let normal_matrix = IntMatrix::from_rows(&int_rows)?;
        let det = int_det(&normal_matrix)?;
        let inverse = rational_inverse(&normal_matrix.to_rational_rows())?
            .expect("active normals at a simple vertex are independent");
        charts.push(VertexChart {
            active,
            active_list,
            normal_matrix,
            det,
            inverse,
            anchor,
        });
    }
    charts.sort_by(|a, b| {
        let sa: Scalar = a.anchor.iter().sum();
        let sb: Scalar = b.anchor.iter().sum();
        sa.cmp(&sb).then_with(|| a.anchor.cmp(&b.anchor))
    });
    Ok(charts)
}

/// Vertex charts of `spec` at its own offsets, sorted graded-lexicographically
/// by anchor coordinates (coordinate sum first).
pub fn enumerate_vertices(spec: &HalfSpaceSpec) -> Result<Vec<VertexChart>> {
    enumerate_vertices_at(spec, &spec.offsets_scalar())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn unit_triangle_vertices() {
        let s = HalfSpaceSpec::unit_simplex(2).unwrap();
        let charts = enumerate_vertices(&s).unwrap();
        let anchors: Vec<_> = charts.iter().map(|c| c.anchor().to_vec()).collect();
        assert_eq!(anchors, vec![ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0])]);
        assert!(charts.iter().all(VertexChart::is_unimodular));
    }

    #[test]
    fn square_has_four_vertices() {
        let s = HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 0), (vec![1, 0], 1), (vec![0, -1], 0), (vec![0, 1], 1)],
        )
        .unwrap();
        assert_eq!(enumerate_vertices(&s).unwrap().len(), 4);
    }

    #[test]
    fn square_pyramid_is_not_simple() {
        let s = HalfSpaceSpec::new(
            3,
            vec![
                (vec![1, 0, 1], 1),
                (vec![-1, 0, 1], 1),
                (vec![0, 1, 1], 1),
                (vec![0, -1, 1], 1),
                (vec![0, 0, -1], 0),
            ],
        )
        .unwrap();
        match enumerate_vertices(&s) {
            Err(Error::NonSimple { vertex, active }) => {
                assert_eq!(vertex, ints(&[0, 0, 1]));
                assert_eq!(active, 4);
            }
            other => panic!("expected NonSimple, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_empty_and_degenerate_inputs() {
        // quadrant with a redundant-looking third facet still unbounded
        let quadrant =
            HalfSpaceSpec::new(2, vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![-1, -1], 5)])
                .unwrap();
        assert!(matches!(enumerate_vertices(&quadrant), Err(Error::Unbounded { .. })));
        // strip: normals of rank 1
        let strip =
            HalfSpaceSpec::new(2, vec![(vec![1, 0], 1), (vec![-1, 0], 0), (vec![1, 0], 2)]).unwrap();
        assert!(matches!(enumerate_vertices(&strip), Err(Error::Unbounded { .. })));
        let empty =
            HalfSpaceSpec::new(2, vec![(vec![-1, 0], -2), (vec![0, -1], 0), (vec![1, 1], 1)])
                .unwrap();
        assert!(matches!(enumerate_vertices(&empty), Err(Error::Empty)));
        let flat = HalfSpaceSpec::new(1, vec![(vec![1], 0), (vec![-1], 0)]).unwrap();
        assert!(matches!(
            enumerate_vertices(&flat),
            Err(Error::NotFullDimensional { .. })
        ));
        // x <= 5 never touches the unit triangle
        let redundant = HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 1), (vec![1, 0], 5)],
        )
        .unwrap();
        assert!(matches!(
            enumerate_vertices(&redundant),
            Err(Error::Redundant { facet: 3 })
        ));
    }

    #[test]
    fn symbolic_vertex_matches_direct_solve() {
        let s = HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![0, 1], 1), (vec![1, 1], 2)],
        )
        .unwrap();
        let lambda = s.offsets_scalar();
        for chart in enumerate_vertices(&s).unwrap() {
            let forms = chart.symbolic_vertex(s.num_facets());
            let evaluated: Vec<Scalar> = forms.iter().map(|f| f.evaluate(&lambda).unwrap()).collect();
            assert_eq!(evaluated, chart.anchor());
            assert_eq!(chart.vertex_at(&lambda), chart.anchor());
            // edges leave exactly one active facet
            for (r, e) in chart.edge_directions().iter().enumerate() {
                for (q, &i) in chart.active_list().iter().enumerate() {
                    let slope = dot(s.normal(i), e);
                    if q == r {
                        assert!(slope.is_negative());
                    } else {
                        assert!(slope.is_zero());
                    }
                }
            }
        }
    }
}
