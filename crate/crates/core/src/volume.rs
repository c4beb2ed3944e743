//! The volume polynomial `vol(Delta(lambda))` in the chamber of the anchor
//! offsets, its boundary companion `sum_i d/d(lambda_i) vol`, and two
//! independent numeric volume routes used to check them.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{rational_det, rational_inverse, MultiPoly, Scalar};
use crate::polytope::{enumerate_vertices_at, DelzantPolytope, FaceLattice, FacetSet};

/// `vol(Delta(lambda_1..lambda_d))` as a polynomial, valid in the chamber of
/// `anchor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumePolynomial {
    pub poly: MultiPoly,
    pub degree: usize,
    pub anchor: Vec<Scalar>,
}

impl VolumePolynomial {
    /// Euclidean volume of the anchor polytope.
    pub fn value_at_anchor(&self) -> Scalar {
        self.poly
            .evaluate(&self.anchor)
            .expect("anchor has one offset per facet")
    }
}

/// `sum_i d/d(lambda_i) vol`, keeping the summand for each facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryVolumePolynomial {
    pub poly: MultiPoly,
    pub per_facet: Vec<MultiPoly>,
}

/// Which vertex of each face the pulling triangulation cones from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Apex {
    /// Graded-lex least vertex.
    #[default]
    Least,
    /// Graded-lex greatest vertex.
    Greatest,
}

/// Pulling triangulation of `face`: cone from the apex over the
/// triangulations of the facets of `face` that miss the apex. Returns
/// simplices as lists of vertex chart indices, apex last.
fn pulling_triangulation(lattice: &FaceLattice, face: FacetSet, apex: Apex) -> Vec<Vec<usize>> {
    let rec = lattice.get(face).expect("triangulating a recorded face");
    if rec.dim == 0 {
        return vec![vec![rec.vertices[0]]];
    }
    // chart lists are sorted graded-lex, so extreme indices are extreme vertices
    let top = match apex {
        Apex::Least => *rec.vertices.iter().min().expect("faces have vertices"),
        Apex::Greatest => *rec.vertices.iter().max().expect("faces have vertices"),
    };
    let mut out = Vec::new();
    for child in lattice.children(face) {
        let child_rec = lattice.get(child).expect("children are recorded");
        if child_rec.vertices.contains(&top) {
            continue;
        }
        for mut simplex in pulling_triangulation(lattice, child, apex) {
            simplex.push(top);
            out.push(simplex);
        }
    }
    out
}

fn poly_det(rows: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = rows.len();
    match n {
        0 => MultiPoly::one(nvars),
        1 => rows[0][0].clone(),
        _ => {
            let mut acc = MultiPoly::zero(nvars);
            for col in 0..n {
                if rows[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][col] * &poly_det(&minor, nvars);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Symbolic volume polynomial from the pulling triangulation with the
/// graded-lex least vertex as apex.
pub fn volume_polynomial(polytope: &DelzantPolytope) -> Result<VolumePolynomial> {
    volume_polynomial_with_apex(polytope, Apex::Least)
}

/// Triangulates once at the anchor offsets, then sums
/// `sign * det(v_1(lambda) - v_0(lambda), ...) / m!` over the simplices with
/// each sign frozen at the anchor.
pub fn volume_polynomial_with_apex(polytope: &DelzantPolytope, apex: Apex) -> Result<VolumePolynomial> {
    let m = polytope.dim();
    let d = polytope.num_facets();
    let anchor = polytope.spec().offsets_scalar();
    let symbolic: Vec<Vec<MultiPoly>> = polytope
        .charts()
        .iter()
        .map(|c| c.symbolic_vertex(d))
        .collect();
    let inv_factorial = Scalar::factorial(m as u32).recip();
    let mut poly = MultiPoly::zero(d);
    for simplex in pulling_triangulation(polytope.lattice(), FacetSet::empty(), apex) {
        let base = &symbolic[simplex[0]];
        let rows: Vec<Vec<MultiPoly>> = simplex[1..]
            .iter()
            .map(|&v| symbolic[v].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let det = poly_det(&rows, d);
        let at_anchor = det.evaluate(&anchor)?;
        if at_anchor.is_zero() {
            return Err(Error::DegenerateTriangulation { simplex });
        }
        let signed = if at_anchor.is_negative() {
            -&inv_factorial
        } else {
            inv_factorial.clone()
        };
        poly = &poly + &det.scale(&signed);
    }
    Ok(VolumePolynomial {
        poly,
        degree: m,
        anchor,
    })
}

pub fn boundary_volume_polynomial(v: &VolumePolynomial) -> BoundaryVolumePolynomial {
    let d = v.poly.nvars();
    let per_facet: Vec<MultiPoly> = (0..d)
        .map(|i| v.poly.differentiate(i).expect("index below variable count"))
        .collect();
    let poly = per_facet.iter().fold(MultiPoly::zero(d), |acc, p| &acc + p);
    BoundaryVolumePolynomial { poly, per_facet }
}

/// Volume of `face` (of dimension `dim`) by barycentric subdivision: one
/// simplex per maximal flag of faces, spanned by the face centroids.
/// `coords[v]` are the coordinates of vertex `v` in a `dim`-dimensional
/// chart of the face's affine hull.
fn flag_volume(lattice: &FaceLattice, face: FacetSet, coords: &[Vec<Scalar>], dim: usize) -> Scalar {
    fn centroid(lattice: &FaceLattice, face: FacetSet, coords: &[Vec<Scalar>]) -> Vec<Scalar> {
        let rec = lattice.get(face).expect("flag faces are recorded");
        let n = Scalar::from(rec.vertices.len() as i64);
        let width = coords[rec.vertices[0]].len();
        (0..width)
            .map(|j| rec.vertices.iter().map(|&v| &coords[v][j]).sum::<Scalar>() / &n)
            .collect()
    }

    fn walk(
        lattice: &FaceLattice,
        face: FacetSet,
        depth: usize,
        chain: &mut Vec<Vec<Scalar>>,
        coords: &[Vec<Scalar>],
        acc: &mut Scalar,
    ) {
        chain.push(centroid(lattice, face, coords));
        if depth == 0 {
            let base = chain.last().expect("chain is nonempty");
            let rows: Vec<Vec<Scalar>> = chain[..chain.len() - 1]
                .iter()
                .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            *acc += rational_det(&rows).expect("square by construction").abs();
        } else {
            for child in lattice.children(face) {
                walk(lattice, child, depth - 1, chain, coords, acc);
            }
        }
        chain.pop();
    }

    let mut acc = Scalar::zero();
    let mut chain = Vec::with_capacity(dim + 1);
    walk(lattice, face, dim, &mut chain, coords, &mut acc);
    acc / Scalar::factorial(dim as u32)
}

/// Exact volume at rational sample offsets, from a fresh vertex enumeration
/// and a barycentric triangulation. The sample must have the same
/// vertex-facet incidences as the anchor.
pub fn numeric_volume_at(polytope: &DelzantPolytope, sample: &[Scalar]) -> Result<Scalar> {
    let d = polytope.num_facets();
    if sample.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: sample.len(),
        });
    }
    let charts = match enumerate_vertices_at(polytope.spec(), sample) {
        Ok(c) => c,
        Err(
            Error::Empty
            | Error::NonSimple { .. }
            | Error::NotFullDimensional { .. }
            | Error::Redundant { .. },
        ) => return Err(Error::ChamberCrossed),
        Err(e) => return Err(e),
    };
    let mut here: Vec<FacetSet> = charts.iter().map(|c| c.active()).collect();
    let mut there: Vec<FacetSet> = polytope.charts().iter().map(|c| c.active()).collect();
    here.sort();
    there.sort();
    if here != there {
        return Err(Error::ChamberCrossed);
    }
    let lattice = FaceLattice::from_charts(polytope.dim(), d, &charts);
    let coords: Vec<Vec<Scalar>> = charts.iter().map(|c| c.anchor().to_vec()).collect();
    Ok(flag_volume(&lattice, FacetSet::empty(), &coords, polytope.dim()))
}

/// Columns `w_1..w_m` of a unimodular matrix with `n · w_1 = 1` and
/// `n · w_j = 0` for `j > 1`, for a primitive `n`.
fn unimodular_completion(n: &[i64]) -> Vec<Vec<i128>> {
    let m = n.len();
    let mut a: Vec<i128> = n.iter().map(|&x| i128::from(x)).collect();
    // cols[j] is column j of W
    let mut cols: Vec<Vec<i128>> = (0..m)
        .map(|j| (0..m).map(|i| i128::from(i == j)).collect())
        .collect();
    loop {
        let Some(p) = (0..m)
            .filter(|&j| a[j] != 0)
            .min_by_key(|&j| a[j].unsigned_abs())
        else {
            unreachable!("primitive normals are nonzero");
        };
        let mut reduced = false;
        for j in 0..m {
            if j == p || a[j] == 0 {
                continue;
            }
            let q = a[j].div_euclid(a[p]);
            a[j] -= q * a[p];
            let src = cols[p].clone();
            for (x, s) in cols[j].iter_mut().zip(&src) {
                *x -= q * s;
            }
            reduced = true;
        }
        if !reduced {
            cols.swap(0, p);
            a.swap(0, p);
            if a[0] < 0 {
                for v in cols[0].iter_mut() {
                    *v = -*v;
                }
            }
            debug_assert_eq!(a[0].abs(), 1, "normal must be primitive");
            return cols;
        }
    }
}

/// Lattice-normalized `(m-1)`-volume of facet `facet`: its volume measured
/// in a lattice basis of `Z^m ∩ n^⊥`, which equals the Euclidean volume
/// divided by `|n|`.
pub fn lattice_facet_volume(polytope: &DelzantPolytope, facet: usize) -> Result<Scalar> {
    let m = polytope.dim();
    let d = polytope.num_facets();
    if facet >= d {
        return Err(Error::IndexOutOfRange {
            index: facet,
            count: d,
        });
    }
    let key = FacetSet::singleton(facet);
    let rec = polytope.lattice().get(key).ok_or(Error::UnknownFace(key))?;
    let w = unimodular_completion(polytope.spec().normal(facet));
    let w_rows: Vec<Vec<Scalar>> = (0..m)
        .map(|i| (0..m).map(|j| Scalar::from_int(w[j][i])).collect())
        .collect();
    let w_inv = rational_inverse(&w_rows)?.expect("unimodular matrices are invertible");
    let base = polytope.charts()[rec.vertices[0]].anchor().to_vec();
    let mut coords: Vec<Vec<Scalar>> = vec![Vec::new(); polytope.charts().len()];
    for &v in &rec.vertices {
        let diff: Vec<Scalar> = polytope.charts()[v]
            .anchor()
            .iter()
            .zip(&base)
            .map(|(a, b)| a - b)
            .collect();
        let c: Vec<Scalar> = w_inv
            .iter()
            .map(|row| row.iter().zip(&diff).map(|(a, b)| a * b).sum())
            .collect();
        debug_assert!(c[0].is_zero(), "facet vertices lie in the hyperplane");
        coords[v] = c[1..].to_vec();
    }
    Ok(flag_volume(polytope.lattice(), key, &coords, m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::HalfSpaceSpec;

    fn poly(spec: HalfSpaceSpec) -> DelzantPolytope {
        DelzantPolytope::new(spec).unwrap()
    }

    fn l(d: usize, i: usize) -> MultiPoly {
        MultiPoly::var(d, i).unwrap()
    }

    fn trapezoid() -> HalfSpaceSpec {
        HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![0, 1], 1), (vec![1, 1], 2)],
        )
        .unwrap()
    }

    #[test]
    fn unit_triangle_volume_polynomial() {
        let p = poly(HalfSpaceSpec::unit_simplex(2).unwrap());
        let v = volume_polynomial(&p).unwrap();
        let sum = &(&l(3, 0) + &l(3, 1)) + &l(3, 2);
        assert_eq!(v.poly, (&sum * &sum).scale(&Scalar::new(1, 2)));
        assert_eq!(v.value_at_anchor(), Scalar::new(1, 2));
        let b = boundary_volume_polynomial(&v);
        assert_eq!(b.poly, sum.scale(&Scalar::from(3)));
    }

    #[test]
    fn square_volume_polynomial() {
        let p = poly(HalfSpaceSpec::cube(2, 1).unwrap());
        let v = volume_polynomial(&p).unwrap();
        let expected = &(&l(4, 0) + &l(4, 1)) * &(&l(4, 2) + &l(4, 3));
        assert_eq!(v.poly, expected);
        let b = boundary_volume_polynomial(&v);
        assert_eq!(b.poly.evaluate(&v.anchor).unwrap(), Scalar::from(4));
    }

    #[test]
    fn trapezoid_volume_polynomial() {
        let p = poly(trapezoid());
        let v = volume_polynomial(&p).unwrap();
        // height l2 + l3, parallel sides l1 + l2 + l4 and l1 + l4 - l3
        let a = &l(4, 1) + &l(4, 2);
        let b = &l(4, 0) + &l(4, 3);
        let half_diff = (&(&l(4, 1) * &l(4, 1)) - &(&l(4, 2) * &l(4, 2))).scale(&Scalar::new(1, 2));
        let expected = &(&a * &b) + &half_diff;
        assert_eq!(v.poly, expected);
        assert_eq!(v.value_at_anchor(), Scalar::new(3, 2));
        let sample: Vec<Scalar> = [0, 1, 1, 2].iter().map(|&x| Scalar::from(x)).collect();
        assert_eq!(v.poly.evaluate(&sample).unwrap(), Scalar::from(4));
        assert_eq!(numeric_volume_at(&p, &sample).unwrap(), Scalar::from(4));
        assert_eq!(
            volume_polynomial_with_apex(&p, Apex::Greatest).unwrap().poly,
            v.poly
        );
    }

    #[test]
    fn segment_boundary_volume_is_two() {
        let p = poly(HalfSpaceSpec::unit_simplex(1).unwrap());
        let v = volume_polynomial(&p).unwrap();
        assert_eq!(v.poly, &l(2, 0) + &l(2, 1));
        let b = boundary_volume_polynomial(&v);
        assert_eq!(b.poly, MultiPoly::constant(2, Scalar::from(2)));
        assert_eq!(lattice_facet_volume(&p, 0).unwrap(), Scalar::one());
    }

    #[test]
    fn numeric_volume_examples() {
        let tri = poly(HalfSpaceSpec::unit_simplex(2).unwrap());
        let at = |v: &[(i64, i64)]| -> Vec<Scalar> { v.iter().map(|&(p, q)| Scalar::new(p, q)).collect() };
        assert_eq!(
            numeric_volume_at(&tri, &at(&[(0, 1), (0, 1), (1, 1)])).unwrap(),
            Scalar::new(1, 2)
        );
        assert_eq!(
            numeric_volume_at(&tri, &at(&[(1, 3), (0, 1), (1, 1)])).unwrap(),
            Scalar::new(8, 9)
        );
        let sq = poly(HalfSpaceSpec::cube(2, 1).unwrap());
        assert_eq!(
            numeric_volume_at(&sq, &at(&[(0, 1), (2, 1), (0, 1), (3, 1)])).unwrap(),
            Scalar::from(6)
        );
        // collapsing the trapezoid's top edge changes its combinatorics
        let tr = poly(trapezoid());
        assert!(matches!(
            numeric_volume_at(&tr, &at(&[(0, 1), (0, 1), (2, 1), (2, 1)])),
            Err(Error::ChamberCrossed)
        ));
    }

    #[test]
    fn facet_volumes_match_derivatives() {
        for spec in [
            HalfSpaceSpec::unit_simplex(3).unwrap(),
            HalfSpaceSpec::cube(3, 2).unwrap(),
            trapezoid(),
        ] {
            let p = poly(spec);
            let v = volume_polynomial(&p).unwrap();
            let b = boundary_volume_polynomial(&v);
            for i in 0..p.num_facets() {
                assert_eq!(
                    b.per_facet[i].evaluate(&v.anchor).unwrap(),
                    lattice_facet_volume(&p, i).unwrap()
                );
            }
        }
    }

    #[test]
    fn completion_is_unimodular() {
        for n in [[3i64, 5, -7], [0, 0, 1], [-2, 3, 0], [1, 1, 1]] {
            let w = unimodular_completion(&n);
            let dots: Vec<i128> = w
                .iter()
                .map(|c| c.iter().zip(&n).map(|(a, &b)| a * i128::from(b)).sum())
                .collect();
            assert_eq!(dots, vec![1, 0, 0]);
            let rows: Vec<Vec<Scalar>> = (0..3)
                .map(|i| (0..3).map(|j| Scalar::from_int(w[j][i])).collect())
                .collect();
            assert_eq!(rational_det(&rows).unwrap().abs(), Scalar::one());
        }
    }
}
