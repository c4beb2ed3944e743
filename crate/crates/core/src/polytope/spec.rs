use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::scalar_gcd;
use crate::exact::Scalar;
use crate::polytope::FacetSet;

/// Facet bitmasks are `u64`.
pub const MAX_FACETS: usize = 64;

/// The polytope `{x in R^m : x · n_i <= lambda_i for all i}` with primitive
/// integer normals `n_i` and integer offsets `lambda_i`.
///
/// Construction checks only local conditions (shape, nonzero and primitive
/// normals, enough facets). Boundedness, nonemptiness, full dimension,
/// simplicity and irredundancy are certified by
/// [`enumerate_vertices`](crate::polytope::enumerate_vertices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpaceSpec {
    dim: usize,
    normals: Vec<Vec<i64>>,
    offsets: Vec<i64>,
    name: Option<String>,
}

/// Where a point sits relative to a dilate of the polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

impl HalfSpaceSpec {
    pub fn new(dim: usize, facets: Vec<(Vec<i64>, i64)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidSpec(String::from("dimension must be at least 1")));
        }
        if facets.len() < dim + 1 {
            return Err(Error::InvalidSpec(format!(
                "{} facets cannot bound a {dim}-dimensional polytope (need at least {})",
                facets.len(),
                dim + 1
            )));
        }
        if facets.len() > MAX_FACETS {
            return Err(Error::InvalidSpec(format!(
                "{} facets exceeds the supported maximum of {MAX_FACETS}",
                facets.len()
            )));
        }
        let mut normals = Vec::with_capacity(facets.len());
        let mut offsets = Vec::with_capacity(facets.len());
        for (i, (n, offset)) in facets.into_iter().enumerate() {
            if n.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: n.len(),
                });
            }
            match scalar_gcd(&n) {
                0 => {
                    return Err(Error::InvalidSpec(format!("facet {} has a zero normal", i + 1)))
                }
                1 => {}
                g => {
                    return Err(Error::InvalidSpec(format!(
                        "facet {} normal is not primitive (gcd {g})",
                        i + 1
                    )))
                }
            }
            normals.push(n);
            offsets.push(offset);
        }
        Ok(HalfSpaceSpec {
            dim,
            normals,
            offsets,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The standard simplex `x_i >= 0, sum x_i <= 1`.
    pub fn unit_simplex(dim: usize) -> Result<Self> {
        let mut facets = Vec::with_capacity(dim + 1);
        for i in 0..dim {
            let mut n = vec![0; dim];
            n[i] = -1;
            facets.push((n, 0));
        }
        facets.push((vec![1; dim], 1));
        Ok(HalfSpaceSpec::new(dim, facets)?.with_name(format!("simplex{dim}")))
    }

    /// The cube `[0, side]^dim`, facets ordered `-x_1, x_1, -x_2, x_2, ...`.
    pub fn cube(dim: usize, side: i64) -> Result<Self> {
        let mut facets = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut lo = vec![0; dim];
            lo[i] = -1;
            let mut hi = vec![0; dim];
            hi[i] = 1;
            facets.push((lo, 0));
            facets.push((hi, side));
        }
        Ok(HalfSpaceSpec::new(dim, facets)?.with_name(format!("cube{dim}_{side}")))
    }

    /// Cartesian product `self x other`; facets of `self` come first.
    pub fn product(&self, other: &HalfSpaceSpec) -> Result<Self> {
        let dim = self.dim + other.dim;
        let mut facets = Vec::with_capacity(self.num_facets() + other.num_facets());
        for (n, b) in self.facets() {
            let mut v = n.to_vec();
            v.resize(dim, 0);
            facets.push((v, b));
        }
        for (n, b) in other.facets() {
            let mut v = vec![0; self.dim];
            v.extend_from_slice(n);
            facets.push((v, b));
        }
        HalfSpaceSpec::new(dim, facets)
    }

    /// The dilate `k · Delta`, i.e. the same normals with offsets `k · lambda`.
    pub fn dilate(&self, k: i64) -> Self {
        HalfSpaceSpec {
            dim: self.dim,
            normals: self.normals.clone(),
            offsets: self.offsets.iter().map(|b| b * k).collect(),
            name: self.name.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.normals.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn normal(&self, i: usize) -> &[i64] {
        &self.normals[i]
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn offsets_scalar(&self) -> Vec<Scalar> {
        self.offsets.iter().map(|&b| Scalar::from(b)).collect()
    }

    pub fn facets(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, &b)| (n.as_slice(), b))
    }

    /// Facets tight at `x` in `k · Delta`, or `None` when `x` is outside.
    pub fn tight_set(&self, x: &[i64], k: i64) -> Result<Option<FacetSet>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(self.tight_set_unchecked(x, k))
    }

    pub(crate) fn tight_set_unchecked(&self, x: &[i64], k: i64) -> Option<FacetSet> {
        let mut tight = FacetSet::empty();
        for (i, (n, &b)) in self.normals.iter().zip(&self.offsets).enumerate() {
            let lhs: i128 = n
                .iter()
                .zip(x)
                .map(|(&a, &c)| i128::from(a) * i128::from(c))
                .sum();
            let rhs = i128::from(b) * i128::from(k);
            if lhs > rhs {
                return None;
            }
            if lhs == rhs {
                tight.insert(i);
            }
        }
        Some(tight)
    }

    /// Classifies the integer point `x` against `k · Delta`.
    pub fn contains_lattice_point(&self, x: &[i64], k: i64) -> Result<Location> {
        Ok(match self.tight_set(x, k)? {
            None => Location::Outside,
            Some(t) if t.is_empty() => Location::Interior,
            Some(_) => Location::Boundary,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_normals() {
        assert!(matches!(
            HalfSpaceSpec::new(2, vec![(vec![2, 2], 2), (vec![-1, 0], 0), (vec![0, -1], 0)]),
            Err(Error::InvalidSpec(_))
        ));
        assert!(HalfSpaceSpec::new(2, vec![(vec![0, 0], 1), (vec![-1, 0], 0), (vec![0, -1], 0)])
            .is_err());
        assert!(matches!(
            HalfSpaceSpec::new(2, vec![(vec![1], 1), (vec![-1, 0], 0), (vec![0, -1], 0)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        assert!(HalfSpaceSpec::new(2, vec![(vec![1, 0], 1), (vec![-1, 0], 0)]).is_err());
        assert!(HalfSpaceSpec::new(0, vec![]).is_err());
    }

    #[test]
    fn classifies_points() {
        let s = HalfSpaceSpec::unit_simplex(2).unwrap();
        assert_eq!(s.contains_lattice_point(&[0, 0], 1).unwrap(), Location::Boundary);
        assert_eq!(s.contains_lattice_point(&[1, 1], 3).unwrap(), Location::Interior);
        assert_eq!(s.contains_lattice_point(&[2, 2], 3).unwrap(), Location::Outside);
        assert!(matches!(
            s.contains_lattice_point(&[1], 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn product_and_dilate() {
        let prism = HalfSpaceSpec::unit_simplex(2)
            .unwrap()
            .product(&HalfSpaceSpec::cube(1, 1).unwrap())
            .unwrap();
        assert_eq!(prism.dim(), 3);
        assert_eq!(prism.num_facets(), 5);
        assert_eq!(prism.normal(4), &[0, 0, 1]);
        assert_eq!(prism.dilate(3).offsets(), &[0, 0, 3, 0, 3]);
    }
}
