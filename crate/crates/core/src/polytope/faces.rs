use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::polytope::{FacetSet, VertexChart};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRecord {
    pub dim: usize,
    /// Indices into the vertex chart list of the vertices on this face.
    pub vertices: Vec<usize>,
}

/// Result of resolving `F_I = cap_{i in I} F_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceQuery<'a> {
    /// `I` is empty: the whole polytope.
    Whole(&'a FaceRecord),
    Face(&'a FaceRecord),
    Empty,
}

/// All faces of a simple polytope keyed by their active facet set.
///
/// In a simple polytope a face of codimension `l` lies on exactly `l`
/// facets, and `F_I` is nonempty iff `I` is contained in the active set of
/// some vertex. The whole polytope is recorded under the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    num_facets: usize,
    faces: BTreeMap<FacetSet, FaceRecord>,
}

impl FaceLattice {
    pub fn from_charts(dim: usize, num_facets: usize, charts: &[VertexChart]) -> Self {
        let mut faces: BTreeMap<FacetSet, FaceRecord> = BTreeMap::new();
        for (v, chart) in charts.iter().enumerate() {
            let active = chart.active().bits();
            // every subset of the vertex's active set names a face through it
            let mut sub = active;
            loop {
                let key = FacetSet::from_bits(sub);
                faces
                    .entry(key)
                    .or_insert_with(|| FaceRecord {
                        dim: dim - key.len(),
                        vertices: Vec::new(),
                    })
                    .vertices
                    .push(v);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & active;
            }
        }
        FaceLattice {
            dim,
            num_facets,
            faces,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.num_facets
    }

    pub fn resolve(&self, set: FacetSet) -> FaceQuery<'_> {
        match self.faces.get(&set) {
            Some(rec) if set.is_empty() => FaceQuery::Whole(rec),
            Some(rec) => FaceQuery::Face(rec),
            None => FaceQuery::Empty,
        }
    }

    pub fn get(&self, set: FacetSet) -> Option<&FaceRecord> {
        self.faces.get(&set)
    }

    pub fn is_face(&self, set: FacetSet) -> bool {
        self.faces.contains_key(&set)
    }

    /// Every face including the polytope itself, in increasing key order.
    pub fn faces(&self) -> impl Iterator<Item = (FacetSet, &FaceRecord)> {
        self.faces.iter().map(|(k, v)| (*k, v))
    }

    /// Every nonempty proper face (the terms of inclusion-exclusion that can
    /// be nonzero).
    pub fn proper_faces(&self) -> impl Iterator<Item = (FacetSet, &FaceRecord)> {
        self.faces().filter(|(k, _)| !k.is_empty())
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = (FacetSet, &FaceRecord)> {
        self.faces().filter(move |(_, r)| r.dim == dim)
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = alloc::vec![0; self.dim + 1];
        for rec in self.faces.values() {
            f[rec.dim] += 1;
        }
        f
    }

    /// `sum (-1)^dim` over all faces including the polytope; 1 for any
    /// polytope.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .values()
            .map(|r| if r.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// The facets of face `set` (faces one dimension lower beneath it).
    pub fn children(&self, set: FacetSet) -> impl Iterator<Item = FacetSet> + '_ {
        (0..self.num_facets)
            .filter(move |&i| !set.contains(i))
            .map(move |i| set.with(i))
            .filter(|s| self.faces.contains_key(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{build_face_lattice, HalfSpaceSpec};
    use alloc::vec;

    #[test]
    fn unit_triangle_lattice() {
        let lat = build_face_lattice(&HalfSpaceSpec::unit_simplex(2).unwrap()).unwrap();
        assert_eq!(lat.f_vector(), vec![3, 3, 1]);
        match lat.resolve(FacetSet::from_indices([0, 1])) {
            FaceQuery::Face(rec) => {
                assert_eq!(rec.dim, 0);
                assert_eq!(rec.vertices, vec![0]);
            }
            other => panic!("expected vertex, got {other:?}"),
        }
        assert_eq!(lat.resolve(FacetSet::from_indices([0, 1, 2])), FaceQuery::Empty);
        assert!(matches!(lat.resolve(FacetSet::empty()), FaceQuery::Whole(_)));
        assert_eq!(lat.euler_characteristic(), 1);
    }

    #[test]
    fn square_parallel_facets_do_not_meet() {
        let lat = build_face_lattice(&HalfSpaceSpec::cube(2, 1).unwrap()).unwrap();
        assert_eq!(lat.resolve(FacetSet::from_indices([0, 1])), FaceQuery::Empty);
        assert_eq!(lat.f_vector(), vec![4, 4, 1]);
    }

    #[test]
    fn hirzebruch_trapezoid_lattice() {
        let s = HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![0, 1], 1), (vec![1, 1], 2)],
        )
        .unwrap();
        let lat = build_face_lattice(&s).unwrap();
        assert_eq!(lat.f_vector(), vec![4, 4, 1]);
        let children: Vec<_> = lat.children(FacetSet::singleton(3)).collect();
        assert_eq!(children, vec![FacetSet::from_indices([1, 3]), FacetSet::from_indices([2, 3])]);
    }
}
