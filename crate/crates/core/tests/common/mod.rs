#![allow(dead_code)]

use ehrhart_core::polytope::DelzantPolytope;
use ehrhart_core::{HalfSpaceSpec, Scalar};

pub fn trapezoid(top: i64, diag: i64) -> HalfSpaceSpec {
    HalfSpaceSpec::new(
        2,
        vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![0, 1], top), (vec![1, 1], diag)],
    )
    .unwrap()
    .with_name(format!("hirzebruch_{top}_{diag}"))
}

/// Delzant polytopes in dimensions 1 through 4.
pub fn corpus() -> Vec<HalfSpaceSpec> {
    let seg = HalfSpaceSpec::cube(1, 1).unwrap();
    vec![
        HalfSpaceSpec::unit_simplex(1).unwrap(),
        HalfSpaceSpec::unit_simplex(2).unwrap(),
        HalfSpaceSpec::unit_simplex(3).unwrap(),
        HalfSpaceSpec::unit_simplex(4).unwrap(),
        HalfSpaceSpec::cube(1, 3).unwrap(),
        HalfSpaceSpec::cube(2, 1).unwrap(),
        HalfSpaceSpec::cube(2, 2).unwrap(),
        HalfSpaceSpec::cube(3, 1).unwrap(),
        trapezoid(1, 2),
        trapezoid(2, 3),
        HalfSpaceSpec::unit_simplex(2).unwrap().product(&seg).unwrap(),
        HalfSpaceSpec::unit_simplex(3).unwrap().product(&seg).unwrap(),
        // translated square [-1, 1]^2
        HalfSpaceSpec::new(
            2,
            vec![(vec![-1, 0], 1), (vec![1, 0], 1), (vec![0, -1], 1), (vec![0, 1], 1)],
        )
        .unwrap(),
    ]
}

pub fn delzant_corpus() -> Vec<DelzantPolytope> {
    corpus().into_iter().map(|s| DelzantPolytope::new(s).unwrap()).collect()
}

/// Deterministic linear congruential stream for reproducible samples.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u32(&mut self) -> u32 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) as u32
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u32() as i64).rem_euclid(hi - lo + 1)
    }
}

/// Offsets near `lambda_0`: scaled by a factor in [1, 2] and perturbed by
/// at most 1/(8 d) per facet.
pub fn chamber_sample(anchor: &[Scalar], rng: &mut Lcg) -> Vec<Scalar> {
    let d = anchor.len() as i64;
    let scale = Scalar::new(rng.range(16, 32), 16);
    anchor
        .iter()
        .map(|a| a * &scale + Scalar::new(rng.range(-7, 7), 56 * d))
        .collect()
}
