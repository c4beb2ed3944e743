//! Slab-parallel brute-force counting.

use std::thread;

use ehrhart_core::lattice::{bounding_box, box_size, count_report_in_slab, fit_counts, slabs};
use ehrhart_core::polytope::DelzantPolytope;
use ehrhart_core::{CountReport, EhrhartKind, EhrhartPoly, Error, Result, UniPoly};

pub fn default_threads() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Same result as `lattice::count_report`, with the bounding box split
/// into `threads` slabs along the first coordinate.
pub fn count_report_parallel(polytope: &DelzantPolytope, k: u64, budget: u128, threads: usize) -> Result<CountReport> {
    let required = box_size(&bounding_box(polytope, k)?);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let parts = slabs(polytope, k, threads.max(1))?;
    let results: Vec<Result<CountReport>> = thread::scope(|s| {
        let handles: Vec<_> = parts
            .into_iter()
            .map(|slab| s.spawn(move || count_report_in_slab(polytope, k, slab)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("counting thread panicked")).collect()
    });
    let mut total = CountReport { k, ..CountReport::default() };
    for r in results {
        total.merge(&r?);
    }
    Ok(total)
}

/// Reports for `k = 1..=max_k`.
pub fn count_reports(polytope: &DelzantPolytope, max_k: u64, budget: u128, threads: usize) -> Result<Vec<CountReport>> {
    (1..=max_k).map(|k| count_report_parallel(polytope, k, budget, threads)).collect()
}

/// Brute-force Ehrhart polynomial from parallel counts.
pub fn ehrhart_brute(polytope: &DelzantPolytope, kind: EhrhartKind, budget: u128, threads: usize) -> Result<EhrhartPoly> {
    let Some(degree) = kind.degree(polytope) else {
        return Ok(EhrhartPoly { poly: UniPoly::zero(), kind });
    };
    let counts: Vec<u64> = count_reports(polytope, degree as u64 + 2, budget, threads)?
        .iter()
        .map(|r| r.region(kind.region()))
        .collect();
    fit_counts(kind, degree, &counts)
}
