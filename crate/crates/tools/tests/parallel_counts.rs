mod common;

use ehrhart_core::lattice::{count_report, ehrhart_interpolate, DEFAULT_BUDGET};
use ehrhart_core::polytope::DelzantPolytope;
use ehrhart_core::{EhrhartKind, Error};
use ehrhart_tools::parallel::{count_report_parallel, ehrhart_brute};

use common::{delzant_files, load};

#[test]
fn parallel_and_serial_reports_are_identical() {
    for path in delzant_files() {
        let p = DelzantPolytope::new(load(&path)).unwrap();
        for k in 1..=3 {
            let serial = count_report(&p, k, DEFAULT_BUDGET).unwrap();
            for threads in [1, 2, 3, 7] {
                let par = count_report_parallel(&p, k, DEFAULT_BUDGET, threads).unwrap();
                assert_eq!(par, serial, "{} k={k} threads={threads}", path.display());
            }
        }
    }
}

#[test]
fn parallel_fit_matches_core() {
    for path in delzant_files() {
        let p = DelzantPolytope::new(load(&path)).unwrap();
        for kind in [EhrhartKind::Full, EhrhartKind::Interior, EhrhartKind::Boundary] {
            assert_eq!(
                ehrhart_brute(&p, kind, DEFAULT_BUDGET, 4).unwrap(),
                ehrhart_interpolate(&p, kind, DEFAULT_BUDGET).unwrap()
            );
        }
    }
}

#[test]
fn budget_is_enforced_before_counting() {
    let p = DelzantPolytope::new(load(&common::corpus_file("cube3_1"))).unwrap();
    // 11 points per side at k = 10
    match count_report_parallel(&p, 10, 1000, 4) {
        Err(Error::BudgetExceeded { required, budget }) => {
            assert_eq!(required, 11u128.pow(3));
            assert_eq!(budget, 1000);
        }
        other => panic!("{other:?}"),
    }
    assert!(count_report_parallel(&p, 10, 1331, 4).is_ok());
}
