//! Every invariant the library promises, run against one polytope.

use ehrhart_core::exact::euler_expansion_terms;
use ehrhart_core::hilbert::{hilbert_report_from, inclusion_exclusion_terms_from, signed_total};
use ehrhart_core::lattice::{count_report, fit_counts};
use ehrhart_core::operator::{boundary_count_formula, khovanskii_count, symbolic_ehrhart};
use ehrhart_core::polytope::DelzantPolytope;
use ehrhart_core::volume::{
    boundary_volume_polynomial, lattice_facet_volume, numeric_volume_at, volume_polynomial,
    volume_polynomial_with_apex, Apex,
};
use ehrhart_core::{EhrhartKind, Error, HilbertReport, Result, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::Settings;
use crate::parallel::count_reports;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct CrossCheck {
    pub checks: Vec<Check>,
    pub report: HilbertReport,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &'static str, failures: Vec<String>, ok: String) -> Check {
    match failures.first() {
        None => Check { name, passed: true, detail: ok },
        Some(first) => Check {
            name,
            passed: false,
            detail: format!("{first} ({} failure(s))", failures.len()),
        },
    }
}

/// Offsets near `anchor`, scaled by a factor in [1, 2] and perturbed by at
/// most 1/(8 d) per facet.
pub fn chamber_sample<R: Rng>(anchor: &[Scalar], rng: &mut R) -> Vec<Scalar> {
    let d = anchor.len() as i64;
    let scale = Scalar::new(rng.gen_range(16..=32), 16);
    anchor
        .iter()
        .map(|a| a * &scale + Scalar::new(rng.gen_range(-7..=7), 56 * d))
        .collect()
}

pub fn cross_check(p: &DelzantPolytope, s: Settings, seed: u64) -> Result<CrossCheck> {
    let m = p.dim();
    let d = p.num_facets();
    let top = m as u64 + 2;
    let reports = count_reports(p, top, s.budget, s.threads)?;
    let report = hilbert_report_from(p, &reports)?;
    let mut checks = Vec::new();

    checks.push(check(
        "hilbert agreement",
        if report.agree { vec![] } else { vec!["the three boundary polynomials differ".into()] },
        format!("boundary Ehrhart {}", report.by_oracle),
    ));

    let chi = p.lattice().euler_characteristic();
    checks.push(check(
        "euler characteristic",
        if chi == 1 { vec![] } else { vec![format!("got {chi}")] },
        format!("f-vector {:?}", p.lattice().f_vector()),
    ));

    let v = volume_polynomial(p)?;
    let mut bad = Vec::new();
    if !v.poly.is_homogeneous(m as u32) {
        bad.push(format!("{} is not homogeneous of degree {m}", v.poly));
    }
    let direct = numeric_volume_at(p, &v.anchor)?;
    if direct != v.value_at_anchor() {
        bad.push(format!("vol(anchor) {} but triangulation gives {direct}", v.value_at_anchor()));
    }
    if volume_polynomial_with_apex(p, Apex::Greatest)?.poly != v.poly {
        bad.push("apex choice changes the polynomial".into());
    }
    checks.push(check("volume polynomial", bad, format!("vol = {}", v.poly)));

    let wanted = Scalar::binomial((d + m) as u32, m as u32).to_u64().unwrap_or(u64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut ok, mut tried, mut bad) = (0u64, 0u64, Vec::new());
    while ok < wanted && tried < 20 * wanted {
        tried += 1;
        let sample = chamber_sample(&v.anchor, &mut rng);
        match numeric_volume_at(p, &sample) {
            Ok(expected) => {
                ok += 1;
                let got = v.poly.evaluate(&sample)?;
                if got != expected {
                    bad.push(format!("at {sample:?}: polynomial {got}, triangulation {expected}"));
                }
            }
            Err(Error::ChamberCrossed) => {}
            Err(e) => return Err(e),
        }
    }
    if ok < wanted {
        bad.push(format!("only {ok} of {wanted} samples stayed in the chamber"));
    }
    checks.push(check("chamber samples", bad, format!("{ok} samples ({tried} drawn)")));

    let b = boundary_volume_polynomial(&v);
    let mut bad = Vec::new();
    for (i, q) in b.per_facet.iter().enumerate() {
        let derivative = q.evaluate(&v.anchor)?;
        let normalized = lattice_facet_volume(p, i)?;
        if derivative != normalized {
            bad.push(format!("facet {}: derivative {derivative}, lattice volume {normalized}", i + 1));
        }
    }
    checks.push(check(
        "facet volumes",
        bad,
        format!("vol(boundary) at anchor {}", b.poly.evaluate(&v.anchor)?),
    ));

    let mut bad = Vec::new();
    for r in reports.iter().take(2) {
        let dilated = DelzantPolytope::new(p.spec().dilate(r.k as i64))?;
        let dv = volume_polynomial(&dilated)?;
        let full = khovanskii_count(&dv)?;
        if full != Scalar::from(r.total) {
            bad.push(format!("k={}: khovanskii {full}, brute force {}", r.k, r.total));
        }
        let boundary = boundary_count_formula(&dv)?;
        if boundary != Scalar::from(r.boundary) {
            bad.push(format!("k={}: boundary formula {boundary}, brute force {}", r.k, r.boundary));
        }
    }
    checks.push(check("operator formulas", bad, "k = 1, 2".into()));

    let mut bad = Vec::new();
    // sign of each subset size in the expansion of 1 - x_1 ... x_d
    let mut size_sign = std::collections::BTreeMap::new();
    if d <= 12 {
        for (sign, q) in euler_expansion_terms(d)? {
            size_sign.insert(q.total_degree().unwrap_or(0) as usize, sign);
        }
    }
    for r in &reports {
        let terms = inclusion_exclusion_terms_from(p, r);
        let total = signed_total(&terms);
        if total != r.boundary as i128 {
            bad.push(format!("k={}: inclusion-exclusion {total}, boundary {}", r.k, r.boundary));
        }
        for t in &terms {
            if size_sign.get(&t.size).is_some_and(|&e| e != t.sign) {
                bad.push(format!("size {} has sign {}", t.size, t.sign));
            }
        }
    }
    checks.push(check("inclusion-exclusion", bad, format!("k = 1..={top}")));

    let mut bad = Vec::new();
    let totals: Vec<u64> = reports.iter().map(|r| r.total).collect();
    let full = fit_counts(EhrhartKind::Full, m, &totals)?;
    let symbolic_full = symbolic_ehrhart(&v, EhrhartKind::Full)?;
    if symbolic_full.poly != full.poly {
        bad.push(format!("full: operator {symbolic_full}, brute force {full}"));
    }
    if report.by_operator_formula.poly != report.by_oracle.poly {
        bad.push(format!("boundary: operator {}, brute force {}", report.by_operator_formula, report.by_oracle));
    }
    if full.poly.coefficient(0) != Scalar::one() {
        bad.push(format!("constant term {}", full.poly.coefficient(0)));
    }
    if full.poly.coefficient(m) != v.value_at_anchor() {
        bad.push(format!("leading coefficient {} but volume {}", full.poly.coefficient(m), v.value_at_anchor()));
    }
    let euler_b = if m.is_multiple_of(2) { 0 } else { 2 };
    if report.by_oracle.poly.coefficient(0) != Scalar::from(euler_b) {
        bad.push(format!("boundary constant term {}", report.by_oracle.poly.coefficient(0)));
    }
    checks.push(check("ehrhart polynomials", bad, format!("full {full}")));

    let mut bad = Vec::new();
    let sign = if m.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    for r in &reports {
        let mirrored = full.poly.eval_int(-(r.k as i64)) * &sign;
        if mirrored != Scalar::from(r.interior) {
            bad.push(format!("k={}: reciprocity gives {mirrored}, interior count {}", r.k, r.interior));
        }
    }
    checks.push(check("reciprocity", bad, format!("k = 1..={top}")));

    let mut bad = Vec::new();
    for r in reports.iter().take(2) {
        let serial = count_report(p, r.k, s.budget)?;
        if &serial != r {
            bad.push(format!("k={}: serial and parallel counts differ", r.k));
        }
    }
    checks.push(check("parallel counting", bad, format!("{} threads", s.threads)));

    Ok(CrossCheck { checks, report })
}
