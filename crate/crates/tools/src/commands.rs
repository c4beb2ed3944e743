//! Dispatch from parsed arguments to the core library and rendering of
//! the results.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;

use ehrhart_core::hilbert::hilbert_report_from;
use ehrhart_core::operator::{boundary_count_formula, khovanskii_count, symbolic_ehrhart};
use ehrhart_core::polytope::{validate_delzant, DelzantPolytope};
use ehrhart_core::volume::{boundary_volume_polynomial, volume_polynomial};
use ehrhart_core::{Error as CoreError, FacetSet, HalfSpaceSpec, HilbertReport, Scalar, UniPoly};
use serde_json::{json, Value};

use crate::cli::{Cli, Command, Exit, Format, Method};
use crate::crosscheck::cross_check;
use crate::format::{parse_polytope_file, ParseOptions};
use crate::parallel::{count_report_parallel, count_reports, default_threads, ehrhart_brute};

/// What a single invocation prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub exit: Exit,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(exit: Exit, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome { exit, stdout: String::new(), stderr }
    }
}

/// One report in all three output formats.
pub struct Rendered {
    pub json: Value,
    pub text: String,
    pub tsv: String,
}

impl Rendered {
    fn emit(self, format: Format) -> String {
        match format {
            Format::Text => self.text,
            Format::Tsv => self.tsv,
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Clone, Copy)]
pub struct Settings {
    pub budget: u128,
    pub threads: usize,
}

pub fn one_based(set: FacetSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

pub fn point(coords: &[Scalar]) -> String {
    let parts: Vec<String> = coords.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn scalars_json(coords: &[Scalar]) -> Value {
    Value::Array(coords.iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn poly_json(p: &UniPoly) -> Value {
    json!({
        "polynomial": p.to_string(),
        "coefficients": scalars_json(p.coefficients()),
    })
}

fn read_input(path: &std::path::Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let path = cli.command.file();
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(Exit::Io, format!("error: {}: {e}", path.display())),
    };
    let spec = match parse_polytope_file(&text, ParseOptions { normalize: cli.normalize }) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(Exit::of_parse(&e), format!("error: {}: {e}", path.display())),
    };
    if let Err(msg) = cli.command.check_flags(&spec) {
        return Outcome::fail(Exit::Usage, format!("error: {msg}"));
    }
    let settings = Settings {
        budget: cli.budget,
        threads: cli.threads.map_or_else(default_threads, |t| t as usize),
    };
    match dispatch(&cli.command, spec, settings) {
        Ok((rendered, exit)) => Outcome {
            exit,
            stdout: rendered.emit(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome::fail(Exit::of_core(&e), format!("error: {e}")),
    }
}

fn dispatch(command: &Command, spec: HalfSpaceSpec, s: Settings) -> Result<(Rendered, Exit), CoreError> {
    if let Command::Validate { .. } = command {
        return validate(&spec);
    }
    let polytope = DelzantPolytope::new(spec)?;
    let rendered = match command {
        Command::Validate { .. } => unreachable!(),
        Command::Faces { .. } => faces(&polytope),
        Command::VolumePoly { .. } => volume(&polytope)?,
        Command::Count { k, region: arg, .. } => {
            let region = arg.region(polytope.num_facets()).expect("checked before dispatch");
            let report = count_report_parallel(&polytope, *k, s.budget, s.threads)?;
            let n = report.region(region);
            let region = arg.to_string();
            let per_face: Vec<Value> = report
                .per_face
                .iter()
                .map(|(f, c)| json!({ "face": one_based(*f), "count": c }))
                .collect();
            Rendered {
                json: json!({
                    "k": k,
                    "region": region.to_string(),
                    "count": n,
                    "total": report.total,
                    "interior": report.interior,
                    "boundary": report.boundary,
                    "per_face": per_face,
                }),
                text: format!("{n}\n"),
                tsv: format!("k\tregion\tcount\n{k}\t{region}\t{n}\n"),
            }
        }
        Command::Ehrhart { kind, method, .. } => {
            let kind = kind.kind(polytope.num_facets()).expect("checked before dispatch");
            let e = match method {
                Method::Brute => ehrhart_brute(&polytope, kind, s.budget, s.threads)?,
                Method::Operator => symbolic_ehrhart(&volume_polynomial(&polytope)?, kind)?,
            };
            let method = match method {
                Method::Brute => "brute",
                Method::Operator => "operator",
            };
            let mut json = poly_json(&e.poly);
            json["kind"] = json!(kind.to_string());
            json["method"] = json!(method);
            let mut tsv = String::from("degree\tcoefficient\n");
            for (j, c) in e.poly.coefficients().iter().enumerate() {
                let _ = writeln!(tsv, "{j}\t{c}");
            }
            Rendered { json, text: format!("{}\n", e.poly), tsv }
        }
        Command::Khovanskii { k, .. } => formula_count(&polytope, *k, "khovanskii")?,
        Command::BoundaryFormula { k, .. } => formula_count(&polytope, *k, "boundary-formula")?,
        Command::HilbertCy { .. } => {
            let reports = count_reports(&polytope, polytope.dim() as u64 + 1, s.budget, s.threads)?;
            let report = hilbert_report_from(&polytope, &reports)?;
            let exit = if report.agree { Exit::Ok } else { Exit::Formula };
            return Ok((hilbert(&polytope, &report), exit));
        }
        Command::CrossCheck { seed, .. } => {
            let outcome = cross_check(&polytope, s, *seed)?;
            let exit = if outcome.passed() { Exit::Ok } else { Exit::Formula };
            let report = hilbert(&polytope, &outcome.report);
            let checks: Vec<Value> = outcome
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let mut text = String::new();
            let mut tsv = String::from("check\tpassed\tdetail\n");
            for c in &outcome.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{tag} {}: {}", c.name, c.detail);
                let _ = writeln!(tsv, "{}\t{}\t{}", c.name, c.passed, c.detail);
            }
            text.push_str(&report.text);
            return Ok((
                Rendered {
                    json: json!({ "passed": outcome.passed(), "checks": checks, "report": report.json }),
                    text,
                    tsv,
                },
                exit,
            ));
        }
    };
    Ok((rendered, Exit::Ok))
}

fn validate(spec: &HalfSpaceSpec) -> Result<(Rendered, Exit), CoreError> {
    let report = validate_delzant(spec)?;
    let charts = ehrhart_core::polytope::enumerate_vertices(spec)?;
    let vertices: Vec<Value> = charts
        .iter()
        .map(|c| {
            json!({
                "coords": scalars_json(c.anchor()),
                "active": one_based(c.active()),
                "det": c.det().to_string(),
            })
        })
        .collect();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "vertex": scalars_json(&f.vertex),
                "active": one_based(f.active),
                "det": f.det.to_string(),
                "message": f.to_string(),
            })
        })
        .collect();
    let mut text = String::new();
    for f in &report.failures {
        let _ = writeln!(text, "{f}");
    }
    if report.passed() {
        let _ = writeln!(text, "Delzant: yes ({} vertices)", report.vertices);
    } else {
        let _ = writeln!(text, "Delzant: no ({} of {} vertices fail)", report.failures.len(), report.vertices);
    }
    let mut tsv = String::from("vertex\tactive\tdet\n");
    for c in &charts {
        let _ = writeln!(tsv, "{}\t{}\t{}", point(c.anchor()), c.active(), c.det());
    }
    let exit = if report.passed() { Exit::Ok } else { Exit::Validation };
    let json = json!({
        "name": spec.name(),
        "dim": spec.dim(),
        "num_facets": spec.num_facets(),
        "delzant": report.passed(),
        "vertices": vertices,
        "failures": failures,
    });
    Ok((Rendered { json, text, tsv }, exit))
}

fn faces(p: &DelzantPolytope) -> Rendered {
    let lattice = p.lattice();
    let mut faces = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("active\tdim\tvertices\n");
    for (set, rec) in lattice.faces() {
        let verts: Vec<&[Scalar]> = rec.vertices.iter().map(|&v| p.charts()[v].anchor()).collect();
        let listed: Vec<String> = verts.iter().map(|v| point(v)).collect();
        faces.push(json!({
            "active": one_based(set),
            "dim": rec.dim,
            "vertices": verts.iter().map(|v| scalars_json(v)).collect::<Vec<_>>(),
        }));
        let _ = writeln!(text, "{set}\tdim {}\t{}", rec.dim, listed.join(" "));
        let _ = writeln!(tsv, "{set}\t{}\t{}", rec.dim, listed.join(" "));
    }
    let f = lattice.f_vector();
    let _ = writeln!(text, "f-vector: {f:?}");
    Rendered {
        json: json!({
            "dim": p.dim(),
            "num_facets": p.num_facets(),
            "f_vector": f,
            "euler_characteristic": lattice.euler_characteristic(),
            "faces": faces,
        }),
        text,
        tsv,
    }
}

fn volume(p: &DelzantPolytope) -> Result<Rendered, CoreError> {
    let v = volume_polynomial(p)?;
    let b = boundary_volume_polynomial(&v);
    let at = |q: &ehrhart_core::MultiPoly| q.evaluate(&v.anchor).expect("one offset per facet");
    let mut text = format!("vol = {}\n", v.poly);
    let _ = writeln!(text, "vol(boundary) = {}", b.poly);
    let _ = writeln!(text, "at {}: vol = {}, vol(boundary) = {}", point(&v.anchor), v.value_at_anchor(), at(&b.poly));
    let mut tsv = String::from("facet\tderivative\tat_anchor\n");
    let mut per_facet = Vec::new();
    for (i, q) in b.per_facet.iter().enumerate() {
        let _ = writeln!(text, "d/dl{} vol = {}", i + 1, q);
        let _ = writeln!(tsv, "{}\t{}\t{}", i + 1, q, at(q));
        per_facet.push(json!({ "facet": i + 1, "polynomial": q.to_string(), "at_anchor": at(q).to_string() }));
    }
    Ok(Rendered {
        json: json!({
            "anchor": scalars_json(&v.anchor),
            "degree": v.degree,
            "volume": v.poly.to_string(),
            "volume_at_anchor": v.value_at_anchor().to_string(),
            "boundary": b.poly.to_string(),
            "boundary_at_anchor": at(&b.poly).to_string(),
            "per_facet": per_facet,
        }),
        text,
        tsv,
    })
}

fn formula_count(p: &DelzantPolytope, k: u64, formula: &str) -> Result<Rendered, CoreError> {
    let kk = i64::try_from(k).map_err(|_| CoreError::OutOfRange { value: k as usize, min: 1, max: i64::MAX as usize })?;
    let dilated = DelzantPolytope::new(p.spec().dilate(kk))?;
    let v = volume_polynomial(&dilated)?;
    let n = if formula == "khovanskii" { khovanskii_count(&v)? } else { boundary_count_formula(&v)? };
    Ok(Rendered {
        json: json!({ "k": k, "formula": formula, "count": n.to_u64() }),
        text: format!("{n}\n"),
        tsv: format!("k\tformula\tcount\n{k}\t{formula}\t{n}\n"),
    })
}

pub fn hilbert(p: &DelzantPolytope, r: &HilbertReport) -> Rendered {
    let mut text = format!("boundary Ehrhart: {}\n", r.by_oracle);
    let _ = writeln!(text, "  inclusion-exclusion: {}", r.by_inclusion_exclusion);
    let _ = writeln!(text, "  operator formula:    {}", r.by_operator_formula);
    let _ = writeln!(text, "  brute force:         {}", r.by_oracle);
    let _ = writeln!(text, "agree: {}", if r.agree { "yes" } else { "no" });
    let _ = writeln!(text, "faces:");
    let mut tsv = String::from("face\tdim\tpolynomial\n");
    let mut per_face = Vec::new();
    for (face, e) in &r.per_face {
        let dim = p.lattice().get(*face).map_or(0, |rec| rec.dim);
        let _ = writeln!(text, "  {face}\tdim {dim}\t{e}");
        let _ = writeln!(tsv, "{face}\t{dim}\t{e}");
        let mut entry = poly_json(&e.poly);
        entry["face"] = json!(one_based(*face));
        entry["dim"] = json!(dim);
        per_face.push(entry);
    }
    Rendered {
        json: json!({
            "boundary_ehrhart": r.by_oracle.to_string(),
            "by_inclusion_exclusion": poly_json(&r.by_inclusion_exclusion.poly),
            "by_operator_formula": poly_json(&r.by_operator_formula.poly),
            "by_oracle": poly_json(&r.by_oracle.poly),
            "agree": r.agree,
            "per_face": per_face,
        }),
        text,
        tsv,
    }
}
