//! The line-oriented polytope file format.
//!
//! ```text
//! # unit triangle
//! name simplex2
//! dim 2
//! facet -1 0 0
//! facet 0 -1 0
//! facet 1 1 1
//! ```
//!
//! A `facet` line holds the `m` entries of the normal followed by the
//! offset. `#` starts a comment; blank lines are ignored.

use std::fmt;

use ehrhart_core::{Error as CoreError, HalfSpaceSpec};
use num_integer::Integer;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Divide non-primitive normals (and their offsets) by the gcd.
    pub normalize: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("dimension mismatch: declared {declared}, found {found}")]
    DimMismatch { declared: usize, found: usize },
    #[error("normal is not primitive (gcd {gcd}); pass --normalize to divide it out")]
    NonPrimitiveNormal { gcd: i64 },
    #[error("offset {offset} is not divisible by the normal's gcd {gcd}")]
    NonIntegerOffset { offset: i64, gcd: i64 },
    #[error("{0}")]
    Invalid(Box<CoreError>),
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, col)),
            (true, Some((s, sc))) => {
                out.push(Token { text: &line[s..i], column: sc + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, sc)) = start {
        out.push(Token { text: &line[s..], column: sc + 1 });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0i64, |g, &x| g.gcd(&x))
}

pub fn parse_polytope_file(text: &str, opts: ParseOptions) -> Result<HalfSpaceSpec, ParseError> {
    let err = |line, column, kind| ParseError { line, column, kind };
    let mut dim: Option<(usize, usize)> = None;
    let mut name: Option<String> = None;
    let mut facets: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let toks = tokens(strip_comment(raw));
        let Some(head) = toks.first() else { continue };
        match head.text {
            "dim" => {
                if toks.len() != 2 {
                    return Err(err(lineno, head.column, ParseErrorKind::Syntax(format!(
                        "`dim` takes 1 value, got {}",
                        toks.len() - 1
                    ))));
                }
                let m: usize = toks[1].text.parse().map_err(|_| {
                    err(lineno, toks[1].column, ParseErrorKind::Syntax(format!(
                        "expected a positive integer, got `{}`",
                        toks[1].text
                    )))
                })?;
                if m == 0 {
                    return Err(err(lineno, toks[1].column, ParseErrorKind::Syntax("dimension must be at least 1".into())));
                }
                if let Some((declared, _)) = dim {
                    return Err(err(lineno, toks[1].column, ParseErrorKind::DimMismatch { declared, found: m }));
                }
                dim = Some((m, lineno));
            }
            "name" => {
                let rest = strip_comment(raw).trim_start();
                let value = rest["name".len()..].trim();
                if value.is_empty() {
                    return Err(err(lineno, head.column, ParseErrorKind::Syntax("`name` needs a value".into())));
                }
                if name.is_some() {
                    return Err(err(lineno, head.column, ParseErrorKind::Syntax("duplicate `name` line".into())));
                }
                name = Some(value.to_string());
            }
            "facet" => {
                let Some((m, _)) = dim else {
                    return Err(err(lineno, head.column, ParseErrorKind::Syntax("`facet` before `dim`".into())));
                };
                let fields = &toks[1..];
                if fields.len() != m + 1 {
                    let column = fields.get(m + 1).map_or(head.column, |t| t.column);
                    return Err(err(lineno, column, ParseErrorKind::Syntax(format!(
                        "{} fields required for dim {m}, got {}",
                        m + 1,
                        fields.len()
                    ))));
                }
                let mut values = Vec::with_capacity(m + 1);
                for t in fields {
                    let v: i64 = t.text.parse().map_err(|_| {
                        err(lineno, t.column, ParseErrorKind::Syntax(format!("expected an integer, got `{}`", t.text)))
                    })?;
                    values.push(v);
                }
                let offset = values.pop().unwrap();
                let mut normal = values;
                let g = gcd_all(&normal);
                if g > 1 {
                    if !opts.normalize {
                        return Err(err(lineno, fields[0].column, ParseErrorKind::NonPrimitiveNormal { gcd: g }));
                    }
                    if offset % g != 0 {
                        return Err(err(lineno, fields[m].column, ParseErrorKind::NonIntegerOffset { offset, gcd: g }));
                    }
                    normal.iter_mut().for_each(|x| *x /= g);
                    facets.push((normal, offset / g));
                } else {
                    facets.push((normal, offset));
                }
            }
            other => {
                return Err(err(lineno, head.column, ParseErrorKind::Syntax(format!(
                    "unknown keyword `{other}` (expected dim, facet or name)"
                ))));
            }
        }
    }

    let Some((m, dim_line)) = dim else {
        return Err(err(last_line.max(1), 1, ParseErrorKind::Syntax("missing `dim` line".into())));
    };
    let spec = HalfSpaceSpec::new(m, facets).map_err(|e| err(dim_line, 1, ParseErrorKind::Invalid(Box::new(e))))?;
    Ok(match name {
        Some(n) => spec.with_name(n),
        None => spec,
    })
}

/// Canonical text form; `parse_polytope_file` inverts it exactly.
pub fn serialize_polytope(spec: &HalfSpaceSpec) -> String {
    Canonical(spec).to_string()
}

struct Canonical<'a>(&'a HalfSpaceSpec);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.0;
        if let Some(name) = spec.name() {
            writeln!(f, "name {name}")?;
        }
        writeln!(f, "dim {}", spec.dim())?;
        for (normal, offset) in spec.facets() {
            write!(f, "facet")?;
            for x in normal {
                write!(f, " {x}")?;
            }
            writeln!(f, " {offset}")?;
        }
        Ok(())
    }
}

/// Drops comments, blank lines and redundant whitespace, which is what
/// serialization preserves.
pub fn strip_to_canonical_lines(text: &str) -> String {
    let mut out = String::new();
    for line in text.lines() {
        let toks = tokens(strip_comment(line));
        if toks.is_empty() {
            continue;
        }
        let words: Vec<&str> = toks.iter().map(|t| t.text).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}
