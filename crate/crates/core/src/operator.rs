//! Todd and A-hat power series and the differential operators they define
//! on polynomials in the offsets.
//!
//! On a polynomial of degree `n` only the first `n + 1` coefficients of a
//! series can contribute, so every "infinite order" operator acts exactly
//! once it is truncated at the polynomial's degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Scalar};
use crate::lattice::{EhrhartKind, EhrhartPoly};
use crate::volume::{boundary_volume_polynomial, VolumePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `x / (1 - e^{-x})`
    Td,
    /// `(x/2) / sinh(x/2)`
    Ahat,
    /// `sinh(x/2) / (x/2)`
    InvAhat,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Td => "Td",
            SeriesKind::Ahat => "Ahat",
            SeriesKind::InvAhat => "invAhat",
        })
    }
}

/// A power series truncated after `x^order`; `coefficients()[j]` multiplies
/// `x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    kind: SeriesKind,
    coeffs: Vec<Scalar>,
}

impl SeriesSpec {
    /// Wraps arbitrary coefficients under a series name. Used to build
    /// deliberately wrong operators in mutation tests.
    pub fn from_coefficients(kind: SeriesKind, coeffs: Vec<Scalar>) -> Self {
        SeriesSpec { kind, coeffs }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// Bernoulli numbers `B_0..=B_n` from
/// `sum_{j<=n} C(n+1, j) B_j = 0`, with the sign of `B_1` flipped to `+1/2`
/// so that `x / (1 - e^{-x}) = sum B_j x^j / j!`.
pub fn bernoulli_numbers(n: usize) -> Vec<Scalar> {
    let mut b: Vec<Scalar> = Vec::with_capacity(n + 1);
    b.push(Scalar::one());
    for k in 1..=n {
        let s: Scalar = (0..k)
            .map(|j| Scalar::binomial(k as u32 + 1, j as u32) * &b[j])
            .sum();
        b.push(-s / Scalar::from(k as i64 + 1));
    }
    if n >= 1 {
        b[1] = -b[1].clone();
    }
    b
}

/// Multiplicative inverse of a power series with nonzero constant term,
/// truncated after `x^order`.
pub fn series_inverse(coeffs: &[Scalar], order: usize) -> Vec<Scalar> {
    let c0 = coeffs.first().expect("series has a constant term");
    assert!(!c0.is_zero(), "series with zero constant term is not invertible");
    let inv0 = c0.recip();
    let at = |j: usize| coeffs.get(j).cloned().unwrap_or_else(Scalar::zero);
    let mut out = vec![inv0.clone()];
    for n in 1..=order {
        let s: Scalar = (1..=n).map(|j| at(j) * &out[n - j]).sum();
        out.push(-s * &inv0);
    }
    out
}

/// Product of two series truncated after `x^order`.
pub fn series_product(a: &[Scalar], b: &[Scalar], order: usize) -> Vec<Scalar> {
    let at = |s: &[Scalar], j: usize| s.get(j).cloned().unwrap_or_else(Scalar::zero);
    (0..=order)
        .map(|n| (0..=n).map(|j| at(a, j) * at(b, n - j)).sum())
        .collect()
}

fn inv_ahat_coefficients(order: usize) -> Vec<Scalar> {
    (0..=order)
        .map(|j| {
            if j % 2 == 1 {
                Scalar::zero()
            } else {
                // 1 / (2^{2i} (2i+1)!) with j = 2i
                let denom = Scalar::from(2).pow(j as u32) * Scalar::factorial(j as u32 + 1);
                denom.recip()
            }
        })
        .collect()
}

pub fn series_coefficients(kind: SeriesKind, order: usize) -> SeriesSpec {
    let coeffs = match kind {
        SeriesKind::Td => bernoulli_numbers(order)
            .into_iter()
            .enumerate()
            .map(|(j, b)| b / Scalar::factorial(j as u32))
            .collect(),
        SeriesKind::InvAhat => inv_ahat_coefficients(order),
        SeriesKind::Ahat => series_inverse(&inv_ahat_coefficients(order), order),
    };
    SeriesSpec { kind, coeffs }
}

/// `prod_i S_i(d/d lambda_i)`, optionally followed by `T(sum_i d/d lambda_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorProduct {
    pub per_variable: Vec<SeriesSpec>,
    pub sum_factor: Option<SeriesSpec>,
}

impl OperatorProduct {
    /// `prod_{i<d} Td(d/d lambda_i)` truncated after order `order`.
    pub fn todd(nvars: usize, order: usize) -> Self {
        let td = series_coefficients(SeriesKind::Td, order);
        OperatorProduct {
            per_variable: vec![td; nvars],
            sum_factor: None,
        }
    }

    /// `prod_i Ahat(d/d lambda_i) * (1/Ahat)(sum_i d/d lambda_i)`.
    pub fn boundary(nvars: usize, order: usize) -> Self {
        let ahat = series_coefficients(SeriesKind::Ahat, order);
        OperatorProduct {
            per_variable: vec![ahat; nvars],
            sum_factor: Some(series_coefficients(SeriesKind::InvAhat, order)),
        }
    }

    /// Smallest truncation order among the factors.
    pub fn order(&self) -> usize {
        self.per_variable
            .iter()
            .chain(self.sum_factor.as_ref())
            .map(SeriesSpec::order)
            .min()
            .unwrap_or(usize::MAX)
    }

    /// Applies the operator exactly. Fails rather than truncate when a
    /// series is shorter than the polynomial's degree.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if self.per_variable.len() != p.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.per_variable.len(),
                got: p.nvars(),
            });
        }
        let Some(degree) = p.total_degree() else {
            return Ok(p.clone());
        };
        let order = self.order();
        if order < degree as usize {
            return Err(Error::Truncation { order, degree });
        }
        let mut acc = p.clone();
        for (var, series) in self.per_variable.iter().enumerate() {
            let mut term = acc.clone();
            let mut next = acc.scale(&series.coefficient(0));
            for j in 1..=acc.degree_in(var) as usize {
                term = term.differentiate(var)?;
                next = &next + &term.scale(&series.coefficient(j));
            }
            acc = next;
        }
        if let Some(series) = &self.sum_factor {
            let nvars = acc.nvars();
            let mut term = acc.clone();
            let mut next = acc.scale(&series.coefficient(0));
            for j in 1..=acc.total_degree().unwrap_or(0) as usize {
                let mut d = MultiPoly::zero(nvars);
                for var in 0..nvars {
                    d = &d + &term.differentiate(var)?;
                }
                term = d;
                next = &next + &term.scale(&series.coefficient(j));
            }
            acc = next;
        }
        Ok(acc)
    }
}

fn require_count(formula: &'static str, value: Scalar) -> Result<Scalar> {
    if value.is_integer() && !value.is_negative() {
        Ok(value)
    } else {
        Err(Error::FormulaViolation { formula, value })
    }
}

/// `prod Td(d/d lambda_i) vol` as a polynomial in the offsets.
pub fn todd_applied(v: &VolumePolynomial) -> Result<MultiPoly> {
    OperatorProduct::todd(v.poly.nvars(), v.degree).apply(&v.poly)
}

/// `prod Ahat(d/d lambda_i) (1/Ahat)(sum d/d lambda_i) vol(boundary)`.
pub fn boundary_applied(v: &VolumePolynomial) -> Result<MultiPoly> {
    let b = boundary_volume_polynomial(v);
    OperatorProduct::boundary(v.poly.nvars(), v.degree).apply(&b.poly)
}

/// Lattice points of the anchor polytope by the Todd operator formula.
pub fn khovanskii_count(v: &VolumePolynomial) -> Result<Scalar> {
    khovanskii_count_with(&OperatorProduct::todd(v.poly.nvars(), v.degree), v)
}

pub fn khovanskii_count_with(op: &OperatorProduct, v: &VolumePolynomial) -> Result<Scalar> {
    let value = op.apply(&v.poly)?.evaluate(&v.anchor)?;
    require_count("Todd operator formula", value)
}

/// Boundary lattice points of the anchor polytope by the A-hat formula.
pub fn boundary_count_formula(v: &VolumePolynomial) -> Result<Scalar> {
    boundary_count_formula_with(&OperatorProduct::boundary(v.poly.nvars(), v.degree), v)
}

pub fn boundary_count_formula_with(op: &OperatorProduct, v: &VolumePolynomial) -> Result<Scalar> {
    let b = boundary_volume_polynomial(v);
    let value = op.apply(&b.poly)?.evaluate(&v.anchor)?;
    require_count("A-hat boundary formula", value)
}

/// The full or boundary counting polynomial obtained by applying the
/// operator and substituting `lambda = k * lambda_0`.
pub fn symbolic_ehrhart(v: &VolumePolynomial, kind: EhrhartKind) -> Result<EhrhartPoly> {
    let applied = match kind {
        EhrhartKind::Full => todd_applied(v)?,
        EhrhartKind::Boundary => boundary_applied(v)?,
        other => {
            return Err(Error::InvalidSpec(alloc::format!(
                "no operator formula for {other} counts"
            )))
        }
    };
    Ok(EhrhartPoly {
        poly: applied.substitute_dilation(&v.anchor)?,
        kind,
    })
}
