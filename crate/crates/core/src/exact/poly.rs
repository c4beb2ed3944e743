use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{Scalar, UniPoly};

/// Exponent vector of a monomial, ordered graded-lexicographically: first by
/// total degree, then lexicographically with `l1 > l2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` variables `l1..l_nvars` with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Scalar::one())
    }

    /// The coordinate polynomial `l_{var+1}` (variables are indexed from 0).
    pub fn var(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                count: nvars,
            });
        }
        let mut e = vec![0; nvars];
        e[var] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial(e), Scalar::one());
        Ok(p)
    }

    /// `sum_i coeffs[i] * l_i + constant`.
    pub fn linear(coeffs: &[Scalar], constant: Scalar) -> Self {
        let nvars = coeffs.len();
        let mut p = MultiPoly::constant(nvars, constant);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0.get(var).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `var` (0-based).
    pub fn differentiate(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                count: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.0.clone();
            dm[var] -= 1;
            out.add_term(Monomial(dm), c * Scalar::from(i64::from(e)));
        }
        Ok(out)
    }

    /// Applies `d/d(l_var)` `times` times.
    pub fn differentiate_n(&self, var: usize, times: u32) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                count: self.nvars,
            });
        }
        let mut p = self.clone();
        for _ in 0..times {
            if p.is_zero() {
                break;
            }
            p = p.differentiate(var)?;
        }
        Ok(p)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .filter(|(e, _)| **e > 0)
                    .fold(c.clone(), |acc, (e, x)| acc * x.pow(*e))
            })
            .sum())
    }

    /// Substitutes `l_i = k * anchor_i` and collects the result as a
    /// polynomial in `k`.
    pub fn substitute_dilation(&self, anchor: &[Scalar]) -> Result<UniPoly> {
        if anchor.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: anchor.len(),
            });
        }
        let max_deg = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); max_deg + 1];
        for (m, c) in &self.terms {
            let value = m
                .0
                .iter()
                .zip(anchor)
                .filter(|(e, _)| **e > 0)
                .fold(c.clone(), |acc, (e, x)| acc * x.pow(*e));
            coeffs[m.degree() as usize] += value;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Substitutes a polynomial for each variable. `images` must have one
    /// entry per variable, all in a common variable count.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = images.first().map_or(0, MultiPoly::nvars);
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (e, img) in m.0.iter().zip(images) {
                if *e > 0 {
                    t = &t * &img.pow(*e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    fn check_same_ring(&self, other: &MultiPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials live in rings with different variable counts"
        );
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut need_star = false;
            if !mag.is_one() || m.degree() == 0 {
                write!(f, "{mag}")?;
                need_star = true;
            }
            for (i, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "l{}", i + 1)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.check_same_ring(rhs);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Scalar::from(-1))
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
