use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::exact::Scalar;

/// Polynomial in the dilation variable `k`, coefficients stored from the
/// constant term upward with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn k() -> Self {
        UniPoly::new(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, power: usize) -> Scalar {
        self.coeffs.get(power).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, k: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_int(&self, k: i64) -> Scalar {
        self.eval(&Scalar::from(k))
    }

    /// `p(k + shift)`.
    pub fn shift(&self, shift: &Scalar) -> Self {
        let lin = UniPoly::new(vec![shift.clone(), Scalar::one()]);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            &(&acc * &lin) + &UniPoly::constant(c.clone())
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Lagrange interpolation through `(x, y)` nodes with distinct `x`.
    ///
    /// Panics on repeated nodes.
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> Self {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(Scalar::one());
            let mut denom = Scalar::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = xi - xj;
                assert!(!diff.is_zero(), "interpolation nodes must be distinct");
                basis = &basis * &UniPoly::new(vec![-xj, Scalar::one()]);
                denom *= diff;
            }
            acc = &acc + &basis.scale(&(yi / &denom));
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    /// Renders as e.g. `2k^2 + 2` or `(5/6)k^3 + (25/6)k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if power == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write!(f, "k")?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl<'b> Add<&'b UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'b UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl<'b> Sub<&'b UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'b UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl<'b> Mul<&'b UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'b UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}
