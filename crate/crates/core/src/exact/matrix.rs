use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = alloc::vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().cloned().map(Scalar::from_int).collect())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for t in 0..self.cols {
                    acc += self.get(r, t) * other.get(t, c);
                }
                data.push(acc);
            }
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|r| self.row(r)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn int_det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact division is the Bareiss invariant
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}

/// Row-reduces `a` in place over the rationals, returning the determinant.
fn eliminate(a: &mut [Vec<Scalar>], rhs: &mut [Vec<Scalar>]) -> Scalar {
    let n = a.len();
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(k, p);
            rhs.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        let inv = pivot.recip();
        for x in &mut a[k][k..n] {
            *x *= &inv;
        }
        for v in rhs[k].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[k].clone();
        let src = rhs[k].clone();
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for (x, p) in a[i][k..n].iter_mut().zip(&pivot_row[k..n]) {
                *x -= &factor * p;
            }
            for (d, s) in rhs[i].iter_mut().zip(&src) {
                *d -= &factor * s;
            }
        }
    }
    det
}

fn check_square(a: &[Vec<Scalar>]) -> Result<usize> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

pub fn rational_det(a: &[Vec<Scalar>]) -> Result<Scalar> {
    check_square(a)?;
    let mut work = a.to_vec();
    let mut rhs: Vec<Vec<Scalar>> = alloc::vec![Vec::new(); a.len()];
    Ok(eliminate(&mut work, &mut rhs))
}

/// Solves `a x = b`; `None` when `a` is singular.
pub fn rational_solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let n = check_square(a)?;
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let mut work = a.to_vec();
    let mut rhs: Vec<Vec<Scalar>> = b.iter().map(|v| alloc::vec![v.clone()]).collect();
    if eliminate(&mut work, &mut rhs).is_zero() {
        return Ok(None);
    }
    Ok(Some(rhs.into_iter().map(|mut r| r.remove(0)).collect()))
}

/// Inverse of `a`; `None` when `a` is singular.
pub fn rational_inverse(a: &[Vec<Scalar>]) -> Result<Option<Vec<Vec<Scalar>>>> {
    let n = check_square(a)?;
    let mut work = a.to_vec();
    let mut rhs: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    if eliminate(&mut work, &mut rhs).is_zero() {
        return Ok(None);
    }
    Ok(Some(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn det(rows: &[Vec<i64>]) -> BigInt {
        int_det(&IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det(&[vec![0, -1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(det(&[vec![0, -1], vec![2, 1]]), BigInt::from(2));
        assert_eq!(int_det(&IntMatrix::identity(3)).unwrap(), BigInt::from(1));
        assert_eq!(
            det(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]),
            BigInt::from(-1)
        );
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn non_square_rejected() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(matches!(
            int_det(&m),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn rational_solve_and_inverse() {
        let a: Vec<Vec<Scalar>> = IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]])
            .unwrap()
            .to_rational_rows();
        let x = rational_solve(&a, &[Scalar::from(3), Scalar::from(5)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![Scalar::new(4, 5), Scalar::new(7, 5)]);
        let inv = rational_inverse(&a).unwrap().unwrap();
        assert_eq!(inv[0], vec![Scalar::new(3, 5), Scalar::new(-1, 5)]);
        assert_eq!(rational_det(&a).unwrap(), Scalar::from(5));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]])
            .unwrap()
            .to_rational_rows();
        assert!(rational_inverse(&singular).unwrap().is_none());
    }
}
