//! The polynomial-ring form of the Euler-class expansion
//! `1 - prod_i x_i = sum_{l>=1} (-1)^{l+1} sum_{|I|=l} prod_{i in I} (1 - x_i)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Scalar};

/// Largest `n` accepted; the expansion has `2^n - 1` subset products.
pub const EULER_IDENTITY_MAX: usize = 12;

fn check_range(n: usize) -> Result<()> {
    if !(1..=EULER_IDENTITY_MAX).contains(&n) {
        return Err(Error::OutOfRange {
            value: n,
            min: 1,
            max: EULER_IDENTITY_MAX,
        });
    }
    Ok(())
}

/// For each subset size `l = 1..=n`, the sign `(-1)^(l+1)` and the fully
/// expanded `sum_{|I|=l} prod_{i in I} (1 - x_i)`.
pub fn euler_expansion_terms(n: usize) -> Result<Vec<(i8, MultiPoly)>> {
    check_range(n)?;
    let one_minus: Vec<MultiPoly> = (0..n)
        .map(|i| Ok(&MultiPoly::one(n) - &MultiPoly::var(n, i)?))
        .collect::<Result<_>>()?;
    let mut by_size: Vec<MultiPoly> = (0..=n).map(|_| MultiPoly::zero(n)).collect();
    // products over subsets, built incrementally from the subset with the top bit removed
    let mut products: Vec<MultiPoly> = Vec::with_capacity(1 << n);
    products.push(MultiPoly::one(n));
    for mask in 1usize..(1 << n) {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let prod = &products[mask & !(1 << top)] * &one_minus[top];
        by_size[mask.count_ones() as usize] = &by_size[mask.count_ones() as usize] + &prod;
        products.push(prod);
    }
    Ok(by_size
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(l, p)| (if l % 2 == 1 { 1 } else { -1 }, p))
        .collect())
}

/// Expands both sides of the identity in `Q[x_1..x_n]` and compares them.
pub fn euler_expansion_identity(n: usize) -> Result<bool> {
    let terms = euler_expansion_terms(n)?;
    let mut all = MultiPoly::one(n);
    for i in 0..n {
        all = &all * &MultiPoly::var(n, i)?;
    }
    let lhs = &MultiPoly::one(n) - &all;
    let rhs = terms.iter().fold(MultiPoly::zero(n), |acc, (sign, p)| {
        &acc + &p.scale(&Scalar::from(i64::from(*sign)))
    });
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_hold() {
        assert!(euler_expansion_identity(1).unwrap());
        assert!(euler_expansion_identity(2).unwrap());
        assert!(euler_expansion_identity(5).unwrap());
    }

    #[test]
    fn two_variable_expansion_is_explicit() {
        // (1-x1) + (1-x2) - (1-x1)(1-x2) = 1 - x1 x2
        let terms = euler_expansion_terms(2).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0, 1);
        assert_eq!(terms[1].0, -1);
        let x1 = MultiPoly::var(2, 0).unwrap();
        let x2 = MultiPoly::var(2, 1).unwrap();
        let one = MultiPoly::one(2);
        assert_eq!(terms[1].1, &(&one - &x1) * &(&one - &x2));
    }

    #[test]
    fn range_enforced() {
        assert!(matches!(
            euler_expansion_identity(0),
            Err(Error::OutOfRange { value: 0, .. })
        ));
        assert!(euler_expansion_identity(13).is_err());
    }
}
