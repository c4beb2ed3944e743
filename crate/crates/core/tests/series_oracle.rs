use ehrhart_core::operator::{bernoulli_numbers, series_coefficients, SeriesKind};
use ehrhart_core::Scalar;

fn factorial(n: i64) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, i| acc * Scalar::from(i))
}

/// `(1 - e^{-x}) / x = sum_n (-1)^n x^n / (n+1)!`
fn todd_reciprocal(order: usize) -> Vec<Scalar> {
    (0..=order as i64)
        .map(|n| {
            let c = factorial(n + 1).recip();
            if n % 2 == 0 { c } else { -c }
        })
        .collect()
}

/// Schoolbook inversion `b` with `a * b = 1`, written out here so the
/// library's own inversion is not used to check itself.
fn invert(a: &[Scalar]) -> Vec<Scalar> {
    let mut b = vec![a[0].recip()];
    for n in 1..a.len() {
        let mut s = Scalar::zero();
        for j in 1..=n {
            s += &a[j] * &b[n - j];
        }
        b.push(-(s / &a[0]));
    }
    b
}

fn multiply(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    (0..a.len())
        .map(|n| (0..=n).map(|j| &a[j] * &b[n - j]).sum())
        .collect()
}

fn unit(order: usize) -> Vec<Scalar> {
    let mut u = vec![Scalar::zero(); order + 1];
    u[0] = Scalar::one();
    u
}

#[test]
fn todd_coefficients_match_inversion_oracle() {
    let oracle = invert(&todd_reciprocal(12));
    let td = series_coefficients(SeriesKind::Td, 12);
    assert_eq!(td.coefficients(), oracle.as_slice());
    let expected: Vec<Scalar> = [(1, 1), (1, 2), (1, 12), (0, 1), (-1, 720), (0, 1), (1, 30240)]
        .iter()
        .map(|&(p, q)| Scalar::new(p, q))
        .collect();
    assert_eq!(&td.coefficients()[..7], expected.as_slice());
    assert_eq!(multiply(td.coefficients(), &todd_reciprocal(12)), unit(12));
}

#[test]
fn odd_bernoulli_numbers_vanish_past_one() {
    let b = bernoulli_numbers(11);
    assert_eq!(b[1], Scalar::new(1, 2));
    for j in (3..=11).step_by(2) {
        assert!(b[j].is_zero(), "b_{j} = {}", b[j]);
    }
    // B_2 .. B_10 from the standard table
    let table = [(2, 1, 6), (4, -1, 30), (6, 1, 42), (8, -1, 30), (10, 5, 66)];
    for (j, p, q) in table {
        assert_eq!(b[j], Scalar::new(p, q), "b_{j}");
    }
}

#[test]
fn ahat_times_inverse_is_one() {
    let ahat = series_coefficients(SeriesKind::Ahat, 10);
    let inv = series_coefficients(SeriesKind::InvAhat, 10);
    assert_eq!(multiply(ahat.coefficients(), inv.coefficients()), unit(10));
    assert_eq!(ahat.coefficients(), invert(inv.coefficients()).as_slice());
    for (j, c) in ahat.coefficients().iter().enumerate() {
        if j % 2 == 1 {
            assert!(c.is_zero());
        }
    }
}

#[test]
fn inverse_ahat_closed_form() {
    let inv = series_coefficients(SeriesKind::InvAhat, 10);
    for j in 0..=5i64 {
        let expected = (Scalar::from(2).pow(2 * j as u32) * factorial(2 * j + 1)).recip();
        assert_eq!(inv.coefficient(2 * j as usize), expected, "j = {j}");
    }
    // sinh(x/2)/(x/2) = sum (x/2)^{2j} / (2j+1)! directly from the exponential series
    for j in 0..=5usize {
        let direct = Scalar::new(1, 2).pow(2 * j as u32) / factorial(2 * j as i64 + 1);
        assert_eq!(inv.coefficient(2 * j), direct);
    }
}
