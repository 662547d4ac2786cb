use num_traits::One;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

fn check_series(s: &[IntPolynomial]) -> Result<()> {
    let Some(c0) = s.first() else {
        return Err(Error::ConstantTerm("empty series".into()));
    };
    if c0.len() != 1 || !c0.constant_term().is_one() {
        return Err(Error::ConstantTerm(c0.to_string()));
    }
    for (i, p) in s.iter().enumerate().skip(1) {
        if !p.is_zero() && p.homogeneous_degree() != Some(i as u32) {
            return Err(Error::SeriesDegree { index: i });
        }
    }
    Ok(())
}

/// Degree components `0..=k` of `1 / d` for a series with constant term 1.
pub fn series_inverse(d: &[IntPolynomial], k: usize) -> Result<Vec<IntPolynomial>> {
    check_series(d)?;
    let vars = d[0].vars().clone();
    let mut inv = vec![IntPolynomial::one(&vars)];
    for n in 1..=k {
        let mut acc = IntPolynomial::zero(&vars);
        for i in 1..=n.min(d.len() - 1) {
            acc = &acc - &(&d[i] * &inv[n - i]);
        }
        inv.push(acc);
    }
    Ok(inv)
}

/// Degree components `0..=k` of the product of two series.
pub fn series_product(a: &[IntPolynomial], b: &[IntPolynomial], k: usize) -> Vec<IntPolynomial> {
    let vars = a[0].vars().clone();
    (0..=k)
        .map(|n| {
            let mut acc = IntPolynomial::zero(&vars);
            for i in 0..=n {
                if let (Some(x), Some(y)) = (a.get(i), b.get(n - i)) {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// The degree-`k` component of `numerator / denominator`, where both are
/// total Chern classes listed by degree with constant term 1.
pub fn chern_series_quotient(
    numerator: &[IntPolynomial],
    denominator: &[IntPolynomial],
    k: usize,
) -> Result<IntPolynomial> {
    check_series(numerator)?;
    let inv = series_inverse(denominator, k)?;
    Ok(series_product(numerator, &inv, k).pop().expect("k + 1 components"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::vars::VarSet;

    #[test]
    fn kappa_class() {
        let v = VarSet::new([("c1w", 1), ("lambda1", 1), ("lambda2", 2), ("S1", 2)]).unwrap();
        let p = |s: &str| IntPolynomial::parse(&v, s).unwrap();
        let num = [p("1"), p("lambda1"), p("lambda2")];
        let den = [p("1"), p("c1w"), p("S1")];
        assert_eq!(
            chern_series_quotient(&num, &den, 2).unwrap(),
            p("c1w^2 - c1w*lambda1 + lambda2 - S1")
        );
        assert!(chern_series_quotient(&den, &den, 2).unwrap().is_zero());
    }

    #[test]
    fn geometric_series() {
        let v = VarSet::new([("c1", 1)]).unwrap();
        let p = |s: &str| IntPolynomial::parse(&v, s).unwrap();
        assert_eq!(
            chern_series_quotient(&[p("1")], &[p("1"), p("c1")], 3).unwrap(),
            p("-c1^3")
        );
    }

    #[test]
    fn rejects_bad_constant_and_degree() {
        let v = VarSet::new([("c1", 1)]).unwrap();
        let p = |s: &str| IntPolynomial::parse(&v, s).unwrap();
        assert!(matches!(
            chern_series_quotient(&[p("1")], &[p("2"), p("c1")], 1),
            Err(Error::ConstantTerm(_))
        ));
        assert!(matches!(
            chern_series_quotient(&[p("1"), p("c1^2")], &[p("1")], 1),
            Err(Error::SeriesDegree { index: 1 })
        ));
    }
}
