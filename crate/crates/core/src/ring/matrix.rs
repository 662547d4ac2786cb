use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::ring::vars::ensure_same;

/// Determinant of a square matrix of polynomials by expansion over column
/// subsets, `O(n 2^n)` products.
pub fn poly_determinant(rows: &[Vec<IntPolynomial>]) -> Result<IntPolynomial> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Unsupported("determinant of an empty matrix".into()));
    }
    if n > 16 {
        return Err(Error::Unsupported(format!("determinant of size {n}")));
    }
    let vars = rows[0]
        .first()
        .ok_or_else(|| Error::Unsupported("row of length 0".into()))?
        .vars()
        .clone();
    for r in rows {
        if r.len() != n {
            return Err(Error::IndexOutOfRange(format!(
                "row of length {} in a {n}x{n} matrix",
                r.len()
            )));
        }
        for p in r {
            ensure_same(&vars, p.vars())?;
        }
    }

    let mut acc: Vec<Option<IntPolynomial>> = vec![None; 1 << n];
    acc[0] = Some(IntPolynomial::one(&vars));
    for mask in 0usize..(1 << n) {
        let Some(cur) = acc[mask].take() else { continue };
        let k = mask.count_ones() as usize;
        if k == n {
            acc[mask] = Some(cur);
            continue;
        }
        for j in 0..n {
            if mask & (1 << j) != 0 || rows[k][j].is_zero() {
                continue;
            }
            let inversions = (mask >> (j + 1)).count_ones();
            let mut term = &cur * &rows[k][j];
            if inversions % 2 == 1 {
                term = -term;
            }
            let slot = &mut acc[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(s) => &s + &term,
                None => term,
            });
        }
    }
    Ok(acc[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| IntPolynomial::zero(&vars)))
}
