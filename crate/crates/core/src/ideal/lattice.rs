//! Integer row lattices: Hermite and Smith normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigInt>;

/// A dense integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Row>,
    pub ncols: usize,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Row>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        IntMatrix { rows, ncols }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            ncols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows());
        let mut out = IntMatrix::zeros(self.nrows(), other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                out.rows[j][i] = a.clone();
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, x: &[BigInt]) -> Row {
        assert_eq!(x.len(), self.nrows());
        let mut out = vec![BigInt::zero(); self.ncols];
        for (a, r) in x.iter().zip(&self.rows) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(r) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, a)| i == j || a.is_zero()))
    }

    /// Exact determinant by fraction-free Gaussian elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "determinant of a non-square matrix");
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

fn first_nonzero(r: &[BigInt]) -> Option<usize> {
    r.iter().position(|x| !x.is_zero())
}

fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt], from: usize) {
    if a.is_zero() {
        return;
    }
    for k in from..y.len() {
        if !x[k].is_zero() {
            y[k] += a * &x[k];
        }
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: the
/// nonzero rows of the unique echelon basis with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut slots: Vec<Option<Row>> = vec![None; ncols];
    for r in rows {
        insert_row(&mut slots, r.clone());
    }
    finish_hermite(slots)
}

fn insert_row(slots: &mut [Option<Row>], mut v: Row) {
    let mut col = match first_nonzero(&v) {
        Some(c) => c,
        None => return,
    };
    loop {
        match &mut slots[col] {
            slot @ None => {
                if v[col].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                *slot = Some(v);
                reduce_around(slots, col);
                return;
            }
            Some(p) => {
                let a = p[col].clone();
                let b = v[col].clone();
                if (&b % &a).is_zero() {
                    let q = -(&b / &a);
                    axpy(&mut v, &q, p, col);
                } else {
                    let e = a.extended_gcd(&b);
                    let g = e.gcd;
                    let (u, w) = (e.x, e.y);
                    let ag = &a / &g;
                    let bg = &b / &g;
                    let mut np = vec![BigInt::zero(); v.len()];
                    let mut nv = vec![BigInt::zero(); v.len()];
                    for k in col..v.len() {
                        np[k] = &u * &p[k] + &w * &v[k];
                        nv[k] = &ag * &v[k] - &bg * &p[k];
                    }
                    if np[col].is_negative() {
                        np.iter_mut().for_each(|x| *x = -&*x);
                    }
                    *p = np;
                    v = nv;
                    reduce_around(slots, col);
                }
                // Keep the pending vector small against the reduced pivots.
                match first_nonzero(&v) {
                    Some(c) => {
                        col = c;
                        reduce_tail(slots, &mut v, c + 1);
                    }
                    None => return,
                }
            }
        }
    }
}

/// Reduce entries of `v` at pivot columns `>= from` into `[0, pivot)`.
fn reduce_tail(slots: &[Option<Row>], v: &mut Row, from: usize) {
    for j in from..v.len() {
        if let Some(pj) = &slots[j] {
            if !v[j].is_zero() {
                let q = v[j].div_floor(&pj[j]);
                if !q.is_zero() {
                    axpy(v, &(-q), pj, j);
                }
            }
        }
    }
}

/// After the row in slot `c` changed: reduce it against later pivots, then
/// reduce earlier rows at column `c`.
fn reduce_around(slots: &mut [Option<Row>], c: usize) {
    let mut r = slots[c].take().expect("occupied slot");
    reduce_tail(slots, &mut r, c + 1);
    for s in slots.iter_mut().take(c).flatten() {
        if !s[c].is_zero() {
            let q = s[c].div_floor(&r[c]);
            if !q.is_zero() {
                axpy(s, &(-q), &r, c);
            }
        }
    }
    slots[c] = Some(r);
}

fn finish_hermite(mut slots: Vec<Option<Row>>) -> Vec<Row> {
    let n = slots.len();
    for j in 0..n {
        let Some(pj) = slots[j].clone() else { continue };
        for r in slots.iter_mut().take(j).flatten() {
            if !r[j].is_zero() {
                let q = r[j].div_floor(&pj[j]);
                axpy(r, &(-q), &pj, j);
            }
        }
    }
    slots.into_iter().flatten().collect()
}

/// Express `v` in terms of a Hermite basis, if it lies in the lattice.
pub fn solve_in_hermite(h: &[Row], v: &[BigInt]) -> Option<Row> {
    let mut r = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); h.len()];
    for (i, row) in h.iter().enumerate() {
        let c = first_nonzero(row).expect("nonzero hermite row");
        // Entries left of this pivot must already be cleared.
        if r[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        if r[c].is_zero() {
            continue;
        }
        let (q, rem) = r[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return None;
        }
        axpy(&mut r, &(-&q), row, c);
        coeffs[i] = q;
    }
    if r.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

pub fn in_lattice(h: &[Row], v: &[BigInt]) -> bool {
    solve_in_hermite(h, v).is_some()
}

/// A basis of `{x : x * B = 0}`, computed from the Hermite form of `[B | I]`.
pub fn left_kernel(b: &IntMatrix) -> Vec<Row> {
    let n = b.nrows();
    let m = b.ncols;
    let aug: Vec<Row> = b
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    hermite_rows(&aug, m + n)
        .into_iter()
        .filter(|r| r[..m].iter().all(|x| x.is_zero()))
        .map(|r| r[m..].to_vec())
        .collect()
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal whose nonzero
/// entries are positive and form a divisibility chain. `v_inv` is `V^{-1}`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries, in order.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols))
            .map(|i| self.d.rows[i][i].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

/// `U * A = H` with `H` the Hermite form of the rows of `A` padded by zero
/// rows, and `U` unimodular; read off the Hermite form of `[A | I]`.
pub fn hermite_with_transform(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.nrows();
    let n = a.ncols;
    let aug: Vec<Row> = a
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rows = hermite_rows(&aug, n + m);
    debug_assert_eq!(rows.len(), m);
    let h = rows.iter().map(|r| r[..n].to_vec()).collect();
    let u = rows.into_iter().map(|r| r[n..].to_vec()).collect();
    (IntMatrix::from_rows(h, n), IntMatrix::from_rows(u, m))
}

fn negate_row(x: &mut IntMatrix, i: usize) {
    x.rows[i].iter_mut().for_each(|e| *e = -&*e);
}

// row_i += c * row_j
fn add_row(x: &mut IntMatrix, i: usize, j: usize, c: &BigInt) {
    let src = x.rows[j].clone();
    axpy(&mut x.rows[i], c, &src, 0);
}

/// Smith form by alternating row and column Hermite reductions, which keep
/// entries reduced, followed by gcd/lcm steps on the diagonal.
pub fn smith(a: &IntMatrix) -> SmithForm {
    let m = a.nrows();
    let n = a.ncols;
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    if m > 0 && n > 0 {
        loop {
            let (h, u1) = hermite_with_transform(&d);
            d = h;
            u = u1.mul(&u);
            if d.is_diagonal() {
                break;
            }
            let (h, u2) = hermite_with_transform(&d.transpose());
            d = h.transpose();
            v = v.mul(&u2.transpose());
            if d.is_diagonal() {
                break;
            }
        }
    }

    let k = m.min(n);
    let r = (0..k).take_while(|&i| !d.rows[i][i].is_zero()).count();
    for i in 0..r {
        if d.rows[i][i].is_negative() {
            negate_row(&mut d, i);
            negate_row(&mut u, i);
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            let a = d.rows[i][i].clone();
            let b = d.rows[j][j].clone();
            if (&b % &a).is_zero() {
                continue;
            }
            let e = a.extended_gcd(&b);
            let g = e.gcd.abs();
            let (x, y) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
            add_row(&mut d, i, j, &BigInt::one());
            add_row(&mut u, i, j, &BigInt::one());
            let (bg, ag) = (&b / &g, &a / &g);
            for mat in [&mut d, &mut v] {
                for row in mat.rows.iter_mut() {
                    let ci = row[i].clone();
                    let cj = row[j].clone();
                    row[i] = &x * &ci + &y * &cj;
                    row[j] = &ag * &cj - &bg * &ci;
                }
            }
            let q = -(&y * &bg);
            add_row(&mut d, j, i, &q);
            add_row(&mut u, j, i, &q);
        }
    }

    let aug: Vec<Row> = v
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let inv = hermite_rows(&aug, 2 * n);
    let v_inv = IntMatrix::from_rows(inv.into_iter().map(|r| r[n..].to_vec()).collect(), n);
    SmithForm { u, d, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_of_small_lattice() {
        let h = hermite_rows(&IntMatrix::from_i64(&[&[2, 4], &[3, 1]]).rows, 2);
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 7], &[0, 10]]).rows);
        assert!(in_lattice(&h, &[BigInt::from(5), BigInt::from(5)]));
        assert!(!in_lattice(&h, &[BigInt::from(0), BigInt::from(5)]));
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.invariants(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(3));
    }

    #[test]
    fn left_kernel_basis() {
        let b = IntMatrix::from_i64(&[&[1, 2], &[2, 4], &[0, 1]]);
        let k = left_kernel(&b);
        assert_eq!(k.len(), 1);
        let img = b.left_apply(&k[0]);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant(),
            BigInt::from(6)
        );
    }
}
