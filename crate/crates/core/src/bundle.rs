//! Projective bundle calculus for a rank-2 vector bundle `E` with Chern
//! classes `c1, c2`: the classes `s_r^j` on `P(Sym^r E)` and pushforwards along
//! multiplication, Veronese, diagonal, sub-bundle and Segre maps.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::ring::vars::ensure_same;
use crate::ring::{IntPolynomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClasses {
    pub c1: IntPolynomial,
    pub c2: IntPolynomial,
}

fn require_degree(p: &IntPolynomial, d: u32, what: &str) -> Result<()> {
    if p.is_zero() || p.homogeneous_degree() == Some(d) {
        Ok(())
    } else {
        Err(Error::DegreeViolation {
            var: what.to_string(),
            expected: d,
            found: p.to_string(),
        })
    }
}

impl BundleClasses {
    pub fn new(c1: IntPolynomial, c2: IntPolynomial) -> Result<Self> {
        ensure_same(c1.vars(), c2.vars())?;
        require_degree(&c1, 1, "c1")?;
        require_degree(&c2, 2, "c2")?;
        Ok(BundleClasses { c1, c2 })
    }

    pub fn parse(vars: &Arc<VarSet>, c1: &str, c2: &str) -> Result<Self> {
        BundleClasses::new(IntPolynomial::parse(vars, c1)?, IntPolynomial::parse(vars, c2)?)
    }

    pub fn trivial(vars: &Arc<VarSet>) -> Self {
        BundleClasses {
            c1: IntPolynomial::zero(vars),
            c2: IntPolynomial::zero(vars),
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.c1.vars()
    }

    pub fn dual(&self) -> Self {
        BundleClasses {
            c1: -&self.c1,
            c2: self.c2.clone(),
        }
    }

    /// `1 + c1 + c2`, listed by degree.
    pub fn total(&self) -> Vec<IntPolynomial> {
        vec![IntPolynomial::one(self.vars()), self.c1.clone(), self.c2.clone()]
    }
}

/// The classes `s_r^0, ..., s_r^r` expanded in the hyperplane class `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrjTable {
    pub r: u32,
    pub t: IntPolynomial,
    pub entries: Vec<IntPolynomial>,
}

pub fn srj_table(r: u32, cls: &BundleClasses, t: &IntPolynomial) -> Result<SrjTable> {
    ensure_same(cls.vars(), t.vars())?;
    require_degree(t, 1, "t")?;
    let vars = t.vars();
    let mut entries = vec![IntPolynomial::one(vars)];
    if r >= 1 {
        entries.push(t.clone());
    }
    for j in 1..r {
        let lin = t + &cls.c1.scale(j);
        let mut next = &lin * &entries[j as usize];
        let k = BigInt::from(j) * BigInt::from(r + 1 - j);
        next = &next + &(&cls.c2.scale(k) * &entries[j as usize - 1]);
        entries.push(next);
    }
    Ok(SrjTable {
        r,
        t: t.clone(),
        entries,
    })
}

impl SrjTable {
    pub fn get(&self, j: u32) -> Result<&IntPolynomial> {
        self.entries
            .get(j as usize)
            .ok_or_else(|| Error::IndexOutOfRange(format!("s_{}^{j}", self.r)))
    }

    fn t_index(&self) -> Result<usize> {
        let (m, c) = self
            .t
            .leading_term()
            .ok_or_else(|| Error::Unsupported("hyperplane class is zero".into()))?;
        let one = BigInt::from(1);
        if self.t.len() != 1 || *c != one || m.degree() != 1 {
            return Err(Error::Unsupported(format!(
                "hyperplane class `{}` is not a variable",
                self.t
            )));
        }
        Ok((0..self.t.vars().len())
            .find(|&i| m.exponent(i) == 1)
            .expect("degree-one monomial"))
    }

    /// Rewrite a polynomial of degree at most `r` in `t` in the basis
    /// `s_r^0, ..., s_r^r` over the coefficient ring.
    pub fn express(&self, p: &IntPolynomial) -> Result<SExpansion> {
        ensure_same(self.t.vars(), p.vars())?;
        let ti = self.t_index()?;
        let vars = p.vars().clone();
        let mut coeffs = vec![IntPolynomial::zero(&vars); self.r as usize + 1];
        let mut rest = p.clone();
        while !rest.is_zero() {
            let m = rest.degree_in(ti);
            if m > self.r {
                return Err(Error::IndexOutOfRange(format!(
                    "degree {m} in `{}` exceeds {}",
                    self.t, self.r
                )));
            }
            let c = rest.coefficient_of_power(ti, m);
            rest = &rest - &(&c * &self.entries[m as usize]);
            coeffs[m as usize] = &coeffs[m as usize] + &c;
        }
        Ok(SExpansion { r: self.r, coeffs })
    }
}

/// A combination `sum_j coeffs[j] * s_r^j` with coefficients from the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SExpansion {
    pub r: u32,
    pub coeffs: Vec<IntPolynomial>,
}

impl SExpansion {
    pub fn zero(vars: &Arc<VarSet>, r: u32) -> Self {
        SExpansion {
            r,
            coeffs: vec![IntPolynomial::zero(vars); r as usize + 1],
        }
    }

    pub fn basis(vars: &Arc<VarSet>, r: u32, j: u32) -> Result<Self> {
        if j > r {
            return Err(Error::IndexOutOfRange(format!("s_{r}^{j}")));
        }
        let mut e = SExpansion::zero(vars, r);
        e.coeffs[j as usize] = IntPolynomial::one(vars);
        Ok(e)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.coeffs[0].vars()
    }

    pub fn coefficient(&self, j: u32) -> &IntPolynomial {
        &self.coeffs[j as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(IntPolynomial::is_zero)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        SExpansion {
            r: self.r,
            coeffs: self.coeffs.iter().map(|p| p.scale(c.clone())).collect(),
        }
    }

    pub fn mul_poly(&self, q: &IntPolynomial) -> Self {
        SExpansion {
            r: self.r,
            coeffs: self.coeffs.iter().map(|p| p * q).collect(),
        }
    }

    pub fn checked_add(&self, other: &SExpansion) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::IndexOutOfRange(format!(
                "adding s_{} and s_{} classes",
                self.r, other.r
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(SExpansion { r: self.r, coeffs })
    }

    pub fn checked_sub(&self, other: &SExpansion) -> Result<Self> {
        self.checked_add(&other.scale(-1))
    }

    /// Divide every coefficient by `d`, failing unless all are divisible.
    pub fn exact_div_scalar(&self, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| p.exact_div_scalar(d.clone()))
            .collect::<Result<_>>()?;
        Ok(SExpansion { r: self.r, coeffs })
    }

    /// Expand in the hyperplane class using a table of the same rank.
    pub fn to_polynomial(&self, table: &SrjTable) -> Result<IntPolynomial> {
        if table.r != self.r {
            return Err(Error::IndexOutOfRange(format!(
                "s_{} class against an s_{} table",
                self.r, table.r
            )));
        }
        let mut out = IntPolynomial::zero(table.t.vars());
        for (c, s) in self.coeffs.iter().zip(&table.entries) {
            out = &out + &c.checked_mul(s)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*s{}^{j}", self.r)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Pushforward of `s_a^alpha x s_b^beta` along `P^a x P^b -> P^{a+b}`:
/// returns the coefficient and the target `(alpha + beta, a + b)`.
pub fn mult_pushforward(a: u32, alpha: u32, b: u32, beta: u32) -> Result<(BigInt, (u32, u32))> {
    if alpha > a || beta > b {
        return Err(Error::IndexOutOfRange(format!(
            "s_{a}^{alpha} x s_{b}^{beta}"
        )));
    }
    let c = binomial(BigInt::from(a - alpha + b - beta), BigInt::from(a - alpha));
    Ok((c, (alpha + beta, a + b)))
}

/// Iterated multiplication `P^{a_1} x ... x P^{a_n} -> P^{sum a_i}` applied to
/// `s_{a_1}^{j_1} x ... x s_{a_n}^{j_n}`, given as `(a_i, j_i)` pairs.
pub fn mult_pushforward_chain(factors: &[(u32, u32)]) -> Result<(BigInt, (u32, u32))> {
    let Some(&(mut a, mut alpha)) = factors.first() else {
        return Err(Error::Unsupported("empty product".into()));
    };
    if alpha > a {
        return Err(Error::IndexOutOfRange(format!("s_{a}^{alpha}")));
    }
    let mut coef = BigInt::from(1);
    for &(b, beta) in &factors[1..] {
        let (c, (j, r)) = mult_pushforward(a, alpha, b, beta)?;
        coef *= c;
        a = r;
        alpha = j;
    }
    Ok((coef, (alpha, a)))
}

/// Bilinear extension of [`mult_pushforward`] to combinations.
pub fn mult_pushforward_classes(x: &SExpansion, y: &SExpansion) -> Result<SExpansion> {
    ensure_same(x.vars(), y.vars())?;
    let mut out = SExpansion::zero(x.vars(), x.r + y.r);
    for (i, p) in x.coeffs.iter().enumerate() {
        for (j, q) in y.coeffs.iter().enumerate() {
            if p.is_zero() || q.is_zero() {
                continue;
            }
            let (c, (k, _)) = mult_pushforward(x.r, i as u32, y.r, j as u32)?;
            let term = (p * q).scale(c);
            out.coeffs[k as usize] = &out.coeffs[k as usize] + &term;
        }
    }
    Ok(out)
}

/// Pushforward of `s_1^j` along the Veronese map `P E -> P(Sym^k E)`.
pub fn veronese_pushforward(k: u32, j: u32, cls: &BundleClasses) -> Result<SExpansion> {
    let vars = cls.vars();
    let (c1, c2) = (&cls.c1, &cls.c2);
    let one = IntPolynomial::one(vars);
    let zero = IntPolynomial::zero(vars);
    let coeffs = match (k, j) {
        (2, 0) => vec![c1.scale(2), one.scale(2), zero],
        (2, 1) => vec![c2.scale(-2), zero, one],
        (3, 0) => vec![
            (&(c1 * c1) - c2).scale(6),
            c1.scale(6),
            one.scale(3),
            zero,
        ],
        (3, 1) => vec![
            (c1 * c2).scale(-6),
            c2.scale(-6),
            zero.clone(),
            one,
        ],
        _ => {
            return Err(Error::Unsupported(format!(
                "Veronese pushforward of s_1^{j} into degree {k}"
            )))
        }
    };
    Ok(SExpansion { r: k, coeffs })
}

/// The class of the diagonal in `(P E)^n`, `n` in `{2, 3}`, with `xs` the
/// hyperplane classes of the factors.
pub fn diagonal_class(n: usize, cls: &BundleClasses, xs: &[IntPolynomial]) -> Result<IntPolynomial> {
    if xs.len() != n {
        return Err(Error::IndexOutOfRange(format!(
            "{} hyperplane classes for a {n}-fold diagonal",
            xs.len()
        )));
    }
    for x in xs {
        ensure_same(cls.vars(), x.vars())?;
    }
    match n {
        2 => Ok(&(&xs[0] + &xs[1]) + &cls.c1),
        3 => {
            let e2 = &(&(&xs[0] * &xs[1]) + &(&xs[1] * &xs[2])) + &(&xs[2] * &xs[0]);
            let e1 = &(&xs[0] + &xs[1]) + &xs[2];
            Ok(&(&(&e2 + &(&e1 * &cls.c1)) + &(&cls.c1 * &cls.c1)) - &cls.c2)
        }
        _ => Err(Error::Unsupported(format!("{n}-fold diagonal"))),
    }
}

/// The class of `P S` inside `P E` for a sub-bundle `S` whose quotient has
/// Chern classes `c_1, ..., c_d`: `x^d + c_1 x^{d-1} + ... + c_d`.
pub fn subbundle_class(quotient_chern: &[IntPolynomial], x: &IntPolynomial) -> Result<IntPolynomial> {
    if quotient_chern.is_empty() {
        return Err(Error::Unsupported("sub-bundle of corank 0".into()));
    }
    require_degree(x, 1, "x")?;
    let d = quotient_chern.len() as u32;
    let mut out = x.pow(d);
    for (i, c) in quotient_chern.iter().enumerate() {
        ensure_same(x.vars(), c.vars())?;
        require_degree(c, i as u32 + 1, &format!("c{}", i + 1))?;
        out = &out + &(c * &x.pow(d - 1 - i as u32));
    }
    Ok(out)
}

/// Chern classes `c_1, ..., c_n` of a bundle with the given Chern roots.
pub fn chern_classes_of_roots(roots: &[IntPolynomial]) -> Result<Vec<IntPolynomial>> {
    let Some(first) = roots.first() else {
        return Ok(Vec::new());
    };
    let vars = first.vars().clone();
    let mut e = vec![IntPolynomial::one(&vars)];
    for r in roots {
        ensure_same(&vars, r.vars())?;
        require_degree(r, 1, "root")?;
        e.push(IntPolynomial::zero(&vars));
        for k in (1..e.len()).rev() {
            e[k] = &e[k] + &(&e[k - 1] * r);
        }
    }
    e.remove(0);
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegreClass {
    One,
    X1,
    X2,
    X1X2,
}

/// Pushforward along the Segre map `P E1 x P E2 -> P(E1 (x) E2)` for rank-2
/// bundles, as a polynomial in the target hyperplane class `x`.
pub fn segre_pushforward(
    class: SegreClass,
    e1: &BundleClasses,
    e2: &BundleClasses,
    x: &IntPolynomial,
) -> Result<IntPolynomial> {
    ensure_same(e1.vars(), e2.vars())?;
    ensure_same(e1.vars(), x.vars())?;
    let (a1, a2) = (&e1.c1, &e1.c2);
    let (b1, b2) = (&e2.c1, &e2.c2);
    let xx = x * x;
    Ok(match class {
        SegreClass::One => &(&x.scale(2) + a1) + b1,
        SegreClass::X1 => &(&(&xx + &(b1 * x)) + b2) - a2,
        SegreClass::X2 => &(&(&xx + &(a1 * x)) + a2) - b2,
        SegreClass::X1X2 => {
            let lin = &(&(a2 + &(a1 * b1)) + b2) * x;
            let cst = &(a1 * b2) + &(a2 * b1);
            &(&(&(&xx * x) + &(&(a1 + b1) * &xx)) + &lin) + &cst
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<VarSet> {
        VarSet::new([("t", 1), ("c1", 1), ("c2", 2), ("x1", 1), ("x2", 1), ("x3", 1)]).unwrap()
    }

    fn p(v: &Arc<VarSet>, s: &str) -> IntPolynomial {
        IntPolynomial::parse(v, s).unwrap()
    }

    #[test]
    fn recurrence_small_ranks() {
        let v = VarSet::new([("t", 1), ("a1", 1), ("a2", 2)]).unwrap();
        let cls = BundleClasses::parse(&v, "-a1", "a2").unwrap();
        let tab = srj_table(2, &cls, &p(&v, "t")).unwrap();
        assert_eq!(tab.entries[0], p(&v, "1"));
        assert_eq!(tab.entries[1], p(&v, "t"));
        assert_eq!(tab.entries[2], p(&v, "t^2 - a1*t + 2*a2"));

        let v6 = VarSet::new([("t", 1), ("l1", 1), ("l2", 2)]).unwrap();
        let cls6 = BundleClasses::parse(&v6, "-l1", "l2").unwrap();
        let tab6 = srj_table(6, &cls6, &p(&v6, "t")).unwrap();
        assert_eq!(
            tab6.entries[3],
            p(&v6, "t^3 - 3*l1*t^2 + (2*l1^2 + 16*l2)*t - 12*l1*l2")
        );
        assert_eq!(srj_table(0, &cls6, &p(&v6, "t")).unwrap().entries.len(), 1);
    }

    #[test]
    fn express_round_trip() {
        let v = ring();
        let cls = BundleClasses::parse(&v, "c1", "c2").unwrap();
        for r in 0..=6 {
            let tab = srj_table(r, &cls, &p(&v, "t")).unwrap();
            for j in 0..=r {
                let tj = p(&v, "t").pow(j);
                let e = tab.express(&tj).unwrap();
                assert_eq!(e.to_polynomial(&tab).unwrap(), tj);
                assert!(e.coeffs[j as usize + 1..].iter().all(IntPolynomial::is_zero));
            }
        }
        let tab = srj_table(2, &cls, &p(&v, "t")).unwrap();
        assert!(tab.express(&p(&v, "t^3")).is_err());
    }

    #[test]
    fn multiplication_coefficients() {
        assert_eq!(mult_pushforward(3, 3, 3, 3).unwrap(), (BigInt::from(1), (6, 6)));
        assert_eq!(mult_pushforward(3, 0, 3, 0).unwrap(), (BigInt::from(20), (0, 6)));
        assert_eq!(mult_pushforward(1, 0, 1, 0).unwrap(), (BigInt::from(2), (0, 2)));
        assert!(mult_pushforward(1, 2, 1, 0).is_err());
        assert_eq!(
            mult_pushforward_chain(&[(1, 0), (1, 0), (1, 0)]).unwrap(),
            (BigInt::from(6), (0, 3))
        );
    }

    #[test]
    fn veronese_specializes() {
        let v = ring();
        let triv = BundleClasses::trivial(&v);
        let e = veronese_pushforward(3, 0, &triv).unwrap();
        assert_eq!(e, SExpansion::basis(&v, 3, 2).unwrap().scale(3));
        assert!(veronese_pushforward(4, 0, &triv).is_err());
        let cls = BundleClasses::parse(&v, "c1", "c2").unwrap();
        let sq = veronese_pushforward(2, 0, &cls).unwrap();
        assert_eq!(sq.to_string(), "(2)*s2^1 + (2*c1)*s2^0");
    }

    #[test]
    fn triple_diagonal_from_pairs() {
        let v = ring();
        let cls = BundleClasses::parse(&v, "c1", "c2").unwrap();
        let xs = [p(&v, "x1"), p(&v, "x2"), p(&v, "x3")];
        let d12 = diagonal_class(2, &cls, &xs[..2]).unwrap();
        let d23 = diagonal_class(2, &cls, &xs[1..]).unwrap();
        let prod = &d12 * &d23;
        let x2 = v.index_of("x2").unwrap();
        let reduced = &(&prod.coefficient_of_power(x2, 0)
            + &(&prod.coefficient_of_power(x2, 1) * &p(&v, "x2")))
            + &(&prod.coefficient_of_power(x2, 2) * &p(&v, "-c1*x2 - c2"));
        assert_eq!(reduced, diagonal_class(3, &cls, &xs).unwrap());
        assert!(diagonal_class(4, &cls, &xs).is_err());
    }

    #[test]
    fn subbundle_and_roots() {
        let v = ring();
        let x = p(&v, "x1");
        let cs = chern_classes_of_roots(&[p(&v, "4*x2"), p(&v, "6*x2")]).unwrap();
        assert_eq!(cs, vec![p(&v, "10*x2"), p(&v, "24*x2^2")]);
        assert_eq!(subbundle_class(&[p(&v, "0")], &x).unwrap(), x);
        assert!(subbundle_class(&[p(&v, "x2^2")], &x).is_err());
    }

    #[test]
    fn segre_consistency() {
        let v = VarSet::new([("x", 1), ("a1", 1), ("a2", 2), ("b1", 1), ("b2", 2)]).unwrap();
        let e1 = BundleClasses::parse(&v, "a1", "a2").unwrap();
        let e2 = BundleClasses::parse(&v, "b1", "b2").unwrap();
        let x = p(&v, "x");
        let push = |c| segre_pushforward(c, &e1, &e2, &x).unwrap();
        let lhs = &x * &push(SegreClass::X2);
        let rhs = &(&push(SegreClass::X1X2) - &(&e2.c1 * &push(SegreClass::X2)))
            - &(&e2.c2 * &push(SegreClass::One));
        assert_eq!(lhs, rhs);

        let triv = BundleClasses::trivial(&v);
        assert_eq!(
            segre_pushforward(SegreClass::X1X2, &triv, &triv, &x).unwrap(),
            p(&v, "x^3")
        );
        assert_eq!(
            segre_pushforward(SegreClass::X1, &triv, &e2, &x).unwrap(),
            p(&v, "x^2 + b1*x + b2")
        );
    }
}
