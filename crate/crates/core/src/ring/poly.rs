use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::vars::{ensure_same, VarSet};
use crate::error::{Error, Result};

/// A sparse polynomial with arbitrary-precision integer coefficients over a
/// declared, weighted variable set. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Result of [`IntPolynomial::weighted_degree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Homogeneous(u32),
    Inhomogeneous { first: String, second: String },
}

impl IntPolynomial {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        IntPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: impl Into<BigInt>) -> Self {
        let mut p = IntPolynomial::zero(vars);
        p.add_term(Monomial::one(vars.len()), c.into());
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        IntPolynomial::constant(vars, 1)
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        Ok(IntPolynomial::var_at(vars, i))
    }

    pub fn var_at(vars: &Arc<VarSet>, i: usize) -> Self {
        let m = Monomial::variable(i, &vars.weights());
        IntPolynomial::monomial(vars, m, BigInt::one())
    }

    pub fn monomial(vars: &Arc<VarSet>, m: Monomial, c: BigInt) -> Self {
        let mut p = IntPolynomial::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Self {
        let w = vars.weights();
        let mut p = IntPolynomial::zero(vars);
        for (e, c) in terms {
            p.add_term(Monomial::from_exponents(e, &w), c);
        }
        p
    }

    /// Parse with the crate's polynomial grammar; see [`super::parse`].
    pub fn parse(vars: &Arc<VarSet>, src: &str) -> Result<Self> {
        Ok(super::parse::parse_polynomial(vars, src)?)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
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

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, BigInt)> {
        self.terms.pop_last()
    }

    /// `self += c * m * other`.
    pub(crate) fn add_scaled_shifted(&mut self, c: &BigInt, m: &Monomial, other: &IntPolynomial) {
        for (om, oc) in other.terms.iter() {
            self.add_term(m.mul(om), c * oc);
        }
    }

    pub fn checked_add(&self, other: &IntPolynomial) -> Result<Self> {
        ensure_same(&self.vars, &other.vars)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &IntPolynomial) -> Result<Self> {
        ensure_same(&self.vars, &other.vars)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Exact product. Fails only when the operands live over different
    /// variable sets.
    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<Self> {
        ensure_same(&self.vars, &other.vars)?;
        let mut out = IntPolynomial::zero(&self.vars);
        for (m, c) in self.terms.iter() {
            out.add_scaled_shifted(c, m, other);
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPolynomial::zero(&self.vars);
        }
        IntPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * &c)).collect(),
        }
    }

    pub fn shift(&self, m: &Monomial) -> Self {
        IntPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPolynomial::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide every coefficient by `d`, failing unless all are divisible.
    pub fn exact_div_scalar(&self, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            if !(c % &d).is_zero() {
                return Err(Error::InexactDivision(format!("{} by {}", self, d)));
            }
            terms.insert(m.clone(), c / &d);
        }
        Ok(IntPolynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn weighted_degree(&self) -> Degree {
        let mut iter = self.terms.iter();
        let Some((first, c0)) = iter.next() else {
            return Degree::Any;
        };
        for (m, c) in iter {
            if m.degree() != first.degree() {
                return Degree::Inhomogeneous {
                    first: self.render_term(first, c0),
                    second: self.render_term(m, c),
                };
            }
        }
        Degree::Homogeneous(first.degree())
    }

    /// `Some(d)` when homogeneous of degree `d`, `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.weighted_degree() {
            Degree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.weighted_degree(), Degree::Inhomogeneous { .. })
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        match self.weighted_degree() {
            Degree::Inhomogeneous { first, second } => Err(Error::Inhomogeneous { first, second }),
            _ => Ok(()),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        IntPolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of_power(&self, var: usize, k: u32) -> Self {
        let w = self.vars.weights();
        let mut out = IntPolynomial::zero(&self.vars);
        for (m, c) in self.terms.iter() {
            if m.exponent(var) == k {
                let mut e = m.exponents().to_vec();
                e[var] = 0;
                out.add_term(Monomial::from_exponents(e, &w), c.clone());
            }
        }
        out
    }

    /// Replace the variables listed in `map` by polynomials over the same
    /// variable set. Every image must be homogeneous of its variable's degree
    /// (zero is allowed), so that gradings are preserved.
    pub fn substitute(&self, map: &[(&str, IntPolynomial)]) -> Result<Self> {
        let mut images: Vec<IntPolynomial> = (0..self.vars.len())
            .map(|i| IntPolynomial::var_at(&self.vars, i))
            .collect();
        for (name, image) in map {
            let i = self.vars.require(name)?;
            ensure_same(&self.vars, image.vars())?;
            images[i] = image.clone();
        }
        self.map_into(&self.vars, &images)
    }

    /// The ring homomorphism sending variable `i` to `images[i]`, landing in
    /// the polynomial ring over `target`.
    pub fn map_into(&self, target: &Arc<VarSet>, images: &[IntPolynomial]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::IndexOutOfRange(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        for (i, image) in images.iter().enumerate() {
            ensure_same(target, image.vars())?;
            match image.weighted_degree() {
                Degree::Any => {}
                Degree::Homogeneous(d) if d == self.vars.degree(i) => {}
                other => {
                    return Err(Error::DegreeViolation {
                        var: self.vars.name(i).to_string(),
                        expected: self.vars.degree(i),
                        found: match other {
                            Degree::Homogeneous(d) => format!("degree {d}"),
                            _ => "an inhomogeneous polynomial".to_string(),
                        },
                    })
                }
            }
        }
        let mut powers: Vec<Vec<IntPolynomial>> = images
            .iter()
            .map(|p| vec![IntPolynomial::one(target), p.clone()])
            .collect();
        let mut out = IntPolynomial::zero(target);
        for (m, c) in self.terms.iter() {
            let mut term = IntPolynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms.into_iter() {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Move into a variable set that contains every variable of `self` under
    /// the same name and degree.
    pub fn embed(&self, target: &Arc<VarSet>) -> Result<Self> {
        let images = self
            .vars
            .iter()
            .map(|v| {
                let j = target.require(&v.name)?;
                if target.degree(j) != v.degree {
                    return Err(Error::VarSetMismatch {
                        left: self.vars.to_string(),
                        right: target.to_string(),
                    });
                }
                Ok(IntPolynomial::var_at(target, j))
            })
            .collect::<Result<Vec<_>>>()?;
        self.map_into(target, &images)
    }

    /// Rename-free transport by name: variables missing from `target` must
    /// not occur in `self`.
    pub fn restrict(&self, target: &Arc<VarSet>) -> Result<Self> {
        let images = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| match target.index_of(&v.name) {
                Some(j) => Ok(IntPolynomial::var_at(target, j)),
                None if !self.involves(i) => Ok(IntPolynomial::zero(target)),
                None => Err(Error::UnknownVariable(v.name.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        self.map_into(target, &images)
    }

    fn render_term(&self, m: &Monomial, c: &BigInt) -> String {
        let mut s = String::new();
        write_term(&mut s, &self.vars, m, c, true);
        s
    }
}

fn write_monomial(out: &mut String, vars: &VarSet, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(vars.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_term(out: &mut String, vars: &VarSet, m: &Monomial, c: &BigInt, leading: bool) {
    let neg = c.is_negative();
    let abs = c.abs();
    if leading {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if m.is_one() {
        out.push_str(&abs.to_string());
        return;
    }
    if !abs.is_one() {
        out.push_str(&abs.to_string());
        out.push('*');
    }
    write_monomial(out, vars, m);
}

impl fmt::Display for IntPolynomial {
    /// Canonical ASCII rendering, terms in decreasing monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut s, &self.vars, m, c, k == 0);
        }
        f.write_str(&s)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            /// Panics when the operands live over different variable sets;
            /// use the `checked_*` form to handle that case.
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                self.$checked(rhs).expect("polynomial operands over different variable sets")
            }
        }
        impl $trait<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<VarSet> {
        VarSet::new([
            ("t", 1),
            ("lambda1", 1),
            ("lambda2", 2),
            ("alpha1", 1),
            ("alpha2", 2),
            ("gamma", 1),
            ("beta1", 1),
        ])
        .unwrap()
    }

    fn p(s: &str) -> IntPolynomial {
        IntPolynomial::parse(&ring(), s).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            p("t - 2*lambda1") * p("12*t - 48*lambda1"),
            p("12*t^2 - 72*lambda1*t + 96*lambda1^2")
        );
        assert_eq!(
            p("t^2 - 2*alpha1*t + 4*alpha2") * p("t - alpha1"),
            p("t^3 - 3*alpha1*t^2 + (2*alpha1^2 + 4*alpha2)*t - 4*alpha1*alpha2")
        );
        assert!((p("lambda1 + 7") * IntPolynomial::zero(&ring())).is_zero());
    }

    #[test]
    fn multiply_rejects_mismatched_rings() {
        let other = VarSet::new([("t", 1)]).unwrap();
        let q = IntPolynomial::var(&other, "t").unwrap();
        assert!(matches!(
            p("t").checked_mul(&q),
            Err(Error::VarSetMismatch { .. })
        ));
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(p("24*lambda1^2 - 48*lambda2").weighted_degree(), Degree::Homogeneous(2));
        let r = VarSet::new([("delta1", 1), ("lambda1", 1)]).unwrap();
        let q = IntPolynomial::parse(&r, "delta1^3 + delta1^2*lambda1").unwrap();
        assert_eq!(q.weighted_degree(), Degree::Homogeneous(3));
        assert!(matches!(
            p("lambda1 + lambda2").weighted_degree(),
            Degree::Inhomogeneous { .. }
        ));
        assert_eq!(IntPolynomial::zero(&ring()).weighted_degree(), Degree::Any);
    }

    #[test]
    fn substitute_examples() {
        let q = p("t^2 - alpha1*t").substitute(&[("t", p("gamma + alpha1"))]).unwrap();
        assert_eq!(q, p("gamma^2 + alpha1*gamma"));
        let id = p("t^2 - alpha1*t + 3*lambda2");
        assert_eq!(id.substitute(&[]).unwrap(), id);
        let r = VarSet::new([("alpha1", 1), ("beta1", 1), ("beta2", 2), ("lambda2", 2)]).unwrap();
        let b2 = IntPolynomial::parse(&r, "16*beta2").unwrap();
        let img = IntPolynomial::parse(&r, "lambda2 - alpha1^2 - alpha1*beta1").unwrap();
        assert_eq!(
            b2.substitute(&[("beta2", img)]).unwrap(),
            IntPolynomial::parse(&r, "16*lambda2 - 16*alpha1^2 - 16*alpha1*beta1").unwrap()
        );
    }

    #[test]
    fn substitute_rejects_degree_violation() {
        let err = p("lambda2").substitute(&[("lambda2", p("lambda1"))]).unwrap_err();
        assert!(matches!(err, Error::DegreeViolation { .. }));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("-48*lambda2 + 24*lambda1^2").to_string(), "24*lambda1^2 - 48*lambda2");
        assert_eq!(IntPolynomial::zero(&ring()).to_string(), "0");
        assert_eq!(p("-t + 1").to_string(), "-t + 1");
    }

    #[test]
    fn arbitrary_precision() {
        let big = p("86400*lambda1").pow(6);
        assert_eq!(
            big.leading_term().unwrap().1.to_string(),
            "415989582513831936000000000000"
        );
    }
}
