//! Homogeneous ideals over the integers, their strong Gröbner bases, and a
//! graded linear algebra oracle built on Smith normal form.

pub mod graded;
pub mod groebner;
pub mod lattice;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::vars::ensure_same;
use crate::ring::{IntPolynomial, VarSet};

pub use graded::{
    enumerate_kernel_elements, graded_piece, graded_piece_mod, multiplication_kernel,
    GradedPieceGroup, KernelPiece, MultiplicationKernel,
};
pub use groebner::StrongGroebnerBasis;
pub use lattice::{hermite_rows, left_kernel, smith, IntMatrix, SmithForm};

/// An ideal generated by homogeneous polynomials. The strong Gröbner basis is
/// computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    vars: Arc<VarSet>,
    generators: Vec<IntPolynomial>,
    basis: OnceLock<StrongGroebnerBasis>,
}

impl Ideal {
    pub fn new(vars: &Arc<VarSet>, generators: Vec<IntPolynomial>) -> Result<Self> {
        for g in &generators {
            ensure_same(vars, g.vars())?;
            g.require_homogeneous()?;
        }
        Ok(Ideal {
            vars: vars.clone(),
            generators,
            basis: OnceLock::new(),
        })
    }

    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Ideal::new(vars, Vec::new()).expect("empty generator list")
    }

    /// Parse each generator with the polynomial grammar.
    pub fn parse(vars: &Arc<VarSet>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| IntPolynomial::parse(vars, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(vars, gens)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[IntPolynomial] {
        &self.generators
    }

    pub fn with_generators(&self, more: impl IntoIterator<Item = IntPolynomial>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(more);
        Ideal::new(&self.vars, gens)
    }

    pub fn basis(&self) -> &StrongGroebnerBasis {
        self.basis
            .get_or_init(|| StrongGroebnerBasis::compute(&self.vars, &self.generators))
    }

    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        self.basis().normal_form(p)
    }

    pub fn contains(&self, p: &IntPolynomial) -> bool {
        self.basis().reduces_to_zero(p)
    }

    /// Generators of `other` that do not lie in `self`.
    pub fn missing_generators(&self, other: &Ideal) -> Result<Vec<IntPolynomial>> {
        ensure_same(&self.vars, &other.vars)?;
        Ok(other
            .generators
            .iter()
            .filter(|g| !self.contains(g))
            .cloned()
            .collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of comparing two ideals generator by generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealComparison {
    /// Generators of the right ideal outside the left ideal.
    pub right_not_in_left: Vec<IntPolynomial>,
    /// Generators of the left ideal outside the right ideal.
    pub left_not_in_right: Vec<IntPolynomial>,
}

impl IdealComparison {
    pub fn equal(&self) -> bool {
        self.right_not_in_left.is_empty() && self.left_not_in_right.is_empty()
    }
}

pub fn compare_ideals(left: &Ideal, right: &Ideal) -> Result<IdealComparison> {
    Ok(IdealComparison {
        right_not_in_left: left.missing_generators(right)?,
        left_not_in_right: right.missing_generators(left)?,
    })
}

pub fn strong_groebner(ideal: &Ideal) -> &StrongGroebnerBasis {
    ideal.basis()
}

pub fn normal_form(p: &IntPolynomial, basis: &StrongGroebnerBasis) -> IntPolynomial {
    basis.normal_form(p)
}

pub fn ideal_contains(ideal: &Ideal, p: &IntPolynomial) -> bool {
    ideal.contains(p)
}

/// Mutual containment of generators. Ideals over different variable sets are
/// never equal.
pub fn ideal_equal(left: &Ideal, right: &Ideal) -> bool {
    compare_ideals(left, right).is_ok_and(|c| c.equal())
}

/// A graded ring `Z[vars] / relations`, with optional alias metadata recording
/// which symbol of another presentation a variable stands for.
#[derive(Clone, Debug)]
pub struct RingSpec {
    pub name: String,
    pub relations: Ideal,
    pub aliases: Vec<(String, String)>,
}

impl RingSpec {
    pub fn new(name: impl Into<String>, relations: Ideal) -> Self {
        RingSpec {
            name: name.into(),
            relations,
            aliases: Vec::new(),
        }
    }

    pub fn polynomial_ring(name: impl Into<String>, vars: &Arc<VarSet>) -> Self {
        RingSpec::new(name, Ideal::zero(vars))
    }

    pub fn with_alias(mut self, var: &str, stands_for: &str) -> Self {
        self.aliases.push((var.to_string(), stands_for.to_string()));
        self
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.relations.vars()
    }

    pub fn poly(&self, src: &str) -> Result<IntPolynomial> {
        IntPolynomial::parse(self.vars(), src)
    }

    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        self.relations.normal_form(p)
    }

    pub fn is_zero(&self, p: &IntPolynomial) -> bool {
        self.relations.contains(p)
    }

    /// The same presentation with the constant `p` adjoined to the relations.
    pub fn modulo(&self, p: u32) -> Result<RingSpec> {
        if p < 2 {
            return Err(Error::Unsupported(format!("reduction modulo {p}")));
        }
        let c = IntPolynomial::constant(self.vars(), BigInt::from(p));
        Ok(RingSpec {
            name: format!("{} mod {p}", self.name),
            relations: self.relations.with_generators([c])?,
            aliases: self.aliases.clone(),
        })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[")?;
        for (i, v) in self.vars().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.name)?;
        }
        write!(f, "] / {}", self.relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg_vars() -> Arc<VarSet> {
        VarSet::new([("gamma", 1), ("beta1", 1), ("beta2", 2)]).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let v = bg_vars();
        assert!(matches!(
            Ideal::parse(&v, &["gamma + beta2"]),
            Err(Error::Inhomogeneous { .. })
        ));
    }

    #[test]
    fn equality_examples() {
        let v = bg_vars();
        let a = Ideal::parse(&v, &["2*gamma", "gamma^2 + beta1*gamma"]).unwrap();
        let b = Ideal::parse(&v, &["2*gamma", "gamma^2 - beta1*gamma"]).unwrap();
        assert!(ideal_equal(&a, &b));
        let l = VarSet::new([("lambda1", 1), ("lambda2", 2)]).unwrap();
        let c = Ideal::parse(&l, &["lambda1"]).unwrap();
        let d = Ideal::parse(&l, &["lambda1^2"]).unwrap();
        assert!(!ideal_equal(&c, &d));
        let cmp = compare_ideals(&d, &c).unwrap();
        assert_eq!(cmp.right_not_in_left, vec![IntPolynomial::parse(&l, "lambda1").unwrap()]);
        assert!(!ideal_contains(&Ideal::parse(&l, &["lambda2"]).unwrap(), &IntPolynomial::parse(&l, "lambda1").unwrap()));
    }

    #[test]
    fn modulo_two() {
        let v = bg_vars();
        let r = RingSpec::new("bg", Ideal::parse(&v, &["2*gamma", "gamma^2 + beta1*gamma"]).unwrap());
        let r2 = r.modulo(2).unwrap();
        assert!(r2.is_zero(&r2.poly("2*beta2").unwrap()));
        assert!(!r2.is_zero(&r2.poly("beta2").unwrap()));
        assert!(r2.is_zero(&r2.poly("gamma^2 - beta1*gamma").unwrap()));
    }
}
