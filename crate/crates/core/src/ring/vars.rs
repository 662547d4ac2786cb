use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A graded generator: a named symbol with a positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSpec {
    pub name: String,
    pub degree: u32,
}

/// The ordered variable list of a polynomial ring. The declaration order is
/// the order used by the weighted graded reverse lexicographic monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    vars: Vec<VariableSpec>,
}

impl VarSet {
    pub fn new<S, I>(specs: I) -> Result<Arc<VarSet>>
    where
        S: Into<String>,
        I: IntoIterator<Item = (S, u32)>,
    {
        let mut vars: Vec<VariableSpec> = Vec::new();
        for (name, degree) in specs {
            let name = name.into();
            if degree == 0 {
                return Err(Error::ZeroDegree(name));
            }
            if vars.iter().any(|v| v.name == name) {
                return Err(Error::DuplicateVariable(name));
            }
            vars.push(VariableSpec { name, degree });
        }
        Ok(Arc::new(VarSet { vars }))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.vars[i].degree
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.degree).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VariableSpec> {
        self.vars.iter()
    }

    /// A new variable set with `more` appended after the existing variables.
    pub fn extended<S, I>(&self, more: I) -> Result<Arc<VarSet>>
    where
        S: Into<String>,
        I: IntoIterator<Item = (S, u32)>,
    {
        let existing = self.vars.iter().map(|v| (v.name.clone(), v.degree));
        let extra: Vec<(String, u32)> = more.into_iter().map(|(s, d)| (s.into(), d)).collect();
        VarSet::new(existing.chain(extra))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", v.name, v.degree)?;
        }
        Ok(())
    }
}

pub(crate) fn ensure_same(a: &Arc<VarSet>, b: &Arc<VarSet>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::VarSetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_degree() {
        assert_eq!(
            VarSet::new([("x", 1), ("x", 2)]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert_eq!(
            VarSet::new([("x", 0)]).unwrap_err(),
            Error::ZeroDegree("x".into())
        );
    }

    #[test]
    fn lookup() {
        let v = VarSet::new([("lambda1", 1), ("lambda2", 2)]).unwrap();
        assert_eq!(v.index_of("lambda2"), Some(1));
        assert_eq!(v.degree(1), 2);
        assert!(v.require("gamma").is_err());
    }
}
