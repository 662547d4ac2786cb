use std::sync::Arc;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::poly::IntPolynomial;
use super::vars::VarSet;
use crate::error::{Error, Result};

/// One family of Chern roots and the names of its elementary symmetric
/// functions, `targets[k - 1]` standing for `e_k(roots)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFamily {
    pub roots: Vec<String>,
    pub targets: Vec<String>,
}

impl SymmetricFamily {
    pub fn new<S: Into<String>>(
        roots: impl IntoIterator<Item = S>,
        targets: impl IntoIterator<Item = S>,
    ) -> Self {
        SymmetricFamily {
            roots: roots.into_iter().map(Into::into).collect(),
            targets: targets.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymmetricFamilies {
    pub families: Vec<SymmetricFamily>,
}

impl SymmetricFamilies {
    pub fn new(families: Vec<SymmetricFamily>) -> Self {
        SymmetricFamilies { families }
    }

    fn root_indices(&self, source: &VarSet) -> Result<Vec<Vec<usize>>> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for fam in &self.families {
            if fam.roots.len() != fam.targets.len() {
                return Err(Error::Unsupported(format!(
                    "{} roots but {} elementary targets",
                    fam.roots.len(),
                    fam.targets.len()
                )));
            }
            let mut idx = Vec::new();
            for r in &fam.roots {
                let i = source.require(r)?;
                if source.degree(i) != 1 {
                    return Err(Error::DegreeViolation {
                        var: r.clone(),
                        expected: 1,
                        found: format!("degree {}", source.degree(i)),
                    });
                }
                if seen.contains(&i) {
                    return Err(Error::DuplicateVariable(r.clone()));
                }
                seen.push(i);
                idx.push(i);
            }
            out.push(idx);
        }
        Ok(out)
    }
}

/// `e_k` of the given degree-1 variables.
pub fn elementary(vars: &Arc<VarSet>, roots: &[usize], k: usize) -> IntPolynomial {
    // Coefficients of prod (1 + r_i z), built incrementally.
    let mut e = vec![IntPolynomial::one(vars)];
    for &r in roots {
        let x = IntPolynomial::var_at(vars, r);
        e.push(IntPolynomial::zero(vars));
        for j in (1..e.len()).rev() {
            e[j] = &e[j] + &(&e[j - 1] * &x);
        }
    }
    e.get(k).cloned().unwrap_or_else(|| IntPolynomial::zero(vars))
}

fn swap_vars(p: &IntPolynomial, i: usize, j: usize) -> IntPolynomial {
    let vars = p.vars().clone();
    let images: Vec<IntPolynomial> = (0..vars.len())
        .map(|k| {
            let src = if k == i {
                j
            } else if k == j {
                i
            } else {
                k
            };
            IntPolynomial::var_at(&vars, src)
        })
        .collect();
    p.map_into(&vars, &images).expect("swap preserves degrees")
}

fn check_symmetric(p: &IntPolynomial, fam: &SymmetricFamily, idx: &[usize]) -> Result<()> {
    for w in idx.windows(2) {
        let q = swap_vars(p, w[0], w[1]);
        if &q != p {
            let diff = &q - p;
            let (m, _) = diff.leading_term().expect("nonzero difference");
            let c = p.coefficient(m);
            let term = IntPolynomial::monomial(p.vars(), m.clone(), BigInt::from(1));
            return Err(Error::NotSymmetric {
                roots: fam.roots.join(", "),
                term: format!("{term} (coefficient {c})"),
            });
        }
    }
    Ok(())
}

/// Rewrite `p`, symmetric in each family of roots separately, as a polynomial
/// in the families' elementary symmetric functions, landing in `target`.
///
/// `target` must declare every target name with degree `k` for `e_k`, and every
/// non-root variable that occurs in `p` under the same name. The result is
/// checked by substituting the elementary polynomials back.
pub fn symmetrize_to_elementary(
    p: &IntPolynomial,
    fams: &SymmetricFamilies,
    target: &Arc<VarSet>,
) -> Result<IntPolynomial> {
    let source = p.vars().clone();
    let roots = fams.root_indices(&source)?;
    for (fam, idx) in fams.families.iter().zip(&roots) {
        check_symmetric(p, fam, idx)?;
    }

    // Work in source + fresh e-variables.
    let mut extra = Vec::new();
    for (f, fam) in fams.families.iter().enumerate() {
        for k in 1..=fam.roots.len() {
            extra.push((format!("__e{f}_{k}"), k as u32));
        }
    }
    let ext = source.extended(extra)?;
    let ew = ext.weights();
    let n0 = source.len();
    let mut rem = p.embed(&ext)?;
    let mut offset = n0;

    for idx in &roots {
        let n = idx.len();
        let mut done = IntPolynomial::zero(&ext);
        loop {
            // Lex-greatest root exponent vector among the remaining terms.
            let best = rem
                .terms()
                .map(|(m, _)| idx.iter().map(|&i| m.exponent(i)).collect::<Vec<u32>>())
                .filter(|a| a.iter().any(|&e| e > 0))
                .max();
            let Some(a) = best else { break };
            debug_assert!(a.windows(2).all(|w| w[0] >= w[1]));
            // Coefficient: every term carrying exactly this root exponent.
            let mut coeff = IntPolynomial::zero(&ext);
            for (m, c) in rem.terms() {
                if idx.iter().zip(&a).all(|(&i, &e)| m.exponent(i) == e) {
                    let mut e = m.exponents().to_vec();
                    for &i in idx {
                        e[i] = 0;
                    }
                    coeff.add_term(Monomial::from_exponents(e, &ew), c.clone());
                }
            }
            let mut in_roots = coeff.clone();
            let mut in_e = coeff;
            for k in 1..=n {
                let pow = a[k - 1] - if k < n { a[k] } else { 0 };
                if pow == 0 {
                    continue;
                }
                in_roots = &in_roots * &elementary(&ext, idx, k).pow(pow);
                in_e = &in_e * &IntPolynomial::var_at(&ext, offset + k - 1).pow(pow);
            }
            rem = &rem - &in_roots;
            done = &done + &in_e;
        }
        rem = &rem + &done;
        offset += n;
    }

    // Back-substitution check.
    let mut back = Vec::with_capacity(ext.len());
    for i in 0..n0 {
        back.push(IntPolynomial::var_at(&source, i));
    }
    for idx in &roots {
        for k in 1..=idx.len() {
            back.push(elementary(&source, idx, k));
        }
    }
    let check = rem.map_into(&source, &back)?;
    assert_eq!(&check, p, "symmetric reduction failed its back-substitution check");

    // Transport to the target ring by name.
    let all_roots: Vec<usize> = roots.iter().flatten().copied().collect();
    let mut images = Vec::with_capacity(ext.len());
    for i in 0..n0 {
        if all_roots.contains(&i) {
            images.push(IntPolynomial::zero(target));
            continue;
        }
        match target.index_of(source.name(i)) {
            Some(j) if target.degree(j) == source.degree(i) => {
                images.push(IntPolynomial::var_at(target, j))
            }
            _ if !rem.involves(i) => images.push(IntPolynomial::zero(target)),
            _ => return Err(Error::UnknownVariable(source.name(i).to_string())),
        }
    }
    for fam in &fams.families {
        for (k, name) in fam.targets.iter().enumerate() {
            let j = target.require(name)?;
            if target.degree(j) as usize != k + 1 {
                return Err(Error::DegreeViolation {
                    var: name.clone(),
                    expected: k as u32 + 1,
                    found: format!("degree {}", target.degree(j)),
                });
            }
            images.push(IntPolynomial::var_at(target, j));
        }
    }
    rem.map_into(target, &images)
}

/// The inverse of [`symmetrize_to_elementary`]: replace each target variable
/// of `q` by the elementary symmetric polynomial in the roots, landing in
/// `source`. Other variables are matched by name.
pub fn expand_elementary(
    q: &IntPolynomial,
    fams: &SymmetricFamilies,
    source: &Arc<VarSet>,
) -> Result<IntPolynomial> {
    let roots = fams.root_indices(source)?;
    let tv = q.vars().clone();
    let mut images = Vec::with_capacity(tv.len());
    'outer: for i in 0..tv.len() {
        for (fam, idx) in fams.families.iter().zip(&roots) {
            if let Some(k) = fam.targets.iter().position(|t| t == tv.name(i)) {
                images.push(elementary(source, idx, k + 1));
                continue 'outer;
            }
        }
        match source.index_of(tv.name(i)) {
            Some(j) => images.push(IntPolynomial::var_at(source, j)),
            None if !q.involves(i) => images.push(IntPolynomial::zero(source)),
            None => return Err(Error::UnknownVariable(tv.name(i).to_string())),
        }
    }
    q.map_into(source, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam_a(t1: &str, t2: &str) -> SymmetricFamilies {
        SymmetricFamilies::new(vec![SymmetricFamily::new(["a1", "a2"], [t1, t2])])
    }

    #[test]
    fn newton_identity() {
        let src = VarSet::new([("a1", 1), ("a2", 1)]).unwrap();
        let tgt = VarSet::new([("e1", 1), ("e2", 2)]).unwrap();
        let p = IntPolynomial::parse(&src, "a1^2 + a2^2").unwrap();
        let q = symmetrize_to_elementary(&p, &fam_a("e1", "e2"), &tgt).unwrap();
        assert_eq!(q, IntPolynomial::parse(&tgt, "e1^2 - 2*e2").unwrap());
    }

    #[test]
    fn euler_class_of_cubic_forms() {
        let src = VarSet::new([("alpha1", 1), ("a1", 1), ("a2", 1)]).unwrap();
        let tgt = VarSet::new([("alpha1", 1), ("alpha2", 2)]).unwrap();
        let p = IntPolynomial::parse(
            &src,
            "(alpha1 - 3*a1)*(alpha1 - 3*a2)*(alpha1 - 2*a1 - a2)*(alpha1 - a1 - 2*a2)",
        )
        .unwrap();
        // e1 -> alpha1 identifies the free alpha1 with the root sum.
        let tgt2 = VarSet::new([("alpha1", 1), ("e1", 1), ("alpha2", 2)]).unwrap();
        let q = symmetrize_to_elementary(&p, &fam_a("e1", "alpha2"), &tgt2).unwrap();
        let alpha1 = IntPolynomial::var(&tgt2, "alpha1").unwrap();
        let q = q.substitute(&[("e1", alpha1)]).unwrap().restrict(&tgt).unwrap();
        assert_eq!(
            q,
            IntPolynomial::parse(&tgt, "9*alpha2^2 - 2*alpha1^2*alpha2").unwrap()
        );
    }

    #[test]
    fn rejects_antisymmetric() {
        let src = VarSet::new([("a1", 1), ("a2", 1)]).unwrap();
        let tgt = VarSet::new([("e1", 1), ("e2", 2)]).unwrap();
        let p = IntPolynomial::parse(&src, "a1 - a2").unwrap();
        assert!(matches!(
            symmetrize_to_elementary(&p, &fam_a("e1", "e2"), &tgt),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn two_families_and_three_roots() {
        let src = VarSet::new([("a1", 1), ("a2", 1), ("b1", 1), ("b2", 1), ("b3", 1)]).unwrap();
        let tgt = VarSet::new([("p", 1), ("q", 2), ("u", 1), ("v", 2), ("w", 3)]).unwrap();
        let fams = SymmetricFamilies::new(vec![
            SymmetricFamily::new(["a1", "a2"], ["p", "q"]),
            SymmetricFamily::new(["b1", "b2", "b3"], ["u", "v", "w"]),
        ]);
        let p = IntPolynomial::parse(
            &src,
            "(a1 + b1)*(a1 + b2)*(a1 + b3)*(a2 + b1)*(a2 + b2)*(a2 + b3) + b1^3 + b2^3 + b3^3",
        )
        .unwrap();
        let q = symmetrize_to_elementary(&p, &fams, &tgt).unwrap();
        assert_eq!(expand_elementary(&q, &fams, &src).unwrap(), p);
    }
}
