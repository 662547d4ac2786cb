//! Graded pieces of quotient rings as finitely generated abelian groups.
//!
//! Everything here is computed from the ideal's generators by integer linear
//! algebra alone, without consulting the Gröbner basis, so it can serve as an
//! independent oracle for the Gröbner engine.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::{hermite_rows, left_kernel, smith, solve_in_hermite, IntMatrix, Row};
use super::RingSpec;
use crate::error::{Error, Result};
use crate::ring::{monomials_of_degree, IntPolynomial, Monomial, VarSet};

/// One graded piece `R_d = Z^n / L` of `R = Z[vars] / I`, with `n` the number
/// of monomials of degree `d` and `L` spanned by the degree-`d` multiples of
/// the generators of `I`.
#[derive(Clone, Debug)]
pub struct GradedPieceGroup {
    pub degree: u32,
    /// Monomials of degree `d`, leading monomial first.
    pub monomial_basis: Vec<Monomial>,
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion_invariants: Vec<BigInt>,
    /// `V` in `U H V = D`, where `H` is the Hermite basis of `L`; monomial
    /// coordinates `x` map to Smith coordinates `x V`.
    pub basis_change: IntMatrix,
    pub basis_change_inverse: IntMatrix,
    /// All nonzero diagonal entries of `D`, including units.
    pub smith_diagonal: Vec<BigInt>,
    pub relation_hermite: Vec<Row>,
    vars: Arc<VarSet>,
    index: HashMap<Monomial, usize>,
}

impl GradedPieceGroup {
    pub fn compute(ring: &RingSpec, d: u32) -> Self {
        let vars = ring.vars().clone();
        let weights = vars.weights();
        let mut monomial_basis = monomials_of_degree(&weights, d);
        monomial_basis.reverse();
        let index: HashMap<Monomial, usize> = monomial_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let n = monomial_basis.len();

        let mut rows = Vec::new();
        for g in ring.relations.generators() {
            let Some(e) = g.homogeneous_degree().or(if g.is_zero() { None } else { Some(0) }) else {
                continue;
            };
            if e > d {
                continue;
            }
            for mu in monomials_of_degree(&weights, d - e) {
                let mut row = vec![BigInt::zero(); n];
                for (m, c) in g.terms() {
                    row[index[&mu.mul(m)]] += c;
                }
                rows.push(row);
            }
        }
        let relation_hermite = hermite_rows(&rows, n);
        let h = IntMatrix::from_rows(relation_hermite.clone(), n);
        let s = smith(&h);
        let smith_diagonal = s.invariants();
        let rank = smith_diagonal.len();
        let torsion_invariants = smith_diagonal.iter().filter(|x| !x.is_one()).cloned().collect();
        GradedPieceGroup {
            degree: d,
            monomial_basis,
            free_rank: n - rank,
            torsion_invariants,
            basis_change: s.v,
            basis_change_inverse: s.v_inv,
            smith_diagonal,
            relation_hermite,
            vars,
            index,
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn dimension(&self) -> usize {
        self.monomial_basis.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion_invariants.iter().fold(BigInt::one(), |a, b| a * b))
    }

    pub fn is_zero_group(&self) -> bool {
        self.free_rank == 0 && self.torsion_invariants.is_empty()
    }

    /// Coefficient vector of `p` in the monomial basis.
    pub fn coordinates(&self, p: &IntPolynomial) -> Result<Row> {
        crate::ring::vars::ensure_same(&self.vars, p.vars())?;
        let mut x = vec![BigInt::zero(); self.dimension()];
        for (m, c) in p.terms() {
            match self.index.get(m) {
                Some(&i) => x[i] = c.clone(),
                None => {
                    return Err(Error::DegreeViolation {
                        var: p.to_string(),
                        expected: self.degree,
                        found: format!("a term of degree {}", m.degree()),
                    })
                }
            }
        }
        Ok(x)
    }

    pub fn polynomial(&self, x: &[BigInt]) -> IntPolynomial {
        let mut p = IntPolynomial::zero(&self.vars);
        for (m, c) in self.monomial_basis.iter().zip(x) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn smith_coordinates(&self, p: &IntPolynomial) -> Result<Row> {
        Ok(self.basis_change.left_apply(&self.coordinates(p)?))
    }

    /// Whether `p` vanishes in this graded piece, decided in Smith
    /// coordinates.
    pub fn contains(&self, p: &IntPolynomial) -> Result<bool> {
        let y = self.smith_coordinates(p)?;
        Ok(y.iter().enumerate().all(|(i, yi)| match self.smith_diagonal.get(i) {
            Some(di) => (yi % di).is_zero(),
            None => yi.is_zero(),
        }))
    }

    /// The same question decided by the Hermite basis instead.
    pub fn contains_via_hermite(&self, p: &IntPolynomial) -> Result<bool> {
        Ok(solve_in_hermite(&self.relation_hermite, &self.coordinates(p)?).is_some())
    }

    /// Checks `U H V = D` with unimodular `U`, `V` and a divisibility chain.
    pub fn verify_smith(&self) -> bool {
        let n = self.dimension();
        let h = IntMatrix::from_rows(self.relation_hermite.clone(), n);
        let s = smith(&h);
        s.v == self.basis_change && verify_smith_form(&h, &s)
    }
}

/// Full certificate check for a Smith decomposition of `a`.
pub fn verify_smith_form(a: &IntMatrix, s: &super::SmithForm) -> bool {
    if s.u.mul(a).mul(&s.v) != s.d || !s.d.is_diagonal() {
        return false;
    }
    if s.v.mul(&s.v_inv) != IntMatrix::identity(s.v.nrows()) {
        return false;
    }
    if !s.u.determinant().abs().is_one() || !s.v.determinant().abs().is_one() {
        return false;
    }
    let inv = s.invariants();
    let k = s.d.nrows().min(s.d.ncols);
    if (inv.len()..k).any(|i| !s.d.rows[i][i].is_zero()) {
        return false;
    }
    inv.iter().all(|x| x.is_positive()) && inv.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

pub fn graded_piece(ring: &RingSpec, d: u32) -> GradedPieceGroup {
    GradedPieceGroup::compute(ring, d)
}

/// The graded piece of `R / p R`.
pub fn graded_piece_mod(ring: &RingSpec, d: u32, p: u32) -> Result<GradedPieceGroup> {
    Ok(GradedPieceGroup::compute(&ring.modulo(p)?, d))
}

/// The kernel of multiplication by `m` from `R_d` to `R_{d + deg m}`.
#[derive(Clone, Debug)]
pub struct KernelPiece {
    pub degree: u32,
    pub free_rank: usize,
    pub torsion_invariants: Vec<BigInt>,
    /// Lifts of a minimal generating set of the kernel group.
    pub generators: Vec<IntPolynomial>,
    /// Per-degree lattice equality between the kernel and the submodule
    /// spanned by the candidates, when candidates were supplied.
    pub generated_by_candidates: Option<bool>,
    /// Smith order of each generator (`None` for free generators).
    pub generator_orders: Vec<Option<BigInt>>,
}

impl KernelPiece {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion_invariants.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct MultiplicationKernel {
    pub multiplier: IntPolynomial,
    pub max_degree: u32,
    pub pieces: Vec<KernelPiece>,
}

impl MultiplicationKernel {
    /// Whether the candidates generate every kernel piece up to the bound.
    pub fn generated_by_candidates(&self) -> bool {
        self.pieces.iter().all(|p| p.generated_by_candidates == Some(true))
    }

    pub fn piece(&self, d: u32) -> Option<&KernelPiece> {
        self.pieces.iter().find(|p| p.degree == d)
    }
}

struct PieceCache<'a> {
    ring: &'a RingSpec,
    pieces: BTreeMap<u32, GradedPieceGroup>,
}

impl<'a> PieceCache<'a> {
    fn get(&mut self, d: u32) -> &GradedPieceGroup {
        self.pieces
            .entry(d)
            .or_insert_with(|| GradedPieceGroup::compute(self.ring, d))
    }
}

fn multiplier_degree(m: &IntPolynomial) -> Result<u32> {
    m.require_homogeneous()?;
    Ok(m.homogeneous_degree().unwrap_or(1))
}

fn kernel_piece(
    cache: &mut PieceCache<'_>,
    m: &IntPolynomial,
    e: u32,
    d: u32,
    candidates: &[IntPolynomial],
) -> Result<KernelPiece> {
    let src = cache.get(d).clone();
    let tgt_h = cache.get(d + e).relation_hermite.clone();
    let tgt = cache.get(d + e);
    let n = src.dimension();
    let nt = tgt.dimension();

    // Rows: images of the monomials, then relations of the target.
    let mut rows = Vec::with_capacity(n + tgt_h.len());
    for mono in &src.monomial_basis {
        let img = m.shift(mono);
        rows.push(tgt.coordinates(&img)?);
    }
    rows.extend(tgt_h.iter().cloned());
    let stacked = IntMatrix::from_rows(rows, nt);
    let mut kernel_rows: Vec<Row> = left_kernel(&stacked)
        .into_iter()
        .map(|r| r[..n].to_vec())
        .collect();
    kernel_rows.extend(src.relation_hermite.iter().cloned());
    let kernel = hermite_rows(&kernel_rows, n);

    // Kernel group = kernel lattice / relation lattice, in kernel coordinates.
    let k = kernel.len();
    let rel_coords: Vec<Row> = src
        .relation_hermite
        .iter()
        .map(|r| solve_in_hermite(&kernel, r).expect("relations lie in the kernel"))
        .collect();
    let s = smith(&IntMatrix::from_rows(rel_coords, k));
    let diag = s.invariants();
    let kernel_mat = IntMatrix::from_rows(kernel.clone(), n);
    let mut generators = Vec::new();
    let mut generator_orders = Vec::new();
    for j in 0..k {
        let order = diag.get(j).cloned();
        if order.as_ref().is_some_and(|o| o.is_one()) {
            continue;
        }
        let x = kernel_mat.left_apply(&s.v_inv.rows[j]);
        generators.push(cache.ring.normal_form(&src.polynomial(&x)));
        generator_orders.push(order);
    }
    let torsion_invariants: Vec<BigInt> = diag.iter().filter(|x| !x.is_one()).cloned().collect();

    let generated_by_candidates = if candidates.is_empty() {
        None
    } else {
        let weights = src.vars().weights();
        let mut span = src.relation_hermite.clone();
        for c in candidates {
            let Some(ce) = c.homogeneous_degree() else { continue };
            if ce > d {
                continue;
            }
            for mu in monomials_of_degree(&weights, d - ce) {
                span.push(src.coordinates(&c.shift(&mu))?);
            }
        }
        Some(hermite_rows(&span, n) == kernel)
    };

    Ok(KernelPiece {
        degree: d,
        free_rank: k - diag.len(),
        torsion_invariants,
        generators,
        generated_by_candidates,
        generator_orders,
    })
}

/// Kernel of multiplication by `m` on each graded piece of degree at most
/// `d_max`, optionally checking that `candidates` generate it as a module.
pub fn multiplication_kernel(
    ring: &RingSpec,
    m: &IntPolynomial,
    d_max: u32,
    candidates: &[IntPolynomial],
) -> Result<MultiplicationKernel> {
    crate::ring::vars::ensure_same(ring.vars(), m.vars())?;
    let e = multiplier_degree(m)?;
    let mut cache = PieceCache {
        ring,
        pieces: BTreeMap::new(),
    };
    let pieces = (0..=d_max)
        .map(|d| kernel_piece(&mut cache, m, e, d, candidates))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicationKernel {
        multiplier: m.clone(),
        max_degree: d_max,
        pieces,
    })
}

const ENUMERATION_LIMIT: u64 = 1 << 20;

/// Every nonzero element of the degree-`d` kernel of multiplication by `m`,
/// as Gröbner normal forms. The kernel must be finite.
pub fn enumerate_kernel_elements(
    ring: &RingSpec,
    m: &IntPolynomial,
    d: u32,
) -> Result<Vec<IntPolynomial>> {
    crate::ring::vars::ensure_same(ring.vars(), m.vars())?;
    let e = multiplier_degree(m)?;
    let mut cache = PieceCache {
        ring,
        pieces: BTreeMap::new(),
    };
    let piece = kernel_piece(&mut cache, m, e, d, &[])?;
    if piece.free_rank > 0 {
        return Err(Error::InfiniteKernel {
            degree: d,
            free_rank: piece.free_rank,
        });
    }
    let orders: Vec<BigInt> = piece
        .generator_orders
        .iter()
        .map(|o| o.clone().expect("finite kernel"))
        .collect();
    let total = orders.iter().fold(BigInt::one(), |a, b| a * b);
    if total > BigInt::from(ENUMERATION_LIMIT) {
        return Err(Error::Unsupported(format!("kernel of order {total} is too large to list")));
    }
    let vars = ring.vars().clone();
    let mut out: Vec<IntPolynomial> = Vec::new();
    let mut digits = vec![BigInt::zero(); orders.len()];
    loop {
        let mut p = IntPolynomial::zero(&vars);
        for (g, a) in piece.generators.iter().zip(&digits) {
            p = &p + &g.scale(a.clone());
        }
        let nf = ring.normal_form(&p);
        if !nf.is_zero() && !out.contains(&nf) {
            out.push(nf);
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < orders[i] {
                break;
            }
            digits[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Smallest nonnegative residue representative of `x` modulo `d`.
pub fn residue(x: &BigInt, d: &BigInt) -> BigInt {
    x.mod_floor(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;

    fn ring(vars: &[(&str, u32)], rels: &[&str]) -> RingSpec {
        let v = VarSet::new(vars.iter().map(|(n, d)| (n.to_string(), *d))).unwrap();
        RingSpec::new("test", Ideal::parse(&v, rels).unwrap())
    }

    #[test]
    fn bg_degree_one() {
        let r = ring(&[("gamma", 1), ("beta1", 1), ("beta2", 2)], &["2*gamma", "gamma^2 + beta1*gamma"]);
        let g = graded_piece(&r, 1);
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.torsion_invariants, vec![BigInt::from(2)]);
        assert!(g.verify_smith());
        let g0 = graded_piece(&r, 0);
        assert_eq!((g0.free_rank, g0.torsion_invariants.len()), (1, 0));
    }

    #[test]
    fn open_stratum_degree_one_is_torsion_free() {
        let r = ring(&[("lambda1", 1), ("lambda2", 2)], &["24*lambda1^2 - 48*lambda2", "20*lambda1*lambda2"]);
        let g = graded_piece(&r, 1);
        assert_eq!(g.free_rank, 1);
        assert!(g.torsion_invariants.is_empty());
    }

    #[test]
    fn kernel_trivial_cases() {
        let r = ring(&[("lambda1", 1)], &[]);
        let m = r.poly("lambda1").unwrap();
        let k = multiplication_kernel(&r, &m, 4, &[]).unwrap();
        assert!(k.pieces.iter().all(|p| p.is_zero()));
        let zero = IntPolynomial::zero(r.vars());
        let k = multiplication_kernel(&r, &zero, 3, &[]).unwrap();
        assert!(k.pieces.iter().all(|p| p.free_rank == 1));
    }

    #[test]
    fn unit_multiplier_has_empty_kernel() {
        let r = ring(&[("gamma", 1), ("lambda1", 1)], &["2*gamma"]);
        let one = IntPolynomial::one(r.vars());
        assert!(enumerate_kernel_elements(&r, &one, 3).unwrap().is_empty());
    }

    #[test]
    fn infinite_kernel_is_reported() {
        let r = ring(&[("x", 1)], &[]);
        let zero = IntPolynomial::zero(r.vars());
        assert!(matches!(
            enumerate_kernel_elements(&r, &zero, 2),
            Err(Error::InfiniteKernel { degree: 2, free_rank: 1 })
        ));
    }

    #[test]
    fn torsion_kernel() {
        let r = ring(&[("x", 1), ("y", 1)], &["2*x", "x*y"]);
        let m = r.poly("y").unwrap();
        let els = enumerate_kernel_elements(&r, &m, 1).unwrap();
        assert_eq!(els, vec![r.poly("x").unwrap()]);
    }
}
