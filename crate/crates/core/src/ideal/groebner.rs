//! Strong Gröbner bases over the integers.
//!
//! Completion follows the classical S-polynomial / G-polynomial scheme for
//! Euclidean coefficient rings. Normal forms reduce each coefficient into
//! `[0, d)`, where `d` is the smallest leading coefficient among basis elements
//! whose leading monomial divides the term; for a strong basis this `d`
//! generates the ideal of leading coefficients at that monomial, so the
//! remainder is unique.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{IntPolynomial, Monomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGroebnerBasis {
    vars: Arc<VarSet>,
    elements: Vec<IntPolynomial>,
}

impl StrongGroebnerBasis {
    /// Complete `generators` to a reduced strong basis.
    pub fn compute(vars: &Arc<VarSet>, generators: &[IntPolynomial]) -> Self {
        let mut c = Completion {
            vars: vars.clone(),
            all: Vec::new(),
            active: Vec::new(),
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
        };
        let mut gens: Vec<IntPolynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
        for g in gens {
            c.add(g);
        }
        while let Some(Reverse((_, i, j))) = c.pairs.pop() {
            if !(c.active[i] && c.active[j]) {
                continue;
            }
            for h in c.pair_polys(i, j) {
                c.add(h);
            }
        }
        let mut out = StrongGroebnerBasis {
            vars: vars.clone(),
            elements: c.basis,
        };
        out.interreduce();
        out
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn elements(&self) -> &[IntPolynomial] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The unique fully reduced remainder of `p`.
    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        normal_form_in(&self.elements, p)
    }

    pub fn reduces_to_zero(&self, p: &IntPolynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    fn interreduce(&mut self) {
        let els = std::mem::take(&mut self.elements);
        let mut keep: Vec<IntPolynomial> = Vec::new();
        for (i, g) in els.iter().enumerate() {
            let (gm, gc) = g.leading_term().unwrap();
            let redundant = els.iter().enumerate().any(|(j, h)| {
                if i == j {
                    return false;
                }
                let (hm, hc) = h.leading_term().unwrap();
                hm.divides(gm) && (gc % hc).is_zero() && (hm != gm || hc != gc || j < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let reduced: Vec<IntPolynomial> = keep
            .iter()
            .map(|g| {
                let (m, c) = g.leading_term().unwrap();
                let lead = IntPolynomial::monomial(&self.vars, m.clone(), c.clone());
                let tail = g - &lead;
                &lead + &normal_form_in(&keep, &tail)
            })
            .collect();
        let mut reduced = reduced;
        reduced.sort_by(|a, b| {
            let (am, ac) = a.leading_term().unwrap();
            let (bm, bc) = b.leading_term().unwrap();
            am.cmp(bm).then(ac.cmp(bc))
        });
        self.elements = reduced;
    }
}

/// Smallest leading coefficient among elements whose leading monomial divides
/// `m`, with the index of one element achieving it.
fn best_reducer(basis: &[IntPolynomial], m: &Monomial) -> Option<(usize, BigInt)> {
    let mut best: Option<(usize, BigInt)> = None;
    for (i, g) in basis.iter().enumerate() {
        let (gm, gc) = g.leading_term().unwrap();
        if gm.divides(m) && best.as_ref().is_none_or(|(_, c)| gc < c) {
            best = Some((i, gc.clone()));
        }
    }
    best
}

pub(crate) fn normal_form_in(basis: &[IntPolynomial], p: &IntPolynomial) -> IntPolynomial {
    let vars = p.vars().clone();
    let mut rest = p.clone();
    let mut out = IntPolynomial::zero(&vars);
    while let Some((m, c)) = rest.pop_leading() {
        match best_reducer(basis, &m) {
            None => out.add_term(m, c),
            Some((i, d)) => {
                let (q, r) = c.div_mod_floor(&d);
                let g = &basis[i];
                let (gm, _) = g.leading_term().unwrap();
                let shift = gm.quotient_of(&m);
                let neg_q = -q;
                for (tm, tc) in g.terms().rev().skip(1) {
                    rest.add_term(shift.mul(tm), &neg_q * tc);
                }
                out.add_term(m, r);
            }
        }
    }
    out
}

struct Completion {
    vars: Arc<VarSet>,
    /// Every element ever inserted, indexed by the ids stored in `pairs`.
    all: Vec<IntPolynomial>,
    active: Vec<bool>,
    /// The active elements.
    basis: Vec<IntPolynomial>,
    pairs: BinaryHeap<Reverse<(u32, usize, usize)>>,
}

impl Completion {
    fn reduce(&self, p: &IntPolynomial) -> IntPolynomial {
        let h = normal_form_in(&self.basis, p);
        match h.leading_term() {
            Some((_, c)) if c.is_negative() => -h,
            _ => h,
        }
    }

    /// Reduce `p` and insert the remainder. Elements whose leading term the
    /// new one divides are retired and their remainders added back.
    fn add(&mut self, p: IntPolynomial) {
        let mut queue = vec![p];
        while let Some(p) = queue.pop() {
            let h = self.reduce(&p);
            if h.is_zero() {
                continue;
            }
            let (hm, hc) = h.leading_term().unwrap();
            let mut retired = false;
            for k in 0..self.all.len() {
                if !self.active[k] {
                    continue;
                }
                let (gm, gc) = self.all[k].leading_term().unwrap();
                if hm.divides(gm) && (gc % hc).is_zero() {
                    self.active[k] = false;
                    queue.push(self.all[k].clone());
                    retired = true;
                }
            }
            self.insert(h);
            if retired {
                self.basis = (0..self.all.len())
                    .filter(|&k| self.active[k])
                    .map(|k| self.all[k].clone())
                    .collect();
            }
        }
    }

    fn insert(&mut self, h: IntPolynomial) {
        let j = self.all.len();
        let w = self.vars.weights();
        let hm = h.leading_term().unwrap().0.clone();
        for i in 0..j {
            if !self.active[i] {
                continue;
            }
            let gm = self.all[i].leading_term().unwrap().0;
            let l = gm.lcm(&hm, &w);
            self.pairs.push(Reverse((l.degree(), i, j)));
        }
        self.basis.push(h.clone());
        self.all.push(h);
        self.active.push(true);
    }

    fn pair_polys(&self, i: usize, j: usize) -> Vec<IntPolynomial> {
        let w = self.vars.weights();
        let f = &self.all[i];
        let g = &self.all[j];
        let (fm, fc) = f.leading_term().unwrap();
        let (gm, gc) = g.leading_term().unwrap();
        let l = fm.lcm(gm, &w);
        let sf = fm.quotient_of(&l);
        let sg = gm.quotient_of(&l);
        let mut out = Vec::new();

        // S-polynomial, skipped when both leading monomials and coefficients
        // are coprime.
        let coprime = fm.is_coprime(gm) && fc.gcd(gc).is_one();
        if !coprime {
            let lc = fc.lcm(gc);
            let mut s = IntPolynomial::zero(&self.vars);
            s.add_scaled_shifted(&(&lc / fc), &sf, f);
            s.add_scaled_shifted(&(-(&lc / gc)), &sg, g);
            out.push(s);
        }

        // G-polynomial, needed only when neither coefficient divides the other.
        if !(gc % fc).is_zero() && !(fc % gc).is_zero() {
            let e = fc.extended_gcd(gc);
            let mut s = IntPolynomial::zero(&self.vars);
            s.add_scaled_shifted(&e.x, &sf, f);
            s.add_scaled_shifted(&e.y, &sg, g);
            if !s.is_zero() && !e.gcd.is_zero() {
                out.push(s);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg() -> Arc<VarSet> {
        VarSet::new([("gamma", 1), ("beta1", 1), ("beta2", 2)]).unwrap()
    }

    fn p(v: &Arc<VarSet>, s: &str) -> IntPolynomial {
        IntPolynomial::parse(v, s).unwrap()
    }

    #[test]
    fn torsion_relations() {
        let v = bg();
        let gb = StrongGroebnerBasis::compute(&v, &[p(&v, "2*gamma"), p(&v, "gamma^2 + beta1*gamma")]);
        assert!(gb.reduces_to_zero(&p(&v, "24*beta1*gamma")));
        assert_eq!(
            gb.normal_form(&p(&v, "gamma^2")),
            gb.normal_form(&p(&v, "beta1*gamma"))
        );
        assert!(!gb.reduces_to_zero(&p(&v, "beta1*gamma")));
        assert_eq!(gb.normal_form(&p(&v, "3*gamma")), p(&v, "gamma"));
    }

    #[test]
    fn zero_ideal() {
        let v = bg();
        let gb = StrongGroebnerBasis::compute(&v, &[]);
        assert!(gb.is_empty());
        let q = p(&v, "beta1^2 - 7*beta2");
        assert_eq!(gb.normal_form(&q), q);
    }

    #[test]
    fn projective_bundle_relation_in_excision_ideal() {
        let v = VarSet::new([("t", 1), ("alpha1", 1), ("alpha2", 2)]).unwrap();
        let gb = StrongGroebnerBasis::compute(
            &v,
            &[p(&v, "2*t - 2*alpha1"), p(&v, "t^2 - alpha1*t")],
        );
        assert!(gb.reduces_to_zero(&p(&v, "(t^2 - 2*alpha1*t + 4*alpha2)*(t - alpha1)")));
        assert!(!gb.reduces_to_zero(&p(&v, "(t^2 + 2*alpha1*t + 4*alpha2)*(t + alpha1)")));
    }

    #[test]
    fn gcd_polynomials_matter() {
        // (3x, 2x) generates (x); only the G-polynomial exposes that.
        let v = VarSet::new([("x", 1)]).unwrap();
        let gb = StrongGroebnerBasis::compute(&v, &[p(&v, "3*x"), p(&v, "2*x")]);
        assert_eq!(gb.elements(), &[p(&v, "x")]);
    }

    #[test]
    fn covered_elements_are_retired() {
        let v = VarSet::new([("x", 1), ("y", 1)]).unwrap();
        let gb = StrongGroebnerBasis::compute(&v, &[p(&v, "4*x^2 + y^2"), p(&v, "2*x")]);
        assert_eq!(gb.elements(), &[p(&v, "2*x"), p(&v, "y^2")]);
    }
}
