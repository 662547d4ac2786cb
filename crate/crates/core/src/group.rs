//! Classifying-space calculus for `G = GL2 x Gm`-type groups: the derivation
//! of the Chow ring of `BG`, transfer along `B(Gm x Gm) -> BG`, Chern classes
//! of the doubled representations `W_n`, and Euler classes of representations
//! given through Chern roots.

use std::fmt;
use std::sync::Arc;

use crate::bundle::{chern_classes_of_roots, srj_table, veronese_pushforward, BundleClasses};
use crate::error::{Error, Result};
use crate::ideal::{compare_ideals, Ideal, IdealComparison, RingSpec};
use crate::ring::series::chern_series_quotient;
use crate::ring::vars::ensure_same;
use crate::ring::{symmetrize_to_elementary, IntPolynomial, Monomial, SymmetricFamilies, SymmetricFamily, VarSet};

pub const ALPHA1: &str = "alpha1";
pub const ALPHA2: &str = "alpha2";
pub const BETA1: &str = "beta1";
pub const BETA2: &str = "beta2";
pub const GAMMA: &str = "gamma";

pub fn bg_vars() -> Arc<VarSet> {
    VarSet::new([(BETA1, 1), (BETA2, 2), (GAMMA, 1)]).expect("fixed names")
}

/// `Z[beta1, beta2, gamma] / (2 gamma, gamma^2 + beta1 gamma)`.
pub fn bg_ring() -> RingSpec {
    bg_ring_named(BETA1, BETA2, GAMMA)
}

fn bg_ring_named(b1: &str, b2: &str, g: &str) -> RingSpec {
    let v = VarSet::new([(b1, 1), (b2, 2), (g, 1)]).expect("distinct names");
    bg_ring_over(&v, b1, g).expect("variables present")
}

/// The two relations `2 gamma`, `gamma^2 + beta1 gamma` over any variable set
/// containing the given names.
pub fn bg_relations(vars: &Arc<VarSet>, b1: &str, g: &str) -> Result<Vec<IntPolynomial>> {
    let gp = IntPolynomial::var(vars, g)?;
    let bp = IntPolynomial::var(vars, b1)?;
    Ok(vec![gp.scale(2), &(&gp * &gp) + &(&bp * &gp)])
}

/// `CH(BG)` over a variable set carrying extra classes.
pub fn bg_ring_over(vars: &Arc<VarSet>, b1: &str, g: &str) -> Result<RingSpec> {
    Ok(RingSpec::new("CH(BG)", Ideal::new(vars, bg_relations(vars, b1, g)?)?))
}

/// The steps of the derivation of `CH(BG)` from `P(V_2) / GL2`.
#[derive(Clone, Debug)]
pub struct BgDerivation {
    pub source_vars: Arc<VarSet>,
    pub s2_table: Vec<IntPolynomial>,
    pub grothendieck: IntPolynomial,
    pub grothendieck_factored: IntPolynomial,
    pub excision: Vec<IntPolynomial>,
    pub grothendieck_in_excision: bool,
    pub presentation: Vec<IntPolynomial>,
    pub comparison: IdealComparison,
    pub ring: RingSpec,
}

impl BgDerivation {
    pub fn holds(&self) -> bool {
        self.grothendieck_in_excision
            && self.grothendieck == self.grothendieck_factored
            && self.comparison.equal()
    }
}

/// Derive the presentation of `CH(BG)` and compare it with
/// `(2 gamma, gamma^2 + beta1 gamma)`.
pub fn bg_presentation() -> Result<BgDerivation> {
    let src = VarSet::new([(ALPHA1, 1), (ALPHA2, 2), ("t", 1)])?;
    let p = |s: &str| IntPolynomial::parse(&src, s);
    let t = p("t")?;
    // V_2 = Sym^2 of the dual of V.
    let dual = BundleClasses::new(p("-alpha1")?, p("alpha2")?)?;
    let table = srj_table(2, &dual, &t)?;

    let roots_ring = RootRing::new(&src, &[vec![p(ALPHA1)?, p(ALPHA2)?]])?;
    let r = roots_ring.roots(0);
    let sym2_roots = [-&r[0].scale(2), -&r[1].scale(2), -(&r[0] + &r[1])];
    let t_up = roots_ring.lift(&t)?;
    let mut groth_roots = IntPolynomial::one(&roots_ring.vars);
    for root in &sym2_roots {
        groth_roots = &groth_roots * &(&t_up + root);
    }
    let grothendieck = roots_ring.descend(&groth_roots)?;
    let grothendieck_factored = &p("t^2 - 2*alpha1*t + 4*alpha2")? * &p("t - alpha1")?;

    let mut excision = Vec::new();
    for j in 0..2 {
        excision.push(veronese_pushforward(2, j, &dual)?.to_polynomial(&table)?);
    }
    let exc_ideal = Ideal::new(&src, excision.clone())?;
    let grothendieck_in_excision = exc_ideal.contains(&grothendieck);

    let target = bg_vars();
    let q = |s: &str| IntPolynomial::parse(&target, s);
    let images = [q(BETA1)?, q(BETA2)?, q("gamma + beta1")?];
    let presentation = std::iter::once(&grothendieck)
        .chain(&excision)
        .map(|g| g.map_into(&target, &images))
        .collect::<Result<Vec<_>>>()?;
    let derived = Ideal::new(&target, presentation.clone())?;
    let ring = bg_ring();
    let comparison = compare_ideals(&derived, &ring.relations)?;
    Ok(BgDerivation {
        source_vars: src,
        s2_table: table.entries,
        grothendieck,
        grothendieck_factored,
        excision,
        grothendieck_in_excision,
        presentation,
        comparison,
        ring,
    })
}

/// Transfer along `B(Gm x Gm) -> BG` with optional passive variables that are
/// carried along unchanged on both sides.
#[derive(Clone, Debug)]
pub struct TorusTransfer {
    torus: Arc<VarSet>,
    base: RingSpec,
    t1: usize,
    t2: usize,
    b1: usize,
    b2: usize,
    g: usize,
    passive: Vec<(usize, usize)>,
}

impl TorusTransfer {
    pub fn new(passive: &[(&str, u32)]) -> Result<Self> {
        TorusTransfer::with_names(passive, [BETA1, BETA2, GAMMA])
    }

    /// As [`TorusTransfer::new`], with the base classes `beta1, beta2, gamma`
    /// renamed (e.g. to Hodge classes).
    pub fn with_names(passive: &[(&str, u32)], names: [&str; 3]) -> Result<Self> {
        let mut tv: Vec<(String, u32)> = passive.iter().map(|&(n, d)| (n.to_string(), d)).collect();
        let mut bv = tv.clone();
        tv.push(("t1".into(), 1));
        tv.push(("t2".into(), 1));
        bv.push((names[0].into(), 1));
        bv.push((names[1].into(), 2));
        bv.push((names[2].into(), 1));
        let torus = VarSet::new(tv)?;
        let base_vars = VarSet::new(bv)?;
        let base = bg_ring_over(&base_vars, names[0], names[2])?;
        let n = passive.len();
        Ok(TorusTransfer {
            torus,
            base,
            t1: n,
            t2: n + 1,
            b1: n,
            b2: n + 1,
            g: n + 2,
            passive: (0..n).map(|i| (i, i)).collect(),
        })
    }

    pub fn torus_vars(&self) -> &Arc<VarSet> {
        &self.torus
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn base_vars(&self) -> &Arc<VarSet> {
        self.base.vars()
    }

    /// `beta1 -> t1 + t2`, `beta2 -> t1 t2`, `gamma -> 0`.
    pub fn pullback(&self, p: &IntPolynomial) -> Result<IntPolynomial> {
        ensure_same(p.vars(), self.base.vars())?;
        let t1 = IntPolynomial::var_at(&self.torus, self.t1);
        let t2 = IntPolynomial::var_at(&self.torus, self.t2);
        let mut images = vec![IntPolynomial::zero(&self.torus); self.base.vars().len()];
        for &(ti, bi) in &self.passive {
            images[bi] = IntPolynomial::var_at(&self.torus, ti);
        }
        images[self.b1] = &t1 + &t2;
        images[self.b2] = &t1 * &t2;
        images[self.g] = IntPolynomial::zero(&self.torus);
        p.map_into(&self.torus, &images)
    }

    fn push_t1_powers(&self, k: u32) -> Vec<IntPolynomial> {
        let v = self.base.vars();
        let b1 = IntPolynomial::var_at(v, self.b1);
        let b2 = IntPolynomial::var_at(v, self.b2);
        let mut out = vec![IntPolynomial::constant(v, 2)];
        if k >= 1 {
            out.push(&b1 + &IntPolynomial::var_at(v, self.g));
        }
        for a in 2..=k as usize {
            let next = &(&b1 * &out[a - 1]) - &(&b2 * &out[a - 2]);
            out.push(self.base.normal_form(&next));
        }
        out
    }

    /// Pushforward to the base, returned as a normal form modulo the `BG`
    /// relations.
    pub fn pushforward(&self, p: &IntPolynomial) -> Result<IntPolynomial> {
        ensure_same(p.vars(), &self.torus)?;
        let v = self.base.vars().clone();
        let w = v.weights();
        let top = p
            .terms()
            .map(|(m, _)| m.exponent(self.t1).abs_diff(m.exponent(self.t2)))
            .max()
            .unwrap_or(0);
        let push = self.push_t1_powers(top);
        let mut out = IntPolynomial::zero(&v);
        for (m, c) in p.terms() {
            let (a, b) = (m.exponent(self.t1), m.exponent(self.t2));
            let mut e = vec![0u32; v.len()];
            for &(ti, bi) in &self.passive {
                e[bi] = m.exponent(ti);
            }
            e[self.b2] = a.min(b);
            let mono = Monomial::from_exponents(e, &w);
            out = &out + &push[a.abs_diff(b) as usize].shift(&mono).scale(c.clone());
        }
        Ok(self.base.normal_form(&out))
    }
}

/// [`TorusTransfer::pullback`] without passive variables.
pub fn bt_pullback(p: &IntPolynomial) -> Result<IntPolynomial> {
    TorusTransfer::new(&[])?.pullback(p)
}

/// [`TorusTransfer::pushforward`] without passive variables.
pub fn bt_pushforward(p: &IntPolynomial) -> Result<IntPolynomial> {
    TorusTransfer::new(&[])?.pushforward(p)
}

/// Chern classes of `W_n` over the `BG` ring, reduced: `c1 = n beta1 + (n+1)
/// gamma`, `c2 = n^2 beta2`, and the dual of `W_{|n|}` for negative `n`.
pub fn wn_chern(n: i64) -> BundleClasses {
    wn_chern_in(&bg_ring(), n).expect("BG variables present")
}

/// [`wn_chern`] over any ring containing `beta1, beta2, gamma` and the `BG`
/// relations.
pub fn wn_chern_in(ring: &RingSpec, n: i64) -> Result<BundleClasses> {
    let v = ring.vars();
    let b1 = IntPolynomial::var(v, BETA1)?;
    let b2 = IntPolynomial::var(v, BETA2)?;
    let g = IntPolynomial::var(v, GAMMA)?;
    let m = n.unsigned_abs() as i64;
    let cls = BundleClasses {
        c1: &b1.scale(m) + &g.scale(m + 1),
        c2: b2.scale(m * m),
    };
    let cls = if n < 0 { cls.dual() } else { cls };
    Ok(BundleClasses {
        c1: ring.normal_form(&cls.c1),
        c2: ring.normal_form(&cls.c2),
    })
}

/// Chern classes `c_1, ..., c_{mn}` of a tensor product of bundles of ranks
/// `m` and `n`, given their Chern classes.
pub fn tensor_chern(e: &[IntPolynomial], f: &[IntPolynomial]) -> Result<Vec<IntPolynomial>> {
    let base = e
        .first()
        .or(f.first())
        .ok_or_else(|| Error::Unsupported("tensor product of rank-0 bundles".into()))?
        .vars()
        .clone();
    let rr = RootRing::new(&base, &[e.to_vec(), f.to_vec()])?;
    let mut roots = Vec::new();
    for x in rr.roots(0) {
        for y in rr.roots(1) {
            roots.push(&x + &y);
        }
    }
    chern_classes_of_roots(&roots)?
        .iter()
        .map(|c| rr.descend(c))
        .collect()
}

/// Chern classes of `W_n` for `n >= 2` extracted from
/// `W_{n-1} (x) W_1 = W_n + W_{n-2} (x) L`, `c1(L) = beta1 + gamma`, starting
/// from `W_0` and `W_1`, each step reduced modulo the `BG` relations.
pub fn wn_chern_by_recursion(n_max: u32) -> Result<Vec<BundleClasses>> {
    let ring = bg_ring();
    let v = ring.vars().clone();
    let p = |s: &str| IntPolynomial::parse(&v, s);
    let mut out = vec![
        BundleClasses::new(p("gamma")?, p("0")?)?,
        BundleClasses::new(p("beta1")?, p("beta2")?)?,
    ];
    let w1 = [out[1].c1.clone(), out[1].c2.clone()];
    let l = [p("beta1 + gamma")?];
    for n in 2..=n_max as usize {
        let prev = &out[n - 1];
        let lhs = tensor_chern(&[prev.c1.clone(), prev.c2.clone()], &w1)?;
        let pp = &out[n - 2];
        let twisted = tensor_chern(&[pp.c1.clone(), pp.c2.clone()], &l)?;
        let mut num = vec![IntPolynomial::one(&v)];
        num.extend(lhs);
        let mut den = vec![IntPolynomial::one(&v)];
        den.extend(twisted);
        let c1 = chern_series_quotient(&num, &den, 1)?;
        let c2 = chern_series_quotient(&num, &den, 2)?;
        out.push(BundleClasses {
            c1: ring.normal_form(&c1),
            c2: ring.normal_form(&c2),
        });
    }
    Ok(out)
}

/// Representations of `GL2 x G x Gm^k`, closed under the constructions used
/// for Chern root computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepSpec {
    /// A character of a torus, weights on named degree-1 classes.
    TorusCharacter(Vec<(String, i64)>),
    /// `V_n(m) = Sym^n V^* (x) det^m`.
    SymPower { n: u32, twist: i64 },
    /// `W_{a_1} + ... + W_{a_k}`.
    Doubled(Vec<i64>),
    /// External tensor product.
    External(Box<RepSpec>, Box<RepSpec>),
    /// Direct sum.
    Sum(Vec<RepSpec>),
}

impl RepSpec {
    pub fn sym_power(n: u32, twist: i64) -> Self {
        RepSpec::SymPower { n, twist }
    }

    pub fn doubled(weights: &[i64]) -> Self {
        RepSpec::Doubled(weights.to_vec())
    }

    pub fn character(weights: &[(&str, i64)]) -> Self {
        RepSpec::TorusCharacter(weights.iter().map(|&(s, w)| (s.to_string(), w)).collect())
    }

    pub fn external(a: RepSpec, b: RepSpec) -> Self {
        RepSpec::External(Box::new(a), Box::new(b))
    }

    fn uses_v(&self) -> bool {
        match self {
            RepSpec::SymPower { .. } => true,
            RepSpec::TorusCharacter(_) | RepSpec::Doubled(_) => false,
            RepSpec::External(a, b) => a.uses_v() || b.uses_v(),
            RepSpec::Sum(xs) => xs.iter().any(RepSpec::uses_v),
        }
    }

    fn doubled_weights(&self, out: &mut Vec<i64>) {
        match self {
            RepSpec::Doubled(ws) => out.extend(ws),
            RepSpec::External(a, b) => {
                a.doubled_weights(out);
                b.doubled_weights(out);
            }
            RepSpec::Sum(xs) => xs.iter().for_each(|x| x.doubled_weights(out)),
            _ => {}
        }
    }

    fn roots(&self, rr: &RootRing, v_family: Option<usize>, next_w: &mut usize) -> Result<Vec<IntPolynomial>> {
        match self {
            RepSpec::TorusCharacter(ws) => {
                let mut r = IntPolynomial::zero(&rr.vars);
                for (name, w) in ws {
                    let x = IntPolynomial::var(&rr.vars, name)?;
                    if rr.vars.degree(rr.vars.require(name)?) != 1 {
                        return Err(Error::DegreeViolation {
                            var: name.clone(),
                            expected: 1,
                            found: x.to_string(),
                        });
                    }
                    r = &r + &x.scale(*w);
                }
                Ok(vec![r])
            }
            RepSpec::SymPower { n, twist } => {
                let a = rr.roots(v_family.expect("V family allocated"));
                let det = &a[0] + &a[1];
                Ok((0..=*n)
                    .map(|i| {
                        &(&a[0].scale(-((n - i) as i64)) - &a[1].scale(i as i64)) + &det.scale(*twist)
                    })
                    .collect())
            }
            RepSpec::Doubled(ws) => {
                let mut out = Vec::new();
                for &w in ws {
                    let b = rr.roots(*next_w);
                    *next_w += 1;
                    let sign = if w < 0 { -1 } else { 1 };
                    out.extend(b.iter().map(|x| x.scale(sign)));
                }
                Ok(out)
            }
            RepSpec::External(a, b) => {
                let ra = a.roots(rr, v_family, next_w)?;
                let rb = b.roots(rr, v_family, next_w)?;
                let mut out = Vec::new();
                for x in &ra {
                    for y in &rb {
                        out.push(x + y);
                    }
                }
                Ok(out)
            }
            RepSpec::Sum(xs) => {
                let mut out = Vec::new();
                for x in xs {
                    out.extend(x.roots(rr, v_family, next_w)?);
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::TorusCharacter(ws) => {
                write!(f, "L(")?;
                for (i, (n, w)) in ws.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{n}:{w}")?;
                }
                write!(f, ")")
            }
            RepSpec::SymPower { n, twist } => write!(f, "V_{n}({twist})"),
            RepSpec::Doubled(ws) => {
                let s: Vec<String> = ws.iter().map(i64::to_string).collect();
                write!(f, "W_{{{}}}", s.join(","))
            }
            RepSpec::External(a, b) => write!(f, "({a}) [x] ({b})"),
            RepSpec::Sum(xs) => {
                let s: Vec<String> = xs.iter().map(ToString::to_string).collect();
                write!(f, "{}", s.join(" + "))
            }
        }
    }
}

fn rep_root_setup(rep: &RepSpec, ambient: &RingSpec) -> Result<(RootRing, Option<usize>)> {
    let v = ambient.vars();
    let mut fams = Vec::new();
    let mut v_family = None;
    if rep.uses_v() {
        fams.push(vec![IntPolynomial::var(v, ALPHA1)?, IntPolynomial::var(v, ALPHA2)?]);
        v_family = Some(0);
    }
    let mut ws = Vec::new();
    rep.doubled_weights(&mut ws);
    for w in ws {
        let c = wn_chern_in(ambient, w.abs())?;
        fams.push(vec![c.c1, c.c2]);
    }
    Ok((RootRing::new(v, &fams)?, v_family))
}

/// Total Chern class `c_1, ..., c_r` of a representation, reduced in `ambient`.
pub fn rep_chern_classes(rep: &RepSpec, ambient: &RingSpec) -> Result<Vec<IntPolynomial>> {
    let (rr, vf) = rep_root_setup(rep, ambient)?;
    let mut next = vf.map_or(0, |_| 1);
    let roots = rep.roots(&rr, vf, &mut next)?;
    chern_classes_of_roots(&roots)?
        .iter()
        .map(|c| Ok(ambient.normal_form(&rr.descend(c)?)))
        .collect()
}

/// Euler (top Chern) class of a representation, reduced in `ambient`.
pub fn rep_euler_class(rep: &RepSpec, ambient: &RingSpec) -> Result<IntPolynomial> {
    let (rr, vf) = rep_root_setup(rep, ambient)?;
    let mut next = vf.map_or(0, |_| 1);
    let roots = rep.roots(&rr, vf, &mut next)?;
    let mut e = IntPolynomial::one(&rr.vars);
    for r in &roots {
        e = &e * r;
    }
    Ok(ambient.normal_form(&rr.descend(&e)?))
}

/// A base ring extended by formal Chern roots for several bundles whose Chern
/// classes are known in the base.
#[derive(Clone, Debug)]
pub struct RootRing {
    pub vars: Arc<VarSet>,
    base: Arc<VarSet>,
    chern: Vec<Vec<IntPolynomial>>,
    root_names: Vec<Vec<String>>,
}

impl RootRing {
    pub fn new(base: &Arc<VarSet>, chern: &[Vec<IntPolynomial>]) -> Result<Self> {
        let mut extra = Vec::new();
        let mut root_names = Vec::new();
        for (f, cs) in chern.iter().enumerate() {
            let mut names = Vec::new();
            for (k, c) in cs.iter().enumerate() {
                ensure_same(base, c.vars())?;
                if !c.is_zero() && c.homogeneous_degree() != Some(k as u32 + 1) {
                    return Err(Error::DegreeViolation {
                        var: format!("c{}", k + 1),
                        expected: k as u32 + 1,
                        found: c.to_string(),
                    });
                }
                let name = format!("__r{f}_{k}");
                extra.push((name.clone(), 1));
                names.push(name);
            }
            root_names.push(names);
        }
        Ok(RootRing {
            vars: base.extended(extra)?,
            base: base.clone(),
            chern: chern.to_vec(),
            root_names,
        })
    }

    pub fn roots(&self, family: usize) -> Vec<IntPolynomial> {
        self.root_names[family]
            .iter()
            .map(|n| IntPolynomial::var(&self.vars, n).expect("declared root"))
            .collect()
    }

    pub fn lift(&self, p: &IntPolynomial) -> Result<IntPolynomial> {
        p.embed(&self.vars)
    }

    /// Rewrite a polynomial symmetric in each family through the families'
    /// Chern classes, landing in the base.
    pub fn descend(&self, p: &IntPolynomial) -> Result<IntPolynomial> {
        ensure_same(p.vars(), &self.vars)?;
        let mut fams = Vec::new();
        let mut extra = Vec::new();
        for (f, names) in self.root_names.iter().enumerate() {
            let targets: Vec<String> = (0..names.len()).map(|k| format!("__c{f}_{k}")).collect();
            for (k, t) in targets.iter().enumerate() {
                extra.push((t.clone(), k as u32 + 1));
            }
            fams.push(SymmetricFamily::new(names.clone(), targets));
        }
        let target = self.base.extended(extra)?;
        let q = symmetrize_to_elementary(p, &SymmetricFamilies::new(fams), &target)?;
        let mut images: Vec<IntPolynomial> = (0..self.base.len())
            .map(|i| IntPolynomial::var_at(&self.base, i))
            .collect();
        for cs in &self.chern {
            images.extend(cs.iter().cloned());
        }
        q.map_into(&self.base, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bg_derivation_matches() {
        let d = bg_presentation().unwrap();
        let p = |s: &str| IntPolynomial::parse(&d.source_vars, s).unwrap();
        assert_eq!(d.excision, vec![p("2*t - 2*alpha1"), p("t^2 - alpha1*t")]);
        assert_eq!(d.s2_table[2], p("t^2 - alpha1*t + 2*alpha2"));
        assert!(d.holds(), "{:?}", d.comparison);
    }

    #[test]
    fn transfer_examples() {
        let bt = TorusTransfer::new(&[]).unwrap();
        let b = bt.base_vars().clone();
        let t = bt.torus_vars().clone();
        let pb = |s: &str| IntPolynomial::parse(&b, s).unwrap();
        let pt = |s: &str| IntPolynomial::parse(&t, s).unwrap();
        assert_eq!(bt.pullback(&pb("beta2")).unwrap(), pt("t1*t2"));
        assert!(bt.pullback(&pb("gamma")).unwrap().is_zero());
        assert_eq!(bt.pullback(&pb("beta1^2 - 2*beta2")).unwrap(), pt("t1^2 + t2^2"));
        assert_eq!(bt.pushforward(&pt("t1")).unwrap(), pb("beta1 + gamma"));
        assert_eq!(bt.pushforward(&pt("24*t2^2")).unwrap(), pb("24*beta1^2 - 48*beta2"));
        assert_eq!(
            bt.pushforward(&pt("t1*t2^2")).unwrap(),
            bt.base().normal_form(&pb("beta2*(beta1 + gamma)"))
        );
        assert_eq!(bt.pushforward(&pt("1")).unwrap(), pb("2"));
    }

    #[test]
    fn wn_closed_forms() {
        let v = bg_vars();
        let p = |s: &str| IntPolynomial::parse(&v, s).unwrap();
        let w0 = wn_chern(0);
        assert_eq!((w0.c1, w0.c2), (p("gamma"), p("0")));
        let w6 = wn_chern(6);
        assert_eq!((w6.c1, w6.c2), (p("6*beta1 + gamma"), p("36*beta2")));
        let wm2 = wn_chern(-2);
        assert_eq!((wm2.c1, wm2.c2), (p("gamma - 2*beta1"), p("4*beta2")));
    }

    #[test]
    fn wn_recursion_agrees() {
        let rec = wn_chern_by_recursion(8).unwrap();
        for (n, c) in rec.iter().enumerate() {
            assert_eq!(*c, wn_chern(n as i64), "n = {n}");
        }
    }

    #[test]
    fn euler_classes() {
        let v = VarSet::new([(ALPHA1, 1), (ALPHA2, 2), (BETA1, 1), (BETA2, 2), (GAMMA, 1)]).unwrap();
        let ring = bg_ring_over(&v, BETA1, GAMMA).unwrap();
        let p = |s: &str| ring.normal_form(&IntPolynomial::parse(&v, s).unwrap());
        assert_eq!(
            rep_euler_class(&RepSpec::sym_power(3, 1), &ring).unwrap(),
            p("9*alpha2^2 - 2*alpha1^2*alpha2")
        );
        assert_eq!(
            rep_euler_class(&RepSpec::doubled(&[4, 6]), &ring).unwrap(),
            p("576*beta2^2")
        );
        let e = rep_euler_class(
            &RepSpec::external(RepSpec::sym_power(1, -1), RepSpec::doubled(&[-2])),
            &ring,
        )
        .unwrap();
        assert_eq!(
            e,
            p("4*alpha1^4 + 12*alpha1^3*beta1 + 8*alpha1^2*beta1^2 + 4*alpha1^2*alpha2 \
               + 6*alpha1*alpha2*beta1 + 4*alpha2*beta1^2 + 20*alpha1^2*beta2 \
               + 24*alpha1*beta1*beta2 + alpha1*alpha2*gamma + alpha2*beta1*gamma \
               + alpha2^2 - 8*alpha2*beta2 + 16*beta2^2")
        );
    }

    #[test]
    fn torus_characters() {
        let v = VarSet::new([("t1", 1), ("t2", 1)]).unwrap();
        let ring = RingSpec::polynomial_ring("BT", &v);
        let rep = RepSpec::Sum(vec![
            RepSpec::character(&[("t2", 4)]),
            RepSpec::character(&[("t2", 6)]),
        ]);
        let cs = rep_chern_classes(&rep, &ring).unwrap();
        assert_eq!(cs[1], IntPolynomial::parse(&v, "24*t2^2").unwrap());
    }
}
