use std::sync::Arc;

use super::boundary::main_ring;
use super::record::{ring, Recorder};
use super::{Ctx, RingKey};
use crate::bundle::{
    diagonal_class, mult_pushforward, mult_pushforward_chain, segre_pushforward, srj_table,
    subbundle_class, veronese_pushforward, BundleClasses, SExpansion, SegreClass,
};
use crate::error::{Error, Result};
use crate::group::{
    bg_ring_over, rep_chern_classes, rep_euler_class, tensor_chern, wn_chern_in, RepSpec,
    TorusTransfer, BETA1, GAMMA,
};
use crate::ideal::{Ideal, RingSpec};
use crate::ring::{IntPolynomial, VarSet};

fn base_ring() -> Result<RingSpec> {
    bg_ring_over(&RingKey::Biell.vars(), BETA1, GAMMA)
}

fn transfer() -> Result<TorusTransfer> {
    TorusTransfer::new(&[("alpha1", 1), ("alpha2", 2)])
}

/// Base classes together with the hyperplane classes used on the products of
/// projectivizations.
fn work_vars() -> Result<Arc<VarSet>> {
    RingKey::Biell
        .vars()
        .extended(["h", "x", "x1", "x2", "x3", "x4", "w", "t1", "t2"].map(|n| (n, 1)))
}

struct Work {
    vars: Arc<VarSet>,
    ring: RingSpec,
    /// `V_1 = V^*`.
    v1: BundleClasses,
    /// `s_3^j` with the hyperplane class of `P V_3` replaced by `alpha1`.
    s3: Vec<IntPolynomial>,
}

impl Work {
    fn new() -> Result<Self> {
        let vars = work_vars()?;
        let ring = bg_ring_over(&vars, BETA1, GAMMA)?;
        let v1 = BundleClasses::parse(&vars, "-alpha1", "alpha2")?;
        let h = IntPolynomial::var(&vars, "h")?;
        let a1 = IntPolynomial::var(&vars, "alpha1")?;
        let table = srj_table(3, &v1, &h)?;
        let s3 = table
            .entries
            .iter()
            .map(|e| e.substitute(&[("h", a1.clone())]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Work { vars, ring, v1, s3 })
    }

    fn var(&self, n: &str) -> IntPolynomial {
        IntPolynomial::var(&self.vars, n).expect("work variable")
    }

    fn eval(&self, x: &SExpansion) -> IntPolynomial {
        let mut out = IntPolynomial::zero(&self.vars);
        for (j, c) in x.coeffs.iter().enumerate() {
            out = &out + &(c * &self.s3[j]);
        }
        out
    }
}

/// Split `p` by the exponents of the listed variables, each at most one.
fn split_linear(p: &IntPolynomial, names: &[&str]) -> Result<Vec<(Vec<u32>, IntPolynomial)>> {
    let v = p.vars().clone();
    let idx = names.iter().map(|n| v.require(n)).collect::<Result<Vec<_>>>()?;
    let mut out: Vec<(Vec<u32>, IntPolynomial)> = Vec::new();
    for (m, c) in p.terms() {
        let key: Vec<u32> = idx.iter().map(|&i| m.exponent(i)).collect();
        if key.iter().any(|&e| e > 1) {
            return Err(Error::Unsupported(format!("{p} is not linear in {names:?}")));
        }
        let mut e = m.exponents().to_vec();
        for &i in &idx {
            e[i] = 0;
        }
        let rest = IntPolynomial::monomial(
            &v,
            crate::ring::Monomial::from_exponents(e, &v.weights()),
            c.clone(),
        );
        match out.iter_mut().find(|(k, _)| *k == key) {
            Some((_, acc)) => *acc = &*acc + &rest,
            None => out.push((key, rest)),
        }
    }
    Ok(out)
}

pub(super) fn euler(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let base = base_ring()?;
    let stated = ctx.claims.polys("biell.euler")?;
    let e1 = rep_euler_class(&RepSpec::sym_power(3, 1), &base)?;
    let rep = RepSpec::external(RepSpec::sym_power(1, -1), RepSpec::doubled(&[-2]));
    let e2 = rep_euler_class(&rep, &base)?;
    rec.equal_in("e(V_3(1))", &base, &e1, &stated[0])?;
    rec.equal_in(&format!("e({rep})"), &base, &e2, &stated[1])?;
    Ok(())
}

pub(super) fn relzero(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let base = base_ring()?;
    let tr = transfer()?;
    let torus = RingSpec::polynomial_ring("CH(BT x BGL2)", tr.torus_vars());
    let quotient = RepSpec::external(RepSpec::sym_power(1, -1), RepSpec::character(&[("t2", -2)]));
    let cs = rep_chern_classes(&quotient, &torus)?;
    let class = subbundle_class(&cs, &IntPolynomial::zero(tr.torus_vars()))?;
    rec.equal(&format!("class with quotient {quotient}"), &class, &ctx.claims.poly("biell.subbundle", 0)?);
    let t1 = IntPolynomial::var(tr.torus_vars(), "t1")?;
    let stated = ctx.claims.polys("biell.relzero")?;
    let e1 = rep_euler_class(&RepSpec::sym_power(3, 1), &base)?;
    let e2 = rep_euler_class(
        &RepSpec::external(RepSpec::sym_power(1, -1), RepSpec::doubled(&[-2])),
        &base,
    )?;
    rec.equal_in("relation 1", &base, &e1, &stated[0])?;
    rec.equal_in("relation 2", &base, &tr.pushforward(&class)?, &stated[1])?;
    rec.equal_in("relation 3", &base, &tr.pushforward(&(&class * &t1))?, &stated[2])?;
    rec.equal_in("relation 4", &base, &e2, &stated[3])?;
    Ok(())
}

pub(super) fn reltrip(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let wk = Work::new()?;
    let biell = RingKey::Biell.vars();
    let base = base_ring()?;
    let stated = ctx.claims.polys("biell.reltrip")?;
    for (j, want) in ctx.claims.polys("biell.s3_table")?.iter().enumerate() {
        rec.equal(&format!("s_3^{j} at alpha1"), &wk.s3[j].restrict(&biell)?, want);
    }

    // Perfect cubes.
    for j in 0..2 {
        let got = wk.eval(&veronese_pushforward(3, j, &wk.v1)?).restrict(&biell)?;
        rec.equal(&format!("cube of s_1^{j}"), &got, &stated[j as usize]);
    }

    // A linear form whose square divides the cubic.
    let xs = [wk.var("x2"), wk.var("x3"), wk.var("x4")];
    let diag = diagonal_class(3, &wk.v1, &xs)?;
    let mut pushed = SExpansion::zero(&wk.vars, 3);
    for (e, rest) in split_linear(&diag, &["x2", "x3"])? {
        let (c, (k, _)) = mult_pushforward_chain(&[(1, 0), (1, e[0]), (1, e[1])])?;
        pushed.coeffs[k as usize] = &pushed.coeffs[k as usize] + &rest.scale(c);
    }
    rec.note(format!("pushforward of the triple diagonal: {pushed}"));
    let x = &(-&wk.var("alpha1")) - &wk.var("t2").scale(2);
    let square = wk.eval(&pushed).substitute(&[("x4", x)])?.restrict(&tr_vars()?)?;
    rec.equal("class of the square locus", &square, &ctx.claims.poly("biell.square_class", 0)?);
    let tr = transfer()?;
    let t1 = IntPolynomial::var(tr.torus_vars(), "t1")?;
    rec.equal_in("relation 3", &base, &tr.pushforward(&square)?, &stated[2])?;
    rec.equal_in("relation 4", &base, &tr.pushforward(&(&square * &t1))?, &stated[3])?;

    // A common linear factor of all three forms.
    let w2 = wn_chern_in(&wk.ring, -2)?;
    let diag2 = diagonal_class(2, &wk.v1, &[wk.var("x1"), wk.var("x2")])?;
    let xh = wk.var("x");
    for (k, class) in [diag2.clone(), &diag2 * &wk.var("w")].iter().enumerate() {
        let mut total = IntPolynomial::zero(&wk.vars);
        for (e, rest) in split_linear(class, &["x1", "x2", "w"])? {
            let (c, (j, _)) = mult_pushforward(2, 0, 1, e[0])?;
            let seg = match (e[1], e[2]) {
                (0, 0) => SegreClass::One,
                (1, 0) => SegreClass::X1,
                (0, 1) => SegreClass::X2,
                _ => SegreClass::X1X2,
            };
            let s = segre_pushforward(seg, &wk.v1, &w2, &xh)?;
            total = &total + &(&(&rest.scale(c) * &wk.s3[j as usize]) * &s);
        }
        let got = total.substitute(&[("x", -&wk.var("alpha1"))])?.restrict(&biell)?;
        rec.equal_in(&format!("relation {}", 5 + k), &base, &got, &stated[4 + k])?;
    }
    Ok(())
}

fn tr_vars() -> Result<Arc<VarSet>> {
    Ok(transfer()?.torus_vars().clone())
}

fn biell_ideal(ctx: &Ctx) -> Result<Ideal> {
    let v = RingKey::Biell.vars();
    let mut gens = base_ring()?.relations.generators().to_vec();
    gens.extend(ctx.claims.polys("biell.relzero")?);
    gens.extend(ctx.claims.polys("biell.reltrip")?);
    Ideal::new(&v, gens)
}

pub(super) fn ring_check(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let base = base_ring()?;
    let bv = RingKey::Biell.vars();
    let fv = RingKey::BiellFinal.vars();
    let taut = ctx.claims.polys("biell.tautological")?;
    let bp = |s: &str| IntPolynomial::parse(&bv, s);

    let hodge = tensor_chern(&[bp("-beta1")?, bp("beta2")?], &[bp("-alpha1")?])?;
    rec.equal_in("lambda1", &base, &hodge[0], &taut[0])?;
    rec.equal_in("lambda2", &base, &hodge[1], &taut[1])?;
    let v1m = rep_chern_classes(&RepSpec::sym_power(1, -1), &base)?;
    let e1 = BundleClasses::new(v1m[0].clone(), v1m[1].clone())?;
    let w2 = wn_chern_in(&base, -2)?;
    let d1 = segre_pushforward(SegreClass::One, &e1, &w2, &IntPolynomial::zero(&bv))?;
    rec.equal_in("delta1", &base, &d1, &taut[2])?;

    // The substitution and the tautological classes are inverse changes of
    // variables.
    let sub = ctx.claims.polys("biell.substitution")?;
    let f5 = fv.extended([("alpha2", 2)])?;
    let fp = |s: &str| IntPolynomial::parse(&f5, s);
    let forward = [
        sub[0].embed(&f5)?,
        fp("alpha2")?,
        sub[1].embed(&f5)?,
        sub[2].embed(&f5)?,
        fp("gamma")?,
    ];
    let backward = [bp("gamma")?, taut[2].clone(), taut[0].clone(), taut[1].clone()];
    let mut round = true;
    for (i, img) in backward.iter().enumerate() {
        round &= img.map_into(&f5, &forward)? == IntPolynomial::var_at(&fv, i).embed(&f5)?;
    }
    let mut back5 = backward.to_vec();
    back5.push(bp("alpha2")?);
    for (i, img) in forward.iter().enumerate() {
        round &= img.map_into(&bv, &back5)? == IntPolynomial::var_at(&bv, i);
    }
    rec.require("change of variables", round, "the substitution inverts the tautological classes");

    let ib = biell_ideal(ctx)?;
    let moved = ib
        .generators()
        .iter()
        .map(|g| g.map_into(&f5, &forward))
        .collect::<Result<Vec<_>>>()?;
    let j5 = ring("bielliptic relations in gamma, delta1, lambda, alpha2", Ideal::new(&f5, moved.clone())?);
    let elim = &fp("alpha2")? - &sub[3].embed(&f5)?;
    rec.member("alpha2 is eliminated", &j5, &elim)?;

    let mut images: Vec<IntPolynomial> = (0..fv.len()).map(|i| IntPolynomial::var_at(&fv, i)).collect();
    images.push(sub[3].clone());
    let finals = moved
        .iter()
        .map(|g| g.map_into(&fv, &images))
        .collect::<Result<Vec<_>>>()?;
    let derived = ring("derived CH(B)", Ideal::new(&fv, finals)?);
    let stated = ring("CH(B)", Ideal::new(&fv, ctx.claims.polys("biell.ring")?)?);
    rec.same_ideal("presentation", &derived, &stated)?;
    Ok(())
}

pub(super) fn mod2(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let fv = RingKey::BiellFinal.vars();
    let stated = ring("CH(B)", Ideal::new(&fv, ctx.claims.polys("biell.ring")?)?);
    let reduced = stated.modulo(2)?;
    let two = IntPolynomial::constant(&fv, 2);
    let target = ring(
        "stated CH(B) mod 2",
        Ideal::new(&fv, ctx.claims.polys("biell.mod2")?)?.with_generators([two])?,
    );
    rec.same_ideal("reduction mod 2", &reduced, &target)?;

    let main = main_ring(ctx)?;
    for g in main.relations.generators() {
        rec.member(&format!("restriction of {g}"), &stated, &g.embed(&fv)?)?;
    }
    let classes = ctx.claims.polys("biell.nonvanishing")?;
    let targets = ctx.claims.polys("kernel3.targets")?;
    let main2 = main.modulo(2)?;
    for (c, t) in classes.iter().zip(&targets) {
        rec.equal("same class on M2bar", &t.embed(&fv)?, c);
        rec.non_member("nonzero on B mod 2", &reduced, c)?;
        rec.non_member("nonzero on M2bar mod 2", &main2, t)?;
    }
    Ok(())
}
