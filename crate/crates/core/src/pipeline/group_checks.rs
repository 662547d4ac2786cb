use num_bigint::BigInt;

use super::record::{ring, Recorder};
use super::{Ctx, RingKey};
use crate::error::Result;
use crate::group::{bg_presentation, bg_ring, wn_chern, wn_chern_by_recursion, TorusTransfer};
use crate::ideal::Ideal;
use crate::ring::monomial::monomials_of_degree;
use crate::ring::IntPolynomial;

pub(super) fn bg(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let d = bg_presentation()?;
    let c = &ctx.claims;
    for (j, (got, want)) in d.s2_table.iter().zip(c.polys("bg.s2_table")?).enumerate() {
        rec.equal(&format!("s_2^{j}"), got, &want);
    }
    for (k, (got, want)) in d.excision.iter().zip(c.polys("bg.excision")?).enumerate() {
        rec.equal(&format!("Veronese image of s_1^{k}"), got, &want);
    }
    rec.equal("Grothendieck relation", &d.grothendieck, &c.poly("bg.grothendieck", 0)?);
    let excision = ring("P(V_2) - image of P(V_1)", Ideal::new(&d.source_vars, d.excision.clone())?);
    rec.member("Grothendieck relation is redundant", &excision, &d.grothendieck)?;
    for g in &d.presentation {
        rec.note(format!("presentation after t -> gamma + beta1: {g}"));
    }
    let derived = ring("derived CH(BG)", Ideal::new(&RingKey::Bg.vars(), d.presentation.clone())?);
    let stated = ring("CH(BG)", Ideal::new(&RingKey::Bg.vars(), c.polys("bg.ring")?)?);
    rec.same_ideal("presentation", &derived, &stated)?;
    Ok(())
}

pub(super) fn pushbg(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let tr = TorusTransfer::new(&[])?;
    let base = tr.base().clone();
    let torus = tr.torus_vars().clone();
    for row in ctx.claims.rows("bg.pushforward")? {
        let input = row[0].restrict(&torus)?;
        let want = row[1].restrict(base.vars())?;
        let got = tr.pushforward(&input)?;
        rec.equal_in(&format!("pushforward of {input}"), &base, &got, &want)?;
    }
    let weights = base.vars().weights();
    let mut doubled = 0;
    for d in 0..=6 {
        for m in monomials_of_degree(&weights, d) {
            let x = IntPolynomial::monomial(base.vars(), m, BigInt::from(1));
            let back = tr.pushforward(&tr.pullback(&x)?)?;
            if !base.is_zero(&(&back - &x.scale(2))) {
                rec.fail(format!("push(pull({x})) = {back}"));
            }
            doubled += 1;
        }
    }
    rec.require("push(pull(x)) = 2x", true, format!("{doubled} monomials through degree 6"));
    let tw = torus.weights();
    let mut projections = 0;
    for da in 0..=2 {
        for a in monomials_of_degree(&weights, da) {
            let a = IntPolynomial::monomial(base.vars(), a, BigInt::from(1));
            for db in 0..=3 {
                for b in monomials_of_degree(&tw, db) {
                    let b = IntPolynomial::monomial(&torus, b, BigInt::from(1));
                    let lhs = tr.pushforward(&(&tr.pullback(&a)? * &b))?;
                    let rhs = &a * &tr.pushforward(&b)?;
                    if !base.is_zero(&(&lhs - &rhs)) {
                        rec.fail(format!("projection formula fails for a = {a}, b = {b}"));
                    }
                    projections += 1;
                }
            }
        }
    }
    rec.require("push(pull(a) b) = a push(b)", true, format!("{projections} pairs"));
    Ok(())
}

pub(super) fn npower(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let bg = bg_ring();
    let rec_classes = wn_chern_by_recursion(8)?;
    for (n, c) in rec_classes.iter().enumerate() {
        let closed = wn_chern(n as i64);
        let ok = bg.normal_form(&c.c1) == bg.normal_form(&closed.c1)
            && bg.normal_form(&c.c2) == bg.normal_form(&closed.c2);
        rec.require(&format!("W_{n}"), ok, format!("c1 = {}, c2 = {}", closed.c1, closed.c2));
    }
    for row in ctx.claims.rows("bg.wn")? {
        let n: i64 = row[0].constant_term().try_into().unwrap_or(i64::MAX);
        let cls = wn_chern(n);
        rec.equal_in(&format!("c1(W_{n})"), &bg, &cls.c1, &row[1])?;
        rec.equal_in(&format!("c2(W_{n})"), &bg, &cls.c2, &row[2])?;
    }
    Ok(())
}
