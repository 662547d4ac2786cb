use super::record::{ring, Recorder};
use super::{Ctx, RingKey};
use crate::bundle::subbundle_class;
use crate::error::{Error, Result};
use crate::group::{bg_ring, rep_chern_classes, rep_euler_class, RepSpec, TorusTransfer};
use crate::ideal::{enumerate_kernel_elements, Ideal, RingSpec};
use crate::ring::{chern_series_quotient, IntPolynomial, Monomial};

fn stated(ctx: &Ctx, name: &str, key: &str) -> Result<RingSpec> {
    let c = ctx.claims.get(key)?;
    Ok(ring(name, Ideal::new(&c.ring.vars(), ctx.claims.polys(key)?)?))
}

pub(super) fn delta1_ring(ctx: &Ctx) -> Result<RingSpec> {
    stated(ctx, "CH(Delta1)", "delta1.ring")
}

pub(super) fn main_ring(ctx: &Ctx) -> Result<RingSpec> {
    stated(ctx, "CH(M2bar)", "main.ring")
}

/// Pushforward `CH(Delta1) -> CH(M2bar)`: `gamma -> delta1 + lambda1`, then
/// multiplication by `delta1`.
pub fn pushforward_delta1_to_m2bar(p: &IntPolynomial) -> Result<IntPolynomial> {
    let m = RingKey::M2bar.vars();
    let l1 = IntPolynomial::var(&m, "lambda1")?;
    let l2 = IntPolynomial::var(&m, "lambda2")?;
    let d1 = IntPolynomial::var(&m, "delta1")?;
    let images = [l1.clone(), l2, &d1 + &l1];
    Ok(&p.map_into(&m, &images)? * &d1)
}

pub(super) fn adelta1(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let c = &ctx.claims;
    let dv = RingKey::Delta1.vars();
    let tr = TorusTransfer::with_names(&[], ["lambda1", "lambda2", "gamma"])?;
    let euler_bg = rep_euler_class(&RepSpec::doubled(&[4, 6]), &bg_ring())?;
    let rename = [
        IntPolynomial::var(&dv, "lambda1")?,
        IntPolynomial::var(&dv, "lambda2")?,
        IntPolynomial::var(&dv, "gamma")?,
    ];
    let euler = euler_bg.map_into(&dv, &rename)?;
    rec.equal_in("e(W_{4,6})", tr.base(), &euler, &c.poly("delta1.euler", 0)?)?;

    let torus = RingSpec::polynomial_ring("CH(BT)", tr.torus_vars());
    let quotient = RepSpec::Sum(vec![
        RepSpec::character(&[("t2", 4)]),
        RepSpec::character(&[("t2", 6)]),
    ]);
    let cs = rep_chern_classes(&quotient, &torus)?;
    let class = subbundle_class(&cs, &IntPolynomial::zero(tr.torus_vars()))?;
    rec.equal("class of L_{4,6} x 0", &class, &c.poly("delta1.subbundle", 0)?);
    let t1 = IntPolynomial::var(tr.torus_vars(), "t1")?;
    let pushes = [tr.pushforward(&class)?, tr.pushforward(&(&class * &t1))?];
    for (k, (got, want)) in pushes.iter().zip(c.polys("delta1.pushes")?).enumerate() {
        rec.equal_in(&format!("image of generator {k}"), tr.base(), got, &want)?;
    }
    let mut gens = tr.base().relations.generators().to_vec();
    gens.push(euler.clone());
    gens.extend(pushes.iter().cloned());
    let derived = ring("excision of Delta1", Ideal::new(&dv, gens)?);
    let claimed = delta1_ring(ctx)?;
    rec.same_ideal("presentation", &derived, &claimed)?;
    let without_euler = ring(
        "CH(BG) + images",
        tr.base().relations.with_generators(pushes.iter().cloned())?,
    );
    rec.member("the Euler class is implied", &without_euler, &euler)?;
    let g = IntPolynomial::var(&dv, "gamma")?;
    rec.non_member("gamma is nonzero", &claimed, &g)?;
    rec.member("2 gamma = 0, so gamma dies after inverting 2", &claimed, &g.scale(2))?;
    rec.member("576 lambda2^2 = 0", &claimed, &IntPolynomial::parse(&dv, "576*lambda2^2")?)?;
    Ok(())
}

pub(super) fn kappa(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let v = RingKey::Curve.vars();
    let p = |s: &str| IntPolynomial::parse(&v, s);
    let num = [p("1")?, p("lambda1")?, p("lambda2")?];
    let den = [p("1")?, p("c1w")?, p("S1")?];
    let k = chern_series_quotient(&num, &den, 2)?;
    rec.equal("c_2 of the kernel line bundle", &k, &ctx.claims.poly("grr.kappa", 0)?);
    Ok(())
}

/// `pi_*` on classes linear in `c1(omega)`, `[S_0]`, `[S_1]` with
/// coefficients pulled back from the base.
fn fiber_pushforward(p: &IntPolynomial) -> Result<IntPolynomial> {
    let v = p.vars().clone();
    let (w, s0, s1) = (v.require("c1w")?, v.require("S0")?, v.require("S1")?);
    let d0 = IntPolynomial::var(&v, "delta0")?;
    let d1 = IntPolynomial::var(&v, "delta1")?;
    let mut out = IntPolynomial::zero(&v);
    for (m, c) in p.terms() {
        let fib = (m.exponent(w), m.exponent(s0), m.exponent(s1));
        let factor = match fib {
            (0, 0, 0) => continue,
            (1, 0, 0) => IntPolynomial::constant(&v, 2),
            (0, 1, 0) => d0.clone(),
            (0, 0, 1) => d1.clone(),
            _ => return Err(Error::Unsupported(format!("pushforward of {m:?}"))),
        };
        let mut e = m.exponents().to_vec();
        e[w] = 0;
        e[s0] = 0;
        e[s1] = 0;
        let base = IntPolynomial::monomial(&v, Monomial::from_exponents(e, &v.weights()), c.clone());
        out = &out + &(&base * &factor);
    }
    Ok(out)
}

/// `delta0` solved from `12 lambda1 = pi_*(c1(omega)^2 + [S])`.
fn solve_delta0(kappa: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let v = kappa.vars().clone();
    let p = |s: &str| IntPolynomial::parse(&v, s);
    let integrand = &p("c1w^2 + S0 + S1")? - kappa;
    let pushed = fiber_pushforward(&integrand)?;
    let d0 = v.require("delta0")?;
    let lin = pushed.coefficient_of_power(d0, 1);
    if lin != IntPolynomial::one(&v) {
        return Err(Error::Unsupported(format!("delta0 enters {pushed} with coefficient {lin}")));
    }
    let rest = pushed.coefficient_of_power(d0, 0);
    Ok((pushed, &p("12*lambda1")? - &rest))
}

pub(super) fn delta0(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let kappa = ctx.claims.poly("grr.kappa", 0)?;
    let (pushed, d0) = solve_delta0(&kappa)?;
    rec.note(format!("pi_*(c1(omega)^2 + [S]) = {pushed}"));
    rec.equal("delta0", &d0, &ctx.claims.poly("grr.delta0", 0)?);
    Ok(())
}

pub(super) fn rel3(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let m = RingKey::M2bar.vars();
    let d0 = ctx.claims.poly("grr.delta0", 0)?.restrict(&m)?;
    let l2 = IntPolynomial::var(&m, "lambda2")?;
    let rel3 = (&d0 * &l2).scale(2);
    let rels = ctx.claims.polys("grr.relations")?;
    let rel2 = IntPolynomial::parse(&m, "12*lambda1^2 - 24*lambda2")?.scale(2);
    rec.equal("twice pi_*(c1(omega) [S])", &rel2, &rels[0]);
    rec.equal("2 delta0 lambda2", &rel3, &rels[1]);
    Ok(())
}

pub(super) fn delta1delta1(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let m = RingKey::M2bar.vars();
    for row in ctx.claims.rows("boundary.pushes")? {
        rec.equal(&format!("push({})", row[0]), &pushforward_delta1_to_m2bar(&row[0])?, &row[1].restrict(&m)?);
    }
    let d1 = delta1_ring(ctx)?;
    let main = main_ring(ctx)?;
    for g in d1.relations.generators() {
        rec.member(&format!("push({g})"), &main, &pushforward_delta1_to_m2bar(g)?)?;
    }
    let bg_part: Vec<IntPolynomial> = d1.relations.generators()[..2]
        .iter()
        .map(pushforward_delta1_to_m2bar)
        .collect::<Result<_>>()?;
    let pushed = ring("pushed CH(BG) relations", Ideal::new(&m, bg_part)?);
    let written = ring("stated form", Ideal::new(&m, ctx.claims.polys("boundary.relations")?)?);
    rec.same_ideal("2(delta1 + lambda1) = (delta1 + lambda1)delta1 = 0 after pushing", &pushed, &written)?;
    Ok(())
}

fn sorted_strings(ps: &[IntPolynomial]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

pub(super) fn kernel_deg3(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let d1 = delta1_ring(ctx)?;
    let m = d1.poly("gamma - lambda1")?;
    let found = enumerate_kernel_elements(&d1, &m, 3)?;
    let stated = ctx.claims.polys("kernel3.classes")?;
    let stated_nf: Vec<IntPolynomial> = stated.iter().map(|p| d1.normal_form(p)).collect();
    let (a, b) = (sorted_strings(&found), sorted_strings(&stated_nf));
    rec.require("nonzero kernel elements", a == b, a.join(", "));
    let targets = ctx.claims.polys("kernel3.targets")?;
    let main = main_ring(ctx)?;
    for (x, want) in stated.iter().zip(&targets) {
        rec.equal(&format!("push({x})"), &pushforward_delta1_to_m2bar(x)?, want);
    }
    for x in &found {
        let want = pushforward_delta1_to_m2bar(&stated[stated_nf.iter().position(|y| y == x).unwrap_or(0)])?;
        rec.equal_in(&format!("push of representative {x}"), &main, &pushforward_delta1_to_m2bar(x)?, &want)?;
    }
    Ok(())
}

pub(super) fn im5(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let c = &ctx.claims;
    let ov = RingKey::Open.vars();
    let p = |s: &str| IntPolynomial::parse(&ov, s);
    let shift = p("t - 2*lambda1")?;
    let rw = c.rows("open.rewrites")?;
    let rw10 = &rw[0][0] + &(&rw[0][1] * &shift);
    let rw00 = &rw[1][0] + &(&rw[1][1] * &shift);
    let a = p("5*lambda1*lambda2")?;
    let b = p("6*lambda1^2 - 12*lambda2")?;
    let k4 = c.poly("open.kernel", 1)?;
    let lhs = &shift * &k4;
    let rhs = &(&a * &rw00) - &(&b * &rw10);
    rec.equal("(t - 2 lambda1) times the degree-4 generator", &lhs, &rhs);

    let main = main_ring(ctx)?;
    let m = RingKey::M2bar.vars();
    let q = |s: &str| IntPolynomial::parse(&m, s);
    let rels = c.polys("grr.relations")?;
    rec.member("24 lambda1^2 - 48 lambda2 lifts to 0", &main, &rels[0])?;
    let bar20 = q("4*lambda2")?;
    let lifted = pushforward_delta1_to_m2bar(&bar20.restrict(&RingKey::Delta1.vars())?)?;
    rec.equal_in("20 lambda1 lambda2 lifts to 4 lambda2", &main, &q("20*lambda1*lambda2")?, &lifted)?;

    let dv = RingKey::Delta1.vars();
    let r = |s: &str| IntPolynomial::parse(&dv, s);
    // Lifts of the images of s00 and s10 along the pushforward.
    let (lift00, lift10) = (IntPolynomial::zero(&dv), r("4*lambda2")?);
    let image = &(&r("5*lambda1*lambda2")? * &lift00) - &(&r("6*lambda1^2 - 12*lambda2")? * &lift10);
    let stated = c.polys("im5.class")?;
    rec.equal("image", &image, &stated[0]);
    rec.equal("rewritten", &stated[0], &stated[1]);
    rec.member("vanishes in CH^4(Delta1)", &delta1_ring(ctx)?, &stated[1])?;
    Ok(())
}

pub(super) fn main(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let m = RingKey::M2bar.vars();
    let mut six = ctx.claims.polys("grr.relations")?;
    for g in delta1_ring(ctx)?.relations.generators() {
        six.push(pushforward_delta1_to_m2bar(g)?);
    }
    for (k, (got, want)) in six.iter().zip(ctx.claims.polys("main.six")?).enumerate() {
        rec.equal(&format!("relation {}", k + 1), got, &want);
    }
    let six_ring = ring("six relations", Ideal::new(&m, six)?);
    let main = main_ring(ctx)?;
    rec.same_ideal("presentation", &six_ring, &main)?;

    let d1 = IntPolynomial::var(&m, "delta1")?;
    let restricted = ring("CH(M2bar) + (delta1)", main.relations.with_generators([d1.clone()])?);
    let open_gens = ctx
        .claims
        .polys("open.quotient")?
        .iter()
        .map(|g| g.embed(&m))
        .collect::<Result<Vec<_>>>()?;
    let open = ring("CH(M2bar - Delta1) + (delta1)", Ideal::new(&m, open_gens)?.with_generators([d1])?);
    rec.same_ideal("restriction to the complement of Delta1", &restricted, &open)?;
    Ok(())
}
