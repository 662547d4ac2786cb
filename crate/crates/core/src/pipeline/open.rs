use std::sync::Arc;

use super::record::{ring, Recorder};
use super::{Ctx, RingKey};
use crate::bundle::{
    mult_pushforward, mult_pushforward_classes, srj_table, veronese_pushforward, BundleClasses,
    SExpansion, SrjTable,
};
use crate::error::Result;
use crate::group::RootRing;
use crate::ideal::{multiplication_kernel, Ideal, RingSpec};
use crate::ring::{poly_determinant, IntPolynomial, VarSet};

/// Classes on `P V_6` over `BGL2` coming from the triple-root locus.
pub(super) struct OpenData {
    pub vars: Arc<VarSet>,
    pub table: SrjTable,
    pub cub1: [SExpansion; 2],
    /// `s[i][j]` for `i <= 1`, `j <= 3`.
    pub s: [[SExpansion; 4]; 2],
    pub s02p: SExpansion,
}

impl OpenData {
    pub fn compute() -> Result<Self> {
        let vars = RingKey::Open.vars();
        let t = IntPolynomial::var(&vars, "t")?;
        let cls = BundleClasses::parse(&vars, "-lambda1", "lambda2")?;
        let table = srj_table(6, &cls, &t)?;
        let cub1 = [veronese_pushforward(3, 0, &cls)?, veronese_pushforward(3, 1, &cls)?];
        let theta = |i: usize, j: u32| -> Result<SExpansion> {
            mult_pushforward_classes(&cub1[i], &SExpansion::basis(&vars, 3, j)?)
        };
        let s = [
            [theta(0, 0)?, theta(0, 1)?, theta(0, 2)?, theta(0, 3)?],
            [theta(1, 0)?, theta(1, 1)?, theta(1, 2)?, theta(1, 3)?],
        ];
        let s02p = s[0][2].exact_div_scalar(2)?;
        Ok(OpenData {
            vars,
            table,
            cub1,
            s,
            s02p,
        })
    }

    /// `s10, s11, s12, s13, s00, s01, s02'`.
    pub fn seven(&self) -> Vec<&SExpansion> {
        let s = &self.s;
        vec![&s[1][0], &s[1][1], &s[1][2], &s[1][3], &s[0][0], &s[0][1], &self.s02p]
    }

    pub fn poly(&self, x: &SExpansion) -> Result<IntPolynomial> {
        x.to_polynomial(&self.table)
    }

    /// `(s10, s00, s02')` as polynomials in `t`.
    pub fn generators(&self) -> Result<Vec<IntPolynomial>> {
        Ok(vec![self.poly(&self.s[1][0])?, self.poly(&self.s[0][0])?, self.poly(&self.s02p)?])
    }
}

fn combination(data: &OpenData, i: usize, coeffs: &[IntPolynomial]) -> Result<SExpansion> {
    let mut out = SExpansion::zero(&data.vars, 6);
    for (j, c) in coeffs.iter().enumerate() {
        out = out.checked_add(&data.s[i][j].mul_poly(c))?;
    }
    Ok(out)
}

fn expansions_equal(rec: &mut Recorder, label: &str, got: &SExpansion, want: &SExpansion) -> bool {
    if got == want {
        rec.require(label, true, got)
    } else {
        rec.require(label, false, format!("{got} != {want}"))
    }
}

/// The quotient `Z[t, lambda1, lambda2] / (s00, s10, s02')` from the stated
/// polynomials.
pub(super) fn stated_open_ring(ctx: &Ctx) -> Result<RingSpec> {
    let g = ctx.claims.polys("open.sij_polys")?;
    Ok(ring("CH(open / Gm)", Ideal::new(&RingKey::Open.vars(), g)?))
}

pub(super) fn srj_table_check(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let data = OpenData::compute()?;
    for (j, want) in ctx.claims.polys("open.s6_table")?.iter().enumerate() {
        rec.equal(&format!("s_6^{j}"), data.table.get(j as u32)?, want);
    }
    for j in 5..=6 {
        rec.note(format!("s_6^{j} = {}", data.table.get(j)?));
    }
    Ok(())
}

pub(super) fn groth(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let vars = RingKey::Open.vars();
    let p = |s: &str| IntPolynomial::parse(&vars, s);
    let rr = RootRing::new(&vars, &[vec![p("-lambda1")?, p("lambda2")?]])?;
    let r = rr.roots(0);
    let t = rr.lift(&p("t")?)?;
    let mut prod = IntPolynomial::one(&rr.vars);
    for i in 0..=6i64 {
        let root = &r[0].scale(6 - i) + &r[1].scale(i);
        prod = &prod * &(&t + &root);
    }
    let derived = rr.descend(&prod)?;
    rec.equal("product over the roots of V_6", &derived, &ctx.claims.poly("open.grothendieck", 0)?);
    Ok(())
}

pub(super) fn cub2(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let data = OpenData::compute()?;
    let rows = ctx.claims.rows("open.cub2")?;
    let (c, (k, _)) = mult_pushforward(1, 0, 1, 0)?;
    rec.require("s_1^0 x s_1^0", c == 2.into() && k == 0, format!("{c} s_2^{k}"));
    let m = |a: usize, b: usize| mult_pushforward_classes(&data.cub1[a], &data.cub1[b]);
    let twice0 = m(0, 0)?;
    let one_a = m(1, 0)?;
    let one_b = m(0, 1)?;
    let two = m(1, 1)?;
    expansions_equal(rec, "2 cub2(s_2^0) via s_0j", &twice0, &combination(&data, 0, &rows[0])?);
    expansions_equal(rec, "cub2(s_2^1) via s_1j", &one_a, &combination(&data, 1, &rows[1])?);
    expansions_equal(rec, "cub2(s_2^1) via s_0j", &one_b, &combination(&data, 0, &rows[2])?);
    expansions_equal(rec, "cub2(s_2^2) via s_1j", &two, &combination(&data, 1, &rows[3])?);
    expansions_equal(rec, "both expressions for cub2(s_2^1)", &one_a, &one_b);
    let even = twice0.exact_div_scalar(2).is_ok() && data.s[0][2].exact_div_scalar(2).is_ok();
    rec.require("coefficients of s_02 are even", even, format!("s_02 = {}", data.s[0][2]));
    Ok(())
}

pub(super) fn sij(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let data = OpenData::compute()?;
    let names = ["s10", "s11", "s12", "s13", "s00", "s01", "s02'"];
    for ((name, x), row) in names.iter().zip(data.seven()).zip(ctx.claims.rows("open.sij")?) {
        let got: Vec<IntPolynomial> = (0..=6).map(|j| x.coefficient(j).clone()).collect();
        let ok = got == row;
        rec.require(name, ok, x);
    }
    let polys = ctx.claims.polys("open.sij_polys")?;
    for ((name, x), want) in ["s10", "s00", "s02'"].iter().zip(data.generators()?).zip(polys) {
        rec.equal(&format!("{name} in t"), &x, &want);
    }
    Ok(())
}

pub(super) fn det(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let rows = ctx.claims.rows("open.sij")?;
    let d = poly_determinant(&rows)?;
    rec.equal("determinant", &d, &ctx.claims.poly("open.det", 0)?);
    rec.require("nonzero", !d.is_zero(), "the seven classes are independent");
    Ok(())
}

pub(super) fn rewrites(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let vars = RingKey::Open.vars();
    let polys = ctx.claims.polys("open.sij_polys")?;
    let (s10, s00) = (&polys[0], &polys[1]);
    let shift = IntPolynomial::parse(&vars, "t - 2*lambda1")?;
    for ((name, target), row) in ["s10", "s00", "s02'"]
        .iter()
        .zip(&polys)
        .zip(ctx.claims.rows("open.rewrites")?)
    {
        let rhs = &(&(&row[0] + &(&row[1] * &shift)) + &(&row[2] * s10)) + &(&row[3] * s00);
        rec.equal(name, &rhs, target);
    }
    Ok(())
}

pub(super) fn membership(_ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let data = OpenData::compute()?;
    let vars = data.vars.clone();
    let two = ring(
        "(s00, s10)",
        Ideal::new(&vars, vec![data.poly(&data.s[0][0])?, data.poly(&data.s[1][0])?])?,
    );
    for i in 0..2 {
        for j in 0..4 {
            rec.member(&format!("s{i}{j}"), &two, &data.poly(&data.s[i][j])?)?;
        }
    }
    let p = |s: &str| IntPolynomial::parse(&vars, s);
    let rr = RootRing::new(&vars, &[vec![p("-lambda1")?, p("lambda2")?]])?;
    let r = rr.roots(0);
    let t = rr.lift(&p("t")?)?;
    let mut prod = IntPolynomial::one(&rr.vars);
    for i in 0..=6i64 {
        prod = &prod * &(&t + &(&r[0].scale(6 - i) + &r[1].scale(i)));
    }
    rec.member("Grothendieck relation", &two, &rr.descend(&prod)?)?;
    let mut seven = Vec::new();
    for x in data.seven() {
        seven.push(data.poly(x)?);
    }
    let excision = ring("excision of the triple-root loci", Ideal::new(&vars, seven)?);
    let stated = ring("(s10, s00, s02')", Ideal::new(&vars, data.generators()?)?);
    rec.same_ideal("seven relations reduce to three", &excision, &stated)?;
    Ok(())
}

fn to_hodge(p: &IntPolynomial) -> Result<IntPolynomial> {
    let h = RingKey::Hodge.vars();
    let l1 = IntPolynomial::var(&h, "lambda1")?;
    p.map_into(&h, &[l1.scale(2), l1, IntPolynomial::var(&h, "lambda2")?])
}

pub(super) fn thm45(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let open = stated_open_ring(ctx)?;
    let h = RingKey::Hodge.vars();
    let images = open
        .relations
        .generators()
        .iter()
        .map(to_hodge)
        .collect::<Result<Vec<_>>>()?;
    for g in &images {
        rec.note(format!("t = 2 lambda1: {g}"));
    }
    let derived = ring("open ring mod t - 2 lambda1", Ideal::new(&h, images)?);
    let stated = ring("CH(M2bar - Delta1)", Ideal::new(&h, ctx.claims.polys("open.quotient")?)?);
    rec.same_ideal("quotient", &derived, &stated)?;
    Ok(())
}

pub(super) fn thm45_kernel(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let open = stated_open_ring(ctx)?;
    let m = open.poly("t - 2*lambda1")?;
    let cands = ctx.claims.polys("open.kernel")?;
    for c in &cands {
        rec.member(&format!("(t - 2 lambda1) * {c}"), &open, &(&m * c))?;
    }
    let k = multiplication_kernel(&open, &m, ctx.max_degree, &cands)?;
    for piece in &k.pieces {
        let gen = piece.generated_by_candidates == Some(true);
        let shape = format!(
            "degree {}: free rank {}, torsion {:?}",
            piece.degree,
            piece.free_rank,
            piece.torsion_invariants.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
        rec.require(&format!("kernel in degree {} generated by the two classes", piece.degree), gen, shape);
    }
    Ok(())
}
