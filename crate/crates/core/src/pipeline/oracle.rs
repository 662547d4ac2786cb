use num_bigint::BigInt;
use num_traits::One;

use super::boundary::{delta1_ring, main_ring};
use super::open::stated_open_ring;
use super::record::{ring, Recorder};
use super::{Ctx, RingKey};
use crate::error::Result;
use crate::ideal::{graded_piece, Ideal, RingSpec};
use crate::ring::{monomials_of_degree, IntPolynomial};

const ORACLE_DEGREE: u32 = 8;

fn rings(ctx: &Ctx) -> Result<Vec<RingSpec>> {
    let q = |name: &str, key: RingKey, claim: &str| -> Result<RingSpec> {
        Ok(ring(name, Ideal::new(&key.vars(), ctx.claims.polys(claim)?)?))
    };
    Ok(vec![
        q("CH(BG)", RingKey::Bg, "bg.ring")?,
        stated_open_ring(ctx)?,
        q("CH(M2bar - Delta1)", RingKey::Hodge, "open.quotient")?,
        delta1_ring(ctx)?,
        main_ring(ctx)?,
        q("CH(B)", RingKey::BiellFinal, "biell.ring")?,
    ])
}

pub(super) fn agreement(ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let top = ORACLE_DEGREE.min(ctx.max_degree);
    for r in rings(ctx)? {
        let weights = r.vars().weights();
        let mut tested = 0usize;
        let mut disagree = Vec::new();
        for d in 0..=top {
            let piece = graded_piece(&r, d);
            if !piece.verify_smith() {
                rec.fail(format!("{}: Smith form in degree {d} does not verify", r.name));
            }
            for m in monomials_of_degree(&weights, d) {
                let p = IntPolynomial::monomial(r.vars(), m, BigInt::one());
                let gb = r.relations.contains(&p);
                let snf = piece.contains(&p)?;
                if gb != snf {
                    disagree.push(format!("{p} (gb {gb}, snf {snf})"));
                }
                tested += 1;
            }
            // Smith generators: e_i is nonzero with order d_i.
            for (i, row) in piece.basis_change_inverse.rows.iter().enumerate() {
                let g = piece.polynomial(row);
                let order = piece.smith_diagonal.get(i).cloned();
                if order.as_ref().is_some_and(|o| o.is_one()) {
                    continue;
                }
                if r.relations.contains(&g) {
                    disagree.push(format!("Smith generator {g} of degree {d} lies in the ideal"));
                }
                if let Some(o) = order {
                    if !r.relations.contains(&g.scale(o.clone())) {
                        disagree.push(format!("{o} * {g} is not in the ideal"));
                    }
                }
                tested += 1;
            }
        }
        let ok = disagree.is_empty();
        let detail = if ok {
            format!("{tested} elements through degree {top}")
        } else {
            disagree.join("; ")
        };
        rec.require(&r.name, ok, detail);
    }
    Ok(())
}
