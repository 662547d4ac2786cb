//! Stated values that the pipeline re-derives. Each claim is a table of
//! polynomial strings over one of the working variable sets.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{IntPolynomial, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RingKey {
    /// `alpha1, alpha2, t`: the projectivized `V_2` over `BGL2`.
    Pv2,
    /// `beta1, beta2, gamma`.
    Bg,
    /// `t1, t2`.
    Torus,
    /// `t, lambda1, lambda2`: the projectivized `V_6` over `BGL2`.
    Open,
    /// `lambda1, lambda2`.
    Hodge,
    /// `lambda1, lambda2, gamma`.
    Delta1,
    /// `lambda1, lambda2, delta1`.
    M2bar,
    /// Classes on the universal curve and boundary classes.
    Curve,
    /// `alpha1, alpha2, beta1, beta2, gamma`.
    Biell,
    /// `alpha1, alpha2, t1, t2`.
    BiellTorus,
    /// `gamma, delta1, lambda1, lambda2`.
    BiellFinal,
}

impl RingKey {
    pub fn vars(self) -> Arc<VarSet> {
        let spec: &[(&str, u32)] = match self {
            RingKey::Pv2 => &[("alpha1", 1), ("alpha2", 2), ("t", 1)],
            RingKey::Bg => &[("beta1", 1), ("beta2", 2), ("gamma", 1)],
            RingKey::Torus => &[("t1", 1), ("t2", 1)],
            RingKey::Open => &[("t", 1), ("lambda1", 1), ("lambda2", 2)],
            RingKey::Hodge => &[("lambda1", 1), ("lambda2", 2)],
            RingKey::Delta1 => &[("lambda1", 1), ("lambda2", 2), ("gamma", 1)],
            RingKey::M2bar => &[("lambda1", 1), ("lambda2", 2), ("delta1", 1)],
            RingKey::Curve => &[
                ("c1w", 1),
                ("S0", 2),
                ("S1", 2),
                ("lambda1", 1),
                ("lambda2", 2),
                ("delta0", 1),
                ("delta1", 1),
            ],
            RingKey::Biell => &[("alpha1", 1), ("alpha2", 2), ("beta1", 1), ("beta2", 2), ("gamma", 1)],
            RingKey::BiellTorus => &[("alpha1", 1), ("alpha2", 2), ("t1", 1), ("t2", 1)],
            RingKey::BiellFinal => &[("gamma", 1), ("delta1", 1), ("lambda1", 1), ("lambda2", 2)],
        };
        VarSet::new(spec.iter().copied()).expect("fixed variable names")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub ring: RingKey,
    /// Ring of the second column, when it differs.
    pub image: Option<RingKey>,
    pub rows: Vec<Vec<String>>,
}

impl Claim {
    fn single(ring: RingKey, polys: &[&str]) -> Self {
        Claim {
            ring,
            image: None,
            rows: polys.iter().map(|p| vec![p.to_string()]).collect(),
        }
    }

    fn table(ring: RingKey, rows: &[&[&str]]) -> Self {
        Claim {
            ring,
            image: None,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }

    fn mapping(source: RingKey, target: RingKey, rows: &[&[&str]]) -> Self {
        Claim {
            image: Some(target),
            ..Claim::table(source, rows)
        }
    }

    pub fn column_ring(&self, column: usize) -> RingKey {
        match (column, self.image) {
            (1, Some(k)) => k,
            _ => self.ring,
        }
    }
}

/// A deliberate corruption: add one to the leading coefficient of one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub claim: String,
    pub row: usize,
    pub column: usize,
}

impl Fault {
    pub fn new(claim: impl Into<String>, row: usize, column: usize) -> Self {
        Fault {
            claim: claim.into(),
            row,
            column,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Claims {
    table: BTreeMap<&'static str, Claim>,
    accessed: RefCell<BTreeSet<String>>,
}

impl Claims {
    pub fn get(&self, key: &str) -> Result<&Claim> {
        self.accessed.borrow_mut().insert(key.to_string());
        self.table
            .get(key)
            .ok_or_else(|| Error::UnknownVariable(format!("claim {key}")))
    }

    /// Keys read through `get` since the last call.
    pub(crate) fn take_accessed(&self) -> BTreeSet<String> {
        self.accessed.take()
    }

    pub fn keys(&self) -> impl Iterator<Item = &&'static str> {
        self.table.keys()
    }

    /// Every entry of a claim parsed over its variable set.
    pub fn rows(&self, key: &str) -> Result<Vec<Vec<IntPolynomial>>> {
        let c = self.get(key)?;
        c.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(i, s)| IntPolynomial::parse(&c.column_ring(i).vars(), s))
                    .collect()
            })
            .collect()
    }

    /// The first column of a claim.
    pub fn polys(&self, key: &str) -> Result<Vec<IntPolynomial>> {
        Ok(self.rows(key)?.into_iter().map(|mut r| r.remove(0)).collect())
    }

    pub fn poly(&self, key: &str, row: usize) -> Result<IntPolynomial> {
        self.polys(key)?
            .into_iter()
            .nth(row)
            .ok_or_else(|| Error::IndexOutOfRange(format!("{key}[{row}]")))
    }

    pub fn apply(&mut self, fault: &Fault) -> Result<()> {
        let c = self
            .table
            .get_mut(fault.claim.as_str())
            .ok_or_else(|| Error::UnknownVariable(format!("claim {}", fault.claim)))?;
        let v = c.column_ring(fault.column).vars();
        let cell = c
            .rows
            .get_mut(fault.row)
            .and_then(|r| r.get_mut(fault.column))
            .ok_or_else(|| {
                Error::IndexOutOfRange(format!("{}[{}][{}]", fault.claim, fault.row, fault.column))
            })?;
        let p = IntPolynomial::parse(&v, cell)?;
        let bumped = match p.leading_term() {
            Some((m, _)) => &p + &IntPolynomial::monomial(&v, m.clone(), BigInt::from(1)),
            None => IntPolynomial::one(&v),
        };
        *cell = bumped.to_string();
        Ok(())
    }

    pub fn stated() -> Self {
        use RingKey::*;
        let mut t = BTreeMap::new();
        t.insert("bg.s2_table", Claim::single(Pv2, &["1", "t", "t^2 - alpha1*t + 2*alpha2"]));
        t.insert("bg.excision", Claim::single(Pv2, &["2*t - 2*alpha1", "t^2 - alpha1*t"]));
        t.insert(
            "bg.grothendieck",
            Claim::single(Pv2, &["(t^2 - 2*alpha1*t + 4*alpha2)*(t - alpha1)"]),
        );
        t.insert("bg.ring", Claim::single(Bg, &["2*gamma", "gamma^2 + beta1*gamma"]));
        t.insert(
            "bg.pushforward",
            Claim::mapping(
                Torus,
                Bg,
                &[&["t1", "beta1 + gamma"], &["24*t2^2", "24*beta1^2 - 48*beta2"], &[
                    "t1*t2^2",
                    "beta2*(beta1 + gamma)",
                ]],
            ),
        );
        t.insert(
            "bg.wn",
            Claim::table(
                Bg,
                &[
                    &["0", "gamma", "0"],
                    &["6", "6*beta1 + 7*gamma", "36*beta2"],
                    &["-2", "gamma - 2*beta1", "4*beta2"],
                ],
            ),
        );
        t.insert(
            "open.s6_table",
            Claim::single(
                Open,
                &[
                    "1",
                    "t",
                    "t^2 - lambda1*t + 6*lambda2",
                    "t^3 - 3*lambda1*t^2 + (2*lambda1^2 + 16*lambda2)*t - 12*lambda1*lambda2",
                    "t^4 - 6*lambda1*t^3 + (11*lambda1^2 + 28*lambda2)*t^2 \
                     + (-6*lambda1^3 - 72*lambda1*lambda2)*t + 36*lambda1^2*lambda2 + 72*lambda2^2",
                ],
            ),
        );
        t.insert(
            "open.grothendieck",
            Claim::single(
                Open,
                &["(t^2 - 6*lambda1*t + 36*lambda2)*(t^2 - 6*lambda1*t + 5*lambda1^2 + 16*lambda2)\
                   *(t^2 - 6*lambda1*t + 8*lambda1^2 + 4*lambda2)*(t - 3*lambda1)"],
            ),
        );
        // Coefficients on s_{i0}, s_{i1}, s_{i2}, s_{i3}.
        t.insert(
            "open.cub2",
            Claim::table(
                Open,
                &[
                    &["6*(lambda1^2 - lambda2)", "-6*lambda1", "3", "0"],
                    &["6*(lambda1^2 - lambda2)", "-6*lambda1", "3", "0"],
                    &["6*lambda1*lambda2", "-6*lambda2", "0", "1"],
                    &["6*lambda1*lambda2", "-6*lambda2", "0", "1"],
                ],
            ),
        );
        // Rows s10, s11, s12, s13, s00, s01, s02'; columns s_6^0 .. s_6^6.
        t.insert(
            "open.sij",
            Claim::table(
                Open,
                &[
                    &["120*lambda1*lambda2", "-60*lambda2", "0", "1", "0", "0", "0"],
                    &["0", "60*lambda1*lambda2", "-36*lambda2", "0", "1", "0", "0"],
                    &["0", "0", "24*lambda1*lambda2", "-18*lambda2", "0", "1", "0"],
                    &["0", "0", "0", "6*lambda1*lambda2", "-6*lambda2", "0", "1"],
                    &["120*(lambda1^2 - lambda2)", "-60*lambda1", "12", "0", "0", "0", "0"],
                    &["0", "60*(lambda1^2 - lambda2)", "-36*lambda1", "9", "0", "0", "0"],
                    &["0", "0", "12*(lambda1^2 - lambda2)", "-9*lambda1", "3", "0", "0"],
                ],
            ),
        );
        t.insert("open.det", Claim::single(Open, &["86400*(lambda1^2 - 4*lambda2)^3"]));
        // s10, s00, s02' in the hyperplane class.
        t.insert(
            "open.sij_polys",
            Claim::single(
                Open,
                &[
                    "t^3 - 3*lambda1*t^2 + (2*lambda1^2 - 44*lambda2)*t + 108*lambda1*lambda2",
                    "12*t^2 - 72*lambda1*t + 120*lambda1^2 - 48*lambda2",
                    "3*t^4 - 27*lambda1*t^3 + (72*lambda1^2 + 72*lambda2)*t^2 \
                     - (48*lambda1^3 + 348*lambda1*lambda2)*t + 288*lambda1^2*lambda2 + 144*lambda2^2",
                ],
            ),
        );
        // remainder + cofactor * (t - 2 lambda1) + a * s10 + b * s00.
        t.insert(
            "open.rewrites",
            Claim::table(
                Open,
                &[
                    &["20*lambda1*lambda2", "t^2 - lambda1*t - 44*lambda2", "0", "0"],
                    &["24*lambda1^2 - 48*lambda2", "12*t - 48*lambda1", "0", "0"],
                    &[
                        "0",
                        "-60*(lambda1^2 - 4*lambda2)*(t - 3*lambda1)",
                        "3*t - 6*lambda1",
                        "-(lambda1*t - 3*lambda1^2 + 3*lambda2)",
                    ],
                ],
            ),
        );
        t.insert(
            "open.quotient",
            Claim::single(Hodge, &["24*lambda1^2 - 48*lambda2", "20*lambda1*lambda2"]),
        );
        t.insert(
            "open.kernel",
            Claim::single(
                Open,
                &[
                    "60*(lambda1^2 - 4*lambda2)*(t - 3*lambda1)",
                    "5*lambda1*lambda2*(12*t - 48*lambda1) \
                     - (6*lambda1^2 - 12*lambda2)*(t^2 - lambda1*t - 44*lambda2)",
                ],
            ),
        );
        t.insert("delta1.euler", Claim::single(Delta1, &["576*lambda2^2"]));
        t.insert("delta1.subbundle", Claim::single(Torus, &["24*t2^2"]));
        t.insert(
            "delta1.pushes",
            Claim::single(Delta1, &["24*lambda1^2 - 48*lambda2", "24*lambda1*lambda2"]),
        );
        t.insert(
            "delta1.ring",
            Claim::single(
                Delta1,
                &[
                    "2*gamma",
                    "gamma^2 + lambda1*gamma",
                    "24*lambda1^2 - 48*lambda2",
                    "24*lambda1*lambda2",
                ],
            ),
        );
        t.insert("grr.kappa", Claim::single(Curve, &["c1w^2 - c1w*lambda1 + lambda2 - S1"]));
        t.insert("grr.delta0", Claim::single(Curve, &["10*lambda1 - 2*delta1"]));
        t.insert(
            "grr.relations",
            Claim::single(M2bar, &["24*lambda1^2 - 48*lambda2", "20*lambda1*lambda2 - 4*delta1*lambda2"]),
        );
        t.insert(
            "boundary.pushes",
            Claim::mapping(
                Delta1,
                M2bar,
                &[
                    &["1", "delta1"],
                    &["gamma", "delta1*(delta1 + lambda1)"],
                    &["2*gamma", "2*delta1^2 + 2*delta1*lambda1"],
                ],
            ),
        );
        t.insert(
            "boundary.relations",
            Claim::single(M2bar, &["2*delta1^2 + 2*delta1*lambda1", "delta1^3 + delta1^2*lambda1"]),
        );
        t.insert(
            "kernel3.classes",
            Claim::single(Delta1, &["gamma*lambda1^2", "gamma*lambda2", "gamma*(lambda1^2 + lambda2)"]),
        );
        t.insert(
            "kernel3.targets",
            Claim::single(
                M2bar,
                &[
                    "delta1*(delta1 + lambda1)*lambda1^2",
                    "delta1*(delta1 + lambda1)*lambda2",
                    "delta1*(delta1 + lambda1)*(lambda1^2 + lambda2)",
                ],
            ),
        );
        t.insert(
            "im5.class",
            Claim::single(
                Delta1,
                &["-(6*lambda1^2 - 12*lambda2)*4*lambda2", "-lambda2*(24*lambda1^2 - 48*lambda2)"],
            ),
        );
        t.insert(
            "main.six",
            Claim::single(
                M2bar,
                &[
                    "24*lambda1^2 - 48*lambda2",
                    "20*lambda1*lambda2 - 4*delta1*lambda2",
                    "2*(delta1 + lambda1)*delta1",
                    "((delta1 + lambda1)^2 + lambda1*(delta1 + lambda1))*delta1",
                    "(24*lambda1^2 - 48*lambda2)*delta1",
                    "24*lambda1*lambda2*delta1",
                ],
            ),
        );
        t.insert(
            "main.ring",
            Claim::single(
                M2bar,
                &[
                    "24*lambda1^2 - 48*lambda2",
                    "20*lambda1*lambda2 - 4*delta1*lambda2",
                    "delta1^3 + delta1^2*lambda1",
                    "2*delta1^2 + 2*delta1*lambda1",
                ],
            ),
        );
        t.insert(
            "biell.euler",
            Claim::single(
                Biell,
                &[
                    "9*alpha2^2 - 2*alpha1^2*alpha2",
                    "4*alpha1^4 + 12*alpha1^3*beta1 + 8*alpha1^2*beta1^2 + 4*alpha1^2*alpha2 \
                     + 6*alpha1*alpha2*beta1 + 4*alpha2*beta1^2 + 20*alpha1^2*beta2 \
                     + 24*alpha1*beta1*beta2 + alpha1*alpha2*gamma + alpha2*beta1*gamma \
                     + alpha2^2 - 8*alpha2*beta2 + 16*beta2^2",
                ],
            ),
        );
        t.insert(
            "biell.subbundle",
            Claim::single(BiellTorus, &["4*t2^2 + 6*alpha1*t2 + 2*alpha1^2 + alpha2"]),
        );
        t.insert(
            "biell.relzero",
            Claim::single(
                Biell,
                &[
                    "9*alpha2^2 - 2*alpha1^2*alpha2",
                    "4*alpha1^2 + 6*alpha1*beta1 + 4*beta1^2 + 2*alpha2 - 8*beta2",
                    "2*alpha1^2*beta1 + alpha2*beta1 + 12*alpha1*beta2 + 4*beta1*beta2 + alpha2*gamma",
                    "4*alpha1^4 + 12*alpha1^3*beta1 + 8*alpha1^2*beta1^2 + 4*alpha1^2*alpha2 \
                     + 6*alpha1*alpha2*beta1 + 4*alpha2*beta1^2 + 20*alpha1^2*beta2 \
                     + 24*alpha1*beta1*beta2 + alpha1*alpha2*gamma + alpha2*beta1*gamma \
                     + alpha2^2 - 8*alpha2*beta2 + 16*beta2^2",
                ],
            ),
        );
        t.insert(
            "biell.s3_table",
            Claim::single(Biell, &["1", "alpha1", "3*alpha2", "alpha1*alpha2"]),
        );
        t.insert(
            "biell.square_class",
            Claim::single(BiellTorus, &["4*alpha1*t2 + 4*alpha1^2 - 3*alpha2"]),
        );
        t.insert(
            "biell.reltrip",
            Claim::single(
                Biell,
                &[
                    "3*alpha2",
                    "alpha1*alpha2",
                    "4*alpha1*beta1 + 8*alpha1^2 - 6*alpha2",
                    "8*alpha1*beta2 + 4*alpha1^2*beta1 - 3*alpha2*beta1 + alpha2*gamma",
                    "9*alpha1^2 + 10*alpha1*beta1 + alpha1*gamma - 3*alpha2 + 12*beta2",
                    "alpha2*gamma - 10*alpha1^3 - 12*alpha1^2*beta1 - 5*alpha1*alpha2 \
                     - 6*alpha2*beta1 - 16*alpha1*beta2",
                ],
            ),
        );
        t.insert(
            "biell.tautological",
            Claim::single(
                Biell,
                &["-beta1 - 2*alpha1", "alpha1^2 + alpha1*beta1 + beta2", "-3*alpha1 - 2*beta1 + gamma"],
            ),
        );
        t.insert(
            "biell.substitution",
            Claim::single(
                BiellFinal,
                &[
                    "-2*lambda1 + delta1 - gamma",
                    "3*lambda1 - 2*delta1 + 2*gamma",
                    "2*lambda1^2 - 3*lambda1*delta1 + delta1^2 + 3*lambda1*gamma - 2*delta1*gamma \
                     + gamma^2 + lambda2",
                    "2*lambda1*delta1 - 2*lambda1*gamma - 8*lambda2",
                ],
            ),
        );
        t.insert(
            "biell.ring",
            Claim::single(
                BiellFinal,
                &[
                    "2*gamma",
                    "gamma^2 + lambda1*gamma",
                    "delta1^2 + delta1*gamma + 8*lambda1^2 - 12*lambda2",
                    "24*lambda1^2 - 48*lambda2",
                    "2*delta1^2 + 2*lambda1*delta1",
                    "20*lambda1*lambda2 - 4*delta1*lambda2",
                    "8*lambda1^3 - 8*lambda1*lambda2",
                ],
            ),
        );
        t.insert(
            "biell.mod2",
            Claim::single(BiellFinal, &["gamma^2 + lambda1*gamma", "delta1^2 + delta1*gamma"]),
        );
        t.insert(
            "biell.nonvanishing",
            Claim::single(
                BiellFinal,
                &[
                    "delta1*(delta1 + lambda1)*lambda1^2",
                    "delta1*(delta1 + lambda1)*lambda2",
                    "delta1*(delta1 + lambda1)*(lambda1^2 + lambda2)",
                ],
            ),
        );
        Claims {
            table: t,
            accessed: RefCell::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_parses() {
        let c = Claims::stated();
        for k in c.keys() {
            c.rows(k).unwrap_or_else(|e| panic!("{k}: {e}"));
        }
    }

    #[test]
    fn fault_bumps_one_entry() {
        let mut c = Claims::stated();
        let before = c.poly("delta1.ring", 3).unwrap();
        c.apply(&Fault::new("delta1.ring", 3, 0)).unwrap();
        let after = c.poly("delta1.ring", 3).unwrap();
        assert_eq!(after.to_string(), "25*lambda1*lambda2");
        assert_ne!(before, after);
        assert!(c.apply(&Fault::new("nope", 0, 0)).is_err());
    }
}
