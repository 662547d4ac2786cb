//! The verification pipeline: every stated presentation, relation and
//! identity is re-derived from the bundle and group primitives and certified
//! by both ideal engines.

mod bielliptic;
mod boundary;
mod claims;
mod group_checks;
mod open;
mod oracle;
mod record;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use record::Recorder;

pub use boundary::pushforward_delta1_to_m2bar;
pub use claims::{Claim, Claims, Fault, RingKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub status: Status,
    pub witness: String,
    pub witness_digest: String,
    pub elapsed: Duration,
}

/// The serialized form of a [`LemmaCheck`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness_digest: String,
    pub elapsed_ms: u64,
}

impl From<&LemmaCheck> for CheckRecord {
    fn from(c: &LemmaCheck) -> Self {
        CheckRecord {
            id: c.id.clone(),
            anchor: c.anchor.clone(),
            status: c.status,
            witness_digest: c.witness_digest.clone(),
            elapsed_ms: c.elapsed.as_millis() as u64,
        }
    }
}

pub fn digest(witness: &str) -> String {
    hex::encode(Sha256::digest(witness.as_bytes()))
}

pub(crate) struct Ctx {
    pub claims: Claims,
    pub max_degree: u32,
}

type Runner = fn(&Ctx, &mut Recorder) -> Result<()>;

/// One node of the check graph.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    /// Checks whose certified claims this one consumes.
    pub depends_on: &'static [&'static str],
    /// Claims read by this check.
    pub reads: &'static [&'static str],
    run: Runner,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).finish()
    }
}

macro_rules! check {
    ($id:expr, $anchor:expr, $stmt:expr, [$($dep:expr),*], [$($claim:expr),*], $run:path) => {
        CheckSpec {
            id: $id,
            anchor: $anchor,
            statement: $stmt,
            depends_on: &[$($dep),*],
            reads: &[$($claim),*],
            run: $run,
        }
    };
}

/// Every check, in dependency order.
pub fn registry() -> &'static [CheckSpec] {
    const CHECKS: &[CheckSpec] = &[
        check!(
            "thm:bg", "thm:bg",
            "CH(BG) = Z[beta1, beta2, gamma] / (2 gamma, gamma^2 + beta1 gamma)",
            [], ["bg.s2_table", "bg.excision", "bg.grothendieck", "bg.ring"],
            group_checks::bg
        ),
        check!(
            "pushbg", "pushbg",
            "transfer along BT -> BG on examples, degree doubling and the projection formula",
            ["thm:bg"], ["bg.pushforward"],
            group_checks::pushbg
        ),
        check!(
            "npower", "npower",
            "Chern classes of W_n from the tensor recursion agree with the closed form",
            ["thm:bg"], ["bg.wn"],
            group_checks::npower
        ),
        check!(
            "srj-table", "rec",
            "s_6^j for j <= 4 over BGL2",
            [], ["open.s6_table"],
            open::srj_table_check
        ),
        check!(
            "groth", "groth",
            "the Grothendieck relation on P V_6 factors as stated",
            [], ["open.grothendieck"],
            open::groth
        ),
        check!(
            "cub2-compat", "aw",
            "cubing commutes with multiplication on the generators s_1^i x s_1^j",
            [], ["open.cub2"],
            open::cub2
        ),
        check!(
            "sij-expansions", "lm:z",
            "s_ij and s_02' in the s_6 basis and as polynomials in t",
            [], ["open.sij", "open.sij_polys"],
            open::sij
        ),
        check!(
            "det-7x7", "lm:z",
            "the 7 x 7 coefficient matrix has determinant 86400 (lambda1^2 - 4 lambda2)^3",
            ["sij-expansions"], ["open.sij", "open.det"],
            open::det
        ),
        check!(
            "rewrite-identities", "45",
            "s10, s00 and s02' rewritten around t - 2 lambda1",
            ["sij-expansions"], ["open.sij_polys", "open.rewrites"],
            open::rewrites
        ),
        check!(
            "open-membership", "lm:z",
            "the open stratum over Gm is Z[lambda1, lambda2, t] / (s00, s10, s02')",
            ["groth"], [],
            open::membership
        ),
        check!(
            "thm45", "45",
            "CH(M2bar - Delta1) = Z[lambda1, lambda2] / (24 lambda1^2 - 48 lambda2, 20 lambda1 lambda2)",
            ["sij-expansions", "open-membership"], ["open.sij_polys", "open.quotient"],
            open::thm45
        ),
        check!(
            "thm45-kernel", "45",
            "the kernel of t - 2 lambda1 is generated in degrees 3 and 4 by the stated classes",
            ["sij-expansions", "open-membership"], ["open.sij_polys", "open.kernel"],
            open::thm45_kernel
        ),
        check!(
            "adelta1", "adelta1",
            "CH(Delta1) = Z[lambda1, lambda2, gamma] / (2 gamma, gamma^2 + lambda1 gamma, 24 lambda1^2 - 48 lambda2, 24 lambda1 lambda2)",
            ["thm:bg", "pushbg"], ["delta1.euler", "delta1.subbundle", "delta1.pushes", "delta1.ring"],
            boundary::adelta1
        ),
        check!(
            "kappa", "kappa",
            "the degree-2 part of c(Hodge) / c(omega) c(singular locus)",
            [], ["grr.kappa"],
            boundary::kappa
        ),
        check!(
            "delta0", "delta0",
            "delta0 = 10 lambda1 - 2 delta1 from 12 lambda1 = kappa pushed forward",
            ["kappa"], ["grr.kappa", "grr.delta0"],
            boundary::delta0
        ),
        check!(
            "rel3", "rel3",
            "20 lambda1 lambda2 - 4 delta1 lambda2 and 24 lambda1^2 - 48 lambda2 vanish on M2bar",
            ["delta0"], ["grr.delta0", "grr.relations"],
            boundary::rel3
        ),
        check!(
            "delta1delta1", "delta1delta1",
            "pushforward from Delta1 is gamma -> delta1 + lambda1 followed by multiplication by delta1",
            ["adelta1"], ["boundary.pushes", "boundary.relations", "delta1.ring", "main.ring"],
            boundary::delta1delta1
        ),
        check!(
            "kernel-deg3", "sec:tofinite",
            "the degree-3 kernel of gamma - lambda1 on CH(Delta1) and its pushforward",
            ["adelta1", "delta1delta1"], ["delta1.ring", "main.ring", "kernel3.classes", "kernel3.targets"],
            boundary::kernel_deg3
        ),
        check!(
            "im5", "im5",
            "the image of the degree-5 generator vanishes in CH^4(Delta1)",
            ["rewrite-identities", "thm45-kernel", "adelta1", "rel3"],
            ["open.kernel", "open.rewrites", "delta1.ring", "im5.class", "grr.relations", "main.ring"],
            boundary::im5
        ),
        check!(
            "thm:main", "thm:main",
            "CH(M2bar) = Z[lambda1, lambda2, delta1] / (24 lambda1^2 - 48 lambda2, 20 lambda1 lambda2 - 4 delta1 lambda2, delta1^3 + delta1^2 lambda1, 2 delta1^2 + 2 delta1 lambda1)",
            ["thm45", "adelta1", "rel3", "delta1delta1"],
            ["delta1.ring", "grr.relations", "main.six", "main.ring", "open.quotient"],
            boundary::main
        ),
        check!(
            "bielliptic-euler", "subsec:zero",
            "Euler classes of V_3(1) and V_1(-1) x W_-2 over the bielliptic group",
            ["thm:bg"], ["biell.euler"],
            bielliptic::euler
        ),
        check!(
            "relzero", "relzero",
            "relations from the zero section of V_1(-1) x W_-2",
            ["bielliptic-euler", "pushbg"], ["biell.subbundle", "biell.relzero"],
            bielliptic::relzero
        ),
        check!(
            "reltrip", "reltrip",
            "relations from forms with a triple or repeated factor",
            ["thm:bg", "pushbg"], ["biell.s3_table", "biell.square_class", "biell.reltrip"],
            bielliptic::reltrip
        ),
        check!(
            "bielliptic-ring", "sec:biell",
            "the bielliptic locus in terms of gamma, delta1, lambda1, lambda2",
            ["relzero", "reltrip"],
            ["biell.relzero", "biell.reltrip", "biell.tautological", "biell.substitution", "biell.ring"],
            bielliptic::ring_check
        ),
        check!(
            "bielliptic-mod2", "sec:biell",
            "mod 2 the bielliptic ring is (gamma^2 + lambda1 gamma, delta1^2 + delta1 gamma) and the three classes survive",
            ["bielliptic-ring", "thm:main"],
            ["biell.ring", "biell.mod2", "biell.nonvanishing", "main.ring", "kernel3.targets"],
            bielliptic::mod2
        ),
        check!(
            "oracle-agreement", "oracle",
            "Gröbner and Smith normal form membership agree on every pipeline ring",
            [], ["bg.ring", "open.sij_polys", "open.quotient", "delta1.ring", "main.ring", "biell.ring"],
            oracle::agreement
        ),
    ];
    CHECKS
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn find_check(id: &str) -> Option<&'static CheckSpec> {
    registry().iter().find(|c| c.id == id)
}

/// Checks that consume `id` directly or transitively.
pub fn dependents(id: &str) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in registry() {
        if c.depends_on.iter().any(|d| *d == id || out.contains(d)) {
            out.push(c.id);
        }
    }
    out
}

/// Checks that read `claim`, together with everything depending on them.
pub fn affected_by_claim(claim: &str) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in registry() {
        if c.reads.contains(&claim) || c.depends_on.iter().any(|d| out.contains(d)) {
            out.push(c.id);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// `None` runs every check.
    pub selected: Option<Vec<String>>,
    pub max_degree: u32,
    pub fail_fast: bool,
    pub fault: Option<Fault>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            selected: None,
            max_degree: 10,
            fail_fast: false,
            fault: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub max_degree: u32,
    pub checks: Vec<LemmaCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn records(&self) -> Vec<CheckRecord> {
        self.checks.iter().map(CheckRecord::from).collect()
    }
}

pub const MIN_DEGREE: u32 = 5;

pub fn verify_all(config: &RunConfig) -> Result<VerificationReport> {
    if config.max_degree < MIN_DEGREE {
        return Err(Error::Unsupported(format!(
            "max degree {} is below {MIN_DEGREE}",
            config.max_degree
        )));
    }
    let specs: Vec<&CheckSpec> = match &config.selected {
        None => registry().iter().collect(),
        Some(ids) => {
            for id in ids {
                if find_check(id).is_none() {
                    return Err(Error::UnknownVariable(format!("check {id}")));
                }
            }
            registry().iter().filter(|c| ids.iter().any(|i| i == c.id)).collect()
        }
    };
    let mut claims = Claims::stated();
    if let Some(f) = &config.fault {
        claims.apply(f)?;
    }
    let ctx = Ctx {
        claims,
        max_degree: config.max_degree,
    };
    let mut checks = Vec::new();
    for spec in specs {
        let c = run_check(spec, &ctx);
        let failed = c.status == Status::Fail;
        checks.push(c);
        if failed && config.fail_fast {
            break;
        }
    }
    Ok(VerificationReport {
        max_degree: config.max_degree,
        checks,
    })
}

fn run_check(spec: &CheckSpec, ctx: &Ctx) -> LemmaCheck {
    let start = Instant::now();
    let mut rec = Recorder::new();
    ctx.claims.take_accessed();
    if let Err(e) = (spec.run)(ctx, &mut rec) {
        rec.fail(format!("error: {e}"));
    }
    for key in ctx.claims.take_accessed() {
        if !spec.reads.contains(&key.as_str()) {
            rec.fail(format!("reads undeclared claim {key}"));
        }
    }
    let witness = rec.witness();
    LemmaCheck {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        statement: spec.statement.to_string(),
        status: if rec.passed() { Status::Pass } else { Status::Fail },
        witness_digest: digest(&witness),
        witness,
        elapsed: start.elapsed(),
    }
}

/// Anchor, statement, dependencies, claims and the witness of one check.
#[derive(Clone, Debug)]
pub struct Explanation {
    pub spec: &'static CheckSpec,
    pub claims: Vec<(String, Claim)>,
    pub result: LemmaCheck,
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.spec.id, self.spec.anchor)?;
        writeln!(f, "  {}", self.spec.statement)?;
        if !self.spec.depends_on.is_empty() {
            writeln!(f, "depends on: {}", self.spec.depends_on.join(", "))?;
        }
        for (k, c) in &self.claims {
            writeln!(f, "claim {k}:")?;
            for r in &c.rows {
                writeln!(f, "  {}", r.join(" | "))?;
            }
        }
        writeln!(f, "status: {}", self.result.status)?;
        writeln!(f, "witness (sha256 {}):", self.result.witness_digest)?;
        write!(f, "{}", self.result.witness)
    }
}

pub fn explain(id: &str, max_degree: u32) -> Result<Explanation> {
    let spec = find_check(id).ok_or_else(|| Error::UnknownVariable(format!("check {id}")))?;
    let report = verify_all(&RunConfig {
        selected: Some(vec![id.to_string()]),
        max_degree,
        ..RunConfig::default()
    })?;
    let claims = Claims::stated();
    let claims = spec
        .reads
        .iter()
        .map(|k| Ok((k.to_string(), claims.get(k)?.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Explanation {
        spec,
        claims,
        result: report.checks.into_iter().next().expect("one check selected"),
    })
}
