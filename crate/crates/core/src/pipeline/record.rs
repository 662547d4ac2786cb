use std::collections::HashMap;
use std::fmt::Display;

use crate::error::Result;
use crate::ideal::{graded_piece, GradedPieceGroup, Ideal, RingSpec};
use crate::ring::IntPolynomial;

/// Collects witness lines for one check. Every membership claim is decided
/// twice, by Gröbner reduction and by the Smith normal form oracle.
pub(crate) struct Recorder {
    lines: Vec<String>,
    ok: bool,
    pieces: HashMap<(String, u32), GradedPieceGroup>,
}

impl Recorder {
    pub fn new() -> Self {
        Recorder {
            lines: Vec::new(),
            ok: true,
            pieces: HashMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.ok
    }

    pub fn witness(&self) -> String {
        self.lines.join("\n")
    }

    pub fn fail(&mut self, line: impl Display) {
        self.ok = false;
        self.lines.push(format!("[FAIL] {line}"));
    }

    pub fn note(&mut self, line: impl Display) {
        self.lines.push(format!("       {line}"));
    }

    pub fn require(&mut self, label: &str, cond: bool, detail: impl Display) -> bool {
        if cond {
            self.lines.push(format!("[ok]   {label}: {detail}"));
        } else {
            self.fail(format!("{label}: {detail}"));
        }
        cond
    }

    pub fn equal(&mut self, label: &str, got: &IntPolynomial, want: &IntPolynomial) -> bool {
        if got == want {
            self.require(label, true, got)
        } else {
            self.require(label, false, format!("{got} != {want}"))
        }
    }

    /// Equality in a quotient ring.
    pub fn equal_in(&mut self, label: &str, ring: &RingSpec, got: &IntPolynomial, want: &IntPolynomial) -> Result<bool> {
        let diff = got.checked_sub(want)?;
        let (gb, snf) = self.decide(ring, &diff)?;
        let detail = format!("{got} == {want} in {}", ring.name);
        Ok(self.agree(label, gb, snf, true, detail))
    }

    pub fn member(&mut self, label: &str, ring: &RingSpec, p: &IntPolynomial) -> Result<bool> {
        let (gb, snf) = self.decide(ring, p)?;
        let detail = format!("{p} in {}", ring.name);
        Ok(self.agree(label, gb, snf, true, detail))
    }

    pub fn non_member(&mut self, label: &str, ring: &RingSpec, p: &IntPolynomial) -> Result<bool> {
        let (gb, snf) = self.decide(ring, p)?;
        let detail = format!("{p} not in {}", ring.name);
        Ok(self.agree(label, gb, snf, false, detail))
    }

    /// Mutual containment of generators.
    pub fn same_ideal(&mut self, label: &str, left: &RingSpec, right: &RingSpec) -> Result<bool> {
        let mut ok = true;
        for g in right.relations.generators() {
            let (gb, snf) = self.decide(left, g)?;
            ok &= gb && snf;
            if !(gb && snf) {
                self.fail(format!("{label}: {g} not in {} (gb {gb}, snf {snf})", left.name));
            }
        }
        for g in left.relations.generators() {
            let (gb, snf) = self.decide(right, g)?;
            ok &= gb && snf;
            if !(gb && snf) {
                self.fail(format!("{label}: {g} not in {} (gb {gb}, snf {snf})", right.name));
            }
        }
        if ok {
            self.require(label, true, format!("{} = {}", left.relations, right.relations));
        }
        Ok(ok)
    }

    fn agree(&mut self, label: &str, gb: bool, snf: bool, want: bool, detail: String) -> bool {
        if gb != snf {
            self.fail(format!("{label}: oracle disagreement (gb {gb}, snf {snf}) on {detail}"));
            return false;
        }
        self.require(label, gb == want, detail)
    }

    /// Membership by both engines, component by component.
    fn decide(&mut self, ring: &RingSpec, p: &IntPolynomial) -> Result<(bool, bool)> {
        let gb = ring.relations.contains(p);
        let mut snf = true;
        let degrees: Vec<u32> = {
            let mut ds: Vec<u32> = p.terms().map(|(m, _)| m.degree()).collect();
            ds.sort_unstable();
            ds.dedup();
            ds
        };
        for d in degrees {
            let key = (ring.relations.to_string(), d);
            let piece = self
                .pieces
                .entry(key)
                .or_insert_with(|| graded_piece(ring, d));
            snf &= piece.contains(&p.homogeneous_component(d))?;
        }
        Ok((gb, snf))
    }
}

pub(crate) fn ring(name: &str, ideal: Ideal) -> RingSpec {
    RingSpec::new(name, ideal)
}
