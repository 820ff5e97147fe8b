//! Row-by-row checking of orbit tables.
//!
//! A row passes when every step is a legal clause instance, the chain runs
//! from the recorded centralizer to the ambient group, and the largest prime
//! bound demanded along the way is at most the smallest good prime of the
//! ambient group. Verdicts are plain data so a batch run reports every
//! failure rather than stopping at the first.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{decompose_dual_weyl, dual_weyl_character};
use crate::embeddings::{analyze_step, compose, restrict_character, EmbeddingStep, WeightMap};
use crate::nilpotent::{Chain, OrbitRecord};
use crate::rootsystem::{normal_form, GroupType, Letter, RootDatum, Weight};
use crate::{Error, Result};

/// Smallest prime that is good for every simple factor of `g`.
pub fn good_prime_bound(g: &GroupType) -> Result<u64> {
    let mut p = 2;
    for f in &g.factors {
        let q = match f.letter {
            Letter::A | Letter::T => 2,
            // B1, C1 are A1; D1, D2, D3 are T1, A1A1, A3.
            Letter::B | Letter::C if f.rank == 1 => 2,
            Letter::D if f.rank <= 3 => 2,
            Letter::B | Letter::C | Letter::D => 3,
            Letter::G | Letter::F => 5,
            Letter::E if f.rank == 8 => 7,
            Letter::E => 5,
        };
        p = p.max(q);
    }
    Ok(p)
}

/// Verdict on one chain step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    pub step: String,
    pub legal: bool,
    pub reason: String,
    pub p_min: u64,
}

/// Checks one step against the clause catalogue.
pub fn check_step(step: &EmbeddingStep) -> StepVerdict {
    let a = analyze_step(step);
    StepVerdict {
        step: format!("{}{}{}", step.sub, step.arrow(), step.amb),
        legal: a.legal,
        reason: a.reason,
        p_min: a.p_min,
    }
}

/// Outcome of [`verify_record`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ambient: String,
    pub label: String,
    pub line: usize,
    pub steps: Vec<StepVerdict>,
    pub endpoints_ok: bool,
    /// Empty when the endpoints match.
    pub endpoint_note: String,
    pub p_min: u64,
    pub good_prime: u64,
    pub passed: bool,
}

fn same_type(a: &GroupType, b: &GroupType) -> bool {
    normal_form(a).0 == normal_form(b).0
}

/// Checks every step of a record, its endpoints, and its prime bound.
pub fn verify_record(rec: &OrbitRecord) -> VerificationReport {
    let good_prime = good_prime_bound(&rec.ambient).unwrap_or(2);
    let mut report = VerificationReport {
        ambient: rec.ambient.to_string(),
        label: rec.label.clone(),
        line: rec.line,
        steps: Vec::new(),
        endpoints_ok: true,
        endpoint_note: String::new(),
        p_min: 1,
        good_prime,
        passed: true,
    };
    let Chain::Steps { start, steps } = &rec.chain else {
        // Restriction to a torus needs no argument.
        return report;
    };
    report.steps = steps.iter().map(check_step).collect();
    report.p_min = report.steps.iter().map(|s| s.p_min).max().unwrap_or(1);
    let end = rec.chain.end().expect("chain has steps");
    let mut notes = Vec::new();
    if !same_type(start, &rec.centralizer) {
        notes.push(format!("chain starts at {start}, centralizer is {}", rec.centralizer));
    }
    if !same_type(end, &rec.ambient) {
        notes.push(format!("chain ends at {end}, ambient is {}", rec.ambient));
    }
    report.endpoints_ok = notes.is_empty();
    report.endpoint_note = notes.join("; ");
    report.passed = report.steps.iter().all(|s| s.legal) && report.endpoints_ok && report.p_min <= good_prime;
    report
}

/// Result of a character spot check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpotCheck {
    /// Exact nonnegative decomposition, highest weight -> multiplicity.
    Pass(Vec<(Weight, BigInt)>),
    Fail(String),
    Skipped(String),
}

impl SpotCheck {
    pub fn status(&self) -> &'static str {
        match self {
            SpotCheck::Pass(_) => "PASS",
            SpotCheck::Fail(_) => "FAIL",
            SpotCheck::Skipped(_) => "SKIPPED",
        }
    }
}

impl fmt::Display for SpotCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpotCheck::Pass(terms) => {
                let parts: Vec<String> = terms.iter().map(|(w, m)| format!("{m}*{w}")).collect();
                write!(f, "PASS {}", parts.join(" + "))
            }
            SpotCheck::Fail(why) => write!(f, "FAIL {why}"),
            SpotCheck::Skipped(why) => write!(f, "SKIPPED {why}"),
        }
    }
}

/// Restriction map from the end of a chain to its start, if every step has one.
pub fn chain_map(start: &GroupType, steps: &[EmbeddingStep]) -> std::result::Result<WeightMap, String> {
    let mut total: Option<WeightMap> = None;
    for step in steps.iter().rev() {
        let a = analyze_step(step);
        if !a.legal {
            return Err(format!("illegal step {}{}{}: {}", step.sub, step.arrow(), step.amb, a.reason));
        }
        let Some(m) = a.map else {
            let why = a.map_note.unwrap_or_default();
            return Err(format!("no weight map for {}{}{}: {why}", step.sub, step.arrow(), step.amb));
        };
        total = Some(match total {
            None => m,
            Some(t) => compose(&t, &m).map_err(|e| e.to_string())?,
        });
    }
    Ok(total.unwrap_or_else(|| WeightMap::identity(start)))
}

/// Restricts `∇(λ)` of the chain's last group to its first group and
/// checks that the result has a nonnegative dual Weyl decomposition.
pub fn spot_check(rec: &OrbitRecord, lambda: &Weight) -> SpotCheck {
    let Chain::Steps { start, steps } = &rec.chain else {
        return SpotCheck::Skipped("torus centralizer".into());
    };
    let end = rec.chain.end().expect("chain has steps");
    let map = match chain_map(start, steps) {
        Ok(m) => m,
        Err(why) => return SpotCheck::Skipped(why),
    };
    let run = || -> Result<SpotCheck> {
        let big = RootDatum::new(end)?;
        big.require_dominant(lambda)?;
        let chi = dual_weyl_character(&big, lambda)?;
        let res = restrict_character(&chi, &map)?;
        let small = RootDatum::new(start)?;
        match decompose_dual_weyl(&small, &res) {
            Ok(d) if d.exact => Ok(SpotCheck::Pass(d.terms.into_iter().collect())),
            Ok(d) => {
                let (w, m) = d.terms.iter().find(|(_, m)| *m < &BigInt::from(0)).expect("negative term");
                Ok(SpotCheck::Fail(format!("coefficient {m} at {w}")))
            }
            Err(Error::NotSymmetric(w)) => Ok(SpotCheck::Fail(format!("restriction is not Weyl invariant at {w}"))),
            Err(e) => Err(e),
        }
    };
    run().unwrap_or_else(|e| SpotCheck::Fail(e.to_string()))
}

/// Aggregate of [`verify_all`], reports in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Verifies records in parallel.
pub fn verify_all(records: &[OrbitRecord]) -> Summary {
    let reports: Vec<VerificationReport> = records.par_iter().map(verify_record).collect();
    let passed = reports.iter().filter(|r| r.passed).count();
    Summary {
        failed: reports.len() - passed,
        passed,
        reports,
    }
}
