//! Claim records: a replayable parameter set, its outcome and the evidence.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::linpoly::LinPoly;

use super::classify::{exhaustive_classify, is_mismatch, survives, DEFAULT_CLASSIFY_BUDGET};
use super::ineq::{evaluate, point_bound_positive};
use super::lemmas::{check_branch_lemma, BranchLemma};
use super::sporadic::{witness_search, SporadicCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
    Unresolved,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimSpec {
    Inequality {
        q: u64,
        t: u32,
        k_max: u32,
        /// Degrees r at which the final point-count bound is evaluated.
        sample_r: Vec<u32>,
    },
    BranchLemma {
        field: String,
        poly: String,
        t: u32,
        lemma: BranchLemma,
        ext_bound: u32,
        budget: u32,
    },
    Classify {
        field: String,
        t: u32,
        max_km: u32,
        probe_m: u32,
        orbit_reduction: bool,
    },
    ClassifyPoly {
        field: String,
        poly: String,
        t: u32,
        probe_m: u32,
    },
    Sporadic {
        field: String,
        case: SporadicCase,
        a: Option<Vec<u64>>,
        b: Vec<u64>,
        r_max: u32,
        budget: u64,
    },
}

impl ClaimSpec {
    pub fn claim_id(&self) -> String {
        match self {
            ClaimSpec::Inequality { .. } => "intersection-bound".into(),
            ClaimSpec::BranchLemma { lemma, .. } => lemma.claim_id().into(),
            ClaimSpec::Classify { .. } => "classify-exhaustive".into(),
            ClaimSpec::ClassifyPoly { .. } => "classify-survivor".into(),
            ClaimSpec::Sporadic { .. } => "sporadic-witness".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub key: String,
    pub spec: ClaimSpec,
    pub outcome: Outcome,
    pub evidence: Value,
}

/// Hex SHA-256 of the canonical JSON of (claim_id, spec). Object keys are
/// sorted by serde_json's default map, so the encoding is canonical.
pub fn claim_key(spec: &ClaimSpec) -> String {
    let v = json!({ "claim_id": spec.claim_id(), "spec": serde_json::to_value(spec).expect("serializable") });
    let s = serde_json::to_string(&v).expect("serializable");
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn record(spec: ClaimSpec, outcome: Outcome, evidence: Value) -> ClaimRecord {
    ClaimRecord { claim_id: spec.claim_id(), key: claim_key(&spec), spec, outcome, evidence }
}

fn poly_of(field: &str, poly: &str) -> Result<(FieldCtx, LinPoly)> {
    let ctx = FieldCtx::parse(field)?;
    let f = LinPoly::parse(&ctx, poly)?;
    Ok((ctx, f))
}

/// Evaluates a claim from its parameters.
pub fn run(spec: &ClaimSpec) -> Result<ClaimRecord> {
    match spec {
        ClaimSpec::Inequality { q, t, k_max, sample_r } => {
            if *t < 2 {
                return Err(Error::HypothesisViolation("t must be at least 2".into()));
            }
            let e = evaluate(*q, *t, *k_max);
            let bounds: Vec<Value> = sample_r
                .iter()
                .map(|&r| json!({ "r": r, "positive": point_bound_positive(*q, *t, *k_max, r) }))
                .collect();
            let all_pos = sample_r.iter().all(|&r| point_bound_positive(*q, *t, *k_max, r));
            let outcome = if e.contradiction && all_pos { Outcome::Pass } else { Outcome::Fail };
            Ok(record(spec.clone(), outcome, json!({ "inequality": e, "point_bound": bounds })))
        }
        ClaimSpec::BranchLemma { field, poly, t, lemma, ext_bound, budget } => {
            let (_, f) = poly_of(field, poly)?;
            let (outcome, evidence) = check_branch_lemma(&f, *t, *lemma, *ext_bound, *budget)?;
            Ok(record(spec.clone(), outcome, evidence))
        }
        ClaimSpec::Classify { field, t, max_km, probe_m, orbit_reduction } => {
            let ctx = FieldCtx::parse(field)?;
            let r = exhaustive_classify(&ctx, *t, *max_km, *probe_m, *orbit_reduction, DEFAULT_CLASSIFY_BUDGET)?;
            let outcome = if r.mismatches.is_empty() { Outcome::Pass } else { Outcome::Fail };
            Ok(record(spec.clone(), outcome, serde_json::to_value(&r).expect("serializable")))
        }
        ClaimSpec::ClassifyPoly { field, poly, t, probe_m } => {
            let (_, f) = poly_of(field, poly)?;
            let surv = survives(&f, *t, *probe_m)?;
            let mism = surv && is_mismatch(&f, *t);
            let outcome = if mism { Outcome::Fail } else { Outcome::Pass };
            Ok(record(spec.clone(), outcome, json!({ "survivor": surv, "mismatch": mism })))
        }
        ClaimSpec::Sporadic { field, case, a, b, r_max, budget } => {
            if case.excluded() {
                return Ok(record(
                    spec.clone(),
                    Outcome::Skipped,
                    json!({ "reason": "exponents in arithmetic progression" }),
                ));
            }
            let ctx = FieldCtx::parse(field)?;
            let a = a.as_ref().map(|c| ctx.from_coords(c)).transpose()?;
            let b = ctx.from_coords(b)?;
            let f = case.build(&ctx, a, b)?;
            let w = witness_search(&f, case.index(), *r_max, *budget)?;
            let outcome = if w.found.is_some() { Outcome::Pass } else { Outcome::Unresolved };
            Ok(record(spec.clone(), outcome, serde_json::to_value(&w).expect("serializable")))
        }
    }
}

/// Re-runs a stored claim; Ok(true) when outcome and evidence match exactly.
pub fn replay(rec: &ClaimRecord) -> Result<bool> {
    if claim_key(&rec.spec) != rec.key {
        return Err(Error::DiscrepancyAlert(format!("stored key {} does not match its parameters", rec.key)));
    }
    let fresh = run(&rec.spec)?;
    Ok(fresh.outcome == rec.outcome && fresh.evidence == rec.evidence)
}

pub fn check_inequalities(q: u64, t: u32, k_max: u32) -> Result<ClaimRecord> {
    let sample_r = vec![5 * k_max, 5 * k_max + 1, 6 * k_max, 10 * k_max];
    run(&ClaimSpec::Inequality { q, t, k_max, sample_r })
}

/// One record per lemma whose hypotheses hold for each instance.
pub fn verify_branch_lemmas(instances: &[(LinPoly, u32)], ext_bound: u32, budget: u32) -> Result<Vec<ClaimRecord>> {
    let mut out = Vec::new();
    for (f, t) in instances {
        let lemmas = super::lemmas::applicable(f, *t);
        if lemmas.is_empty() {
            let why = BranchLemma::S1Count.hypothesis(f, *t).unwrap_or_else(|| "no lemma applies".into());
            return Err(Error::HypothesisViolation(why));
        }
        for lemma in lemmas {
            out.push(run(&ClaimSpec::BranchLemma {
                field: f.ctx().spec_string(),
                poly: f.to_text(),
                t: *t,
                lemma,
                ext_bound,
                budget,
            })?);
        }
    }
    Ok(out)
}

/// Summary record followed by one record per mismatching survivor.
pub fn classify_records(field: &FieldCtx, t: u32, max_km: u32, probe_m: u32, orbit_reduction: bool) -> Result<Vec<ClaimRecord>> {
    let spec = ClaimSpec::Classify { field: field.spec_string(), t, max_km, probe_m, orbit_reduction };
    let summary = run(&spec)?;
    let mism: Vec<String> = summary.evidence["mismatches"]
        .as_array()
        .map(|a| a.iter().filter_map(|v| v.as_str().map(String::from)).collect())
        .unwrap_or_default();
    let mut out = vec![summary];
    for poly in mism {
        out.push(run(&ClaimSpec::ClassifyPoly { field: field.spec_string(), poly, t, probe_m })?);
    }
    Ok(out)
}

pub fn sporadic_witness(
    field: &FieldCtx,
    case: SporadicCase,
    a: Option<Vec<u64>>,
    b: Vec<u64>,
    r_max: u32,
    budget: u64,
) -> Result<ClaimRecord> {
    run(&ClaimSpec::Sporadic { field: field.spec_string(), case, a, b, r_max, budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_is_stable_and_parameter_sensitive() {
        let a = ClaimSpec::Inequality { q: 2, t: 2, k_max: 6, sample_r: vec![30] };
        let b = ClaimSpec::Inequality { q: 2, t: 2, k_max: 7, sample_r: vec![30] };
        assert_eq!(claim_key(&a), claim_key(&a.clone()));
        assert_ne!(claim_key(&a), claim_key(&b));
        assert_eq!(claim_key(&a).len(), 64);
    }

    #[test]
    fn inequality_records_replay() {
        let r = check_inequalities(2, 2, 6).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(replay(&r).unwrap());
        let s = serde_json::to_string(&r).unwrap();
        let back: ClaimRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(check_inequalities(2, 2, 4).unwrap().outcome, Outcome::Fail);
    }

    #[test]
    fn tampered_record_detected() {
        let mut r = check_inequalities(3, 2, 6).unwrap();
        r.outcome = Outcome::Fail;
        assert!(!replay(&r).unwrap());
        r.key = "00".into();
        assert!(matches!(replay(&r), Err(Error::DiscrepancyAlert(_))));
    }

    #[test]
    fn branch_lemma_records() {
        let ctx = FieldCtx::new(2, 1, 6).unwrap();
        let f = LinPoly::from_degrees(&ctx, &[0, 5]).unwrap();
        let recs = verify_branch_lemmas(&[(f, 2)], 8, 200).unwrap();
        let s1 = recs.iter().find(|r| r.claim_id == "branches-s1").unwrap();
        assert_eq!(s1.outcome, Outcome::Pass);
        let r = recs.iter().find(|r| r.claim_id == "branches-r-unique").unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.evidence["points_checked"], 6);
        for rec in &recs {
            assert!(replay(rec).unwrap());
        }
    }

    #[test]
    fn hypothesis_violation() {
        let ctx = FieldCtx::new(2, 1, 4).unwrap();
        let f = LinPoly::from_degrees(&ctx, &[1]).unwrap();
        assert!(matches!(verify_branch_lemmas(&[(f, 0)], 8, 200), Err(Error::HypothesisViolation(_))));
    }
}
