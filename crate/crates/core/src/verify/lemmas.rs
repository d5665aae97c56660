//! Branch counts at the singular points of D_f against their predicted values.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::curve::survey::{singularity_survey, Group, SingularPoint};
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::linpoly::LinPoly;

use super::claim::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchLemma {
    /// Every k_i >= t (i >= 1); R points with xi outside F_{q^t} carry one branch.
    RUnique,
    /// Every k_i >= t (i >= 1); R points with xi in F_{q^t} carry one branch.
    RUniqueSubfield,
    /// 1 = k_1 < t < k_2, k_M >= t + 2; R points with xi outside F_{q^t}.
    RUniqueLowTerm,
    /// 1 = k_1 < t < k_2, k_M >= t + 2; R points with xi in F_{q^t}.
    RUniqueLowTermSubfield,
    /// k_M >= t: q^t branches at S_1 if t | k_M, else q^gcd(s, t) with s = k_M mod t.
    S1Count,
}

impl BranchLemma {
    pub const ALL: [BranchLemma; 5] = [
        BranchLemma::RUnique,
        BranchLemma::RUniqueSubfield,
        BranchLemma::RUniqueLowTerm,
        BranchLemma::RUniqueLowTermSubfield,
        BranchLemma::S1Count,
    ];

    pub fn claim_id(self) -> &'static str {
        match self {
            BranchLemma::RUnique => "branches-r-unique",
            BranchLemma::RUniqueSubfield => "branches-r-unique-subfield",
            BranchLemma::RUniqueLowTerm => "branches-r-unique-low-term",
            BranchLemma::RUniqueLowTermSubfield => "branches-r-unique-low-term-subfield",
            BranchLemma::S1Count => "branches-s1",
        }
    }

    /// The failed hypothesis, if any.
    pub fn hypothesis(self, f: &LinPoly, t: u32) -> Option<String> {
        if t == 0 {
            return Some("index t must be positive".into());
        }
        if !f.is_normalized(t) {
            return Some("f must be normalized for index t".into());
        }
        let ks: Vec<u32> = f.terms().iter().map(|&(k, _)| k).collect();
        let km = f.k_max();
        match self {
            BranchLemma::RUnique | BranchLemma::RUniqueSubfield => {
                if km <= t {
                    return Some(format!("k_M = {km} must exceed t = {t}"));
                }
                if let Some(k) = ks.iter().skip(1).find(|&&k| k < t) {
                    return Some(format!("term of q-degree {k} below t = {t}"));
                }
                None
            }
            BranchLemma::RUniqueLowTerm | BranchLemma::RUniqueLowTermSubfield => {
                if ks.len() < 3 || ks[1] != 1 || !(1 < t && t < ks[2]) {
                    return Some(format!("need 1 = k_1 < t < k_2, got degrees {ks:?}"));
                }
                if km < t + 2 {
                    return Some(format!("need k_M >= t + 2, got k_M = {km}"));
                }
                None
            }
            BranchLemma::S1Count => (km < t).then(|| format!("need k_M >= t, got k_M = {km}")),
        }
    }

    fn predicted_s1(q: u64, t: u32, km: u32) -> u64 {
        if km % t == 0 {
            q.pow(t)
        } else {
            q.pow(crate::gf::numth::gcd((km % t) as u64, t as u64) as u32)
        }
    }
}

fn is_s1(p: &SingularPoint) -> bool {
    p.group == Group::S && p.xi.as_ref().map_or(false, |c| c[0] == 1 && c[1..].iter().all(|&v| v == 0))
}

/// Runs the survey and compares branch counts for one lemma.
pub fn check_branch_lemma(
    f: &LinPoly,
    t: u32,
    lemma: BranchLemma,
    ext_bound: u32,
    budget: u32,
) -> Result<(Outcome, serde_json::Value)> {
    if let Some(why) = lemma.hypothesis(f, t) {
        return Err(Error::HypothesisViolation(why));
    }
    let rep = singularity_survey(f, t, ext_bound, budget)?;
    let work = FieldCtx::parse(&rep.field)?;
    let in_qt = |c: &Vec<u64>| -> bool {
        let xi = work.from_coords(c).expect("coordinates from the survey field");
        work.in_subfield(xi, t)
    };
    let mut checked = Vec::new();
    let mut outcome = Outcome::Pass;
    let mut note = |o: Outcome| {
        outcome = match (outcome, o) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Unresolved, _) | (_, Outcome::Unresolved) => Outcome::Unresolved,
            _ => Outcome::Pass,
        }
    };
    for p in &rep.points {
        let (relevant, predicted) = match lemma {
            BranchLemma::RUnique | BranchLemma::RUniqueLowTerm => {
                (p.group == Group::R && !in_qt(p.xi.as_ref().unwrap()), 1)
            }
            BranchLemma::RUniqueSubfield | BranchLemma::RUniqueLowTermSubfield => {
                (p.group == Group::R && in_qt(p.xi.as_ref().unwrap()), 1)
            }
            BranchLemma::S1Count => (is_s1(p), BranchLemma::predicted_s1(work.q(), t, f.k_max())),
        };
        if !relevant {
            continue;
        }
        let got = p.branches.count();
        let mut ok = match got {
            Some(b) => b == predicted,
            None => {
                note(Outcome::Unresolved);
                true
            }
        };
        if let Some(b) = &p.bespoke {
            let agrees = b.replay_ok
                && b.error.is_none()
                && b.trace_branches.as_ref().and_then(|c| c.count()) == Some(predicted);
            ok &= agrees;
        }
        if !ok {
            note(Outcome::Fail);
        }
        checked.push(json!({
            "xi": p.xi,
            "multiplicity": p.multiplicity,
            "branches": p.branches,
            "predicted": predicted,
            "bespoke": p.bespoke,
        }));
    }
    if checked.is_empty() {
        outcome = Outcome::Skipped;
    }
    let evidence = json!({
        "survey_field": rep.field,
        "points_checked": checked.len(),
        "points": checked,
    });
    Ok((outcome, evidence))
}

/// The lemmas whose hypotheses hold for (f, t).
pub fn applicable(f: &LinPoly, t: u32) -> Vec<BranchLemma> {
    BranchLemma::ALL.iter().copied().filter(|l| l.hypothesis(f, t).is_none()).collect()
}
