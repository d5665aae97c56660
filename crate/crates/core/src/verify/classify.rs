//! Exhaustive search over small normalized polynomials and comparison of the
//! survivors with the known scattered families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::numth::gcd;
use crate::gf::{FieldCtx, FieldElement};
use crate::linpoly::LinPoly;
use crate::scatter::exceptional_probe;

pub const DEFAULT_CLASSIFY_BUDGET: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Template {
    /// X^(q^k) (index 0) or X (positive index).
    Pseudoregulus,
    /// delta X^(q^s) + X^(q^(n-s)), gcd(s, n) = 1, N(delta) != 1 (index 0), or
    /// delta X + X^(q^(2t)), N(delta) != 1 (index t).
    LpSheekey,
    /// delta X^(q^s) + X^(q^(n/2 + s)) for n in {6, 8}.
    HalfShift,
}

/// Known family matching a normalized (f, t), if any.
pub fn family_classify(f: &LinPoly, t: u32) -> Option<Template> {
    let ctx = f.ctx();
    let n = ctx.n();
    let terms = f.terms();
    let norm_ok = |a: FieldElement| ctx.norm(a) != ctx.one();
    match (t, terms) {
        (0, [_]) => Some(Template::Pseudoregulus),
        (0, [(s, d), (k, _)]) => {
            if s + k == n && gcd(*s as u64, n as u64) == 1 && norm_ok(*d) {
                Some(Template::LpSheekey)
            } else if (n == 6 || n == 8) && *k == s + n / 2 {
                Some(Template::HalfShift)
            } else {
                None
            }
        }
        (_, [(0, _)]) if t > 0 => Some(Template::Pseudoregulus),
        (_, [(0, d), (k, _)]) if t > 0 && *k == 2 * t && norm_ok(*d) => Some(Template::LpSheekey),
        _ => None,
    }
}

/// At least two terms of q-degree strictly between 0 and t.
pub fn has_two_low_terms(f: &LinPoly, t: u32) -> bool {
    f.terms().iter().filter(|&&(k, _)| k > 0 && k < t).count() >= 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub poly: String,
    pub template: Option<Template>,
    /// Number of polynomials in the Frobenius orbit this one represents.
    pub orbit: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub enumerated: u64,
    pub representatives: u64,
    pub survivors: Vec<Survivor>,
    /// Survivors matching no template (and, for t >= 2, lacking two low terms).
    pub mismatches: Vec<String>,
}

/// Survivor status of one polynomial: scattered over F_{q^(mn)} for all m <= probe_m.
pub fn survives(f: &LinPoly, t: u32, probe_m: u32) -> Result<bool> {
    Ok(exceptional_probe(f, t, probe_m)?.into_iter().all(|b| b))
}

pub fn is_mismatch(f: &LinPoly, t: u32) -> bool {
    family_classify(f, t).is_none() && !(t >= 2 && has_two_low_terms(f, t))
}

/// Coefficient tuples indexed by field-element index, canonical under the
/// simultaneous Frobenius a -> a^q when `orbit_reduction` is set.
fn canonical(ctx: &FieldCtx, c: &[FieldElement]) -> Option<u64> {
    let mut orbit = 1u64;
    let key: Vec<u64> = c.iter().map(|a| a.index()).collect();
    let mut cur = c.to_vec();
    for _ in 1..ctx.n() {
        cur = cur.iter().map(|&a| ctx.frobenius(a, 1)).collect();
        let k: Vec<u64> = cur.iter().map(|a| a.index()).collect();
        if k < key {
            return None;
        }
        if k == key {
            break;
        }
        orbit += 1;
    }
    Some(orbit)
}

pub fn exhaustive_classify(
    ctx: &FieldCtx,
    t: u32,
    max_km: u32,
    probe_m: u32,
    orbit_reduction: bool,
    budget: u64,
) -> Result<ClassifyResult> {
    let top = ctx.extension(probe_m)?;
    if top.order() > budget {
        return Err(Error::BudgetExceeded(format!("probe field of order {} exceeds {budget}", top.order())));
    }
    let degrees: Vec<u32> = (0..=max_km).filter(|&k| k != t).collect();
    let nonzero: Vec<FieldElement> = ctx.nonzero().collect();
    let mut res = ClassifyResult { enumerated: 0, representatives: 0, survivors: Vec::new(), mismatches: Vec::new() };
    for mask in 1u64..(1 << degrees.len()) {
        let support: Vec<u32> = degrees.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &k)| k).collect();
        if t > 0 && support[0] != 0 {
            continue;
        }
        let free = support.len() - 1;
        let total = (nonzero.len() as u64).pow(free as u32);
        for code in 0..total {
            let mut c = Vec::with_capacity(free);
            let mut v = code;
            for _ in 0..free {
                c.push(nonzero[(v % nonzero.len() as u64) as usize]);
                v /= nonzero.len() as u64;
            }
            res.enumerated += 1;
            let orbit = if orbit_reduction {
                match canonical(ctx, &c) {
                    Some(o) => o,
                    None => continue,
                }
            } else {
                1
            };
            res.representatives += 1;
            let mut terms: Vec<(u32, FieldElement)> = support[..free].iter().copied().zip(c.iter().copied()).collect();
            terms.push((support[free], ctx.one()));
            let f = LinPoly::new(ctx, terms)?;
            if !survives(&f, t, probe_m)? {
                continue;
            }
            let template = family_classify(&f, t);
            if is_mismatch(&f, t) {
                res.mismatches.push(f.to_text());
            }
            res.survivors.push(Survivor { poly: f.to_text(), template, orbit });
        }
    }
    Ok(res)
}
