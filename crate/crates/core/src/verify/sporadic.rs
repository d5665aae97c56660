//! Witness search for the binomial and trinomial shapes that escape the
//! generic classification argument: a point (x, y) on C_f with y/x outside
//! F_q over some small extension shows f is not scattered there.

use serde::{Deserialize, Serialize};

use crate::curve::build::build_cf;
use crate::curve::census::{point_census, CensusMode};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linpoly::LinPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum SporadicCase {
    /// q = 2: X^(2^(k-1)) + b X^(2^k).
    BinomialQ2 { k: u32 },
    /// q = 2: X^(2^(k-2)) + a X^(2^(k-1)) + b X^(2^k).
    TrinomialQ2 { k: u32 },
    /// q = 3: X^(3^(k-1)) + b X^(3^k).
    BinomialQ3 { k: u32 },
    /// q = 4: X^4 + b X^16, or X^16 + b X^64 when `high`.
    BinomialQ4 { high: bool },
    /// q = 5: X^5 + b X^25.
    BinomialQ5,
    /// X^(q^lo) + b X^(q^hi) of index t.
    GeneralBinomial { t: u32, lo: u32, hi: u32 },
}

impl SporadicCase {
    /// Required q, if the shape fixes it.
    pub fn required_q(self) -> Option<u64> {
        match self {
            SporadicCase::BinomialQ2 { .. } | SporadicCase::TrinomialQ2 { .. } => Some(2),
            SporadicCase::BinomialQ3 { .. } => Some(3),
            SporadicCase::BinomialQ4 { .. } => Some(4),
            SporadicCase::BinomialQ5 => Some(5),
            SporadicCase::GeneralBinomial { .. } => None,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            SporadicCase::GeneralBinomial { t, .. } => t,
            _ => 0,
        }
    }

    /// Exponents in arithmetic progression (hi - t = t - lo), where no witness is claimed.
    pub fn excluded(self) -> bool {
        match self {
            SporadicCase::GeneralBinomial { t, lo, hi } => hi as i64 - t as i64 == t as i64 - lo as i64,
            _ => false,
        }
    }

    /// Builds f; `a` is only used by the trinomial.
    pub fn build(self, ctx: &FieldCtx, a: Option<FieldElement>, b: FieldElement) -> Result<LinPoly> {
        if let Some(q) = self.required_q() {
            if ctx.q() != q {
                return Err(Error::InvalidArgument(format!("shape needs q = {q}, got q = {}", ctx.q())));
            }
        }
        let one = ctx.one();
        let terms = match self {
            SporadicCase::BinomialQ2 { k } | SporadicCase::BinomialQ3 { k } => {
                if k == 0 {
                    return Err(Error::InvalidArgument("k must be positive".into()));
                }
                vec![(k - 1, one), (k, b)]
            }
            SporadicCase::TrinomialQ2 { k } => {
                if k < 2 {
                    return Err(Error::InvalidArgument("k must be at least 2".into()));
                }
                let a = a.ok_or_else(|| Error::InvalidArgument("trinomial needs a".into()))?;
                vec![(k - 2, one), (k - 1, a), (k, b)]
            }
            SporadicCase::BinomialQ4 { high } => {
                if high {
                    vec![(2, one), (3, b)]
                } else {
                    vec![(1, one), (2, b)]
                }
            }
            SporadicCase::BinomialQ5 => vec![(1, one), (2, b)],
            SporadicCase::GeneralBinomial { lo, hi, .. } => {
                if lo >= hi {
                    return Err(Error::InvalidArgument("need lo < hi".into()));
                }
                vec![(lo, one), (hi, b)]
            }
        };
        LinPoly::new(ctx, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessResult {
    pub poly: String,
    pub t: u32,
    /// Degrees r tried, in order.
    pub tried: Vec<u32>,
    pub found: Option<(u32, Vec<u64>, Vec<u64>)>,
}

/// Searches r = 1..=r_max (multiples of the coefficient field degree) for a
/// qualifying point on C_f.
pub fn witness_search(f: &LinPoly, t: u32, r_max: u32, budget: u64) -> Result<WitnessResult> {
    let c = build_cf(f, t)?;
    let n = f.ctx().n();
    let mut tried = Vec::new();
    for r in (n..=r_max).step_by(n as usize) {
        let e = f.ctx().extension(r / n)?;
        if e.order() > budget {
            break;
        }
        tried.push(r);
        let cen = point_census(&c, r, CensusMode::FirstWitness, budget)?;
        if let Some((x, y)) = cen.witness {
            return Ok(WitnessResult { poly: f.to_text(), t, tried, found: Some((r, x, y)) });
        }
    }
    Ok(WitnessResult { poly: f.to_text(), t, tried, found: None })
}
