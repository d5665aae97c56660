//! Affine points (x, y) with y/x outside F_q on a curve, over F_{q^r}.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};

use super::bivar::BivarPoly;

pub const DEFAULT_CENSUS_BUDGET: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    Count,
    FirstWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub r: u32,
    /// Number of qualifying points (only a lower bound in witness mode).
    pub count: u64,
    /// First qualifying point found, as coordinate vectors over F_p.
    pub witness: Option<(Vec<u64>, Vec<u64>)>,
}

/// The census field F_{q^r}, which must contain the coefficient field.
pub fn census_field(ctx: &FieldCtx, r: u32) -> Result<FieldCtx> {
    if r == 0 || r % ctx.n() != 0 {
        return Err(Error::InvalidArgument(format!(
            "census degree {r} is not a multiple of the coefficient field degree {}",
            ctx.n()
        )));
    }
    ctx.extension(r / ctx.n())
}

fn qualifying(e: &FieldCtx, x: FieldElement, y: FieldElement) -> bool {
    !e.in_subfield(e.div(y, x), 1)
}

/// Iterates x over F_{q^r}^* and solves C(x, Y) = 0 for y.
pub fn point_census(c: &BivarPoly, r: u32, mode: CensusMode, budget: u64) -> Result<Census> {
    let e = census_field(c.ctx(), r)?;
    if e.order() > budget {
        return Err(Error::BudgetExceeded(format!("census field of order {} exceeds {budget}", e.order())));
    }
    let c = c.over(&e)?;
    let base = e.subfield_elements(1);
    let q = e.q();
    let mut count = 0u64;
    for x in e.nonzero() {
        let g = c.at_x(x);
        if g.is_zero() {
            if mode == CensusMode::FirstWitness {
                let y = e.nonzero().find(|&y| qualifying(&e, x, y)).expect("F_q is a proper subfield");
                return Ok(Census { r, count: 1, witness: Some((e.coords(x), e.coords(y))) });
            }
            count += e.order() - q;
            continue;
        }
        if g.degree() <= 0 {
            continue;
        }
        match mode {
            CensusMode::Count => {
                let all = g.count_roots() as u64;
                let on_lines = base.iter().filter(|&&l| e.is_zero(g.eval(e.mul(l, x)))).count() as u64;
                count += all - on_lines;
            }
            CensusMode::FirstWitness => {
                if let Some(y) = g.roots().into_iter().find(|&y| qualifying(&e, x, y)) {
                    return Ok(Census { r, count: 1, witness: Some((e.coords(x), e.coords(y))) });
                }
            }
        }
    }
    Ok(Census { r, count, witness: None })
}
