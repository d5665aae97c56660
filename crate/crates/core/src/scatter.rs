//! Scatteredness of the index-t subspace `U = {(x^(q^t), f(x))}` via
//! bucketing by projective point, weight distributions, and the
//! exceptionality probe over field extensions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linpoly::LinPoly;

/// Largest evaluation field order accepted by default.
pub const DEFAULT_SCATTER_BUDGET: u64 = 1 << 22;

/// Bucket sizes indexed by the point's affine coordinate f(x)/x^(q^t).
fn buckets(f: &LinPoly, t: u32, ext: &FieldCtx, budget: u64) -> Result<Vec<u32>> {
    if ext.order() > budget {
        return Err(Error::BudgetExceeded(format!(
            "field of order {} exceeds scatter budget {budget}",
            ext.order()
        )));
    }
    let g = f.over(ext)?;
    let mut counts = vec![0u32; ext.order() as usize];
    for x in ext.nonzero() {
        let r = ext.div(g.eval(x), ext.frobenius(x, t as i64));
        counts[r.index() as usize] += 1;
    }
    Ok(counts)
}

/// True when every point of the linear set has weight one.
pub fn is_scattered(f: &LinPoly, t: u32, ext: &FieldCtx) -> Result<bool> {
    let q1 = (ext.q() - 1) as u32;
    Ok(buckets(f, t, ext, DEFAULT_SCATTER_BUDGET)?
        .into_iter()
        .all(|c| c == 0 || c == q1))
}

/// Number of points of each weight w (a bucket of size q^w - 1 has weight w).
pub fn weight_distribution(f: &LinPoly, t: u32, ext: &FieldCtx) -> Result<BTreeMap<u32, u64>> {
    let q = ext.q();
    let mut out = BTreeMap::new();
    for c in buckets(f, t, ext, DEFAULT_SCATTER_BUDGET)? {
        if c == 0 {
            continue;
        }
        let mut w = 0u32;
        let mut s = 1u64;
        while s - 1 < c as u64 {
            s *= q;
            w += 1;
        }
        assert_eq!(s - 1, c as u64, "bucket size is not q^w - 1");
        *out.entry(w).or_insert(0) += 1;
    }
    Ok(out)
}

/// Two F_q-independent nonzero x, y defining the same point, if any.
pub fn scatter_witness(f: &LinPoly, t: u32, ext: &FieldCtx) -> Result<Option<(FieldElement, FieldElement)>> {
    if ext.order() > DEFAULT_SCATTER_BUDGET {
        return Err(Error::BudgetExceeded("scatter witness".into()));
    }
    let g = f.over(ext)?;
    let mut first: Vec<Option<FieldElement>> = vec![None; ext.order() as usize];
    for x in ext.nonzero() {
        let r = ext.div(g.eval(x), ext.frobenius(x, t as i64)).index() as usize;
        match first[r] {
            Some(y) if !ext.in_subfield(ext.div(x, y), 1) => return Ok(Some((y, x))),
            Some(_) => {}
            None => first[r] = Some(x),
        }
    }
    Ok(None)
}

/// Scatteredness of f over `F_{q^(m n)}` for m = 1..=m_max.
pub fn exceptional_probe(f: &LinPoly, t: u32, m_max: u32) -> Result<Vec<bool>> {
    (1..=m_max)
        .map(|m| {
            let ext = f.ctx().extension(m)?;
            is_scattered(f, t, &ext)
        })
        .collect()
}
