//! Rank distribution of the F_{q^n}-linear code `{a x^(q^t) + b f(x)}`.
//!
//! Ranks are invariant under scaling (a, b) by a nonzero scalar, so only the
//! projective representatives (1, b) and (0, 1) are evaluated.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::gf::{matrix, FieldCtx, FieldElement};
use crate::linpoly::LinPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MrdReport {
    pub n: u32,
    pub min_rank: u32,
    /// rank -> number of codewords (including the zero word at rank 0)
    pub rank_distribution: BTreeMap<u32, u64>,
    pub is_mrd: bool,
    /// True for t > 0, where the code is `{a x^(q^t) + b f(x)}`.
    pub index_extrapolated: bool,
}

fn rank_of(ctx: &FieldCtx, images: &[FieldElement]) -> u32 {
    let d = ctx.deg() as usize;
    let mut rows = vec![vec![0u64; d]; d];
    for (j, &im) in images.iter().enumerate() {
        for (i, c) in ctx.coords(im).into_iter().enumerate() {
            rows[i][j] = c;
        }
    }
    matrix::rank(&rows, ctx.p()) as u32 / ctx.e()
}

fn poly_basis(ctx: &FieldCtx) -> Vec<FieldElement> {
    let d = ctx.deg() as usize;
    let x = if d > 1 { ctx.elem(ctx.p()) } else { ctx.one() };
    let mut basis = Vec::with_capacity(d);
    let mut b = ctx.one();
    for _ in 0..d {
        basis.push(b);
        b = ctx.mul(b, x);
    }
    basis
}

/// F_q-rank of `x -> a x^(q^t) + b f(x)` on the coefficient field.
pub fn codeword_rank(f: &LinPoly, t: u32, a: FieldElement, b: FieldElement) -> u32 {
    let ctx = f.ctx();
    let images: Vec<_> = poly_basis(ctx)
        .into_iter()
        .map(|e| ctx.add(ctx.mul(a, ctx.frobenius(e, t as i64)), ctx.mul(b, f.eval(e))))
        .collect();
    rank_of(ctx, &images)
}

pub fn mrd_audit(f: &LinPoly, t: u32) -> MrdReport {
    let ctx = f.ctx();
    let d = ctx.deg() as usize;
    let basis = poly_basis(ctx);
    let u: Vec<_> = basis.iter().map(|&e| ctx.frobenius(e, t as i64)).collect();
    let v: Vec<_> = basis.iter().map(|&e| f.eval(e)).collect();
    let scale = ctx.order() - 1;
    let mut dist: BTreeMap<u32, u64> = BTreeMap::new();
    dist.insert(0, 1);
    let mut min_rank = u32::MAX;
    let mut bump = |r: u32| {
        *dist.entry(r).or_insert(0) += scale;
        min_rank = min_rank.min(r);
    };
    bump(rank_of(ctx, &v));
    let mut col = vec![ctx.zero(); d];
    for beta in ctx.elements() {
        for j in 0..d {
            col[j] = ctx.add(u[j], ctx.mul(beta, v[j]));
        }
        bump(rank_of(ctx, &col));
    }
    let n = ctx.n();
    MrdReport {
        n,
        min_rank,
        is_mrd: min_rank + 1 == n,
        rank_distribution: dist,
        index_extrapolated: t > 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scatter::is_scattered;

    #[test]
    fn gabidulin_is_mrd() {
        let f = FieldCtx::new(2, 1, 4).unwrap();
        let g = LinPoly::from_degrees(&f, &[1]).unwrap();
        let r = mrd_audit(&g, 0);
        assert!(r.is_mrd);
        assert_eq!(r.min_rank, 3);
        assert_eq!(r.rank_distribution.values().sum::<u64>(), 256);
    }

    #[test]
    fn mrd_iff_scattered_small() {
        let f = FieldCtx::new(3, 1, 3).unwrap();
        for a in f.elements() {
            let g = LinPoly::new(&f, vec![(1, a), (2, f.one())]).unwrap();
            assert_eq!(mrd_audit(&g, 0).is_mrd, is_scattered(&g, 0, &f).unwrap());
        }
    }
}
