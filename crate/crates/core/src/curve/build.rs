//! The curves attached to an index-t linearized polynomial:
//! `D_f = f(X,T) Y^(q^t) - f(Y,T) X^(q^t)` (homogeneous), its dehomogenisation
//! `G(X,Y) = D_f(1,Y,X)`, and `C_f = (f(X)Y^(q^t) - f(Y)X^(q^t)) / (X^q Y - X Y^q)`.

use crate::error::{Error, Result};
use crate::linpoly::LinPoly;

use super::bivar::BivarPoly;

fn qpow(q: u64, k: u32) -> Result<u32> {
    q.checked_pow(k)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::BudgetExceeded(format!("exponent {q}^{k} too large")))
}

/// `f(X) Y^(q^t) - f(Y) X^(q^t)` as an affine polynomial.
pub fn numerator(f: &LinPoly, t: u32) -> Result<BivarPoly> {
    let ctx = f.ctx();
    let q = ctx.q();
    let qt = qpow(q, t)?;
    let mut r = BivarPoly::zero(ctx);
    for &(k, a) in f.terms() {
        let qk = qpow(q, k)?;
        r.add_term(qk, qt, a);
        r.add_term(qt, qk, ctx.neg(a));
    }
    Ok(r)
}

pub fn build_df(f: &LinPoly, t: u32) -> Result<BivarPoly> {
    let q = f.ctx().q();
    let d = qpow(q, f.k_max())? + qpow(q, t)?;
    numerator(f, t)?.homogenize(d)
}

pub fn build_g(f: &LinPoly, t: u32) -> Result<BivarPoly> {
    build_df(f, t)?.dehomog_g()
}

pub fn build_cf(f: &LinPoly, t: u32) -> Result<BivarPoly> {
    let ctx = f.ctx();
    let q = qpow(ctx.q(), 1)?;
    let den = BivarPoly::new(ctx, [((q, 1), ctx.one()), ((1, q), ctx.neg(ctx.one()))]);
    numerator(f, t)?.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn degrees() {
        for (p, n, t, ks) in [(2u64, 3u32, 0u32, vec![1u32, 2]), (3, 2, 1, vec![0, 2]), (2, 4, 2, vec![0, 3])] {
            let ctx = FieldCtx::new(p, 1, n).unwrap();
            let f = LinPoly::from_degrees(&ctx, &ks).unwrap();
            let cf = build_cf(&f, t).unwrap();
            let q = p as i64;
            let km = *ks.last().unwrap();
            assert_eq!(cf.total_degree(), q.pow(km) + q.pow(t) - q - 1);
            let df = build_df(&f, t).unwrap();
            assert_eq!(df.hom_degree(), Some((q.pow(km) + q.pow(t)) as u32));
        }
    }

    #[test]
    fn cf_times_denominator_is_numerator() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let g = ctx.generator();
        let f = LinPoly::new(&ctx, vec![(0, g), (2, ctx.one())]).unwrap();
        let cf = build_cf(&f, 1).unwrap();
        let den = BivarPoly::new(&ctx, [((3, 1), ctx.one()), ((1, 3), ctx.from_int(-1))]);
        assert_eq!(cf.mul(&den), numerator(&f, 1).unwrap());
    }

    #[test]
    fn g_is_d_at_x_equals_one() {
        let ctx = FieldCtx::new(2, 1, 3).unwrap();
        let f = LinPoly::from_degrees(&ctx, &[0, 3]).unwrap();
        let df = build_df(&f, 2).unwrap();
        let g = build_g(&f, 2).unwrap();
        // G(0, Y) = Y^(q^t) - Y^(q^kM)
        let line = g.at_x(ctx.zero());
        assert_eq!(line.degree(), 8);
        assert_eq!(line.coeff(4), ctx.one());
        assert_eq!(g.total_degree(), df.hom_degree().unwrap() as i64 - 1);
    }
}
