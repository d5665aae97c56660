//! Intersection multiplicities (Fulton's algorithm), resultants, and a full
//! Bezout count over a finite extension.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement, Poly};

use super::bivar::BivarPoly;

/// Intersection number at the origin of two affine curves.
pub fn intersection_at_origin(f: &BivarPoly, g: &BivarPoly) -> Result<u64> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::CommonComponent);
    }
    let ctx = f.ctx();
    let z = ctx.zero();
    if !ctx.is_zero(f.eval(z, z)) || !ctx.is_zero(g.eval(z, z)) {
        return Ok(0);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = 0u64;
    loop {
        let a0 = a.at_y(z);
        let b0 = b.at_y(z);
        match (a0.is_zero(), b0.is_zero()) {
            (true, true) => return Err(Error::CommonComponent),
            (true, false) => {
                // a = Y * a1: I(Y, b) + I(a1, b)
                acc += b0.order().unwrap() as u64;
                a = a.div_monomial(0, 1)?;
            }
            (false, true) => {
                acc += a0.order().unwrap() as u64;
                b = b.div_monomial(0, 1)?;
            }
            (false, false) => {
                let (ra, rb) = (a0.degree(), b0.degree());
                if ra > rb {
                    std::mem::swap(&mut a, &mut b);
                    continue;
                }
                // reduce deg b(X, 0) using a
                let (la, lb) = (a0.lc(), b0.lc());
                let shift = (rb - ra) as u32;
                b = b.scale(la).sub(&a.shift(shift, 0).scale(lb));
                if b.is_zero() {
                    return Err(Error::CommonComponent);
                }
            }
        }
        if !ctx.is_zero(a.eval(z, z)) || !ctx.is_zero(b.eval(z, z)) {
            return Ok(acc);
        }
    }
}

pub fn intersection_at(f: &BivarPoly, g: &BivarPoly, x: FieldElement, y: FieldElement) -> Result<u64> {
    intersection_at_origin(&f.translate(x, y), &g.translate(x, y))
}

/// Resultant of two univariate polynomials of exact degree.
fn res_exact(a: &Poly, b: &Poly) -> FieldElement {
    let ctx = a.ctx().clone();
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = ctx.one();
    loop {
        let (m, n) = (a.degree(), b.degree());
        if m < 0 || n < 0 {
            return ctx.zero();
        }
        if n == 0 {
            return ctx.mul(acc, ctx.pow(b.lc(), m as u64));
        }
        if m == 0 {
            return ctx.mul(acc, ctx.pow(a.lc(), n as u64));
        }
        if m < n {
            // Res(a,b) = (-1)^(mn) Res(b,a)
            if (m * n) % 2 == 1 {
                acc = ctx.neg(acc);
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // Res(a,b) = (-1)^(mn) Res(b,a) = (-1)^(mn) lc(b)^(m-r) Res(b, a mod b)
        let r = a.rem(&b);
        if r.is_zero() {
            return ctx.zero();
        }
        if (m * n) % 2 == 1 {
            acc = ctx.neg(acc);
        }
        acc = ctx.mul(acc, ctx.pow(b.lc(), (m - r.degree()) as u64));
        a = b;
        b = r;
    }
}

/// Resultant with respect to formal degrees (m, n).
pub fn resultant_formal(a: &Poly, m: u32, b: &Poly, n: u32) -> FieldElement {
    let ctx = a.ctx().clone();
    let (da, db) = (a.degree(), b.degree());
    if da < m as i64 && db < n as i64 {
        return ctx.zero();
    }
    if da < 0 || db < 0 {
        return ctx.zero();
    }
    if da < m as i64 {
        // Res_{m,n}(a,b) = (-1)^(n(m-da)) lc(b)^(m-da) Res_{da,n}(a,b)
        let k = m as i64 - da;
        let mut r = ctx.mul(ctx.pow(b.lc(), k as u64), res_exact(a, b));
        if (n as i64 * k) % 2 == 1 {
            r = ctx.neg(r);
        }
        return r;
    }
    if db < n as i64 {
        let k = n as i64 - db;
        return ctx.mul(ctx.pow(a.lc(), k as u64), res_exact(a, b));
    }
    res_exact(a, b)
}

/// Res_Y(a, b) as a polynomial in X, by evaluation and interpolation over `ctx`
/// (which must have more elements than the degree bound).
pub fn resultant_y(a: &BivarPoly, b: &BivarPoly) -> Result<Poly> {
    let ctx = a.ctx().clone();
    let (m, n) = (a.deg_y().max(0) as u32, b.deg_y().max(0) as u32);
    let bound = (a.deg_x().max(0) as u64) * n as u64 + (b.deg_x().max(0) as u64) * m as u64;
    if ctx.order() <= bound {
        return Err(Error::BudgetExceeded("field too small to interpolate the resultant".into()));
    }
    let xs: Vec<FieldElement> = ctx.elements().take(bound as usize + 1).collect();
    let ys: Vec<FieldElement> = xs
        .iter()
        .map(|&x| resultant_formal(&a.at_x(x), m, &b.at_x(x), n))
        .collect();
    Ok(interpolate(&ctx, &xs, &ys))
}

/// Newton interpolation.
pub fn interpolate(ctx: &FieldCtx, xs: &[FieldElement], ys: &[FieldElement]) -> Poly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = ctx.sub(coef[i], coef[i - 1]);
            let den = ctx.sub(xs[i], xs[i - j]);
            coef[i] = ctx.div(num, den);
        }
    }
    let mut p = Poly::zero(ctx);
    for i in (0..n).rev() {
        let lin = Poly::new(ctx, vec![ctx.neg(xs[i]), ctx.one()]);
        p = p.mul(&lin).add(&Poly::constant(ctx, coef[i]));
    }
    p
}

/// Homogenisation with respect to total degree.
fn hom(a: &BivarPoly) -> Result<BivarPoly> {
    let d = a.total_degree().max(0) as u32;
    a.clone().homogenize(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    /// Projective coordinates (x : y : t) in the working field.
    pub point: [Vec<u64>; 3],
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BezoutReport {
    pub deg_a: u32,
    pub deg_b: u32,
    pub expected: u64,
    pub total: u64,
    pub extension_degree: u32,
    pub points: Vec<IntersectionPoint>,
    pub holds: bool,
}

enum Attempt {
    Done(Vec<IntersectionPoint>),
    NeedExtension(u32),
}

fn lcm_degrees(fac: &[(Poly, u32)]) -> u32 {
    fac.iter()
        .map(|(g, _)| g.degree() as u64)
        .fold(1u64, crate::gf::numth::lcm) as u32
}

fn try_in(a: &BivarPoly, b: &BivarPoly, e: &FieldCtx) -> Result<Attempt> {
    let (a, b) = (a.over(e)?, b.over(e)?);
    let mut pts = Vec::new();
    let one = e.one();
    let z = e.zero();
    // affine points
    let r = resultant_y(&a, &b)?;
    if r.is_zero() {
        return Err(Error::CommonComponent);
    }
    let fac = r.factor();
    let need = lcm_degrees(&fac);
    if need > 1 {
        return Ok(Attempt::NeedExtension(need));
    }
    for (l, _) in &fac {
        let x0 = e.neg(l.coeff(0));
        let g = a.at_x(x0).gcd(&b.at_x(x0));
        if g.is_zero() {
            return Err(Error::CommonComponent);
        }
        if g.degree() <= 0 {
            continue;
        }
        let gf = g.factor();
        let need = lcm_degrees(&gf);
        if need > 1 {
            return Ok(Attempt::NeedExtension(need));
        }
        for (ly, _) in gf {
            let y0 = e.neg(ly.coeff(0));
            let m = intersection_at(&a, &b, x0, y0)?;
            pts.push(IntersectionPoint { point: [e.coords(x0), e.coords(y0), e.coords(one)], multiplicity: m });
        }
    }
    // points at infinity: common zeros of the top forms
    let (ha, hb) = (hom(&a)?, hom(&b)?);
    let (da, db) = (a.total_degree() as u32, b.total_degree() as u32);
    let ta = a.form(da);
    let tb = b.form(db);
    // (0 : 1 : 0) lies on both iff neither top form has a Y^d term
    if e.is_zero(ta.coeff(0, da)) && e.is_zero(tb.coeff(0, db)) {
        let m = intersection_at_origin(&ha.chart_y()?, &hb.chart_y()?)?;
        pts.push(IntersectionPoint { point: [e.coords(z), e.coords(one), e.coords(z)], multiplicity: m });
    }
    // (1 : z : 0): roots of top(1, Z)
    let pa = Poly::new(e, (0..=da).map(|k| ta.coeff(da - k, k)).collect());
    let pb = Poly::new(e, (0..=db).map(|k| tb.coeff(db - k, k)).collect());
    let g = pa.gcd(&pb);
    if g.degree() > 0 {
        let gf = g.factor();
        let need = lcm_degrees(&gf);
        if need > 1 {
            return Ok(Attempt::NeedExtension(need));
        }
        let (ca, cb) = (ha.chart_x()?, hb.chart_x()?);
        for (l, _) in gf {
            let z0 = e.neg(l.coeff(0));
            let m = intersection_at(&ca, &cb, z0, z)?;
            pts.push(IntersectionPoint { point: [e.coords(one), e.coords(z0), e.coords(z)], multiplicity: m });
        }
    }
    Ok(Attempt::Done(pts))
}

/// Sums intersection multiplicities of two projective plane curves (given by
/// affine equations) over all points, extending the field as needed up to
/// degree `ext_bound` over the coefficient field.
pub fn bezout_check(a: &BivarPoly, b: &BivarPoly, ext_bound: u32) -> Result<BezoutReport> {
    if a.ctx() != b.ctx() {
        return Err(Error::FieldMismatch);
    }
    let base = a.ctx().clone();
    let (da, db) = (a.total_degree().max(0) as u32, b.total_degree().max(0) as u32);
    let interp = (a.deg_x().max(0) as u64 * b.deg_y().max(0) as u64)
        + (b.deg_x().max(0) as u64 * a.deg_y().max(0) as u64);
    let mut k = 1u32;
    loop {
        if k > ext_bound {
            return Err(Error::BudgetExceeded(format!("intersection needs extension degree {k} > {ext_bound}")));
        }
        let e = base.extension(k)?;
        if e.order() <= interp {
            k += 1;
            continue;
        }
        match try_in(a, b, &e)? {
            Attempt::Done(points) => {
                let total: u64 = points.iter().map(|p| p.multiplicity).sum();
                let expected = da as u64 * db as u64;
                return Ok(BezoutReport {
                    deg_a: da,
                    deg_b: db,
                    expected,
                    total,
                    extension_degree: k,
                    points,
                    holds: total == expected,
                });
            }
            Attempt::NeedExtension(d) => k *= d,
        }
    }
}

/// Multiplicity histogram of a report (multiplicity -> number of points).
pub fn multiplicity_histogram(r: &BezoutReport) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for p in &r.points {
        *h.entry(p.multiplicity).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_and_conic() {
        let f = FieldCtx::new(5, 1, 1).unwrap();
        // Y - X^2 and Y: tangent at origin, multiplicity 2
        let par = BivarPoly::new(&f, [((0, 1), f.one()), ((2, 0), f.from_int(-1))]);
        let y = BivarPoly::y(&f);
        assert_eq!(intersection_at_origin(&par, &y).unwrap(), 2);
        let x = BivarPoly::x(&f);
        assert_eq!(intersection_at_origin(&par, &x).unwrap(), 1);
        assert_eq!(intersection_at_origin(&y, &y.scale(f.from_int(2))), Err(Error::CommonComponent));
    }

    #[test]
    fn cusp_and_tangent() {
        let f = FieldCtx::new(3, 1, 1).unwrap();
        // Y^2 - X^3 with Y: 3; with X: 2
        let c = BivarPoly::new(&f, [((0, 2), f.one()), ((3, 0), f.from_int(-1))]);
        assert_eq!(intersection_at_origin(&c, &BivarPoly::y(&f)).unwrap(), 3);
        assert_eq!(intersection_at_origin(&c, &BivarPoly::x(&f)).unwrap(), 2);
    }

    #[test]
    fn resultant_matches_sylvester_on_simple_case() {
        let f = FieldCtx::new(7, 1, 1).unwrap();
        // Res(X^2 - 1, X - 2) = (2)^2 - 1 = 3
        let a = Poly::new(&f, vec![f.from_int(-1), f.zero(), f.one()]);
        let b = Poly::new(&f, vec![f.from_int(-2), f.one()]);
        // Res(a, b) = (-1)^(2*1) Res(b, a) = a(2)
        assert_eq!(resultant_formal(&a, 2, &b, 1), f.from_int(3));
    }

    #[test]
    fn bezout_two_conics() {
        let f = FieldCtx::new(3, 1, 1).unwrap();
        // X^2 + Y^2 - 1 and X Y - 1
        let a = BivarPoly::new(&f, [((2, 0), f.one()), ((0, 2), f.one()), ((0, 0), f.from_int(-1))]);
        let b = BivarPoly::new(&f, [((1, 1), f.one()), ((0, 0), f.from_int(-1))]);
        let r = bezout_check(&a, &b, 12).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.expected, 4);
    }

    #[test]
    fn bezout_with_tangency_at_infinity() {
        let f = FieldCtx::new(2, 1, 1).unwrap();
        // Y - X^2 and Y: meet at origin (2) and nowhere else affinely; plus infinity
        let par = BivarPoly::new(&f, [((0, 1), f.one()), ((2, 0), f.one())]);
        let line = BivarPoly::new(&f, [((0, 1), f.one()), ((1, 0), f.one()), ((0, 0), f.one())]);
        let r = bezout_check(&par, &line, 12).unwrap();
        assert!(r.holds, "{r:?}");
    }
}
