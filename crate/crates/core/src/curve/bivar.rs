//! Sparse bivariate polynomials over a finite field.
//!
//! A polynomial may carry a homogeneity degree `d`, in which case it stands for
//! the ternary form `sum c_ij X^i Y^j T^(d-i-j)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Embedding, FieldCtx, FieldElement, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    ctx: FieldCtx,
    terms: BTreeMap<(u32, u32), FieldElement>,
    hom: Option<u32>,
}

/// JSON form: a list of `[i, j, coords]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson(pub Vec<(u32, u32, Vec<u64>)>);

/// Pascal triangle mod p up to row `n`.
fn binom_table(n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut t: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![1u64; i + 1];
        for k in 1..i {
            row[k] = (t[i - 1][k - 1] + t[i - 1][k]) % p;
        }
        t.push(row);
    }
    t
}

impl BivarPoly {
    pub fn new(ctx: &FieldCtx, terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>) -> BivarPoly {
        let mut p = BivarPoly::zero(ctx);
        for (k, a) in terms {
            p.add_term(k.0, k.1, a);
        }
        p
    }
    pub fn zero(ctx: &FieldCtx) -> BivarPoly {
        BivarPoly { ctx: ctx.clone(), terms: BTreeMap::new(), hom: None }
    }
    pub fn monomial(ctx: &FieldCtx, a: FieldElement, i: u32, j: u32) -> BivarPoly {
        BivarPoly::new(ctx, [((i, j), a)])
    }
    pub fn constant(ctx: &FieldCtx, a: FieldElement) -> BivarPoly {
        BivarPoly::monomial(ctx, a, 0, 0)
    }
    pub fn x(ctx: &FieldCtx) -> BivarPoly {
        BivarPoly::monomial(ctx, ctx.one(), 1, 0)
    }
    pub fn y(ctx: &FieldCtx) -> BivarPoly {
        BivarPoly::monomial(ctx, ctx.one(), 0, 1)
    }

    pub fn add_term(&mut self, i: u32, j: u32, a: FieldElement) {
        assert!(self.ctx.owns(a), "coefficient from a different field");
        if self.ctx.is_zero(a) {
            return;
        }
        let f = &self.ctx;
        match self.terms.get_mut(&(i, j)) {
            Some(c) => {
                *c = f.add(*c, a);
                if f.is_zero(*c) {
                    self.terms.remove(&(i, j));
                }
            }
            None => {
                self.terms.insert((i, j), a);
            }
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, FieldElement)> + '_ {
        self.terms.iter().map(|(&(i, j), &a)| (i, j, a))
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).copied().unwrap_or_else(|| self.ctx.zero())
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn hom_degree(&self) -> Option<u32> {
        self.hom
    }

    /// Marks this polynomial as a ternary form of degree `d`.
    pub fn homogenize(mut self, d: u32) -> Result<BivarPoly> {
        if self.total_degree() > d as i64 {
            return Err(Error::InvalidArgument(format!("degree exceeds {d}")));
        }
        self.hom = Some(d);
        Ok(self)
    }

    /// Affine total degree; -1 for zero.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|&(i, j)| (i + j) as i64).max().unwrap_or(-1)
    }
    pub fn deg_x(&self) -> i64 {
        self.terms.keys().map(|&(i, _)| i as i64).max().unwrap_or(-1)
    }
    pub fn deg_y(&self) -> i64 {
        self.terms.keys().map(|&(_, j)| j as i64).max().unwrap_or(-1)
    }
    /// Lowest total degree (multiplicity at the origin); None for zero.
    pub fn ord(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Homogeneous component of total degree k.
    pub fn form(&self, k: u32) -> BivarPoly {
        BivarPoly::new(
            &self.ctx,
            self.terms.iter().filter(|(&(i, j), _)| i + j == k).map(|(&k, &a)| (k, a)),
        )
    }

    fn affine(&self) -> BivarPoly {
        BivarPoly { ctx: self.ctx.clone(), terms: self.terms.clone(), hom: None }
    }

    pub fn add(&self, o: &BivarPoly) -> BivarPoly {
        let mut r = self.affine();
        for (&(i, j), &a) in &o.terms {
            r.add_term(i, j, a);
        }
        r
    }
    pub fn neg(&self) -> BivarPoly {
        BivarPoly::new(&self.ctx, self.terms.iter().map(|(&k, &a)| (k, self.ctx.neg(a))))
    }
    pub fn sub(&self, o: &BivarPoly) -> BivarPoly {
        self.add(&o.neg())
    }
    pub fn scale(&self, c: FieldElement) -> BivarPoly {
        BivarPoly::new(&self.ctx, self.terms.iter().map(|(&k, &a)| (k, self.ctx.mul(a, c))))
    }
    pub fn mul(&self, o: &BivarPoly) -> BivarPoly {
        let f = &self.ctx;
        let mut r = BivarPoly::zero(f);
        for (&(i, j), &a) in &self.terms {
            for (&(k, l), &b) in &o.terms {
                r.add_term(i + k, j + l, f.mul(a, b));
            }
        }
        r
    }
    pub fn pow(&self, e: u32) -> BivarPoly {
        let mut r = BivarPoly::constant(&self.ctx, self.ctx.one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }
    /// Multiplies by X^a Y^b.
    pub fn shift(&self, a: u32, b: u32) -> BivarPoly {
        BivarPoly::new(&self.ctx, self.terms.iter().map(|(&(i, j), &c)| ((i + a, j + b), c)))
    }

    pub fn eval(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let f = &self.ctx;
        let mut acc = f.zero();
        for (&(i, j), &a) in &self.terms {
            acc = f.add(acc, f.mul(a, f.mul(f.pow(x, i as u64), f.pow(y, j as u64))));
        }
        acc
    }

    pub fn partial_x(&self) -> BivarPoly {
        let f = &self.ctx;
        BivarPoly::new(
            f,
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), &a)| ((i - 1, j), f.mul_int(a, i as u64))),
        )
    }
    pub fn partial_y(&self) -> BivarPoly {
        let f = &self.ctx;
        BivarPoly::new(
            f,
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), &a)| ((i, j - 1), f.mul_int(a, j as u64))),
        )
    }

    /// H(Y, X).
    pub fn swap(&self) -> BivarPoly {
        BivarPoly::new(&self.ctx, self.terms.iter().map(|(&(i, j), &a)| ((j, i), a)))
    }

    /// H(X, XY) / X^d.
    pub fn theta(&self, d: u32) -> Result<BivarPoly> {
        let mut out = BTreeMap::new();
        for (&(i, j), &a) in &self.terms {
            if i + j < d {
                return Err(Error::InexactMonomialDivision { var: 'X', d });
            }
            out.insert((i + j - d, j), a);
        }
        Ok(BivarPoly { ctx: self.ctx.clone(), terms: out, hom: None })
    }

    /// H(XY, Y) / Y^d.
    pub fn eta(&self, d: u32) -> Result<BivarPoly> {
        let mut out = BTreeMap::new();
        for (&(i, j), &a) in &self.terms {
            if i + j < d {
                return Err(Error::InexactMonomialDivision { var: 'Y', d });
            }
            out.insert((i, i + j - d), a);
        }
        Ok(BivarPoly { ctx: self.ctx.clone(), terms: out, hom: None })
    }

    /// Divides by X^a Y^b.
    pub fn div_monomial(&self, a: u32, b: u32) -> Result<BivarPoly> {
        let mut out = BTreeMap::new();
        for (&(i, j), &c) in &self.terms {
            if i < a {
                return Err(Error::InexactMonomialDivision { var: 'X', d: a });
            }
            if j < b {
                return Err(Error::InexactMonomialDivision { var: 'Y', d: b });
            }
            out.insert((i - a, j - b), c);
        }
        Ok(BivarPoly { ctx: self.ctx.clone(), terms: out, hom: None })
    }

    /// H(X, Y + b).
    pub fn shift_y(&self, b: FieldElement) -> BivarPoly {
        if self.ctx.is_zero(b) {
            return self.affine();
        }
        let f = &self.ctx;
        let dy = self.deg_y().max(0) as usize;
        let bin = binom_table(dy, f.p());
        let mut bp = vec![f.one(); dy + 1];
        for k in 1..=dy {
            bp[k] = f.mul(bp[k - 1], b);
        }
        let mut r = BivarPoly::zero(f);
        for (&(i, j), &a) in &self.terms {
            for k in 0..=j as usize {
                let c = bin[j as usize][k];
                if c != 0 {
                    r.add_term(i, k as u32, f.mul_int(f.mul(a, bp[j as usize - k]), c));
                }
            }
        }
        r
    }

    /// H(X + a, Y + b).
    pub fn translate(&self, a: FieldElement, b: FieldElement) -> BivarPoly {
        self.swap().shift_y(a).swap().shift_y(b)
    }

    /// H(X, alpha X + Y).
    pub fn shear(&self, alpha: FieldElement) -> BivarPoly {
        let f = &self.ctx;
        let dy = self.deg_y().max(0) as usize;
        let bin = binom_table(dy, f.p());
        let mut ap = vec![f.one(); dy + 1];
        for k in 1..=dy {
            ap[k] = f.mul(ap[k - 1], alpha);
        }
        let mut r = BivarPoly::zero(f);
        for (&(i, j), &a) in &self.terms {
            for k in 0..=j as usize {
                let c = bin[j as usize][k];
                if c != 0 {
                    let e = j as usize - k;
                    r.add_term(i + e as u32, k as u32, f.mul_int(f.mul(a, ap[e]), c));
                }
            }
        }
        r
    }

    /// Coefficients with respect to Y: `result[j]` is the coefficient of Y^j in F[X].
    pub fn y_coeffs(&self) -> Vec<Poly> {
        let f = &self.ctx;
        let dy = self.deg_y().max(0) as usize;
        let dx = self.deg_x().max(0) as usize;
        let mut rows = vec![vec![f.zero(); dx + 1]; dy + 1];
        for (&(i, j), &a) in &self.terms {
            rows[j as usize][i as usize] = a;
        }
        rows.into_iter().map(|r| Poly::new(f, r)).collect()
    }

    pub fn from_y_coeffs(ctx: &FieldCtx, rows: &[Poly]) -> BivarPoly {
        let mut r = BivarPoly::zero(ctx);
        for (j, row) in rows.iter().enumerate() {
            for (i, &a) in row.coeffs().iter().enumerate() {
                r.add_term(i as u32, j as u32, a);
            }
        }
        r
    }

    /// H(x0, Y) as a polynomial in Y.
    pub fn at_x(&self, x0: FieldElement) -> Poly {
        let f = &self.ctx;
        let dy = self.deg_y().max(0) as usize;
        let dx = self.deg_x().max(0) as usize;
        let mut xp = vec![f.one(); dx + 1];
        for k in 1..=dx {
            xp[k] = f.mul(xp[k - 1], x0);
        }
        let mut c = vec![f.zero(); dy + 1];
        for (&(i, j), &a) in &self.terms {
            c[j as usize] = f.add(c[j as usize], f.mul(a, xp[i as usize]));
        }
        Poly::new(f, c)
    }

    /// H(X, y0) as a polynomial in X.
    pub fn at_y(&self, y0: FieldElement) -> Poly {
        self.swap().at_x(y0)
    }

    pub fn lift(&self, emb: &Embedding) -> BivarPoly {
        assert_eq!(emb.src(), &self.ctx);
        BivarPoly {
            ctx: emb.dst().clone(),
            terms: self.terms.iter().map(|(&k, &a)| (k, emb.apply(a))).collect(),
            hom: self.hom,
        }
    }

    /// Lifts into `ext` (no-op if already there).
    pub fn over(&self, ext: &FieldCtx) -> Result<BivarPoly> {
        if ext == &self.ctx {
            return Ok(self.clone());
        }
        let emb = crate::gf::embedding(&self.ctx, ext)?;
        Ok(self.lift(&emb))
    }

    /// Applies `a -> a^(p^j)` to all coefficients.
    pub fn frob_coeffs(&self, j: u64) -> BivarPoly {
        BivarPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&k, &a)| (k, self.ctx.frob_p(a, j))).collect(),
            hom: self.hom,
        }
    }

    /// Exact division (lex order, X > Y).
    pub fn exact_div(&self, d: &BivarPoly) -> Result<BivarPoly> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.ctx;
        let (&(li, lj), &lc) = d.terms.iter().next_back().unwrap();
        let lci = f.inv(lc);
        let mut r = self.affine();
        let mut q = BivarPoly::zero(f);
        while let Some((&(i, j), &a)) = r.terms.iter().next_back() {
            if i < li || j < lj {
                return Err(Error::InexactDivision);
            }
            let c = f.mul(a, lci);
            let (di, dj) = (i - li, j - lj);
            q.add_term(di, dj, c);
            for (&(k, l), &b) in &d.terms {
                r.add_term(k + di, l + dj, f.neg(f.mul(c, b)));
            }
        }
        Ok(q)
    }

    /// For a ternary form: G(X, Y) = F(1, Y, X).
    pub fn dehomog_g(&self) -> Result<BivarPoly> {
        let d = self.hom.ok_or_else(|| Error::InvalidArgument("not homogeneous".into()))?;
        Ok(BivarPoly::new(&self.ctx, self.terms.iter().map(|(&(i, j), &a)| ((d - i - j, j), a))))
    }

    /// For a ternary form: F(X, 1, T) as a polynomial in (X, T).
    pub fn chart_y(&self) -> Result<BivarPoly> {
        let d = self.hom.ok_or_else(|| Error::InvalidArgument("not homogeneous".into()))?;
        Ok(BivarPoly::new(&self.ctx, self.terms.iter().map(|(&(i, j), &a)| ((i, d - i - j), a))))
    }

    /// For a ternary form: F(1, Y, T) as a polynomial in (Y, T).
    pub fn chart_x(&self) -> Result<BivarPoly> {
        let d = self.hom.ok_or_else(|| Error::InvalidArgument("not homogeneous".into()))?;
        Ok(BivarPoly::new(&self.ctx, self.terms.iter().map(|(&(i, j), &a)| ((j, d - i - j), a))))
    }

    /// Affine part F(X, Y, 1).
    pub fn affine_part(&self) -> BivarPoly {
        self.affine()
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson(self.terms.iter().map(|(&(i, j), &a)| (i, j, self.ctx.coords(a))).collect())
    }

    pub fn from_json(ctx: &FieldCtx, j: &CurveJson) -> Result<BivarPoly> {
        let mut p = BivarPoly::zero(ctx);
        for (i, k, c) in &j.0 {
            p.add_term(*i, *k, ctx.from_coords(c)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 1, 2).unwrap()
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = f9();
        let g = f.generator();
        let a = BivarPoly::new(&f, [((2, 1), g), ((0, 3), f.one()), ((1, 0), f.from_int(2))]);
        let b = BivarPoly::new(&f, [((1, 1), f.one()), ((0, 0), g)]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.add(&BivarPoly::x(&f)).exact_div(&b), Err(Error::InexactDivision));
    }

    #[test]
    fn transforms_agree_with_substitution() {
        let f = f9();
        let g = f.generator();
        let h = BivarPoly::new(&f, [((3, 0), g), ((1, 2), f.one()), ((0, 2), f.from_int(2)), ((2, 2), g)]);
        let (x0, y0) = (f.elem(5), f.elem(7));
        let th = h.theta(2).unwrap();
        // theta(H)(x, y) * x^2 = H(x, x y)
        assert_eq!(f.mul(th.eval(x0, y0), f.pow(x0, 2)), h.eval(x0, f.mul(x0, y0)));
        let et = h.eta(2).unwrap();
        assert_eq!(f.mul(et.eval(x0, y0), f.pow(y0, 2)), h.eval(f.mul(x0, y0), y0));
        let sh = h.shear(g);
        assert_eq!(sh.eval(x0, y0), h.eval(x0, f.add(f.mul(g, x0), y0)));
        let tr = h.translate(g, f.one());
        assert_eq!(tr.eval(x0, y0), h.eval(f.add(x0, g), f.add(y0, f.one())));
        assert!(matches!(h.theta(3), Err(Error::InexactMonomialDivision { .. })));
    }

    #[test]
    fn charts_of_form() {
        let f = f9();
        // X^2 + Y T as a conic
        let c = BivarPoly::new(&f, [((2, 0), f.one()), ((0, 1), f.one())]).homogenize(2).unwrap();
        let g = c.dehomog_g().unwrap(); // 1 + Y X
        assert_eq!(g, BivarPoly::new(&f, [((0, 0), f.one()), ((1, 1), f.one())]));
        let cy = c.chart_y().unwrap(); // X^2 + T
        assert_eq!(cy, BivarPoly::new(&f, [((2, 0), f.one()), ((0, 1), f.one())]));
    }

    #[test]
    fn json_roundtrip() {
        let f = f9();
        let h = BivarPoly::new(&f, [((3, 0), f.elem(3)), ((1, 2), f.one())]);
        let j = h.to_json();
        assert_eq!(BivarPoly::from_json(&f, &j).unwrap(), h);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, "[[1,2,[1,0]],[3,0,[0,1]]]");
    }
}
