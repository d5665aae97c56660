//! Bivariate factorisation over finite fields by Hensel lifting and factor
//! recombination, and an absolute-irreducibility probe built on it.
//!
//! The input is sheared so it becomes monic in Y, specialised at a point x0
//! where it stays squarefree, lifted X-adically and recombined by trial
//! division. When the specialisation point has to come from an extension,
//! the factors found there are grouped into Frobenius orbits to recover the
//! factors over the original field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{embedding, FieldCtx, FieldElement, Poly};

use super::bivar::BivarPoly;

const MAX_LIFTED: usize = 20;
const MAX_SEARCH_EXT: u32 = 6;

/// H(X + cY, Y).
fn shear_x(h: &BivarPoly, c: FieldElement) -> BivarPoly {
    h.swap().shear(c).swap()
}

/// Coefficient of X^k as a polynomial in Y.
fn x_slice(h: &BivarPoly, k: u32) -> Poly {
    let ctx = h.ctx();
    let d = h.deg_y().max(0) as usize;
    let mut c = vec![ctx.zero(); d + 1];
    for (i, j, a) in h.terms() {
        if i == k {
            c[j as usize] = a;
        }
    }
    Poly::new(ctx, c)
}

fn from_y_poly(ctx: &FieldCtx, p: &Poly, xk: u32) -> BivarPoly {
    BivarPoly::new(ctx, p.coeffs().iter().enumerate().map(|(j, &a)| ((xk, j as u32), a)))
}

fn truncate(h: &BivarPoly, n: u32) -> BivarPoly {
    BivarPoly::new(h.ctx(), h.terms().filter(|&(i, _, _)| i < n).map(|(i, j, a)| ((i, j), a)))
}

/// Scales so the lexicographically largest monomial has coefficient 1.
pub fn normalize(h: &BivarPoly) -> BivarPoly {
    match h.terms().max_by_key(|&(i, j, _)| (i + j, i)) {
        Some((_, _, a)) => h.scale(h.ctx().inv(a)),
        None => h.clone(),
    }
}

/// Lifts `f = g0 h0 (mod X)` to `f = g h (mod X^n)`; f monic in Y, g0 and h0 monic and coprime.
fn hensel2(f: &BivarPoly, g0: &Poly, h0: &Poly, n: u32) -> (BivarPoly, BivarPoly) {
    let ctx = f.ctx().clone();
    let s = g0.inv_mod(h0).expect("coprime factors");
    // s g0 + t h0 = 1
    let t = Poly::one(&ctx).sub(&s.mul(g0)).exact_div(h0).expect("Bezout identity");
    let mut g = from_y_poly(&ctx, g0, 0);
    let mut h = from_y_poly(&ctx, h0, 0);
    for k in 1..n {
        let err = truncate(&f.sub(&g.mul(&h)), k + 1);
        let e = x_slice(&err, k);
        if e.is_zero() {
            continue;
        }
        let dg = t.mul(&e).rem(g0);
        let dh = s.mul(&e).rem(h0);
        g = g.add(&from_y_poly(&ctx, &dg, k));
        h = h.add(&from_y_poly(&ctx, &dh, k));
    }
    (g, h)
}

fn hensel_multi(f: &BivarPoly, facs: &[Poly], n: u32) -> Vec<BivarPoly> {
    let ctx = f.ctx();
    if facs.len() == 1 {
        return vec![truncate(f, n)];
    }
    let rest = facs[1..].iter().fold(Poly::one(ctx), |a, b| a.mul(b));
    let (g, h) = hensel2(f, &facs[0], &rest, n);
    let mut out = vec![g];
    out.extend(hensel_multi(&h, &facs[1..], n));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Factors `f`, monic in Y, with f(0, Y) squarefree of full degree.
fn factor_monic_at_zero(f: &BivarPoly) -> Result<Vec<BivarPoly>> {
    let ctx = f.ctx().clone();
    let f0 = x_slice(f, 0);
    let uni: Vec<Poly> = f0.factor().into_iter().map(|(g, _)| g).collect();
    if uni.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    if uni.len() > MAX_LIFTED {
        return Err(Error::BudgetExceeded(format!("{} modular factors to recombine", uni.len())));
    }
    let n = f.deg_x().max(0) as u32 + 1;
    let mut lifted = hensel_multi(f, &uni, n);
    let mut rem = f.clone();
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut hit = None;
        for s in subsets(lifted.len(), k) {
            let mut g = BivarPoly::constant(&ctx, ctx.one());
            for &i in &s {
                g = truncate(&g.mul(&lifted[i]), n);
            }
            if let Ok(q) = rem.exact_div(&g) {
                hit = Some((s, g, q));
                break;
            }
        }
        match hit {
            Some((s, g, q)) => {
                found.push(g);
                rem = q;
                for &i in s.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => k += 1,
        }
    }
    found.push(rem);
    Ok(found)
}

fn is_squarefree(p: &Poly) -> bool {
    let d = p.derivative();
    !d.is_zero() && p.gcd(&d).degree() == 0
}

/// Irreducible factors over the field of `f` (ignoring constants), each
/// normalised. `f` must be squarefree.
pub fn factor(f: &BivarPoly) -> Result<Vec<BivarPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.total_degree() <= 0 {
        return Ok(Vec::new());
    }
    let base = f.ctx().clone();
    let d = f.total_degree() as u32;
    for m in 1..=MAX_SEARCH_EXT {
        let e = if m == 1 { base.clone() } else { base.extension(m)? };
        let fe = f.over(&e)?;
        let top = fe.form(d);
        // try shears c and specialisation points x0 in e
        let limit = e.order().min(64);
        for c in e.elements().take(limit as usize) {
            let lcv = top.eval(c, e.one());
            if e.is_zero(lcv) {
                continue;
            }
            let g = shear_x(&fe, c).scale(e.inv(lcv));
            for x0 in e.elements().take(limit as usize) {
                let g0 = g.at_x(x0);
                if g0.degree() != d as i64 || !is_squarefree(&g0) {
                    continue;
                }
                let local = g.translate(x0, e.zero());
                let mut facs = Vec::new();
                for h in factor_monic_at_zero(&local)? {
                    let back = h.translate(e.neg(x0), e.zero());
                    facs.push(normalize(&shear_x(&back, e.neg(c))));
                }
                return if m == 1 { Ok(sorted(facs)) } else { descend(&base, &e, facs) };
            }
        }
    }
    Err(Error::BudgetExceeded(
        "no separable specialisation found; the polynomial may not be squarefree".into(),
    ))
}

fn sorted(mut v: Vec<BivarPoly>) -> Vec<BivarPoly> {
    v.sort_by_key(|h| {
        let c = h.ctx().clone();
        (h.total_degree(), h.terms().map(|(i, j, a)| (i, j, c.lex_key(a))).collect::<Vec<_>>())
    });
    v
}

/// Groups factors over `e` into Frobenius orbits over `base`.
fn descend(base: &FieldCtx, e: &FieldCtx, facs: Vec<BivarPoly>) -> Result<Vec<BivarPoly>> {
    let emb = embedding(base, e)?;
    let step = base.e() as u64 * base.n() as u64;
    let mut left = facs;
    let mut out = Vec::new();
    while let Some(h) = left.pop() {
        let mut prod = h.clone();
        let mut conj = normalize(&h.frob_coeffs(step));
        while conj != h {
            let pos = left.iter().position(|g| *g == conj).ok_or_else(|| {
                Error::IncompatibleTower("conjugate factor missing".into())
            })?;
            left.remove(pos);
            prod = prod.mul(&conj);
            conj = normalize(&conj.frob_coeffs(step));
        }
        let prod = normalize(&prod);
        let mut down = BivarPoly::zero(base);
        for (i, j, a) in prod.terms() {
            let b = emb.preimage(a).ok_or_else(|| Error::IncompatibleTower("orbit product not rational".into()))?;
            down.add_term(i, j, b);
        }
        out.push(down);
    }
    Ok(sorted(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeVerdict {
    /// Total degrees of the irreducible factors over the base field.
    pub base_factor_degrees: Vec<u32>,
    /// For each base factor, the number of factors over each tested extension degree 2..=deg_bound.
    pub splitting: Vec<Vec<usize>>,
    /// Some base factor stays irreducible over every tested extension.
    pub positive: bool,
}

/// Factors `c` over its field and then each factor over extensions of degree up to `deg_bound`.
pub fn abs_irred_probe(c: &BivarPoly, deg_bound: u32) -> Result<ProbeVerdict> {
    let base = factor(c)?;
    let mut splitting = Vec::new();
    let mut positive = false;
    for h in &base {
        let mut row = Vec::new();
        for m in 2..=deg_bound.max(1) {
            let e = c.ctx().extension(m)?;
            row.push(factor(&h.over(&e)?)?.len());
        }
        if row.iter().all(|&k| k == 1) {
            positive = true;
        }
        splitting.push(row);
    }
    Ok(ProbeVerdict {
        base_factor_degrees: base.iter().map(|h| h.total_degree() as u32).collect(),
        splitting,
        positive,
    })
}
