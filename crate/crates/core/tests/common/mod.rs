//! Slow, independent oracles shared by the integration tests.
#![allow(dead_code)]

use scatterlab::curve::BivarPoly;
use scatterlab::gf::{embedding, FieldCtx, FieldElement, Poly};
use scatterlab::linpoly::LinPoly;

/// All monic normalized polynomials with q-degrees at most `k_max` (and below
/// n), paired with every index t <= min(3, n - 1).
pub fn corpus(ctx: &FieldCtx, k_max: u32) -> Vec<(LinPoly, u32)> {
    let n = ctx.n();
    let top = k_max.min(n - 1);
    let nonzero: Vec<FieldElement> = ctx.nonzero().collect();
    let mut out = Vec::new();
    for t in 0..=3u32.min(n - 1) {
        let degrees: Vec<u32> = (0..=top).filter(|&k| k != t).collect();
        for mask in 1u32..(1 << degrees.len()) {
            let support: Vec<u32> = (0..degrees.len()).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i]).collect();
            if t > 0 && support[0] != 0 {
                continue;
            }
            let free = support.len() - 1;
            let mut idx = vec![0usize; free];
            loop {
                let mut terms: Vec<(u32, FieldElement)> = (0..free).map(|i| (support[i], nonzero[idx[i]])).collect();
                terms.push((support[free], ctx.one()));
                let f = LinPoly::new(ctx, terms).unwrap();
                assert!(f.is_normalized(t));
                out.push((f, t));
                let mut i = 0;
                while i < free {
                    idx[i] += 1;
                    if idx[i] < nonzero.len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == free {
                    break;
                }
            }
        }
    }
    out
}

/// Direct test of the definition: no two F_q-independent x, y give the same
/// value of f(x)/x^(q^t). Powers are taken by repeated multiplication.
pub struct PairwiseOracle {
    ctx: FieldCtx,
    xs: Vec<FieldElement>,
    /// pows[k][i] = xs[i]^(q^k)
    pows: Vec<Vec<FieldElement>>,
}

impl PairwiseOracle {
    pub fn new(ctx: &FieldCtx) -> PairwiseOracle {
        let xs: Vec<FieldElement> = ctx.nonzero().collect();
        let q = ctx.q();
        let mut pows = vec![xs.clone()];
        for _ in 1..ctx.n().max(1) {
            let prev = pows.last().unwrap();
            pows.push(prev.iter().map(|&x| ctx.pow(x, q)).collect());
        }
        PairwiseOracle { ctx: ctx.clone(), xs, pows }
    }

    fn in_base(&self, z: FieldElement) -> bool {
        self.ctx.pow(z, self.ctx.q()) == z
    }

    pub fn scattered(&self, f: &LinPoly, t: u32) -> bool {
        let c = &self.ctx;
        let vals: Vec<FieldElement> = (0..self.xs.len())
            .map(|i| {
                let fx = f
                    .terms()
                    .iter()
                    .fold(c.zero(), |acc, &(k, a)| c.add(acc, c.mul(a, self.pows[k as usize][i])));
                c.div(fx, self.pows[t as usize][i])
            })
            .collect();
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                if vals[i] == vals[j] && !self.in_base(c.div(self.xs[j], self.xs[i])) {
                    return false;
                }
            }
        }
        true
    }
}

/// Roots of a univariate polynomial by evaluation at every field element.
pub fn brute_roots(p: &Poly) -> usize {
    p.ctx().elements().filter(|&x| p.ctx().is_zero(p.eval(x))).count()
}

fn monic_of_degree(ctx: &FieldCtx, d: usize) -> Vec<Poly> {
    let q = ctx.order();
    let total = q.pow(d as u32);
    (0..total)
        .map(|mut code| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(ctx.elem(code % q));
                code /= q;
            }
            c.push(ctx.one());
            Poly::new(ctx, c)
        })
        .collect()
}

/// Irreducibility by trial division over all monic polynomials of degree <= deg/2.
pub fn irreducible_by_trial(p: &Poly) -> bool {
    let d = p.degree();
    if d < 1 {
        return false;
    }
    for k in 1..=(d as usize / 2) {
        for g in monic_of_degree(p.ctx(), k) {
            if p.rem(&g).is_zero() {
                return false;
            }
        }
    }
    true
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Branches at the origin via the Newton polygon: each edge is resolved by
/// a toric substitution X = U^a V^g, Y = U^b V^d (ad - bg = 1), and the
/// roots of the edge polynomial are followed recursively. None when the
/// curve is not reduced along an axis or the recursion is too deep.
pub fn newton_branches(h: &BivarPoly) -> Option<u64> {
    newton_rec(h, 0)
}

fn newton_rec(h: &BivarPoly, depth: u32) -> Option<u64> {
    if depth > 40 || h.is_zero() {
        return None;
    }
    let ex = h.terms().map(|(i, _, _)| i).min()?;
    let ey = h.terms().map(|(_, j, _)| j).min()?;
    if ex > 1 || ey > 1 {
        return None;
    }
    let mut total = (ex + ey) as u64;
    let h = h.div_monomial(ex, ey).ok()?;
    let ctx = h.ctx().clone();
    if !ctx.is_zero(h.coeff(0, 0)) {
        return Some(total);
    }
    let pts: Vec<(i64, i64)> = h.terms().map(|(i, j, _)| (i as i64, j as i64)).collect();
    let j0 = pts.iter().filter(|p| p.0 == 0).map(|p| p.1).min()?;
    let mut cur = (0i64, j0);
    while cur.1 > 0 {
        // steepest descent to the right; the farthest point on ties
        let mut best: Option<(i64, i64)> = None;
        for &p in pts.iter().filter(|p| p.1 < cur.1 && p.0 > cur.0) {
            best = match best {
                None => Some(p),
                Some(b) => {
                    let lhs = (cur.1 - p.1) * (b.0 - cur.0);
                    let rhs = (cur.1 - b.1) * (p.0 - cur.0);
                    if lhs > rhs || (lhs == rhs && p.0 > b.0) {
                        Some(p)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let next = best?;
        let (di, dj) = (next.0 - cur.0, cur.1 - next.1);
        let g = gcd(di, dj);
        let (b, a) = (di / g, dj / g);
        let delta = (1..=b).find(|&d| (a * d - 1).rem_euclid(b) == 0)?;
        let gamma = (a * delta - 1) / b;
        let n0 = a * cur.0 + b * cur.1;
        let mut terms = Vec::new();
        for (i, j, c) in h.terms() {
            let (i, j) = (i as i64, j as i64);
            terms.push((((a * i + b * j - n0) as u32, (gamma * i + delta * j) as u32), c));
        }
        let h1 = BivarPoly::new(&ctx, terms);
        let vmin = h1.terms().map(|(_, j, _)| j).min()?;
        let h1 = h1.div_monomial(0, vmin).ok()?;
        let edge = Poly::new(&ctx, (0..=h1.deg_y().max(0) as u32).map(|j| h1.coeff(0, j)).collect());
        let zmin = edge.order()?;
        let edge = Poly::new(&ctx, edge.coeffs()[zmin..].to_vec());
        for (pi, r) in edge.factor() {
            let d = pi.degree() as u32;
            if r == 1 {
                total += d as u64;
                continue;
            }
            let sub = if d == 1 {
                let c = ctx.neg(ctx.div(pi.coeff(0), pi.coeff(1)));
                newton_rec(&h1.shift_y(c), depth + 1)?
            } else {
                let ext = ctx.extension(d).ok()?;
                let emb = embedding(&ctx, &ext).ok()?;
                let c = emb.apply_poly(&pi).roots()[0];
                newton_rec(&h1.lift(&emb).shift_y(c), depth + 1)?
            };
            total += d as u64 * sub;
        }
        cur = next;
    }
    Some(total)
}
