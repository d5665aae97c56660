//! Univariate polynomials over a [`FieldCtx`], with root finding and
//! factorisation (squarefree, distinct-degree, Cantor-Zassenhaus).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{FieldCtx, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldCtx,
    c: Vec<FieldElement>,
}

impl Poly {
    pub fn new(ctx: &FieldCtx, c: Vec<FieldElement>) -> Poly {
        let mut p = Poly { ctx: ctx.clone(), c };
        p.trim();
        p
    }
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), c: Vec::new() }
    }
    pub fn constant(ctx: &FieldCtx, a: FieldElement) -> Poly {
        Poly::new(ctx, vec![a])
    }
    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx, ctx.one())
    }
    /// `a * X^k`
    pub fn monomial(ctx: &FieldCtx, a: FieldElement, k: usize) -> Poly {
        let mut c = vec![ctx.zero(); k + 1];
        c[k] = a;
        Poly::new(ctx, c)
    }
    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly::monomial(ctx, ctx.one(), 1)
    }

    fn trim(&mut self) {
        while let Some(&l) = self.c.last() {
            if self.ctx.is_zero(l) {
                self.c.pop();
            } else {
                break;
            }
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.c
    }
    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.c
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.c.get(i).copied().unwrap_or_else(|| self.ctx.zero())
    }
    pub fn lc(&self) -> FieldElement {
        self.c.last().copied().unwrap_or_else(|| self.ctx.zero())
    }
    /// Lowest index with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.c.iter().position(|&a| !self.ctx.is_zero(a))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = &self.ctx;
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect();
        Poly::new(f, c)
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        let f = &self.ctx;
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect();
        Poly::new(f, c)
    }
    pub fn neg(&self) -> Poly {
        Poly::new(&self.ctx, self.c.iter().map(|&a| self.ctx.neg(a)).collect())
    }
    pub fn scale(&self, a: FieldElement) -> Poly {
        Poly::new(&self.ctx, self.c.iter().map(|&x| self.ctx.mul(x, a)).collect())
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let f = &self.ctx;
        let mut r = vec![f.zero(); self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                r[i + j] = f.add(r[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, r)
    }
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.ctx.zero(); k];
        c.extend_from_slice(&self.c);
        Poly::new(&self.ctx, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, b: &Poly) -> (Poly, Poly) {
        assert!(!b.is_zero(), "polynomial division by zero");
        let f = &self.ctx;
        let db = b.c.len() - 1;
        if self.c.len() <= db {
            return (Poly::zero(f), self.clone());
        }
        let li = f.inv(b.lc());
        let mut r = self.c.clone();
        let mut q = vec![f.zero(); r.len() - db];
        for top in (db..r.len()).rev() {
            let c = f.mul(r[top], li);
            if f.is_zero(c) {
                continue;
            }
            q[top - db] = c;
            for (j, &bj) in b.c.iter().enumerate() {
                let k = top - db + j;
                r[k] = f.sub(r[k], f.mul(c, bj));
            }
        }
        r.truncate(db);
        (Poly::new(f, q), Poly::new(f, r))
    }
    pub fn rem(&self, b: &Poly) -> Poly {
        self.divrem(b).1
    }
    /// Exact quotient, or None when `b` does not divide `self`.
    pub fn exact_div(&self, b: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.ctx.inv(self.lc()))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let f = &self.ctx;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != 0 {
            return None;
        }
        Some(s0.scale(f.inv(r0.lc())).rem(m))
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.ctx;
        let mut acc = f.zero();
        for &a in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), a);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.ctx;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul_int(a, i as u64))
            .collect();
        Poly::new(f, c)
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.ctx);
        for &a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(&self.ctx, a));
        }
        acc
    }

    pub fn mul_mod(&self, o: &Poly, m: &Poly) -> Poly {
        self.mul(o).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut r = Poly::one(&self.ctx).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul_mod(&b, m);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_mod(&b, m);
            }
        }
        r
    }

    /// `self^p mod m`, using the Frobenius on coefficients.
    pub fn pth_power_mod(&self, m: &Poly) -> Poly {
        let f = &self.ctx;
        let p = f.p() as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![f.zero(); (self.c.len() - 1) * p + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * p] = f.frob_p(a, 1);
        }
        Poly::new(f, c).rem(m)
    }

    /// `self^(Q^k) mod m` where Q is the field order.
    pub fn field_power_mod(&self, k: u32, m: &Poly) -> Poly {
        let mut h = self.rem(m);
        for _ in 0..k * self.ctx.deg() {
            h = h.pth_power_mod(m);
        }
        h
    }

    /// p-th root of a polynomial in X^p.
    fn pth_root(&self) -> Poly {
        let f = &self.ctx;
        let p = f.p() as usize;
        let d = f.deg() as u64;
        let c = self
            .c
            .iter()
            .step_by(p)
            .map(|&a| f.frob_p(a, d - 1))
            .collect();
        Poly::new(f, c)
    }

    /// Squarefree decomposition of a nonzero polynomial: monic factors with multiplicities.
    pub fn squarefree(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        let f = self.monic();
        if f.degree() <= 0 {
            return out;
        }
        let d = f.derivative();
        if d.is_zero() {
            for (g, m) in f.pth_root().squarefree() {
                out.push((g, m * self.ctx.p() as u32));
            }
            return out;
        }
        let mut c = f.gcd(&d);
        let mut w = f.exact_div(&c).unwrap();
        let mut i = 1u32;
        while w.degree() > 0 {
            let y = w.gcd(&c);
            let z = w.exact_div(&y).unwrap();
            if z.degree() > 0 {
                out.push((z, i));
            }
            i += 1;
            c = c.exact_div(&y).unwrap();
            w = y;
        }
        if c.degree() > 0 {
            for (g, m) in c.pth_root().squarefree() {
                out.push((g, m * self.ctx.p() as u32));
            }
        }
        out
    }

    /// Distinct-degree factorisation of a monic squarefree polynomial.
    pub fn distinct_degree(&self) -> Vec<(Poly, u32)> {
        let f = &self.ctx;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = Poly::x(f);
        let mut h = x.rem(&rest);
        let mut i = 1u32;
        while rest.degree() >= 2 * i as i64 {
            h = h.field_power_mod(1, &rest);
            let g = rest.gcd(&h.sub(&x));
            if g.degree() > 0 {
                rest = rest.exact_div(&g).unwrap();
                h = h.rem(&rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.degree() > 0 {
            let d = rest.degree() as u32;
            out.push((rest, d));
        }
        out
    }

    fn split_once(&self, d: u32, rng: &mut ChaCha8Rng) -> Option<Poly> {
        let f = &self.ctx;
        let n = self.degree() as usize;
        let a = Poly::new(f, (0..n).map(|_| f.random(rng)).collect());
        if a.degree() < 1 {
            return None;
        }
        let b = if f.p() == 2 {
            // absolute trace of a over F_{Q^d}
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..d * f.deg() {
                s = s.pth_power_mod(self);
                t = t.add(&s);
            }
            t
        } else {
            let mut nrm = a.clone();
            let mut s = a.clone();
            for _ in 1..d {
                s = s.field_power_mod(1, self);
                nrm = nrm.mul_mod(&s, self);
            }
            nrm.pow_mod((f.order() - 1) / 2, self).sub(&Poly::one(f))
        };
        let g = self.gcd(&b);
        if g.degree() > 0 && g.degree() < self.degree() {
            Some(g)
        } else {
            None
        }
    }

    /// Splits a monic product of distinct degree-`d` irreducibles.
    pub fn equal_degree(&self, d: u32) -> Vec<Poly> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5ca7_7e2e);
        let mut out = Vec::new();
        let mut stack = vec![self.monic()];
        while let Some(g) = stack.pop() {
            if g.degree() as u32 == d {
                out.push(g);
                continue;
            }
            loop {
                if let Some(h) = g.split_once(d, &mut rng) {
                    let other = g.exact_div(&h).unwrap();
                    stack.push(h);
                    stack.push(other);
                    break;
                }
            }
        }
        out
    }

    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub fn factor(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        for (g, m) in self.squarefree() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d) {
                    out.push((irr, m));
                }
            }
        }
        let f = self.ctx.clone();
        out.sort_by_key(|(g, m)| (g.degree(), g.c.iter().map(|&a| f.lex_key(a)).collect::<Vec<_>>(), *m));
        out
    }

    /// Product of the distinct linear factors: gcd(self, X^Q - X).
    pub fn root_part(&self) -> Poly {
        let f = &self.ctx;
        if self.degree() <= 0 {
            return Poly::one(f);
        }
        let m = self.monic();
        let x = Poly::x(f);
        let xq = x.field_power_mod(1, &m);
        m.gcd(&xq.sub(&x))
    }

    /// Number of distinct roots in the coefficient field.
    pub fn count_roots(&self) -> usize {
        if self.is_zero() {
            return self.ctx.order() as usize;
        }
        self.root_part().degree().max(0) as usize
    }

    /// Distinct roots in the coefficient field, sorted in coordinate-lex order.
    pub fn roots(&self) -> Vec<FieldElement> {
        let f = self.ctx.clone();
        let g = self.root_part();
        if g.degree() <= 0 {
            return Vec::new();
        }
        let mut r: Vec<FieldElement> = g
            .equal_degree(1)
            .into_iter()
            .map(|l| f.neg(l.coeff(0)))
            .collect();
        r.sort_by_key(|&a| f.lex_key(a));
        r
    }
}
