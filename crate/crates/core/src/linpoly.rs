//! Linearized polynomials `f(X) = sum A_i X^(q^k_i)` over `F_{q^n}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{matrix, Embedding, FieldCtx, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinPoly {
    ctx: FieldCtx,
    /// (k, A) with strictly increasing k and nonzero A.
    terms: Vec<(u32, FieldElement)>,
}

impl LinPoly {
    /// Builds from (q-degree, coefficient) pairs; repeated degrees are summed.
    pub fn new(ctx: &FieldCtx, terms: Vec<(u32, FieldElement)>) -> Result<LinPoly> {
        let mut m: BTreeMap<u32, FieldElement> = BTreeMap::new();
        for (k, a) in terms {
            if !ctx.owns(a) {
                return Err(Error::FieldMismatch);
            }
            let e = m.entry(k).or_insert(ctx.zero());
            *e = ctx.add(*e, a);
        }
        let terms: Vec<_> = m.into_iter().filter(|(_, a)| !ctx.is_zero(*a)).collect();
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(LinPoly { ctx: ctx.clone(), terms })
    }

    /// Monic polynomial with unit coefficients on the given q-degrees.
    pub fn from_degrees(ctx: &FieldCtx, ks: &[u32]) -> Result<LinPoly> {
        LinPoly::new(ctx, ks.iter().map(|&k| (k, ctx.one())).collect())
    }

    /// Parses `k:<coords>;k:<coords>;...`, e.g. `0:1;2:1`.
    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<LinPoly> {
        let mut terms = Vec::new();
        for part in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, c) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected k:coords, got '{part}'")))?;
            let k: u32 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad q-degree '{k}'")))?;
            terms.push((k, ctx.parse_elem(c)?));
        }
        LinPoly::new(ctx, terms)
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(k, a)| {
                let mut c = self.ctx.coords(a);
                while c.len() > 1 && c.last() == Some(&0) {
                    c.pop();
                }
                let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("{k}:{}", c.join(","))
            })
            .collect();
        parts.join(";")
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    pub fn terms(&self) -> &[(u32, FieldElement)] {
        &self.terms
    }
    /// Largest q-degree k_M.
    pub fn k_max(&self) -> u32 {
        self.terms.last().unwrap().0
    }
    pub fn k_min(&self) -> u32 {
        self.terms[0].0
    }
    pub fn coeff(&self, k: u32) -> FieldElement {
        self.terms
            .iter()
            .find(|t| t.0 == k)
            .map(|t| t.1)
            .unwrap_or_else(|| self.ctx.zero())
    }
    pub fn lc(&self) -> FieldElement {
        self.terms.last().unwrap().1
    }
    /// Degree as an ordinary polynomial, q^k_M.
    pub fn degree(&self) -> u64 {
        self.ctx.q().pow(self.k_max())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.ctx;
        let mut acc = f.zero();
        for &(k, a) in &self.terms {
            acc = f.add(acc, f.mul(a, f.frobenius(x, k as i64)));
        }
        acc
    }

    /// The same polynomial with coefficients mapped into a larger field.
    pub fn lift(&self, emb: &Embedding) -> LinPoly {
        assert_eq!(emb.src(), &self.ctx);
        LinPoly {
            ctx: emb.dst().clone(),
            terms: self.terms.iter().map(|&(k, a)| (k, emb.apply(a))).collect(),
        }
    }

    /// Lifts into `ext`, or returns a clone if already there.
    pub fn over(&self, ext: &FieldCtx) -> Result<LinPoly> {
        if ext == &self.ctx {
            return Ok(self.clone());
        }
        if ext.q() != self.ctx.q() {
            return Err(Error::IncompatibleTower("base fields F_q differ".into()));
        }
        let emb = crate::gf::embedding(&self.ctx, ext)?;
        Ok(self.lift(&emb))
    }

    /// Applies `a -> a^(q^i)` to every coefficient.
    pub fn twist(&self, i: i64) -> LinPoly {
        LinPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|&(k, a)| (k, self.ctx.frobenius(a, i))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Result<LinPoly> {
        LinPoly::new(&self.ctx, self.terms.iter().map(|&(k, a)| (k, self.ctx.mul(a, c))).collect())
    }

    pub fn monic(&self) -> LinPoly {
        self.scale(self.ctx.inv(self.lc())).unwrap()
    }

    /// Normal form for the index-`t` pair `(x^(q^t), f(x))`; returns the new
    /// polynomial and index.
    pub fn normalize(&self, t: u32) -> Result<(LinPoly, u32)> {
        let n = self.ctx.n();
        let drop_t = |f: &LinPoly, t: u32| -> Result<LinPoly> {
            LinPoly::new(&f.ctx, f.terms.iter().copied().filter(|&(k, _)| k != t).collect())
                .map_err(|_| Error::InvalidArgument("polynomial reduces to a multiple of X^(q^t)".into()))
        };
        let mut f = drop_t(self, t)?;
        let mut t = t;
        if t > 0 && f.k_min() > 0 {
            let t0 = f.k_min();
            let raise = ((n as i64 - t0 as i64) % n as i64 + n as i64) % n as i64;
            let terms = f
                .terms
                .iter()
                .map(|&(k, a)| (k - t0, f.ctx.frobenius(a, raise)))
                .collect();
            f = LinPoly::new(&f.ctx, terms)?;
            t = ((t as i64 - t0 as i64).rem_euclid(n as i64)) as u32;
            f = drop_t(&f, t)?;
        }
        Ok((f.monic(), t))
    }

    pub fn is_normalized(&self, t: u32) -> bool {
        self.coeff(t) == self.ctx.zero()
            && (t == 0 || self.k_min() == 0)
            && self.lc() == self.ctx.one()
    }

    /// Dimension over F_q of the kernel of x -> f(x) on the coefficient field.
    pub fn kernel_dim(&self) -> u32 {
        let f = &self.ctx;
        let d = f.deg() as usize;
        let mut rows = vec![vec![0u64; d]; d];
        let mut basis = f.one();
        let x = if d > 1 { f.elem(f.p()) } else { f.one() };
        for j in 0..d {
            let c = f.coords(self.eval(basis));
            for i in 0..d {
                rows[i][j] = c[i];
            }
            basis = f.mul(basis, x);
        }
        let r = matrix::rank(&rows, f.p()) as u32;
        (d as u32 - r) / f.e()
    }
}
