//! Number of branches (places) centred at a point, by resolving the
//! singularity with quadratic transforms.
//!
//! At each step the tangent cone is factored. A tangent of multiplicity one
//! carries exactly one smooth branch. A repeated tangent is blown up and the
//! count continues at the corresponding point of the exceptional line; a
//! Galois orbit of `d` conjugate tangents contributes `d` times the count at
//! one of them, computed over the degree-`d` extension.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{embedding, FieldElement, Poly};

use super::bivar::BivarPoly;

pub const DEFAULT_BLOWUP_BUDGET: u32 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BranchCount {
    Resolved { branches: u64, blowups: u32 },
    Unresolved { reason: String },
}

impl BranchCount {
    pub fn count(&self) -> Option<u64> {
        match self {
            BranchCount::Resolved { branches, .. } => Some(*branches),
            BranchCount::Unresolved { .. } => None,
        }
    }
}

struct Budget {
    used: u32,
    limit: u32,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.used >= self.limit {
            return Err(Error::ResolutionBudgetExceeded(self.limit));
        }
        self.used += 1;
        Ok(())
    }
}

/// Tangent cone `sum c_i X^i Y^(m-i)` dehomogenised at X = 1, as a polynomial in Y/X.
pub fn tangent_poly(h: &BivarPoly, m: u32) -> Poly {
    let ctx = h.ctx();
    Poly::new(ctx, (0..=m).map(|k| h.coeff(m - k, k)).collect())
}

fn count(h: &BivarPoly, b: &mut Budget) -> Result<u64> {
    let m = h.ord().ok_or(Error::ZeroPolynomial)?;
    if m <= 1 {
        return Ok(m as u64);
    }
    let ctx = h.ctx().clone();
    let mut total = 0u64;
    // power of X dividing the cone: multiplicity of the tangent X = 0
    let r_v = (0..=m).find(|&i| !ctx.is_zero(h.coeff(i, m - i))).unwrap();
    if r_v == 1 {
        total += 1;
    } else if r_v > 1 {
        b.spend()?;
        total += count(&h.eta(m)?, b)?;
    }
    for (pi, r) in tangent_poly(h, m).factor() {
        let d = pi.degree() as u32;
        if r == 1 {
            total += d as u64;
            continue;
        }
        b.spend()?;
        if d == 1 {
            let c = ctx.neg(pi.coeff(0));
            total += count(&h.theta(m)?.shift_y(c), b)?;
        } else {
            let ext = ctx.extension(d)?;
            let emb = embedding(&ctx, &ext)?;
            let c = emb.apply_poly(&pi).roots()[0];
            let hl = h.lift(&emb);
            total += d as u64 * count(&hl.theta(m)?.shift_y(c), b)?;
        }
    }
    Ok(total)
}

/// Branches of `h = 0` centred at the origin.
pub fn branches_at_origin(h: &BivarPoly, budget: u32) -> Result<BranchCount> {
    match h.ord() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::PointNotOnCurve),
        _ => {}
    }
    let mut b = Budget { used: 0, limit: budget };
    match count(h, &mut b) {
        Ok(n) => Ok(BranchCount::Resolved { branches: n, blowups: b.used }),
        Err(e @ Error::ResolutionBudgetExceeded(_)) | Err(e @ Error::FieldTooLarge { .. }) => {
            Ok(BranchCount::Unresolved { reason: e.to_string() })
        }
        Err(e) => Err(e),
    }
}

/// Multiplicity of `h` at (x, y) and its tangent cone there.
pub fn multiplicity_at(h: &BivarPoly, x: FieldElement, y: FieldElement) -> Result<(u32, BivarPoly)> {
    let t = h.translate(x, y);
    match t.ord() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::PointNotOnCurve),
        Some(m) => Ok((m, t.form(m))),
    }
}

/// Branches of `h = 0` centred at the affine point (x, y).
pub fn branches_at(h: &BivarPoly, x: FieldElement, y: FieldElement, budget: u32) -> Result<BranchCount> {
    branches_at_origin(&h.translate(x, y), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    fn count_of(h: &BivarPoly) -> u64 {
        branches_at_origin(h, DEFAULT_BLOWUP_BUDGET).unwrap().count().unwrap()
    }

    #[test]
    fn node_cusp_tacnode() {
        let f = FieldCtx::new(5, 1, 1).unwrap();
        let one = f.one();
        // Y^2 - X^2 - X^3: node
        let node = BivarPoly::new(&f, [((0, 2), one), ((2, 0), f.from_int(-1)), ((3, 0), f.from_int(-1))]);
        assert_eq!(count_of(&node), 2);
        // Y^2 - X^3: cusp
        let cusp = BivarPoly::new(&f, [((0, 2), one), ((3, 0), f.from_int(-1))]);
        assert_eq!(count_of(&cusp), 1);
        // Y^2 - X^4: tacnode
        let tac = BivarPoly::new(&f, [((0, 2), one), ((4, 0), f.from_int(-1))]);
        assert_eq!(count_of(&tac), 2);
        // Y^2 + X^2 over F_3 has conjugate tangents
        let g = FieldCtx::new(3, 1, 1).unwrap();
        let c = BivarPoly::new(&g, [((0, 2), g.one()), ((2, 0), g.one())]);
        assert_eq!(count_of(&c), 2);
    }

    #[test]
    fn conjugate_repeated_tangents() {
        // (Y^2 + X^2)^2 + X^5 over F_3: two conjugate tacnodal directions
        let g = FieldCtx::new(3, 1, 1).unwrap();
        let base = BivarPoly::new(&g, [((0, 2), g.one()), ((2, 0), g.one())]);
        let h = base.mul(&base).add(&BivarPoly::monomial(&g, g.one(), 5, 0));
        assert_eq!(count_of(&h), 2);
    }

    #[test]
    fn multiplicity_and_cone() {
        let f = FieldCtx::new(5, 1, 1).unwrap();
        let c = BivarPoly::new(&f, [((0, 2), f.one()), ((3, 0), f.one())]);
        let (m, cone) = multiplicity_at(&c, f.zero(), f.zero()).unwrap();
        assert_eq!(m, 2);
        assert_eq!(cone, BivarPoly::monomial(&f, f.one(), 0, 2));
        // (-1, 1) is a smooth point of Y^2 + X^3
        assert_eq!(multiplicity_at(&c, f.from_int(-1), f.one()).unwrap().0, 1);
        assert_eq!(multiplicity_at(&c, f.one(), f.one()), Err(Error::PointNotOnCurve));
    }

    #[test]
    fn theta_example() {
        let f = FieldCtx::new(5, 1, 1).unwrap();
        let c = BivarPoly::new(&f, [((0, 2), f.one()), ((3, 0), f.one())]);
        let want = BivarPoly::new(&f, [((0, 2), f.one()), ((1, 0), f.one())]);
        assert_eq!(c.theta(2).unwrap(), want);
        assert_eq!(c.shear(f.zero()), c);
    }

    #[test]
    fn errors() {
        let f = FieldCtx::new(2, 1, 1).unwrap();
        let c = BivarPoly::new(&f, [((0, 0), f.one()), ((1, 0), f.one())]);
        assert_eq!(branches_at_origin(&c, 10), Err(Error::PointNotOnCurve));
        // non-reduced: Y^2, never resolves
        let y2 = BivarPoly::monomial(&f, f.one(), 0, 2);
        assert!(matches!(branches_at_origin(&y2, 10).unwrap(), BranchCount::Unresolved { .. }));
    }
}
