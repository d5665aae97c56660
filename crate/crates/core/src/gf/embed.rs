//! Embeddings between fields of the same characteristic.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::{FieldCtx, FieldElement};
use super::matrix;
use super::upoly::Poly;
use crate::error::{Error, Result};

/// F_p-algebra embedding `src -> dst` sending the defining root of `src`
/// to the lowest (coordinate-lex) root of its modulus in `dst`.
pub struct Embedding {
    src: FieldCtx,
    dst: FieldCtx,
    basis: Vec<FieldElement>,
    pivot_rows: Vec<usize>,
    pivot_inv: Vec<Vec<u64>>,
}

impl Embedding {
    fn build(src: &FieldCtx, dst: &FieldCtx) -> Result<Embedding> {
        if src.p() != dst.p() {
            return Err(Error::IncompatibleTower("different characteristic".into()));
        }
        if dst.deg() % src.deg() != 0 {
            return Err(Error::IncompatibleTower(format!(
                "degree {} does not divide {}",
                src.deg(),
                dst.deg()
            )));
        }
        let modp: Vec<FieldElement> = src.modulus().iter().map(|&c| dst.from_int(c as i64)).collect();
        let roots = Poly::new(dst, modp).roots();
        let rho = *roots.first().ok_or_else(|| Error::IncompatibleTower("modulus has no root".into()))?;
        let mut basis = Vec::with_capacity(src.deg() as usize);
        let mut x = dst.one();
        for _ in 0..src.deg() {
            basis.push(x);
            x = dst.mul(x, rho);
        }
        // columns of the embedding matrix are coords(basis[i])
        let cols: Vec<Vec<u64>> = basis.iter().map(|&b| dst.coords(b)).collect();
        let cols_n = src.deg() as usize;
        let mut t: Vec<Vec<u64>> = (0..cols_n).map(|i| cols[i].clone()).collect();
        // pivot columns of the transpose are independent rows of the matrix
        let pivot_rows = matrix::row_reduce(&mut t, src.p());
        assert_eq!(pivot_rows.len(), cols_n);
        let sub: Vec<Vec<u64>> = pivot_rows
            .iter()
            .map(|&r| (0..cols_n).map(|j| cols[j][r]).collect())
            .collect();
        let pivot_inv = matrix::inverse(&sub, src.p()).expect("independent rows");
        Ok(Embedding { src: src.clone(), dst: dst.clone(), basis, pivot_rows, pivot_inv })
    }

    pub fn src(&self) -> &FieldCtx {
        &self.src
    }
    pub fn dst(&self) -> &FieldCtx {
        &self.dst
    }

    pub fn apply(&self, x: FieldElement) -> FieldElement {
        let c = self.src.coords(x);
        let mut acc = self.dst.zero();
        for (ci, &b) in c.iter().zip(&self.basis) {
            if *ci != 0 {
                acc = self.dst.add(acc, self.dst.mul_int(b, *ci));
            }
        }
        acc
    }

    /// The unique `x` with `apply(x) == y`, if `y` lies in the image.
    pub fn preimage(&self, y: FieldElement) -> Option<FieldElement> {
        let c = self.dst.coords(y);
        let rhs: Vec<u64> = self.pivot_rows.iter().map(|&r| c[r]).collect();
        let x = matrix::mul_vec(&self.pivot_inv, &rhs, self.src.p());
        let x = self.src.from_coords(&x).ok()?;
        if self.apply(x) == y {
            Some(x)
        } else {
            None
        }
    }

    pub fn apply_poly(&self, a: &Poly) -> Poly {
        Poly::new(&self.dst, a.coeffs().iter().map(|&c| self.apply(c)).collect())
    }
}

/// Cached embedding between two fields.
pub fn embedding(src: &FieldCtx, dst: &FieldCtx) -> Result<Arc<Embedding>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Embedding>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (src.id(), dst.id());
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let e = Arc::new(Embedding::build(src, dst)?);
    Ok(cache.lock().unwrap().entry(key).or_insert(e).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_homomorphism() {
        for (p, a, b) in [(2u64, 2u32, 6u32), (3, 2, 4), (2, 3, 6), (5, 1, 3), (2, 1, 4)] {
            let s = FieldCtx::new(p, 1, a).unwrap();
            let d = FieldCtx::new(p, 1, b).unwrap();
            let e = embedding(&s, &d).unwrap();
            for x in s.elements() {
                for y in s.elements().step_by(3) {
                    assert_eq!(e.apply(s.add(x, y)), d.add(e.apply(x), e.apply(y)));
                    assert_eq!(e.apply(s.mul(x, y)), d.mul(e.apply(x), e.apply(y)));
                }
                assert_eq!(e.preimage(e.apply(x)), Some(x));
                assert!(d.in_subfield(e.apply(x), a));
            }
            let outside = d.generator();
            assert_eq!(e.preimage(outside), None);
        }
    }

    #[test]
    fn incompatible() {
        let s = FieldCtx::new(2, 1, 3).unwrap();
        let d = FieldCtx::new(2, 1, 4).unwrap();
        assert!(matches!(embedding(&s, &d), Err(Error::IncompatibleTower(_))));
        let t = FieldCtx::new(3, 1, 3).unwrap();
        assert!(embedding(&s, &t).is_err());
    }
}
