mod common;

use proptest::prelude::*;
use scatterlab::gf::{embedding, FieldCtx, Poly};

const FIELDS: &[(u64, u32, u32)] = &[(2, 1, 5), (2, 2, 3), (3, 1, 4), (5, 1, 2), (7, 1, 3), (2, 1, 21), (3, 2, 7)];

fn field() -> impl Strategy<Value = FieldCtx> {
    (0..FIELDS.len()).prop_map(|i| {
        let (p, e, n) = FIELDS[i];
        FieldCtx::new(p, e, n).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_and_frobenius_period(ctx in field(), a in any::<u64>(), b in any::<u64>()) {
        let x = ctx.elem(a % ctx.order());
        let y = ctx.elem(b % ctx.order());
        if !ctx.is_zero(x) {
            prop_assert_eq!(ctx.mul(x, ctx.inv(x)), ctx.one());
        }
        prop_assert_eq!(ctx.frobenius(x, ctx.n() as i64), x);
        prop_assert_eq!(ctx.pow(x, ctx.q()), ctx.frobenius(x, 1));
        for i in 0..ctx.n() as i64 {
            prop_assert_eq!(ctx.frobenius(ctx.add(x, y), i), ctx.add(ctx.frobenius(x, i), ctx.frobenius(y, i)));
            prop_assert_eq!(ctx.frobenius(ctx.frobenius(x, i), -i), x);
        }
    }

    #[test]
    fn norm_is_multiplicative(ctx in field(), a in any::<u64>(), b in any::<u64>()) {
        let x = ctx.elem(a % ctx.order());
        let y = ctx.elem(b % ctx.order());
        prop_assert_eq!(ctx.norm(ctx.mul(x, y)), ctx.mul(ctx.norm(x), ctx.norm(y)));
        prop_assert!(ctx.in_subfield(ctx.norm(x), 1));
    }

    #[test]
    fn table_and_reference_arithmetic_agree(ctx in field(), a in any::<u64>(), b in any::<u64>()) {
        let x = ctx.elem(a % ctx.order());
        let y = ctx.elem(b % ctx.order());
        prop_assert_eq!(ctx.mul(x, y), ctx.mul_reference(x, y));
        prop_assert_eq!(ctx.add(x, y), ctx.add_reference(x, y));
    }

    #[test]
    fn embedded_elements_lie_in_subfield(i in 0usize..4, m in 2u32..4, a in any::<u64>(), b in any::<u64>()) {
        let (p, e, n) = [(2u64, 1u32, 2u32), (2, 1, 3), (3, 1, 2), (2, 2, 2)][i];
        let small = FieldCtx::new(p, e, n).unwrap();
        let big = small.extension(m).unwrap();
        let emb = embedding(&small, &big).unwrap();
        let x = small.elem(a % small.order());
        let y = small.elem(b % small.order());
        let ex = emb.apply(x);
        prop_assert!(big.in_subfield(ex, n));
        prop_assert_eq!(emb.preimage(ex), Some(x));
        prop_assert_eq!(emb.apply(small.mul(x, y)), big.mul(ex, emb.apply(y)));
        prop_assert_eq!(emb.apply(small.add(x, y)), big.add(ex, emb.apply(y)));
    }

    #[test]
    fn root_counts_match_evaluation(i in 0usize..3, coeffs in prop::collection::vec(any::<u64>(), 2..12)) {
        let ctx = [FieldCtx::new(2, 1, 4), FieldCtx::new(3, 1, 2), FieldCtx::new(5, 1, 1)][i].clone().unwrap();
        let p = Poly::new(&ctx, coeffs.iter().map(|&c| ctx.elem(c % ctx.order())).collect());
        prop_assume!(!p.is_zero());
        prop_assert_eq!(p.count_roots(), common::brute_roots(&p));
        let mut roots = p.roots();
        roots.sort_by_key(|r| r.index());
        roots.dedup();
        prop_assert_eq!(roots.len(), common::brute_roots(&p));
    }

    #[test]
    fn factors_are_irreducible_by_trial_division(i in 0usize..3, coeffs in prop::collection::vec(any::<u64>(), 2..8)) {
        let ctx = [FieldCtx::new(2, 1, 1), FieldCtx::new(3, 1, 1), FieldCtx::new(2, 1, 2)][i].clone().unwrap();
        let p = Poly::new(&ctx, coeffs.iter().map(|&c| ctx.elem(c % ctx.order())).collect());
        prop_assume!(p.degree() >= 1);
        let fac = p.factor();
        let mut prod = Poly::one(&ctx);
        for (g, r) in &fac {
            prop_assert!(common::irreducible_by_trial(g));
            for _ in 0..*r {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, p.monic());
        let irreducible = fac.len() == 1 && fac[0].1 == 1;
        prop_assert_eq!(irreducible, common::irreducible_by_trial(&p));
    }
}
