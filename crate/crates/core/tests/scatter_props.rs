mod common;

use proptest::prelude::*;
use scatterlab::gf::{FieldCtx, FieldElement};
use scatterlab::linpoly::LinPoly;
use scatterlab::mrd::{codeword_rank, mrd_audit};
use scatterlab::scatter::{exceptional_probe, is_scattered, scatter_witness, weight_distribution};

// q^N up to 2^14
const FIELDS: &[(u64, u32)] = &[(2, 3), (2, 4), (2, 7), (3, 3), (3, 4), (5, 2), (7, 2), (2, 14), (3, 8), (11, 2)];

fn instance(fields: &'static [(u64, u32)]) -> impl Strategy<Value = (LinPoly, u32)> {
    (0..fields.len(), prop::collection::vec((0u32..4, any::<u64>()), 1..4), 0u32..3).prop_filter_map(
        "normalizable",
        move |(i, terms, t)| {
            let (p, n) = fields[i];
            let ctx = FieldCtx::new(p, 1, n).unwrap();
            let terms: Vec<(u32, FieldElement)> =
                terms.into_iter().map(|(k, c)| (k % n, ctx.elem(c % ctx.order()))).collect();
            let f = LinPoly::new(&ctx, terms).ok()?;
            f.normalize(t % n).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn bucketing_matches_pairwise_oracle((f, t) in instance(FIELDS)) {
        let ctx = f.ctx();
        let oracle = common::PairwiseOracle::new(ctx);
        let s = is_scattered(&f, t, ctx).unwrap();
        prop_assert_eq!(s, oracle.scattered(&f, t));
        let w = scatter_witness(&f, t, ctx).unwrap();
        prop_assert_eq!(w.is_none(), s);
        if let Some((x, y)) = w {
            let r = |z| ctx.div(f.eval(z), ctx.frobenius(z, t as i64));
            prop_assert_eq!(r(x), r(y));
            prop_assert!(!ctx.in_subfield(ctx.div(y, x), 1));
        }
    }

    #[test]
    fn scaling_preserves_verdict((f, t) in instance(FIELDS), l in any::<u64>()) {
        let ctx = f.ctx();
        let lam = ctx.elem(1 + l % (ctx.order() - 1));
        let g = f.scale(lam).unwrap();
        prop_assert_eq!(is_scattered(&f, t, ctx).unwrap(), is_scattered(&g, t, ctx).unwrap());
    }

    #[test]
    fn weights_partition_the_nonzero_vectors((f, t) in instance(FIELDS)) {
        let ctx = f.ctx();
        let w = weight_distribution(&f, t, ctx).unwrap();
        let total: u64 = w.iter().map(|(&k, &c)| c * (ctx.q().pow(k) - 1)).sum();
        prop_assert_eq!(total, ctx.order() - 1);
        prop_assert_eq!(w.keys().all(|&k| k == 1), is_scattered(&f, t, ctx).unwrap());
    }

    #[test]
    fn probe_starts_with_base_verdict((f, t) in instance(&[(2, 3), (3, 2), (2, 4)])) {
        let p = exceptional_probe(&f, t, 2).unwrap();
        prop_assert_eq!(p.len(), 2);
        prop_assert_eq!(p[0], is_scattered(&f, t, f.ctx()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn codeword_rank_counts_roots((f, t) in instance(&[(2, 3), (2, 4), (3, 3), (2, 6), (5, 2)]), a in any::<u64>(), b in any::<u64>()) {
        let ctx = f.ctx();
        let (a, b) = (ctx.elem(a % ctx.order()), ctx.elem(b % ctx.order()));
        prop_assume!(!(ctx.is_zero(a) && ctx.is_zero(b)));
        let roots = ctx
            .elements()
            .filter(|&x| ctx.is_zero(ctx.add(ctx.mul(a, ctx.frobenius(x, t as i64)), ctx.mul(b, f.eval(x)))))
            .count() as u64;
        let mut k = 0;
        while ctx.q().pow(k) < roots {
            k += 1;
        }
        prop_assert_eq!(ctx.q().pow(k), roots);
        prop_assert_eq!(codeword_rank(&f, t, a, b), ctx.n() - k);
    }

    #[test]
    fn mrd_iff_scattered((f, t) in instance(&[(2, 3), (2, 4), (3, 3), (2, 5)])) {
        let r = mrd_audit(&f, t);
        let s = is_scattered(&f, t, f.ctx()).unwrap();
        prop_assert_eq!(r.is_mrd, s);
        prop_assert_eq!(r.rank_distribution.values().sum::<u64>(), f.ctx().order().pow(2));
    }
}
