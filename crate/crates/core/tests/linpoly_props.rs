use proptest::prelude::*;
use scatterlab::gf::{FieldCtx, FieldElement};
use scatterlab::linpoly::LinPoly;

const FIELDS: &[(u64, u32)] = &[(2, 4), (2, 5), (3, 3), (5, 2), (2, 6)];

fn instance() -> impl Strategy<Value = (LinPoly, u32)> {
    (0..FIELDS.len(), prop::collection::vec((0u32..6, any::<u64>()), 1..4), 0u32..4).prop_filter_map(
        "non-zero polynomial",
        |(i, terms, t)| {
            let (p, n) = FIELDS[i];
            let ctx = FieldCtx::new(p, 1, n).unwrap();
            let terms: Vec<(u32, FieldElement)> =
                terms.into_iter().map(|(k, c)| (k % n, ctx.elem(c % ctx.order()))).collect();
            let f = LinPoly::new(&ctx, terms).ok()?;
            Some((f, t % n))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn evaluation_is_fq_linear((f, _t) in instance(), a in any::<u64>(), b in any::<u64>(), l in any::<u64>()) {
        let ctx = f.ctx();
        let x = ctx.elem(a % ctx.order());
        let y = ctx.elem(b % ctx.order());
        let lam = ctx.subfield_elements(1)[(l % ctx.q()) as usize];
        let lhs = f.eval(ctx.add(ctx.mul(lam, x), y));
        let rhs = ctx.add(ctx.mul(lam, f.eval(x)), f.eval(y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_matches_basis_images((f, _t) in instance(), a in any::<u64>()) {
        // f(x) = sum_i c_i f(b_i) when x = sum_i c_i b_i with c_i in F_p, for the power basis b_i
        let ctx = f.ctx();
        let x = ctx.elem(a % ctx.order());
        let gen = ctx.elem(ctx.p());
        let mut acc = ctx.zero();
        let mut basis = ctx.one();
        for c in ctx.coords(x) {
            acc = ctx.add(acc, ctx.mul(ctx.from_int(c as i64), f.eval(basis)));
            basis = ctx.mul(basis, gen);
        }
        prop_assert_eq!(acc, f.eval(x));
    }

    #[test]
    fn normalize_is_idempotent((f, t) in instance()) {
        if let Ok((g, s)) = f.normalize(t) {
            prop_assert!(g.is_normalized(s));
            let (h, u) = g.normalize(s).unwrap();
            prop_assert_eq!((h, u), (g, s));
        }
    }

    #[test]
    fn kernel_dimension_counts_roots((f, _t) in instance()) {
        let ctx = f.ctx();
        let roots = ctx.elements().filter(|&x| ctx.is_zero(f.eval(x))).count() as u64;
        prop_assert_eq!(ctx.q().pow(f.kernel_dim()), roots);
    }

    #[test]
    fn text_round_trip((f, _t) in instance()) {
        prop_assert_eq!(LinPoly::parse(f.ctx(), &f.to_text()).unwrap(), f);
    }
}
