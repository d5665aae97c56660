use std::collections::BTreeSet;

use proptest::prelude::*;
use scatterlab::gf::FieldCtx;
use scatterlab::verify::classify::DEFAULT_CLASSIFY_BUDGET;
use scatterlab::verify::{check_inequalities, exhaustive_classify, replay, run, ClaimRecord, ClaimSpec, Outcome};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inequality_records_replay(q in 2u64..6, t in 2u32..4, k in 3u32..13) {
        let r = check_inequalities(q, t, k).unwrap();
        prop_assert!(replay(&r).unwrap());
        let line = serde_json::to_string(&r).unwrap();
        let back: ClaimRecord = serde_json::from_str(&line).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), line);
        prop_assert_eq!(&back, &r);
    }

    #[test]
    fn key_depends_on_every_parameter(q in 2u64..6, t in 2u32..4, k in 3u32..13) {
        let a = ClaimSpec::Inequality { q, t, k_max: k, sample_r: vec![5 * k] };
        let b = ClaimSpec::Inequality { q: q + 1, t, k_max: k, sample_r: vec![5 * k] };
        let c = ClaimSpec::Inequality { q, t, k_max: k, sample_r: vec![5 * k + 1] };
        let ka = run(&a).unwrap().key;
        prop_assert_ne!(&ka, &run(&b).unwrap().key);
        prop_assert_ne!(&ka, &run(&c).unwrap().key);
    }
}

fn survivors(ctx: &FieldCtx, t: u32, max_km: u32, m: u32) -> BTreeSet<String> {
    exhaustive_classify(ctx, t, max_km, m, false, DEFAULT_CLASSIFY_BUDGET)
        .unwrap()
        .survivors
        .into_iter()
        .map(|s| s.poly)
        .collect()
}

#[test]
fn survivors_shrink_with_probe_depth() {
    for (p, n, t, km) in [(2u64, 3u32, 0u32, 2u32), (3, 2, 0, 1), (2, 4, 1, 3), (3, 3, 2, 2)] {
        let ctx = FieldCtx::new(p, 1, n).unwrap();
        let mut prev: Option<BTreeSet<String>> = None;
        for m in 1..=3 {
            let cur = survivors(&ctx, t, km, m);
            if let Some(pr) = &prev {
                assert!(cur.is_subset(pr), "p={p} n={n} t={t} m={m}");
            }
            prev = Some(cur);
        }
    }
}

#[test]
fn classify_records_replay() {
    let ctx = FieldCtx::new(2, 1, 3).unwrap();
    let recs = scatterlab::verify::classify_records(&ctx, 0, 2, 2, true).unwrap();
    for r in &recs {
        assert_ne!(r.outcome, Outcome::Unresolved);
        assert!(replay(r).unwrap());
    }
}
