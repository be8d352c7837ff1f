use lrw_core::classical::{min_stable_rank, w_decomp, Group, StableFamily};
use lrw_core::fermionic::{
    contributing_configurations, fermionic_decomp, fermionic_multiplicity, vacancy, Factor, FactorList,
};
use lrw_core::lie::{Family, LieSpec};
use lrw_core::partition::weight_from_partition;
use lrw_core::{DominantWeight, Partition};
use proptest::prelude::*;

fn spec(f: Family, n: usize) -> LieSpec {
    LieSpec::new(f, n).unwrap()
}

fn arb_factors() -> impl Strategy<Value = (LieSpec, FactorList)> {
    let specs = vec![
        spec(Family::A, 3),
        spec(Family::B, 3),
        spec(Family::C, 3),
        spec(Family::D, 4),
    ];
    (prop::sample::select(specs), prop::collection::vec((1u32..=2, 0usize..8), 1..=3)).prop_filter_map(
        "total m ≤ 4",
        |(spec, raw)| {
            if raw.iter().map(|(m, _)| m).sum::<u32>() > 4 {
                return None;
            }
            let factors = raw.into_iter().map(|(m, i)| Factor { m, node: i % spec.rank() + 1 }).collect();
            Some((spec.clone(), FactorList::new(&spec, factors).ok()?))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn top_weight_has_multiplicity_one((spec, f) in arb_factors()) {
        let top = f.top_weight(spec.rank());
        prop_assert_eq!(fermionic_multiplicity(&spec, &f, &top).unwrap(), 1);
    }

    #[test]
    fn contributions_are_admissible((spec, f) in arb_factors()) {
        let d = fermionic_decomp(&spec, &f);
        prop_assert!(d.values().all(|&m| m > 0));
        for (w, &m) in &d {
            let configs = contributing_configurations(&spec, &f, w).unwrap();
            prop_assert_eq!(configs.iter().map(|(_, c)| c).sum::<u128>(), m);
            for (config, weight) in &configs {
                prop_assert!(*weight > 0);
                for k in 1..=spec.rank() {
                    for n in 1..=8 {
                        prop_assert!(vacancy(&spec, &f, config, k, n).unwrap() >= 0);
                    }
                }
            }
        }
    }
}

#[test]
fn type_a_rectangles_are_irreducible() {
    for n in 2..=4 {
        let a = spec(Family::A, n);
        for node in 1..=n {
            for m in 1..=3 {
                let f = FactorList::single(&a, m, node).unwrap();
                let top = DominantWeight::fundamental_multiple(n, node, m).unwrap();
                let d = fermionic_decomp(&a, &f);
                assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(top, 1)], "A{n} {m}x{node}");
            }
        }
    }
}

// Rectangle agreement on the smallest stable ranks; the full
// m, ℓ ≤ 3 sweep runs in the acceptance target.
#[test]
fn rectangles_match_w_decomp_small() {
    for (family, group, stable) in [
        (Family::B, Group::O, StableFamily::OOdd),
        (Family::C, Group::Sp, StableFamily::Sp),
        (Family::D, Group::O, StableFamily::OEven),
    ] {
        for ell in 1..=2usize {
            for m in 1..=2u32 {
                let rect = Partition::rectangle(ell, m);
                let floor = if family == Family::D { 4 } else { 2 };
                let rank = min_stable_rank(&rect, stable).max(floor);
                let g = spec(family, rank);
                let f = FactorList::single(&g, m, ell).unwrap();
                let expect: Vec<(DominantWeight, u128)> = w_decomp(&rect, group)
                    .terms()
                    .iter()
                    .map(|(k, &c)| (weight_from_partition(k, rank).unwrap(), c as u128))
                    .collect::<std::collections::BTreeMap<_, _>>()
                    .into_iter()
                    .collect();
                let got: Vec<_> = fermionic_decomp(&g, &f).into_iter().collect();
                assert_eq!(got, expect, "{g} {m}x{ell}");
            }
        }
    }
}
