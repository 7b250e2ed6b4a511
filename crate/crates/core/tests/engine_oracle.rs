use std::collections::BTreeSet;

use chromastat::coloring::labelings;
use chromastat::oracle::{oracle_summary, OracleConfig};
use chromastat::stats::{mean, pmf};
use chromastat::{
    coloring_sum, enumerate_chi_partitions, max_sum_coloring, min_sum_coloring, summarize, Graph,
    SearchConfig,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engine_agrees_with_oracle(g in arb_graph(8)) {
        let cfg = SearchConfig::default();
        let lo = min_sum_coloring(&g, &cfg).unwrap();
        let hi = max_sum_coloring(&g, &cfg).unwrap();
        let oracle = oracle_summary(&g, &OracleConfig::default()).unwrap();
        prop_assert_eq!(lo.chi, oracle.chi);
        prop_assert_eq!(lo.omega, oracle.omega_min);
        prop_assert_eq!(hi.omega, oracle.omega_max);
        prop_assert_eq!(lo.optimal_size_multisets.iter().cloned().collect::<BTreeSet<_>>(), oracle.min_size_multisets);
        prop_assert_eq!(hi.optimal_size_multisets.iter().cloned().collect::<BTreeSet<_>>(), oracle.max_size_multisets);

        let s = summarize(&g, &cfg).unwrap();
        prop_assert!(oracle.min_variances.contains(&s.min.variance));
        prop_assert!(oracle.max_variances.contains(&s.max.variance));
        prop_assert_eq!(s.min.tied_variances.iter().cloned().collect::<BTreeSet<_>>(), oracle.min_variances);
        prop_assert_eq!(s.max.tied_variances.iter().cloned().collect::<BTreeSet<_>>(), oracle.max_variances);
    }

    #[test]
    fn witnesses_are_proper_and_onto(g in arb_graph(10)) {
        let cfg = SearchConfig::default();
        for res in [min_sum_coloring(&g, &cfg).unwrap(), max_sum_coloring(&g, &cfg).unwrap()] {
            prop_assert!(res.coloring.is_proper_for(&g));
            prop_assert_eq!(res.coloring.k(), res.chi);
            prop_assert!(res.coloring.theta().iter().all(|&t| t >= 1));
            prop_assert_eq!(res.coloring.theta().iter().sum::<usize>(), g.order());
            prop_assert_eq!(coloring_sum(&res.coloring), res.omega);
        }
        prop_assert_eq!(summarize(&g, &cfg).unwrap(), summarize(&g, &cfg).unwrap());
    }

    #[test]
    fn every_labeling_lies_between_the_extremes(g in arb_graph(7)) {
        let cfg = SearchConfig::default();
        let s = summarize(&g, &cfg).unwrap();
        prop_assert!(s.mean_chi() <= s.mean_chi_plus());
        for p in enumerate_chi_partitions(&g, s.chi, &cfg).unwrap() {
            for l in labelings(&p) {
                let omega = coloring_sum(&l);
                prop_assert!(s.omega_min() <= omega && omega <= s.omega_max());
                let mu = mean(&pmf(&l));
                prop_assert!(s.mean_chi() <= &mu && &mu <= s.mean_chi_plus());
            }
        }
    }
}

#[test]
fn partition_stream_matches_oracle_partitions() {
    use chromastat::oracle::enumerate_colorings;
    use chromastat::FamilySpec;
    let cfg = SearchConfig::default();
    for spec in [FamilySpec::Cycle(6), FamilySpec::Wheel(7), FamilySpec::Path(6), FamilySpec::Star(5)] {
        let g = chromastat::generate_family(&spec).unwrap();
        let chi = chromastat::chromatic_number(&g, &cfg).unwrap();
        let engine: Vec<_> = enumerate_chi_partitions(&g, chi, &cfg).unwrap().collect();
        let oracle: BTreeSet<_> = enumerate_colorings(&g, chi, &OracleConfig::default())
            .unwrap()
            .map(|c| c.partition().clone())
            .collect();
        assert_eq!(engine.len(), oracle.len(), "{spec}");
        assert_eq!(engine.into_iter().collect::<BTreeSet<_>>(), oracle, "{spec}");
    }
}
