//! The branch-and-bound oracle against a plain subset scan on random
//! graphs of at most 20 vertices.

use num_bigint::BigUint;
use proptest::prelude::*;

use fractal_mis::graph::{PlainGraph, UndirectedGraph};
use fractal_mis::oracle::{covers_all_edges, is_independent, is_maximal_independent, Oracle, RestrictedQuery, VertexSet};
use fractal_mis::Score;

/// Every independent subset, as bitmasks.
fn independent_subsets(g: &PlainGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let edges: Vec<u32> = g.edge_list().iter().map(|&(u, v)| (1 << u) | (1 << v)).collect();
    (0u32..1 << n)
        .filter(|s| edges.iter().all(|e| s & e != *e))
        .collect()
}

fn to_set(mask: u32) -> VertexSet {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn random_graph() -> impl Strategy<Value = PlainGraph> {
    (1usize..=20).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        (Just(n), proptest::sample::subsequence(pairs, 0..=len))
            .prop_map(|(n, edges)| PlainGraph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn alpha_count_and_enumeration_match_subset_scan(g in random_graph()) {
        let oracle = Oracle::new();
        let subsets = independent_subsets(&g);
        let alpha = subsets.iter().map(|s| s.count_ones()).max().unwrap();
        let mut maximum: Vec<VertexSet> = subsets
            .iter()
            .filter(|s| s.count_ones() == alpha)
            .map(|&s| to_set(s))
            .collect();
        maximum.sort();

        let report = oracle.max_independent_set(&g).unwrap();
        prop_assert_eq!(&report.alpha, &BigUint::from(alpha));
        prop_assert_eq!(&report.witness, &maximum[0]);
        prop_assert!(is_maximal_independent(&g, &report.witness).unwrap());

        prop_assert_eq!(oracle.count_maximum_independent_sets(&g).unwrap(), BigUint::from(maximum.len()));

        let listed = oracle.enumerate_maximum_independent_sets(&g, 5).unwrap();
        let expect: Vec<VertexSet> = maximum.iter().take(5).cloned().collect();
        prop_assert_eq!(listed.enumeration.unwrap(), expect);
        prop_assert_eq!(listed.truncated, maximum.len() > 5);

        let cover = oracle.min_vertex_cover(&g).unwrap();
        prop_assert!(covers_all_edges(&g, &cover.witness).unwrap());
        prop_assert_eq!(&cover.size + &report.alpha, BigUint::from(g.vertex_count()));
    }

    #[test]
    fn restricted_alpha_matches_subset_scan(g in random_graph(), req in any::<u32>(), forb in any::<u32>()) {
        let n = g.vertex_count();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let req = req & full & 0b1011;
        let forb = forb & full & !req & 0b1_0110;
        let q = RestrictedQuery::new(to_set(req).iter(), to_set(forb).iter());
        let best = independent_subsets(&g)
            .into_iter()
            .filter(|s| s & req == req && s & forb == 0)
            .map(|s| s.count_ones())
            .max();
        let expect = best.map_or(Score::Infeasible, |b| Score::from(i64::from(b)));
        prop_assert_eq!(Oracle::new().restricted_alpha(&g, &q).unwrap(), expect);
    }

    #[test]
    fn independence_predicate_matches_edges(g in random_graph(), s in any::<u32>()) {
        let n = g.vertex_count();
        let s = s & ((1u64 << n) - 1) as u32;
        let set = to_set(s);
        let direct = g.edge_list().iter().all(|&(u, v)| !(set.contains(u) && set.contains(v)));
        prop_assert_eq!(is_independent(&g, &set).unwrap(), direct);
    }
}
