//! Property-based invariants across the library.

use proptest::collection::vec;
use proptest::prelude::*;

use orepack_core::bitset::VertexSet;
use orepack_core::format;
use orepack_core::graph::Graph;
use orepack_core::matching::{brute_force_matching_size, maximum_bipartite_matching, BipartiteGraph};
use orepack_core::oracle::{canonical_key, SmallGraph};
use orepack_core::packing::{self, PackingConfig, PackingOutcome};

fn arb_edges(n: usize, max_m: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    vec((0..n, 0..n), 0..=max_m).prop_map(|pairs| {
        pairs
            .into_iter()
            .filter(|&(u, v)| u != v)
            .collect::<Vec<_>>()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_symmetry_and_degree_sum(edges in arb_edges(12, 30)) {
        let g = Graph::from_edges(12, &edges).unwrap();
        let degree_sum: usize = (0..12).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for u in 0..12 {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..12 {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        // complement is an involution
        let cc = g.complement().complement();
        prop_assert_eq!(cc.edges(), g.edges());
    }

    #[test]
    fn degree_order_is_a_sorted_permutation(edges in arb_edges(15, 40)) {
        let g = Graph::from_edges(15, &edges).unwrap();
        let order = g.degree_sequence_order();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..15).collect::<Vec<u32>>());
        for w in order.windows(2) {
            prop_assert!(g.degree(w[0] as usize) >= g.degree(w[1] as usize));
        }
    }

    #[test]
    fn greedy_independent_set_is_independent_and_maximal(edges in arb_edges(14, 40)) {
        let g = Graph::from_edges(14, &edges).unwrap();
        let all = VertexSet::full(14);
        let ind = g.greedy_independent_set(&all, None);
        prop_assert!(g.is_independent(&ind));
        // maximality: every vertex outside has a neighbor inside
        for v in 0..14 {
            if !ind.contains(v) {
                prop_assert!(!g.neighbors(v).is_disjoint(&ind));
            }
        }
        prop_assert!(ind.len() <= g.independence_number());
    }

    #[test]
    fn bitset_ops_match_a_set_model(
        a in vec(0..60usize, 0..40),
        b in vec(0..60usize, 0..40),
    ) {
        use std::collections::BTreeSet;
        let sa: BTreeSet<usize> = a.iter().copied().collect();
        let sb: BTreeSet<usize> = b.iter().copied().collect();
        let va = VertexSet::from_members(60, a.iter().copied());
        let vb = VertexSet::from_members(60, b.iter().copied());

        let mut union = va.clone();
        union.union_with(&vb);
        prop_assert_eq!(union.to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());

        let mut inter = va.clone();
        inter.intersect_with(&vb);
        prop_assert_eq!(inter.to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
        prop_assert_eq!(va.intersection_len(&vb), sa.intersection(&sb).count());

        let mut diff = va.clone();
        diff.difference_with(&vb);
        prop_assert_eq!(diff.to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());

        prop_assert_eq!(va.len(), sa.len());
        prop_assert_eq!(va.first(), sa.iter().next().copied());
        prop_assert_eq!(va.is_disjoint(&vb), sa.is_disjoint(&sb));
    }

    #[test]
    fn hopcroft_karp_matches_brute_force(
        edges in vec((0..6usize, 0..6usize), 0..20),
    ) {
        let mut bg = BipartiteGraph::new(6, 6);
        let mut seen = std::collections::BTreeSet::new();
        for (l, r) in edges {
            if seen.insert((l, r)) {
                bg.add_edge(l, r);
            }
        }
        let fast = maximum_bipartite_matching(&bg).len();
        let slow = brute_force_matching_size(&bg);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn canonical_key_is_permutation_invariant(
        edges in arb_edges(6, 10),
        perm_seed in 0..720usize,
    ) {
        let g = SmallGraph::from_edges(6, &edges);
        // Build the perm_seed-th permutation of 0..6 in factorial base.
        let mut pool: Vec<usize> = (0..6).collect();
        let mut perm = Vec::new();
        let mut s = perm_seed;
        for radix in (1..=6).rev() {
            perm.push(pool.remove(s % radix));
            s /= radix;
        }
        let mapped_edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = SmallGraph::from_edges(6, &mapped_edges);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }

    #[test]
    fn graph_format_round_trips(edges in arb_edges(25, 60)) {
        let g = Graph::from_edges(25, &edges).unwrap();
        let text = format::serialize_graph(&g);
        let back = format::parse_graph(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(format::serialize_graph(&back), text);
    }
}

proptest! {
    // End-to-end runs are costly; keep the case count small.
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn engine_success_always_verifies(seed in 0u64..1 << 48, m in 0usize..399) {
        // Relaxed degree bound exercises the engine at desk scale; soundness
        // (a Success is a checked packing) must hold regardless of regime.
        let n = 400;
        let cfg = PackingConfig {
            maxdeg_divisor: 2.0,
            seed,
            ..PackingConfig::default()
        };
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = orepack_core::models::GModel::RandomEdges(m.min(n - 2))
            .sample(n, &mut rng)
            .unwrap();
        let h = Graph::perfect_matching(n);
        match packing::pack(&g, &h, &cfg).unwrap() {
            PackingOutcome::Success { map, .. } => {
                prop_assert_eq!(packing::verify_packing(&g, &h, &map), Ok(true));
            }
            PackingOutcome::GuaranteeViolation { violation, .. } => {
                // acceptable outside the theorem regime; must name a stage
                prop_assert!(!violation.stage.is_empty());
            }
        }
    }
}
