//! Randomized structural invariants over seeded block graphs.

use proptest::prelude::*;

use rainbow_blocks::corpus::random_block_graph;
use rainbow_blocks::graph::{block_decomposition, distance_profile, is_geodetic, recognize};
use rainbow_blocks::oracle::{is_rainbow_connected, is_strong_rainbow_connected};
use rainbow_blocks::src_algo::{src_number, strong_rainbow_color};
use rainbow_blocks::{EdgeColoring, Graph};

fn arb_block_graph() -> impl Strategy<Value = Graph> {
    (0u64..10_000, 1usize..10, 2usize..6, any::<bool>()).prop_map(
        |(seed, blocks, max_size, bridgeless)| {
            random_block_graph(seed, blocks, max_size.max(3), bridgeless).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_round_trips(g in arb_block_graph()) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn block_edges_partition_the_edge_set(g in arb_block_graph()) {
        let bd = block_decomposition(&g);
        prop_assert_eq!(bd.block_of_edge.len(), g.edge_count());
        let mut per_block = vec![0usize; bd.blocks.len()];
        for &b in &bd.block_of_edge {
            per_block[b] += 1;
        }
        let total: usize = per_block.iter().sum();
        prop_assert_eq!(total, g.edge_count());
        // Distinct blocks intersect in at most one vertex, a cut vertex.
        for i in 0..bd.blocks.len() {
            for j in (i + 1)..bd.blocks.len() {
                let shared: Vec<usize> = bd.blocks[i]
                    .iter()
                    .copied()
                    .filter(|v| bd.blocks[j].binary_search(v).is_ok())
                    .collect();
                prop_assert!(shared.len() <= 1);
                for v in shared {
                    prop_assert!(bd.is_cut_vertex(v));
                }
            }
        }
    }

    #[test]
    fn distances_are_metric(g in arb_block_graph()) {
        let dp = distance_profile(&g);
        let n = g.vertex_count();
        prop_assert!(dp.radius <= dp.diameter);
        prop_assert!(dp.diameter <= 2 * dp.radius);
        prop_assert!(!dp.centers.is_empty());
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(dp.dist[u][v], dp.dist[v][u]);
            }
        }
        for _ in 0..20.min(n) {
            let (u, v, w) = (
                dp.dist.len() / 2,
                dp.dist.len() - 1,
                0,
            );
            prop_assert!(dp.dist[u][w] <= dp.dist[u][v] + dp.dist[v][w]);
        }
    }

    #[test]
    fn block_graphs_are_recognized_and_geodetic(g in arb_block_graph()) {
        let r = recognize(&g);
        prop_assert!(r.is_block_graph);
        prop_assert!(r.is_chordal);
        prop_assert!(is_geodetic(&g));
    }

    #[test]
    fn src_coloring_is_valid_and_tight(g in arb_block_graph()) {
        prop_assume!(g.edge_count() > 0);
        let k = src_number(&g).unwrap();
        let c = strong_rainbow_color(&g).unwrap();
        prop_assert_eq!(c.color_count(), k);
        prop_assert!(is_strong_rainbow_connected(&g, &c).unwrap());
        prop_assert!(k >= distance_profile(&g).diameter);
    }

    #[test]
    fn strong_implies_rainbow(g in arb_block_graph(), pick in any::<u64>()) {
        prop_assume!(g.edge_count() > 0 && g.edge_count() <= 40);
        // A deterministic pseudo-random coloring from the pick.
        let mut state = pick | 1;
        let colors: Vec<usize> = (0..g.edge_count())
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % 4
            })
            .collect();
        let c = EdgeColoring::from_raw(colors);
        if is_strong_rainbow_connected(&g, &c).unwrap() {
            prop_assert!(is_rainbow_connected(&g, &c).unwrap());
        }
    }
}
