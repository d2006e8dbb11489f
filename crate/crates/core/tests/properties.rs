use proptest::prelude::*;
use topograph::export::{parse_edge_list, simple_edge_list, topo_edge_list};
use topograph::{are_isomorphic, build_topo_graph, corona, is_adjacent, join, SimpleGraph};

fn arb_graph(max_order: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_order).prop_flat_map(|order| {
        let pairs = order * (order - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..order {
                for v in u + 1..order {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(order, edges).unwrap()
        })
    })
}

fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    SimpleGraph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_loopless(n in 2usize..=8, a in any::<u32>(), b in any::<u32>()) {
        let t = build_topo_graph(n).unwrap();
        let (u, v) = (t.vertex(a as usize % t.order()), t.vertex(b as usize % t.order()));
        prop_assert_eq!(is_adjacent(u, v), is_adjacent(v, u));
        prop_assert!(!is_adjacent(u, u));
        prop_assert_eq!(is_adjacent(u, v), u.mask() & v.mask() == 0);
    }

    #[test]
    fn degree_matches_neighbor_count(n in 2usize..=8, a in any::<u32>()) {
        let t = build_topo_graph(n).unwrap();
        let v = t.vertex(a as usize % t.order());
        let counted = t.vertices().filter(|&w| is_adjacent(v, w)).count();
        prop_assert_eq!(t.degree(v), counted);
        prop_assert_eq!(t.neighbors(v).len(), counted);
        prop_assert_eq!(counted, (1 << (n - v.len())) - 1);
    }

    #[test]
    fn isomorphism_survives_relabeling(g in arb_graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert!(are_isomorphic(&g, &relabel(&g, &perm)).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let back = parse_edge_list(&simple_edge_list(&g, "random")).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn product_sizes(g in arb_graph(6), h in arb_graph(6)) {
        let c = corona(&g, &h).unwrap();
        prop_assert_eq!(c.order(), g.order() * (1 + h.order()));
        prop_assert_eq!(c.size(), g.size() + g.order() * (h.size() + h.order()));
        let j = join(&g, &h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
    }
}

#[test]
fn topo_edge_list_round_trip() {
    for n in 2..=6 {
        let t = build_topo_graph(n).unwrap();
        let g = t.to_simple();
        let back = parse_edge_list(&topo_edge_list(&t)).unwrap();
        assert_eq!(back.order(), g.order());
        assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }
}

#[test]
fn non_isomorphic_pairs_are_rejected() {
    let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!are_isomorphic(&path, &star).unwrap());
    let g3 = build_topo_graph(3).unwrap().to_simple();
    assert!(are_isomorphic(&g3, &g3.complement().complement()).unwrap());
    assert!(!are_isomorphic(&g3, &g3.complement()).unwrap());
    let g4 = build_topo_graph(4).unwrap().to_simple();
    assert!(matches!(
        are_isomorphic(&g4, &g4),
        Err(topograph::Error::Capacity { .. })
    ));
}
