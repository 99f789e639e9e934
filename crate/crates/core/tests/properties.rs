use eus_lab::index::eus;
use eus_lab::{
    are_isomorphic, edge_weight, emit_graph6, index_value, parse_graph6, Graph, IndexKind,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * (n - 1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Smallest upper-triangle bit string over all relabellings.
fn brute_canonical(g: &Graph) -> u64 {
    fn perms(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                perms(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let n = g.order();
    let mut all = Vec::new();
    perms(n, &mut Vec::new(), &mut vec![false; n], &mut all);
    all.iter()
        .map(|p| {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            code
        })
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn handshake(g in graph_strategy(20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn weights_symmetric_and_positive(a in 1usize..200, b in 1usize..200) {
        for kind in IndexKind::ALL {
            let w = edge_weight(kind, a, b).unwrap();
            prop_assert_eq!(w, edge_weight(kind, b, a).unwrap());
            prop_assert!(w > 0.0);
        }
    }

    #[test]
    fn relabelling_preserves_everything(g in graph_strategy(10), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(g.sorted_degrees(), h.sorted_degrees());
        prop_assert_eq!(g.girth(), h.girth());
        for kind in IndexKind::ALL {
            prop_assert!((index_value(&g, kind) - index_value(&h, kind)).abs() < 1e-9);
        }
    }

    #[test]
    fn isomorphism_agrees_with_brute_force((g, h) in (1usize..=6).prop_flat_map(|n| (graph_on(n), graph_on(n)))) {
        let fast = are_isomorphic(&g, &h).unwrap();
        prop_assert_eq!(fast, brute_canonical(&g) == brute_canonical(&h));
    }

    #[test]
    fn isomorphism_under_shuffle((g, perm) in graph_strategy(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.permuted(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert!(are_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn index_is_additive_over_components(g in graph_strategy(15), h in graph_strategy(15)) {
        let u = g.disjoint_union(&h).unwrap();
        for kind in IndexKind::ALL {
            let sum = index_value(&g, kind) + index_value(&h, kind);
            prop_assert!((index_value(&u, kind) - sum).abs() <= 1e-9 * sum.max(1.0));
        }
        prop_assert_eq!(u.component_count(), g.component_count() + h.component_count());
    }

    #[test]
    fn adding_an_edge_increases_eus(g in graph_strategy(14), pick in any::<usize>()) {
        let n = g.order();
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| !g.has_edge(i, j)).collect();
        prop_assume!(!missing.is_empty());
        let (i, j) = missing[pick % missing.len()];
        let plus = g.add_edge(i, j).unwrap();
        prop_assert!(eus(&plus) - eus(&g) > 1e-9);
        prop_assert_eq!(plus.remove_edge(i, j).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(64)) {
        let text = emit_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}
