use std::ops::ControlFlow;

use eus_lab::enumeration::{enumerate, extremal_scan, scan_size};
use eus_lab::{Direction, EnumFilter, Graph, IndexKind};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labelled connected graphs by the standard rooted-component recurrence.
fn connected_count(n: u64) -> u64 {
    let total = |m: u64| 1u64 << (m * m.saturating_sub(1) / 2);
    let mut c = vec![0u64; n as usize + 1];
    for m in 1..=n {
        let mut v = total(m);
        for k in 1..m {
            v -= binom(m - 1, k - 1) * c[k as usize] * total(m - k);
        }
        c[m as usize] = v;
    }
    c[n as usize]
}

fn count(n: usize, filter: &EnumFilter) -> u64 {
    let mut seen = 0;
    enumerate(n, filter, |_| {
        seen += 1;
        ControlFlow::Continue(())
    })
    .unwrap();
    seen
}

/// Every labelled graph on `n` vertices, built without the enumerator.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

fn reachable(g: &Graph) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (u, s) in seen.iter_mut().enumerate() {
            if g.has_edge(v, u) && !*s {
                *s = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Shortest cycle length by checking every edge's alternative path length.
fn brute_girth(g: &Graph) -> Option<usize> {
    let mut best = None;
    for (a, b) in g.edges() {
        let h = g.remove_edge(a, b).unwrap();
        let mut dist = vec![usize::MAX; g.order()];
        let mut queue = std::collections::VecDeque::from([a]);
        dist[a] = 0;
        while let Some(v) = queue.pop_front() {
            for u in h.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |x: usize| x.min(len)));
        }
    }
    best
}

#[test]
fn connected_counts_match_recurrence() {
    for n in 1..=6 {
        assert_eq!(
            count(n, &EnumFilter::connected()),
            connected_count(n as u64),
            "n={n}"
        );
    }
}

#[test]
fn filters_agree_with_brute_force() {
    for n in 3..=5 {
        let graphs = all_graphs(n);
        assert_eq!(count(n, &EnumFilter::default()), graphs.len() as u64);
        for g in 3..=n {
            let expected = graphs
                .iter()
                .filter(|h| reachable(h) && h.size() == n && brute_girth(h) == Some(g))
                .count() as u64;
            assert_eq!(
                count(n, &EnumFilter::unicyclic().with_girth(g)),
                expected,
                "n={n} g={g}"
            );
            let expected = graphs
                .iter()
                .filter(|h| reachable(h) && brute_girth(h) == Some(g))
                .count() as u64;
            assert_eq!(
                count(n, &EnumFilter::connected().with_girth(g)),
                expected,
                "n={n} g={g}"
            );
        }
        for p in 0..n {
            let expected = graphs
                .iter()
                .filter(|h| reachable(h) && h.degrees().iter().filter(|&&d| d == 1).count() == p)
                .count() as u64;
            assert_eq!(
                count(n, &EnumFilter::connected().with_pendants(p)),
                expected,
                "n={n} p={p}"
            );
        }
        for d in 1..n {
            let expected = graphs
                .iter()
                .filter(|h| h.degrees().iter().all(|&x| x <= d))
                .count() as u64;
            assert_eq!(
                count(n, &EnumFilter::default().with_max_degree(d)),
                expected,
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn labelled_unicyclic_counts() {
    // 1, 15, 222, 3660 labelled unicyclic graphs on 3..=6 vertices.
    for (n, want) in [(3, 1), (4, 15), (5, 222), (6, 3660)] {
        assert_eq!(count(n, &EnumFilter::unicyclic()), want);
    }
    assert_eq!(
        scan_size(7, &EnumFilter::unicyclic()).unwrap(),
        binom(21, 7) as u128
    );
}

#[test]
fn scan_optimum_matches_brute_force() {
    let graphs = all_graphs(5);
    for kind in IndexKind::ALL {
        let values: Vec<f64> = graphs
            .iter()
            .filter(|h| reachable(h))
            .map(|h| eus_lab::index_value(h, kind))
            .collect();
        let max = values.iter().cloned().fold(f64::MIN, f64::max);
        let min = values.iter().cloned().fold(f64::MAX, f64::min);
        let hi = extremal_scan(5, &EnumFilter::connected(), kind, Direction::Max, 3).unwrap();
        let lo = extremal_scan(5, &EnumFilter::connected(), kind, Direction::Min, 3).unwrap();
        assert!((hi.optimum - max).abs() < 1e-9);
        assert!((lo.optimum - min).abs() < 1e-9);
        assert_eq!(hi.witnesses.len(), 1);
        assert_eq!(hi.witnesses[0].size(), 10);
    }
}

#[test]
fn worker_counts_do_not_change_reports() {
    let filter = EnumFilter::connected().with_girth(4);
    let base = extremal_scan(7, &filter, IndexKind::Eso, Direction::Max, 1).unwrap();
    for w in [2, 3, 8, 32] {
        assert_eq!(
            extremal_scan(7, &filter, IndexKind::Eso, Direction::Max, w).unwrap(),
            base
        );
    }
}
