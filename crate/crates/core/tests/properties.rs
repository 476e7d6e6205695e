use proptest::prelude::*;
use proptest::sample::subsequence;

use crslab::extremal::{
    bounds_b, critical_edges_b, epsilon, is_h1_minimal, is_h1_minimal_by_critical_edges,
    is_h1_minimal_by_deletion, is_in_q, is_k_minimal, tightness_b, tightness_c, QEnumeration,
};
use crslab::families::{
    canonical_relabel, compose, gamma, is_member_b, is_member_c, is_member_composite, null_base,
    s_set, LatticeShape,
};
use crslab::graph::graph6::{from_graph6, to_graph6};
use crslab::io::{graph_from_json, graph_to_json};
use crslab::resolving::{
    check_crs, is_completeness_resolvable, is_resolving_set, resolve_vector, Verdict,
};
use crslab::{Graph, VertexLabel};

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn plain_graph(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        subsequence(all_pairs(n), 0..=n * (n - 1) / 2).prop_map(move |edges| {
            let e: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
            Graph::plain(n as u32, &e).unwrap()
        })
    })
}

fn connected_graph(max: usize) -> impl Strategy<Value = Graph> {
    plain_graph(max).prop_filter("connected", Graph::is_connected)
}

fn same_order_pair() -> impl Strategy<Value = (Graph, Graph)> {
    (2..=7usize).prop_flat_map(|n| {
        let side = subsequence(all_pairs(n), 0..=n * (n - 1) / 2);
        (side.clone(), side).prop_map(move |(a, b)| {
            let g = Graph::plain(n as u32, &[]).unwrap();
            (
                g.on_same_vertices(a).unwrap(),
                g.on_same_vertices(b).unwrap(),
            )
        })
    })
}

/// A base graph on `[k]` and an arbitrary lattice graph on `[2]^k`.
fn b_pair(k: usize) -> impl Strategy<Value = (Graph, Graph)> {
    let n = 1 << k;
    (
        subsequence(all_pairs(k), 0..=k * (k - 1) / 2),
        subsequence(all_pairs(n), 0..=n * (n - 1) / 2),
    )
        .prop_map(move |(be, le)| {
            let base = null_base(k).unwrap().on_same_vertices(be).unwrap();
            let lattice = LatticeShape::new(k, 2)
                .unwrap()
                .edgeless_graph()
                .unwrap()
                .on_same_vertices(le)
                .unwrap();
            (base, lattice)
        })
}

/// Deletes edges while membership survives, giving an `H1`-minimal lattice.
fn shrink_to_minimal(base: &Graph, lattice: &Graph) -> Graph {
    let mut g = lattice.clone();
    loop {
        let next = g
            .edges()
            .map(|(a, b)| g.without_edge_idx(a, b))
            .find(|h| is_member_b(base, h).unwrap());
        match next {
            Some(h) => g = h,
            None => return g,
        }
    }
}

fn gamma2_subgraph() -> impl Strategy<Value = Graph> {
    let g = gamma(2).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    subsequence(edges, 0..=20).prop_map(move |e| g.on_same_vertices(e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn union_is_a_join((a, b) in same_order_pair()) {
        let u = a.union(&b).unwrap();
        prop_assert_eq!(&u, &b.union(&a).unwrap());
        prop_assert_eq!(&a.union(&a).unwrap(), &a);
        prop_assert!(a.is_spanning_subgraph_of(&u) && b.is_spanning_subgraph_of(&u));
        prop_assert_eq!(a.is_spanning_subgraph_of(&b), u == b);
        prop_assert!(u.size() <= a.size() + b.size());
    }

    #[test]
    fn graph6_round_trip(g in plain_graph(12)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn lattice_json_round_trip(g in gamma2_subgraph()) {
        prop_assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn resolving_sets_are_upward_closed(g in connected_graph(7), picks in proptest::collection::vec(any::<bool>(), 7)) {
        let w: Vec<VertexLabel> = g.vertices().iter().zip(&picks).filter(|p| *p.1).map(|p| p.0.clone()).collect();
        prop_assume!(!w.is_empty() && w.len() + 1 < g.order());
        if is_resolving_set(&g, &w).unwrap() {
            let extra = g.vertices().iter().find(|v| !w.contains(v)).unwrap().clone();
            let mut bigger = w.clone();
            bigger.push(extra);
            prop_assert!(is_resolving_set(&g, &bigger).unwrap());
        }
    }

    #[test]
    fn certificates_match_distances_and_permute(g in connected_graph(7), a in 0usize..7, b in 0usize..7) {
        prop_assume!(g.order() > 2 && a < g.order() && b < g.order() && a != b);
        let w = vec![g.label(a).clone(), g.label(b).clone()];
        if let Ok(cert) = check_crs(&g, &w).unwrap() {
            for (u, x) in cert.table() {
                prop_assert_eq!(&resolve_vector(&g, &w, u).unwrap(), x);
            }
            let swapped = check_crs(&g, &[w[1].clone(), w[0].clone()]).unwrap().unwrap();
            prop_assert_eq!(swapped, cert.reordered(&[1, 0]));
        }
    }

    #[test]
    fn b_membership_is_an_up_set((base, lattice) in b_pair(3), extra in any::<proptest::sample::Index>()) {
        if is_member_b(&base, &lattice).unwrap() {
            let missing: Vec<(usize, usize)> =
                all_pairs(8).into_iter().filter(|&(a, b)| !lattice.has_edge_idx(a, b)).collect();
            prop_assume!(!missing.is_empty());
            let (a, b) = missing[extra.index(missing.len())];
            prop_assert!(is_member_b(&base, &lattice.with_edge_idx(a, b)).unwrap());
        }
    }

    #[test]
    fn b_membership_is_closed_under_union((base, l1) in b_pair(3), (_, l2) in b_pair(3)) {
        if is_member_b(&base, &l1).unwrap() && is_member_b(&base, &l2).unwrap() {
            prop_assert!(is_member_b(&base, &l1.union(&l2).unwrap()).unwrap());
        }
    }

    #[test]
    fn c_membership_is_an_up_set_within_gamma(h in gamma2_subgraph(), extra in any::<proptest::sample::Index>()) {
        let g = gamma(2).unwrap();
        if is_member_c(&h).unwrap() {
            let missing: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| !h.has_edge_idx(a, b)).collect();
            prop_assume!(!missing.is_empty());
            let (a, b) = missing[extra.index(missing.len())];
            prop_assert!(is_member_c(&h.with_edge_idx(a, b)).unwrap());
        }
    }

    #[test]
    fn minimality_characterizations_agree_at_k3((base, lattice) in b_pair(3)) {
        prop_assume!(is_member_b(&base, &lattice).unwrap());
        let by_sets = is_h1_minimal(&base, &lattice).unwrap().minimal;
        prop_assert_eq!(by_sets, is_h1_minimal_by_critical_edges(&base, &lattice).unwrap());
        prop_assert_eq!(by_sets, is_h1_minimal_by_deletion(&base, &lattice).unwrap());

        let minimal = shrink_to_minimal(&base, &lattice);
        prop_assert!(is_h1_minimal(&base, &minimal).unwrap().minimal);
        let crit = critical_edges_b(&base, &minimal).unwrap().union();
        prop_assert_eq!(crit.len(), minimal.size());
        let bounds = bounds_b(&base).unwrap();
        let size = minimal.size() as u64;
        prop_assert!(bounds.lower <= size && size <= bounds.upper);
        let report = tightness_b(&base, &minimal).unwrap();
        prop_assert_eq!(report.lower_tight, Some(size == bounds.lower));
        prop_assert_eq!(report.upper_tight, Some(size == bounds.upper));
    }

    #[test]
    fn relabeled_members_are_recognized((base, lattice) in b_pair(3), seed in any::<u64>()) {
        prop_assume!(is_member_b(&base, &lattice).unwrap());
        let g = compose(&base, &lattice, 3, 2).unwrap().materialize();
        let n = g.order() as u64;
        // a fixed-point-free shuffle of 0..n from the seed
        let mut order: Vec<u64> = (0..n).collect();
        order.sort_by_key(|&i| (i.wrapping_mul(seed | 1) ^ seed.rotate_left(i as u32)) % 1_000_003);
        let shuffled = g
            .relabeled(|v| {
                let i = g.index_of(v).unwrap();
                VertexLabel::Plain(order[i] as u32)
            })
            .unwrap();
        let w: Vec<VertexLabel> = (0..3).map(|i| VertexLabel::Plain(order[i] as u32)).collect();
        let cert = check_crs(&shuffled, &w).unwrap().unwrap();
        prop_assert!(is_member_composite(&canonical_relabel(&shuffled, &cert).unwrap()).unwrap());
        // other (k, m) readings may also fit, so only require a positive verdict
        let verdict = is_completeness_resolvable(&shuffled).unwrap().verdict;
        prop_assert!(verdict != Verdict::NotCompletenessResolvable);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q3_members_are_maximum_minimal(index in 0u128..(1 << 24)) {
        let q = QEnumeration::new(3).unwrap();
        let g = q.nth(index).unwrap();
        prop_assert_eq!(g.size(), 39);
        prop_assert!(is_member_c(&g).unwrap());
        prop_assert!(is_k_minimal(&g).unwrap().minimal);
        prop_assert!(is_in_q(&g).unwrap());
        let report = tightness_c(&g).unwrap();
        prop_assert_eq!((report.lower_tight, report.upper_tight), (Some(false), Some(true)));
    }
}

#[test]
fn epsilon_sets_are_pairwise_disjoint() {
    for k in 2..=3 {
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0;
        for i in 1..=k {
            for x in LatticeShape::new(k, 3).unwrap().vectors() {
                if let Ok(edges) = epsilon(k, i, &x) {
                    for e in edges {
                        total += 1;
                        assert!(seen.insert(e), "shared edge at k={k}");
                    }
                }
            }
        }
        assert_eq!(total, seen.len());
    }
}

#[test]
fn z_and_s_cardinalities() {
    for k in 2..=4usize {
        let kk = k as u32;
        let z = LatticeShape::new(k, 3)
            .unwrap()
            .vectors()
            .filter(|x| x.components().contains(&1) && x.components().contains(&2))
            .count();
        assert_eq!(z, 3usize.pow(kk) - 2usize.pow(kk + 1) + 1);
        for i in 1..=k {
            assert_eq!(s_set(k, i).unwrap().len(), 2usize.pow(kk - 1));
        }
    }
}
