//! Derived values computed by a from-scratch oracle and frozen here.
//!
//! The oracle shares no code with the library beyond constructing inputs:
//! it builds the composite adjacency by hand, runs its own BFS, and decides
//! membership by the distance characterization (`d(i, x) = x_i` for every
//! base vertex `i` and lattice vertex `x`) instead of by edge coverings.
//! Minimality is decided definitionally: no proper spanning subgraph is a
//! member.

use std::collections::{BTreeMap, VecDeque};

use crslab::extremal::{
    enumerate_minimal_b, enumerate_minimal_c, enumerate_q, is_composite_minimal_b, is_h1_minimal,
    is_h1_minimal_by_critical_edges, is_h1_minimal_by_deletion, is_k_minimal,
    is_k_minimal_by_deletion, DEFAULT_ENUMERATION_CAP, DEFAULT_Q_CAP,
};
use crslab::families::{
    complete_base, is_member_b, is_member_c, null_base, p2_box, r_graph, t_graph, u_graph, v_graph,
};
use crslab::{Graph, VertexLabel};

/// All vectors of `[m]^k` in lexicographic order.
fn vectors(k: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (1..=m).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

struct Oracle {
    k: usize,
    vs: Vec<Vec<u32>>,
    /// Every pair of lattice positions, or only the `Γ_k` pairs.
    pairs: Vec<(usize, usize)>,
}

impl Oracle {
    fn new(k: usize, m: u32, gamma_only: bool) -> Oracle {
        let vs = vectors(k, m);
        let n = vs.len();
        let pairs = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                !gamma_only || vs[a].iter().zip(&vs[b]).all(|(x, y)| x.abs_diff(*y) <= 1)
            })
            .collect();
        Oracle { k, vs, pairs }
    }

    /// Membership of `base ∘ span(mask)` by distances from the base.
    fn member(&self, base_edges: &[(usize, usize)], mask: u64) -> bool {
        let k = self.k;
        let n = k + self.vs.len();
        let mut adj = vec![Vec::new(); n];
        let mut add = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for &(a, b) in base_edges {
            add(a, b);
        }
        for (e, &(a, b)) in self.pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                add(k + a, k + b);
            }
        }
        for (r, x) in self.vs.iter().enumerate() {
            for (i, &c) in x.iter().enumerate() {
                if c == 1 {
                    add(i, k + r);
                }
            }
        }
        (0..k).all(|i| {
            let mut dist = vec![u32::MAX; n];
            dist[i] = 0;
            let mut queue = VecDeque::from([i]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            self.vs.iter().enumerate().all(|(r, x)| dist[k + r] == x[i])
        })
    }

    fn lattice(&self, template: &Graph, mask: u64) -> Graph {
        let edges = (0..self.pairs.len())
            .filter(|e| mask >> e & 1 == 1)
            .map(|e| self.pairs[e]);
        template.on_same_vertices(edges).unwrap()
    }

    fn mask_of(&self, g: &Graph) -> u64 {
        g.edges().fold(0, |m, e| {
            m | 1 << self.pairs.iter().position(|&p| p == e).unwrap()
        })
    }
}

fn is_proper_subset(a: u64, b: u64) -> bool {
    a != b && a & b == a
}

/// Definitionally minimal masks among `members`.
fn minimal_among(members: &[u64]) -> Vec<u64> {
    members
        .iter()
        .copied()
        .filter(|&m| !members.iter().any(|&s| is_proper_subset(s, m)))
        .collect()
}

fn size_histogram(masks: &[u64]) -> BTreeMap<u32, usize> {
    masks.iter().fold(BTreeMap::new(), |mut h, m| {
        *h.entry(m.count_ones()).or_default() += 1;
        h
    })
}

#[test]
fn b2_members_and_minimal_graphs() {
    let oracle = Oracle::new(2, 2, false);
    let template = u_graph(2).unwrap().on_same_vertices([]).unwrap();
    let cases = [
        (complete_base(2).unwrap(), vec![(0, 1)], 40, 2),
        (null_base(2).unwrap(), vec![], 25, 4),
    ];
    for (base, base_edges, member_count, minimal_count) in cases {
        let members: Vec<u64> = (0..64).filter(|&m| oracle.member(&base_edges, m)).collect();
        assert_eq!(members.len(), member_count);
        let minimal = minimal_among(&members);
        assert_eq!(minimal.len(), minimal_count);

        for mask in 0..64u64 {
            let lattice = oracle.lattice(&template, mask);
            let member = members.contains(&mask);
            assert_eq!(is_member_b(&base, &lattice).unwrap(), member);
            let expected = minimal.contains(&mask);
            if member {
                assert_eq!(is_h1_minimal(&base, &lattice).unwrap().minimal, expected);
                assert_eq!(
                    is_h1_minimal_by_critical_edges(&base, &lattice).unwrap(),
                    expected
                );
                assert_eq!(
                    is_h1_minimal_by_deletion(&base, &lattice).unwrap(),
                    expected
                );
            }
        }
        let listed: Vec<u64> = enumerate_minimal_b(&base, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .iter()
            .map(|g| oracle.mask_of(g))
            .collect();
        let mut sorted = listed.clone();
        sorted.sort_unstable();
        let mut want = minimal.clone();
        want.sort_unstable();
        assert_eq!(sorted, want);
    }
}

#[test]
fn b2_named_minimal_graphs() {
    let with_k = enumerate_minimal_b(&complete_base(2).unwrap(), DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(with_k, vec![u_graph(2).unwrap(), v_graph(2).unwrap()]);
    let with_null = enumerate_minimal_b(&null_base(2).unwrap(), DEFAULT_ENUMERATION_CAP).unwrap();
    let sizes: Vec<usize> = with_null.iter().map(Graph::size).collect();
    assert_eq!(sizes, [2, 3, 3, 4]);
    assert_eq!(with_null[0], r_graph(2).unwrap());
    assert_eq!(with_null[3], p2_box(2).unwrap());
    // size 3: the star at (1,1), and the triangle on the other three vertices
    let star = with_null[1]
        .index_of(&VertexLabel::lattice(&[1, 1]))
        .unwrap();
    assert_eq!(with_null[1].degree_idx(star), 3);
    let corner = with_null[2]
        .index_of(&VertexLabel::lattice(&[1, 1]))
        .unwrap();
    assert_eq!(with_null[2].degree_idx(corner), 0);
}

#[test]
fn composite_minimality_differs_from_h1_minimality() {
    // K_[2] has the single edge 1-2, so an H1-minimal lattice yields a
    // minimal composite exactly when dropping that edge leaves ℬ_2.
    let oracle = Oracle::new(2, 2, false);
    let k2 = complete_base(2).unwrap();
    for lattice in enumerate_minimal_b(&k2, DEFAULT_ENUMERATION_CAP).unwrap() {
        let still_member = oracle.member(&[], oracle.mask_of(&lattice));
        assert_eq!(
            is_composite_minimal_b(&k2, &lattice).unwrap(),
            !still_member
        );
    }
}

#[test]
fn c2_members_and_minimal_graphs() {
    let oracle = Oracle::new(2, 3, true);
    assert_eq!(oracle.pairs.len(), 20);
    let members: Vec<u64> = (0..1u64 << 20).filter(|&m| oracle.member(&[], m)).collect();
    assert_eq!(members.len(), 152_500);

    let listed = enumerate_minimal_c(2, DEFAULT_ENUMERATION_CAP).unwrap();
    let masks: Vec<u64> = listed.iter().map(|g| oracle.mask_of(g)).collect();
    // each listed graph is a member with no member strictly below it ...
    for &m in &masks {
        assert!(members.binary_search(&m).is_ok());
        let mut sub = m;
        while sub != 0 {
            sub = (sub - 1) & m;
            assert!(!oracle.member(&[], sub));
        }
    }
    // ... and every member lies above one of them
    for &m in &members {
        assert!(masks.iter().any(|&s| s & !m == 0));
    }
    let histogram = size_histogram(&masks);
    let frozen = BTreeMap::from([(5, 1), (6, 11), (7, 40), (8, 55), (9, 29), (10, 4)]);
    assert_eq!(histogram, frozen);

    for g in &listed {
        assert!(is_member_c(g).unwrap());
        assert!(is_k_minimal(g).unwrap().minimal);
        assert!(is_k_minimal_by_deletion(g).unwrap());
    }
    assert_eq!(listed[0], t_graph(2).unwrap());
    let q: Vec<u64> = enumerate_q(2, DEFAULT_Q_CAP)
        .unwrap()
        .iter()
        .map(|g| oracle.mask_of(&g))
        .collect();
    let mut top: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|m| m.count_ones() == 10)
        .collect();
    let mut q_sorted = q.clone();
    top.sort_unstable();
    q_sorted.sort_unstable();
    assert_eq!(top, q_sorted);
}

#[test]
fn c2_off_gamma_lattices_are_never_members() {
    let all = Oracle::new(2, 3, false);
    let template = t_graph(2).unwrap().on_same_vertices([]).unwrap();
    let gamma = Oracle::new(2, 3, true);
    let off: Vec<usize> = (0..all.pairs.len())
        .filter(|&e| !gamma.pairs.contains(&all.pairs[e]))
        .collect();
    assert_eq!(off.len(), 36 - 20);
    let g_all = (0..all.pairs.len())
        .filter(|e| !off.contains(e))
        .fold(0u64, |m, e| m | 1 << e);
    for &e in &off {
        let mask = g_all | 1 << e;
        assert!(!all.member(&[], mask));
        assert!(!is_member_c(&all.lattice(&template, mask)).unwrap());
    }
}
