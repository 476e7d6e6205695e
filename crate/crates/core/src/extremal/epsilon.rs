//! The edge sets `ε_i(x)` and the family `𝒬_k` of maximum-size `k`-minimal
//! graphs, one per choice of an edge from every `ε_i(x)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{check_index, in_s, require_k_at_least_two, LabelEdge, LatticeShape};
use crate::graph::{BitMatrix, Graph, LatticeVector, VertexLabel};

/// Default bound on `|𝒬_k|` for [`enumerate_q`]; admits `k = 3`.
pub const DEFAULT_Q_CAP: u128 = 1 << 25;

/// Partners `x'` of `x` in `ε_i(x)`, lexicographically, or `None` when `x`
/// lies in neither `[3]^k_i(2)` nor `S^k_i`.
fn partners(i: usize, x: &[u32]) -> Option<Vec<Vec<u32>>> {
    let in_x = x.iter().all(|&c| c >= 2);
    let s = in_s(i, x);
    if x[i - 1] != 2 && !s {
        return None;
    }
    let choices: Vec<Vec<u32>> = x
        .iter()
        .enumerate()
        .map(|(t, &c)| {
            if t + 1 == i {
                vec![c - 1]
            } else if s {
                vec![c]
            } else if in_x {
                if c == 2 {
                    vec![2, 3]
                } else {
                    vec![3]
                }
            } else if c == 1 {
                vec![1]
            } else {
                vec![2, 3]
            }
        })
        .collect();
    let mut out = vec![Vec::with_capacity(x.len())];
    for opts in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    Some(out)
}

/// `ε_i(x)` as edges `{x, x'}` with endpoints in canonical order.
pub fn epsilon(k: usize, i: usize, x: &LatticeVector) -> Result<Vec<LabelEdge>> {
    check_index(k, i)?;
    let shape = LatticeShape::new(k, 3)?;
    let not_eligible = || Error::VertexNotEligible {
        index: i,
        vertex: VertexLabel::Lattice(x.clone()),
    };
    if !shape.contains(x) {
        return Err(not_eligible());
    }
    let list = partners(i, x.components()).ok_or_else(not_eligible)?;
    Ok(list
        .into_iter()
        .map(|p| {
            let a = VertexLabel::Lattice(x.clone());
            let b = VertexLabel::Lattice(LatticeVector::from_components_unchecked(&p));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect())
}

struct Slot {
    x: usize,
    partners: Vec<usize>,
}

/// The choice space of `𝒬_k`, in lexicographic `(i, x, edge)` order with
/// the last slot varying fastest. Members are produced on demand.
pub struct QEnumeration {
    shape: LatticeShape,
    labels: Arc<[VertexLabel]>,
    slots: Vec<Slot>,
    count: Option<u128>,
}

impl QEnumeration {
    pub fn new(k: usize) -> Result<QEnumeration> {
        require_k_at_least_two(k)?;
        let shape = LatticeShape::new(k, 3)?;
        let digits = shape.digit_table();
        let mut slots = Vec::new();
        for i in 1..=k {
            for (x, d) in digits.iter().enumerate() {
                if let Some(ps) = partners(i, d) {
                    slots.push(Slot {
                        x,
                        partners: ps.iter().map(|p| shape.rank(p)).collect(),
                    });
                }
            }
        }
        let count = slots
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s.partners.len() as u128));
        let labels = shape.vectors().map(VertexLabel::Lattice).collect();
        Ok(QEnumeration {
            shape,
            labels,
            slots,
            count,
        })
    }

    pub fn k(&self) -> usize {
        self.shape.k()
    }

    /// `|𝒬_k| = Π |ε_i(x)|`, or `None` if it does not fit in `u128`.
    pub fn count(&self) -> Option<u128> {
        self.count
    }

    /// Number of edges in every member, `k · (3^(k−1) + 2^(k−1))`.
    pub fn member_size(&self) -> usize {
        self.slots.len()
    }

    fn choice(&self, mut index: u128, mut f: impl FnMut(usize, usize)) {
        for slot in self.slots.iter().rev() {
            let n = slot.partners.len() as u128;
            f(slot.x, slot.partners[(index % n) as usize]);
            index /= n;
        }
    }

    /// Writes the adjacency of member `index` into `adj`, returning the
    /// number of distinct edges.
    pub(crate) fn fill(&self, index: u128, adj: &mut BitMatrix) -> usize {
        adj.reset();
        let mut distinct = 0;
        self.choice(index, |a, b| {
            if !adj.get(a, b) {
                adj.set(a, b);
                adj.set(b, a);
                distinct += 1;
            }
        });
        distinct
    }

    /// Member number `index` in choice order.
    pub fn nth(&self, index: u128) -> Option<Graph> {
        if index >= self.count? {
            return None;
        }
        let mut adj = BitMatrix::new(self.shape.len());
        self.fill(index, &mut adj);
        Some(Graph::from_parts(self.labels.clone(), adj))
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        let n = self.count.unwrap_or(0);
        (0..n).map(move |i| self.nth(i).expect("in range"))
    }

    /// Distinct-edge counts of all members, in parallel; every member
    /// should have [`QEnumeration::member_size`] edges.
    pub fn par_sizes(&self) -> impl ParallelIterator<Item = usize> + '_ {
        let n = u64::try_from(self.count.unwrap_or(0)).expect("enumerable");
        (0..n).into_par_iter().map_init(
            || BitMatrix::new(self.shape.len()),
            move |adj, i| self.fill(i as u128, adj),
        )
    }

    pub fn par_iter(&self) -> impl ParallelIterator<Item = Graph> + '_ {
        let n = u64::try_from(self.count.unwrap_or(0)).expect("enumerable");
        (0..n)
            .into_par_iter()
            .map(move |i| self.nth(i as u128).expect("in range"))
    }
}

/// `𝒬_k`, refusing spaces larger than `cap`.
pub fn enumerate_q(k: usize, cap: u128) -> Result<QEnumeration> {
    let q = QEnumeration::new(k)?;
    match q.count() {
        Some(c) if c <= cap => Ok(q),
        c => Err(Error::EnumerationCapExceeded {
            count: c.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

/// Whether a lattice graph on `[3]^k` is a member of `𝒬_k`: it holds
/// exactly one edge of every `ε_i(x)` and no other edges.
pub fn is_in_q(lattice: &Graph) -> Result<bool> {
    let shape = LatticeShape::of_graph(lattice)?;
    if shape.m() != 3 {
        return Ok(false);
    }
    let q = QEnumeration::new(shape.k())?;
    let mut used = 0;
    for slot in &q.slots {
        let hits = slot
            .partners
            .iter()
            .filter(|&&p| lattice.has_edge_idx(slot.x, p))
            .count();
        if hits != 1 {
            return Ok(false);
        }
        used += 1;
    }
    Ok(used == lattice.size())
}
