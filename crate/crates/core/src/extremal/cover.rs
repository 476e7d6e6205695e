//! The index sets `J_x`, `I_x(e)`, `I_x`, `Ĩ_x(e)` and the minimality
//! predicates built on them.

use serde::Serialize;

use super::critical::{BCoverage, CCoverage};
use crate::error::Result;
use crate::families::{is_member_b, is_member_c, LabelEdge, LatticeShape};
use crate::graph::{Graph, LatticeVector};

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|t| mask >> t & 1 == 1)
        .map(|t| t + 1)
        .collect()
}

/// `J_x`, `I_x(e)`, `I_x` and `Ĩ_x(e)` for a base on `[k]` and a lattice
/// graph on `[2]^k`, stored as coordinate bit masks.
#[derive(Clone, Debug)]
pub struct CoverIndexSets {
    shape: LatticeShape,
    lattice: Graph,
    edges: Vec<(usize, usize)>,
    j: Vec<u64>,
    /// `[e]`: `(I_a(e), I_b(e))` for `edges[e] = (a, b)`.
    i_e: Vec<(u64, u64)>,
    i: Vec<u64>,
}

pub fn cover_index_sets(base: &Graph, lattice: &Graph) -> Result<CoverIndexSets> {
    let cov = BCoverage::new(base, lattice)?;
    let k = cov.shape.k();
    let j: Vec<u64> = (0..cov.shape.len())
        .map(|x| {
            (0..k)
                .filter(|&t| cov.in_slice(t, x))
                .fold(0, |m, t| m | 1 << t)
        })
        .collect();
    let i_e: Vec<(u64, u64)> = cov
        .edges
        .iter()
        .map(|&(a, b)| {
            let differ = (0..k)
                .filter(|&t| cov.digits[a][t] != cov.digits[b][t])
                .fold(0u64, |m, t| m | 1 << t);
            (j[a] & differ, j[b] & differ)
        })
        .collect();
    let mut i = vec![0u64; cov.shape.len()];
    for (&(a, b), &(ia, ib)) in cov.edges.iter().zip(&i_e) {
        i[a] |= ia;
        i[b] |= ib;
    }
    Ok(CoverIndexSets {
        shape: cov.shape,
        lattice: lattice.clone(),
        edges: cov.edges,
        j,
        i_e,
        i,
    })
}

impl CoverIndexSets {
    fn rank(&self, x: &LatticeVector) -> Option<usize> {
        self.shape
            .contains(x)
            .then(|| self.shape.rank(x.components()))
    }

    fn edge_index(&self, e: &LabelEdge) -> Option<usize> {
        let a = self.lattice.index_of(&e.0)?;
        let b = self.lattice.index_of(&e.1)?;
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    fn i_e_mask(&self, x: usize, e: usize) -> u64 {
        let (a, b) = self.edges[e];
        match x {
            _ if x == a => self.i_e[e].0,
            _ if x == b => self.i_e[e].1,
            _ => 0,
        }
    }

    fn i_tilde_mask(&self, x: usize, e: usize) -> u64 {
        let others = (0..self.edges.len())
            .filter(|&f| f != e)
            .fold(0, |m, f| m | self.i_e_mask(x, f));
        self.i_e_mask(x, e) & !others
    }

    /// `J_x`.
    pub fn j(&self, x: &LatticeVector) -> Vec<usize> {
        self.rank(x)
            .map_or_else(Vec::new, |r| mask_to_indices(self.j[r]))
    }

    /// `I_x(e)`; empty when `e` is not an edge.
    pub fn i_of_edge(&self, x: &LatticeVector, e: &LabelEdge) -> Vec<usize> {
        match (self.rank(x), self.edge_index(e)) {
            (Some(r), Some(e)) => mask_to_indices(self.i_e_mask(r, e)),
            _ => Vec::new(),
        }
    }

    /// `I_x`.
    pub fn i(&self, x: &LatticeVector) -> Vec<usize> {
        self.rank(x)
            .map_or_else(Vec::new, |r| mask_to_indices(self.i[r]))
    }

    /// `Ĩ_x(e)`.
    pub fn i_tilde(&self, x: &LatticeVector, e: &LabelEdge) -> Vec<usize> {
        match (self.rank(x), self.edge_index(e)) {
            (Some(r), Some(e)) => mask_to_indices(self.i_tilde_mask(r, e)),
            _ => Vec::new(),
        }
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.shape.len()
    }

    /// `I_x(e)` by positions.
    pub(crate) fn raw_i_e(&self, x: usize, e: usize) -> u64 {
        self.i_e_mask(x, e)
    }

    pub(crate) fn vector(&self, x: usize) -> LatticeVector {
        self.shape.vector(x)
    }

    pub(crate) fn label_edge(&self, e: usize) -> LabelEdge {
        let (a, b) = self.edges[e];
        (self.lattice.label(a).clone(), self.lattice.label(b).clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageFailure {
    pub vertex: LatticeVector,
    /// Coordinates whose covering misses `vertex`.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeWitness {
    pub vertex: LatticeVector,
    /// Coordinates for which the edge alone covers `vertex`.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCriticality {
    pub edge: LabelEdge,
    /// `None` when the edge can be dropped without losing membership.
    pub witness: Option<EdgeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub member: bool,
    pub coverage_failures: Vec<CoverageFailure>,
    /// Lattice edges outside `Γ_k` (𝒞 side only).
    pub stray_edges: Vec<LabelEdge>,
    pub edges: Vec<EdgeCriticality>,
}

impl MinimalityReport {
    fn finish(
        coverage_failures: Vec<CoverageFailure>,
        stray_edges: Vec<LabelEdge>,
        edges: Vec<EdgeCriticality>,
    ) -> MinimalityReport {
        let member = coverage_failures.is_empty() && stray_edges.is_empty();
        let minimal = member && edges.iter().all(|e| e.witness.is_some());
        MinimalityReport {
            minimal,
            member,
            coverage_failures,
            stray_edges,
            edges,
        }
    }
}

/// `H1`-minimality of a lattice graph on `[2]^k`, decided by the index
/// sets: `I_x = J_x` for every `x`, and every edge has some `x` with
/// `Ĩ_x(e) ≠ ∅`.
pub fn is_h1_minimal(base: &Graph, lattice: &Graph) -> Result<MinimalityReport> {
    let sets = cover_index_sets(base, lattice)?;
    let coverage_failures = (0..sets.vertex_count())
        .filter(|&x| sets.i[x] != sets.j[x])
        .map(|x| CoverageFailure {
            vertex: sets.vector(x),
            indices: mask_to_indices(sets.j[x] & !sets.i[x]),
        })
        .collect();
    let edges = (0..sets.edge_count())
        .map(|e| {
            let (a, b) = sets.edges[e];
            let witness = [a, b].into_iter().find_map(|x| {
                let m = sets.i_tilde_mask(x, e);
                (m != 0).then(|| EdgeWitness {
                    vertex: sets.vector(x),
                    indices: mask_to_indices(m),
                })
            });
            EdgeCriticality {
                edge: sets.label_edge(e),
                witness,
            }
        })
        .collect();
    Ok(MinimalityReport::finish(
        coverage_failures,
        Vec::new(),
        edges,
    ))
}

/// `H1`-minimality by the covering formulation: every `L_i` covers its
/// slice and every edge is the sole cover of some slice vertex for some `i`.
pub fn is_h1_minimal_by_critical_edges(base: &Graph, lattice: &Graph) -> Result<bool> {
    let cov = BCoverage::new(base, lattice)?;
    Ok(cov.is_member()
        && (0..cov.edges.len()).all(|e| (0..cov.shape.k()).any(|t| cov.sole_cover(t, e).is_some())))
}

/// `H1`-minimality by deleting each edge in turn.
///
/// Membership is closed under adding lattice edges, so a member none of
/// whose single-edge deletions is a member is minimal.
pub fn is_h1_minimal_by_deletion(base: &Graph, lattice: &Graph) -> Result<bool> {
    if !is_member_b(base, lattice)? {
        return Ok(false);
    }
    for (a, b) in lattice.edges() {
        if is_member_b(base, &lattice.without_edge_idx(a, b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimality of `H1 ∘ H2` in ℬ_k: no base edge and no lattice edge can be
/// removed. This is stronger than `H1`-minimality of the lattice.
pub fn is_composite_minimal_b(base: &Graph, lattice: &Graph) -> Result<bool> {
    if !is_h1_minimal_by_deletion(base, lattice)? {
        return Ok(false);
    }
    for (a, b) in base.edges() {
        if is_member_b(&base.without_edge_idx(a, b), lattice)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `k`-minimality of a lattice graph on `[3]^k`.
pub fn is_k_minimal(lattice: &Graph) -> Result<MinimalityReport> {
    let cov = CCoverage::new(lattice)?;
    let k = cov.shape.k();
    let mut coverage_failures = Vec::new();
    for x in 0..cov.shape.len() {
        let missing: Vec<usize> = (0..k)
            .filter(|&t| {
                (cov.needs_m(t, x) && cov.m_count[t][x] == 0)
                    || (cov.needs_n(t, x) && cov.n_count[t][x] == 0)
            })
            .map(|t| t + 1)
            .collect();
        if !missing.is_empty() {
            coverage_failures.push(CoverageFailure {
                vertex: cov.shape.vector(x),
                indices: missing,
            });
        }
    }
    let label = |e: usize| {
        let (a, b) = cov.edges[e];
        (lattice.label(a).clone(), lattice.label(b).clone())
    };
    let stray_edges = cov.stray.iter().map(|&e| label(e)).collect();
    let edges = (0..cov.edges.len())
        .map(|e| {
            let hits: Vec<(usize, usize)> = (0..k)
                .filter_map(|t| {
                    cov.sole_m_cover(t, e)
                        .or_else(|| cov.sole_n_cover(t, e))
                        .map(|x| (x, t + 1))
                })
                .collect();
            let witness = hits.first().map(|&(x, _)| EdgeWitness {
                vertex: cov.shape.vector(x),
                indices: hits.iter().filter(|h| h.0 == x).map(|h| h.1).collect(),
            });
            EdgeCriticality {
                edge: label(e),
                witness,
            }
        })
        .collect();
    Ok(MinimalityReport::finish(
        coverage_failures,
        stray_edges,
        edges,
    ))
}

/// `k`-minimality by deleting each edge in turn.
pub fn is_k_minimal_by_deletion(lattice: &Graph) -> Result<bool> {
    if !is_member_c(lattice)? {
        return Ok(false);
    }
    for (a, b) in lattice.edges() {
        if is_member_c(&lattice.without_edge_idx(a, b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete_base, gamma, null_base, p2_box, q_canon, t_graph, u_graph, v_graph,
    };
    use crate::graph::VertexLabel;

    fn lv(c: &[u32]) -> LatticeVector {
        LatticeVector::new(c).unwrap()
    }

    #[test]
    fn j_sets_for_extreme_bases() {
        let lattice = p2_box(3).unwrap();
        let null = cover_index_sets(&null_base(3).unwrap(), &lattice).unwrap();
        assert_eq!(null.j(&lv(&[2, 1, 2])), vec![1, 3]);
        let full = cover_index_sets(&complete_base(3).unwrap(), &lattice).unwrap();
        assert_eq!(full.j(&lv(&[2, 2, 2])), vec![1, 2, 3]);
        assert!(full.j(&lv(&[2, 2, 1])).is_empty());
    }

    #[test]
    fn cube_edge_index_sets() {
        let sets = cover_index_sets(&null_base(2).unwrap(), &p2_box(2).unwrap()).unwrap();
        let (x, y) = (lv(&[1, 2]), lv(&[2, 2]));
        let e = (
            VertexLabel::Lattice(x.clone()),
            VertexLabel::Lattice(y.clone()),
        );
        assert!(sets.i_of_edge(&x, &e).is_empty());
        assert_eq!(sets.i_of_edge(&y, &e), vec![1]);
        assert_eq!(sets.i_tilde(&y, &e), vec![1]);
        assert_eq!(sets.i(&y), vec![1, 2]);
    }

    #[test]
    fn minimal_examples() {
        let k2 = complete_base(2).unwrap();
        let null2 = null_base(2).unwrap();
        assert!(is_h1_minimal(&k2, &u_graph(2).unwrap()).unwrap().minimal);
        assert!(is_h1_minimal(&k2, &v_graph(2).unwrap()).unwrap().minimal);
        assert!(is_h1_minimal(&null2, &p2_box(2).unwrap()).unwrap().minimal);
        let extra = u_graph(2)
            .unwrap()
            .union(&crate::families::r_graph(2).unwrap())
            .unwrap();
        let r = is_h1_minimal(&k2, &extra).unwrap();
        assert!(r.member && !r.minimal);
        let redundant: Vec<_> = r.edges.iter().filter(|e| e.witness.is_none()).collect();
        assert_eq!(redundant.len(), 1);
        assert_eq!(redundant[0].edge.0, VertexLabel::lattice(&[1, 2]));
        assert!(!is_h1_minimal_by_deletion(&k2, &extra).unwrap());
    }

    #[test]
    fn composite_minimality_is_stronger() {
        // the matching is H1-minimal for any base with an isolated vertex,
        // but the composite with a base edge is not minimal
        let base = Graph::new(
            (1..=3).map(VertexLabel::Base),
            [(VertexLabel::Base(1), VertexLabel::Base(2))],
        )
        .unwrap();
        let r3 = crate::families::r_graph(3).unwrap();
        assert!(is_h1_minimal_by_deletion(&base, &r3).unwrap());
        assert!(!is_composite_minimal_b(&base, &r3).unwrap());
        assert!(is_composite_minimal_b(&null_base(3).unwrap(), &r3).unwrap());
    }

    #[test]
    fn k_minimality() {
        for k in 2..=3 {
            assert!(is_k_minimal(&t_graph(k).unwrap()).unwrap().minimal);
            assert!(is_k_minimal(&q_canon(k).unwrap()).unwrap().minimal);
            assert!(is_k_minimal_by_deletion(&t_graph(k).unwrap()).unwrap());
        }
        let g = is_k_minimal(&gamma(2).unwrap()).unwrap();
        assert!(g.member && !g.minimal);
        let empty = LatticeShape::new(2, 3).unwrap().edgeless_graph().unwrap();
        let r = is_k_minimal(&empty).unwrap();
        assert!(!r.member);
        assert_eq!(r.coverage_failures.len(), 6);
    }
}
