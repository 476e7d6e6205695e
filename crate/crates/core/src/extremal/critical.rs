//! Critical edges: those whose removal breaks one of the coverings that
//! define membership.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{
    check_base, closed_neighborhood_mask, in_b_slice, in_c, in_d, in_gamma, in_s,
    require_k_at_least_two, Family, LabelEdge, LatticeShape,
};
use crate::graph::Graph;

/// Coverage counts for the ℬ side: `count[i][x]` is the number of edges of
/// `L_(i+1)` covering `x`, for `x` in the slice of `i + 1`.
pub(crate) struct BCoverage {
    pub shape: LatticeShape,
    pub digits: Vec<Vec<u32>>,
    /// `H1(i)` masks, 0-based coordinates.
    pub masks: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
    pub count: Vec<Vec<u32>>,
}

impl BCoverage {
    pub fn new(base: &Graph, lattice: &Graph) -> Result<BCoverage> {
        let k = base.order();
        require_k_at_least_two(k)?;
        check_base(base, k)?;
        let shape = LatticeShape::new(k, 2)?;
        shape.check_graph(lattice)?;
        let digits = shape.digit_table();
        let masks: Vec<u64> = (1..=k).map(|i| closed_neighborhood_mask(base, i)).collect();
        let edges: Vec<(usize, usize)> = lattice.edges().collect();
        let mut count = vec![vec![0; shape.len()]; k];
        for &(a, b) in &edges {
            for t in 0..k {
                if digits[a][t] != digits[b][t] {
                    for x in [a, b] {
                        if in_b_slice(masks[t], &digits[x]) {
                            count[t][x] += 1;
                        }
                    }
                }
            }
        }
        Ok(BCoverage {
            shape,
            digits,
            masks,
            edges,
            count,
        })
    }

    pub fn in_slice(&self, t: usize, x: usize) -> bool {
        in_b_slice(self.masks[t], &self.digits[x])
    }

    pub fn is_member(&self) -> bool {
        (0..self.shape.k())
            .all(|t| (0..self.shape.len()).all(|x| !self.in_slice(t, x) || self.count[t][x] > 0))
    }

    /// Endpoint of `edges[e]` that only this edge covers within `L_(t+1)`.
    pub fn sole_cover(&self, t: usize, e: usize) -> Option<usize> {
        let (a, b) = self.edges[e];
        if self.digits[a][t] == self.digits[b][t] {
            return None;
        }
        [a, b]
            .into_iter()
            .find(|&x| self.in_slice(t, x) && self.count[t][x] == 1)
    }
}

/// Coverage counts for the 𝒞 side.
pub(crate) struct CCoverage {
    pub shape: LatticeShape,
    pub digits: Vec<Vec<u32>>,
    pub edges: Vec<(usize, usize)>,
    pub stray: Vec<usize>,
    /// `[i][x]`: edges of `M_(i+1)` covering `x`.
    pub m_count: Vec<Vec<u32>>,
    /// `[i][x]`: edges of `N_(i+1)` covering `x`.
    pub n_count: Vec<Vec<u32>>,
}

impl CCoverage {
    pub fn new(lattice: &Graph) -> Result<CCoverage> {
        let shape = LatticeShape::of_graph(lattice)?;
        require_k_at_least_two(shape.k())?;
        if shape.m() != 3 {
            return Err(Error::WrongVertexSet(format!("expected [3]^{}", shape.k())));
        }
        let k = shape.k();
        let digits = shape.digit_table();
        let edges: Vec<(usize, usize)> = lattice.edges().collect();
        let mut stray = Vec::new();
        let mut m_count = vec![vec![0; shape.len()]; k];
        let mut n_count = vec![vec![0; shape.len()]; k];
        for (e, &(a, b)) in edges.iter().enumerate() {
            let (x, y) = (&digits[a][..], &digits[b][..]);
            if !in_gamma(x, y) {
                stray.push(e);
                continue;
            }
            for i in 1..=k {
                if in_c(i, x, y) {
                    m_count[i - 1][a] += 1;
                    m_count[i - 1][b] += 1;
                } else if in_d(i, x, y) {
                    n_count[i - 1][a] += 1;
                    n_count[i - 1][b] += 1;
                }
            }
        }
        Ok(CCoverage {
            shape,
            digits,
            edges,
            stray,
            m_count,
            n_count,
        })
    }

    pub fn needs_m(&self, t: usize, x: usize) -> bool {
        self.digits[x][t] == 2
    }

    pub fn needs_n(&self, t: usize, x: usize) -> bool {
        in_s(t + 1, &self.digits[x])
    }

    pub fn is_member(&self) -> bool {
        self.stray.is_empty()
            && (0..self.shape.k()).all(|t| {
                (0..self.shape.len()).all(|x| {
                    (!self.needs_m(t, x) || self.m_count[t][x] > 0)
                        && (!self.needs_n(t, x) || self.n_count[t][x] > 0)
                })
            })
    }

    /// Endpoint of `edges[e]` that only this edge covers within `M_(t+1)`.
    pub fn sole_m_cover(&self, t: usize, e: usize) -> Option<usize> {
        let (a, b) = self.edges[e];
        if !in_c(t + 1, &self.digits[a], &self.digits[b]) {
            return None;
        }
        [a, b]
            .into_iter()
            .find(|&x| self.needs_m(t, x) && self.m_count[t][x] == 1)
    }

    /// Endpoint of `edges[e]` that only this edge covers within `N_(t+1)`.
    pub fn sole_n_cover(&self, t: usize, e: usize) -> Option<usize> {
        let (a, b) = self.edges[e];
        if !in_d(t + 1, &self.digits[a], &self.digits[b]) {
            return None;
        }
        [a, b]
            .into_iter()
            .find(|&x| self.needs_n(t, x) && self.n_count[t][x] == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CriticalIndex {
    B {
        index: usize,
        /// `d_i`, the degree of `i` in the base graph.
        degree: usize,
        /// `E′_i`.
        e_prime: Vec<LabelEdge>,
    },
    C {
        index: usize,
        /// `M′_i`.
        m_prime: Vec<LabelEdge>,
        /// `N′_i`.
        n_prime: Vec<LabelEdge>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalEdgeSets {
    pub family: Family,
    pub indices: Vec<CriticalIndex>,
}

impl CriticalEdgeSets {
    /// Edges critical for at least one index, sorted.
    pub fn union(&self) -> Vec<LabelEdge> {
        let mut all: Vec<LabelEdge> = self
            .indices
            .iter()
            .flat_map(|c| match c {
                CriticalIndex::B { e_prime, .. } => e_prime.clone(),
                CriticalIndex::C {
                    m_prime, n_prime, ..
                } => m_prime.iter().chain(n_prime).cloned().collect(),
            })
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

fn label_edge(g: &Graph, (a, b): (usize, usize)) -> LabelEdge {
    (g.label(a).clone(), g.label(b).clone())
}

/// `E′_i` for every `i`, for a member of ℬ_k.
pub fn critical_edges_b(base: &Graph, lattice: &Graph) -> Result<CriticalEdgeSets> {
    let cov = BCoverage::new(base, lattice)?;
    if !cov.is_member() {
        return Err(Error::NotMember(
            "lattice does not satisfy the ℬ coverings".into(),
        ));
    }
    let indices = (0..cov.shape.k())
        .map(|t| CriticalIndex::B {
            index: t + 1,
            degree: base.degree_idx(t),
            e_prime: (0..cov.edges.len())
                .filter(|&e| cov.sole_cover(t, e).is_some())
                .map(|e| label_edge(lattice, cov.edges[e]))
                .collect(),
        })
        .collect();
    Ok(CriticalEdgeSets {
        family: Family::B,
        indices,
    })
}

/// `M′_i` and `N′_i` for every `i`, for a member of 𝒞_k.
pub fn critical_edges_c(lattice: &Graph) -> Result<CriticalEdgeSets> {
    let cov = CCoverage::new(lattice)?;
    if !cov.is_member() {
        return Err(Error::NotMember(
            "lattice does not satisfy the 𝒞 conditions".into(),
        ));
    }
    let pick = |f: &dyn Fn(usize) -> bool| -> Vec<LabelEdge> {
        (0..cov.edges.len())
            .filter(|&e| f(e))
            .map(|e| label_edge(lattice, cov.edges[e]))
            .collect()
    };
    let indices = (0..cov.shape.k())
        .map(|t| CriticalIndex::C {
            index: t + 1,
            m_prime: pick(&|e| cov.sole_m_cover(t, e).is_some()),
            n_prime: pick(&|e| cov.sole_n_cover(t, e).is_some()),
        })
        .collect();
    Ok(CriticalEdgeSets {
        family: Family::C,
        indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gamma, null_base, r_graph, t_graph};

    #[test]
    fn matching_edges_are_critical_everywhere() {
        let r2 = r_graph(2).unwrap();
        let sets = critical_edges_b(&null_base(2).unwrap(), &r2).unwrap();
        for c in &sets.indices {
            match c {
                CriticalIndex::B {
                    e_prime, degree, ..
                } => {
                    assert_eq!(*degree, 0);
                    assert_eq!(e_prime.len(), 2);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn t2_edges_all_critical_gamma_not() {
        let t2 = t_graph(2).unwrap();
        assert_eq!(critical_edges_c(&t2).unwrap().union().len(), t2.size());
        let g2 = gamma(2).unwrap();
        assert!(critical_edges_c(&g2).unwrap().union().len() < g2.size());
    }

    #[test]
    fn non_members_are_rejected() {
        let empty = LatticeShape::new(2, 3).unwrap().edgeless_graph().unwrap();
        assert!(matches!(critical_edges_c(&empty), Err(Error::NotMember(_))));
    }

    #[test]
    fn criticality_matches_deletion() {
        let g = gamma(2).unwrap();
        let t2 = t_graph(2).unwrap();
        for lattice in [&g, &t2] {
            let cov = CCoverage::new(lattice).unwrap();
            for (e, &(a, b)) in cov.edges.iter().enumerate() {
                let critical = (0..2)
                    .any(|t| cov.sole_m_cover(t, e).is_some() || cov.sole_n_cover(t, e).is_some());
                let after = CCoverage::new(&lattice.without_edge_idx(a, b)).unwrap();
                assert_eq!(critical, !after.is_member());
            }
        }
    }
}
