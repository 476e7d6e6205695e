//! Exhaustive enumeration of minimal lattice graphs over small spaces.
//!
//! Both families reduce to a covering system: a list of candidate edges
//! and a list of requirements, each the set of candidates able to cover one
//! `(i, x)` pair. A subset is a member when it meets every requirement and
//! minimal when each of its edges is the only one meeting some requirement.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{
    base_order, closed_neighborhood_mask, in_b_slice, in_c, in_d, in_gamma, in_s,
    require_k_at_least_two, Family, LatticeShape,
};
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub(crate) struct CoverSystem {
    pub shape: LatticeShape,
    /// Candidate edges as rank pairs `(a, b)`, `a < b`.
    pub edges: Vec<(usize, usize)>,
    pub requirements: Vec<u64>,
}

impl CoverSystem {
    /// ℬ side: every pair of `[2]^k` is a candidate.
    pub fn for_b(base: &Graph, cap: u128) -> Result<CoverSystem> {
        let k = base_order(base)?;
        require_k_at_least_two(k)?;
        let shape = LatticeShape::new(k, 2)?;
        let digits = shape.digit_table();
        let n = shape.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        check_space(edges.len(), cap)?;
        let mut requirements = Vec::new();
        for i in 1..=k {
            let mask = closed_neighborhood_mask(base, i);
            for x in (0..n).filter(|&x| in_b_slice(mask, &digits[x])) {
                requirements.push(Self::incident(&edges, x, |a, b| {
                    digits[a][i - 1] != digits[b][i - 1]
                }));
            }
        }
        Ok(CoverSystem {
            shape,
            edges,
            requirements,
        })
    }

    /// 𝒞 side: the candidates are the edges of `Γ_k`.
    pub fn for_c(k: usize, cap: u128) -> Result<CoverSystem> {
        require_k_at_least_two(k)?;
        let shape = LatticeShape::new(k, 3)?;
        let digits = shape.digit_table();
        let n = shape.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| in_gamma(&digits[a], &digits[b]))
            .collect();
        check_space(edges.len(), cap)?;
        let mut requirements = Vec::new();
        for i in 1..=k {
            for x in 0..n {
                if digits[x][i - 1] == 2 {
                    requirements.push(Self::incident(&edges, x, |a, b| {
                        in_c(i, &digits[a], &digits[b])
                    }));
                }
                if in_s(i, &digits[x]) {
                    requirements.push(Self::incident(&edges, x, |a, b| {
                        in_d(i, &digits[a], &digits[b])
                    }));
                }
            }
        }
        Ok(CoverSystem {
            shape,
            edges,
            requirements,
        })
    }

    fn incident(edges: &[(usize, usize)], x: usize, rule: impl Fn(usize, usize) -> bool) -> u64 {
        edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| (a == x || b == x) && rule(a, b))
            .fold(0, |m, (e, _)| m | 1 << e)
    }

    /// `2^(candidates)`.
    pub fn space(&self) -> u64 {
        1 << self.edges.len()
    }

    #[inline]
    pub fn is_member(&self, mask: u64) -> bool {
        self.requirements.iter().all(|&r| mask & r != 0)
    }

    #[inline]
    pub fn is_minimal(&self, mask: u64) -> bool {
        let mut critical = 0;
        for &r in &self.requirements {
            let hit = mask & r;
            if hit == 0 {
                return false;
            }
            if hit & (hit - 1) == 0 {
                critical |= hit;
            }
        }
        critical == mask
    }

    pub fn graph(&self, mask: u64) -> Graph {
        crate::families::lattice_graph_from_ranks(
            self.shape,
            (0..self.edges.len())
                .filter(|e| mask >> e & 1 == 1)
                .map(|e| self.edges[e]),
        )
    }

    #[cfg(test)]
    /// The candidate mask of a lattice graph on this system's box; `None`
    /// if it uses a non-candidate edge.
    pub fn mask_of(&self, g: &Graph) -> Option<u64> {
        g.edges().try_fold(0u64, |m, e| {
            self.edges.binary_search(&e).ok().map(|i| m | 1 << i)
        })
    }

    pub fn member_count(&self) -> u64 {
        (0..self.space())
            .into_par_iter()
            .filter(|&m| self.is_member(m))
            .count() as u64
    }

    pub fn minimal_masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = (0..self.space())
            .into_par_iter()
            .filter(|&m| self.is_minimal(m))
            .collect();
        masks.sort_unstable();
        masks
    }
}

/// Subset spaces must fit both `cap` and a `u64` mask.
fn check_space(n: usize, cap: u128) -> Result<()> {
    let count = if n < 128 { 1u128 << n } else { u128::MAX };
    if count > cap || n >= 64 {
        return Err(Error::EnumerationCapExceeded { count, cap });
    }
    Ok(())
}

fn sorted_graphs(system: &CoverSystem, masks: &[u64]) -> Vec<Graph> {
    let mut out: Vec<Graph> = masks.iter().map(|&m| system.graph(m)).collect();
    out.sort();
    out
}

/// Number of lattice graphs `H2` on `[2]^k` with `base ∘ H2 ∈ ℬ_k`.
pub fn count_members_b(base: &Graph, cap: u128) -> Result<u64> {
    CoverSystem::for_b(base, cap).map(|s| s.member_count())
}

/// Number of lattice graphs `H2` on `[3]^k` with `K̄_[k] ∘ H2 ∈ 𝒞_k`.
pub fn count_members_c(k: usize, cap: u128) -> Result<u64> {
    CoverSystem::for_c(k, cap).map(|s| s.member_count())
}

/// All `H1`-minimal lattice graphs on `[2]^k`, sorted by size then edges.
pub fn enumerate_minimal_b(base: &Graph, cap: u128) -> Result<Vec<Graph>> {
    let system = CoverSystem::for_b(base, cap)?;
    Ok(sorted_graphs(&system, &system.minimal_masks()))
}

/// All `k`-minimal lattice graphs on `[3]^k`, sorted by size then edges.
pub fn enumerate_minimal_c(k: usize, cap: u128) -> Result<Vec<Graph>> {
    let system = CoverSystem::for_c(k, cap)?;
    Ok(sorted_graphs(&system, &system.minimal_masks()))
}

/// Dispatches on the family; ℬ uses the null base on `[k]` when none is
/// given.
pub fn enumerate_minimal(
    family: Family,
    k: usize,
    base: Option<&Graph>,
    cap: u128,
) -> Result<Vec<Graph>> {
    match family {
        Family::B => match base {
            Some(b) => {
                if b.order() != k {
                    return Err(Error::WrongVertexSet(format!("base must be on [{k}]")));
                }
                enumerate_minimal_b(b, cap)
            }
            None => enumerate_minimal_b(&crate::families::null_base(k)?, cap),
        },
        Family::C => enumerate_minimal_c(k, cap),
    }
}
