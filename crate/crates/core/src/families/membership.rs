//! Membership oracles for the families ℬ_k and 𝒞_k, decided on the canonical
//! vertex sets by the edge-covering conditions of the constructions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::composite::{check_base, CompositeGraph};
use super::lattice::LatticeShape;
use super::scaffold::{in_c, in_d, in_gamma, in_s, require_k_at_least_two};
use crate::error::{Error, Result};
use crate::graph::{Graph, LatticeVector, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
}

impl Family {
    pub fn m(self) -> u32 {
        match self {
            Family::B => 2,
            Family::C => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::C => "C",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

pub type LabelEdge = (VertexLabel, VertexLabel);

/// Per-coordinate findings of a membership check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum IndexDiagnostics {
    B {
        index: usize,
        /// `H1(i)`: `i` together with its neighbours in the base graph.
        closed_neighborhood: Vec<usize>,
        /// `L_i = E(H2) ∩ E(B^k_i)`.
        l_edges: Vec<LabelEdge>,
        /// First vertex of `[2]^k_{H1(i)}(2)` left uncovered by `L_i`.
        uncovered: Option<LatticeVector>,
    },
    C {
        index: usize,
        /// `M_i = E(H2) ∩ E(C^k_i)`.
        m_edges: Vec<LabelEdge>,
        /// `N_i = E(H2) ∩ E(D^k_i)`.
        n_edges: Vec<LabelEdge>,
        /// First vertex of `[3]^k_i(2)` left uncovered by `M_i`.
        uncovered_m: Option<LatticeVector>,
        /// First vertex of `S^k_i` left uncovered by `N_i`.
        uncovered_n: Option<LatticeVector>,
    },
}

impl IndexDiagnostics {
    pub fn index(&self) -> usize {
        match self {
            IndexDiagnostics::B { index, .. } | IndexDiagnostics::C { index, .. } => *index,
        }
    }

    pub fn is_satisfied(&self) -> bool {
        match self {
            IndexDiagnostics::B { uncovered, .. } => uncovered.is_none(),
            IndexDiagnostics::C {
                uncovered_m,
                uncovered_n,
                ..
            } => uncovered_m.is_none() && uncovered_n.is_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub family: Family,
    pub k: usize,
    pub member: bool,
    pub indices: Vec<IndexDiagnostics>,
    /// Lattice edges outside `Γ_k` (family C only).
    pub stray_edges: Vec<LabelEdge>,
}

fn label_edge(g: &Graph, a: usize, b: usize) -> LabelEdge {
    (g.label(a).clone(), g.label(b).clone())
}

/// `H1(i)` as a bit mask over 0-based coordinates.
pub(crate) fn closed_neighborhood_mask(base: &Graph, i: usize) -> u64 {
    base.neighbors_idx(i - 1)
        .fold(1u64 << (i - 1), |acc, t| acc | 1 << t)
}

/// Whether `x` lies in `[2]^k_{H1(i)}(2)`, given the mask of `H1(i)`.
#[inline]
pub(crate) fn in_b_slice(mask: u64, x: &[u32]) -> bool {
    x.iter()
        .enumerate()
        .all(|(t, &c)| mask >> t & 1 == 0 || c == 2)
}

fn check_b_inputs(base: &Graph, lattice: &Graph) -> Result<LatticeShape> {
    let k = base.order();
    require_k_at_least_two(k)?;
    check_base(base, k)?;
    let shape = LatticeShape::new(k, 2)?;
    shape.check_graph(lattice)?;
    Ok(shape)
}

fn check_c_inputs(lattice: &Graph) -> Result<LatticeShape> {
    let shape = LatticeShape::of_graph(lattice)?;
    require_k_at_least_two(shape.k())?;
    if shape.m() != 3 {
        return Err(Error::WrongVertexSet(format!("expected [3]^{}", shape.k())));
    }
    Ok(shape)
}

/// `covered[i][r]`: lattice vertex `r` is an endpoint of an edge of `B^k_(i+1)`.
fn b_coverage(shape: LatticeShape, lattice: &Graph) -> Vec<Vec<bool>> {
    let k = shape.k();
    let digits = shape.digit_table();
    let mut covered = vec![vec![false; shape.len()]; k];
    for (a, b) in lattice.edges() {
        for (t, row) in covered.iter_mut().enumerate() {
            if digits[a][t] != digits[b][t] {
                row[a] = true;
                row[b] = true;
            }
        }
    }
    covered
}

/// Decides `H1 ∘ H2 ∈ ℬ_k` for a base on `[k]` and a lattice graph on `[2]^k`.
pub fn member_b(base: &Graph, lattice: &Graph) -> Result<MembershipReport> {
    let shape = check_b_inputs(base, lattice)?;
    let k = shape.k();
    let digits = shape.digit_table();
    let covered = b_coverage(shape, lattice);
    let mut indices = Vec::with_capacity(k);
    for i in 1..=k {
        let mask = closed_neighborhood_mask(base, i);
        let uncovered = (0..shape.len())
            .find(|&r| in_b_slice(mask, &digits[r]) && !covered[i - 1][r])
            .map(|r| shape.vector(r));
        let l_edges = lattice
            .edges()
            .filter(|&(a, b)| digits[a][i - 1] != digits[b][i - 1])
            .map(|(a, b)| label_edge(lattice, a, b))
            .collect();
        indices.push(IndexDiagnostics::B {
            index: i,
            closed_neighborhood: (0..k)
                .filter(|t| mask >> t & 1 == 1)
                .map(|t| t + 1)
                .collect(),
            l_edges,
            uncovered,
        });
    }
    let member = indices.iter().all(IndexDiagnostics::is_satisfied);
    Ok(MembershipReport {
        family: Family::B,
        k,
        member,
        indices,
        stray_edges: Vec::new(),
    })
}

pub fn is_member_b(base: &Graph, lattice: &Graph) -> Result<bool> {
    let shape = check_b_inputs(base, lattice)?;
    let digits = shape.digit_table();
    let covered = b_coverage(shape, lattice);
    Ok((1..=shape.k()).all(|i| {
        let mask = closed_neighborhood_mask(base, i);
        (0..shape.len()).all(|r| !in_b_slice(mask, &digits[r]) || covered[i - 1][r])
    }))
}

struct CCoverage {
    stray: Vec<(usize, usize)>,
    /// `[i][r]`: `r` is covered by `M_(i+1)`.
    by_m: Vec<Vec<bool>>,
    /// `[i][r]`: `r` is covered by `N_(i+1)`.
    by_n: Vec<Vec<bool>>,
}

fn c_coverage(shape: LatticeShape, digits: &[Vec<u32>], lattice: &Graph) -> CCoverage {
    let k = shape.k();
    let mut cov = CCoverage {
        stray: Vec::new(),
        by_m: vec![vec![false; shape.len()]; k],
        by_n: vec![vec![false; shape.len()]; k],
    };
    for (a, b) in lattice.edges() {
        let (x, y) = (&digits[a][..], &digits[b][..]);
        if !in_gamma(x, y) {
            cov.stray.push((a, b));
            continue;
        }
        for i in 1..=k {
            if in_c(i, x, y) {
                cov.by_m[i - 1][a] = true;
                cov.by_m[i - 1][b] = true;
            } else if in_d(i, x, y) {
                cov.by_n[i - 1][a] = true;
                cov.by_n[i - 1][b] = true;
            }
        }
    }
    cov
}

/// Decides `K̄_[k] ∘ H2 ∈ 𝒞_k` for a lattice graph on `[3]^k`.
pub fn member_c(lattice: &Graph) -> Result<MembershipReport> {
    let shape = check_c_inputs(lattice)?;
    let k = shape.k();
    let digits = shape.digit_table();
    let cov = c_coverage(shape, &digits, lattice);
    let mut indices = Vec::with_capacity(k);
    for i in 1..=k {
        let uncovered_m = (0..shape.len())
            .find(|&r| digits[r][i - 1] == 2 && !cov.by_m[i - 1][r])
            .map(|r| shape.vector(r));
        let uncovered_n = (0..shape.len())
            .find(|&r| in_s(i, &digits[r]) && !cov.by_n[i - 1][r])
            .map(|r| shape.vector(r));
        let pick = |rule: fn(usize, &[u32], &[u32]) -> bool| -> Vec<LabelEdge> {
            lattice
                .edges()
                .filter(|&(a, b)| rule(i, &digits[a], &digits[b]))
                .map(|(a, b)| label_edge(lattice, a, b))
                .collect()
        };
        indices.push(IndexDiagnostics::C {
            index: i,
            m_edges: pick(in_c),
            n_edges: pick(in_d),
            uncovered_m,
            uncovered_n,
        });
    }
    let member = cov.stray.is_empty() && indices.iter().all(IndexDiagnostics::is_satisfied);
    let stray_edges = cov
        .stray
        .iter()
        .map(|&(a, b)| label_edge(lattice, a, b))
        .collect();
    Ok(MembershipReport {
        family: Family::C,
        k,
        member,
        indices,
        stray_edges,
    })
}

pub fn is_member_c(lattice: &Graph) -> Result<bool> {
    let shape = check_c_inputs(lattice)?;
    let digits = shape.digit_table();
    let cov = c_coverage(shape, &digits, lattice);
    if !cov.stray.is_empty() {
        return Ok(false);
    }
    Ok((1..=shape.k()).all(|i| {
        (0..shape.len()).all(|r| {
            let x = &digits[r];
            (x[i - 1] != 2 || cov.by_m[i - 1][r]) && (!in_s(i, x) || cov.by_n[i - 1][r])
        })
    }))
}

/// Membership of a composite in the family fixed by its `m`.
///
/// Family C additionally requires a null base.
pub fn member_composite(c: &CompositeGraph) -> Result<MembershipReport> {
    match c.m() {
        2 => member_b(c.base(), c.lattice()),
        3 => {
            let mut report = member_c(c.lattice())?;
            if c.base().size() > 0 {
                report.member = false;
            }
            Ok(report)
        }
        m => Err(Error::WrongVertexSet(format!("no family with m = {m}"))),
    }
}

pub fn is_member_composite(c: &CompositeGraph) -> Result<bool> {
    match c.m() {
        2 => is_member_b(c.base(), c.lattice()),
        3 => Ok(c.base().size() == 0 && is_member_c(c.lattice())?),
        m => Err(Error::WrongVertexSet(format!("no family with m = {m}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::composite::{complete_base, null_base};
    use crate::families::scaffold::gamma;

    fn lv(c: &[u32]) -> VertexLabel {
        VertexLabel::lattice(c)
    }

    fn lattice(k: usize, m: u32, edges: &[(&[u32], &[u32])]) -> Graph {
        let shape = LatticeShape::new(k, m).unwrap();
        Graph::new(
            shape.vectors().map(VertexLabel::Lattice),
            edges.iter().map(|(a, b)| (lv(a), lv(b))),
        )
        .unwrap()
    }

    #[test]
    fn u2_with_complete_base() {
        let u2 = lattice(2, 2, &[(&[1, 1], &[2, 2])]);
        let r = member_b(&complete_base(2).unwrap(), &u2).unwrap();
        assert!(r.member);
        assert!(is_member_b(&complete_base(2).unwrap(), &u2).unwrap());
        // with the null base (2,1) and (1,2) also need covering
        assert!(!is_member_b(&null_base(2).unwrap(), &u2).unwrap());
    }

    #[test]
    fn edgeless_lattice_reports_witness() {
        let empty = lattice(2, 2, &[]);
        let r = member_b(&complete_base(2).unwrap(), &empty).unwrap();
        assert!(!r.member);
        match &r.indices[0] {
            IndexDiagnostics::B {
                uncovered,
                closed_neighborhood,
                ..
            } => {
                assert_eq!(uncovered.as_ref().unwrap().components(), &[2, 2]);
                assert_eq!(closed_neighborhood, &[1, 2]);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn matching_with_null_base() {
        let r2 = lattice(2, 2, &[(&[1, 1], &[2, 2]), (&[1, 2], &[2, 1])]);
        assert!(member_b(&null_base(2).unwrap(), &r2).unwrap().member);
    }

    #[test]
    fn c_members_and_strays() {
        let g = gamma(2).unwrap();
        assert!(member_c(&g).unwrap().member);
        assert!(is_member_c(&g).unwrap());
        let with_stray = g.union(&lattice(2, 3, &[(&[1, 1], &[3, 3])])).unwrap();
        let r = member_c(&with_stray).unwrap();
        assert!(!r.member);
        assert_eq!(r.stray_edges, vec![(lv(&[1, 1]), lv(&[3, 3]))]);
        assert!(!is_member_c(&with_stray).unwrap());
        let t2 = lattice(
            2,
            3,
            &[
                (&[2, 2], &[1, 1]),
                (&[2, 3], &[1, 2]),
                (&[3, 2], &[2, 1]),
                (&[3, 3], &[2, 2]),
                (&[1, 2], &[2, 1]),
            ],
        );
        assert!(member_c(&t2).unwrap().member);
    }

    #[test]
    fn c_failure_pinpoints_condition() {
        let r = member_c(&lattice(2, 3, &[])).unwrap();
        assert!(!r.member);
        match &r.indices[0] {
            IndexDiagnostics::C {
                uncovered_m,
                uncovered_n,
                ..
            } => {
                assert_eq!(uncovered_m.as_ref().unwrap().components(), &[2, 1]);
                assert_eq!(uncovered_n.as_ref().unwrap().components(), &[3, 2]);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn wrong_inputs() {
        let g = gamma(2).unwrap();
        assert!(member_b(&null_base(2).unwrap(), &g).is_err());
        assert!(member_c(&lattice(2, 2, &[])).is_err());
        assert!(member_c(&Graph::plain(3, &[]).unwrap()).is_err());
    }
}
