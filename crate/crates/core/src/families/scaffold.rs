//! The bipartite scaffolds `B^k_i`, `C^k_i`, `D^k_i`, the sets `S^k_i`, and
//! the maximal lattice graph `Γ_k`.
//!
//! Coordinates `i` are 1-based throughout; component slices are 0-based.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lattice::LatticeShape;
use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph, LatticeVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScaffoldKind {
    /// Complete bipartite between `[2]^k_i(1)` and `[2]^k_i(2)`.
    B,
    /// `[3]^k_i(1)` to `[3]^k_i(2)`, other coordinates within 1.
    C,
    /// `[3]^k_i(2)` to `[3]^k_i(3)`, other coordinates within 1.
    D,
}

impl ScaffoldKind {
    pub fn m(self) -> u32 {
        match self {
            ScaffoldKind::B => 2,
            ScaffoldKind::C | ScaffoldKind::D => 3,
        }
    }

    pub(crate) fn contains(self, i: usize, x: &[u32], y: &[u32]) -> bool {
        match self {
            ScaffoldKind::B => in_b(i, x, y),
            ScaffoldKind::C => in_c(i, x, y),
            ScaffoldKind::D => in_d(i, x, y),
        }
    }
}

impl FromStr for ScaffoldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(ScaffoldKind::B),
            "C" | "c" => Ok(ScaffoldKind::C),
            "D" | "d" => Ok(ScaffoldKind::D),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[inline]
fn others_within_one(i: usize, x: &[u32], y: &[u32]) -> bool {
    x.iter()
        .zip(y)
        .enumerate()
        .all(|(t, (&a, &b))| t + 1 == i || a.abs_diff(b) <= 1)
}

#[inline]
fn pair_is(i: usize, x: &[u32], y: &[u32], lo: u32) -> bool {
    let (a, b) = (x[i - 1], y[i - 1]);
    (a == lo && b == lo + 1) || (a == lo + 1 && b == lo)
}

/// Edge of `B^k_i` (vectors over `[2]`).
#[inline]
pub(crate) fn in_b(i: usize, x: &[u32], y: &[u32]) -> bool {
    pair_is(i, x, y, 1)
}

#[inline]
pub(crate) fn in_c(i: usize, x: &[u32], y: &[u32]) -> bool {
    pair_is(i, x, y, 1) && others_within_one(i, x, y)
}

#[inline]
pub(crate) fn in_d(i: usize, x: &[u32], y: &[u32]) -> bool {
    pair_is(i, x, y, 2) && others_within_one(i, x, y)
}

/// Edge of `Γ_k`: distinct vectors with every coordinate within 1.
#[inline]
pub(crate) fn in_gamma(x: &[u32], y: &[u32]) -> bool {
    x != y && x.iter().zip(y).all(|(&a, &b)| a.abs_diff(b) <= 1)
}

/// Whether `x ∈ S^k_i`: all coordinates in `{2,3}` and coordinate `i` is 3.
#[inline]
pub(crate) fn in_s(i: usize, x: &[u32]) -> bool {
    x[i - 1] == 3 && x.iter().all(|&c| c >= 2)
}

pub(crate) fn check_index(k: usize, i: usize) -> Result<()> {
    if i == 0 || i > k {
        Err(Error::IndexOutOfRange { index: i, k })
    } else {
        Ok(())
    }
}

/// Builds a graph on `[m]^k` containing every pair accepted by `rule`.
pub(crate) fn lattice_graph_by_rule<F>(shape: LatticeShape, mut rule: F) -> Graph
where
    F: FnMut(&[u32], &[u32]) -> bool,
{
    let digits = shape.digit_table();
    let n = shape.len();
    let mut adj = BitMatrix::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rule(&digits[a], &digits[b]) {
                adj.set(a, b);
                adj.set(b, a);
            }
        }
    }
    Graph::from_parts(shape.labels(), adj)
}

/// Builds a graph on `[m]^k` from rank pairs, ignoring repeats.
pub(crate) fn lattice_graph_from_ranks<I>(shape: LatticeShape, pairs: I) -> Graph
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let set: BTreeSet<(usize, usize)> = pairs
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut adj = BitMatrix::new(shape.len());
    for (a, b) in set {
        assert!(a != b, "self-loop in lattice construction");
        adj.set(a, b);
        adj.set(b, a);
    }
    Graph::from_parts(shape.labels(), adj)
}

/// The scaffold `B^k_i`, `C^k_i` or `D^k_i` as a spanning graph of `[m]^k`.
pub fn scaffold(k: usize, i: usize, kind: ScaffoldKind) -> Result<Graph> {
    check_index(k, i)?;
    let shape = LatticeShape::new(k, kind.m())?;
    Ok(lattice_graph_by_rule(shape, |x, y| kind.contains(i, x, y)))
}

/// `S^k_i = [3]^k_[k]({2,3}) ∩ [3]^k_i(3)`.
pub fn s_set(k: usize, i: usize) -> Result<Vec<LatticeVector>> {
    check_index(k, i)?;
    let shape = LatticeShape::new(k, 3)?;
    Ok(shape
        .vectors()
        .filter(|x| in_s(i, x.components()))
        .collect())
}

/// Whether every vertex of `s` is an endpoint of some edge in `edges`.
pub fn is_edge_covering<V: PartialEq>(edges: &[(V, V)], s: &[V]) -> bool {
    s.iter()
        .all(|v| edges.iter().any(|(a, b)| a == v || b == v))
}

pub(crate) fn require_k_at_least_two(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )))
    } else {
        Ok(())
    }
}

/// `Γ_k`: the graph on `[3]^k` joining distinct vectors whose coordinates
/// all differ by at most one.
///
/// # Panics
///
/// Panics if the direct construction disagrees with the union of the
/// `C^k_i` and `D^k_i` scaffolds.
pub fn gamma(k: usize) -> Result<Graph> {
    require_k_at_least_two(k)?;
    let shape = LatticeShape::new(k, 3)?;
    let direct = lattice_graph_by_rule(shape, in_gamma);
    let via_scaffolds = lattice_graph_by_rule(shape, |x, y| {
        (1..=k).any(|i| in_c(i, x, y) || in_d(i, x, y))
    });
    assert_eq!(
        direct, via_scaffolds,
        "Γ_k differs from the union of its scaffolds"
    );
    Ok(direct)
}
