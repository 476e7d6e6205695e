//! Edge-count bounds for minimal graphs and the tightness characterizations.

use serde::Serialize;

use super::cover::{cover_index_sets, is_h1_minimal, is_k_minimal};
use super::critical::BCoverage;
use super::epsilon::is_in_q;
use crate::error::{Error, Result};
use crate::families::{base_order, require_k_at_least_two, t_graph, LabelEdge, LatticeShape};
use crate::graph::{Graph, LatticeVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeBounds {
    pub lower: u64,
    pub upper: u64,
}

fn pow(base: u64, exp: usize, k: usize, m: u32) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or(Error::SizeOverflow { k, m })
}

fn degrees(base: &Graph) -> Result<Vec<usize>> {
    let k = base_order(base)?;
    Ok((0..k).map(|i| base.degree_idx(i)).collect())
}

/// Bounds on `|E(H2)|` for an `H1`-minimal lattice graph:
/// `2^(k − min d_i − 1) ≤ |E(H2)| ≤ Σ 2^(k − d_i − 1)`.
pub fn bounds_b(base: &Graph) -> Result<SizeBounds> {
    let d = degrees(base)?;
    let k = d.len();
    let min = *d.iter().min().expect("k ≥ 2");
    let lower = pow(2, k - min - 1, k, 2)?;
    let upper = d
        .iter()
        .map(|&di| pow(2, k - di - 1, k, 2))
        .sum::<Result<u64>>()?;
    Ok(SizeBounds { lower, upper })
}

/// Bounds on `|E(H2)|` for a `k`-minimal lattice graph:
/// `(3^k + 1)/2 ≤ |E(H2)| ≤ k · (3^(k−1) + 2^(k−1))`.
pub fn bounds_c(k: usize) -> Result<SizeBounds> {
    require_k_at_least_two(k)?;
    let lower = pow(3, k, k, 3)?.div_ceil(2);
    let upper = (pow(3, k - 1, k, 3)? + pow(2, k - 1, k, 3)?)
        .checked_mul(k as u64)
        .ok_or(Error::SizeOverflow { k, m: 3 })?;
    Ok(SizeBounds { lower, upper })
}

/// Bounds on the whole composite `|E(H1 ∘ H2)|` when it is minimal in ℬ_k.
pub fn composite_size_bounds_b(base: &Graph) -> Result<SizeBounds> {
    let d = degrees(base)?;
    let k = d.len();
    let cross = k as u64 * pow(2, k - 1, k, 2)?;
    let half_deg: u64 = d.iter().sum::<usize>() as u64 / 2;
    let inner = bounds_b(base)?;
    let upper_terms = d
        .iter()
        .map(|&di| Ok(pow(2, k - di, k, 2)? + di as u64))
        .sum::<Result<u64>>()?;
    Ok(SizeBounds {
        lower: cross + half_deg + inner.lower,
        upper: cross + upper_terms / 2,
    })
}

/// Bounds on `|E(K̄_[k] ∘ H2)|` when it is minimal in 𝒞_k.
pub fn composite_size_bounds_c(k: usize) -> Result<SizeBounds> {
    require_k_at_least_two(k)?;
    let p = pow(3, k - 1, k, 3)?;
    let lower = ((2 * k as u64 + 3) * p).div_ceil(2);
    let upper = 2 * k as u64 * (p + pow(2, k - 2, k, 3)?);
    Ok(SizeBounds { lower, upper })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionViolation {
    pub vertices: Vec<LatticeVector>,
    pub edges: Vec<LabelEdge>,
    pub indices: Vec<usize>,
}

/// Evidence for the two tightness characterizations on the ℬ side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessDiagnostics {
    /// Minimum-degree coordinates `i` with `L_i = E(H2)`.
    pub full_min_degree_indices: Vec<usize>,
    /// Minimum-degree coordinates `i` with `E′_i = E(H2)`. The lower bound
    /// is attained exactly when this is nonempty.
    pub critical_min_degree_indices: Vec<usize>,
    /// First `(x, e)` with `|I_x(e)| ≥ 2`.
    pub condition_a: Option<ConditionViolation>,
    /// First `e` with `I_x(e)` and `I_y(e)` both nonempty for `x ≠ y`.
    pub condition_b: Option<ConditionViolation>,
    /// First `(x, e, f)` with `I_x(e) ∩ I_x(f) ≠ ∅`.
    pub condition_c: Option<ConditionViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: u64,
    pub upper: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tightness: Option<TightnessDiagnostics>,
}

impl From<SizeBounds> for BoundsReport {
    fn from(b: SizeBounds) -> Self {
        BoundsReport {
            lower: b.lower,
            upper: b.upper,
            actual: None,
            lower_tight: None,
            upper_tight: None,
            tightness: None,
        }
    }
}

fn indices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|t| mask >> t & 1 == 1)
        .map(|t| t + 1)
        .collect()
}

/// Decides whether an `H1`-minimal lattice graph attains either bound,
/// from the structural conditions rather than from its size.
///
/// Lower: some minimum-degree `i` has every edge critical for `i`, that is
/// `E′_i = E(H2)`. `L_i = E(H2)` alone is necessary but not sufficient from
/// `k = 3` on. Upper: for all `x`,
/// `e`, `|I_x(e)| ≤ 1`; for all `e` and `x ≠ y`, `I_x(e)` or `I_y(e)` is
/// empty; for all `x` and `e ≠ f`, `I_x(e) ∩ I_x(f) = ∅`.
pub fn tightness_b(base: &Graph, lattice: &Graph) -> Result<BoundsReport> {
    if !is_h1_minimal(base, lattice)?.minimal {
        return Err(Error::NotMinimal);
    }
    let bounds = bounds_b(base)?;
    let sets = cover_index_sets(base, lattice)?;
    let d = degrees(base)?;
    let k = d.len();
    let min = *d.iter().min().expect("k ≥ 2");
    let edges: Vec<(usize, usize)> = lattice.edges().collect();
    let shape = LatticeShape::new(k, 2)?;
    let digits = shape.digit_table();

    let full_min_degree_indices: Vec<usize> = (0..k)
        .filter(|&t| d[t] == min && edges.iter().all(|&(a, b)| digits[a][t] != digits[b][t]))
        .map(|t| t + 1)
        .collect();
    let cov = BCoverage::new(base, lattice)?;
    let critical_min_degree_indices: Vec<usize> = full_min_degree_indices
        .iter()
        .copied()
        .filter(|&i| (0..edges.len()).all(|e| cov.sole_cover(i - 1, e).is_some()))
        .collect();

    let label_edge = |e: usize| sets.label_edge(e);
    let vertex = |x: usize| sets.vector(x);
    let mut condition_a = None;
    let mut condition_b = None;
    let mut condition_c = None;
    for (e, &(a, b)) in edges.iter().enumerate() {
        for x in [a, b] {
            let m = sets.raw_i_e(x, e);
            if condition_a.is_none() && m.count_ones() >= 2 {
                condition_a = Some(ConditionViolation {
                    vertices: vec![vertex(x)],
                    edges: vec![label_edge(e)],
                    indices: indices(m),
                });
            }
        }
        let (ma, mb) = (sets.raw_i_e(a, e), sets.raw_i_e(b, e));
        if condition_b.is_none() && ma != 0 && mb != 0 {
            condition_b = Some(ConditionViolation {
                vertices: vec![vertex(a), vertex(b)],
                edges: vec![label_edge(e)],
                indices: indices(ma | mb),
            });
        }
    }
    'outer: for x in 0..shape.len() {
        let incident: Vec<usize> = (0..edges.len())
            .filter(|&e| edges[e].0 == x || edges[e].1 == x)
            .collect();
        for (p, &e) in incident.iter().enumerate() {
            for &f in &incident[p + 1..] {
                let common = sets.raw_i_e(x, e) & sets.raw_i_e(x, f);
                if common != 0 {
                    condition_c = Some(ConditionViolation {
                        vertices: vec![vertex(x)],
                        edges: vec![label_edge(e), label_edge(f)],
                        indices: indices(common),
                    });
                    break 'outer;
                }
            }
        }
    }
    let upper_tight = condition_a.is_none() && condition_b.is_none() && condition_c.is_none();
    Ok(BoundsReport {
        lower: bounds.lower,
        upper: bounds.upper,
        actual: Some(lattice.size() as u64),
        lower_tight: Some(!critical_min_degree_indices.is_empty()),
        upper_tight: Some(upper_tight),
        tightness: Some(TightnessDiagnostics {
            full_min_degree_indices,
            critical_min_degree_indices,
            condition_a,
            condition_b,
            condition_c,
        }),
    })
}

/// Tightness for a `k`-minimal lattice graph on `[3]^k`: the lower bound is
/// attained exactly by `𝕋_k`, the upper exactly by the members of `𝒬_k`.
pub fn tightness_c(lattice: &Graph) -> Result<BoundsReport> {
    if !is_k_minimal(lattice)?.minimal {
        return Err(Error::NotMinimal);
    }
    let k = LatticeShape::of_graph(lattice)?.k();
    let bounds = bounds_c(k)?;
    Ok(BoundsReport {
        lower: bounds.lower,
        upper: bounds.upper,
        actual: Some(lattice.size() as u64),
        lower_tight: Some(*lattice == t_graph(k)?),
        upper_tight: Some(is_in_q(lattice)?),
        tightness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_base, null_base, p2_box, q_canon, r_graph, u_graph, v_graph};
    use crate::graph::VertexLabel;

    #[test]
    fn b_bounds() {
        let b = |g: Graph| bounds_b(&g).unwrap();
        assert_eq!(
            b(complete_base(2).unwrap()),
            SizeBounds { lower: 1, upper: 2 }
        );
        assert_eq!(b(null_base(2).unwrap()), SizeBounds { lower: 2, upper: 4 });
        assert_eq!(
            b(null_base(3).unwrap()),
            SizeBounds {
                lower: 4,
                upper: 12
            }
        );
    }

    #[test]
    fn c_bounds() {
        assert_eq!(
            bounds_c(2).unwrap(),
            SizeBounds {
                lower: 5,
                upper: 10
            }
        );
        assert_eq!(
            bounds_c(3).unwrap(),
            SizeBounds {
                lower: 14,
                upper: 39
            }
        );
        assert_eq!(
            bounds_c(4).unwrap(),
            SizeBounds {
                lower: 41,
                upper: 140
            }
        );
        assert!(bounds_c(1).is_err());
        let json = serde_json::to_string(&BoundsReport::from(bounds_c(3).unwrap())).unwrap();
        assert_eq!(json, r#"{"lower":14,"upper":39}"#);
    }

    #[test]
    fn composite_bounds() {
        assert_eq!(
            composite_size_bounds_c(2).unwrap(),
            SizeBounds {
                lower: 11,
                upper: 16
            }
        );
        assert_eq!(
            composite_size_bounds_b(&null_base(2).unwrap()).unwrap(),
            SizeBounds { lower: 6, upper: 8 }
        );
        assert_eq!(
            composite_size_bounds_b(&complete_base(2).unwrap()).unwrap(),
            SizeBounds { lower: 6, upper: 7 }
        );
    }

    #[test]
    fn tightness_examples() {
        let k2 = complete_base(2).unwrap();
        let null2 = null_base(2).unwrap();
        let r = tightness_b(&k2, &u_graph(2).unwrap()).unwrap();
        assert_eq!((r.lower_tight, r.upper_tight), (Some(true), Some(false)));
        let r = tightness_b(&k2, &v_graph(2).unwrap()).unwrap();
        assert_eq!((r.lower_tight, r.upper_tight), (Some(false), Some(true)));
        let r = tightness_b(&null2, &p2_box(2).unwrap()).unwrap();
        assert_eq!(r.upper_tight, Some(true));
        let r = tightness_b(&null2, &r_graph(2).unwrap()).unwrap();
        assert_eq!((r.lower_tight, r.upper_tight), (Some(true), Some(false)));
        let not_minimal = u_graph(2).unwrap().union(&r_graph(2).unwrap()).unwrap();
        assert_eq!(
            tightness_b(&k2, &not_minimal).unwrap_err(),
            Error::NotMinimal
        );
    }

    #[test]
    fn full_index_without_attaining_the_lower_bound() {
        let base = null_base(3).unwrap().on_same_vertices([(0, 1)]).unwrap();
        let empty = LatticeShape::new(3, 2).unwrap().edgeless_graph().unwrap();
        let at = |x: [u32; 3]| empty.index_of(&VertexLabel::lattice(&x)).unwrap();
        let pairs = [
            ([1, 1, 2], [2, 2, 1]),
            ([1, 2, 1], [2, 2, 2]),
            ([1, 2, 2], [2, 2, 1]),
            ([2, 1, 1], [2, 2, 2]),
            ([2, 1, 2], [2, 2, 1]),
        ];
        let lattice = empty
            .on_same_vertices(pairs.map(|(a, b)| (at(a), at(b))))
            .unwrap();
        let r = tightness_b(&base, &lattice).unwrap();
        let diag = r.tightness.unwrap();
        assert_eq!((r.lower, r.actual), (4, Some(5)));
        assert_eq!(diag.full_min_degree_indices, vec![3]);
        assert!(diag.critical_min_degree_indices.is_empty());
        assert_eq!(r.lower_tight, Some(false));
    }

    #[test]
    fn c_tightness() {
        let r = tightness_c(&t_graph(2).unwrap()).unwrap();
        assert_eq!((r.lower_tight, r.upper_tight), (Some(true), Some(false)));
        let r = tightness_c(&q_canon(3).unwrap()).unwrap();
        assert_eq!((r.actual, r.upper_tight), (Some(39), Some(true)));
    }
}
