//! Named lattice graphs and the maximum composites of both families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::composite::{complete_base, compose, null_base, CompositeGraph};
use super::lattice::LatticeShape;
use super::scaffold::{gamma, lattice_graph_by_rule, require_k_at_least_two};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

fn shape(k: usize, m: u32) -> Result<LatticeShape> {
    require_k_at_least_two(k)?;
    LatticeShape::new(k, m)
}

/// `𝕌_k`: the single edge `{(1,…,1), (2,…,2)}` on `[2]^k`.
pub fn u_graph(k: usize) -> Result<Graph> {
    let s = shape(k, 2)?;
    Ok(lattice_graph_by_rule(s, |x, y| {
        x.iter().all(|&c| c == 1) && y.iter().all(|&c| c == 2)
    }))
}

/// `𝕍_k`: `(2,…,2)` joined to every vector with a single 1.
pub fn v_graph(k: usize) -> Result<Graph> {
    let s = shape(k, 2)?;
    let single_one = |x: &[u32]| x.iter().filter(|&&c| c == 1).count() == 1;
    Ok(lattice_graph_by_rule(s, |x, y| {
        let top = |v: &[u32]| v.iter().all(|&c| c == 2);
        (single_one(x) && top(y)) || (single_one(y) && top(x))
    }))
}

/// `ℝ_k`: the antipodal matching on `[2]^k`.
pub fn r_graph(k: usize) -> Result<Graph> {
    let s = shape(k, 2)?;
    Ok(lattice_graph_by_rule(s, |x, y| {
        x.iter().zip(y).all(|(a, b)| a != b)
    }))
}

fn path_graph(n: u32) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(
        (1..=n).map(VertexLabel::Plain),
        edges
            .iter()
            .map(|&(a, b)| (VertexLabel::Plain(a), VertexLabel::Plain(b))),
    )
    .expect("path on at least two vertices")
}

/// `P_2^□k`, the `k`-cube on `[2]^k`.
pub fn p2_box(k: usize) -> Result<Graph> {
    require_k_at_least_two(k)?;
    cartesian_power(&path_graph(2), k)
}

/// `𝕋_k = E_X ∪ E_Z` on `[3]^k`.
pub fn t_graph(k: usize) -> Result<Graph> {
    let s = shape(k, 3)?;
    let in_x = |v: &[u32]| v.iter().all(|&c| c >= 2);
    let in_z = |v: &[u32]| v.contains(&1) && v.contains(&2);
    let e_x = |x: &[u32], y: &[u32]| in_x(x) && x.iter().zip(y).all(|(&a, &b)| a == b + 1);
    Ok(lattice_graph_by_rule(s, |x, y| {
        let e_z = in_z(x)
            && in_z(y)
            && x.iter()
                .zip(y)
                .all(|(&a, &b)| (a == 3 && b == 3) || (a.min(b), a.max(b)) == (1, 2));
        e_x(x, y) || e_x(y, x) || e_z
    }))
}

/// `𝕼_k`: `P_3^□k` without the edges `{x,x'}` having `(x_i,x'_i) = (2,3)`
/// for some `i` and `x_j = x'_j = 1` for some `j`.
pub fn q_canon(k: usize) -> Result<Graph> {
    require_k_at_least_two(k)?;
    let cube = cartesian_power(&path_graph(3), k)?;
    let s = LatticeShape::new(k, 3)?;
    let keep: Vec<(usize, usize)> = cube
        .edges()
        .filter(|&(a, b)| {
            let (x, y) = (s.digits(a), s.digits(b));
            let step = x
                .iter()
                .zip(&y)
                .any(|(&p, &q)| (p.min(q), p.max(q)) == (2, 3));
            let shared_one = x.iter().zip(&y).any(|(&p, &q)| p == 1 && q == 1);
            !(step && shared_one)
        })
        .collect();
    cube.on_same_vertices(keep)
}

/// `K_[k] ∘ K_[2]^k`, the maximum of ℬ_k.
pub fn max_b(k: usize) -> Result<CompositeGraph> {
    let s = shape(k, 2)?;
    let lattice = lattice_graph_by_rule(s, |_, _| true);
    compose(&complete_base(k)?, &lattice, k, 2)
}

/// `K̄_[k] ∘ Γ_k`, the maximum of 𝒞_k.
pub fn max_c(k: usize) -> Result<CompositeGraph> {
    compose(&null_base(k)?, &gamma(k)?, k, 3)
}

/// `G^□s` for a graph on plain vertices `1..=n`, as a graph on `[n]^s`.
pub fn cartesian_power(g: &Graph, s: usize) -> Result<Graph> {
    let n = g.order();
    let numbered = g
        .vertices()
        .iter()
        .enumerate()
        .all(|(t, v)| *v == VertexLabel::Plain(t as u32 + 1));
    if !numbered {
        return Err(Error::InvalidLabel(
            "cartesian_power needs plain vertices numbered 1..=n".into(),
        ));
    }
    let shape = LatticeShape::new(s, n as u32)?;
    Ok(lattice_graph_by_rule(shape, |x, y| {
        let mut diff = x.iter().zip(y).filter(|(a, b)| a != b);
        match (diff.next(), diff.next()) {
            (Some((&a, &b)), None) => g.has_edge_idx(a as usize - 1, b as usize - 1),
            _ => false,
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    U,
    V,
    R,
    P2box,
    T,
    Qcanon,
    Gamma,
    MaxB,
    MaxC,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 9] = [
        NamedGraph::U,
        NamedGraph::V,
        NamedGraph::R,
        NamedGraph::P2box,
        NamedGraph::T,
        NamedGraph::Qcanon,
        NamedGraph::Gamma,
        NamedGraph::MaxB,
        NamedGraph::MaxC,
    ];

    pub fn m(self) -> u32 {
        match self {
            NamedGraph::U
            | NamedGraph::V
            | NamedGraph::R
            | NamedGraph::P2box
            | NamedGraph::MaxB => 2,
            _ => 3,
        }
    }

    /// The base under which the lattice graph is a family member of interest:
    /// complete for `𝕌_k`, `𝕍_k` and `MaxB`, null otherwise.
    pub fn natural_base(self, k: usize) -> Result<Graph> {
        match self {
            NamedGraph::U | NamedGraph::V | NamedGraph::MaxB => complete_base(k),
            _ => null_base(k),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyGraph {
    Lattice(Graph),
    Composite(CompositeGraph),
}

impl FamilyGraph {
    /// The composite with the natural base, for lattice graphs.
    pub fn into_composite(self, name: NamedGraph) -> Result<CompositeGraph> {
        match self {
            FamilyGraph::Composite(c) => Ok(c),
            FamilyGraph::Lattice(g) => {
                let shape = LatticeShape::of_graph(&g)?;
                compose(&name.natural_base(shape.k())?, &g, shape.k(), shape.m())
            }
        }
    }
}

/// Builds a named graph: lattice graphs for the examples, composites for the
/// two family maxima.
pub fn example_graph(name: NamedGraph, k: usize) -> Result<FamilyGraph> {
    use FamilyGraph::{Composite, Lattice};
    Ok(match name {
        NamedGraph::U => Lattice(u_graph(k)?),
        NamedGraph::V => Lattice(v_graph(k)?),
        NamedGraph::R => Lattice(r_graph(k)?),
        NamedGraph::P2box => Lattice(p2_box(k)?),
        NamedGraph::T => Lattice(t_graph(k)?),
        NamedGraph::Qcanon => Lattice(q_canon(k)?),
        NamedGraph::Gamma => Lattice(gamma(k)?),
        NamedGraph::MaxB => Composite(max_b(k)?),
        NamedGraph::MaxC => Composite(max_c(k)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::membership::{is_member_b, is_member_c};

    fn lv(c: &[u32]) -> VertexLabel {
        VertexLabel::lattice(c)
    }

    #[test]
    fn t2_edges() {
        let t = t_graph(2).unwrap();
        let mut expected = vec![
            (lv(&[1, 1]), lv(&[2, 2])),
            (lv(&[1, 2]), lv(&[2, 3])),
            (lv(&[2, 1]), lv(&[3, 2])),
            (lv(&[2, 2]), lv(&[3, 3])),
            (lv(&[1, 2]), lv(&[2, 1])),
        ];
        expected.sort();
        let got: Vec<_> = t
            .edge_labels()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn small_sizes() {
        for k in 2..=4 {
            assert_eq!(u_graph(k).unwrap().size(), 1);
            assert_eq!(v_graph(k).unwrap().size(), k);
            assert_eq!(r_graph(k).unwrap().size(), 1 << (k - 1));
            assert_eq!(p2_box(k).unwrap().size(), k << (k - 1));
            assert_eq!(t_graph(k).unwrap().size(), 3usize.pow(k as u32).div_ceil(2));
        }
        assert_eq!(q_canon(2).unwrap().size(), 10);
        assert_eq!(q_canon(3).unwrap().size(), 3 * (9 + 4));
    }

    #[test]
    fn cartesian_powers() {
        let p3 = path_graph(3);
        let sq = cartesian_power(&p3, 2).unwrap();
        assert_eq!((sq.order(), sq.size()), (9, 12));
        let c4 = cartesian_power(&path_graph(2), 2).unwrap();
        assert_eq!(c4.size(), 4);
        assert!(c4.vertices().iter().all(|v| c4.degree(v).unwrap() == 2));
        let zero_based = Graph::plain(2, &[(0, 1)]).unwrap();
        assert!(cartesian_power(&zero_based, 2).is_err());
    }

    #[test]
    fn named_members() {
        assert!(is_member_b(&complete_base(3).unwrap(), &u_graph(3).unwrap()).unwrap());
        assert!(is_member_b(&complete_base(3).unwrap(), &v_graph(3).unwrap()).unwrap());
        assert!(is_member_b(&null_base(3).unwrap(), &r_graph(3).unwrap()).unwrap());
        assert!(is_member_b(&null_base(3).unwrap(), &p2_box(3).unwrap()).unwrap());
        for k in 2..=3 {
            assert!(is_member_c(&t_graph(k).unwrap()).unwrap());
            assert!(is_member_c(&q_canon(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn names_parse() {
        for n in NamedGraph::ALL {
            assert_eq!(n.to_string().parse::<NamedGraph>().unwrap(), n);
        }
        assert_eq!("p2box".parse::<NamedGraph>().unwrap(), NamedGraph::P2box);
        assert!("W".parse::<NamedGraph>().is_err());
        assert!(example_graph(NamedGraph::U, 1).is_err());
    }
}
