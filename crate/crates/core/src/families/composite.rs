use std::sync::Arc;

use super::lattice::LatticeShape;
use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph, VertexLabel};

/// `H1 ∘ H2`: a base graph on `[k]`, a lattice graph on `[m]^k`, and the
/// implied cross edges `{i, x}` for every `x` with `x_(i) = 1`.
///
/// Cross edges are never stored. [`CompositeGraph::materialize`] produces
/// the graph on `[k] ⊔ [m]^k`, base vertices first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeGraph {
    shape: LatticeShape,
    base: Graph,
    lattice: Graph,
}

/// The graph on `[k]` without edges.
pub fn null_base(k: usize) -> Result<Graph> {
    Graph::edgeless(base_labels(k))
}

/// The complete graph on `[k]`.
pub fn complete_base(k: usize) -> Result<Graph> {
    Graph::complete(base_labels(k))
}

fn base_labels(k: usize) -> impl Iterator<Item = VertexLabel> {
    (1..=k as u32).map(VertexLabel::Base)
}

/// Checks that `g` is a graph on exactly `Base(1..=k)`.
pub(crate) fn check_base(g: &Graph, k: usize) -> Result<()> {
    let ok = g.order() == k
        && g.vertices()
            .iter()
            .enumerate()
            .all(|(t, v)| *v == VertexLabel::Base(t as u32 + 1));
    if ok {
        Ok(())
    } else {
        Err(Error::WrongVertexSet(format!("expected a graph on [{k}]")))
    }
}

/// Order `k` of a base graph on `[k]`.
pub(crate) fn base_order(g: &Graph) -> Result<usize> {
    check_base(g, g.order())?;
    Ok(g.order())
}

/// Composes a base graph on `[k]` with a lattice graph on `[m]^k`.
pub fn compose(base: &Graph, lattice: &Graph, k: usize, m: u32) -> Result<CompositeGraph> {
    let shape = LatticeShape::new(k, m)?;
    check_base(base, k)?;
    shape.check_graph(lattice)?;
    Ok(CompositeGraph {
        shape,
        base: base.clone(),
        lattice: lattice.clone(),
    })
}

impl CompositeGraph {
    pub fn k(&self) -> usize {
        self.shape.k()
    }

    pub fn m(&self) -> u32 {
        self.shape.m()
    }

    pub fn shape(&self) -> LatticeShape {
        self.shape
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lattice(&self) -> &Graph {
        &self.lattice
    }

    /// Number of implied cross edges, `k · m^(k−1)`.
    pub fn cross_edge_count(&self) -> usize {
        self.k() * self.shape.len() / self.m() as usize
    }

    /// `|E(H1)| + |E(H2)| + k · m^(k−1)`.
    pub fn edge_count(&self) -> usize {
        self.base.size() + self.lattice.size() + self.cross_edge_count()
    }

    pub fn order(&self) -> usize {
        self.k() + self.shape.len()
    }

    /// The graph on `[k] ⊔ [m]^k`.
    pub fn materialize(&self) -> Graph {
        let k = self.k();
        let n = self.order();
        let vertices: Arc<[VertexLabel]> = self
            .base
            .vertices()
            .iter()
            .chain(self.lattice.vertices())
            .cloned()
            .collect();
        let mut adj = BitMatrix::new(n);
        for (a, b) in self.base.edges() {
            adj.set(a, b);
            adj.set(b, a);
        }
        for (a, b) in self.lattice.edges() {
            adj.set(k + a, k + b);
            adj.set(k + b, k + a);
        }
        let mut digits = vec![0; k];
        for r in 0..self.shape.len() {
            self.shape.digits_into(r, &mut digits);
            for (t, &c) in digits.iter().enumerate() {
                if c == 1 {
                    adj.set(t, k + r);
                    adj.set(k + r, t);
                }
            }
        }
        Graph::from_parts(vertices, adj)
    }

    /// Splits a graph on `[k] ⊔ [m]^k` back into base and lattice parts,
    /// checking that its cross edges are exactly the implied ones.
    pub fn decompose(g: &Graph) -> Result<CompositeGraph> {
        let k = g
            .vertices()
            .iter()
            .take_while(|v| v.as_base().is_some())
            .count();
        if k == 0 || k == g.order() {
            return Err(Error::WrongVertexSet(
                "expected base and lattice vertices".into(),
            ));
        }
        let first = g.vertices()[k]
            .as_lattice()
            .ok_or_else(|| Error::WrongVertexSet("expected lattice vertices after base".into()))?;
        let last = g.vertices()[g.order() - 1]
            .as_lattice()
            .ok_or_else(|| Error::WrongVertexSet("unexpected plain vertices".into()))?;
        if first.k() != k {
            return Err(Error::WrongVertexSet(format!(
                "{k} base vertices but lattice vectors of length {}",
                first.k()
            )));
        }
        let shape = LatticeShape::new(k, last.get(1))?;
        if g.order() != k + shape.len() {
            return Err(Error::WrongVertexSet(
                "lattice part is not a full box".into(),
            ));
        }
        let base = Graph::new(
            g.vertices()[..k].iter().cloned(),
            g.edge_labels()
                .filter(|(a, b)| a.as_base().is_some() && b.as_base().is_some())
                .map(|(a, b)| (a.clone(), b.clone())),
        )?;
        let lattice = Graph::new(
            g.vertices()[k..].iter().cloned(),
            g.edge_labels()
                .filter(|(a, b)| a.as_lattice().is_some() && b.as_lattice().is_some())
                .map(|(a, b)| (a.clone(), b.clone())),
        )?;
        let c = compose(&base, &lattice, k, shape.m())?;
        for t in 0..k {
            for r in 0..shape.len() {
                let implied = shape.digits(r)[t] == 1;
                if g.has_edge_idx(t, k + r) != implied {
                    return Err(Error::CrossEdgeMismatch {
                        index: t + 1,
                        vertex: g.label(k + r).clone(),
                    });
                }
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::scaffold::gamma;

    #[test]
    fn edge_count_identity() {
        let shape = LatticeShape::new(2, 2).unwrap();
        let u2 = Graph::new(
            shape.vectors().map(VertexLabel::Lattice),
            [(VertexLabel::lattice(&[1, 1]), VertexLabel::lattice(&[2, 2]))],
        )
        .unwrap();
        let c = compose(&complete_base(2).unwrap(), &u2, 2, 2).unwrap();
        assert_eq!(c.edge_count(), 6);
        assert_eq!(c.materialize().size(), 6);

        let c = compose(&null_base(2).unwrap(), &gamma(2).unwrap(), 2, 3).unwrap();
        assert_eq!(c.edge_count(), 26);
        assert_eq!(c.materialize().size(), 26);

        let shape = LatticeShape::new(3, 2).unwrap();
        let c = compose(
            &null_base(3).unwrap(),
            &shape.edgeless_graph().unwrap(),
            3,
            2,
        )
        .unwrap();
        assert_eq!(c.edge_count(), 12);
        assert_eq!(c.materialize().size(), 12);
    }

    #[test]
    fn wrong_vertex_sets() {
        let g2 = gamma(2).unwrap();
        assert!(matches!(
            compose(&null_base(3).unwrap(), &g2, 2, 3),
            Err(Error::WrongVertexSet(_))
        ));
        assert!(matches!(
            compose(&null_base(2).unwrap(), &g2, 2, 2),
            Err(Error::WrongVertexSet(_))
        ));
        let plain = Graph::plain(2, &[]).unwrap();
        assert!(compose(&plain, &g2, 2, 3).is_err());
    }

    #[test]
    fn decompose_round_trip() {
        let c = compose(&complete_base(2).unwrap(), &gamma(2).unwrap(), 2, 3).unwrap();
        let g = c.materialize();
        assert_eq!(CompositeGraph::decompose(&g).unwrap(), c);
        // dropping a cross edge breaks the implied structure
        let broken = g.without_edge_idx(0, 2);
        assert!(matches!(
            CompositeGraph::decompose(&broken),
            Err(Error::CrossEdgeMismatch { .. })
        ));
    }
}
