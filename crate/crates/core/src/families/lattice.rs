use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, LatticeVector, VertexLabel};

/// Largest box `[m]^k` this crate will materialize (`3^10`).
pub const MAX_LATTICE_ORDER: usize = 59_049;

/// The box `[m]^k`, with vectors ranked lexicographically from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeShape {
    k: usize,
    m: u32,
    len: usize,
}

impl LatticeShape {
    pub fn new(k: usize, m: u32) -> Result<LatticeShape> {
        if k == 0 || m == 0 {
            return Err(Error::SizeOverflow { k, m });
        }
        let len = u32::try_from(k)
            .ok()
            .and_then(|k32| (m as usize).checked_pow(k32))
            .filter(|&len| len <= MAX_LATTICE_ORDER)
            .ok_or(Error::SizeOverflow { k, m })?;
        Ok(LatticeShape { k, m, len })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `m^k`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Lexicographic rank of a component slice.
    pub fn rank(&self, x: &[u32]) -> usize {
        debug_assert_eq!(x.len(), self.k);
        x.iter()
            .fold(0, |acc, &c| acc * self.m as usize + (c as usize - 1))
    }

    /// Components of the vector with the given rank, written into `out`.
    pub fn digits_into(&self, mut rank: usize, out: &mut [u32]) {
        for slot in out.iter_mut().rev() {
            *slot = (rank % self.m as usize) as u32 + 1;
            rank /= self.m as usize;
        }
    }

    pub fn digits(&self, rank: usize) -> Vec<u32> {
        let mut out = vec![0; self.k];
        self.digits_into(rank, &mut out);
        out
    }

    pub fn vector(&self, rank: usize) -> LatticeVector {
        LatticeVector::from_components_unchecked(&self.digits(rank))
    }

    /// All vectors, lexicographically.
    pub fn vectors(&self) -> impl Iterator<Item = LatticeVector> + '_ {
        (0..self.len).map(|r| self.vector(r))
    }

    /// Component table: row `r` holds the digits of rank `r`.
    pub(crate) fn digit_table(&self) -> Vec<Vec<u32>> {
        (0..self.len).map(|r| self.digits(r)).collect()
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        x.k() == self.k && x.components().iter().all(|&c| c <= self.m)
    }

    pub(crate) fn labels(&self) -> Arc<[VertexLabel]> {
        self.vectors().map(VertexLabel::Lattice).collect()
    }

    /// The graph on `[m]^k` without edges.
    pub fn edgeless_graph(&self) -> Result<Graph> {
        Graph::edgeless(self.vectors().map(VertexLabel::Lattice))
    }

    /// Checks that `g` is a graph on exactly `[m]^k`.
    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        let ok = g.order() == self.len
            && g.vertices().iter().enumerate().all(|(r, v)| match v {
                VertexLabel::Lattice(x) => self.contains(x) && self.rank(x.components()) == r,
                _ => false,
            });
        if ok {
            Ok(())
        } else {
            Err(Error::WrongVertexSet(format!(
                "expected a graph on [{}]^{}",
                self.m, self.k
            )))
        }
    }

    /// Infers `(k, m)` from a graph whose vertex set is a full box.
    pub fn of_graph(g: &Graph) -> Result<LatticeShape> {
        let first = g.vertices()[0]
            .as_lattice()
            .ok_or_else(|| Error::WrongVertexSet("not a lattice graph".into()))?;
        let last = g.vertices()[g.order() - 1]
            .as_lattice()
            .ok_or_else(|| Error::WrongVertexSet("not a lattice graph".into()))?;
        let shape = LatticeShape::new(first.k(), last.get(1))?;
        shape.check_graph(g)?;
        Ok(shape)
    }
}

/// All vectors of `[m]^k` in lexicographic order.
pub fn lattice_vertices(k: usize, m: u32) -> Result<Vec<LatticeVector>> {
    Ok(LatticeShape::new(k, m)?.vectors().collect())
}

/// The slice `[m]^k_I(J)`: vectors whose coordinates at every position of
/// `I` take values in `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    shape: LatticeShape,
    positions: Vec<usize>,
    values: Vec<u32>,
}

impl Slice {
    /// `positions` are 1-based coordinates, `values` elements of `[m]`.
    pub fn new(shape: LatticeShape, positions: &[usize], values: &[u32]) -> Result<Slice> {
        let mut positions = positions.to_vec();
        positions.sort_unstable();
        positions.dedup();
        let mut values = values.to_vec();
        values.sort_unstable();
        values.dedup();
        if let Some(&p) = positions.iter().find(|&&p| p == 0 || p > shape.k) {
            return Err(Error::IndexOutOfRange {
                index: p,
                k: shape.k,
            });
        }
        if values.iter().any(|&v| v == 0 || v > shape.m) {
            return Err(Error::InvalidLabel(format!(
                "slice values {values:?} outside [{}]",
                shape.m
            )));
        }
        Ok(Slice {
            shape,
            positions,
            values,
        })
    }

    pub fn contains_components(&self, x: &[u32]) -> bool {
        self.positions
            .iter()
            .all(|&p| self.values.contains(&x[p - 1]))
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        self.shape.contains(x) && self.contains_components(x.components())
    }

    /// `|J|^|I| · m^(k−|I|)`.
    pub fn cardinality(&self) -> usize {
        let free = self.shape.k - self.positions.len();
        self.values.len().pow(self.positions.len() as u32)
            * (self.shape.m as usize).pow(free as u32)
    }

    pub fn members(&self) -> Vec<LatticeVector> {
        self.shape
            .vectors()
            .filter(|x| self.contains_components(x.components()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps(v: &[LatticeVector]) -> Vec<Vec<u32>> {
        v.iter().map(|x| x.components().to_vec()).collect()
    }

    #[test]
    fn small_boxes_in_order() {
        assert_eq!(
            comps(&lattice_vertices(1, 3).unwrap()),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            comps(&lattice_vertices(2, 2).unwrap()),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(lattice_vertices(3, 3).unwrap().len(), 27);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            lattice_vertices(11, 3).unwrap_err(),
            Error::SizeOverflow { k: 11, m: 3 }
        );
        assert!(LatticeShape::new(usize::MAX, 2).is_err());
        assert!(LatticeShape::new(10, 3).is_ok());
    }

    #[test]
    fn rank_round_trips() {
        let s = LatticeShape::new(3, 3).unwrap();
        for r in 0..s.len() {
            assert_eq!(s.rank(&s.digits(r)), r);
        }
    }

    #[test]
    fn slice_cardinality_matches_members() {
        let s = LatticeShape::new(3, 3).unwrap();
        for (pos, vals) in [
            (vec![1], vec![2]),
            (vec![1, 2, 3], vec![2, 3]),
            (vec![], vec![1]),
            (vec![2, 3], vec![1, 3]),
        ] {
            let sl = Slice::new(s, &pos, &vals).unwrap();
            assert_eq!(sl.members().len(), sl.cardinality());
        }
        assert!(Slice::new(s, &[4], &[1]).is_err());
        assert!(Slice::new(s, &[1], &[4]).is_err());
    }
}
