//! Finite simple graphs over [`VertexLabel`]s, exact hop distances, and the
//! spanning-subgraph order.
//!
//! Vertices are kept sorted in the canonical label order, so two graphs are
//! equal exactly when their vertex sets and edge sets are equal. Adjacency is
//! a bit matrix over vertex positions; all index-based methods refer to those
//! positions.

mod bits;
pub mod graph6;
mod label;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub(crate) use bits::{ones, BitMatrix};
pub use label::{LatticeVector, VertexLabel};

use crate::error::{Error, Result};

/// A finite simple graph with at least two vertices.
#[derive(Clone)]
pub struct Graph {
    vertices: Arc<[VertexLabel]>,
    adj: BitMatrix,
    size: usize,
}

impl Graph {
    /// Builds a graph from labels and labeled edges.
    ///
    /// Vertices may be given in any order; they are stored canonically.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let g = Graph::edgeless(vertices)?;
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let i = g
                .index_of(&a)
                .ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let j = g.index_of(&b).ok_or(Error::UnknownVertex(b))?;
            pairs.push((i, j));
        }
        g.on_same_vertices(pairs)
    }

    /// The graph with the given vertices and no edges.
    pub fn edgeless<V>(vertices: V) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexLabel>,
    {
        let mut vs: Vec<VertexLabel> = vertices.into_iter().collect();
        for v in &vs {
            v.validate()?;
        }
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        if vs.len() < 2 {
            return Err(Error::TooFewVertices(vs.len()));
        }
        let n = vs.len();
        Ok(Graph {
            vertices: vs.into(),
            adj: BitMatrix::new(n),
            size: 0,
        })
    }

    /// The complete graph on the given vertices.
    pub fn complete<V>(vertices: V) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexLabel>,
    {
        let g = Graph::edgeless(vertices)?;
        let n = g.order();
        g.on_same_vertices((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// A graph on plain vertices `0..n`.
    pub fn plain(n: u32, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::new(
            (0..n).map(VertexLabel::Plain),
            edges
                .iter()
                .map(|&(a, b)| (VertexLabel::Plain(a), VertexLabel::Plain(b))),
        )
    }

    /// A new graph on this graph's vertex set with the given edges, by
    /// vertex position.
    pub fn on_same_vertices<E>(&self, edges: E) -> Result<Graph>
    where
        E: IntoIterator<Item = (usize, usize)>,
    {
        let n = self.order();
        let mut adj = BitMatrix::new(n);
        let mut size = 0;
        for (i, j) in edges {
            if i >= n {
                return Err(Error::UnknownVertexIndex(i));
            }
            if j >= n {
                return Err(Error::UnknownVertexIndex(j));
            }
            if i == j {
                return Err(Error::SelfLoop(self.vertices[i].clone()));
            }
            if adj.get(i, j) {
                return Err(Error::DuplicateEdge(
                    self.vertices[i.min(j)].clone(),
                    self.vertices[i.max(j)].clone(),
                ));
            }
            adj.set(i, j);
            adj.set(j, i);
            size += 1;
        }
        Ok(Graph {
            vertices: self.vertices.clone(),
            adj,
            size,
        })
    }

    /// Assembles a graph from parts that the caller guarantees are valid:
    /// sorted distinct vertices and a symmetric loop-free matrix.
    pub(crate) fn from_parts(vertices: Arc<[VertexLabel]>, adj: BitMatrix) -> Graph {
        let n = vertices.len();
        let size = (0..n).map(|i| adj.row_count(i)).sum::<usize>() / 2;
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!((0..n).all(|i| !adj.get(i, i)));
        Graph {
            vertices,
            adj,
            size,
        }
    }

    pub(crate) fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.index_of(v).is_some()
    }

    pub fn has_edge(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj.get(i, j),
            _ => false,
        }
    }

    #[inline]
    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    pub fn neighbors_idx(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.adj.row(i))
    }

    pub fn degree(&self, v: &VertexLabel) -> Result<usize> {
        let i = self
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
        Ok(self.degree_idx(i))
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        self.adj.row_count(i)
    }

    /// Edges as position pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |i| {
            ones(self.adj.row(i))
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Edges as label pairs, smaller endpoint first.
    pub fn edge_labels(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> + '_ {
        self.edges()
            .map(|(i, j)| (&self.vertices[i], &self.vertices[j]))
    }

    /// Copy of this graph with the edge `{i, j}` added (no-op if present).
    pub fn with_edge_idx(&self, i: usize, j: usize) -> Graph {
        assert!(i != j, "self-loop");
        let mut g = self.clone();
        if !g.adj.get(i, j) {
            g.adj.set(i, j);
            g.adj.set(j, i);
            g.size += 1;
        }
        g
    }

    /// Copy of this graph with the edge `{i, j}` removed (no-op if absent).
    pub fn without_edge_idx(&self, i: usize, j: usize) -> Graph {
        let mut g = self.clone();
        if g.adj.get(i, j) {
            g.adj.clear(i, j);
            g.adj.clear(j, i);
            g.size -= 1;
        }
        g
    }

    pub fn same_vertex_set(&self, other: &Graph) -> bool {
        Arc::ptr_eq(&self.vertices, &other.vertices) || self.vertices == other.vertices
    }

    /// Graph on the common vertex set whose edges are `E(self) ∪ E(other)`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if !self.same_vertex_set(other) {
            return Err(Error::VertexSetMismatch);
        }
        let mut adj = self.adj.clone();
        adj.union_with(&other.adj);
        Ok(Graph::from_parts(self.vertices.clone(), adj))
    }

    /// `self ⪯ other`: same vertex set and `E(self) ⊆ E(other)`.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.same_vertex_set(other) && self.adj.is_subset_of(&other.adj)
    }

    /// Whether the vertex subset induces a graph without edges.
    pub fn is_independent(&self, idx: &[usize]) -> bool {
        idx.iter()
            .all(|&a| idx.iter().all(|&b| !self.adj.get(a, b)))
    }

    /// Relabels every vertex. The map must be injective.
    pub fn relabeled<F>(&self, mut f: F) -> Result<Graph>
    where
        F: FnMut(&VertexLabel) -> VertexLabel,
    {
        let new_labels: Vec<VertexLabel> = self.vertices.iter().map(&mut f).collect();
        Graph::new(
            new_labels.iter().cloned(),
            self.edges()
                .map(|(i, j)| (new_labels[i].clone(), new_labels[j].clone())),
        )
    }

    /// The same graph on plain vertices `0..n`, numbered in canonical order.
    pub fn to_plain(&self) -> Graph {
        let vertices: Arc<[VertexLabel]> =
            (0..self.order() as u32).map(VertexLabel::Plain).collect();
        Graph::from_parts(vertices, self.adj.clone())
    }

    /// Hop distances from vertex position `src`, `None` where unreachable.
    pub fn distances_from(&self, src: usize) -> Vec<Distance> {
        let mut scratch = Bfs::new(self.order());
        scratch
            .run(&self.adj, src)
            .iter()
            .map(|&d| Distance::from_raw(d))
            .collect()
    }

    /// All-pairs hop distances.
    pub fn distances(&self) -> DistanceTable {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        let mut bfs = Bfs::new(n);
        for s in 0..n {
            table.extend_from_slice(bfs.run(&self.adj, s));
        }
        DistanceTable {
            vertices: self.vertices.clone(),
            n,
            raw: table,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut bfs = Bfs::new(self.order());
        bfs.run(&self.adj, 0);
        bfs.reached == self.order()
    }

    /// Maximum distance over all pairs.
    pub fn diameter(&self) -> Result<u32> {
        self.distances().diameter()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.same_vertex_set(other) && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.adj.hash(state);
    }
}

/// Canonical order: vertex set, then size, then the sorted edge list.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .cmp(&other.vertices)
            .then(self.size.cmp(&other.size))
            .then_with(|| self.edges().cmp(other.edges()))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edge_labels().collect::<Vec<_>>())
            .finish()
    }
}

/// Union of two graphs on the same vertex set.
pub fn union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    g1.union(g2)
}

/// The relation `g1 ⪯ g2`.
pub fn is_spanning_subgraph(g1: &Graph, g2: &Graph) -> bool {
    g1.is_spanning_subgraph_of(g2)
}

pub(crate) const UNREACHABLE: u32 = u32::MAX;

/// A hop count, or no path at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    fn from_raw(d: u32) -> Distance {
        if d == UNREACHABLE {
            Distance::Unreachable
        } else {
            Distance::Finite(d)
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Reusable breadth-first search over bit rows.
pub(crate) struct Bfs {
    dist: Vec<u32>,
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
    pub(crate) reached: usize,
}

impl Bfs {
    pub(crate) fn new(n: usize) -> Bfs {
        let words = n.div_ceil(64).max(1);
        Bfs {
            dist: vec![UNREACHABLE; n],
            visited: vec![0; words],
            frontier: vec![0; words],
            next: vec![0; words],
            reached: 0,
        }
    }

    /// Distances from `src`; unreachable vertices hold [`UNREACHABLE`].
    pub(crate) fn run(&mut self, adj: &BitMatrix, src: usize) -> &[u32] {
        self.dist.fill(UNREACHABLE);
        self.visited.fill(0);
        self.frontier.fill(0);
        self.dist[src] = 0;
        self.visited[src / 64] |= 1 << (src % 64);
        self.frontier[src / 64] |= 1 << (src % 64);
        self.reached = 1;
        let mut level = 0;
        loop {
            level += 1;
            self.next.fill(0);
            for v in ones(&self.frontier) {
                for (n, r) in self.next.iter_mut().zip(adj.row(v)) {
                    *n |= r;
                }
            }
            let mut any = false;
            for (n, vis) in self.next.iter_mut().zip(&mut self.visited) {
                *n &= !*vis;
                *vis |= *n;
                any |= *n != 0;
            }
            if !any {
                break;
            }
            for v in ones(&self.next) {
                self.dist[v] = level;
                self.reached += 1;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        debug_assert_eq!(adj.words(), self.visited.len());
        &self.dist
    }
}

/// Exact hop distances between all ordered vertex pairs of a graph.
#[derive(Clone)]
pub struct DistanceTable {
    vertices: Arc<[VertexLabel]>,
    n: usize,
    raw: Vec<u32>,
}

impl DistanceTable {
    pub fn get(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Distance> {
        let i = self.index(u)?;
        let j = self.index(v)?;
        Ok(self.get_idx(i, j))
    }

    pub fn get_idx(&self, i: usize, j: usize) -> Distance {
        Distance::from_raw(self.raw[i * self.n + j])
    }

    /// Row of raw distances from position `i`; unreachable is `u32::MAX`.
    pub(crate) fn row(&self, i: usize) -> &[u32] {
        &self.raw[i * self.n..(i + 1) * self.n]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_connected(&self) -> bool {
        !self.raw.contains(&UNREACHABLE)
    }

    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(self.raw.iter().copied().max().unwrap_or(0))
    }

    fn index(&self, v: &VertexLabel) -> Result<usize> {
        self.vertices
            .binary_search(v)
            .map_err(|_| Error::UnknownVertex(v.clone()))
    }
}

/// All-pairs hop distances of `g`.
pub fn distances(g: &Graph) -> DistanceTable {
    g.distances()
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<u32> {
    g.diameter()
}
