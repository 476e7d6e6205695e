//! Resolving sets, completeness-resolving sets (CRS), metric dimension and
//! the classification of completeness-resolvable graphs.
//!
//! For an ordered vertex set `W = (w_1, …, w_k)` the map
//! `Ψ_W(u) = (d(w_1,u), …, d(w_k,u))` sends `V ∖ W` into `[m(W)]^k`, where
//! `m(W)` is the largest distance from `W` to a vertex outside it. `W` is a
//! CRS when `Ψ_W` is a bijection onto that box.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{canonical_relabel, is_member_composite};
use crate::graph::{Bfs, Graph, LatticeVector, VertexLabel};

pub const DEFAULT_ORDER_CAP: usize = 12;

fn w_indices(g: &Graph, w: &[VertexLabel]) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::InvalidW("W is empty".into()));
    }
    if w.len() >= g.order() {
        return Err(Error::InvalidW("W must be a proper subset of V".into()));
    }
    let mut idx = Vec::with_capacity(w.len());
    for v in w {
        let i = g
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
        if idx.contains(&i) {
            return Err(Error::InvalidW(format!("{v} listed twice")));
        }
        idx.push(i);
    }
    Ok(idx)
}

/// BFS rows from each vertex of `W`, failing on a disconnected graph.
fn w_rows(g: &Graph, w: &[usize]) -> Result<Vec<Vec<u32>>> {
    let mut bfs = Bfs::new(g.order());
    w.iter()
        .map(|&s| {
            let row = bfs.run(g.adjacency(), s).to_vec();
            if bfs.reached < g.order() {
                Err(Error::DisconnectedGraph)
            } else {
                Ok(row)
            }
        })
        .collect()
}

fn outside(n: usize, w: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |u| !w.contains(u))
}

fn radius_of<R: AsRef<[u32]>>(n: usize, w: &[usize], rows: &[R]) -> u32 {
    outside(n, w)
        .flat_map(|u| rows.iter().map(move |r| r.as_ref()[u]))
        .max()
        .expect("W is a proper subset")
}

/// `m(W)`.
pub fn truncation_radius(g: &Graph, w: &[VertexLabel]) -> Result<u32> {
    let idx = w_indices(g, w)?;
    let rows = w_rows(g, &idx)?;
    Ok(radius_of(g.order(), &idx, &rows))
}

/// `Ψ_W(u)` for the given coordinate order.
pub fn resolve_vector(
    g: &Graph,
    w_order: &[VertexLabel],
    u: &VertexLabel,
) -> Result<LatticeVector> {
    let idx = w_indices(g, w_order)?;
    let ui = g
        .index_of(u)
        .ok_or_else(|| Error::UnknownVertex(u.clone()))?;
    if idx.contains(&ui) {
        return Err(Error::VertexInW(u.clone()));
    }
    let rows = w_rows(g, &idx)?;
    let comps: Vec<u32> = rows.iter().map(|r| r[ui]).collect();
    LatticeVector::new(&comps)
}

fn distinct_vectors<R: AsRef<[u32]>>(n: usize, w: &[usize], rows: &[R]) -> bool {
    let mut vecs: Vec<Vec<u32>> = outside(n, w)
        .map(|u| rows.iter().map(|r| r.as_ref()[u]).collect())
        .collect();
    vecs.sort_unstable();
    vecs.windows(2).all(|p| p[0] != p[1])
}

/// Whether `Ψ_W` is injective on `V ∖ W`.
pub fn is_resolving_set(g: &Graph, w: &[VertexLabel]) -> Result<bool> {
    let idx = w_indices(g, w)?;
    let rows = w_rows(g, &idx)?;
    Ok(distinct_vectors(g.order(), &idx, &rows))
}

/// Why a vertex set is not a CRS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure")]
pub enum CrsFailure {
    /// `|V ∖ W| ≠ m(W)^|W|`.
    CardinalityMismatch {
        remaining: usize,
        m: u32,
    },
    NotInjective {
        first: VertexLabel,
        second: VertexLabel,
        vector: LatticeVector,
    },
    NotSurjective {
        missing: LatticeVector,
    },
}

enum RawOutcome {
    Crs {
        m: u32,
        ranks: Vec<(usize, usize)>,
    },
    Cardinality {
        remaining: usize,
        m: u32,
    },
    Collision {
        first: usize,
        second: usize,
        rank: usize,
        m: u32,
    },
    Missing {
        rank: usize,
        m: u32,
    },
}

fn rank_of<R: AsRef<[u32]>>(rows: &[R], u: usize, m: u32) -> usize {
    rows.iter()
        .fold(0, |acc, r| acc * m as usize + (r.as_ref()[u] as usize - 1))
}

fn raw_check<R: AsRef<[u32]>>(n: usize, w: &[usize], rows: &[R]) -> RawOutcome {
    let k = w.len();
    let remaining = n - k;
    let m = radius_of(n, w, rows);
    let box_size = u32::try_from(k)
        .ok()
        .and_then(|k| (m as usize).checked_pow(k));
    if box_size != Some(remaining) {
        return RawOutcome::Cardinality { remaining, m };
    }
    let mut owner = vec![usize::MAX; remaining];
    let mut ranks = Vec::with_capacity(remaining);
    for u in outside(n, w) {
        let r = rank_of(rows, u, m);
        if owner[r] != usize::MAX {
            return RawOutcome::Collision {
                first: owner[r],
                second: u,
                rank: r,
                m,
            };
        }
        owner[r] = u;
        ranks.push((u, r));
    }
    // unreachable once the counts agree and Ψ is injective; kept as a check
    if let Some(rank) = owner.iter().position(|&o| o == usize::MAX) {
        return RawOutcome::Missing { rank, m };
    }
    RawOutcome::Crs { m, ranks }
}

fn box_vector(k: usize, m: u32, mut rank: usize) -> LatticeVector {
    let mut comps = vec![0; k];
    for c in comps.iter_mut().rev() {
        *c = (rank % m as usize) as u32 + 1;
        rank /= m as usize;
    }
    LatticeVector::from_components_unchecked(&comps)
}

fn outcome_to_result(
    g: &Graph,
    w: &[usize],
    outcome: RawOutcome,
) -> std::result::Result<CrsCertificate, CrsFailure> {
    let k = w.len();
    match outcome {
        RawOutcome::Crs { m, ranks } => {
            let mut table: Vec<(usize, VertexLabel)> = ranks
                .into_iter()
                .map(|(u, r)| (r, g.label(u).clone()))
                .collect();
            table.sort_unstable_by_key(|&(r, _)| r);
            Ok(CrsCertificate {
                w: w.iter().map(|&i| g.label(i).clone()).collect(),
                m,
                table: table
                    .into_iter()
                    .map(|(r, v)| (v, box_vector(k, m, r)))
                    .collect(),
            })
        }
        RawOutcome::Cardinality { remaining, m } => {
            Err(CrsFailure::CardinalityMismatch { remaining, m })
        }
        RawOutcome::Collision {
            first,
            second,
            rank,
            m,
        } => Err(CrsFailure::NotInjective {
            first: g.label(first).clone(),
            second: g.label(second).clone(),
            vector: box_vector(k, m, rank),
        }),
        RawOutcome::Missing { rank, m } => Err(CrsFailure::NotSurjective {
            missing: box_vector(k, m, rank),
        }),
    }
}

/// Tests whether `w_order` is a CRS, returning the certificate or the reason
/// it is not one.
pub fn check_crs(
    g: &Graph,
    w_order: &[VertexLabel],
) -> Result<std::result::Result<CrsCertificate, CrsFailure>> {
    let idx = w_indices(g, w_order)?;
    let rows = w_rows(g, &idx)?;
    let outcome = raw_check(g.order(), &idx, &rows);
    Ok(outcome_to_result(g, &idx, outcome))
}

/// A witness that `W` is a CRS: `m(W)` and the table `u ↦ Ψ_W(u)`, sorted by
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrsCertificate {
    w: Vec<VertexLabel>,
    m: u32,
    table: Vec<(VertexLabel, LatticeVector)>,
}

impl CrsCertificate {
    pub fn w(&self) -> &[VertexLabel] {
        &self.w
    }

    pub fn k(&self) -> usize {
        self.w.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn table(&self) -> &[(VertexLabel, LatticeVector)] {
        &self.table
    }

    pub fn vector_of(&self, u: &VertexLabel) -> Option<&LatticeVector> {
        self.table.iter().find(|(v, _)| v == u).map(|(_, x)| x)
    }

    /// The same table sorted by vector, as produced by [`check_crs`].
    pub fn normalized(&self) -> CrsCertificate {
        let mut c = self.clone();
        c.table.sort_by(|a, b| a.1.cmp(&b.1));
        c
    }

    /// The certificate for `W` reordered so that new coordinate `j` is old
    /// coordinate `perm[j]`.
    pub fn reordered(&self, perm: &[usize]) -> CrsCertificate {
        let mut table: Vec<_> = self
            .table
            .iter()
            .map(|(u, x)| (u.clone(), x.permuted(perm)))
            .collect();
        table.sort_by(|a, b| a.1.cmp(&b.1));
        CrsCertificate {
            w: perm.iter().map(|&p| self.w[p].clone()).collect(),
            m: self.m,
            table,
        }
    }

    /// All `k!` coordinate orders of this set, lazily, starting with the
    /// identity.
    pub fn reorderings(&self) -> impl Iterator<Item = CrsCertificate> + '_ {
        (0..self.k())
            .permutations(self.k())
            .map(|p| self.reordered(&p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub order_cap: usize,
    /// Skip subsets ruled out by cardinality (`|V ∖ W| ∈ {1, 2^k, 3^k}`
    /// when `k ≥ 2`) and, for `m = 3`, by `W` not being independent.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            order_cap: DEFAULT_ORDER_CAP,
            prune: true,
        }
    }
}

fn check_search_input(g: &Graph, opts: &SearchOptions) -> Result<crate::graph::DistanceTable> {
    if g.order() > opts.order_cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: opts.order_cap,
        });
    }
    let table = g.distances();
    if !table.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(table)
}

/// The `m` a CRS of size `k ≥ 2` leaving `remaining` vertices would need.
fn implied_m(k: usize, remaining: usize) -> Option<u32> {
    (1..=3u32).find(|&m| (m as usize).pow(k as u32) == remaining)
}

fn search(
    g: &Graph,
    opts: &SearchOptions,
    sizes: std::ops::RangeInclusive<usize>,
    mut accept: impl FnMut(CrsCertificate) -> Result<bool>,
) -> Result<()> {
    let table = check_search_input(g, opts)?;
    let n = g.order();
    for k in sizes {
        if k == 0 || k >= n {
            continue;
        }
        let m_hint = implied_m(k, n - k);
        if opts.prune && k >= 2 && m_hint.is_none() {
            continue;
        }
        for w in (0..n).combinations(k) {
            if opts.prune && k >= 2 && m_hint == Some(3) && !g.is_independent(&w) {
                continue;
            }
            let rows: Vec<&[u32]> = w.iter().map(|&i| table.row(i)).collect();
            let outcome = raw_check(n, &w, &rows);
            if matches!(outcome, RawOutcome::Crs { .. }) {
                let cert = outcome_to_result(g, &w, outcome).expect("checked above");
                if !accept(cert)? {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Every CRS of `g`, one certificate per unordered `W` with coordinates in
/// canonical vertex order, sorted by `|W|` and then lexicographically.
/// Other coordinate orders are available through
/// [`CrsCertificate::reorderings`].
pub fn find_all_crs(g: &Graph) -> Result<Vec<CrsCertificate>> {
    find_all_crs_with(g, &SearchOptions::default())
}

pub fn find_all_crs_with(g: &Graph, opts: &SearchOptions) -> Result<Vec<CrsCertificate>> {
    let mut out = Vec::new();
    search(g, opts, 1..=g.order(), |c| {
        out.push(c);
        Ok(true)
    })?;
    Ok(out)
}

/// Endpoints of `g` if it is a path.
pub fn path_endpoints(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if g.size() != n - 1 || !g.is_connected() {
        return None;
    }
    let ends: Vec<usize> = (0..n).filter(|&i| g.degree_idx(i) == 1).collect();
    let inner_ok = (0..n).all(|i| matches!(g.degree_idx(i), 1 | 2));
    match ends[..] {
        [a, b] if inner_ok => Some((a, b)),
        _ => None,
    }
}

pub fn universal_vertex(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&i| g.degree_idx(i) == g.order() - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Path,
    UniversalVertex,
    FamilyB { k: usize },
    FamilyC { k: usize },
    NotCompletenessResolvable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<CrsCertificate>,
}

impl Classification {
    pub fn is_completeness_resolvable(&self) -> bool {
        self.verdict != Verdict::NotCompletenessResolvable
    }
}

pub fn is_completeness_resolvable(g: &Graph) -> Result<Classification> {
    is_completeness_resolvable_with(g, &SearchOptions::default())
}

/// Classifies `g` as a path, a graph with a universal vertex, a member of
/// ℬ_k or 𝒞_k (up to relabeling), or none of these.
///
/// A CRS with `m ∈ {2,3}` is accepted only after its relabeled composite
/// passes the membership oracle; a failure there is reported as an error
/// since it would contradict the characterization.
pub fn is_completeness_resolvable_with(g: &Graph, opts: &SearchOptions) -> Result<Classification> {
    check_search_input(g, opts)?;
    let certify = |w: Vec<VertexLabel>| -> Result<CrsCertificate> {
        Ok(check_crs(g, &w)?.expect("structural witness is a CRS"))
    };
    if let Some((a, _)) = path_endpoints(g) {
        let witness = certify(vec![g.label(a).clone()])?;
        return Ok(Classification {
            verdict: Verdict::Path,
            witness: Some(witness),
        });
    }
    if let Some(u) = universal_vertex(g) {
        let w = (0..g.order())
            .filter(|&i| i != u)
            .map(|i| g.label(i).clone())
            .collect();
        let witness = certify(w)?;
        return Ok(Classification {
            verdict: Verdict::UniversalVertex,
            witness: Some(witness),
        });
    }
    let mut found = None;
    let opts = SearchOptions {
        prune: true,
        ..*opts
    };
    search(g, &opts, 2..=g.order(), |cert| {
        let verdict = match cert.m() {
            2 => Verdict::FamilyB { k: cert.k() },
            3 => Verdict::FamilyC { k: cert.k() },
            _ => return Ok(true),
        };
        let composite = canonical_relabel(g, &cert)?;
        if !is_member_composite(&composite)? {
            return Err(Error::NotMember(format!(
                "relabeling through W = {:?} is not a family member",
                cert.w()
            )));
        }
        found = Some(Classification {
            verdict,
            witness: Some(cert),
        });
        Ok(false)
    })?;
    Ok(found.unwrap_or(Classification {
        verdict: Verdict::NotCompletenessResolvable,
        witness: None,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricBasis {
    pub dimension: usize,
    pub basis: Vec<VertexLabel>,
}

/// Sets of size `dim(g)` that resolve `g`, lexicographically.
fn bases(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<(crate::graph::DistanceTable, usize, Vec<Vec<usize>>)> {
    let table = check_search_input(g, opts)?;
    let n = g.order();
    for k in 1..n {
        let found: Vec<Vec<usize>> = (0..n)
            .combinations(k)
            .filter(|w| {
                let rows: Vec<&[u32]> = w.iter().map(|&i| table.row(i)).collect();
                distinct_vectors(n, w, &rows)
            })
            .collect();
        if !found.is_empty() {
            return Ok((table, k, found));
        }
    }
    unreachable!("any n − 1 vertices resolve a graph of order n")
}

pub fn metric_dimension(g: &Graph) -> Result<MetricBasis> {
    metric_dimension_with(g, &SearchOptions::default())
}

/// The metric dimension with the lexicographically first basis.
pub fn metric_dimension_with(g: &Graph, opts: &SearchOptions) -> Result<MetricBasis> {
    let (_, dimension, found) = bases(g, opts)?;
    let basis = found[0].iter().map(|&i| g.label(i).clone()).collect();
    Ok(MetricBasis { dimension, basis })
}

/// The first metric basis that is also a CRS, if any.
pub fn perfect_metric_basis_with(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<Option<CrsCertificate>> {
    let (table, _, found) = bases(g, opts)?;
    let n = g.order();
    for w in found {
        let rows: Vec<&[u32]> = w.iter().map(|&i| table.row(i)).collect();
        if let ok @ RawOutcome::Crs { .. } = raw_check(n, &w, &rows) {
            return Ok(outcome_to_result(g, &w, ok).ok());
        }
    }
    Ok(None)
}

pub fn is_perfectness_resolvable(g: &Graph) -> Result<bool> {
    Ok(perfect_metric_basis_with(g, &SearchOptions::default())?.is_some())
}
