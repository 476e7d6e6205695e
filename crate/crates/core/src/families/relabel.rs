use super::composite::{compose, CompositeGraph};
use super::lattice::LatticeShape;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};
use crate::resolving::{check_crs, CrsCertificate};

/// Pulls `g` back onto `[k] ⊔ [m]^k` through a CRS certificate: `w_i ↦ i`
/// and `u ↦ Ψ_W(u)` otherwise.
///
/// The certificate is recomputed from `g` and must match. Every edge between
/// `W` and the rest is then checked against the implied cross edges, so a
/// successful result is isomorphic to `g` by construction.
pub fn canonical_relabel(g: &Graph, cert: &CrsCertificate) -> Result<CompositeGraph> {
    let (k, m) = (cert.k(), cert.m());
    if !(2..=3).contains(&m) {
        return Err(Error::InvalidCertificate(format!(
            "m(W) = {m}, expected 2 or 3"
        )));
    }
    let fresh = check_crs(g, cert.w())?
        .map_err(|f| Error::InvalidCertificate(format!("W is not a CRS: {f:?}")))?;
    if fresh != cert.normalized() {
        return Err(Error::InvalidCertificate(
            "table disagrees with the graph".into(),
        ));
    }
    let shape = LatticeShape::new(k, m)?;
    let w_idx: Vec<usize> = cert
        .w()
        .iter()
        .map(|v| g.index_of(v).expect("checked"))
        .collect();
    // position in g  ->  position in the composite
    let mut target = vec![0usize; g.order()];
    for (t, &i) in w_idx.iter().enumerate() {
        target[i] = t;
    }
    for (u, x) in cert.table() {
        target[g.index_of(u).expect("checked")] = k + shape.rank(x.components());
    }
    for (t, &wi) in w_idx.iter().enumerate() {
        for (u, x) in cert.table() {
            let ui = g.index_of(u).expect("checked");
            if g.has_edge_idx(wi, ui) != (x.get(t + 1) == 1) {
                return Err(Error::CrossEdgeMismatch {
                    index: t + 1,
                    vertex: u.clone(),
                });
            }
        }
    }
    let base_labels = (1..=k as u32).map(VertexLabel::Base);
    let base = Graph::new(
        base_labels,
        g.edges()
            .filter(|&(a, b)| target[a] < k && target[b] < k)
            .map(|(a, b)| {
                (
                    VertexLabel::Base(target[a] as u32 + 1),
                    VertexLabel::Base(target[b] as u32 + 1),
                )
            }),
    )?;
    let lattice = shape.edgeless_graph()?.on_same_vertices(
        g.edges()
            .filter(|&(a, b)| target[a] >= k && target[b] >= k)
            .map(|(a, b)| (target[a] - k, target[b] - k)),
    )?;
    compose(&base, &lattice, k, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_base, null_base, t_graph, u_graph};

    #[test]
    fn round_trip() {
        let c = compose(&complete_base(2).unwrap(), &u_graph(2).unwrap(), 2, 2).unwrap();
        let g = c.materialize();
        let cert = check_crs(&g, &[VertexLabel::Base(1), VertexLabel::Base(2)])
            .unwrap()
            .unwrap();
        assert_eq!(canonical_relabel(&g, &cert).unwrap(), c);
    }

    #[test]
    fn plain_graph_and_reordering() {
        let c = compose(&null_base(2).unwrap(), &t_graph(2).unwrap(), 2, 3).unwrap();
        let g = c.materialize().to_plain();
        let cert = check_crs(&g, &[VertexLabel::Plain(1), VertexLabel::Plain(0)])
            .unwrap()
            .unwrap();
        let back = canonical_relabel(&g, &cert).unwrap();
        assert_eq!(back.lattice().size(), 5);
        assert_eq!(back.materialize().to_plain().size(), g.size());
    }

    #[test]
    fn rejects_forged_certificates() {
        let c = compose(&complete_base(2).unwrap(), &u_graph(2).unwrap(), 2, 2).unwrap();
        let g = c.materialize();
        let cert = check_crs(&g, &[VertexLabel::Base(1), VertexLabel::Base(2)])
            .unwrap()
            .unwrap();
        let mut json = serde_json::to_value(&cert).unwrap();
        json["m"] = 3.into();
        let forged: CrsCertificate = serde_json::from_value(json).unwrap();
        assert!(matches!(
            canonical_relabel(&g, &forged),
            Err(Error::InvalidCertificate(_))
        ));
    }
}
