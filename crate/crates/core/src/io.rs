//! Graph file formats: JSON edge lists, composite JSON, graph6 and DOT.
//!
//! A labeled graph is written as
//! `{"vertices": [...], "edges": [[u, v], ...]}` using the JSON vertex forms
//! of [`VertexLabel`]. A composite `H1∘H2` is written compactly as
//! `{"k": .., "m": .., "base_edges": [[i, j], ...], "lattice_edges": [[x, y], ...]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{CompositeGraph, LatticeShape};
use crate::graph::graph6::{from_graph6, to_graph6};
use crate::graph::{Graph, LatticeVector, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    G6,
    #[default]
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Ok(Format::G6),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexLabel>,
    edges: Vec<(VertexLabel, VertexLabel)>,
}

#[derive(Serialize, Deserialize)]
struct CompositeJson {
    k: usize,
    m: u32,
    base_edges: Vec<(u32, u32)>,
    lattice_edges: Vec<(LatticeVector, LatticeVector)>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        vertices: g.vertices().to_vec(),
        edges: g
            .edge_labels()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(parse_err)?;
    Graph::new(doc.vertices, doc.edges)
}

pub fn composite_to_json(c: &CompositeGraph) -> String {
    let base_edges = c
        .base()
        .edge_labels()
        .map(|(a, b)| (a.as_base().expect("base"), b.as_base().expect("base")))
        .collect();
    let lattice_edges = c
        .lattice()
        .edge_labels()
        .map(|(a, b)| {
            (
                a.as_lattice().expect("lattice").clone(),
                b.as_lattice().expect("lattice").clone(),
            )
        })
        .collect();
    let doc = CompositeJson {
        k: c.k(),
        m: c.m(),
        base_edges,
        lattice_edges,
    };
    serde_json::to_string(&doc).expect("composite serializes")
}

pub fn composite_from_json(text: &str) -> Result<CompositeGraph> {
    let doc: CompositeJson = serde_json::from_str(text).map_err(parse_err)?;
    composite_from_doc(doc)
}

fn composite_from_doc(doc: CompositeJson) -> Result<CompositeGraph> {
    let k = u32::try_from(doc.k).map_err(|_| Error::InvalidParameter(format!("k = {}", doc.k)))?;
    let base = Graph::new(
        (1..=k).map(VertexLabel::Base),
        doc.base_edges
            .into_iter()
            .map(|(i, j)| (VertexLabel::Base(i), VertexLabel::Base(j))),
    )?;
    let shape = LatticeShape::new(doc.k, doc.m)?;
    let lattice = Graph::new(
        shape.vectors().map(VertexLabel::Lattice),
        doc.lattice_edges
            .into_iter()
            .map(|(x, y)| (x.into(), y.into())),
    )?;
    crate::families::compose(&base, &lattice, doc.k, doc.m)
}

/// A parsed input file: either a composite in compact form or a graph.
#[derive(Clone, Debug)]
pub enum Input {
    Graph(Graph),
    Composite(CompositeGraph),
}

impl Input {
    pub fn graph(&self) -> Graph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Composite(c) => c.materialize(),
        }
    }
}

/// Reads JSON (either form) when the text starts with `{`, else graph6.
pub fn read_input(text: &str) -> Result<Input> {
    let t = text.trim();
    if t.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(t).map_err(parse_err)?;
        if value.get("base_edges").is_some() {
            let doc: CompositeJson = serde_json::from_value(value).map_err(parse_err)?;
            return composite_from_doc(doc).map(Input::Composite);
        }
        let doc: GraphJson = serde_json::from_value(value).map_err(parse_err)?;
        return Graph::new(doc.vertices, doc.edges).map(Input::Graph);
    }
    let line = t
        .lines()
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    from_graph6(line).map(Input::Graph)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    read_input(text).map(|i| i.graph())
}

fn quoted(v: &VertexLabel) -> String {
    format!("\"{v}\"")
}

/// Undirected DOT with vertices named by their display form.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quoted(v));
    }
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  {} -- {};", quoted(a), quoted(b));
    }
    out.push_str("}\n");
    out
}

/// graph6 of the graph renumbered onto `0..n` in canonical vertex order.
pub fn to_g6(g: &Graph) -> String {
    to_graph6(&g.to_plain()).expect("plain graphs encode")
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => graph_to_json(g),
        Format::G6 => to_g6(g),
        Format::Dot => to_dot(g),
    }
}

pub fn write_composite(c: &CompositeGraph, format: Format) -> String {
    match format {
        Format::Json => composite_to_json(c),
        other => write_graph(&c.materialize(), other),
    }
}

/// One JSON graph per line.
pub fn to_json_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    graphs.into_iter().fold(String::new(), |mut out, g| {
        out.push_str(&graph_to_json(g));
        out.push('\n');
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_base, compose, max_c, t_graph, u_graph};

    #[test]
    fn graph_json_round_trip() {
        let t = t_graph(2).unwrap();
        let text = graph_to_json(&t);
        assert!(text.starts_with("{\"vertices\":[[1,1],[1,2]"));
        assert_eq!(graph_from_json(&text).unwrap(), t);
        assert_eq!(read_graph(&text).unwrap(), t);
    }

    #[test]
    fn composite_json_round_trip() {
        let c = compose(&complete_base(2).unwrap(), &u_graph(2).unwrap(), 2, 2).unwrap();
        let text = composite_to_json(&c);
        assert_eq!(
            text,
            r#"{"k":2,"m":2,"base_edges":[[1,2]],"lattice_edges":[[[1,1],[2,2]]]}"#
        );
        let back = composite_from_json(&text).unwrap();
        assert_eq!(back.materialize(), c.materialize());
        let big = max_c(2).unwrap();
        assert_eq!(
            read_graph(&composite_to_json(&big)).unwrap(),
            big.materialize()
        );
    }

    #[test]
    fn g6_and_dot() {
        let c = compose(&complete_base(2).unwrap(), &u_graph(2).unwrap(), 2, 2).unwrap();
        let g = c.materialize();
        let g6 = write_composite(&c, Format::G6);
        assert_eq!(read_graph(&g6).unwrap(), g.to_plain());
        let dot = to_dot(&g);
        assert!(dot.contains("\"b1\" -- \"b2\";"));
        assert!(dot.contains("\"(1,1)\" -- \"(2,2)\";"));
    }

    #[test]
    fn bad_input() {
        assert!(matches!(
            read_graph("{\"vertices\": 3}"),
            Err(Error::Parse(_))
        ));
        assert!(read_graph("").is_err());
        assert!(matches!("svg".parse::<Format>(), Err(Error::Parse(_))));
    }
}
