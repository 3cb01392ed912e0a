//! graph6, JSON and DOT serialization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{Edge, Graph, GraphError, Role, Vertex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6 byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes the graph in graph6, with vertices taken in identifier order.
pub fn to_graph6(g: &Graph) -> String {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut out = String::new();
    push_size(&mut out, n as u64);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let adj: BTreeSet<(usize, usize)> = g.edges().map(|e| (index[&e.u()], index[&e.v()])).collect();
    for j in 1..n {
        for i in 0..j {
            bits.push(adj.contains(&(i, j)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = (x << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((x + 63) as char);
    }
    out
}

fn push_size(out: &mut String, n: u64) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Decodes one graph6 line (optional `>>graph6<<` header, trailing newline
/// tolerated). Vertices come out as `0..n`.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let (offset, body) = match s.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, s),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let err = |pos: usize, msg: &str| FormatError::Graph6 { pos: pos + offset, msg: msg.to_string() };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside 63..=126"));
        }
    }
    let (n, start) = if bytes[0] < 126 {
        (u64::from(bytes[0] - 63), 1)
    } else if bytes.len() > 1 && bytes[1] < 126 {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated size"));
        }
        (bytes[1..4].iter().fold(0u64, |a, &b| (a << 6) | u64::from(b - 63)), 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated size"));
        }
        (bytes[2..8].iter().fold(0u64, |a, &b| (a << 6) | u64::from(b - 63)), 8)
    };
    let n = usize::try_from(n).map_err(|_| err(0, "size overflow"))?;
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed = needed_bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != needed {
        return Err(err(start + data.len().min(needed), &format!("expected {needed} data bytes, found {}", data.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert_edge(Edge::new(Vertex(i as u32), Vertex(j as u32)).expect("i < j"));
            }
            k += 1;
        }
    }
    if needed_bits % 6 != 0 {
        let last = data[needed - 1] - 63;
        let pad = 6 - needed_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + needed - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// JSON document form: `{"vertices": [...], "edges": [[u, v], ...], "labels": {"v": "role"}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, Role>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc { vertices: g.vertices().collect(), edges: g.edges().collect(), labels: g.labels().clone() }
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = GraphError;

    fn try_from(doc: GraphDoc) -> Result<Self, Self::Error> {
        let mut g = Graph::try_new(doc.vertices, doc.edges.into_iter().map(Edge::ends))?;
        for (v, r) in doc.labels {
            if !g.contains(v) {
                return Err(GraphError::MissingVertex(v));
            }
            g.set_label(v, r);
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = GraphDoc::deserialize(d)?;
        Graph::try_from(doc).map_err(serde::de::Error::custom)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(g).expect("graph serializes")
}

pub fn from_json(s: &str) -> Result<Graph, FormatError> {
    if s.trim().is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(serde_json::from_str(s)?)
}

/// Reads either format: JSON when the first non-blank character is `{`,
/// graph6 otherwise (first non-empty line).
pub fn parse_graph(s: &str) -> Result<Graph, FormatError> {
    let t = s.trim_start();
    if t.is_empty() {
        return Err(FormatError::Empty);
    }
    if t.starts_with('{') {
        from_json(t)
    } else {
        from_graph6(t.lines().next().unwrap_or_default().trim())
    }
}

fn role_color(r: Option<Role>) -> &'static str {
    match r {
        Some(Role::CentralHub) => "gold",
        Some(Role::SectionHub) => "orange",
        Some(Role::Rim) => "lightblue",
        Some(Role::Shadow) => "palegreen",
        Some(Role::Apex) => "tomato",
        Some(Role::Plain) | None => "white",
    }
}

/// DOT rendering; vertices are filled by role and `ghosts` (annihilated edges)
/// are drawn dashed.
pub fn to_dot(g: &Graph, ghosts: &BTreeSet<Edge>) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in g.vertices() {
        let role = g.label(v);
        let _ = writeln!(
            out,
            "  {v} [fillcolor={}, tooltip=\"{}\"];",
            role_color(role),
            role.map_or("plain", Role::as_str)
        );
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    for e in ghosts {
        if !g.has_edge(*e) {
            let _ = writeln!(out, "  {} -- {} [style=dashed, color=gray];", e.u(), e.v());
        }
    }
    out.push_str("}\n");
    out
}
