//! Simple undirected graphs and the primitive operations the multiwheel
//! constructions are built from.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod canon;
pub(crate) mod dense;
pub mod io;
mod ops;
mod sum;

pub(crate) use canon::canonical_dense;
pub use canon::{automorphism_generators, canonical_form, canonical_form_colored, is_isomorphic, CanonicalForm};
pub use ops::{contract_edge, contract_edges, delete_edge, delete_vertex, split_vertex, Contraction};
pub use sum::{sum_mod_two, IdentificationMap, SumConfiguration, SumOutcome, SumReplay};

/// Opaque vertex identifier. Constructors hand these out densely from zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered vertex pair, stored with the smaller identifier first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", try_from = "[u32; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Builds the edge `{u, v}`. Returns `None` for a loop.
    pub fn new(u: Vertex, v: Vertex) -> Option<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn ends(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(self, x: Vertex) -> Option<Vertex> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<Edge> for [u32; 2] {
    fn from(e: Edge) -> Self {
        [e.0 .0, e.1 .0]
    }
}

impl TryFrom<[u32; 2]> for Edge {
    type Error = String;

    fn try_from(p: [u32; 2]) -> Result<Self, Self::Error> {
        Edge::new(Vertex(p[0]), Vertex(p[1])).ok_or_else(|| format!("loop at vertex {}", p[0]))
    }
}

/// Shorthand for building an edge from raw identifiers; panics on a loop.
pub fn edge(u: u32, v: u32) -> Edge {
    Edge::new(Vertex(u), Vertex(v)).expect("edge endpoints must differ")
}

/// Role tags attached by the constructors. They never affect equality or isomorphism.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    CentralHub,
    SectionHub,
    Rim,
    Shadow,
    Apex,
    Plain,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::CentralHub => "central-hub",
            Role::SectionHub => "section-hub",
            Role::Rim => "rim",
            Role::Shadow => "shadow",
            Role::Apex => "apex",
            Role::Plain => "plain",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("identification map is not injective: {0} has two preimages")]
    NonInjective(Vertex),
    #[error("identification map references vertex {0} outside its graph")]
    DanglingVertex(Vertex),
    #[error("degenerate split of vertex {0}: both sides must receive at least one edge")]
    DegenerateSplit(Vertex),
    #[error("split of vertex {vertex} does not partition its edges: {detail}")]
    BadSplit { vertex: Vertex, detail: String },
    #[error("configuration has {constituents} constituents but {identifications} identification maps")]
    MalformedConfiguration { constituents: usize, identifications: usize },
    #[error("configuration step {step}: {source}")]
    Configuration {
        step: usize,
        #[source]
        source: Box<GraphError>,
    },
}

/// Simple undirected graph: a vertex set plus a set of unordered pairs.
///
/// Values are immutable once built; every operation returns a new graph.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    labels: BTreeMap<Vertex, Role>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn empty(n: usize) -> Graph {
        let mut g = Graph::new();
        for v in 0..n as u32 {
            g.insert_vertex(Vertex(v));
        }
        g
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        Graph::try_new((0..n as u32).map(Vertex), edges.iter().map(|&(u, v)| (Vertex(u), Vertex(v))))
    }

    /// Validating constructor: rejects loops and endpoints outside the vertex set.
    /// Repeated edges collapse.
    pub fn try_new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for v in vertices {
            g.insert_vertex(v);
        }
        for (u, v) in edges {
            if !g.contains(u) {
                return Err(GraphError::MissingVertex(u));
            }
            if !g.contains(v) {
                return Err(GraphError::MissingVertex(v));
            }
            let e = Edge::new(u, v).ok_or(GraphError::Loop(u))?;
            g.insert_edge(e);
        }
        Ok(g)
    }

    pub(crate) fn insert_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn insert_edge(&mut self, e: Edge) {
        let (u, v) = e.ends();
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub(crate) fn remove_edge(&mut self, e: Edge) -> bool {
        let (u, v) = e.ends();
        let hit = self.adj.get_mut(&u).map_or(false, |s| s.remove(&v));
        if hit {
            self.adj.get_mut(&v).map(|s| s.remove(&u));
        }
        hit
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for u in nbrs {
                    self.adj.get_mut(&u).map(|s| s.remove(&v));
                }
                self.labels.remove(&v);
                true
            }
            None => false,
        }
    }

    pub(crate) fn set_label(&mut self, v: Vertex, role: Role) {
        if self.contains(v) {
            self.labels.insert(v, role);
        }
    }

    /// Copy of this graph with `v` tagged by `role`.
    pub fn with_label(&self, v: Vertex, role: Role) -> Graph {
        let mut g = self.clone();
        g.set_label(v, role);
        g
    }

    /// Copy of this graph with `e` added. Both endpoints must already exist.
    pub fn with_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        for x in [e.u(), e.v()] {
            if !self.contains(x) {
                return Err(GraphError::MissingVertex(x));
            }
        }
        let mut g = self.clone();
        g.insert_edge(e);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adj.get(&e.u()).map_or(false, |s| s.contains(&e.v()))
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        Edge::new(u, v).map_or(false, |e| self.has_edge(e))
    }

    /// Vertices in increasing identifier order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u..).map(move |&v| Edge(u, v)))
            .filter(|e| e.0 != e.1)
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    /// Neighbors of `v` in increasing order; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn label(&self, v: Vertex) -> Option<Role> {
        self.labels.get(&v).copied()
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, Role> {
        &self.labels
    }

    /// One past the largest identifier in use; fresh vertices start here.
    pub fn next_vertex_id(&self) -> u32 {
        self.adj.keys().next_back().map_or(0, |v| v.0 + 1)
    }

    /// Whether `2n - 2 = m`, the edge count shared by wheels, multiwheels and
    /// projective-plane quadrangulations.
    pub fn is_2n_minus_2(&self) -> bool {
        self.vertex_count() >= 1 && 2 * self.vertex_count() == self.edge_count() + 2
    }

    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `keep`; labels of kept vertices survive.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.contains(v) {
                g.insert_vertex(v);
                if let Some(r) = self.label(v) {
                    g.labels.insert(v, r);
                }
            }
        }
        for e in self.edges() {
            if keep.contains(&e.u()) && keep.contains(&e.v()) {
                g.insert_edge(e);
            }
        }
        g
    }

    /// Renumbers vertices to `0..n` in identifier order, keeping labels.
    /// Returns the new graph and the old identifiers by new index.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let order: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, u32> = order.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let mut g = Graph::empty(order.len());
        for e in self.edges() {
            g.insert_edge(Edge(Vertex(index[&e.u()]), Vertex(index[&e.v()])));
        }
        for (v, &r) in &self.labels {
            g.labels.insert(Vertex(index[v]), r);
        }
        (g, order)
    }

    /// Relabels vertices through `map`, which must be injective on this graph's vertices.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Graph, GraphError> {
        let image = |v: Vertex| map.get(&v).copied().ok_or(GraphError::DanglingVertex(v));
        let mut g = Graph::new();
        for v in self.vertices() {
            let w = image(v)?;
            if g.contains(w) {
                return Err(GraphError::NonInjective(w));
            }
            g.insert_vertex(w);
            if let Some(r) = self.label(v) {
                g.labels.insert(w, r);
            }
        }
        for e in self.edges() {
            let (u, v) = (image(e.u())?, image(e.v())?);
            g.insert_edge(Edge::new(u, v).ok_or(GraphError::Loop(u))?);
        }
        Ok(g)
    }

    /// Graph with the same edges and no role labels.
    pub fn unlabeled(&self) -> Graph {
        Graph { adj: self.adj.clone(), labels: BTreeMap::new() }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count(), self.edge_count())
    }
}
