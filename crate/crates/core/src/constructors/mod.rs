//! Builders for every named graph and family: wheels, octahedra, the base
//! graph, plane and projective multiwheels, the Grötzsch class and the
//! negative examples.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Role, SumConfiguration, Vertex};
use crate::topology::Embedding;

mod families;
mod spec;

pub use families::{
    base_graph, disjoint_wheels, grotzsch_class, mycielski, nonplanar_counterexample, plane_multiwheel,
    projective_multiwheel, unclosed_sequence, BaseGraph, GrotzschClass,
};
pub use spec::{parse_spec, FamilySpec, SpecError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("{spec}: certificate failed: {detail}")]
    Certificate { spec: String, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionType {
    Rr,
    Ss,
    Sr,
    Rs,
}

impl SectionType {
    pub const ALL: [SectionType; 4] = [SectionType::Rr, SectionType::Ss, SectionType::Sr, SectionType::Rs];

    pub fn as_str(self) -> &'static str {
        match self {
            SectionType::Rr => "rr",
            SectionType::Ss => "ss",
            SectionType::Sr => "sr",
            SectionType::Rs => "rs",
        }
    }
}

impl fmt::Display for SectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SectionType {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SectionType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| ConstructError::InvalidSpec(format!("unknown section type {s:?}")))
    }
}

/// Sections `(q_i, type)` of a plane multiwheel; section `i` comes from the
/// odd wheel of order `2 q_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiwheelSpec {
    sections: Vec<(u32, SectionType)>,
}

impl MultiwheelSpec {
    pub fn new(sections: Vec<(u32, SectionType)>) -> Result<Self, ConstructError> {
        let k = sections.len();
        if k < 3 || k % 2 == 0 {
            return Err(ConstructError::InvalidSpec(format!("section count must be odd and at least 3, got {k}")));
        }
        if let Some(i) = sections.iter().position(|&(q, _)| q == 0) {
            return Err(ConstructError::InvalidSpec(format!("section {i} has order 0")));
        }
        Ok(MultiwheelSpec { sections })
    }

    /// `k` simple sections of type rr with the given order.
    pub fn uniform(k: usize, q: u32) -> Result<Self, ConstructError> {
        MultiwheelSpec::new(vec![(q, SectionType::Rr); k])
    }

    pub fn sections(&self) -> &[(u32, SectionType)] {
        &self.sections
    }

    pub fn k(&self) -> usize {
        self.sections.len()
    }

    /// Q, the sum of section orders.
    pub fn q_total(&self) -> u32 {
        self.sections.iter().map(|s| s.0).sum()
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.q_total() as usize + 1
    }
}

impl fmt::Display for MultiwheelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("w:")?;
        for (i, (q, t)) in self.sections.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{q}{t}")?;
        }
        Ok(())
    }
}

/// Central wheel of order `2 central_q + 1` plus one satellite per rim vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProjectiveSpec {
    central_q: u32,
    satellites: Vec<u32>,
}

impl ProjectiveSpec {
    pub fn new(central_q: u32, satellites: Vec<u32>) -> Result<Self, ConstructError> {
        if central_q == 0 {
            return Err(ConstructError::InvalidSpec("central order must be positive".into()));
        }
        let k = 2 * central_q as usize + 1;
        if satellites.len() != k {
            return Err(ConstructError::InvalidSpec(format!(
                "central wheel of order {k} needs {k} satellites, got {}",
                satellites.len()
            )));
        }
        if let Some(i) = satellites.iter().position(|&q| q == 0) {
            return Err(ConstructError::InvalidSpec(format!("satellite {i} has order 0")));
        }
        Ok(ProjectiveSpec { central_q, satellites })
    }

    pub fn central_q(&self) -> u32 {
        self.central_q
    }

    pub fn satellites(&self) -> &[u32] {
        &self.satellites
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.satellites.iter().sum::<u32>() as usize + 1
    }
}

impl fmt::Display for ProjectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p:c={};s=", self.central_q)?;
        for (i, q) in self.satellites.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// A constructed graph with whatever certificates its builder produced.
#[derive(Clone, Debug)]
pub struct Built {
    pub graph: Graph,
    pub configuration: Option<SumConfiguration>,
    /// Constituent edges annihilated by the sum.
    pub ghosts: BTreeSet<Edge>,
    pub embedding: Option<Embedding>,
}

impl Built {
    pub fn plain(graph: Graph) -> Built {
        Built { graph, configuration: None, ghosts: BTreeSet::new(), embedding: None }
    }
}

/// Wheel with hub 0 and rim `1..=k` in cyclic order.
pub fn wheel(k: usize) -> Result<Graph, ConstructError> {
    if k < 3 {
        return Err(ConstructError::InvalidSpec(format!("wheel needs at least 3 rim vertices, got {k}")));
    }
    let mut g = Graph::empty(k + 1);
    for i in 1..=k {
        let j = i % k + 1;
        g.insert_edge(Edge::new(Vertex(0), Vertex(i as u32)).expect("distinct"));
        g.insert_edge(Edge::new(Vertex(i as u32), Vertex(j as u32)).expect("distinct"));
        g.set_label(Vertex(i as u32), Role::Rim);
    }
    g.set_label(Vertex(0), Role::SectionHub);
    Ok(g)
}

/// Cycle on `0..k`.
pub fn cycle(k: usize) -> Result<Graph, ConstructError> {
    if k < 3 {
        return Err(ConstructError::InvalidSpec(format!("cycle needs at least 3 vertices, got {k}")));
    }
    let e: Vec<(u32, u32)> = (0..k as u32).map(|i| (i, (i + 1) % k as u32)).collect();
    Ok(Graph::from_edges(k, &e)?)
}

pub fn path(n: usize) -> Graph {
    let e: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &e).expect("path edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            g.insert_edge(Edge::new(Vertex(i), Vertex(j)).expect("distinct"));
        }
    }
    g
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for i in 0..a as u32 {
        for j in a as u32..(a + b) as u32 {
            g.insert_edge(Edge::new(Vertex(i), Vertex(j)).expect("distinct"));
        }
    }
    g
}

/// The 3-cube on bit strings `0..8`.
pub fn cube() -> Graph {
    let mut g = Graph::empty(8);
    for i in 0..8u32 {
        for b in [1, 2, 4] {
            if i & b == 0 {
                g.insert_edge(Edge::new(Vertex(i), Vertex(i | b)).expect("distinct"));
            }
        }
    }
    g
}

/// K_{2,2,2}: antipodal pairs are (0,1), (2,3), (4,5).
pub fn octahedron() -> Graph {
    let mut g = complete(6);
    for i in [0, 2, 4] {
        g.remove_edge(Edge::new(Vertex(i), Vertex(i + 1)).expect("distinct"));
    }
    g
}

/// Edge of the octahedron removed by [`octahedron_minus`].
pub const OCTAHEDRON_MISSING_EDGE: (u32, u32) = (0, 2);

pub fn octahedron_minus() -> Graph {
    let mut g = octahedron();
    let (a, b) = OCTAHEDRON_MISSING_EDGE;
    g.remove_edge(Edge::new(Vertex(a), Vertex(b)).expect("distinct"));
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_counts() {
        assert!(wheel(2).is_err());
        for q in 1..6 {
            let w = wheel(2 * q + 1).unwrap();
            assert_eq!((w.vertex_count(), w.edge_count()), (2 * q + 2, 4 * q + 2));
        }
        assert_eq!(wheel(3).unwrap(), complete(4));
    }

    #[test]
    fn octahedra() {
        let o = octahedron();
        assert_eq!((o.vertex_count(), o.edge_count()), (6, 12));
        assert!(o.vertices().all(|v| o.degree(v) == 4));
        let m = octahedron_minus();
        assert_eq!((m.vertex_count(), m.edge_count()), (6, 11));
    }

    #[test]
    fn spec_validation() {
        assert!(MultiwheelSpec::uniform(2, 1).is_err());
        assert!(MultiwheelSpec::uniform(4, 1).is_err());
        assert!(MultiwheelSpec::new(vec![(1, SectionType::Rr), (0, SectionType::Rr), (1, SectionType::Ss)]).is_err());
        let s = MultiwheelSpec::new(vec![(1, SectionType::Rr), (3, SectionType::Ss), (3, SectionType::Sr)]).unwrap();
        assert_eq!(s.to_string(), "w:1rr-3ss-3sr");
        assert_eq!(s.vertex_count(), 15);
        assert!(ProjectiveSpec::new(1, vec![1, 1]).is_err());
        assert_eq!(ProjectiveSpec::new(1, vec![1, 1, 2]).unwrap().to_string(), "p:c=1;s=1,1,2");
    }

    #[test]
    fn cube_is_3_regular() {
        let c = cube();
        assert_eq!(c.edge_count(), 12);
        assert!(c.vertices().all(|v| c.degree(v) == 3));
    }
}
