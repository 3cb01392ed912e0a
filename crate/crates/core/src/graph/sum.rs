//! Edge sum modulo two under an explicit vertex identification.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, GraphError, Vertex};

/// Injective partial map from the addend's vertices to the base's vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Vertex, Vertex)>", into = "Vec<(Vertex, Vertex)>")]
pub struct IdentificationMap {
    pairs: BTreeMap<Vertex, Vertex>,
}

impl IdentificationMap {
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        let mut images = BTreeSet::new();
        for (from, to) in pairs {
            if !images.insert(to) {
                return Err(GraphError::NonInjective(to));
            }
            if map.insert(from, to).is_some() {
                return Err(GraphError::NonInjective(to));
            }
        }
        Ok(IdentificationMap { pairs: map })
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn check(&self, base: &Graph, addend: &Graph) -> Result<(), GraphError> {
        for (from, to) in self.iter() {
            if !addend.contains(from) {
                return Err(GraphError::DanglingVertex(from));
            }
            if !base.contains(to) {
                return Err(GraphError::DanglingVertex(to));
            }
        }
        Ok(())
    }
}

impl TryFrom<Vec<(Vertex, Vertex)>> for IdentificationMap {
    type Error = GraphError;

    fn try_from(v: Vec<(Vertex, Vertex)>) -> Result<Self, Self::Error> {
        IdentificationMap::new(v)
    }
}

impl From<IdentificationMap> for Vec<(Vertex, Vertex)> {
    fn from(m: IdentificationMap) -> Self {
        m.pairs.into_iter().collect()
    }
}

#[derive(Clone, Debug)]
pub struct SumOutcome {
    pub graph: Graph,
    /// Edges present in both summands, in result identifiers.
    pub annihilated: Vec<Edge>,
    /// Where each addend vertex landed in the result.
    pub vertex_map: BTreeMap<Vertex, Vertex>,
}

/// Sums `addend` into `base` modulo two. Unidentified addend vertices receive
/// fresh identifiers above the base's, in addend order; base labels win on
/// identified vertices.
pub fn sum_mod_two(base: &Graph, addend: &Graph, phi: &IdentificationMap) -> Result<SumOutcome, GraphError> {
    phi.check(base, addend)?;
    let mut next = base.next_vertex_id();
    let mut vertex_map = BTreeMap::new();
    let mut graph = base.clone();
    for v in addend.vertices() {
        let image = phi.get(v).unwrap_or_else(|| {
            let w = Vertex(next);
            next += 1;
            w
        });
        vertex_map.insert(v, image);
        if !graph.contains(image) {
            graph.insert_vertex(image);
            if let Some(r) = addend.label(v) {
                graph.set_label(image, r);
            }
        }
    }
    let mut annihilated = Vec::new();
    for e in addend.edges() {
        let mapped = Edge::new(vertex_map[&e.u()], vertex_map[&e.v()]).expect("injective map keeps ends apart");
        if !graph.remove_edge(mapped) {
            graph.insert_edge(mapped);
        } else {
            annihilated.push(mapped);
        }
    }
    debug_assert_eq!(graph.edge_count() + 2 * annihilated.len(), base.edge_count() + addend.edge_count());
    Ok(SumOutcome { graph, annihilated, vertex_map })
}

/// Constituent graphs plus the maps gluing constituent `i + 1` into the sum of
/// the first `i + 1`. Replaying it is deterministic.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SumConfiguration {
    pub constituents: Vec<Graph>,
    pub identifications: Vec<IdentificationMap>,
}

/// Outcome of replaying a [`SumConfiguration`].
#[derive(Clone, Debug)]
pub struct SumReplay {
    pub graph: Graph,
    /// Per constituent, where its vertices ended up.
    pub vertex_maps: Vec<BTreeMap<Vertex, Vertex>>,
    /// Per constituent, how many of its edges are missing from the result.
    pub losses: Vec<usize>,
    /// Constituent edges that do not survive, in result identifiers.
    pub ghosts: BTreeSet<Edge>,
}

impl SumConfiguration {
    pub fn new(first: Graph) -> Self {
        SumConfiguration { constituents: vec![first], identifications: Vec::new() }
    }

    pub fn push(&mut self, addend: Graph, phi: IdentificationMap) {
        self.constituents.push(addend);
        self.identifications.push(phi);
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    pub fn replay(&self) -> Result<SumReplay, GraphError> {
        let Some(first) = self.constituents.first() else {
            return Ok(SumReplay {
                graph: Graph::new(),
                vertex_maps: Vec::new(),
                losses: Vec::new(),
                ghosts: BTreeSet::new(),
            });
        };
        if self.identifications.len() + 1 != self.constituents.len() {
            return Err(GraphError::MalformedConfiguration {
                constituents: self.constituents.len(),
                identifications: self.identifications.len(),
            });
        }
        let mut graph = first.clone();
        let mut vertex_maps = vec![first.vertices().map(|v| (v, v)).collect::<BTreeMap<_, _>>()];
        for (i, (addend, phi)) in self.constituents[1..].iter().zip(&self.identifications).enumerate() {
            let out = sum_mod_two(&graph, addend, phi)
                .map_err(|e| GraphError::Configuration { step: i + 1, source: Box::new(e) })?;
            graph = out.graph;
            vertex_maps.push(out.vertex_map);
        }
        let mut losses = Vec::with_capacity(self.constituents.len());
        let mut ghosts = BTreeSet::new();
        for (c, map) in self.constituents.iter().zip(&vertex_maps) {
            let mut lost = 0;
            for e in c.edges() {
                let m = Edge::new(map[&e.u()], map[&e.v()]).expect("injective");
                if !graph.has_edge(m) {
                    lost += 1;
                    ghosts.insert(m);
                }
            }
            losses.push(lost);
        }
        Ok(SumReplay { graph, vertex_maps, losses, ghosts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    #[test]
    fn self_sum_annihilates_everything() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let id = IdentificationMap::new(g.vertices().map(|v| (v, v))).unwrap();
        let out = sum_mod_two(&g, &g, &id).unwrap();
        assert_eq!(out.graph.vertex_count(), 4);
        assert_eq!(out.graph.edge_count(), 0);
        assert_eq!(out.annihilated.len(), 5);
    }

    #[test]
    fn disjoint_sum_keeps_both() {
        let a = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let out = sum_mod_two(&a, &a, &IdentificationMap::default()).unwrap();
        assert_eq!((out.graph.vertex_count(), out.graph.edge_count()), (4, 2));
        assert_eq!(out.vertex_map[&Vertex(1)], Vertex(3));
    }

    #[test]
    fn shared_edge_cancels() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let phi = IdentificationMap::new([(Vertex(0), Vertex(0)), (Vertex(1), Vertex(1))]).unwrap();
        let out = sum_mod_two(&tri, &tri, &phi).unwrap();
        assert_eq!(out.annihilated, vec![edge(0, 1)]);
        assert_eq!((out.graph.vertex_count(), out.graph.edge_count()), (4, 4));
    }

    #[test]
    fn bad_maps_are_rejected() {
        assert_eq!(
            IdentificationMap::new([(Vertex(0), Vertex(5)), (Vertex(1), Vertex(5))]),
            Err(GraphError::NonInjective(Vertex(5)))
        );
        let a = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let phi = IdentificationMap::new([(Vertex(0), Vertex(9))]).unwrap();
        assert_eq!(sum_mod_two(&a, &a, &phi).unwrap_err(), GraphError::DanglingVertex(Vertex(9)));
        let phi = IdentificationMap::new([(Vertex(7), Vertex(0))]).unwrap();
        assert_eq!(sum_mod_two(&a, &a, &phi).unwrap_err(), GraphError::DanglingVertex(Vertex(7)));
    }
}
