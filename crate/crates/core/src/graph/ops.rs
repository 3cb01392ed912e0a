use std::collections::{BTreeMap, BTreeSet};

use super::{Edge, Graph, GraphError, Vertex};

/// Contracts `e`. The smaller endpoint survives; parallel edges collapse.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<Graph, GraphError> {
    if !g.has_edge(e) {
        return Err(GraphError::MissingEdge(e));
    }
    let (keep, gone) = e.ends();
    let mut out = g.clone();
    let moved: Vec<Vertex> = g.neighbors(gone).filter(|&x| x != keep).collect();
    out.remove_vertex(gone);
    for x in moved {
        out.insert_edge(Edge::new(keep, x).expect("x differs from keep"));
    }
    Ok(out)
}

/// Result of contracting a sequence of edges given in the original identifiers.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Surviving vertex for every vertex of the input graph.
    pub representative: BTreeMap<Vertex, Vertex>,
}

/// Contracts each edge in turn, translating endpoints through earlier merges.
/// An edge whose ends have already been merged is reported as missing.
pub fn contract_edges(g: &Graph, edges: &[Edge]) -> Result<Contraction, GraphError> {
    let mut rep: BTreeMap<Vertex, Vertex> = g.vertices().map(|v| (v, v)).collect();
    let mut cur = g.clone();
    for &e in edges {
        let (a, b) = match (rep.get(&e.u()), rep.get(&e.v())) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(GraphError::MissingEdge(e)),
        };
        let mapped = Edge::new(a, b).ok_or(GraphError::MissingEdge(e))?;
        if !cur.has_edge(mapped) {
            return Err(GraphError::MissingEdge(e));
        }
        cur = contract_edge(&cur, mapped)?;
        let (keep, gone) = mapped.ends();
        for r in rep.values_mut() {
            if *r == gone {
                *r = keep;
            }
        }
    }
    Ok(Contraction { graph: cur, representative: rep })
}

pub fn delete_edge(g: &Graph, e: Edge) -> Result<Graph, GraphError> {
    let mut out = g.clone();
    if out.remove_edge(e) {
        Ok(out)
    } else {
        Err(GraphError::MissingEdge(e))
    }
}

pub fn delete_vertex(g: &Graph, v: Vertex) -> Result<Graph, GraphError> {
    let mut out = g.clone();
    if out.remove_vertex(v) {
        Ok(out)
    } else {
        Err(GraphError::MissingVertex(v))
    }
}

/// Splits `w` into two non-adjacent vertices. Edges to neighbors in `first`
/// stay on `w`; the remaining edges move to a fresh vertex, which is returned
/// alongside the graph. Both sides must be non-empty.
pub fn split_vertex(g: &Graph, w: Vertex, first: &BTreeSet<Vertex>) -> Result<(Graph, Vertex), GraphError> {
    if !g.contains(w) {
        return Err(GraphError::MissingVertex(w));
    }
    let nbrs: BTreeSet<Vertex> = g.neighbors(w).collect();
    if let Some(&x) = first.iter().find(|x| !nbrs.contains(x)) {
        return Err(GraphError::BadSplit { vertex: w, detail: format!("{x} is not a neighbor") });
    }
    if first.is_empty() || first.len() == nbrs.len() {
        return Err(GraphError::DegenerateSplit(w));
    }
    let fresh = Vertex(g.next_vertex_id());
    let mut out = g.clone();
    out.insert_vertex(fresh);
    if let Some(r) = g.label(w) {
        out.set_label(fresh, r);
    }
    for &x in nbrs.difference(first) {
        out.remove_edge(Edge::new(w, x).expect("neighbor differs"));
        out.insert_edge(Edge::new(fresh, x).expect("fresh differs"));
    }
    Ok((out, fresh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn contract_triangle_edge_leaves_single_edge() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = contract_edge(&tri, edge(0, 1)).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 1));
    }

    #[test]
    fn contract_missing_edge_is_rejected() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(contract_edge(&p, edge(0, 2)), Err(GraphError::MissingEdge(edge(0, 2))));
    }

    #[test]
    fn contract_sequence_tracks_merges() {
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = contract_edges(&p, &[edge(1, 2), edge(2, 3)]).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.representative[&Vertex(3)], Vertex(1));
        assert!(contract_edges(&p, &[edge(0, 1), edge(0, 1)]).is_err());
    }

    #[test]
    fn delete_from_k4() {
        let g = delete_edge(&k4(), edge(0, 1)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
        assert!(delete_edge(&g, edge(0, 1)).is_err());
        let single = Graph::empty(1);
        assert!(delete_vertex(&single, Vertex(0)).unwrap().is_empty());
        assert!(delete_vertex(&single, Vertex(4)).is_err());
    }

    #[test]
    fn split_k4_vertex() {
        let (g, fresh) = split_vertex(&k4(), Vertex(0), &[Vertex(1)].into()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert!(!g.adjacent(Vertex(0), fresh));
        assert_eq!(g.degree(fresh), 2);
    }

    #[test]
    fn split_path_vertex_gives_two_edges() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (g, _) = split_vertex(&p, Vertex(1), &[Vertex(0)].into()).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(g.vertices().all(|v| g.degree(v) == 1));
    }

    #[test]
    fn degenerate_splits_are_rejected() {
        let all: BTreeSet<Vertex> = [1, 2, 3].map(Vertex).into();
        assert_eq!(split_vertex(&k4(), Vertex(0), &all), Err(GraphError::DegenerateSplit(Vertex(0))));
        assert_eq!(split_vertex(&k4(), Vertex(0), &BTreeSet::new()), Err(GraphError::DegenerateSplit(Vertex(0))));
        assert!(matches!(
            split_vertex(&k4(), Vertex(0), &[Vertex(0)].into()),
            Err(GraphError::BadSplit { .. })
        ));
    }
}
