//! Surface embeddings as face lists: validation, planarity, projective-plane
//! quadrangulation certificates and planar duals.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

mod planarity;

pub use planarity::{is_planar, Kuratowski, KuratowskiKind, Planarity};

/// A cellular embedding given by its face boundary walks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub graph: Graph,
    pub faces: Vec<Vec<Vertex>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("face {face} is too short to bound a cell")]
    ShortFace { face: usize },
    #[error("face {face} steps {a} -> {b}, which is not an edge")]
    NotAnEdge { face: usize, a: Vertex, b: Vertex },
    #[error("edge {edge} is traversed {count} times; every edge must be traversed exactly twice")]
    EdgeMultiplicity { edge: Edge, count: usize },
    #[error("the faces around vertex {vertex} do not close up into a single disc")]
    VertexLink { vertex: Vertex },
    #[error("embedded graph must be connected")]
    Disconnected,
    #[error("an edgeless embedding must consist of exactly one vertex")]
    Edgeless,
    #[error("Euler characteristic {0} exceeds 2")]
    EulerTooLarge(i64),
    #[error("expected a spherical embedding, Euler characteristic is {0}")]
    NotSpherical(i64),
}

/// What [`validate_embedding`] measured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSummary {
    pub euler_characteristic: i64,
    /// Face length -> number of faces.
    pub face_lengths: BTreeMap<usize, usize>,
    pub orientable: bool,
}

/// Checks that the faces describe a closed surface: consecutive face entries
/// are edges, every edge is traversed exactly twice, and the corners at each
/// vertex form one cycle. Returns the Euler characteristic and the face
/// length histogram.
pub fn validate_embedding(e: &Embedding) -> Result<EmbeddingSummary, EmbeddingError> {
    let g = &e.graph;
    if g.edge_count() == 0 {
        if g.vertex_count() != 1 || e.faces.iter().any(|f| !f.is_empty()) {
            return Err(EmbeddingError::Edgeless);
        }
        return Ok(EmbeddingSummary { euler_characteristic: 2, face_lengths: [(0, 1)].into(), orientable: true });
    }
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let mut uses: BTreeMap<Edge, Vec<(usize, bool)>> = BTreeMap::new();
    // corners[v] links the two edge-ends meeting at v inside a face
    let mut corners: BTreeMap<Vertex, Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for (fi, f) in e.faces.iter().enumerate() {
        if f.len() < 2 {
            return Err(EmbeddingError::ShortFace { face: fi });
        }
        let l = f.len();
        for i in 0..l {
            let (a, b, c) = (f[i], f[(i + 1) % l], f[(i + 2) % l]);
            let edge = Edge::new(a, b).filter(|&ed| g.has_edge(ed));
            let Some(edge) = edge else {
                return Err(EmbeddingError::NotAnEdge { face: fi, a, b });
            };
            uses.entry(edge).or_default().push((fi, a < b));
            corners.entry(b).or_default().push((a, c));
        }
    }
    for edge in g.edges() {
        let count = uses.get(&edge).map_or(0, Vec::len);
        if count != 2 {
            return Err(EmbeddingError::EdgeMultiplicity { edge, count });
        }
    }
    for v in g.vertices() {
        let cs = corners.get(&v).map(Vec::as_slice).unwrap_or_default();
        if !single_cycle(g.neighbors(v).collect(), cs) {
            return Err(EmbeddingError::VertexLink { vertex: v });
        }
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + e.faces.len() as i64;
    if chi > 2 {
        return Err(EmbeddingError::EulerTooLarge(chi));
    }
    let mut face_lengths = BTreeMap::new();
    for f in &e.faces {
        *face_lengths.entry(f.len()).or_insert(0) += 1;
    }
    Ok(EmbeddingSummary { euler_characteristic: chi, face_lengths, orientable: orientable(e.faces.len(), &uses) })
}

/// Whether the corner pairs at a vertex join all of its edge-ends into one cycle.
fn single_cycle(nbrs: Vec<Vertex>, corners: &[(Vertex, Vertex)]) -> bool {
    if nbrs.is_empty() {
        return corners.is_empty();
    }
    let mut parent: BTreeMap<Vertex, Vertex> = nbrs.iter().map(|&x| (x, x)).collect();
    fn root(p: &BTreeMap<Vertex, Vertex>, mut x: Vertex) -> Vertex {
        while p[&x] != x {
            x = p[&x];
        }
        x
    }
    for &(a, c) in corners {
        if !parent.contains_key(&a) || !parent.contains_key(&c) {
            return false;
        }
        let (ra, rc) = (root(&parent, a), root(&parent, c));
        if ra != rc {
            parent.insert(ra.max(rc), ra.min(rc));
        }
    }
    let r0 = root(&parent, nbrs[0]);
    nbrs.iter().all(|&x| root(&parent, x) == r0)
}

/// Two-colors faces so that every edge is traversed once in each direction.
fn orientable(faces: usize, uses: &BTreeMap<Edge, Vec<(usize, bool)>>) -> bool {
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces];
    for occ in uses.values() {
        let [(f, d1), (g, d2)] = [occ[0], occ[1]];
        // same traversal direction means the two faces need opposite orientations
        let flip = d1 == d2;
        if f == g && flip {
            return false;
        }
        adj[f].push((g, flip));
        adj[g].push((f, flip));
    }
    let mut sign: Vec<Option<bool>> = vec![None; faces];
    for s in 0..faces {
        if sign[s].is_some() {
            continue;
        }
        sign[s] = Some(false);
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            let sf = sign[f].expect("assigned");
            for &(g, flip) in &adj[f] {
                let want = sf ^ flip;
                match sign[g] {
                    None => {
                        sign[g] = Some(want);
                        stack.push(g);
                    }
                    Some(x) if x != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// True iff the embedding is valid, has Euler characteristic 1 and every face
/// is a quadrilateral.
pub fn certify_projective_quadrangulation(e: &Embedding) -> Result<bool, EmbeddingError> {
    let s = validate_embedding(e)?;
    let ok = s.euler_characteristic == 1 && s.face_lengths.keys().all(|&l| l == 4);
    if ok {
        // 4F = 2m and n - m + F = 1
        assert!(e.graph.is_2n_minus_2(), "quadrangulated projective plane must have m = 2n - 2");
    }
    Ok(ok)
}

/// Number of 4-cycles through each edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadrilateralCondition {
    pub counts: BTreeMap<Edge, usize>,
    /// Every edge lies on at least two 4-cycles.
    pub holds: bool,
    pub failing: Vec<Edge>,
}

pub fn edge_quadrilateral_condition(g: &Graph) -> QuadrilateralCondition {
    let mut counts = BTreeMap::new();
    for e in g.edges() {
        let (u, v) = e.ends();
        let nv: BTreeSet<Vertex> = g.neighbors(v).filter(|&y| y != u).collect();
        let c: usize = g
            .neighbors(u)
            .filter(|&x| x != v)
            .map(|x| g.neighbors(x).filter(|y| nv.contains(y)).count())
            .sum();
        counts.insert(e, c);
    }
    let failing: Vec<Edge> = counts.iter().filter(|(_, &c)| c < 2).map(|(&e, _)| e).collect();
    QuadrilateralCondition { holds: failing.is_empty(), counts, failing }
}

/// Dual of a spherical embedding, simplified to a simple graph.
#[derive(Clone, Debug)]
pub struct PlanarDual {
    /// Dual vertex `i` is face `i` of the embedding.
    pub graph: Graph,
    /// Parallel dual edges were merged.
    pub collapsed_parallel: bool,
    /// Dual loops (from bridges) were dropped.
    pub dropped_loops: bool,
}

pub fn planar_dual(e: &Embedding) -> Result<PlanarDual, EmbeddingError> {
    let s = validate_embedding(e)?;
    if s.euler_characteristic != 2 {
        return Err(EmbeddingError::NotSpherical(s.euler_characteristic));
    }
    let mut sides: BTreeMap<Edge, Vec<u32>> = BTreeMap::new();
    for (fi, f) in e.faces.iter().enumerate() {
        for i in 0..f.len() {
            let edge = Edge::new(f[i], f[(i + 1) % f.len()]).expect("validated");
            sides.entry(edge).or_default().push(fi as u32);
        }
    }
    let mut dual = Graph::empty(e.faces.len());
    let (mut collapsed_parallel, mut dropped_loops) = (false, false);
    for faces in sides.values() {
        match Edge::new(Vertex(faces[0]), Vertex(faces[1])) {
            None => dropped_loops = true,
            Some(d) => {
                collapsed_parallel |= dual.has_edge(d);
                dual.insert_edge(d);
            }
        }
    }
    Ok(PlanarDual { graph: dual, collapsed_parallel, dropped_loops })
}
