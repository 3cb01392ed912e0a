//! Exact coloring: chromatic number, k-coloring, criticality certificates and
//! lonely color classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::dense::{bit, ones, Dense, Mask};
use crate::graph::{contract_edge, delete_edge, delete_vertex, Edge, Graph, Vertex};

mod lonely;

pub use lonely::{lonely_color_classes, lonely_witness, LonelyPattern};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("lonely color classes need a 4-chromatic graph, this one has chromatic number {0}")]
    NotFourChromatic(usize),
}

/// Vertex to color index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub BTreeMap<Vertex, u32>);

impl Coloring {
    pub fn get(&self, v: Vertex) -> Option<u32> {
        self.0.get(&v).copied()
    }

    pub fn color_count(&self) -> usize {
        let mut seen: Vec<u32> = self.0.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Total on `g`, no monochromatic edge, and all colors below `k`.
    pub fn is_proper(&self, g: &Graph, k: usize) -> bool {
        g.vertices().all(|v| self.get(v).is_some_and(|c| (c as usize) < k))
            && g.edges().all(|e| self.get(e.u()) != self.get(e.v()))
    }

    /// Color classes in color order.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut by: BTreeMap<u32, Vec<Vertex>> = BTreeMap::new();
        for (&v, &c) in &self.0 {
            by.entry(c).or_default().push(v);
        }
        by.into_values().collect()
    }
}

/// A proper `k`-coloring, if one exists. Saturation-ordered backtracking;
/// ties go to higher degree, then lower vertex identifier, so the result is
/// deterministic.
pub fn k_color(g: &Graph, k: usize) -> Option<Coloring> {
    let d = Dense::of(g);
    if d.n() == 0 {
        return Some(Coloring::default());
    }
    if k == 0 {
        return None;
    }
    let mut s = Dsatur { adj: &d.adj, k, color: vec![None; d.n()], classes: Vec::new() };
    s.solve().then(|| Coloring(d.ids.iter().zip(&s.color).map(|(&v, c)| (v, c.expect("complete") as u32)).collect()))
}

struct Dsatur<'a> {
    adj: &'a [Mask],
    k: usize,
    color: Vec<Option<usize>>,
    classes: Vec<Mask>,
}

impl Dsatur<'_> {
    fn solve(&mut self) -> bool {
        let mut best: Option<(usize, u32, usize)> = None;
        let uncolored: Mask = self.color.iter().enumerate().filter(|(_, c)| c.is_none()).fold(0, |m, (i, _)| m | bit(i));
        if uncolored == 0 {
            return true;
        }
        for v in ones(uncolored) {
            let sat = self.classes.iter().filter(|&&c| c & self.adj[v] != 0).count();
            if sat >= self.k {
                return false;
            }
            let deg = (self.adj[v] & uncolored).count_ones();
            if best.is_none_or(|(s, dg, _)| (sat, deg) > (s, dg)) {
                best = Some((sat, deg, v));
            }
        }
        let (_, _, v) = best.expect("an uncolored vertex");
        let used = self.classes.len();
        for c in 0..used {
            if self.classes[c] & self.adj[v] == 0 {
                self.classes[c] |= bit(v);
                self.color[v] = Some(c);
                if self.solve() {
                    return true;
                }
                self.classes[c] &= !bit(v);
            }
        }
        // opening a new color is symmetric across all unused colors
        if used < self.k {
            self.classes.push(bit(v));
            self.color[v] = Some(used);
            if self.solve() {
                return true;
            }
            self.classes.pop();
        }
        self.color[v] = None;
        false
    }
}

/// Size of a maximum clique.
fn clique_number(adj: &[Mask]) -> usize {
    fn grow(adj: &[Mask], size: usize, cand: Mask, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= !bit(v);
            grow(adj, size + 1, rest & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, adj.iter().enumerate().fold(0, |m, (i, _)| m | bit(i)), &mut best);
    best
}

/// Exact chromatic number; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).0
}

/// Chromatic number with a coloring achieving it.
pub fn optimal_coloring(g: &Graph) -> (usize, Coloring) {
    if g.is_empty() {
        return (0, Coloring::default());
    }
    let d = Dense::of(g);
    let mut k = clique_number(&d.adj).max(1);
    loop {
        if let Some(c) = k_color(g, k) {
            return (k, c);
        }
        k += 1;
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub edge: Edge,
    /// Chromatic number of the graph without this edge.
    pub chromatic_number: usize,
    /// A coloring of the graph without the edge in one color fewer, when one exists.
    pub coloring: Option<Coloring>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexWitness {
    pub vertex: Vertex,
    pub chromatic_number: usize,
    pub coloring: Option<Coloring>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContractionEntry {
    pub edge: Edge,
    pub chromatic_number: usize,
}

/// Deletion-criticality certificate. Contraction results are auxiliary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub chromatic_number: usize,
    pub coloring: Coloring,
    /// χ = 4 and every edge deletion drops χ to 3.
    pub edge_critical: bool,
    pub edges: Vec<EdgeWitness>,
    /// χ = 4 and every vertex deletion drops χ to 3.
    pub vertex_critical: bool,
    pub vertices: Vec<VertexWitness>,
    pub contractions: Vec<ContractionEntry>,
}

impl CriticalityReport {
    pub fn is_4_critical(&self) -> bool {
        self.chromatic_number == 4 && self.edge_critical && self.vertex_critical
    }

    /// Re-checks every stored coloring against the graph it claims to color.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let chi = self.chromatic_number;
        if !g.is_empty() && !self.coloring.is_proper(g, chi) {
            return Err("optimal coloring is not proper".into());
        }
        if chi > 0 && k_color(g, chi - 1).is_some() {
            return Err(format!("graph is {}-colorable", chi - 1));
        }
        for w in &self.edges {
            let h = delete_edge(g, w.edge).map_err(|e| e.to_string())?;
            match &w.coloring {
                Some(c) if !c.is_proper(&h, chi - 1) => return Err(format!("witness for edge {} is improper", w.edge)),
                Some(_) if w.chromatic_number != chi - 1 => return Err(format!("edge {} entry inconsistent", w.edge)),
                None if w.chromatic_number != chi => return Err(format!("edge {} entry inconsistent", w.edge)),
                _ => {}
            }
        }
        for w in &self.vertices {
            let h = delete_vertex(g, w.vertex).map_err(|e| e.to_string())?;
            match &w.coloring {
                Some(c) if !c.is_proper(&h, chi - 1) => {
                    return Err(format!("witness for vertex {} is improper", w.vertex))
                }
                Some(_) if w.chromatic_number != chi - 1 => {
                    return Err(format!("vertex {} entry inconsistent", w.vertex))
                }
                _ => {}
            }
        }
        let drops = |n: usize| n + 1 == chi;
        if self.edge_critical != (chi == 4 && self.edges.len() == g.edge_count() && self.edges.iter().all(|w| drops(w.chromatic_number))) {
            return Err("edge_critical flag disagrees with witnesses".into());
        }
        if self.vertex_critical
            != (chi == 4 && self.vertices.len() == g.vertex_count() && self.vertices.iter().all(|w| drops(w.chromatic_number)))
        {
            return Err("vertex_critical flag disagrees with witnesses".into());
        }
        Ok(())
    }
}

pub fn certify_4_critical(g: &Graph) -> CriticalityReport {
    certify_4_critical_with(g, &[])
}

/// Criticality report plus χ after contracting each of `designated`.
pub fn certify_4_critical_with(g: &Graph, designated: &[Edge]) -> CriticalityReport {
    let (chi, coloring) = optimal_coloring(g);
    let edges: Vec<EdgeWitness> = g
        .edges()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|e| {
            let h = delete_edge(g, e).expect("edge of g");
            let c = chi.checked_sub(1).and_then(|k| k_color(&h, k));
            if let Some(c) = &c {
                // otherwise c would color g itself in fewer than χ colors
                assert_eq!(c.get(e.u()), c.get(e.v()), "monotonicity violated at {e}");
            }
            EdgeWitness { edge: e, chromatic_number: if c.is_some() { chi - 1 } else { chi }, coloring: c }
        })
        .collect();
    let vertices: Vec<VertexWitness> = g
        .vertices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|v| {
            let h = delete_vertex(g, v).expect("vertex of g");
            let c = chi.checked_sub(1).and_then(|k| k_color(&h, k));
            let n = if c.is_some() { chi - 1 } else { chi };
            VertexWitness { vertex: v, chromatic_number: n, coloring: c }
        })
        .collect();
    let contractions = designated
        .iter()
        .map(|&e| ContractionEntry {
            edge: e,
            chromatic_number: chromatic_number(&contract_edge(g, e).expect("designated edge present")),
        })
        .collect();
    let edge_critical = chi == 4 && edges.iter().all(|w| w.chromatic_number == 3);
    let vertex_critical = chi == 4 && vertices.iter().all(|w| w.chromatic_number == 3);
    CriticalityReport { chromatic_number: chi, coloring, edge_critical, edges, vertex_critical, vertices, contractions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, wheel};

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::new()), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&complete(4)), 4);
        assert_eq!(chromatic_number(&cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&wheel(5).unwrap()), 4);
        assert!(k_color(&cycle(7).unwrap(), 2).is_none());
    }

    #[test]
    fn k4_is_critical() {
        let r = certify_4_critical(&complete(4));
        assert!(r.is_4_critical());
        r.verify(&complete(4)).unwrap();
    }

    #[test]
    fn odd_wheel_critical_even_wheel_not() {
        assert!(certify_4_critical(&wheel(5).unwrap()).is_4_critical());
        let r = certify_4_critical(&wheel(4).unwrap());
        assert_eq!(r.chromatic_number, 3);
        assert!(!r.edge_critical);
    }
}
