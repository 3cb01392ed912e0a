//! Canonical labeling by individualization and refinement.
//!
//! Each search node refines an ordered partition of the vertices until it is
//! equitable, then branches on the members of its first non-singleton cell.
//! Leaves are discrete partitions; the canonical labeling is the leaf whose
//! relabeled adjacency rows are lexicographically largest. Automorphisms found
//! along the way (two leaves with the same rows) prune branches that lie in
//! the same orbit of the stabilizer of the current prefix.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use super::dense::{bit, Dense, Mask};
use super::{Graph, Vertex};

/// Isomorphism-invariant form of a graph (optionally vertex-colored).
///
/// Equality, ordering and hashing consider only the invariant part; `order`
/// records which input vertex took each canonical position.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    cell_sizes: Vec<usize>,
    rows: Vec<Mask>,
    order: Vec<Vertex>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    /// Input vertex placed at each canonical position.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// The canonically relabeled graph on `0..n`.
    pub fn graph(&self) -> Graph {
        Dense::from_adj(self.rows.clone()).to_graph()
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.cell_sizes == other.cell_sizes && self.rows == other.rows
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cell_sizes.hash(state);
        self.rows.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.cell_sizes, &self.rows).cmp(&(&other.cell_sizes, &other.rows))
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &BTreeMap::new())
}

/// Canonical form of `g` with vertices pre-partitioned by `color`
/// (missing vertices count as color 0). Isomorphisms must preserve colors.
pub fn canonical_form_colored(g: &Graph, color: &BTreeMap<Vertex, u32>) -> CanonicalForm {
    let d = Dense::of(g);
    let colors: Vec<u32> = d.ids.iter().map(|v| color.get(v).copied().unwrap_or(0)).collect();
    let (rows, lab, cell_sizes) = canonical_dense(&d.adj, &colors);
    CanonicalForm { cell_sizes, rows, order: lab.into_iter().map(|i| d.ids[i]).collect() }
}

pub(crate) fn canonical_dense(adj: &[Mask], colors: &[u32]) -> (Vec<Mask>, Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_color.entry(colors[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_color.into_values().collect();
    let cell_sizes = cells.iter().map(Vec::len).collect();
    let mut s = Search { adj, n, first: None, best: None, gens: Vec::new() };
    if n > 0 {
        s.visit(cells, &mut Vec::new());
    }
    let (rows, lab) = s.best.unwrap_or_default();
    (rows, lab, cell_sizes)
}

/// An isomorphism `a -> b`, if one exists.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Option<BTreeMap<Vertex, Vertex>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let (ca, cb) = (canonical_form(a), canonical_form(b));
    if ca != cb {
        return None;
    }
    let map: BTreeMap<Vertex, Vertex> = ca.order.iter().copied().zip(cb.order.iter().copied()).collect();
    debug_assert!(a.edges().all(|e| b.adjacent(map[&e.u()], map[&e.v()])));
    Some(map)
}

/// Generators of the automorphism group found by the canonical search.
pub fn automorphism_generators(g: &Graph) -> Vec<BTreeMap<Vertex, Vertex>> {
    let d = Dense::of(g);
    let n = d.n();
    let mut s = Search { adj: &d.adj, n, first: None, best: None, gens: Vec::new() };
    if n > 0 {
        s.visit(vec![(0..n).collect()], &mut Vec::new());
    }
    s.gens
        .iter()
        .map(|p| (0..n).map(|i| (d.ids[i], d.ids[p[i]])).collect())
        .collect()
}

struct Search<'a> {
    adj: &'a [Mask],
    n: usize,
    first: Option<(Vec<Mask>, Vec<usize>)>,
    best: Option<(Vec<Mask>, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.adj, &mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let target = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                if tried.iter().any(|&u| find(&orbits, u) == find(&orbits, v)) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(vec![v]);
            next.push(target.iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.visit(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let mut pos = vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<Mask> = lab
            .iter()
            .map(|&v| super::dense::ones(self.adj[v]).fold(0, |acc, u| acc | bit(pos[u])))
            .collect();
        let automorphism = |other: &[usize]| -> Vec<usize> {
            let mut p = vec![0usize; lab.len()];
            for i in 0..lab.len() {
                p[other[i]] = lab[i];
            }
            p
        };
        match &self.first {
            None => {
                self.first = Some((rows.clone(), lab.clone()));
                self.best = Some((rows, lab));
                return;
            }
            Some((fr, fl)) if *fr == rows => {
                let p = automorphism(fl);
                self.gens.push(p);
                return;
            }
            _ => {}
        }
        let (br, bl) = self.best.as_ref().expect("best set with first");
        match rows.cmp(br) {
            Ordering::Equal => {
                let p = automorphism(bl);
                self.gens.push(p);
            }
            Ordering::Greater => self.best = Some((rows, lab)),
            Ordering::Less => {}
        }
    }

    /// Union-find parents for orbits of the known automorphisms that fix `prefix` pointwise.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for g in &self.gens {
            if prefix.iter().all(|&x| g[x] == x) {
                for (i, &j) in g.iter().enumerate() {
                    let (a, b) = (find(&parent, i), find(&parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// Splits cells by neighbor counts into each cell until the partition is equitable.
fn refine(adj: &[Mask], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: Mask = cells[s].iter().fold(0, |m, &v| m | bit(v));
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut split_any = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    groups.entry((adj[v] & splitter).count_ones()).or_default().push(v);
                }
                split_any |= groups.len() > 1;
                next.extend(groups.into_values());
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let e: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &e).unwrap()
    }

    #[test]
    fn cycles_of_equal_length_are_isomorphic() {
        let a = cycle(7);
        let perm: BTreeMap<Vertex, Vertex> = (0..7).map(|i| (Vertex(i), Vertex((3 * i + 2) % 7))).collect();
        let b = a.relabel(&perm).unwrap();
        let w = is_isomorphic(&a, &b).expect("isomorphic");
        assert!(a.edges().all(|e| b.adjacent(w[&e.u()], w[&e.v()])));
    }

    #[test]
    fn c6_vs_two_triangles() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(is_isomorphic(&cycle(6), &two).is_none());
    }

    #[test]
    fn edgeless_and_complete_graphs_finish() {
        let e = Graph::empty(40);
        assert_eq!(canonical_form(&e).vertex_count(), 40);
        let mut k = Vec::new();
        for i in 0..12 {
            for j in i + 1..12 {
                k.push((i, j));
            }
        }
        let kg = Graph::from_edges(12, &k).unwrap();
        assert_eq!(canonical_form(&kg).graph().edge_count(), 66);
    }

    #[test]
    fn colors_distinguish() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let end: BTreeMap<Vertex, u32> = [(Vertex(0), 1)].into();
        let other_end: BTreeMap<Vertex, u32> = [(Vertex(2), 1)].into();
        let middle: BTreeMap<Vertex, u32> = [(Vertex(1), 1)].into();
        assert_eq!(canonical_form_colored(&p, &end), canonical_form_colored(&p, &other_end));
        assert_ne!(canonical_form_colored(&p, &end), canonical_form_colored(&p, &middle));
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = cycle(5);
        let gens = automorphism_generators(&g);
        assert!(!gens.is_empty());
        for p in gens {
            assert!(g.edges().all(|e| g.adjacent(p[&e.u()], p[&e.v()])));
        }
    }
}
