//! Small derived facts checked against brute force.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use multiwheel::coloring::{chromatic_number, lonely_color_classes};
use multiwheel::constructors::{
    complete, cycle, mycielski, octahedron, path, projective_multiwheel, wheel, ProjectiveSpec,
};
use multiwheel::graph::{delete_vertex, is_isomorphic, split_vertex};
use multiwheel::{Graph, Vertex};

/// Every permutation of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lonely supports of all proper 4-colorings, counted up to automorphism,
/// by listing colorings and automorphisms explicitly.
fn brute_lonely_patterns(g: &Graph) -> usize {
    let ids: Vec<Vertex> = g.vertices().collect();
    let n = ids.len();
    let adj = |a: usize, b: usize| g.adjacent(ids[a], ids[b]);
    let autos: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| adj(a, b) == adj(p[a], p[b]))))
        .collect();
    let mut supports: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for code in 0..4usize.pow(n as u32) {
        let col: Vec<usize> = (0..n).map(|i| code / 4usize.pow(i as u32) % 4).collect();
        if (0..n).any(|a| (a + 1..n).any(|b| adj(a, b) && col[a] == col[b])) {
            continue;
        }
        let mut sizes = [0usize; 4];
        for &c in &col {
            sizes[c] += 1;
        }
        if sizes.contains(&0) {
            continue;
        }
        let min = *sizes.iter().min().unwrap();
        let support: BTreeSet<usize> = (0..n).filter(|&i| sizes[col[i]] == min).collect();
        let orbit_rep = autos.iter().map(|p| support.iter().map(|&i| p[i]).collect::<BTreeSet<_>>()).min().unwrap();
        supports.insert(orbit_rep);
    }
    supports.len()
}

#[test]
fn wheel5_lonely_patterns_match_enumeration() {
    let w = wheel(5).unwrap();
    let fast = lonely_color_classes(&w).unwrap();
    assert_eq!(fast.len(), brute_lonely_patterns(&w));
    let base = multiwheel::constructors::base_graph().built.graph;
    assert_eq!(lonely_color_classes(&base).unwrap().len(), brute_lonely_patterns(&base));
}

#[test]
fn k4_split_is_three_colorable() {
    let k4 = complete(4);
    let (h, _) = split_vertex(&k4, Vertex(0), &BTreeSet::from([Vertex(1)])).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (5, 6));
    assert_eq!(chromatic_number(&h), 3);
    assert_eq!(common::brute_chromatic(&h), 3);
}

#[test]
fn path_vertex_split_separates() {
    let p = path(3);
    let (h, _) = split_vertex(&p, Vertex(1), &BTreeSet::from([Vertex(0)])).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (4, 2));
    assert_eq!(h.components().len(), 2);
}

#[test]
fn mycielski_apex_deletion_counts() {
    let m = mycielski(&cycle(3).unwrap());
    let apex = Vertex(6);
    let h = delete_vertex(&m, apex).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (6, 9));
    assert_eq!(delete_vertex(&Graph::empty(1), Vertex(0)).unwrap().vertex_count(), 0);
}

#[test]
fn mycielski_of_an_edge_is_c5() {
    let m = mycielski(&path(2));
    assert!(is_isomorphic(&m, &cycle(5).unwrap()).is_some());
    for k in 3..8 {
        let c = cycle(k).unwrap();
        let m = mycielski(&c);
        assert_eq!((m.vertex_count(), m.edge_count()), (2 * k + 1, 3 * k + k));
    }
}

#[test]
fn octahedron_is_three_chromatic() {
    assert_eq!(chromatic_number(&octahedron()), 3);
    assert_eq!(common::brute_chromatic(&octahedron()), 3);
}

#[test]
fn projective_112_counts() {
    let g = projective_multiwheel(&ProjectiveSpec::new(1, vec![1, 1, 2]).unwrap()).unwrap().graph;
    assert_eq!((g.vertex_count(), g.edge_count()), (9, 16));
    let degrees: BTreeMap<usize, usize> = g.vertices().fold(BTreeMap::new(), |mut m, v| {
        *m.entry(g.degree(v)).or_default() += 1;
        m
    });
    assert_eq!(degrees.values().sum::<usize>(), 9);
}
