//! Brute-force oracles shared by the integration tests. Slow on purpose: they
//! only use exhaustive enumeration, never the library's search routines.

#![allow(dead_code)]

use std::collections::HashSet;

use multiwheel::graph::io::{from_graph6, to_graph6};
use multiwheel::graph::{canonical_form, is_isomorphic};
use multiwheel::{Graph, Vertex};

pub fn load_fixture(name: &str) -> Vec<Graph> {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| from_graph6(l.trim()).unwrap())
        .collect()
}

/// Compact adjacency matrix in vertex order.
fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let ids: Vec<Vertex> = g.vertices().collect();
    ids.iter().map(|&a| ids.iter().map(|&b| g.adjacent(a, b)).collect()).collect()
}

/// Fewest blocks over all set partitions of V into independent sets.
pub fn brute_chromatic(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    fn go(adj: &[Vec<bool>], v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == adj.len() {
            *best = blocks.len();
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].iter().all(|&u| !adj[u][v]) {
                blocks[b].push(v);
                go(adj, v + 1, blocks, best);
                blocks[b].pop();
            }
        }
        blocks.push(vec![v]);
        go(adj, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = n + 1;
    go(&adj, 0, &mut Vec::new(), &mut best);
    best
}

fn from_matrix(adj: &[Vec<bool>]) -> Graph {
    let mut edges = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x && i < j {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(adj.len(), &edges).unwrap()
}

fn without_vertex(adj: &[Vec<bool>], v: usize) -> Vec<Vec<bool>> {
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != v).map(|(_, &x)| x).collect())
        .collect()
}

fn edge_list(adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = adj.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| adj[i][j]).collect()
}

fn edge_count(adj: &[Vec<bool>]) -> usize {
    edge_list(adj).len()
}

/// Whether `pattern` arises from `host` by some sequence of vertex
/// deletions, edge deletions and edge contractions. Explores every minor of
/// the host, one isomorphism class at a time.
pub fn brute_has_minor(host: &Graph, pattern: &Graph) -> bool {
    let (p, mp) = (pattern.vertex_count(), pattern.edge_count());
    let mut seen = HashSet::new();
    let mut stack = vec![matrix(host)];
    while let Some(adj) = stack.pop() {
        let (n, m) = (adj.len(), edge_count(&adj));
        if n < p || m < mp {
            continue;
        }
        let g = from_matrix(&adj);
        if !seen.insert(to_graph6(&canonical_form(&g).graph())) {
            continue;
        }
        if n == p && m == mp && is_isomorphic(&g, pattern).is_some() {
            return true;
        }
        for v in 0..n {
            stack.push(without_vertex(&adj, v));
        }
        for (i, j) in edge_list(&adj) {
            let mut del = adj.clone();
            del[i][j] = false;
            del[j][i] = false;
            stack.push(del);
            let mut con = adj.clone();
            for k in 0..n {
                if con[j][k] && k != i {
                    con[i][k] = true;
                    con[k][i] = true;
                }
            }
            stack.push(without_vertex(&con, j));
        }
    }
    false
}

/// Drops vertices of degree at most 1 and smooths degree-2 vertices whose
/// neighbours are non-adjacent. Neither changes whether a K5 or K3,3
/// subdivision exists.
fn reduce(mut adj: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    loop {
        let n = adj.len();
        let deg = |a: &Vec<Vec<bool>>, v: usize| a[v].iter().filter(|&&x| x).count();
        if let Some(v) = (0..n).find(|&v| deg(&adj, v) <= 1) {
            adj = without_vertex(&adj, v);
            continue;
        }
        let smooth = (0..n).find_map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&u| adj[v][u]).collect();
            (nb.len() == 2 && !adj[nb[0]][nb[1]]).then(|| (v, nb[0], nb[1]))
        });
        match smooth {
            Some((v, a, b)) => {
                adj[a][b] = true;
                adj[b][a] = true;
                adj = without_vertex(&adj, v);
            }
            None => return adj,
        }
    }
}

/// Searches every subgraph (up to isomorphism, after smoothing) for a
/// subdivision of K5 or K3,3.
pub fn brute_has_kuratowski_subdivision(g: &Graph) -> bool {
    let k5 = multiwheel::constructors::complete(5);
    let k33 = multiwheel::constructors::complete_bipartite(3, 3);
    let mut seen = HashSet::new();
    let mut stack = vec![reduce(matrix(g))];
    while let Some(adj) = stack.pop() {
        let n = adj.len();
        let degs: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        let at_least = |d: usize| degs.iter().filter(|&&x| x >= d).count();
        if at_least(4) < 5 && at_least(3) < 6 {
            continue;
        }
        let h = from_matrix(&adj);
        if !seen.insert(to_graph6(&canonical_form(&h).graph())) {
            continue;
        }
        let m = h.edge_count();
        if (n == 5 && m == 10 && is_isomorphic(&h, &k5).is_some())
            || (n == 6 && m == 9 && is_isomorphic(&h, &k33).is_some())
        {
            return true;
        }
        for v in 0..n {
            stack.push(reduce(without_vertex(&adj, v)));
        }
        for (i, j) in edge_list(&adj) {
            let mut del = adj.clone();
            del[i][j] = false;
            del[j][i] = false;
            stack.push(reduce(del));
        }
    }
    false
}
