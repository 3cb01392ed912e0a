//! Bitset adjacency used by the exact searches.

use std::collections::BTreeMap;

use super::{Edge, Graph, Vertex};

pub(crate) type Mask = u128;

/// Largest vertex count the bitset searches accept.
pub const MAX_DENSE_VERTICES: usize = 128;

#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<Mask>,
}

impl Dense {
    /// # Panics
    /// If the graph has more than [`MAX_DENSE_VERTICES`] vertices.
    pub fn of(g: &Graph) -> Dense {
        assert!(
            g.vertex_count() <= MAX_DENSE_VERTICES,
            "exact search supports at most {MAX_DENSE_VERTICES} vertices, got {}",
            g.vertex_count()
        );
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![0 as Mask; ids.len()];
        for e in g.edges() {
            let (a, b) = (index[&e.u()], index[&e.v()]);
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Dense { ids, adj }
    }

    pub fn from_adj(adj: Vec<Mask>) -> Dense {
        let ids = (0..adj.len() as u32).map(Vertex).collect();
        Dense { ids, adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn all(&self) -> Mask {
        full(self.n())
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new();
        for &v in &self.ids {
            g.insert_vertex(v);
        }
        for u in 0..self.n() {
            for v in ones(self.adj[u] & !full(u + 1)) {
                g.insert_edge(Edge::new(self.ids[u], self.ids[v]).expect("no loops"));
            }
        }
        g
    }

    /// Whether the vertices in `set` induce a connected subgraph. Empty sets are not connected.
    pub fn connected_within(&self, set: Mask) -> bool {
        if set == 0 {
            return false;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in ones(frontier) {
                next |= self.adj[v] & set;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == set
    }
}

pub(crate) fn bit(i: usize) -> Mask {
    1 << i
}

pub(crate) fn full(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Indices of set bits, lowest first.
pub(crate) fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}
