//! Exact minor containment for small patterns, and the minor-bracket predicate.
//!
//! The search works on contractions of the host. At every node it first asks
//! whether the pattern is already a subgraph. Failing that it contracts:
//! a vertex whose degree is below the pattern's minimum degree can only be
//! used merged with a neighbour, so only those contractions are tried; when
//! no such vertex exists every edge is tried. Graphs proven free of the
//! pattern are remembered by canonical form. Small separators give an extra
//! negative filter for highly connected patterns.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::graph::dense::{bit, full, ones, Dense, Mask};
use crate::graph::{canonical_dense, Edge, Graph, Vertex};

/// Branch set per pattern vertex, and one host edge per pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
    /// Serialized as a list of `[pattern edge, host edge]` pairs.
    #[serde(with = "edge_pairs")]
    pub edges: BTreeMap<Edge, Edge>,
}

mod edge_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::graph::Edge;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Edge, Edge>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Edge, Edge>, D::Error> {
        Ok(Vec::<(Edge, Edge)>::deserialize(d)?.into_iter().collect())
    }
}

impl MinorWitness {
    /// Checks the witness directly against the two graphs.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<(), String> {
        let mut owner: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for x in pattern.vertices() {
            let Some(set) = self.branch_sets.get(&x) else {
                return Err(format!("pattern vertex {x} has no branch set"));
            };
            if set.is_empty() {
                return Err(format!("branch set of {x} is empty"));
            }
            for &h in set {
                if !host.contains(h) {
                    return Err(format!("branch set of {x} uses unknown host vertex {h}"));
                }
                if let Some(other) = owner.insert(h, x) {
                    return Err(format!("host vertex {h} is in the branch sets of {other} and {x}"));
                }
            }
            if !host.induced(set).is_connected() {
                return Err(format!("branch set of {x} is not connected"));
            }
        }
        if self.branch_sets.len() != pattern.vertex_count() {
            return Err("branch sets for vertices outside the pattern".into());
        }
        for e in pattern.edges() {
            let Some(&h) = self.edges.get(&e) else {
                return Err(format!("pattern edge {e} is not realised"));
            };
            if !host.has_edge(h) {
                return Err(format!("designated edge {h} is not in the host"));
            }
            let ends = (owner.get(&h.u()).copied(), owner.get(&h.v()).copied());
            if ends != (Some(e.u()), Some(e.v())) && ends != (Some(e.v()), Some(e.u())) {
                return Err(format!("designated edge {h} does not join the branch sets of {e}"));
            }
        }
        Ok(())
    }
}

struct Pattern {
    adj: Vec<Mask>,
    edges: usize,
    min_degree: usize,
    connectivity: usize,
    connected: bool,
    order: Vec<usize>,
}

impl Pattern {
    fn new(adj: Vec<Mask>) -> Pattern {
        let n = adj.len();
        let d = Dense::from_adj(adj);
        let edges = d.edge_count();
        let min_degree = (0..n).map(|v| d.degree(v) as usize).min().unwrap_or(0);
        let connected = n == 0 || d.connected_within(d.all());
        Pattern { connectivity: connectivity(&d.adj), order: match_order(&d.adj), adj: d.adj, edges, min_degree, connected }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }
}

/// Vertex connectivity by trying every removal set; patterns are tiny.
fn connectivity(adj: &[Mask]) -> usize {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let all = full(n);
    let d = Dense::from_adj(adj.to_vec());
    for k in 0..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset(n, k, &mut |s| {
            if !found && !d.connected_within(all & !s) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    n - 1
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(Mask)) {
    fn go(start: usize, n: usize, k: usize, acc: Mask, f: &mut dyn FnMut(Mask)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            go(i + 1, n, k - 1, acc | bit(i), f);
        }
    }
    go(0, n, k, 0, f);
}

/// Pattern vertex order for subgraph matching: each next vertex has the most
/// already-placed neighbours, then the highest degree.
fn match_order(adj: &[Mask]) -> Vec<usize> {
    let n = adj.len();
    let mut placed: Mask = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((adj[v] & placed).count_ones(), adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed |= bit(v);
        order.push(v);
    }
    order
}

/// A contraction of the host: adjacency plus the host vertices merged into each vertex.
#[derive(Clone)]
struct State {
    adj: Vec<Mask>,
    sets: Vec<Mask>,
}

fn drop_bit(m: Mask, j: usize) -> Mask {
    let low = m & (bit(j) - 1);
    let high = if j + 1 >= 128 { 0 } else { (m >> (j + 1)) << j };
    low | high
}

impl State {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Merges `j` into `i`.
    fn contract(&self, i: usize, j: usize) -> State {
        let (i, j) = (i.min(j), i.max(j));
        let mut adj = self.adj.clone();
        let mut sets = self.sets.clone();
        adj[i] = (adj[i] | adj[j]) & !bit(i) & !bit(j);
        for v in ones(adj[j]) {
            if v != i {
                adj[v] = (adj[v] | bit(i)) & !bit(j);
            }
        }
        sets[i] |= sets[j];
        adj.remove(j);
        sets.remove(j);
        for m in &mut adj {
            *m = drop_bit(*m, j);
        }
        State { adj, sets }
    }

    fn induced(&self, keep: Mask) -> State {
        let idx: Vec<usize> = ones(keep).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &v) in idx.iter().enumerate() {
            pos[v] = k;
        }
        let adj = idx.iter().map(|&v| ones(self.adj[v] & keep).fold(0, |m, u| m | bit(pos[u]))).collect();
        State { adj, sets: idx.iter().map(|&v| self.sets[v]).collect() }
    }

    fn component_masks(&self) -> Vec<Mask> {
        components_within(&self.adj, full(self.n()))
    }

    fn key(&self) -> Vec<Mask> {
        canonical_dense(&self.adj, &vec![0; self.n()]).0
    }
}

struct Search<'a> {
    pat: &'a Pattern,
    negatives: HashSet<Vec<Mask>>,
    nodes: u64,
}

impl Search<'_> {
    /// Pattern embedding `pattern vertex -> state vertex` in some contraction of `s`.
    fn run(&mut self, mut s: State) -> Option<(State, Vec<usize>)> {
        self.nodes += 1;
        let p = self.pat.n();
        if self.pat.min_degree > 0 {
            while let Some(v) = (0..s.n()).find(|&v| s.adj[v] == 0) {
                s = s.induced(full(s.n()) & !bit(v));
            }
        }
        if s.n() < p || s.edges() < self.pat.edges {
            return None;
        }
        let key = s.key();
        if self.negatives.contains(&key) {
            return None;
        }
        if let Some(map) = subgraph(self.pat, &s.adj) {
            return Some((s, map));
        }
        let found = self.expand(&s);
        if found.is_none() {
            self.negatives.insert(key);
        }
        found
    }

    fn expand(&mut self, s: &State) -> Option<(State, Vec<usize>)> {
        let p = self.pat.n();
        if s.n() == p {
            return None;
        }
        if self.pat.connected {
            let comps = s.component_masks();
            if comps.len() > 1 {
                return comps
                    .into_iter()
                    .filter(|c| c.count_ones() as usize >= p)
                    .find_map(|c| self.run(s.induced(c)));
            }
        }
        let deg = |v: usize| s.adj[v].count_ones() as usize;
        if let Some(u) = (0..s.n()).filter(|&v| deg(v) < self.pat.min_degree).min_by_key(|&v| (deg(v), v)) {
            return ones(s.adj[u]).find_map(|w| self.run(s.contract(u, w)));
        }
        if self.separator_rules_out(s) {
            return None;
        }
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for u in 0..s.n() {
            for w in ones(s.adj[u]) {
                if u < w {
                    let common = (s.adj[u] & s.adj[w]).count_ones() as usize;
                    edges.push((common * 256 + deg(u) + deg(w), u, w));
                }
            }
        }
        edges.sort_unstable();
        edges.into_iter().find_map(|(_, u, w)| self.run(s.contract(u, w)))
    }

    /// Looks for a separator smaller than the pattern's connectivity; if the
    /// pattern is a minor of neither torso it is not a minor of `s`.
    fn separator_rules_out(&mut self, s: &State) -> bool {
        let k = self.pat.connectivity;
        let n = s.n();
        let all = full(n);
        let d = Dense::from_adj(s.adj.clone());
        for size in 1..k {
            if size + 2 > n {
                break;
            }
            let mut sep: Option<Mask> = None;
            for_each_subset(n, size, &mut |set| {
                if sep.is_none() && !d.connected_within(all & !set) {
                    sep = Some(set);
                }
            });
            let Some(sep) = sep else { continue };
            let first = components_within(&s.adj, all & !sep)[0];
            for side in [first | sep, (all & !first) | sep] {
                // torso: the side with its separator vertices made pairwise adjacent
                let mut adj = s.adj.clone();
                for v in ones(sep) {
                    adj[v] |= sep & !bit(v);
                }
                let torso = State { adj, sets: s.sets.clone() }.induced(side);
                if self.run(torso).is_some() {
                    return false;
                }
            }
            return true;
        }
        false
    }
}

fn components_within(adj: &[Mask], mut left: Mask) -> Vec<Mask> {
    let within = left;
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= !bit(v);
            let new = adj[v] & within & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// Subgraph (not necessarily induced) embedding of the pattern.
fn subgraph(pat: &Pattern, host: &[Mask]) -> Option<Vec<usize>> {
    let p = pat.n();
    let n = host.len();
    if p > n {
        return None;
    }
    let pdeg: Vec<u32> = pat.adj.iter().map(|m| m.count_ones()).collect();
    let hdeg: Vec<u32> = host.iter().map(|m| m.count_ones()).collect();
    let mut map = vec![usize::MAX; p];
    fn go(i: usize, pat: &Pattern, host: &[Mask], pdeg: &[u32], hdeg: &[u32], map: &mut [usize], used: Mask) -> bool {
        let Some(&x) = pat.order.get(i) else { return true };
        let mut cand = full(host.len()) & !used;
        for y in ones(pat.adj[x]) {
            if map[y] != usize::MAX {
                cand &= host[map[y]];
            }
        }
        for h in ones(cand) {
            if hdeg[h] < pdeg[x] {
                continue;
            }
            map[x] = h;
            if go(i + 1, pat, host, pdeg, hdeg, map, used | bit(h)) {
                return true;
            }
        }
        map[x] = usize::MAX;
        false
    }
    go(0, pat, host, &pdeg, &hdeg, &mut map, 0).then_some(map)
}

/// Statistics from the last search, for reporting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub memoized_negatives: usize,
}

/// Exact minor test. Hosts are limited to 128 vertices.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorWitness> {
    has_minor_with_stats(host, pattern).0
}

pub fn has_minor_with_stats(host: &Graph, pattern: &Graph) -> (Option<MinorWitness>, SearchStats) {
    let pd = Dense::of(pattern);
    let hd = Dense::of(host);
    let pat = Pattern::new(pd.adj.clone());
    let mut search = Search { pat: &pat, negatives: HashSet::new(), nodes: 0 };
    let start = State { adj: hd.adj.clone(), sets: (0..hd.n()).map(bit).collect() };
    let found = if pat.n() == 0 { Some((start, Vec::new())) } else { search.run(start) };
    let stats = SearchStats { nodes: search.nodes, memoized_negatives: search.negatives.len() };
    let witness = found.map(|(s, map)| {
        let branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>> = (0..pat.n())
            .map(|x| (pd.ids[x], ones(s.sets[map[x]]).map(|i| hd.ids[i]).collect()))
            .collect();
        let owner: BTreeMap<Vertex, Vertex> =
            branch_sets.iter().flat_map(|(&x, set)| set.iter().map(move |&h| (h, x))).collect();
        let mut edges = BTreeMap::new();
        for e in host.edges() {
            if let (Some(&a), Some(&b)) = (owner.get(&e.u()), owner.get(&e.v())) {
                if let Some(pe) = Edge::new(a, b).filter(|&pe| pattern.has_edge(pe)) {
                    edges.entry(pe).or_insert(e);
                }
            }
        }
        let w = MinorWitness { branch_sets, edges };
        debug_assert_eq!(w.validate(host, pattern), Ok(()));
        w
    });
    (witness, stats)
}

/// ⟨h1, h2⟩ for `host`, with the witnesses behind the verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketReport {
    pub h1_in_h2: Option<MinorWitness>,
    pub h1_in_host: Option<MinorWitness>,
    pub h2_in_host: Option<MinorWitness>,
    pub holds: bool,
}

pub fn minor_bracket_report(host: &Graph, h1: &Graph, h2: &Graph) -> BracketReport {
    let h1_in_h2 = has_minor(h2, h1);
    let h1_in_host = has_minor(host, h1);
    let h2_in_host = has_minor(host, h2);
    let holds = h1_in_h2.is_some() && h1_in_host.is_some() && h2_in_host.is_none();
    BracketReport { h1_in_h2, h1_in_host, h2_in_host, holds }
}

/// h1 ≺ h2, h1 ≺ host and h2 ⊀ host.
pub fn minor_bracket(host: &Graph, h1: &Graph, h2: &Graph) -> bool {
    has_minor(h2, h1).is_some() && has_minor(host, h1).is_some() && has_minor(host, h2).is_none()
}
