//! Planarity by path addition (Demoucron, Malgrange and Pertuiset) on each
//! biconnected block, with block rotations merged at cut vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::Embedding;
use crate::graph::{delete_edge, Edge, Graph, Vertex};

#[derive(Clone, Debug)]
pub enum Planarity {
    /// One spherical embedding per connected component.
    Planar(Vec<Embedding>),
    NonPlanar(Kuratowski),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embeddings(&self) -> Option<&[Embedding]> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Kuratowski> {
        match self {
            Planarity::Planar(_) => None,
            Planarity::NonPlanar(k) => Some(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph that is a subdivision of K5 or K3,3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl Kuratowski {
    /// Re-checks the witness against `host` from scratch.
    pub fn verify(&self, host: &Graph) -> bool {
        if !self.edges.iter().all(|&e| host.has_edge(e)) {
            return false;
        }
        let mut sub = Graph::new();
        for &e in &self.edges {
            sub.insert_vertex(e.u());
            sub.insert_vertex(e.v());
            sub.insert_edge(e);
        }
        let found = classify(&sub);
        found.as_ref().map(|(k, b)| (*k, b)) == Some((self.kind, &self.branch_vertices))
    }
}

/// Suppresses degree-2 vertices of `sub` and recognises K5 or K3,3.
fn classify(sub: &Graph) -> Option<(KuratowskiKind, Vec<Vertex>)> {
    if !sub.is_connected() {
        return None;
    }
    let branch: Vec<Vertex> = sub.vertices().filter(|&v| sub.degree(v) != 2).collect();
    // each branch path is met once from either end
    let mut ends: BTreeMap<Edge, usize> = BTreeMap::new();
    for &b in &branch {
        for first in sub.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            while sub.degree(cur) == 2 {
                let next = sub.neighbors(cur).find(|&x| x != prev)?;
                (prev, cur) = (cur, next);
            }
            // a closed branch path is a loop
            *ends.entry(Edge::new(b, cur)?).or_insert(0) += 1;
        }
    }
    if ends.values().any(|&c| c != 2) {
        return None;
    }
    let reduced: BTreeSet<Edge> = ends.into_keys().collect();
    let degs: Vec<usize> = branch.iter().map(|&b| reduced.iter().filter(|e| e.contains(b)).count()).collect();
    if branch.len() == 5 && reduced.len() == 10 && degs.iter().all(|&d| d == 4) {
        return Some((KuratowskiKind::K5, branch));
    }
    if branch.len() == 6 && reduced.len() == 9 && degs.iter().all(|&d| d == 3) {
        // bipartite check: the side of branch[0] is its non-neighbour set plus itself
        let side: BTreeSet<Vertex> = branch
            .iter()
            .copied()
            .filter(|&x| x == branch[0] || !reduced.contains(&Edge::new(branch[0], x).expect("distinct")))
            .collect();
        let bip = side.len() == 3 && reduced.iter().all(|e| side.contains(&e.u()) != side.contains(&e.v()));
        return bip.then_some((KuratowskiKind::K33, branch));
    }
    None
}

/// Exact planarity test. Planar graphs come back with a face list per
/// component; non-planar graphs with a Kuratowski subgraph.
pub fn is_planar(g: &Graph) -> Planarity {
    let mut out = Vec::new();
    for comp in g.components() {
        let h = g.induced(&comp);
        match embed_connected(&h) {
            Some(faces) => out.push(Embedding { graph: h, faces }),
            None => return Planarity::NonPlanar(kuratowski(g)),
        }
    }
    Planarity::Planar(out)
}

fn decide(g: &Graph) -> bool {
    g.components().into_iter().all(|c| embed_connected(&g.induced(&c)).is_some())
}

fn kuratowski(g: &Graph) -> Kuratowski {
    let mut h = g.clone();
    for e in g.edges() {
        let t = delete_edge(&h, e).expect("edge still present");
        if !decide(&t) {
            h = t;
        }
    }
    let isolated: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 0).collect();
    for v in isolated {
        h.remove_vertex(v);
    }
    let (kind, branch_vertices) = classify(&h).expect("edge-minimal non-planar graph is a Kuratowski subdivision");
    Kuratowski { kind, branch_vertices, edges: h.edges().collect() }
}

/// Face list of a connected planar graph, or `None`.
fn embed_connected(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m == 0 {
        return Some(Vec::new());
    }
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let mut rotation: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0].ends();
            rotation.entry(u).or_default().push(v);
            rotation.entry(v).or_default().push(u);
            continue;
        }
        let faces = dmp(&block)?;
        let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
        for f in &faces {
            let l = f.len();
            for i in 0..l {
                succ.entry(f[i]).or_default().insert(f[(i + l - 1) % l], f[(i + 1) % l]);
            }
        }
        for (v, s) in succ {
            let start = *s.keys().next().expect("non-empty");
            let mut order = vec![start];
            let mut x = s[&start];
            while x != start {
                order.push(x);
                x = s[&x];
            }
            debug_assert_eq!(order.len(), s.len());
            rotation.entry(v).or_default().extend(order);
        }
    }
    let next: BTreeMap<(Vertex, Vertex), Vertex> = rotation
        .iter()
        .flat_map(|(&v, r)| (0..r.len()).map(move |i| ((v, r[i]), r[(i + 1) % r.len()])))
        .collect();
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut faces = Vec::new();
    for e in g.edges() {
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            if seen.contains(&(a, b)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut v) = (a, b);
            while seen.insert((u, v)) {
                face.push(u);
                let w = next[&(v, u)];
                (u, v) = (v, w);
            }
            faces.push(face);
        }
    }
    debug_assert_eq!(n as i64 - m as i64 + faces.len() as i64, 2);
    Some(faces)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: BTreeMap<Vertex, usize>,
        low: BTreeMap<Vertex, usize>,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }
    impl Dfs<'_> {
        fn go(&mut self, u: Vertex, parent: Option<Vertex>) {
            let d = self.disc.len();
            self.disc.insert(u, d);
            self.low.insert(u, d);
            let nbrs: Vec<Vertex> = self.g.neighbors(u).collect();
            for v in nbrs {
                if Some(v) == parent {
                    continue;
                }
                let e = Edge::new(u, v).expect("simple");
                match self.disc.get(&v).copied() {
                    None => {
                        self.stack.push(e);
                        self.go(v, Some(u));
                        let lv = self.low[&v];
                        if lv < self.low[&u] {
                            self.low.insert(u, lv);
                        }
                        if lv >= self.disc[&u] {
                            let mut block = Vec::new();
                            while let Some(x) = self.stack.pop() {
                                block.push(x);
                                if x == e {
                                    break;
                                }
                            }
                            self.out.push(block);
                        }
                    }
                    Some(dv) if dv < self.disc[&u] => {
                        self.stack.push(e);
                        if dv < self.low[&u] {
                            self.low.insert(u, dv);
                        }
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut s = Dfs { g, disc: BTreeMap::new(), low: BTreeMap::new(), stack: Vec::new(), out: Vec::new() };
    for v in g.vertices() {
        if !s.disc.contains_key(&v) {
            s.go(v, None);
        }
    }
    s.out
}

struct Fragment {
    attach: BTreeSet<Vertex>,
    path: Vec<Vertex>,
}

/// Path addition on a 2-connected block with at least three vertices.
fn dmp(block: &[Edge]) -> Option<Vec<Vec<Vertex>>> {
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for e in block {
        adj.entry(e.u()).or_default().insert(e.v());
        adj.entry(e.v()).or_default().insert(e.u());
    }
    let cycle = find_cycle(&adj);
    let mut in_h: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut h_edges: BTreeSet<Edge> = BTreeSet::new();
    for i in 0..cycle.len() {
        h_edges.insert(Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]).expect("cycle"));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    loop {
        let fragments = fragments(&adj, &in_h, &h_edges);
        if fragments.is_empty() {
            return Some(faces);
        }
        let face_sets: Vec<BTreeSet<Vertex>> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let ok: Vec<usize> = (0..faces.len()).filter(|&i| frag.attach.is_subset(&face_sets[i])).collect();
            match ok.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, ok[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((fi, ok[0])),
                _ => {}
            }
        }
        let (fi, face_idx) = choice.expect("some fragment");
        let path = &fragments[fi].path;
        let (a, b) = (path[0], *path.last().expect("path"));
        let f = &faces[face_idx];
        let l = f.len();
        let i = f.iter().position(|&x| x == a).expect("attachment on face");
        let j = f.iter().position(|&x| x == b).expect("attachment on face");
        let mut first: Vec<Vertex> = Vec::new();
        let mut k = i;
        loop {
            first.push(f[k]);
            if k == j {
                break;
            }
            k = (k + 1) % l;
        }
        let mut second: Vec<Vertex> = Vec::new();
        let mut k = j;
        loop {
            second.push(f[k]);
            if k == i {
                break;
            }
            k = (k + 1) % l;
        }
        let inner = &path[1..path.len() - 1];
        first.extend(inner.iter().rev());
        second.extend(inner.iter());
        faces[face_idx] = first;
        faces.push(second);
        for w in path.windows(2) {
            h_edges.insert(Edge::new(w[0], w[1]).expect("path edge"));
        }
        in_h.extend(inner.iter().copied());
    }
}

fn find_cycle(adj: &BTreeMap<Vertex, BTreeSet<Vertex>>) -> Vec<Vertex> {
    let start = *adj.keys().next().expect("non-empty block");
    let mut path = vec![start];
    let mut on_path: BTreeMap<Vertex, usize> = [(start, 0)].into();
    let mut visited: BTreeSet<Vertex> = [start].into();
    let mut iters: Vec<std::collections::btree_set::Iter<'_, Vertex>> = vec![adj[&start].iter()];
    while let Some(it) = iters.last_mut() {
        let u = *path.last().expect("path");
        match it.next() {
            Some(&v) => {
                let parent = path.len().checked_sub(2).map(|i| path[i]);
                if Some(v) == parent {
                    continue;
                }
                if let Some(&p) = on_path.get(&v) {
                    return path[p..].to_vec();
                }
                if visited.insert(v) {
                    on_path.insert(v, path.len());
                    path.push(v);
                    iters.push(adj[&v].iter());
                }
            }
            None => {
                iters.pop();
                on_path.remove(&u);
                path.pop();
            }
        }
    }
    unreachable!("2-connected block has a cycle")
}

fn fragments(
    adj: &BTreeMap<Vertex, BTreeSet<Vertex>>,
    in_h: &BTreeSet<Vertex>,
    h_edges: &BTreeSet<Edge>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&u, ns) in adj {
        if !in_h.contains(&u) {
            continue;
        }
        for &v in ns.range(u..) {
            if in_h.contains(&v) && !h_edges.contains(&Edge::new(u, v).expect("distinct")) {
                out.push(Fragment { attach: [u, v].into(), path: vec![u, v] });
            }
        }
    }
    let mut done: BTreeSet<Vertex> = BTreeSet::new();
    for &s in adj.keys() {
        if in_h.contains(&s) || done.contains(&s) {
            continue;
        }
        let mut comp: BTreeSet<Vertex> = [s].into();
        let mut stack = vec![s];
        let mut attach = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if in_h.contains(&y) {
                    attach.insert(y);
                } else if comp.insert(y) {
                    stack.push(y);
                }
            }
        }
        done.extend(comp.iter().copied());
        let a = *attach.iter().next().expect("block is 2-connected");
        out.push(Fragment { path: bridge_path(adj, &comp, a, in_h), attach });
    }
    out
}

/// Path from attachment `a` through the fragment interior to another attachment.
fn bridge_path(
    adj: &BTreeMap<Vertex, BTreeSet<Vertex>>,
    interior: &BTreeSet<Vertex>,
    a: Vertex,
    in_h: &BTreeSet<Vertex>,
) -> Vec<Vertex> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &x in &adj[&a] {
        if interior.contains(&x) {
            parent.insert(x, a);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if y != a && in_h.contains(&y) {
                let mut path = vec![y, x];
                let mut cur = x;
                while parent[&cur] != a {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if interior.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a 2-connected block has two attachments")
}
