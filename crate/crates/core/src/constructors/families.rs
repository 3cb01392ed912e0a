use std::collections::{BTreeMap, BTreeSet};

use super::{cycle, wheel, Built, ConstructError, MultiwheelSpec, ProjectiveSpec, SectionType};
use crate::graph::{sum_mod_two, Edge, Graph, IdentificationMap, Role, SumConfiguration, Vertex};
use crate::topology::{is_planar, Embedding};

fn v(i: usize) -> Vertex {
    Vertex(i as u32)
}

/// One constituent wheel of a ring sum. `c` is glued to the shared central
/// vertex, `left` to the previous section's `right`. The wheel loses the
/// edges `c-left` and `c-right`.
struct Section {
    wheel: Graph,
    hub: Vertex,
    c: Vertex,
    left: Vertex,
    right: Vertex,
}

/// Rim vertex `j` of a wheel from [`wheel`].
fn rim(j: usize) -> Vertex {
    v(j + 1)
}

fn section(q: u32, t: SectionType) -> Section {
    let k = 2 * q as usize + 1;
    let wheel = wheel(k).expect("odd order at least 3");
    let hub = v(0);
    let (c, left, right) = match t {
        SectionType::Rr => (rim(0), rim(k - 1), rim(1)),
        SectionType::Ss => (hub, rim(0), rim(1)),
        SectionType::Sr => (rim(0), hub, rim(1)),
        SectionType::Rs => (rim(0), rim(k - 1), hub),
    };
    Section { wheel, hub, c, left, right }
}

struct Ring {
    configuration: SumConfiguration,
    graph: Graph,
    losses: Vec<usize>,
    ghosts: BTreeSet<Edge>,
}

/// Sums the sections around a shared central vertex, each right port glued
/// to the next section's left port, cyclically.
fn glue_ring(sections: &[Section]) -> Result<Ring, ConstructError> {
    let first = &sections[0];
    let mut configuration = SumConfiguration::new(first.wheel.unlabeled());
    let mut acc = first.wheel.unlabeled();
    let (center, first_left) = (first.c, first.left);
    let mut prev_right = first.right;
    let mut hubs = vec![first.hub];
    let last = sections.len() - 1;
    for (i, s) in sections.iter().enumerate().skip(1) {
        let mut pairs = vec![(s.c, center), (s.left, prev_right)];
        if i == last {
            pairs.push((s.right, first_left));
        }
        let phi = IdentificationMap::new(pairs)?;
        let out = sum_mod_two(&acc, &s.wheel.unlabeled(), &phi)?;
        prev_right = out.vertex_map[&s.right];
        hubs.push(out.vertex_map[&s.hub]);
        acc = out.graph;
        configuration.push(s.wheel.unlabeled(), phi);
    }
    let replay = configuration.replay()?;
    debug_assert_eq!(replay.graph, acc);
    let mut graph = replay.graph;
    for x in graph.vertices().collect::<Vec<_>>() {
        graph.set_label(x, Role::Rim);
    }
    for h in hubs {
        graph.set_label(h, Role::SectionHub);
    }
    graph.set_label(center, Role::CentralHub);
    Ok(Ring { configuration, graph, losses: replay.losses, ghosts: replay.ghosts })
}

/// Plane multiwheel: the section wheels share one central vertex and each
/// loses exactly two edges. Fails unless n = 2Q+1, m = 4Q, every wheel
/// loses two edges and the result is planar.
pub fn plane_multiwheel(spec: &MultiwheelSpec) -> Result<Built, ConstructError> {
    let sections: Vec<Section> = spec.sections().iter().map(|&(q, t)| section(q, t)).collect();
    let ring = glue_ring(&sections)?;
    let fail = |detail: String| ConstructError::Certificate { spec: spec.to_string(), detail };
    let q = spec.q_total() as usize;
    let (n, m) = (ring.graph.vertex_count(), ring.graph.edge_count());
    if n != 2 * q + 1 || m != 4 * q {
        return Err(fail(format!("expected n = {}, m = {}, got n = {n}, m = {m}", 2 * q + 1, 4 * q)));
    }
    if let Some(i) = ring.losses.iter().position(|&l| l != 2) {
        return Err(fail(format!("wheel {i} lost {} edges instead of 2", ring.losses[i])));
    }
    let planarity = is_planar(&ring.graph);
    let Some(embedding) = planarity.embeddings().and_then(|e| e.first().cloned()) else {
        return Err(fail("result is not planar".into()));
    };
    Ok(Built {
        graph: ring.graph,
        configuration: Some(ring.configuration),
        ghosts: ring.ghosts,
        embedding: Some(embedding),
    })
}

/// The base graph with its designated edges.
#[derive(Clone, Debug)]
pub struct BaseGraph {
    pub built: Built,
    pub central: Vertex,
    /// Central vertex to the first section hub; contracting it gives O⁻.
    pub thick_edge: Edge,
    /// Edge that completes the contraction of `thick_edge` to the octahedron.
    /// Both ends survive that contraction unchanged.
    pub completion_edge: Edge,
    /// One hub-to-rim edge per section, pairwise disjoint; contracting all
    /// three leaves K4.
    pub contraction_triple: [Edge; 3],
}

impl BaseGraph {
    pub fn graph(&self) -> &Graph {
        &self.built.graph
    }
}

/// w₁₃: three W₃ summed around a central vertex.
pub fn base_graph() -> BaseGraph {
    let built = plane_multiwheel(&MultiwheelSpec::uniform(3, 1).expect("valid")).expect("base graph certificates");
    let g = &built.graph;
    let central = g.vertices().find(|&x| g.label(x) == Some(Role::CentralHub)).expect("central vertex");
    let hubs: Vec<Vertex> = g.vertices().filter(|&x| g.label(x) == Some(Role::SectionHub)).collect();
    let e = |a: Vertex, b: Vertex| Edge::new(a, b).expect("distinct");
    // hub i and hub i+1 share exactly one rim vertex, the port between their sections
    let triple: Vec<Edge> = (0..3)
        .map(|i| {
            let (h, h2) = (hubs[i], hubs[(i + 1) % 3]);
            let port = g.neighbors(h).find(|&x| x != central && g.adjacent(h2, x)).expect("shared port");
            e(h, port)
        })
        .collect();
    BaseGraph {
        central,
        thick_edge: e(central, hubs[0]),
        completion_edge: e(hubs[1], hubs[2]),
        contraction_triple: [triple[0], triple[1], triple[2]],
        built,
    }
}

/// Mycielskian: vertex `i` (in identifier order) keeps index `i`, its shadow
/// is `n + i`, the apex is `2n`. Original labels are kept.
pub fn mycielski(g: &Graph) -> Graph {
    let ids: Vec<Vertex> = g.vertices().collect();
    let n = ids.len();
    let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut out = Graph::empty(2 * n + 1);
    let e = |a: usize, b: usize| Edge::new(v(a), v(b)).expect("distinct");
    for ed in g.edges() {
        let (a, b) = (index[&ed.u()], index[&ed.v()]);
        out.insert_edge(e(a, b));
        out.insert_edge(e(a, n + b));
        out.insert_edge(e(n + a, b));
    }
    for (i, &x) in ids.iter().enumerate() {
        out.insert_edge(e(n + i, 2 * n));
        if let Some(r) = g.label(x) {
            out.set_label(v(i), r);
        }
        out.set_label(v(n + i), Role::Shadow);
    }
    out.set_label(v(2 * n), Role::Apex);
    out
}

#[derive(Clone, Debug)]
pub struct GrotzschClass {
    pub graph: Graph,
    /// Quadrangulation of the projective plane.
    pub embedding: Embedding,
}

/// Mycielskian of C_{2q+1} with its projective-plane quadrangulation. Rim
/// `v_i = i`, shadows `u_i = k + i`, apex `z = 2k`; faces
/// `(v_{i-1}, v_i, v_{i+1}, u_i)` and `(z, u_i, v_{i+1}, u_{i+2})`.
pub fn grotzsch_class(q: u32) -> Result<GrotzschClass, ConstructError> {
    if q == 0 {
        return Err(ConstructError::InvalidSpec("Grötzsch class needs q >= 1".into()));
    }
    let k = 2 * q as usize + 1;
    let mut c = cycle(k)?;
    for i in 0..k {
        c.set_label(v(i), Role::Rim);
    }
    let graph = mycielski(&c);
    let (rv, u, z) = (|i: usize| v(i % k), |i: usize| v(k + i % k), v(2 * k));
    let mut faces = Vec::with_capacity(2 * k);
    for i in 0..k {
        faces.push(vec![rv(i + k - 1), rv(i), rv(i + 1), u(i)]);
    }
    for i in 0..k {
        faces.push(vec![z, u(i), rv(i + 1), u(i + 2)]);
    }
    Ok(GrotzschClass { embedding: Embedding { graph: graph.clone(), faces }, graph })
}

/// Construction with a central odd wheel whose rim edges are all annihilated
/// by satellites. Satellite `j` sends its hub to rim vertex `w_j` and rim
/// vertex `r_1` to `w_{j+1}`, so spike `hub-r_1` cancels the central rim
/// edge; spike `hub-r_0` cancels rim edge `r_1-r_2` of the previous
/// satellite. Each satellite therefore loses two adjacent spikes and a rim
/// edge that is not in a triangle with them.
pub fn projective_multiwheel(spec: &ProjectiveSpec) -> Result<Built, ConstructError> {
    let k = 2 * spec.central_q() as usize + 1;
    let central = wheel(k)?.unlabeled();
    let w = |j: usize| rim(j % k);
    let mut configuration = SumConfiguration::new(central.clone());
    let mut acc = central;
    let mut hubs = Vec::with_capacity(k);
    let mut prev_r2: Option<Vertex> = None;
    let mut first_r0: Option<Vertex> = None;
    for (j, &q) in spec.satellites().iter().enumerate() {
        let sat = wheel(2 * q as usize + 1)?.unlabeled();
        let mut pairs = vec![(v(0), w(j)), (rim(1), w(j + 1))];
        if let Some(t) = prev_r2 {
            pairs.push((rim(0), t));
        }
        if j == k - 1 {
            pairs.push((rim(2), first_r0.expect("first satellite placed")));
        }
        let phi = IdentificationMap::new(pairs)?;
        let out = sum_mod_two(&acc, &sat, &phi)?;
        first_r0.get_or_insert(out.vertex_map[&rim(0)]);
        prev_r2 = Some(out.vertex_map[&rim(2)]);
        hubs.push(out.vertex_map[&v(0)]);
        acc = out.graph;
        configuration.push(sat, phi);
    }
    let replay = configuration.replay()?;
    let mut graph = replay.graph;
    for x in graph.vertices().collect::<Vec<_>>() {
        graph.set_label(x, Role::Rim);
    }
    for h in hubs {
        graph.set_label(h, Role::SectionHub);
    }
    graph.set_label(v(0), Role::CentralHub);
    let fail = |detail: String| ConstructError::Certificate { spec: spec.to_string(), detail };
    if !graph.is_2n_minus_2() || graph.vertex_count() != spec.vertex_count() {
        return Err(fail(format!("n = {}, m = {} is not 2Q+1, 2n-2", graph.vertex_count(), graph.edge_count())));
    }
    if replay.losses[0] != k {
        return Err(fail(format!("central wheel lost {} edges instead of {k}", replay.losses[0])));
    }
    if let Some(i) = replay.losses[1..].iter().position(|&l| l != 3) {
        return Err(fail(format!("satellite {i} lost {} edges instead of 3", replay.losses[i + 1])));
    }
    Ok(Built { graph, configuration: Some(configuration), ghosts: replay.ghosts, embedding: None })
}

/// Wheels of the given orders chained so that consecutive wheels share one
/// edge, which annihilates. Wheel `i` is entered at rim edge `r_0-r_1` and
/// left at spike `hub-r_2`. Leaving through a rim edge instead would make
/// any middle wheel lose two rim edges of an odd rim, and then no 3-coloring
/// exists.
pub fn unclosed_sequence(orders: &[u32]) -> Result<Built, ConstructError> {
    let Some((&q0, rest)) = orders.split_first() else {
        return Err(ConstructError::InvalidSpec("unclosed sequence needs at least one wheel".into()));
    };
    if orders.contains(&0) {
        return Err(ConstructError::InvalidSpec("wheel orders must be positive".into()));
    }
    let exit = |_: u32| (v(0), rim(2));
    let first = wheel(2 * q0 as usize + 1)?.unlabeled();
    let mut configuration = SumConfiguration::new(first.clone());
    let mut acc = first;
    let mut out_edge = exit(q0);
    for &q in rest {
        let w = wheel(2 * q as usize + 1)?.unlabeled();
        let phi = IdentificationMap::new([(rim(0), out_edge.0), (rim(1), out_edge.1)])?;
        let out = sum_mod_two(&acc, &w, &phi)?;
        let (a, b) = exit(q);
        out_edge = (out.vertex_map[&a], out.vertex_map[&b]);
        acc = out.graph;
        configuration.push(w, phi);
    }
    let replay = configuration.replay()?;
    Ok(Built { graph: replay.graph, configuration: Some(configuration), ghosts: replay.ghosts, embedding: None })
}

/// Vertex-disjoint sum of wheels (empty identifications).
pub fn disjoint_wheels(orders: &[u32]) -> Result<Built, ConstructError> {
    let Some((&q0, rest)) = orders.split_first() else {
        return Err(ConstructError::InvalidSpec("need at least one wheel".into()));
    };
    let mut configuration = SumConfiguration::new(wheel(2 * q0 as usize + 1)?.unlabeled());
    for &q in rest {
        configuration.push(wheel(2 * q as usize + 1)?.unlabeled(), IdentificationMap::default());
    }
    let replay = configuration.replay()?;
    Ok(Built { graph: replay.graph, configuration: Some(configuration), ghosts: replay.ghosts, embedding: None })
}

/// Two W₃ sections of type rr plus one W₅ section whose central vertex is
/// its hub and whose lost edges are the spikes to rim vertices 0 and 2.
/// Every wheel still loses two edges, but the W₅ splits into a triangle
/// side and a 4-wheel side and the result is non-planar and 3-colorable.
pub fn nonplanar_counterexample() -> Built {
    let mut sections = vec![section(1, SectionType::Rr), section(1, SectionType::Rr)];
    let w5 = wheel(5).expect("valid");
    sections.push(Section { wheel: w5, hub: v(0), c: v(0), left: rim(0), right: rim(2) });
    let ring = glue_ring(&sections).expect("consistent identifications");
    debug_assert!(ring.losses.iter().all(|&l| l == 2));
    Built { graph: ring.graph, configuration: Some(ring.configuration), ghosts: ring.ghosts, embedding: None }
}
