mod common;

use std::collections::{BTreeMap, BTreeSet};

use multiwheel::coloring::{certify_4_critical, chromatic_number, k_color, lonely_witness};
use multiwheel::constructors::{
    base_graph, cycle, grotzsch_class, plane_multiwheel, projective_multiwheel, MultiwheelSpec, ProjectiveSpec,
    SectionType,
};
use multiwheel::graph::io::{from_graph6, from_json, to_graph6, to_json};
use multiwheel::graph::{
    canonical_form, contract_edge, delete_edge, delete_vertex, is_isomorphic, split_vertex, sum_mod_two,
    IdentificationMap, SumConfiguration,
};
use multiwheel::minors::has_minor;
use multiwheel::topology::{is_planar, planar_dual, validate_embedding};
use multiwheel::{Edge, Graph, Vertex};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n as u32 {
                for j in i + 1..n as u32 {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn section_type() -> impl Strategy<Value = SectionType> {
    prop_oneof![Just(SectionType::Rr), Just(SectionType::Ss), Just(SectionType::Sr), Just(SectionType::Rs)]
}

fn plane_spec() -> impl Strategy<Value = MultiwheelSpec> {
    prop_oneof![Just(3usize), Just(5usize)].prop_flat_map(|k| {
        proptest::collection::vec((1u32..=2, section_type()), k).prop_map(|s| MultiwheelSpec::new(s).unwrap())
    })
}

fn relabeling(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).map(|i| 2 * i + 7).collect::<Vec<_>>()).prop_shuffle()
}

fn relabel(g: &Graph, img: &[u32]) -> Graph {
    let map: BTreeMap<Vertex, Vertex> = g.vertices().zip(img.iter().map(|&x| Vertex(x))).collect();
    g.relabel(&map).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_relabeling((g, img) in graph_strategy(9).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), relabeling(n))
    })) {
        let h = relabel(&g, &img);
        prop_assert_eq!(canonical_form(&g).graph(), canonical_form(&h).graph());
        let iso = is_isomorphic(&g, &h).expect("relabeling is an isomorphism");
        for e in g.edges() {
            prop_assert!(h.adjacent(iso[&e.u()], iso[&e.v()]));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_and_json_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn sum_edge_count_identity(a in graph_strategy(7), b in graph_strategy(7), seed in any::<u64>()) {
        let na = a.vertex_count();
        let av: Vec<Vertex> = a.vertices().collect();
        let k = (seed as usize) % (b.vertex_count().min(na) + 1);
        let pairs: Vec<(Vertex, Vertex)> = b.vertices().take(k).zip(av.iter().copied().rev()).collect();
        let phi = IdentificationMap::new(pairs).unwrap();
        let out = sum_mod_two(&a, &b, &phi).unwrap();
        let annihilated = out.annihilated.len();
        prop_assert_eq!(out.graph.edge_count() + 2 * annihilated, a.edge_count() + b.edge_count());
        prop_assert_eq!(out.graph.vertex_count(), na + b.vertex_count() - k);
        // the other order gives the same graph up to isomorphism
        let inverse = IdentificationMap::new(phi.iter().map(|(x, y)| (y, x))).unwrap();
        let back = sum_mod_two(&b, &a, &inverse).unwrap();
        prop_assert!(is_isomorphic(&out.graph, &back.graph).is_some());
    }

    #[test]
    fn self_sum_annihilates(g in graph_strategy(8)) {
        let phi = IdentificationMap::new(g.vertices().map(|v| (v, v))).unwrap();
        let out = sum_mod_two(&g, &g, &phi).unwrap();
        prop_assert_eq!(out.graph.edge_count(), 0);
        prop_assert_eq!(out.graph.vertex_count(), g.vertex_count());
    }

    #[test]
    fn contraction_and_deletion_stay_simple(g in graph_strategy(9), pick in any::<prop::sample::Index>()) {
        let edges: Vec<Edge> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let c = contract_edge(&g, e).unwrap();
        prop_assert_eq!(c.vertex_count(), g.vertex_count() - 1);
        let common = g.neighbors(e.u()).filter(|&x| g.adjacent(x, e.v())).count();
        prop_assert_eq!(c.edge_count(), g.edge_count() - 1 - common);
        let d = delete_edge(&g, e).unwrap();
        prop_assert_eq!(d.edge_count(), g.edge_count() - 1);
        let x = e.u();
        let dv = delete_vertex(&g, x).unwrap();
        prop_assert_eq!(dv.edge_count(), g.edge_count() - g.degree(x));
    }

    #[test]
    fn split_invariants(g in graph_strategy(9), pick in any::<prop::sample::Index>(), mask in any::<u32>()) {
        let verts: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 2).collect();
        prop_assume!(!verts.is_empty());
        let w = verts[pick.index(verts.len())];
        let nbrs: Vec<Vertex> = g.neighbors(w).collect();
        let mut first: BTreeSet<Vertex> = nbrs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect();
        first.insert(nbrs[0]);
        if first.len() == nbrs.len() {
            first.remove(&nbrs[nbrs.len() - 1]);
        }
        let (h, w2) = split_vertex(&g, w, &first).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() + 1);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert!(!h.adjacent(w, w2));
        prop_assert_eq!(h.degree(w) + h.degree(w2), g.degree(w));
        // empty part is rejected
        prop_assert!(split_vertex(&g, w, &BTreeSet::new()).is_err());
        prop_assert!(split_vertex(&g, w, &nbrs.iter().copied().collect()).is_err());
    }

    #[test]
    fn chromatic_number_matches_oracle(g in graph_strategy(8)) {
        let chi = chromatic_number(&g);
        prop_assert_eq!(chi, common::brute_chromatic(&g));
        prop_assert!(k_color(&g, chi).unwrap().is_proper(&g, chi));
        if chi > 0 {
            prop_assert!(k_color(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn minor_monotone_under_edge_addition(g in graph_strategy(8), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let verts: Vec<Vertex> = g.vertices().collect();
        let (x, y) = (verts[a.index(verts.len())], verts[b.index(verts.len())]);
        prop_assume!(x != y && !g.adjacent(x, y));
        let h = g.with_edge(Edge::new(x, y).unwrap()).unwrap();
        for p in [multiwheel::constructors::complete(4), multiwheel::constructors::octahedron_minus(), cycle(5).unwrap()] {
            if let Some(w) = has_minor(&g, &p) {
                w.validate(&g, &p).unwrap();
                let w2 = has_minor(&h, &p);
                prop_assert!(w2.is_some());
                w2.unwrap().validate(&h, &p).unwrap();
            }
        }
    }

    #[test]
    fn planar_embeddings_are_spherical(g in graph_strategy(10)) {
        if let Some(embs) = is_planar(&g).embeddings() {
            let mut len_total = 0;
            for e in embs {
                let s = validate_embedding(e).unwrap();
                prop_assert_eq!(s.euler_characteristic, 2);
                len_total += s.face_lengths.iter().map(|(l, c)| l * c).sum::<usize>();
            }
            prop_assert_eq!(len_total, 2 * g.edge_count());
        } else {
            let w = is_planar(&g).witness().cloned().unwrap();
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn plane_multiwheels_certify(spec in plane_spec()) {
        let b = plane_multiwheel(&spec).unwrap();
        let g = &b.graph;
        let q = spec.q_total() as usize;
        prop_assert_eq!((g.vertex_count(), g.edge_count()), (2 * q + 1, 4 * q));
        prop_assert!(g.is_connected());
        let config = b.configuration.as_ref().unwrap();
        let replay = config.replay().unwrap();
        prop_assert_eq!(&replay.graph, g);
        prop_assert!(replay.losses.iter().skip(1).all(|&l| l == 2));
        // deterministic
        prop_assert_eq!(to_graph6(&plane_multiwheel(&spec).unwrap().graph), to_graph6(g));
        prop_assert!(certify_4_critical(g).is_4_critical());
        prop_assert!(is_planar(g).is_planar());
    }
}

#[test]
fn sum_is_associative_over_a_configuration() {
    let b = plane_multiwheel(&MultiwheelSpec::uniform(5, 1).unwrap()).unwrap();
    let config = b.configuration.unwrap();
    let once = config.replay().unwrap().graph;
    let again = config.replay().unwrap().graph;
    assert_eq!(once, again);
    // regrouping: replay a prefix, then continue from it by hand
    let mut prefix = SumConfiguration::new(config.constituents[0].clone());
    for i in 1..3 {
        prefix.push(config.constituents[i].clone(), config.identifications[i - 1].clone());
    }
    let mut acc = prefix.replay().unwrap().graph;
    for i in 3..config.constituents.len() {
        acc = sum_mod_two(&acc, &config.constituents[i], &config.identifications[i - 1]).unwrap().graph;
    }
    assert_eq!(acc, once);
}

#[test]
fn every_vertex_of_critical_outputs_can_be_lonely() {
    let mut graphs = vec![base_graph().built.graph];
    graphs.extend((1..=3).map(|q| grotzsch_class(q).unwrap().graph));
    graphs.push(projective_multiwheel(&ProjectiveSpec::new(1, vec![1, 1, 2]).unwrap()).unwrap().graph);
    let mixed = MultiwheelSpec::new(vec![(1, SectionType::Rr), (2, SectionType::Ss), (1, SectionType::Sr)]).unwrap();
    graphs.push(plane_multiwheel(&mixed).unwrap().graph);
    for g in &graphs {
        for v in g.vertices() {
            let c = lonely_witness(g, v).unwrap_or_else(|| panic!("{v} has no lonely coloring"));
            assert!(c.is_proper(g, 4));
            assert_eq!(c.classes().iter().filter(|cl| cl.contains(&v)).count(), 1);
            assert!(c.classes().iter().any(|cl| cl == &vec![v]));
        }
    }
}

#[test]
fn dual_of_dual_is_primal() {
    for g in [multiwheel::constructors::octahedron(), multiwheel::constructors::complete(4), base_graph().built.graph] {
        let e = is_planar(&g).embeddings().unwrap()[0].clone();
        let d = planar_dual(&e).unwrap();
        let de = is_planar(&d.graph).embeddings().unwrap()[0].clone();
        let dd = planar_dual(&de).unwrap();
        assert!(is_isomorphic(&dd.graph, &g).is_some());
    }
}
