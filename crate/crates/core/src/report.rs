//! Verification bundles and family sweeps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::{certify_4_critical, certify_4_critical_with, optimal_coloring, Coloring, CriticalityReport};
use crate::constructors::{
    grotzsch_class, octahedron, octahedron_minus, ConstructError, FamilySpec, MultiwheelSpec, ProjectiveSpec,
    SectionType,
};
use crate::graph::io::to_graph6;
use crate::graph::{canonical_form, is_isomorphic, Edge, Graph, Vertex};
use crate::minors::{minor_bracket_report, MinorWitness};
use crate::topology::{
    certify_projective_quadrangulation, edge_quadrilateral_condition, is_planar, validate_embedding, Embedding,
    Kuratowski,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Color,
    Critical,
    Planar,
    Quad,
    Bracket,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Color, Check::Critical, Check::Planar, Check::Quad, Check::Bracket];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Color => "color",
            Check::Critical => "critical",
            Check::Planar => "planar",
            Check::Quad => "quad",
            Check::Bracket => "bracket",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    /// graph6 of the canonically relabeled graph.
    pub canonical_graph6: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub two_n_minus_2: bool,
}

impl Identity {
    pub fn of(g: &Graph) -> Identity {
        Identity {
            canonical_graph6: to_graph6(&canonical_form(g).graph()),
            graph6: to_graph6(g),
            n: g.vertex_count(),
            m: g.edge_count(),
            two_n_minus_2: g.is_2n_minus_2(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub spec: Option<String>,
    pub tool: String,
    pub version: String,
    /// Seconds since the Unix epoch; excluded from the hash.
    pub timestamp: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColorSection {
    pub chromatic_number: usize,
    pub coloring: Coloring,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlanaritySection {
    pub planar: bool,
    /// One face list per component.
    pub embeddings: Vec<Vec<Vec<Vertex>>>,
    pub witness: Option<Kuratowski>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadSection {
    /// Where the embedding came from: supplied, constructor, or transported
    /// from the Grötzsch class through an isomorphism.
    pub source: Option<String>,
    pub embedding: Option<Embedding>,
    pub certified: bool,
    pub quadrilateral_condition: bool,
    pub failing_edges: Vec<Edge>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketSection {
    pub holds: bool,
    pub o_minus_witness: Option<MinorWitness>,
    pub o_witness: Option<MinorWitness>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationBundle {
    pub provenance: Provenance,
    pub identity: Identity,
    pub graph: Graph,
    pub color: Option<ColorSection>,
    pub criticality: Option<CriticalityReport>,
    pub planarity: Option<PlanaritySection>,
    pub quadrangulation: Option<QuadSection>,
    pub bracket: Option<BracketSection>,
    /// Requested check -> whether the claim holds.
    pub verdicts: BTreeMap<Check, bool>,
    pub hash: String,
}

impl VerificationBundle {
    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    /// SHA-256 of the bundle with the timestamp and hash cleared.
    pub fn compute_hash(&self) -> String {
        let mut copy = self.clone();
        copy.provenance.timestamp = None;
        copy.hash = String::new();
        let bytes = serde_json::to_vec(&copy).expect("bundle serializes");
        hex::encode(Sha256::digest(bytes))
    }

    /// Re-checks every certificate in the bundle from scratch.
    pub fn revalidate(&self) -> Result<(), String> {
        let g = &self.graph;
        if self.hash != self.compute_hash() {
            return Err("hash mismatch".into());
        }
        if Identity::of(g) != self.identity {
            return Err("identity does not match graph".into());
        }
        if let Some(c) = &self.color {
            if !c.coloring.is_proper(g, c.chromatic_number) {
                return Err("coloring is not proper".into());
            }
        }
        if let Some(r) = &self.criticality {
            r.verify(g)?;
        }
        if let Some(p) = &self.planarity {
            if let Some(w) = &p.witness {
                if p.planar || !w.verify(g) {
                    return Err("Kuratowski witness does not verify".into());
                }
            }
            if p.planar {
                let total: usize = p.embeddings.iter().map(Vec::len).sum();
                if p.embeddings.is_empty() && !g.is_empty() || total == 0 && g.edge_count() > 0 {
                    return Err("planar verdict without faces".into());
                }
                for (comp, faces) in g.components().into_iter().zip(&p.embeddings) {
                    let e = Embedding { graph: g.induced(&comp), faces: faces.clone() };
                    let s = validate_embedding(&e).map_err(|e| e.to_string())?;
                    if s.euler_characteristic != 2 {
                        return Err("planar embedding is not spherical".into());
                    }
                }
            }
        }
        if let Some(q) = &self.quadrangulation {
            if let Some(e) = &q.embedding {
                if e.graph != *g {
                    return Err("embedding is for a different graph".into());
                }
                if certify_projective_quadrangulation(e).map_err(|e| e.to_string())? != q.certified {
                    return Err("quadrangulation verdict disagrees with embedding".into());
                }
            }
        }
        if let Some(b) = &self.bracket {
            if let Some(w) = &b.o_minus_witness {
                w.validate(g, &octahedron_minus())?;
            }
            if let Some(w) = &b.o_witness {
                w.validate(g, &octahedron())?;
            }
        }
        Ok(())
    }
}

/// Projective quadrangulation to test: the supplied one, else the Grötzsch
/// class member isomorphic to `g` (if any) relabeled onto `g`.
fn projective_embedding(g: &Graph, supplied: Option<&Embedding>) -> Option<(String, Embedding)> {
    if let Some(e) = supplied {
        return Some(("supplied".into(), e.clone()));
    }
    let n = g.vertex_count();
    // mycielski(C_k) has 2k + 1 vertices with k = 2q + 1
    if n < 7 || (n - 3) % 4 != 0 {
        return None;
    }
    let q = ((n - 3) / 4) as u32;
    let gc = grotzsch_class(q).ok()?;
    let iso = is_isomorphic(&gc.graph, g)?;
    let faces = gc.embedding.faces.iter().map(|f| f.iter().map(|v| iso[v]).collect()).collect();
    Some((format!("grotzsch class q={q}, transported by isomorphism"), Embedding { graph: g.clone(), faces }))
}

pub struct VerifyOptions<'a> {
    pub spec: Option<String>,
    pub checks: &'a [Check],
    /// Embedding to use for the quadrangulation check.
    pub embedding: Option<&'a Embedding>,
    /// Also record χ after contracting every edge.
    pub contractions: bool,
    pub timestamp: bool,
}

pub fn verify(g: &Graph, opts: &VerifyOptions<'_>) -> VerificationBundle {
    let mut verdicts = BTreeMap::new();
    let wants = |c: Check| opts.checks.contains(&c);
    let mut color = None;
    let mut criticality = None;
    if wants(Check::Critical) {
        let r = if opts.contractions {
            certify_4_critical_with(g, &g.edges().collect::<Vec<_>>())
        } else {
            certify_4_critical(g)
        };
        verdicts.insert(Check::Critical, r.is_4_critical());
        criticality = Some(r);
    }
    if wants(Check::Color) {
        let (chromatic_number, coloring) = match &criticality {
            Some(r) => (r.chromatic_number, r.coloring.clone()),
            None => optimal_coloring(g),
        };
        verdicts.insert(Check::Color, chromatic_number == 4);
        color = Some(ColorSection { chromatic_number, coloring });
    }
    let planarity = wants(Check::Planar).then(|| {
        let p = is_planar(g);
        verdicts.insert(Check::Planar, p.is_planar());
        PlanaritySection {
            planar: p.is_planar(),
            embeddings: p.embeddings().unwrap_or_default().iter().map(|e| e.faces.clone()).collect(),
            witness: p.witness().cloned(),
        }
    });
    let quadrangulation = wants(Check::Quad).then(|| {
        let cond = edge_quadrilateral_condition(g);
        let found = projective_embedding(g, opts.embedding);
        let certified = found
            .as_ref()
            .is_some_and(|(_, e)| e.graph == *g && certify_projective_quadrangulation(e).unwrap_or(false));
        verdicts.insert(Check::Quad, certified);
        let (source, embedding) = found.map_or((None, None), |(s, e)| (Some(s), Some(e)));
        QuadSection { source, embedding, certified, quadrilateral_condition: cond.holds, failing_edges: cond.failing }
    });
    let bracket = wants(Check::Bracket).then(|| {
        let r = minor_bracket_report(g, &octahedron_minus(), &octahedron());
        verdicts.insert(Check::Bracket, r.holds);
        BracketSection { holds: r.holds, o_minus_witness: r.h1_in_host, o_witness: r.h2_in_host }
    });
    let timestamp =
        opts.timestamp.then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    let mut bundle = VerificationBundle {
        provenance: Provenance {
            spec: opts.spec.clone(),
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            timestamp,
        },
        identity: Identity::of(g),
        graph: g.clone(),
        color,
        criticality,
        planarity,
        quadrangulation,
        bracket,
        verdicts,
        hash: String::new(),
    };
    bundle.hash = bundle.compute_hash();
    bundle
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plane,
    Grotzsch,
    Projective,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plane" => Ok(Family::Plane),
            "grotzsch" => Ok(Family::Grotzsch),
            "projective" => Ok(Family::Projective),
            _ => Err(format!("unknown family {s:?}; expected plane, grotzsch or projective")),
        }
    }
}

impl Family {
    /// Checks with a claim for this family.
    pub fn expected_checks(self) -> &'static [Check] {
        match self {
            Family::Plane => &[Check::Color, Check::Critical, Check::Planar, Check::Bracket],
            Family::Grotzsch => &[Check::Color, Check::Critical, Check::Quad, Check::Bracket],
            Family::Projective => &[Check::Color, Check::Critical, Check::Bracket],
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepBounds {
    /// Section count for plane multiwheels.
    pub k: usize,
    /// Largest section or satellite order (largest q for the Grötzsch class).
    pub max_q: u32,
    /// Largest central order for projective multiwheels.
    pub max_central: u32,
    pub all_types: bool,
    pub cap: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds { k: 3, max_q: 3, max_central: 1, all_types: false, cap: DEFAULT_CAP }
    }
}

pub const DEFAULT_CAP: usize = 25;

/// Sequences over `alphabet` of length `k`, one per rotation class
/// (the lexicographically least rotation is kept).
fn necklaces<T: Clone + Ord>(alphabet: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    if alphabet.is_empty() || k == 0 {
        return out;
    }
    loop {
        let seq: Vec<T> = idx.iter().map(|&i| alphabet[i].clone()).collect();
        let least = (0..k).all(|r| {
            let rot: Vec<T> = seq[r..].iter().chain(&seq[..r]).cloned().collect();
            seq <= rot
        });
        if least {
            out.push(seq);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < alphabet.len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Specs of `family` within `bounds`, in spec order.
pub fn sweep_specs(family: Family, bounds: &SweepBounds) -> Result<Vec<FamilySpec>, ConstructError> {
    let mut specs = match family {
        Family::Plane => {
            let types: &[SectionType] = if bounds.all_types { &SectionType::ALL } else { &[SectionType::Rr] };
            let alphabet: Vec<(u32, SectionType)> =
                (1..=bounds.max_q).flat_map(|q| types.iter().map(move |&t| (q, t))).collect();
            necklaces(&alphabet, bounds.k)
                .into_iter()
                .map(|s| MultiwheelSpec::new(s).map(FamilySpec::Plane))
                .collect::<Result<Vec<_>, _>>()?
        }
        Family::Grotzsch => (1..=bounds.max_q).map(FamilySpec::Grotzsch).collect(),
        Family::Projective => {
            let mut v = Vec::new();
            for c in 1..=bounds.max_central {
                let alphabet: Vec<u32> = (1..=bounds.max_q).collect();
                for sats in necklaces(&alphabet, 2 * c as usize + 1) {
                    v.push(FamilySpec::Projective(ProjectiveSpec::new(c, sats)?));
                }
            }
            v
        }
    };
    specs.retain(|s| spec_vertex_count(s) <= bounds.cap);
    specs.sort();
    Ok(specs)
}

fn spec_vertex_count(s: &FamilySpec) -> usize {
    match s {
        FamilySpec::Plane(p) => p.vertex_count(),
        FamilySpec::Projective(p) => p.vertex_count(),
        FamilySpec::Grotzsch(q) => 4 * *q as usize + 3,
        _ => usize::MAX,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub chromatic_number: usize,
    pub critical: bool,
    pub planar: Option<bool>,
    pub quad: Option<bool>,
    pub bracket: Option<bool>,
    /// Some claim expected for the family does not hold on this row.
    pub flagged: bool,
    pub error: Option<String>,
}

/// Builds and verifies every spec in parallel; rows come back in spec order.
pub fn sweep(family: Family, specs: &[FamilySpec], checks: &[Check]) -> Vec<SweepRow> {
    let mut checks = checks.to_vec();
    // chi and criticality fill every row
    for c in [Check::Color, Check::Critical] {
        if !checks.contains(&c) {
            checks.push(c);
        }
    }
    let expected = family.expected_checks();
    specs
        .par_iter()
        .map(|spec| {
            let built = match spec.build() {
                Ok(b) => b,
                Err(e) => {
                    return SweepRow {
                        spec: spec.to_string(),
                        n: 0,
                        m: 0,
                        chromatic_number: 0,
                        critical: false,
                        planar: None,
                        quad: None,
                        bracket: None,
                        flagged: true,
                        error: Some(e.to_string()),
                    }
                }
            };
            let opts = VerifyOptions {
                spec: Some(spec.to_string()),
                checks: &checks,
                embedding: built.embedding.as_ref().filter(|e| validate_embedding(e).is_ok_and(|s| s.euler_characteristic == 1)),
                contractions: false,
                timestamp: false,
            };
            let b = verify(&built.graph, &opts);
            let flagged = expected.iter().any(|c| b.verdicts.get(c) == Some(&false));
            SweepRow {
                spec: spec.to_string(),
                n: b.identity.n,
                m: b.identity.m,
                chromatic_number: b.color.as_ref().map_or(0, |c| c.chromatic_number),
                critical: b.verdicts[&Check::Critical],
                planar: b.verdicts.get(&Check::Planar).copied(),
                // no embedding to test is not a failed certificate
                quad: b.quadrangulation.as_ref().filter(|q| q.source.is_some()).map(|q| q.certified),
                bracket: b.verdicts.get(&Check::Bracket).copied(),
                flagged,
                error: None,
            }
        })
        .collect()
}

/// Human-readable table.
pub fn render_table(rows: &[SweepRow]) -> String {
    let yn = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    let width = rows.iter().map(|r| r.spec.len()).max().unwrap_or(4).max(4);
    let mut out = format!(
        "{:<width$}  {:>3}  {:>3}  {:>3}  {:<8}  {:<6}  {:<4}  {:<7}  flag\n",
        "spec", "n", "m", "chi", "critical", "planar", "quad", "bracket"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<width$}  {:>3}  {:>3}  {:>3}  {:<8}  {:<6}  {:<4}  {:<7}  {}\n",
            r.spec,
            r.n,
            r.m,
            r.chromatic_number,
            yn(Some(r.critical)),
            yn(r.planar),
            yn(r.quad),
            yn(r.bracket),
            match (&r.error, r.flagged) {
                (Some(e), _) => format!("! {e}"),
                (None, true) => "!".to_string(),
                (None, false) => String::new(),
            }
        ));
    }
    out
}

pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("row serializes");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

/// Human-readable summary of a bundle, including the per-edge deletion table.
pub fn render_bundle(b: &VerificationBundle) -> String {
    let mut out = String::new();
    if let Some(s) = &b.provenance.spec {
        out.push_str(&format!("spec      {s}\n"));
    }
    let id = &b.identity;
    out.push_str(&format!("graph6    {}\ncanonical {}\nn={} m={} 2n-2={}\n", id.graph6, id.canonical_graph6, id.n, id.m, id.two_n_minus_2));
    if let Some(c) = &b.color {
        out.push_str(&format!("chromatic number {}\n", c.chromatic_number));
    }
    if let Some(r) = &b.criticality {
        out.push_str(&format!("edge-critical {} vertex-critical {}\n", r.edge_critical, r.vertex_critical));
        out.push_str("edge      chi(G-e)\n");
        for w in &r.edges {
            out.push_str(&format!("{:<9} {}\n", w.edge.to_string(), w.chromatic_number));
        }
        for c in &r.contractions {
            out.push_str(&format!("contract {} -> chi {}\n", c.edge, c.chromatic_number));
        }
    }
    if let Some(p) = &b.planarity {
        match &p.witness {
            Some(w) => out.push_str(&format!("non-planar, {:?} subdivision on {:?}\n", w.kind, w.branch_vertices)),
            None => out.push_str(&format!("planar, {} faces\n", p.embeddings.iter().map(Vec::len).sum::<usize>())),
        }
    }
    if let Some(q) = &b.quadrangulation {
        out.push_str(&format!(
            "projective quadrangulation {} ({}); quadrilateral condition {}\n",
            q.certified,
            q.source.as_deref().unwrap_or("no embedding"),
            q.quadrilateral_condition
        ));
    }
    if let Some(br) = &b.bracket {
        out.push_str(&format!(
            "O- minor {}, O minor {}, bracket {}\n",
            br.o_minus_witness.is_some(),
            br.o_witness.is_some(),
            br.holds
        ));
    }
    for (c, v) in &b.verdicts {
        out.push_str(&format!("{:<9} {}\n", c.as_str(), if *v { "PASS" } else { "FAIL" }));
    }
    out.push_str(&format!("sha256    {}\n", b.hash));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklaces_dedupe_rotations() {
        assert_eq!(necklaces(&[1, 2, 3], 3).len(), 11);
        assert_eq!(necklaces(&[1], 3), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn small_cap_gives_no_rows() {
        let b = SweepBounds { cap: 5, ..SweepBounds::default() };
        assert!(sweep_specs(Family::Plane, &b).unwrap().is_empty());
    }

    #[test]
    fn bundle_hash_is_stable() {
        let g = crate::constructors::base_graph().built.graph;
        let opts = VerifyOptions { spec: Some("base".into()), checks: &Check::ALL, embedding: None, contractions: false, timestamp: true };
        let a = verify(&g, &opts);
        let b = verify(&g, &opts);
        assert_eq!(a.hash, b.hash);
        assert!(a.all_pass(), "{:?}", a.verdicts);
        a.revalidate().unwrap();
    }
}
