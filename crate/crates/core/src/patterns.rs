//! Small pattern graphs and their embeddings into polyhedral hosts.
//!
//! An embedding is an injective, adjacency-preserving vertex map (host
//! edges between images of non-adjacent pattern vertices are allowed).
//! Face constraints are evaluated against the faces of the host embedding.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::PatternError;
use crate::lattice::VertexId;
use crate::octahedrites::{is_right_angled_candidate, OctahedriteCatalog};
use crate::planar::{octahedron_graph, PlanarGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConstraintKind {
    MustShareFace,
    MustNotShareFace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternVertex {
    pub id: u32,
    pub role: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceConstraint {
    pub edges: [[u32; 2]; 2],
    pub kind: ConstraintKind,
    /// Marks the requirement a claim tries to refute; embeddings are first
    /// collected without it.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub refutes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternGraph {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    /// Which reconstruction this is, for reports.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub reading: String,
    pub vertices: Vec<PatternVertex>,
    pub edges: Vec<[u32; 2]>,
    #[serde(default)]
    pub constraints: Vec<FaceConstraint>,
}

/// Where the auxiliary vertices of the quadrilateral `Q` through `v_i`
/// and `v_j` sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadReading {
    /// `w_1` and `w_2` are new vertices; all of `Q` is present.
    Separate,
    /// `w_1` coincides with the shared-edge endpoint next to `v_i`, so only
    /// the path `v_i w_2 v_j` is new.
    Merged,
}

impl QuadReading {
    pub const ALL: [QuadReading; 2] = [QuadReading::Separate, QuadReading::Merged];

    pub fn label(self) -> &'static str {
        match self {
            QuadReading::Separate => "separate",
            QuadReading::Merged => "merged",
        }
    }
}

fn build(
    name: &str,
    reading: &str,
    roles: &[&str],
    edges: &[[u32; 2]],
    constraints: Vec<FaceConstraint>,
) -> PatternGraph {
    PatternGraph {
        name: name.into(),
        reading: reading.into(),
        vertices: roles.iter().enumerate().map(|(i, r)| PatternVertex { id: i as u32, role: r.to_string() }).collect(),
        edges: edges.to_vec(),
        constraints,
    }
}

fn share(e: [u32; 2], f: [u32; 2]) -> FaceConstraint {
    FaceConstraint { edges: [e, f], kind: ConstraintKind::MustShareFace, refutes: false }
}

fn refuted(e: [u32; 2], f: [u32; 2]) -> FaceConstraint {
    FaceConstraint { refutes: true, ..share(e, f) }
}

/// Constraints making the closed walk `cycle` a host face: every pair of
/// consecutive edges shares a face.
fn face(cycle: &[u32]) -> Vec<FaceConstraint> {
    let k = cycle.len();
    (0..k).map(|i| share([cycle[i], cycle[(i + 1) % k]], [cycle[(i + 1) % k], cycle[(i + 2) % k]])).collect()
}

/// Two triangles on a common edge `ab` plus the edge joining their apexes.
pub fn tau() -> PatternGraph {
    build("tau", "plain subgraph", &["a", "b", "v_i", "v_j"], &[[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]], vec![])
}

/// Quadrilateral `a b c d`, triangle `a b v_j` on its edge `ab`, and the
/// edge from `v_j` to `c = v_i`: a square pyramid missing one lateral edge.
pub fn sigma() -> PatternGraph {
    let (a, b, c, d, vj) = (0, 1, 2, 3, 4);
    build(
        "sigma",
        "plain subgraph",
        &["a", "b", "v_i", "d", "v_j"],
        &[[a, b], [b, c], [c, d], [d, a], [a, vj], [b, vj], [c, vj]],
        vec![],
    )
}

/// Triangles `a b v_i` and `a b v_j` plus the quadrilateral through `v_i`
/// and `v_j`. The refuted pair `(e, e')` is the two `Q`-edges at the
/// auxiliary vertex.
pub fn nu(reading: QuadReading) -> PatternGraph {
    let (a, b, vi, vj) = (0, 1, 2, 3);
    let mut constraints = face(&[a, b, vi]);
    constraints.extend(face(&[b, a, vj]));
    match reading {
        QuadReading::Separate => {
            let (w1, w2) = (4, 5);
            constraints.push(refuted([vi, w1], [w1, vj]));
            build(
                "nu",
                reading.label(),
                &["a", "b", "v_i", "v_j", "w_1", "w_2"],
                &[[a, b], [a, vi], [b, vi], [a, vj], [b, vj], [vi, w1], [w1, vj], [vj, w2], [w2, vi]],
                constraints,
            )
        }
        QuadReading::Merged => {
            let w2 = 4;
            constraints.push(refuted([vj, w2], [w2, vi]));
            build(
                "nu",
                reading.label(),
                &["a=w_1", "b", "v_i", "v_j", "w_2"],
                &[[a, b], [a, vi], [b, vi], [a, vj], [b, vj], [vj, w2], [w2, vi]],
                constraints,
            )
        }
    }
}

/// Quadrilateral `a b c d` with `c = v_i`, triangle `a b v_j`, and the
/// quadrilateral through `v_i` and `v_j`; `(e, e')` as for [`nu`].
pub fn omega(reading: QuadReading) -> PatternGraph {
    let (a, b, c, d, vj) = (0, 1, 2, 3, 4);
    let mut constraints = face(&[a, b, c, d]);
    constraints.extend(face(&[b, a, vj]));
    match reading {
        QuadReading::Separate => {
            let (w1, w2) = (5, 6);
            constraints.push(refuted([c, w1], [w1, vj]));
            build(
                "omega",
                reading.label(),
                &["a", "b", "v_i", "d", "v_j", "w_1", "w_2"],
                &[[a, b], [b, c], [c, d], [d, a], [a, vj], [b, vj], [c, w1], [w1, vj], [vj, w2], [w2, c]],
                constraints,
            )
        }
        QuadReading::Merged => {
            let w2 = 5;
            constraints.push(refuted([vj, w2], [w2, c]));
            build(
                "omega",
                reading.label(),
                &["a", "b=w_1", "v_i", "d", "v_j", "w_2"],
                &[[a, b], [b, c], [c, d], [d, a], [a, vj], [b, vj], [vj, w2], [w2, c]],
                constraints,
            )
        }
    }
}

impl PatternGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.iter().any(|&[x, y]| (x, y) == (u, v) || (x, y) == (v, u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &[u, v] in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    /// The same pattern with every face constraint dropped.
    pub fn unconstrained(&self) -> PatternGraph {
        PatternGraph { constraints: Vec::new(), ..self.clone() }
    }

    /// The same pattern without the constraints marked as refuted.
    pub fn without_refuted(&self) -> PatternGraph {
        PatternGraph { constraints: self.constraints.iter().filter(|c| !c.refutes).cloned().collect(), ..self.clone() }
    }

    /// Checks ids, simplicity, connectivity and constraint edges.
    pub fn validate(&self) -> Result<(), PatternError> {
        let m = self.vertices.len();
        if m == 0 || m > 16 {
            return Err(PatternError::Invalid(format!("pattern must have 1..=16 vertices, got {m}")));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id as usize != i {
                return Err(PatternError::Invalid(format!("vertex ids must be 0..{m} in order")));
            }
        }
        let mut seen = BTreeSet::new();
        for &[u, v] in &self.edges {
            if u as usize >= m || v as usize >= m || u == v {
                return Err(PatternError::Invalid(format!("bad edge [{u}, {v}]")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(PatternError::Invalid(format!("repeated edge [{u}, {v}]")));
            }
        }
        let mut reach = vec![false; m];
        reach[0] = true;
        let mut stack = vec![0u32];
        while let Some(x) = stack.pop() {
            for &[u, v] in &self.edges {
                for (p, q) in [(u, v), (v, u)] {
                    if p == x && !reach[q as usize] {
                        reach[q as usize] = true;
                        stack.push(q);
                    }
                }
            }
        }
        if reach.contains(&false) {
            return Err(PatternError::Invalid("pattern is disconnected".into()));
        }
        for c in &self.constraints {
            for [u, v] in c.edges {
                if !self.has_edge(u, v) {
                    return Err(PatternError::Invalid(format!("constraint edge [{u}, {v}] is not a pattern edge")));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, PatternError> {
        let p: PatternGraph = serde_json::from_str(text).map_err(|e| PatternError::Invalid(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pattern serialises")
    }

    fn constraint_key(&self, perm: &[u32]) -> BTreeSet<(ConstraintKind, [(u32, u32); 2])> {
        self.constraints
            .iter()
            .map(|c| {
                let mut es = c.edges.map(|[u, v]| {
                    let (x, y) = (perm[u as usize], perm[v as usize]);
                    (x.min(y), x.max(y))
                });
                es.sort();
                (c.kind, es)
            })
            .collect()
    }

    /// Vertex permutations preserving edges and constraints.
    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        let m = self.vertices.len();
        let ident: Vec<u32> = (0..m as u32).collect();
        let base = self.constraint_key(&ident);
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(m);
        self.auto_search(&mut perm, &mut vec![false; m], &base, &mut out);
        out
    }

    fn auto_search(
        &self,
        perm: &mut Vec<u32>,
        used: &mut Vec<bool>,
        base: &BTreeSet<(ConstraintKind, [(u32, u32); 2])>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let m = self.vertices.len();
        let v = perm.len();
        if v == m {
            if self.constraint_key(perm) == *base {
                out.push(perm.clone());
            }
            return;
        }
        for w in 0..m {
            if used[w] {
                continue;
            }
            let ok = (0..v).all(|u| self.has_edge(u as u32, v as u32) == self.has_edge(perm[u], w as u32));
            if ok {
                perm.push(w as u32);
                used[w] = true;
                self.auto_search(perm, used, base, out);
                used[w] = false;
                perm.pop();
            }
        }
    }
}

/// Injective vertex map from pattern to host; `map[p]` is the image of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<VertexId>,
}

impl Embedding {
    /// Images of the pattern edges, in pattern edge order.
    pub fn edge_map(&self, p: &PatternGraph) -> Vec<[VertexId; 2]> {
        p.edges.iter().map(|&[u, v]| [self.map[u as usize], self.map[v as usize]]).collect()
    }
}

/// Host data needed for constraint evaluation.
struct Host<'a> {
    g: &'a PlanarGraph,
    /// Face ids on each side of every directed adjacency `(u, v)`.
    faces_of_edge: std::collections::HashMap<(VertexId, VertexId), [usize; 2]>,
}

impl<'a> Host<'a> {
    fn new(g: &'a PlanarGraph) -> Result<Self, PatternError> {
        if !g.is_polyhedral() {
            return Err(PatternError::HostNotPolyhedral);
        }
        let faces = g.trace_faces().expect("polyhedral");
        let mut faces_of_edge: std::collections::HashMap<(VertexId, VertexId), Vec<usize>> = Default::default();
        for (i, f) in faces.iter().enumerate() {
            for e in f.edges() {
                faces_of_edge.entry(e).or_default().push(i);
            }
        }
        Ok(Self { g, faces_of_edge: faces_of_edge.into_iter().map(|(e, fs)| (e, [fs[0], fs[1]])).collect() })
    }

    fn faces(&self, u: VertexId, v: VertexId) -> [usize; 2] {
        self.faces_of_edge[&(u.min(v), u.max(v))]
    }

    fn share_face(&self, e: [VertexId; 2], f: [VertexId; 2]) -> bool {
        let (x, y) = (self.faces(e[0], e[1]), self.faces(f[0], f[1]));
        x.iter().any(|a| y.contains(a))
    }

    fn satisfies(&self, p: &PatternGraph, map: &[VertexId]) -> bool {
        p.constraints.iter().all(|c| {
            let [e, f] = c.edges.map(|[u, v]| [map[u as usize], map[v as usize]]);
            let shared = self.share_face(e, f);
            match c.kind {
                ConstraintKind::MustShareFace => shared,
                ConstraintKind::MustNotShareFace => !shared,
            }
        })
    }
}

fn search_order(p: &PatternGraph) -> Vec<usize> {
    let m = p.vertices.len();
    let deg = p.degrees();
    let start = (0..m).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap();
    let mut order = vec![start];
    let mut placed = vec![false; m];
    placed[start] = true;
    while order.len() < m {
        // Most already-placed neighbours first.
        let next = (0..m)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| p.has_edge(u as u32, v as u32)).count();
                (links, deg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Every embedding satisfying the constraints, sorted. With
/// `modulo_symmetry`, one representative (the smallest map) per orbit of
/// host automorphisms combined with pattern automorphisms.
pub fn find_embeddings(
    p: &PatternGraph,
    g: &PlanarGraph,
    modulo_symmetry: bool,
) -> Result<Vec<Embedding>, PatternError> {
    p.validate()?;
    let host = Host::new(g)?;
    let m = p.vertices.len();
    let n = g.num_vertices();
    if m > n {
        return Ok(Vec::new());
    }
    let order = search_order(p);
    let deg = p.degrees();
    let mut map = vec![VertexId::MAX; m];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    extend(p, &host, &order, &deg, 0, &mut map, &mut used, &mut found);
    found.sort();
    if !modulo_symmetry {
        return Ok(found);
    }
    let host_auts = g.automorphisms();
    let pat_auts = p.automorphisms();
    let mut reps = Vec::new();
    let mut covered: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    for e in found {
        if covered.contains(&e.map) {
            continue;
        }
        for h in &host_auts {
            for pi in &pat_auts {
                // (h . e . pi)(x) = h[e[pi[x]]]
                let img: Vec<VertexId> = (0..m).map(|x| h[e.map[pi[x] as usize] as usize]).collect();
                covered.insert(img);
            }
        }
        reps.push(e);
    }
    Ok(reps)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &PatternGraph,
    host: &Host,
    order: &[usize],
    deg: &[usize],
    depth: usize,
    map: &mut [VertexId],
    used: &mut [bool],
    found: &mut Vec<Embedding>,
) {
    if depth == order.len() {
        if host.satisfies(p, map) {
            found.push(Embedding { map: map.to_vec() });
        }
        return;
    }
    let v = order[depth];
    let placed: Vec<usize> = order[..depth].iter().copied().filter(|&u| p.has_edge(u as u32, v as u32)).collect();
    let candidates: Vec<VertexId> = match placed.first() {
        Some(&u) => host.g.rotation(map[u]).to_vec(),
        None => (0..host.g.num_vertices() as VertexId).collect(),
    };
    for w in candidates {
        if used[w as usize] || host.g.degree(w) < deg[v] {
            continue;
        }
        if !placed.iter().all(|&u| host.g.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w as usize] = true;
        extend(p, host, order, deg, depth + 1, map, used, found);
        used[w as usize] = false;
    }
    map[v] = VertexId::MAX;
}

/// Hosts on which a pattern was found, with their catalog position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostHit {
    pub n: usize,
    pub index: usize,
    pub embeddings: usize,
    pub orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
    pub hits: Vec<HostHit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEmbeddingReport {
    pub readings: Vec<String>,
    pub hosts_checked: usize,
    pub claims: Vec<ClaimResult>,
}

impl NonEmbeddingReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

/// Catalog members with `n` in `ns` that can be ideal right-angled facets.
fn scoped_hosts(
    catalog: &OctahedriteCatalog,
    ns: std::ops::RangeInclusive<usize>,
) -> Vec<(usize, usize, &PlanarGraph)> {
    ns.flat_map(|n| {
        catalog.graphs(n).iter().enumerate().filter(|(_, g)| is_right_angled_candidate(g)).map(move |(i, g)| (n, i, g))
    })
    .collect()
}

fn hits_for(p: &PatternGraph, hosts: &[(usize, usize, &PlanarGraph)]) -> Result<Vec<HostHit>, PatternError> {
    let mut hits = Vec::new();
    for &(n, index, g) in hosts {
        let all = find_embeddings(p, g, false)?;
        if !all.is_empty() {
            let orbits = find_embeddings(p, g, true)?.len();
            hits.push(HostHit { n, index, embeddings: all.len(), orbits });
        }
    }
    Ok(hits)
}

fn total(hits: &[HostHit]) -> usize {
    hits.iter().map(|h| h.embeddings).sum()
}

/// Mechanically checks the non-embedding claims. Hosts are the catalog
/// members with 8 to 10 vertices that pass the necessary checks and have
/// no prismatic 4-circuit, together with the octahedron where stated.
pub fn verify_non_embedding_claims(catalog: &OctahedriteCatalog) -> Result<NonEmbeddingReport, PatternError> {
    if catalog.max_n < 10 {
        return Err(PatternError::IncompleteCatalog { have: catalog.max_n, need: 10 });
    }
    let octa = octahedron_graph();
    let larger = scoped_hosts(catalog, 7..=10);
    let mut claims = Vec::new();

    let tau_hits = hits_for(&tau(), &larger)?;
    let tau_octa = find_embeddings(&tau(), &octa, false)?.len();
    claims.push(ClaimResult {
        claim: "tau embeds neither in the octahedron nor in any octahedrite with 8 to 10 vertices".into(),
        holds: tau_hits.is_empty() && tau_octa == 0,
        detail: format!("octahedron embeddings: {tau_octa}; larger hosts with an embedding: {}", tau_hits.len()),
        hits: tau_hits,
    });

    let sigma_hits = hits_for(&sigma(), &larger)?;
    let sigma_octa = find_embeddings(&sigma(), &octa, true)?.len();
    claims.push(ClaimResult {
        claim: "sigma embeds in the octahedron in exactly one orbit and in no octahedrite with 8 to 10 vertices".into(),
        holds: sigma_hits.is_empty() && sigma_octa == 1,
        detail: format!("octahedron orbits: {sigma_octa}; larger hosts with an embedding: {}", sigma_hits.len()),
        hits: sigma_hits,
    });

    let mut nu_hits = Vec::new();
    let mut nu_detail = Vec::new();
    for r in QuadReading::ALL {
        let h = hits_for(&nu(r).unconstrained(), &larger)?;
        nu_detail.push(format!("{}: {} host(s)", r.label(), h.len()));
        nu_hits.extend(h);
    }
    claims.push(ClaimResult {
        claim: "nu, in either reading, is not a subgraph of any octahedrite with 8 to 10 vertices".into(),
        holds: nu_hits.is_empty(),
        detail: nu_detail.join("; "),
        hits: nu_hits,
    });

    let mut omega_hits = Vec::new();
    let mut omega_detail = Vec::new();
    let mut omega_free = 0;
    for r in QuadReading::ALL {
        let w = omega(r);
        let free = hits_for(&w.without_refuted(), &larger)?;
        let kept = hits_for(&w, &larger)?;
        omega_free += total(&free);
        omega_detail.push(format!(
            "{}: {} embedding(s) in {} host(s), {} with (e, e') on one face",
            r.label(),
            total(&free),
            free.len(),
            total(&kept)
        ));
        omega_hits.extend(kept);
    }
    claims.push(ClaimResult {
        claim: "omega embeds, and no embedding puts (e, e') on a common face".into(),
        holds: omega_hits.is_empty() && omega_free > 0,
        detail: omega_detail.join("; "),
        hits: omega_hits,
    });

    Ok(NonEmbeddingReport {
        readings: vec![
            format!("tau, sigma: {}", sigma().reading),
            "nu, omega: F_i and F_j are host faces; separate and merged auxiliary vertices; (e, e') = Q-edges at the auxiliary vertex (inferred)".into(),
        ],
        hosts_checked: larger.len(),
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octahedrites::enumerate_octahedrites;
    use crate::planar::antiprism_graph;

    fn sorted_degrees(p: &PatternGraph) -> Vec<usize> {
        let mut d = p.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn shapes() {
        assert_eq!((tau().num_vertices(), tau().num_edges()), (4, 6));
        assert_eq!(sorted_degrees(&sigma()), vec![2, 3, 3, 3, 3]);
        let nu_sep = nu(QuadReading::Separate);
        assert_eq!((nu_sep.num_vertices(), nu_sep.num_edges()), (6, 9));
        let om_sep = omega(QuadReading::Separate);
        assert_eq!((om_sep.num_vertices(), om_sep.num_edges()), (7, 10));
        for r in QuadReading::ALL {
            nu(r).validate().unwrap();
            omega(r).validate().unwrap();
        }
    }

    #[test]
    fn json_round_trip() {
        for p in [tau(), sigma(), nu(QuadReading::Merged), omega(QuadReading::Separate)] {
            assert_eq!(PatternGraph::from_json(&p.to_json()).unwrap(), p);
        }
    }

    #[test]
    fn rejects_malformed_patterns() {
        let mut p = tau();
        p.edges.push([0, 0]);
        assert!(p.validate().is_err());
        let mut p = tau();
        p.edges.push([1, 0]);
        assert!(p.validate().is_err());
        let mut p = sigma();
        p.constraints.push(share([0, 2], [2, 3]));
        assert!(p.validate().is_err());
    }

    #[test]
    fn k4_embeds_nowhere_in_a_quartic_polyhedron_but_triangles_do() {
        let octa = octahedron_graph();
        assert!(find_embeddings(&tau(), &octa, false).unwrap().is_empty());
        let tri = build("tri", "", &["x", "y", "z"], &[[0, 1], [1, 2], [2, 0]], vec![]);
        // 8 triangles, 6 labelled embeddings each; the octahedron has no other 3-cycles.
        assert_eq!(find_embeddings(&tri, &octa, false).unwrap().len(), 48);
        assert_eq!(find_embeddings(&tri, &octa, true).unwrap().len(), 1);
    }

    #[test]
    fn face_constraints_use_host_faces() {
        // In the square antiprism the 4-cycle of a square face is a face,
        // the 4-cycle around a vertex's link is not.
        let g = antiprism_graph(4).unwrap();
        let square = build("sq", "", &["p", "q", "r", "s"], &[[0, 1], [1, 2], [2, 3], [3, 0]], face(&[0, 1, 2, 3]));
        let plain = square.unconstrained();
        let faced = find_embeddings(&square, &g, false).unwrap().len();
        let all = find_embeddings(&plain, &g, false).unwrap().len();
        assert_eq!(faced, 2 * 8);
        assert!(all > faced);
    }

    #[test]
    fn sigma_has_one_orbit_in_the_octahedron() {
        assert_eq!(find_embeddings(&sigma(), &octahedron_graph(), true).unwrap().len(), 1);
        assert_eq!(find_embeddings(&sigma(), &octahedron_graph(), false).unwrap().len(), 96);
    }

    #[test]
    fn claims_hold_on_the_small_catalog() {
        let cat = enumerate_octahedrites(10).unwrap();
        let report = verify_non_embedding_claims(&cat).unwrap();
        assert!(report.all_hold(), "{report:?}");
        assert_eq!(report.hosts_checked, 3);
    }

    #[test]
    fn claims_need_ten_vertices() {
        let cat = enumerate_octahedrites(9).unwrap();
        assert!(matches!(verify_non_embedding_claims(&cat), Err(PatternError::IncompleteCatalog { .. })));
    }
}
