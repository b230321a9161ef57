//! Octahedrites: 4-regular polyhedral graphs with only triangles and
//! quadrilaterals as faces.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::OctahedriteError;
use crate::generator::{canonical_codes, graphs_from_codes, SearchParams};
use crate::planar::{antiprism_graph, read_planar_code, write_planar_code, FaceCycle, PlanarGraph};

/// Bumped whenever generator output could change.
pub const GENERATOR_VERSION: &str = "quartic-darts-1";

/// Largest vertex count the catalog builder accepts.
pub const MAX_CATALOG_N: usize = 20;

/// Largest vertex count for the unrestricted quartic search.
pub const MAX_QUARTIC_N: usize = 14;

pub const CHECKS_APPLIED: [&str; 5] =
    ["four_regular", "faces_3_or_4", "three_connected", "sphere_euler", "canonical_dedup"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctahedriteCatalog {
    pub max_n: usize,
    /// Members in canonical form, sorted by canonical code.
    pub by_n: BTreeMap<usize, Vec<PlanarGraph>>,
    pub generator_version: String,
}

/// Sidecar manifest stored next to a planar_code catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub max_n: usize,
    pub counts_by_n: BTreeMap<usize, usize>,
    pub generator_version: String,
    pub checks_applied: Vec<String>,
}

/// Builds the complete catalog for `6 <= n <= max_n`.
pub fn enumerate_octahedrites(max_n: usize) -> Result<OctahedriteCatalog, OctahedriteError> {
    if !(6..=MAX_CATALOG_N).contains(&max_n) {
        return Err(OctahedriteError::LimitExceeded { requested: max_n, min: 6, max: MAX_CATALOG_N });
    }
    let by_n = (6..=max_n).map(|n| (n, graphs_from_codes(&canonical_codes(SearchParams::octahedrites(n))))).collect();
    Ok(OctahedriteCatalog { max_n, by_n, generator_version: GENERATOR_VERSION.to_string() })
}

/// Every face is a triangle or a quadrilateral, every vertex has degree 4,
/// and the graph is polyhedral.
pub fn is_octahedrite(g: &PlanarGraph) -> bool {
    g.is_regular(4)
        && g.is_polyhedral()
        && g.trace_faces().map(|fs| fs.iter().all(|f| f.len() == 3 || f.len() == 4)).unwrap_or(false)
}

impl OctahedriteCatalog {
    pub fn counts_by_n(&self) -> BTreeMap<usize, usize> {
        self.by_n.iter().map(|(&n, gs)| (n, gs.len())).collect()
    }

    pub fn graphs(&self, n: usize) -> &[PlanarGraph] {
        self.by_n.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &PlanarGraph> {
        self.by_n.values().flatten()
    }

    pub fn manifest(&self) -> CatalogManifest {
        CatalogManifest {
            max_n: self.max_n,
            counts_by_n: self.counts_by_n(),
            generator_version: self.generator_version.clone(),
            checks_applied: CHECKS_APPLIED.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// All members as one planar_code stream, ordered by `n` then code.
    pub fn to_planar_code(&self) -> Vec<u8> {
        let all: Vec<PlanarGraph> = self.iter().cloned().collect();
        write_planar_code(&all, true)
    }

    /// Loads a catalog and checks it against its manifest. Members are
    /// re-validated and brought to canonical form.
    pub fn from_parts(bytes: &[u8], manifest: &CatalogManifest) -> Result<Self, OctahedriteError> {
        let mut by_n: BTreeMap<usize, BTreeSet<Vec<u8>>> = (6..=manifest.max_n).map(|n| (n, BTreeSet::new())).collect();
        for g in read_planar_code(bytes)? {
            if !is_octahedrite(&g) {
                return Err(OctahedriteError::Catalog(format!(
                    "member with {} vertices is not an octahedrite",
                    g.num_vertices()
                )));
            }
            let n = g.num_vertices();
            let slot = by_n
                .get_mut(&n)
                .ok_or_else(|| OctahedriteError::Catalog(format!("member with {n} vertices outside manifest range")))?;
            if !slot.insert(g.canonical_code()) {
                return Err(OctahedriteError::Catalog(format!("duplicate member with {n} vertices")));
            }
        }
        let cat = OctahedriteCatalog {
            max_n: manifest.max_n,
            by_n: by_n.iter().map(|(&n, codes)| (n, graphs_from_codes(codes))).collect(),
            generator_version: manifest.generator_version.clone(),
        };
        if cat.counts_by_n() != manifest.counts_by_n {
            return Err(OctahedriteError::Catalog("member counts disagree with manifest".into()));
        }
        Ok(cat)
    }
}

/// Necessary combinatorial conditions for an ideal right-angled realisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityReport {
    pub four_valent: bool,
    pub no_m2: bool,
    pub no_m5: bool,
}

impl RealizabilityReport {
    pub fn all(&self) -> bool {
        self.four_valent && self.no_m2 && self.no_m5
    }
}

fn vertex_mask(f: &FaceCycle) -> u128 {
    f.vertices().iter().fold(0u128, |m, &v| m | 1u128 << v)
}

/// Face indices adjacent along an edge, per face.
fn edge_neighbours(faces: &[FaceCycle]) -> Vec<Vec<usize>> {
    let mut by_edge: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut out = vec![Vec::new(); faces.len()];
    for fs in by_edge.values() {
        if let [a, b] = fs[..] {
            out[a].push(b);
            out[b].push(a);
        }
    }
    out
}

/// Runs the checks. `no_m2` forbids three faces pairwise adjacent along
/// edges without a common vertex; `no_m5` forbids two edge-neighbours of a
/// face meeting in exactly one vertex off that face.
pub fn necessary_realizability_checks(g: &PlanarGraph) -> RealizabilityReport {
    let four_valent = g.is_regular(4);
    let Ok(faces) = g.trace_faces() else {
        return RealizabilityReport { four_valent, no_m2: false, no_m5: false };
    };
    if g.num_vertices() > 128 {
        return RealizabilityReport { four_valent, no_m2: false, no_m5: false };
    }
    let masks: Vec<u128> = faces.iter().map(vertex_mask).collect();
    let nbrs = edge_neighbours(&faces);
    let mut no_m2 = true;
    let mut no_m5 = true;
    for (f, around) in nbrs.iter().enumerate() {
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                let ab = masks[a] & masks[b];
                let adjacent = nbrs[a].contains(&b);
                if adjacent && ab & masks[f] == 0 {
                    no_m2 = false;
                }
                if !adjacent && ab.count_ones() == 1 && ab & masks[f] == 0 {
                    no_m5 = false;
                }
            }
        }
    }
    RealizabilityReport { four_valent, no_m2, no_m5 }
}

/// Prismatic 4-circuits: cyclic face sequences where consecutive faces
/// share an edge and opposite faces are disjoint. With all dihedral angles
/// right, such a circuit cannot occur, so a graph carrying one has no
/// ideal right-angled realisation even when it passes the checks above.
pub fn prismatic_four_circuits(g: &PlanarGraph) -> Vec<[usize; 4]> {
    let Ok(faces) = g.trace_faces() else {
        return Vec::new();
    };
    if g.num_vertices() > 128 {
        return Vec::new();
    }
    let masks: Vec<u128> = faces.iter().map(vertex_mask).collect();
    let nbrs = edge_neighbours(&faces);
    let mut out = Vec::new();
    for f1 in 0..faces.len() {
        for &f2 in &nbrs[f1] {
            for &f4 in &nbrs[f1] {
                // f1 is the smallest index and f2 < f4 fixes the direction.
                if f2 <= f1 || f4 <= f2 || masks[f2] & masks[f4] != 0 {
                    continue;
                }
                for &f3 in &nbrs[f2] {
                    if f3 > f1 && f3 != f4 && nbrs[f4].contains(&f3) && masks[f1] & masks[f3] == 0 {
                        out.push([f1, f2, f3, f4]);
                    }
                }
            }
        }
    }
    out
}

/// Passes the necessary checks and has no prismatic 4-circuit.
pub fn is_right_angled_candidate(g: &PlanarGraph) -> bool {
    necessary_realizability_checks(g).all() && prismatic_four_circuits(g).is_empty()
}

/// `Some(k)` iff `g` is the antiprism over a `k`-gon.
pub fn is_antiprism(g: &PlanarGraph) -> Option<usize> {
    let n = g.num_vertices();
    if n < 6 || !n.is_multiple_of(2) || !g.is_regular(4) {
        return None;
    }
    let k = n / 2;
    let a = antiprism_graph(k).ok()?;
    (a.canonical_code() == g.canonical_code()).then_some(k)
}

/// Outcome of the minimal-face search for quartic polyhedra with a `k`-gon.
#[derive(Clone, Debug)]
pub struct KgonMinimum {
    pub k: usize,
    pub min_f2: usize,
    pub witnesses: Vec<PlanarGraph>,
    /// Every witness is the antiprism over a `k`-gon.
    pub witnesses_are_antiprisms: bool,
    /// Every witness has exactly two `k`-gons and `2k` triangles.
    pub two_kgons_and_2k_triangles: bool,
    /// Graphs with a `k`-gon below the minimum that the checks rejected.
    pub rejected_below: usize,
}

/// Smallest face count of a 4-regular polyhedral graph passing the
/// necessary checks and having a `k`-gonal face, searching up to `max_n`
/// vertices.
pub fn min_faces_with_kgon(k: usize, max_n: usize) -> Result<KgonMinimum, OctahedriteError> {
    if !(3..=6).contains(&k) {
        return Err(OctahedriteError::LimitExceeded { requested: k, min: 3, max: 6 });
    }
    if max_n > MAX_QUARTIC_N {
        return Err(OctahedriteError::LimitExceeded { requested: max_n, min: 6, max: MAX_QUARTIC_N });
    }
    let mut rejected_below = 0;
    for n in 6..=max_n {
        let mut witnesses = Vec::new();
        for g in graphs_from_codes(&canonical_codes(SearchParams::all_quartic(n))) {
            let faces = g.trace_faces()?;
            if !faces.iter().any(|f| f.len() == k) {
                continue;
            }
            if necessary_realizability_checks(&g).all() {
                witnesses.push(g);
            } else {
                rejected_below += 1;
            }
        }
        if witnesses.is_empty() {
            continue;
        }
        let witnesses_are_antiprisms = witnesses.iter().all(|g| is_antiprism(g) == Some(k));
        let two_kgons_and_2k_triangles = witnesses.iter().all(|g| {
            let faces = g.trace_faces().expect("polyhedral");
            let kgons = faces.iter().filter(|f| f.len() == k).count();
            let tris = faces.iter().filter(|f| f.len() == 3).count();
            if k == 3 {
                tris == 2 * k + 2
            } else {
                kgons == 2 && tris == 2 * k
            }
        });
        return Ok(KgonMinimum {
            k,
            min_f2: n + 2,
            witnesses,
            witnesses_are_antiprisms,
            two_kgons_and_2k_triangles,
            rejected_below,
        });
    }
    Err(OctahedriteError::SearchLimitExceeded { k, max_n })
}

/// New facets gained by gluing two facets with `f2_p1`, `f2_p2` two-faces
/// along faces with `face_sizes` edges: both face counts, minus both
/// shared faces' edges, minus the two facets already counted.
pub fn new_facets_from_pair(f2_p1: usize, f2_p2: usize, face_sizes: (usize, usize)) -> i64 {
    f2_p1 as i64 + f2_p2 as i64 - face_sizes.0 as i64 - face_sizes.1 as i64 - 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::octahedron_graph;

    #[test]
    fn small_catalog_counts() {
        let cat = enumerate_octahedrites(10).unwrap();
        let counts: Vec<usize> = (6..=10).map(|n| cat.graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 2]);
        assert_eq!(is_antiprism(&cat.graphs(8)[0]), Some(4));
        assert_eq!(is_antiprism(&cat.graphs(6)[0]), Some(3));
        assert_eq!(is_antiprism(&cat.graphs(9)[0]), None);
    }

    #[test]
    fn limits_are_errors() {
        assert!(matches!(enumerate_octahedrites(5), Err(OctahedriteError::LimitExceeded { .. })));
        assert!(matches!(enumerate_octahedrites(21), Err(OctahedriteError::LimitExceeded { .. })));
        assert!(matches!(min_faces_with_kgon(5, 9), Err(OctahedriteError::SearchLimitExceeded { k: 5, max_n: 9 })));
    }

    #[test]
    fn antiprisms_pass_checks() {
        assert!(necessary_realizability_checks(&octahedron_graph()).all());
        for k in 3..=8 {
            assert!(necessary_realizability_checks(&antiprism_graph(k).unwrap()).all(), "k={k}");
        }
    }

    #[test]
    fn prism_has_prismatic_three_circuit() {
        let prism = crate::planar::planar_from_lattice(
            &crate::lattice::FaceLattice::from_facets(
                3,
                vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 1, 4, 3], vec![1, 2, 5, 4], vec![0, 2, 5, 3]],
            )
            .unwrap(),
        )
        .unwrap();
        let r = necessary_realizability_checks(&prism);
        assert!(!r.four_valent);
        assert!(!r.no_m2);
    }

    #[test]
    fn one_ten_vertex_octahedrite_has_a_prismatic_four_circuit() {
        let cat = enumerate_octahedrites(10).unwrap();
        let ten = cat.graphs(10);
        assert_eq!(ten.len(), 2);
        assert!(ten.iter().all(|g| necessary_realizability_checks(g).all()));
        let circuits: Vec<usize> = ten.iter().map(|g| prismatic_four_circuits(g).len()).collect();
        let auts: Vec<usize> = ten.iter().map(|g| g.automorphisms().len()).collect();
        for (c, a) in circuits.iter().zip(&auts) {
            assert_eq!(*c, if *a == 16 { 1 } else { 0 });
        }
        assert!(prismatic_four_circuits(&octahedron_graph()).is_empty());
        // The square antiprism's two squares are joined only through triangles.
        assert!(is_right_angled_candidate(&antiprism_graph(4).unwrap()));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(new_facets_from_pair(10, 10, (4, 4)), 10);
        assert_eq!(new_facets_from_pair(8, 8, (3, 3)), 8);
        assert_eq!(new_facets_from_pair(12, 10, (4, 4)), 12);
    }

    #[test]
    fn manifest_round_trip() {
        let cat = enumerate_octahedrites(9).unwrap();
        let back = OctahedriteCatalog::from_parts(&cat.to_planar_code(), &cat.manifest()).unwrap();
        assert_eq!(back, cat);
        let mut wrong = cat.manifest();
        wrong.counts_by_n.insert(7, 1);
        assert!(OctahedriteCatalog::from_parts(&cat.to_planar_code(), &wrong).is_err());
    }
}
