//! Graded face lattices of combinatorial polytopes.
//!
//! A lattice is stored rank by rank. Every face is identified with its sorted
//! vertex set, which is sound because every polytope handled here is
//! atomistic. Faces are generated from the facets by closing under
//! intersection, then graded by inclusion.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;

/// Dense vertex index, `0..f_0`.
pub type VertexId = u32;

/// Face counts `(f_0, ..., f_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Count of rank-`k` faces, or 0 if `k` is out of range.
    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }

    /// Every entry is at least `n + 1`.
    pub fn is_plausible(&self) -> bool {
        let n = self.dim();
        self.0.iter().all(|&f| f > n)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Location of a face: its rank and its index inside that rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId {
    pub rank: usize,
    pub index: usize,
}

/// Face lattice of a combinatorial `dim`-polytope (the improper faces are
/// implicit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    num_vertices: usize,
    // ranks[r] is sorted; each face is a sorted vertex list.
    ranks: Vec<Vec<Vec<VertexId>>>,
    lookup: HashMap<Vec<VertexId>, FaceId>,
}

impl FaceLattice {
    /// Builds the lattice generated by the given facets.
    ///
    /// Vertex ids may be arbitrary; they are re-indexed densely in ascending
    /// order. Lower faces are all nonempty intersections of facets.
    pub fn from_facets<I, F>(dim: usize, facets: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        if dim < 2 {
            return Err(LatticeError::DimTooSmall(dim));
        }
        let raw: Vec<BTreeSet<VertexId>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        if raw.is_empty() || raw.iter().any(|f| f.is_empty()) {
            return Err(LatticeError::NonGraded("empty facet list or empty facet".into()));
        }

        let ids: BTreeSet<VertexId> = raw.iter().flatten().copied().collect();
        let reindex: HashMap<VertexId, VertexId> = ids.iter().enumerate().map(|(i, &v)| (v, i as VertexId)).collect();
        let num_vertices = ids.len();

        let mut facets: Vec<Vec<VertexId>> = raw
            .iter()
            .map(|f| {
                let mut v: Vec<VertexId> = f.iter().map(|x| reindex[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        facets.sort();
        for w in facets.windows(2) {
            if w[0] == w[1] {
                return Err(LatticeError::DuplicateFacet(w[0].clone()));
            }
        }

        let mut incidence = vec![0usize; num_vertices];
        for f in &facets {
            for &v in f {
                incidence[v as usize] += 1;
            }
        }
        if let Some(v) = incidence.iter().position(|&c| c < dim) {
            return Err(LatticeError::NonGraded(format!(
                "vertex {v} lies in {} facets, fewer than {dim}",
                incidence[v]
            )));
        }

        let family = intersection_closure(&facets);
        let ranks = grade(dim, num_vertices, &facets, family)?;
        Ok(Self::assemble(dim, num_vertices, ranks))
    }

    fn assemble(dim: usize, num_vertices: usize, ranks: Vec<Vec<Vec<VertexId>>>) -> Self {
        let mut lookup = HashMap::new();
        for (rank, faces) in ranks.iter().enumerate() {
            for (index, face) in faces.iter().enumerate() {
                lookup.insert(face.clone(), FaceId { rank, index });
            }
        }
        Self { dim, num_vertices, ranks, lookup }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.ranks.iter().map(Vec::len).collect())
    }

    /// Faces of rank `r`, each a sorted vertex list.
    pub fn faces(&self, rank: usize) -> &[Vec<VertexId>] {
        self.ranks.get(rank).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        self.faces(self.dim - 1)
    }

    pub fn face(&self, id: FaceId) -> &[VertexId] {
        &self.ranks[id.rank][id.index]
    }

    /// Finds the face with exactly this vertex set.
    pub fn find(&self, vertices: &[VertexId]) -> Option<FaceId> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.lookup.get(&key).copied()
    }

    /// Number of rank-`sub_rank` faces contained in the face `id`.
    pub fn sub_face_count(&self, id: FaceId, sub_rank: usize) -> usize {
        if sub_rank > id.rank {
            return 0;
        }
        if sub_rank == id.rank {
            return 1;
        }
        let outer = self.face(id);
        if sub_rank == 0 {
            return outer.len();
        }
        self.faces(sub_rank).iter().filter(|f| is_subset(f, outer)).count()
    }

    /// Facets containing the face with the given vertex set.
    pub fn facets_containing(&self, vertices: &[VertexId]) -> Vec<usize> {
        self.facets().iter().enumerate().filter(|(_, f)| is_subset(vertices, f)).map(|(i, _)| i).collect()
    }

    /// Every edge lies in exactly `dim - 1` facets.
    pub fn is_simple_at_edges(&self) -> bool {
        self.faces(1).iter().all(|e| self.facets_containing(e).len() == self.dim - 1)
    }

    /// Lattice of the faces strictly containing `v`, one rank lower.
    ///
    /// Edges through `v` become the vertices of the figure.
    pub fn vertex_figure(&self, v: VertexId) -> Result<FaceLattice, LatticeError> {
        if (v as usize) >= self.num_vertices {
            return Err(LatticeError::UnknownVertex(v));
        }
        if self.dim < 3 {
            return Err(LatticeError::DimTooSmall(self.dim - 1));
        }
        let edges: Vec<&Vec<VertexId>> = self.faces(1).iter().filter(|e| e.binary_search(&v).is_ok()).collect();
        let image = |face: &[VertexId]| -> Vec<VertexId> {
            edges.iter().enumerate().filter(|(_, e)| is_subset(e, face)).map(|(i, _)| i as VertexId).collect()
        };
        let facets: Vec<Vec<VertexId>> =
            self.facets().iter().filter(|f| f.binary_search(&v).is_ok()).map(|f| image(f)).collect();
        FaceLattice::from_facets(self.dim - 1, facets)
    }

    /// The lattice of a single face, as a polytope of its own.
    pub fn face_lattice(&self, id: FaceId) -> Result<FaceLattice, LatticeError> {
        if id.rank < 2 {
            return Err(LatticeError::DimTooSmall(id.rank));
        }
        let outer = self.face(id);
        let sub: Vec<Vec<VertexId>> = self.faces(id.rank - 1).iter().filter(|f| is_subset(f, outer)).cloned().collect();
        FaceLattice::from_facets(id.rank, sub)
    }

    /// Applies a vertex permutation (`perm[old] = new`).
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<FaceLattice, LatticeError> {
        assert_eq!(perm.len(), self.num_vertices, "permutation length");
        let facets: Vec<Vec<VertexId>> =
            self.facets().iter().map(|f| f.iter().map(|&v| perm[v as usize]).collect()).collect();
        FaceLattice::from_facets(self.dim, facets)
    }

    /// Edge graph adjacency (vertex -> sorted neighbours).
    pub fn edge_graph(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for e in self.faces(1) {
            adj[e[0] as usize].push(e[1]);
            adj[e[1] as usize].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Canonical text form: `dim n`, `vertices m`, then one sorted facet per
    /// line, lines in lexicographic order of their vertex sequences.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\nvertices {}\n", self.dim, self.num_vertices);
        for f in self.facets() {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form written by [`FaceLattice::to_text`].
    ///
    /// Blank lines and lines starting with `#` are ignored. Input vertex ids
    /// are re-indexed, so any integer labels are accepted as long as their
    /// number matches the `vertices` header.
    pub fn from_text(text: &str) -> Result<FaceLattice, LatticeError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let dim = parse_header(lines.next(), "dim")?;
        let m = parse_header(lines.next(), "vertices")?;
        let mut facets = Vec::new();
        for (i, line) in lines.enumerate() {
            let facet: Result<Vec<VertexId>, _> = line.split_whitespace().map(str::parse::<VertexId>).collect();
            let facet = facet.map_err(|e| LatticeError::Parse(format!("facet line {}: {e}", i + 1)))?;
            facets.push(facet);
        }
        let distinct: BTreeSet<VertexId> = facets.iter().flatten().copied().collect();
        if distinct.len() != m {
            return Err(LatticeError::Parse(format!("header declares {m} vertices, facets use {}", distinct.len())));
        }
        FaceLattice::from_facets(dim, facets)
    }
}

fn parse_header(line: Option<&str>, key: &str) -> Result<usize, LatticeError> {
    let line = line.ok_or_else(|| LatticeError::Parse(format!("missing `{key}` line")))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => {
            v.parse().map_err(|e| LatticeError::Parse(format!("bad `{key}` value: {e}")))
        }
        _ => Err(LatticeError::Parse(format!("expected `{key} <int>`, got `{line}`"))),
    }
}

pub(crate) fn is_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub(crate) fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All nonempty intersections of subsets of `facets`.
fn intersection_closure(facets: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let mut seen: HashSet<Vec<VertexId>> = facets.iter().cloned().collect();
    let mut frontier: Vec<Vec<VertexId>> = facets.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for f in facets {
                let y = intersect(x, f);
                if !y.is_empty() && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Vec<VertexId>> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

fn grade(
    dim: usize,
    num_vertices: usize,
    facets: &[Vec<VertexId>],
    family: Vec<Vec<VertexId>>,
) -> Result<Vec<Vec<Vec<VertexId>>>, LatticeError> {
    // family is sorted by size, so every proper subface precedes its superface.
    let mut rank: Vec<usize> = Vec::with_capacity(family.len());
    for (i, x) in family.iter().enumerate() {
        let subs: Vec<usize> = (0..i).filter(|&j| family[j].len() < x.len() && is_subset(&family[j], x)).collect();
        if subs.is_empty() {
            if x.len() != 1 {
                return Err(LatticeError::NonGraded(format!("minimal face {x:?} is not a single vertex")));
            }
            rank.push(0);
            continue;
        }
        // Covered faces: maximal members of `subs`.
        let covered: Vec<usize> = subs
            .iter()
            .copied()
            .filter(|&j| {
                !subs.iter().any(|&k| k != j && family[k].len() > family[j].len() && is_subset(&family[j], &family[k]))
            })
            .collect();
        let r = rank[covered[0]] + 1;
        if covered.iter().any(|&j| rank[j] + 1 != r) {
            return Err(LatticeError::NonGraded(format!("face {x:?} covers faces of different ranks")));
        }
        rank.push(r);
    }

    let mut ranks: BTreeMap<usize, Vec<Vec<VertexId>>> = BTreeMap::new();
    for (face, r) in family.into_iter().zip(rank) {
        ranks.entry(r).or_default().push(face);
    }
    if ranks.keys().copied().max() != Some(dim - 1) || ranks.len() != dim {
        return Err(LatticeError::NonGraded(format!("intersection closure has {} ranks, expected {dim}", ranks.len())));
    }
    let mut out: Vec<Vec<Vec<VertexId>>> = ranks.into_values().collect();
    for faces in &mut out {
        faces.sort();
    }
    if out[0].len() != num_vertices {
        return Err(LatticeError::NonGraded("some vertex is not an intersection of facets".into()));
    }
    if out[dim - 1].as_slice() != facets {
        return Err(LatticeError::NonGraded("a facet is contained in another face of top rank".into()));
    }
    if let Some(e) = out[1].iter().find(|e| e.len() != 2) {
        return Err(LatticeError::NonGraded(format!("edge {e:?} does not have 2 vertices")));
    }
    Ok(out)
}

/// Regular 24-cell `{3,4,3}`.
///
/// Vertices are the 24 coordinate permutations of `(±1, ±1, 0, 0)`; the
/// octahedral facets lie on the 8 hyperplanes `±x_i = 1` and the 16
/// hyperplanes `±x_1 ± x_2 ± x_3 ± x_4 = 2`. Coordinates are only used to
/// read off incidences.
pub fn canonical_24cell() -> FaceLattice {
    let mut points: Vec<[i32; 4]> = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let mut p = [0; 4];
                    p[i] = si;
                    p[j] = sj;
                    points.push(p);
                }
            }
        }
    }
    points.sort();

    let mut normals: Vec<([i32; 4], i32)> = Vec::new();
    for i in 0..4 {
        for s in [1, -1] {
            let mut n = [0; 4];
            n[i] = s;
            normals.push((n, 1));
        }
    }
    for mask in 0..16u32 {
        let n = [0, 1, 2, 3].map(|k| if mask & (1 << k) == 0 { 1 } else { -1 });
        normals.push((n, 2));
    }

    let facets = normals.iter().map(|(n, rhs)| {
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| (0..4).map(|k| n[k] * p[k]).sum::<i32>() == *rhs)
            .map(|(i, _)| i as VertexId)
            .collect::<Vec<_>>()
    });
    FaceLattice::from_facets(4, facets).expect("24-cell incidences are a valid lattice")
}

/// Antiprism over a `k`-gon: two `k`-gons joined by a band of `2k` triangles.
///
/// Top vertices are `0..k`, bottom vertices `k..2k`; top `i` is joined to
/// bottom `i` and bottom `i + 1`.
pub fn antiprism(k: usize) -> Result<FaceLattice, LatticeError> {
    if k < 3 {
        return Err(LatticeError::KTooSmall(k));
    }
    let t = |i: usize| (i % k) as VertexId;
    let b = |i: usize| (k + i % k) as VertexId;
    let mut facets: Vec<Vec<VertexId>> = vec![(0..k).map(t).collect(), (0..k).map(b).collect()];
    for i in 0..k {
        facets.push(vec![t(i), t(i + 1), b(i + 1)]);
        facets.push(vec![t(i), b(i), b(i + 1)]);
    }
    FaceLattice::from_facets(3, facets)
}

/// Regular octahedron on the vertices `±e_i` (`+e_i = 2i`, `-e_i = 2i + 1`).
pub fn octahedron() -> FaceLattice {
    let facets = (0..8u32).map(|mask| (0..3u32).map(|i| 2 * i + ((mask >> i) & 1)).collect::<Vec<_>>());
    FaceLattice::from_facets(3, facets).expect("octahedron")
}

/// The `n`-simplex: all `n`-subsets of `n + 1` vertices.
pub fn simplex(n: usize) -> Result<FaceLattice, LatticeError> {
    let facets = (0..=n as VertexId).map(|skip| (0..=n as VertexId).filter(|&v| v != skip).collect::<Vec<_>>());
    FaceLattice::from_facets(n, facets)
}

/// The `n`-cube on the vertices `{0,1}^n` encoded as bitmasks.
pub fn hypercube(n: usize) -> Result<FaceLattice, LatticeError> {
    if !(2..=16).contains(&n) {
        return Err(LatticeError::DimTooSmall(n));
    }
    let mut facets = Vec::new();
    for axis in 0..n {
        for bit in [0u32, 1] {
            facets.push((0..(1u32 << n)).filter(|v| (v >> axis) & 1 == bit).collect::<Vec<_>>());
        }
    }
    FaceLattice::from_facets(n, facets)
}

/// Whether a rank- and incidence-preserving bijection exists.
///
/// Since a lattice is generated by its facets, this searches for a vertex
/// bijection carrying facets onto facets, pruned by edge adjacency and vertex
/// degree.
pub fn combinatorially_isomorphic(a: &FaceLattice, b: &FaceLattice) -> Result<bool, LatticeError> {
    if a.dim != b.dim {
        return Err(LatticeError::DimMismatch(a.dim, b.dim));
    }
    if a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let n = a.num_vertices;
    let adj_a = a.edge_graph();
    let adj_b = b.edge_graph();
    let sig = |l: &FaceLattice, adj: &[Vec<VertexId>], v: usize| {
        let facets = l.facets().iter().filter(|f| f.binary_search(&(v as VertexId)).is_ok()).count();
        (adj[v].len(), facets)
    };
    let sig_a: Vec<_> = (0..n).map(|v| sig(a, &adj_a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| sig(b, &adj_b, v)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }

    // BFS order over the edge graph of `a` so each vertex after the first
    // has an already-mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &adj_a[v] {
                if !placed[w as usize] {
                    placed[w as usize] = true;
                    order.push(w as usize);
                }
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Facets of `a` whose last vertex (in `order`) sits at each position.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in a.facets().iter().enumerate() {
        let last = f.iter().map(|&v| position[v as usize]).max().unwrap();
        closing[last].push(fi);
    }
    let facets_b: HashSet<&[VertexId]> = b.facets().iter().map(Vec::as_slice).collect();

    struct Search<'a> {
        order: &'a [usize],
        adj_a: &'a [Vec<VertexId>],
        adj_b: &'a [Vec<VertexId>],
        sig_a: &'a [(usize, usize)],
        sig_b: &'a [(usize, usize)],
        closing: &'a [Vec<usize>],
        facets_a: &'a [Vec<VertexId>],
        facets_b: &'a HashSet<&'a [VertexId]>,
        map: Vec<Option<VertexId>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            let anchor = self.adj_a[v].iter().find_map(|&u| self.map[u as usize]);
            let candidates: Vec<VertexId> = match anchor {
                Some(img) => self.adj_b[img as usize].clone(),
                None => (0..self.adj_b.len() as VertexId).collect(),
            };
            for w in candidates {
                if self.used[w as usize] || self.sig_b[w as usize] != self.sig_a[v] {
                    continue;
                }
                let consistent = self.adj_a[v].iter().all(|&u| match self.map[u as usize] {
                    Some(img) => self.adj_b[w as usize].binary_search(&img).is_ok(),
                    None => true,
                });
                if !consistent {
                    continue;
                }
                // Mapped non-neighbours must stay non-neighbours.
                let mapped_neighbours = self.adj_a[v].iter().filter(|&&u| self.map[u as usize].is_some()).count();
                let image_neighbours = self.adj_b[w as usize].iter().filter(|&&x| self.used[x as usize]).count();
                if mapped_neighbours != image_neighbours {
                    continue;
                }
                self.map[v] = Some(w);
                self.used[w as usize] = true;
                let facets_ok = self.closing[depth].iter().all(|&fi| {
                    let mut img: Vec<VertexId> =
                        self.facets_a[fi].iter().map(|&x| self.map[x as usize].unwrap()).collect();
                    img.sort_unstable();
                    self.facets_b.contains(img.as_slice())
                });
                if facets_ok && self.run(depth + 1) {
                    return true;
                }
                self.map[v] = None;
                self.used[w as usize] = false;
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        adj_a: &adj_a,
        adj_b: &adj_b,
        sig_a: &sig_a,
        sig_b: &sig_b,
        closing: &closing,
        facets_a: a.facets(),
        facets_b: &facets_b,
        map: vec![None; n],
        used: vec![false; n],
    };
    Ok(search.run(0))
}
