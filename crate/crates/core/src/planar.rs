//! Embedded planar graphs stored as rotation systems.
//!
//! `rot[v]` lists the neighbours of `v` in cyclic embedding order. A face is
//! traced by arriving at `v` from `u` and leaving towards the neighbour that
//! follows `u` in `rot[v]`.

use std::collections::{HashMap, VecDeque};

use crate::error::PlanarError;
use crate::lattice::{FaceLattice, VertexId};

/// Header that may precede a planar_code stream.
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Largest vertex count the byte-oriented formats can hold.
pub const MAX_VERTICES: usize = 255;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarGraph {
    rot: Vec<Vec<VertexId>>,
}

/// Boundary walk of one face, as the cyclic sequence of visited vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceCycle(pub Vec<VertexId>);

impl FaceCycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Undirected edges along the boundary, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }
}

impl PlanarGraph {
    /// Validates symmetry, simplicity and connectivity of a rotation system.
    pub fn new(rot: Vec<Vec<VertexId>>) -> Result<Self, PlanarError> {
        let n = rot.len();
        if n == 0 {
            return Err(PlanarError::InvalidRotation("no vertices".into()));
        }
        if n > MAX_VERTICES {
            return Err(PlanarError::TooManyVertices(n));
        }
        for (v, nbrs) in rot.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w as usize >= n {
                    return Err(PlanarError::InvalidRotation(format!("vertex {v} has unknown neighbour {w}")));
                }
                if w as usize == v {
                    return Err(PlanarError::InvalidRotation(format!("loop at {v}")));
                }
                if nbrs[..i].contains(&w) {
                    return Err(PlanarError::InvalidRotation(format!("multi-edge {v}-{w}")));
                }
                if rot[w as usize].iter().filter(|&&x| x as usize == v).count() != 1 {
                    return Err(PlanarError::InvalidRotation(format!("edge {v}-{w} is not symmetric")));
                }
            }
        }
        let g = Self { rot };
        if !g.is_connected_without(&[]) {
            return Err(PlanarError::InvalidRotation("graph is disconnected".into()));
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.rot.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v as usize].len()
    }

    /// Neighbours of `v` in rotation order.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v as usize]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rot
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rot[u as usize].contains(&v)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, nbrs) in self.rot.iter().enumerate() {
            for &v in nbrs {
                if (u as VertexId) < v {
                    out.push((u as VertexId, v));
                }
            }
        }
        out
    }

    fn position(&self, v: VertexId, u: VertexId) -> usize {
        self.rot[v as usize].iter().position(|&x| x == u).expect("symmetric rotation")
    }

    /// Traces every face; each directed edge is used exactly once.
    pub fn trace_faces(&self) -> Result<Vec<FaceCycle>, PlanarError> {
        let faces = self.faces_unchecked();
        let chi = self.num_vertices() as i64 - self.num_edges() as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(PlanarError::NotSphere(chi));
        }
        Ok(faces)
    }

    fn faces_unchecked(&self) -> Vec<FaceCycle> {
        let mut used: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.rot.len() {
            for i in 0..self.rot[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut a, mut ia) = (u, i);
                while !used[a][ia] {
                    used[a][ia] = true;
                    cycle.push(a as VertexId);
                    let b = self.rot[a][ia];
                    let back = self.position(b, a as VertexId);
                    ia = (back + 1) % self.rot[b as usize].len();
                    a = b as usize;
                }
                faces.push(FaceCycle(cycle));
            }
        }
        faces
    }

    fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.rot.len();
        let mut gone = vec![false; n];
        for &r in removed {
            gone[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !gone[v]) else {
            return true;
        };
        let mut seen = gone.clone();
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rot[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count == n - removed.len()
    }

    /// No vertex set of size at most two disconnects the graph.
    pub fn is_three_connected(&self) -> bool {
        let n = self.rot.len();
        if n < 4 {
            return false;
        }
        for a in 0..n {
            if !self.is_connected_without(&[a]) {
                return false;
            }
            for b in (a + 1)..n {
                if !self.is_connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Simple, spherical and 3-connected: the graph of a 3-polytope.
    pub fn is_polyhedral(&self) -> bool {
        self.trace_faces().is_ok() && self.is_three_connected()
    }

    /// Graph with vertex `v` renamed to `perm[v]`, rotations preserved.
    pub fn relabeled(&self, perm: &[VertexId]) -> PlanarGraph {
        let n = self.rot.len();
        let mut rot = vec![Vec::new(); n];
        for (v, nbrs) in self.rot.iter().enumerate() {
            rot[perm[v] as usize] = nbrs.iter().map(|&w| perm[w as usize]).collect();
        }
        PlanarGraph { rot }
    }

    /// Same graph with every rotation reversed.
    pub fn mirrored(&self) -> PlanarGraph {
        PlanarGraph { rot: self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect() }
    }

    /// BFS relabelling from a root dart. Returns the code and the labels
    /// (`labels[v]` is 1-based), aborting early once the code exceeds `bound`.
    fn bfs_code(
        &self,
        root: usize,
        root_slot: usize,
        reverse: bool,
        bound: Option<&[u8]>,
    ) -> Option<(Vec<u8>, Vec<u8>, Vec<usize>)> {
        let n = self.rot.len();
        let mut labels = vec![0u8; n];
        let mut entry = vec![0usize; n];
        let mut queue = VecDeque::with_capacity(n);
        let mut code = Vec::with_capacity(1 + n + 2 * self.num_edges());
        code.push(n as u8);
        labels[root] = 1;
        entry[root] = root_slot;
        queue.push_back(root);
        let mut next_label = 2u8;
        let mut tight = bound.is_some();
        while let Some(u) = queue.pop_front() {
            let deg = self.rot[u].len();
            for t in 0..=deg {
                let sym = if t == deg {
                    0
                } else {
                    let idx = if reverse { (entry[u] + deg - t) % deg } else { (entry[u] + t) % deg };
                    let w = self.rot[u][idx] as usize;
                    if labels[w] == 0 {
                        labels[w] = next_label;
                        next_label = next_label.wrapping_add(1);
                        entry[w] = self.position(w as VertexId, u as VertexId);
                        queue.push_back(w);
                    }
                    labels[w]
                };
                code.push(sym);
                if tight {
                    let b = bound.unwrap();
                    let i = code.len() - 1;
                    match sym.cmp(&b[i]) {
                        std::cmp::Ordering::Less => tight = false,
                        std::cmp::Ordering::Greater => return None,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        Some((code, labels, entry))
    }

    fn canonical_search(&self) -> (Vec<u8>, Vec<(usize, usize, bool)>) {
        let mut best: Option<Vec<u8>> = None;
        let mut roots = Vec::new();
        for v in 0..self.rot.len() {
            for slot in 0..self.rot[v].len() {
                for reverse in [false, true] {
                    if let Some((code, _, _)) = self.bfs_code(v, slot, reverse, best.as_deref()) {
                        if best.as_ref().is_none_or(|b| code < *b) {
                            best = Some(code);
                            roots.clear();
                        }
                        roots.push((v, slot, reverse));
                    }
                }
            }
        }
        (best.expect("nonempty graph"), roots)
    }

    /// Canonical planar code: the smallest BFS code over all root darts and
    /// both orientations. Equal codes mean isomorphic embedded graphs, up to
    /// reflection.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.canonical_search().0
    }

    /// The relabelled graph whose planar code is [`Self::canonical_code`].
    pub fn canonical_form(&self) -> PlanarGraph {
        let (_, roots) = self.canonical_search();
        let (v, slot, reverse) = roots[0];
        self.rooted_relabel(v, slot, reverse)
    }

    fn rooted_relabel(&self, v: usize, slot: usize, reverse: bool) -> PlanarGraph {
        let (_, labels, entry) = self.bfs_code(v, slot, reverse, None).expect("unbounded");
        let n = self.rot.len();
        let mut rot = vec![Vec::new(); n];
        for u in 0..n {
            let deg = self.rot[u].len();
            rot[labels[u] as usize - 1] = (0..deg)
                .map(|t| {
                    let idx = if reverse { (entry[u] + deg - t) % deg } else { (entry[u] + t) % deg };
                    labels[self.rot[u][idx] as usize] as VertexId - 1
                })
                .collect();
        }
        PlanarGraph { rot }
    }

    /// Vertex permutations (`perm[v]` is the image of `v`) induced by the
    /// automorphisms of the embedding, reflections included. For a
    /// 3-connected graph these are all graph automorphisms.
    pub fn automorphisms(&self) -> Vec<Vec<VertexId>> {
        let (_, roots) = self.canonical_search();
        let base = {
            let (v, s, r) = roots[0];
            self.bfs_code(v, s, r, None).unwrap().1
        };
        let mut out: Vec<Vec<VertexId>> = Vec::with_capacity(roots.len());
        for &(v, s, r) in &roots {
            let labels = self.bfs_code(v, s, r, None).unwrap().1;
            // x has the same canonical label under `labels` as g(x) under `base`.
            let mut inverse_base = vec![0usize; labels.len()];
            for (x, &l) in base.iter().enumerate() {
                inverse_base[l as usize - 1] = x;
            }
            let perm: Vec<VertexId> = labels.iter().map(|&l| inverse_base[l as usize - 1] as VertexId).collect();
            if !out.contains(&perm) {
                out.push(perm);
            }
        }
        out.sort();
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.rot.iter().all(|r| r.len() == d)
    }
}

/// Face lattice of a polyhedral graph, facets being the traced faces.
pub fn lattice_from_planar(g: &PlanarGraph) -> Result<FaceLattice, PlanarError> {
    if !g.is_polyhedral() {
        return Err(PlanarError::NotPolyhedral);
    }
    let faces = g.trace_faces()?;
    Ok(FaceLattice::from_facets(3, faces.into_iter().map(|f| f.0))?)
}

/// Rebuilds a coherently oriented rotation system from a 3-lattice.
pub fn planar_from_lattice(l: &FaceLattice) -> Result<PlanarGraph, PlanarError> {
    if l.dim() != 3 {
        return Err(PlanarError::NotPolyhedral);
    }
    let n = l.num_vertices();
    let adj = l.edge_graph();

    // Order the boundary of each 2-face as a cycle.
    let mut cycles: Vec<Vec<VertexId>> = Vec::new();
    for f in l.facets() {
        let mut cyc = vec![f[0]];
        let mut prev = None;
        loop {
            let cur = *cyc.last().unwrap();
            let next = adj[cur as usize].iter().copied().find(|&w| {
                Some(w) != prev && f.binary_search(&w).is_ok() && (cyc.len() < 2 || w != cyc[cyc.len() - 2])
            });
            let Some(next) = next else {
                return Err(PlanarError::NotPolyhedral);
            };
            if next == cyc[0] {
                break;
            }
            if cyc.contains(&next) || cyc.len() > f.len() {
                return Err(PlanarError::NotPolyhedral);
            }
            prev = Some(cur);
            cyc.push(next);
        }
        if cyc.len() != f.len() {
            return Err(PlanarError::NotPolyhedral);
        }
        cycles.push(cyc);
    }

    // Orient faces so every edge is traversed once in each direction.
    let mut edge_faces: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (fi, c) in cycles.iter().enumerate() {
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            edge_faces.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    if edge_faces.values().any(|fs| fs.len() != 2) {
        return Err(PlanarError::NotPolyhedral);
    }
    let directed =
        |c: &[VertexId], a: VertexId, b: VertexId| (0..c.len()).any(|i| c[i] == a && c[(i + 1) % c.len()] == b);
    let mut oriented = vec![false; cycles.len()];
    oriented[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(fi) = queue.pop_front() {
        let c = cycles[fi].clone();
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            for &gj in &edge_faces[&(a.min(b), a.max(b))] {
                if gj == fi {
                    continue;
                }
                if !oriented[gj] {
                    if directed(&cycles[gj], a, b) {
                        cycles[gj].reverse();
                    }
                    oriented[gj] = true;
                    queue.push_back(gj);
                } else if directed(&cycles[gj], a, b) {
                    return Err(PlanarError::NotPolyhedral);
                }
            }
        }
    }

    // A face passing a -> v -> b means b follows a in rot[v].
    let mut succ: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); n];
    for c in &cycles {
        let k = c.len();
        for i in 0..k {
            let (a, v, b) = (c[i], c[(i + 1) % k], c[(i + 2) % k]);
            succ[v as usize].insert(a, b);
        }
    }
    let mut rot = Vec::with_capacity(n);
    for (v, nbrs) in adj.iter().enumerate() {
        let start = nbrs[0];
        let mut order = vec![start];
        let mut cur = start;
        loop {
            let next = *succ[v].get(&cur).ok_or(PlanarError::NotPolyhedral)?;
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
            if order.len() > nbrs.len() {
                return Err(PlanarError::NotPolyhedral);
            }
        }
        if order.len() != nbrs.len() {
            return Err(PlanarError::NotPolyhedral);
        }
        rot.push(order);
    }
    let g = PlanarGraph::new(rot)?;
    if !g.is_polyhedral() {
        return Err(PlanarError::NotPolyhedral);
    }
    Ok(g)
}

/// Writes graphs in planar_code: per graph one byte `n`, then for each
/// vertex its 1-based neighbours in rotation order followed by a 0 byte.
pub fn write_planar_code(graphs: &[PlanarGraph], header: bool) -> Vec<u8> {
    let mut out = Vec::new();
    if header {
        out.extend_from_slice(PLANAR_CODE_HEADER);
    }
    for g in graphs {
        out.push(g.num_vertices() as u8);
        for nbrs in &g.rot {
            out.extend(nbrs.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    out
}

/// Reads a planar_code stream, with or without the header.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlanarGraph>, PlanarError> {
    let mut rest = bytes.strip_prefix(PLANAR_CODE_HEADER).unwrap_or(bytes);
    let mut graphs = Vec::new();
    while let Some((&n, tail)) = rest.split_first() {
        let n = n as usize;
        if n == 0 {
            return Err(PlanarError::Format("graph with zero vertices".into()));
        }
        rest = tail;
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let end = rest
                .iter()
                .position(|&b| b == 0)
                .ok_or_else(|| PlanarError::Format(format!("truncated list of vertex {}", v + 1)))?;
            let nbrs: Vec<VertexId> = rest[..end]
                .iter()
                .map(|&b| {
                    if b as usize > n {
                        Err(PlanarError::Format(format!("neighbour {b} out of range")))
                    } else {
                        Ok(b as VertexId - 1)
                    }
                })
                .collect::<Result<_, _>>()?;
            rot.push(nbrs);
            rest = &rest[end + 1..];
        }
        graphs.push(PlanarGraph::new(rot)?);
    }
    Ok(graphs)
}

/// One-skeleton of the antiprism over a `k`-gon.
pub fn antiprism_graph(k: usize) -> Result<PlanarGraph, PlanarError> {
    planar_from_lattice(&crate::lattice::antiprism(k)?)
}

pub fn octahedron_graph() -> PlanarGraph {
    planar_from_lattice(&crate::lattice::octahedron()).expect("octahedron is polyhedral")
}
