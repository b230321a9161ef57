//! Slow, independent enumeration of 3-connected quartic planar graphs.
//!
//! Shares no code with the generator: graphs are built as abstract
//! adjacency matrices in BFS labelling order, planarity is decided by
//! peripheral cycles (a 3-connected graph is planar iff no edge lies on
//! three of them), faces are read off as the peripheral cycles,
//! and isomorphs are removed by brute-force matching.

/// Abstract graph as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaskGraph {
    pub adj: Vec<u64>,
}

impl MaskGraph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    fn all(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Is the subgraph induced on `set` connected (empty counts as connected)?
    fn connected_on(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let mut reach = set & set.wrapping_neg();
        loop {
            let mut grown = reach;
            let mut r = reach;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                grown |= self.adj[v] & set;
            }
            if grown == reach {
                return reach == set;
            }
            reach = grown;
        }
    }

    pub fn is_three_connected(&self) -> bool {
        let n = self.n();
        if n < 4 {
            return false;
        }
        let all = self.all();
        for a in 0..n {
            for b in a..n {
                if !self.connected_on(all & !(1 << a) & !(1 << b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Induced cycles as vertex sequences, each reported once.
    pub fn induced_cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut out = Vec::new();
        // Start at the smallest vertex of the cycle, second vertex smaller than last.
        for s in 0..n {
            let mut path = vec![s as u32];
            self.extend_cycle(s, 1u64 << s, &mut path, &mut out);
        }
        out
    }

    fn extend_cycle(&self, s: usize, used: u64, path: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let last = *path.last().unwrap() as usize;
        let higher = self.all() & !((1u64 << (s + 1)) - 1);
        let mut cand = self.adj[last] & higher & !used;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            // w may only touch path vertices at `last` and, when closing, at `s`.
            let inner = used & !(1u64 << last) & !(1u64 << s);
            if self.adj[w] & inner != 0 {
                continue;
            }
            let closes = path.len() >= 2 && self.adj[w] & (1 << s) != 0;
            path.push(w as u32);
            if closes {
                if path[1] < w as u32 {
                    out.push(path.clone());
                }
            } else {
                self.extend_cycle(s, used | (1 << w), path, out);
            }
            path.pop();
        }
    }

    /// Induced cycles whose removal leaves the rest connected.
    pub fn peripheral_cycles(&self) -> Vec<Vec<u32>> {
        self.induced_cycles()
            .into_iter()
            .filter(|c| {
                let set = c.iter().fold(0u64, |m, &v| m | 1 << v);
                self.connected_on(self.all() & !set)
            })
            .collect()
    }

    /// For a 3-connected graph: its faces if planar, otherwise `None`.
    pub fn planar_faces(&self) -> Option<Vec<Vec<u32>>> {
        let cycles = self.peripheral_cycles();
        let n = self.n();
        let mut count = vec![vec![0u8; n]; n];
        for c in &cycles {
            for i in 0..c.len() {
                let (a, b) = (c[i] as usize, c[(i + 1) % c.len()] as usize);
                count[a][b] += 1;
                count[b][a] += 1;
                if count[a][b] > 2 {
                    return None;
                }
            }
        }
        Some(cycles)
    }

    fn invariant(&self, faces: &[Vec<u32>]) -> Vec<usize> {
        let mut sizes: Vec<usize> = faces.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut tri: Vec<usize> =
            (0..self.n()).map(|v| faces.iter().filter(|f| f.len() == 3 && f.contains(&(v as u32))).count()).collect();
        tri.sort_unstable();
        sizes.push(usize::MAX);
        sizes.extend(tri);
        sizes
    }
}

/// Brute-force graph isomorphism.
pub fn isomorphic(a: &MaskGraph, b: &MaskGraph) -> bool {
    let n = a.n();
    if n != b.n() {
        return false;
    }
    let mut da: Vec<u32> = a.adj.iter().map(|m| m.count_ones()).collect();
    let mut db: Vec<u32> = b.adj.iter().map(|m| m.count_ones()).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    fn go(a: &MaskGraph, b: &MaskGraph, v: usize, map: &mut Vec<usize>, used: u64) -> bool {
        let n = a.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used & (1 << w) != 0 || a.adj[v].count_ones() != b.adj[w].count_ones() {
                continue;
            }
            let consistent = (0..v).all(|u| (a.adj[v] >> u & 1) == (b.adj[w] >> map[u] & 1));
            if consistent {
                map[v] = w;
                if go(a, b, v + 1, map, used | (1 << w)) {
                    return true;
                }
            }
        }
        map[v] = usize::MAX;
        false
    }
    go(a, b, 0, &mut map, 0)
}

/// Every 4-regular simple graph on `n` vertices in BFS labelling order,
/// passed to `visit`. Each unlabelled connected graph appears at least once.
pub fn for_each_quartic(n: usize, visit: &mut dyn FnMut(&MaskGraph)) {
    assert!((5..=64).contains(&n));
    let mut g = MaskGraph { adj: vec![0; n] };
    fill(&mut g, 0, 1, visit);
}

fn fill(g: &mut MaskGraph, v: usize, next: usize, visit: &mut dyn FnMut(&MaskGraph)) {
    let n = g.n();
    if v == n {
        if next == n {
            visit(g);
        }
        return;
    }
    if v >= next {
        return; // disconnected
    }
    let need = 4 - g.adj[v].count_ones() as usize;
    // Existing candidates: discovered vertices above v with spare degree.
    let existing: Vec<usize> =
        (v + 1..next).filter(|&w| g.adj[v] & (1 << w) == 0 && g.adj[w].count_ones() < 4).collect();
    let mut chosen = Vec::new();
    choose(g, v, next, need, &existing, 0, &mut chosen, visit);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    g: &mut MaskGraph,
    v: usize,
    next: usize,
    need: usize,
    existing: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&MaskGraph),
) {
    let n = g.n();
    // Remaining slots go to brand-new vertices.
    let fresh = need - chosen.len();
    if next + fresh <= n {
        let mut added = Vec::new();
        for &w in chosen.iter() {
            added.push(w);
        }
        for k in 0..fresh {
            added.push(next + k);
        }
        for &w in &added {
            g.adj[v] |= 1 << w;
            g.adj[w] |= 1 << v;
        }
        fill(g, v + 1, next + fresh, visit);
        for &w in &added {
            g.adj[v] &= !(1 << w);
            g.adj[w] &= !(1 << v);
        }
    }
    if chosen.len() == need {
        return;
    }
    for i in from..existing.len() {
        chosen.push(existing[i]);
        choose(g, v, next, need, existing, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// One planar graph per isomorphism class, with its faces.
#[derive(Clone, Debug)]
pub struct OracleGraph {
    pub graph: MaskGraph,
    pub faces: Vec<Vec<u32>>,
}

/// All 3-connected 4-regular planar graphs on `n` vertices whose face
/// lengths satisfy `face_ok`, up to isomorphism.
pub fn quartic_polyhedra(n: usize, face_ok: &dyn Fn(usize) -> bool) -> Vec<OracleGraph> {
    let mut classes: Vec<(Vec<usize>, OracleGraph)> = Vec::new();
    for_each_quartic(n, &mut |g| {
        if !g.is_three_connected() {
            return;
        }
        let Some(faces) = g.planar_faces() else {
            return;
        };
        if faces.len() != n + 2 || !faces.iter().all(|f| face_ok(f.len())) {
            return;
        }
        let inv = g.invariant(&faces);
        if classes.iter().any(|(i, c)| *i == inv && isomorphic(&c.graph, g)) {
            return;
        }
        classes.push((inv, OracleGraph { graph: g.clone(), faces }));
    });
    classes.into_iter().map(|(_, c)| c).collect()
}

/// Octahedrites on `n` vertices according to the oracle.
pub fn octahedrites(n: usize) -> Vec<OracleGraph> {
    quartic_polyhedra(n, &|k| k == 3 || k == 4)
}
