//! Orderly construction of 4-regular plane graphs.
//!
//! A partial map gives vertex `v` the darts `4v..4v+4`, cyclically ordered.
//! The lowest unpaired dart is always filled next, either by a brand new
//! vertex (entered through its slot 0) or by pairing it with another
//! unpaired dart lying on the same open face. Every rooted 4-regular plane
//! map is produced exactly once per orientation, so completeness follows
//! from the BFS labelling argument; duplicates are removed by canonical code.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::lattice::VertexId;
use crate::planar::PlanarGraph;

const NONE: u32 = u32::MAX;

/// Which graphs a search should accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub vertices: usize,
    /// Largest allowed face length.
    pub max_face: usize,
    /// Require exactly `8` triangles and `vertices - 6` quadrilaterals.
    pub octahedrite: bool,
}

impl SearchParams {
    pub fn octahedrites(n: usize) -> Self {
        Self { vertices: n, max_face: 4, octahedrite: true }
    }

    pub fn all_quartic(n: usize) -> Self {
        Self { vertices: n, max_face: n, octahedrite: false }
    }
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Fresh,
    Pair(u32),
}

#[derive(Clone)]
struct State {
    p: SearchParams,
    alpha: Vec<u32>,
    nv: usize,
    adj: Vec<u64>,
    closed: [usize; 2],
}

#[inline]
fn sigma(d: u32) -> u32 {
    (d & !3) | ((d + 1) & 3)
}

impl State {
    fn new(p: SearchParams) -> Self {
        let n = p.vertices;
        Self { p, alpha: vec![NONE; 4 * n], nv: 1, adj: vec![0; n], closed: [0, 0] }
    }

    #[inline]
    fn phi(&self, d: u32) -> u32 {
        let a = self.alpha[d as usize];
        if a == NONE {
            sigma(d)
        } else {
            sigma(a)
        }
    }

    fn orbit(&self, d: u32, out: &mut Vec<u32>) {
        out.clear();
        let mut x = d;
        loop {
            out.push(x);
            x = self.phi(x);
            if x == d {
                break;
            }
        }
    }

    /// Checks the face through `d`. Returns the counter slot of a newly
    /// closed triangle or quadrilateral, `Some(None)` if fine, `None` if dead.
    fn check_face(&self, d: u32, buf: &mut Vec<u32>) -> Option<Option<usize>> {
        self.orbit(d, buf);
        let Some(first_stub) = buf.iter().position(|&x| self.alpha[x as usize] == NONE) else {
            let len = buf.len();
            if len < 3 || len > self.p.max_face {
                return None;
            }
            let mut seen = 0u64;
            for &x in buf.iter() {
                let bit = 1u64 << (x / 4);
                if seen & bit != 0 {
                    return None;
                }
                seen |= bit;
            }
            if self.p.octahedrite {
                let slot = len - 3;
                let cap = if slot == 0 { 8 } else { self.p.vertices - 6 };
                if self.closed[slot] + 1 > cap {
                    return None;
                }
            }
            return Some(if len <= 4 { Some(len - 3) } else { None });
        };
        // Runs of paired darts between stubs must fit in one face.
        let k = buf.len();
        let mut i = 0;
        while i < k {
            let x = buf[(first_stub + i) % k];
            i += 1;
            if self.alpha[x as usize] != NONE {
                continue;
            }
            let mut seen = 1u64 << (x / 4);
            let mut run = 0;
            while i < k {
                let y = buf[(first_stub + i) % k];
                if self.alpha[y as usize] == NONE {
                    break;
                }
                run += 1;
                i += 1;
                let head = self.alpha[y as usize] / 4;
                let bit = 1u64 << head;
                if seen & bit != 0 {
                    return None;
                }
                seen |= bit;
            }
            if run + 1 > self.p.max_face {
                return None;
            }
        }
        Some(None)
    }

    fn moves(&self, d: u32, buf: &mut Vec<u32>) -> Vec<Move> {
        let mut out = Vec::new();
        if self.nv < self.p.vertices {
            out.push(Move::Fresh);
        }
        let v = (d / 4) as usize;
        self.orbit(d, buf);
        for &e in buf.iter() {
            let w = (e / 4) as usize;
            if e != d && self.alpha[e as usize] == NONE && w != v && self.adj[v] & (1u64 << w) == 0 {
                out.push(Move::Pair(e));
            }
        }
        out
    }

    fn link(&mut self, d: u32, e: u32) {
        self.alpha[d as usize] = e;
        self.alpha[e as usize] = d;
        let (v, w) = ((d / 4) as usize, (e / 4) as usize);
        self.adj[v] |= 1u64 << w;
        self.adj[w] |= 1u64 << v;
    }

    fn unlink(&mut self, d: u32, e: u32) {
        self.alpha[d as usize] = NONE;
        self.alpha[e as usize] = NONE;
        let (v, w) = ((d / 4) as usize, (e / 4) as usize);
        self.adj[v] &= !(1u64 << w);
        self.adj[w] &= !(1u64 << v);
    }

    /// Applies a move; returns the closed-face slots to undo, or `None` if
    /// the resulting partial map is dead (already undone).
    fn apply(&mut self, d: u32, m: Move, buf: &mut Vec<u32>) -> Option<Vec<usize>> {
        let e = match m {
            Move::Fresh => {
                let e = 4 * self.nv as u32;
                self.nv += 1;
                e
            }
            Move::Pair(e) => e,
        };
        self.link(d, e);
        let mut closed = Vec::new();
        let mut ok = true;
        for start in [d, e] {
            if start == e {
                self.orbit(d, buf);
                if buf.contains(&e) {
                    break;
                }
            }
            match self.check_face(start, buf) {
                None => {
                    ok = false;
                    break;
                }
                Some(Some(slot)) => {
                    self.closed[slot] += 1;
                    closed.push(slot);
                }
                Some(None) => {}
            }
        }
        if ok {
            Some(closed)
        } else {
            self.undo(d, m, &closed);
            None
        }
    }

    fn undo(&mut self, d: u32, m: Move, closed: &[usize]) {
        for &s in closed {
            self.closed[s] -= 1;
        }
        let e = self.alpha[d as usize];
        self.unlink(d, e);
        if let Move::Fresh = m {
            self.nv -= 1;
        }
    }

    fn next_open(&self, from: u32) -> u32 {
        let mut d = from;
        while (d as usize) < 4 * self.nv && self.alpha[d as usize] != NONE {
            d += 1;
        }
        d
    }

    fn to_graph(&self) -> PlanarGraph {
        let rot = (0..self.nv).map(|v| (0..4).map(|i| self.alpha[4 * v + i] / 4 as VertexId).collect()).collect();
        PlanarGraph::new(rot).expect("generator produces valid rotations")
    }

    fn search(&mut self, from: u32, buf: &mut Vec<u32>, sink: &mut BTreeSet<Vec<u8>>) {
        let d = self.next_open(from);
        if d as usize == 4 * self.nv {
            if self.nv == self.p.vertices {
                let g = self.to_graph();
                if g.is_three_connected() {
                    sink.insert(g.canonical_code());
                }
            }
            return;
        }
        for m in self.moves(d, buf) {
            if let Some(closed) = self.apply(d, m, buf) {
                self.search(d + 1, buf, sink);
                self.undo(d, m, &closed);
            }
        }
    }

    /// Move sequences reaching `depth` filled darts, in search order.
    fn prefixes(
        &mut self,
        from: u32,
        depth: usize,
        path: &mut Vec<Move>,
        buf: &mut Vec<u32>,
        out: &mut Vec<Vec<Move>>,
    ) {
        let d = self.next_open(from);
        if path.len() == depth || d as usize == 4 * self.nv {
            out.push(path.clone());
            return;
        }
        for m in self.moves(d, buf) {
            if let Some(closed) = self.apply(d, m, buf) {
                path.push(m);
                self.prefixes(d + 1, depth, path, buf, out);
                path.pop();
                self.undo(d, m, &closed);
            }
        }
    }
}

/// Canonical codes of every 3-connected 4-regular plane graph matching `p`.
/// The result does not depend on the number of rayon workers.
pub fn canonical_codes(p: SearchParams) -> BTreeSet<Vec<u8>> {
    assert!(p.vertices <= 64, "adjacency masks hold at most 64 vertices");
    if p.vertices < 6 {
        // The octahedron is the smallest simple 4-regular plane graph.
        return BTreeSet::new();
    }
    let mut root = State::new(p);
    let mut buf = Vec::new();
    let mut prefixes = Vec::new();
    root.prefixes(0, 10, &mut Vec::new(), &mut buf, &mut prefixes);
    prefixes
        .par_iter()
        .map(|prefix| {
            let mut st = State::new(p);
            let mut buf = Vec::new();
            let mut from = 0;
            for &m in prefix {
                let d = st.next_open(from);
                st.apply(d, m, &mut buf).expect("prefix replays");
                from = d + 1;
            }
            let mut sink = BTreeSet::new();
            st.search(from, &mut buf, &mut sink);
            sink
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Decodes canonical codes back into graphs, in code order.
pub fn graphs_from_codes(codes: &BTreeSet<Vec<u8>>) -> Vec<PlanarGraph> {
    codes
        .iter()
        .map(|c| crate::planar::read_planar_code(c).expect("canonical code is planar code").pop().expect("one graph"))
        .collect()
}
