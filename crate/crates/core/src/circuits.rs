//! Facet circuits and the Gram-matrix obstruction for `(4, 0)` circuits.
//!
//! Two facets are adjacent through a ridge (a shared 2-face) or through an
//! ideal vertex (a single shared vertex). A `(k, l)` circuit is a chordless
//! cycle of facets with `k` ridge steps and `l` vertex steps, no three of
//! which have a common face.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CircuitError, IdentityError};
use crate::identities::check_identities;
use crate::lattice::{intersect, FaceId, FaceLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdjacencyKind {
    Ridge,
    Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FacetLink {
    /// Shared 2-face.
    Ridge(FaceId),
    /// Shared vertex and nothing more.
    IdealVertex(FaceId),
}

impl FacetLink {
    pub fn kind(self) -> AdjacencyKind {
        match self {
            FacetLink::Ridge(_) => AdjacencyKind::Ridge,
            FacetLink::IdealVertex(_) => AdjacencyKind::Vertex,
        }
    }

    pub fn shared(self) -> FaceId {
        match self {
            FacetLink::Ridge(f) | FacetLink::IdealVertex(f) => f,
        }
    }
}

/// Labelled adjacency between the facets of a 4-lattice.
#[derive(Clone, Debug)]
pub struct FacetAdjacency {
    links: Vec<Vec<Option<FacetLink>>>,
}

impl FacetAdjacency {
    pub fn new(l: &FaceLattice) -> Result<Self, IdentityError> {
        if l.dim() != 4 {
            return Err(IdentityError::NotFourDimensional(l.dim()));
        }
        let facets = l.facets();
        let m = facets.len();
        let mut links = vec![vec![None; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let common = intersect(&facets[i], &facets[j]);
                let link = match l.find(&common) {
                    Some(id) if id.rank == 2 => Some(FacetLink::Ridge(id)),
                    Some(id) if id.rank == 0 => Some(FacetLink::IdealVertex(id)),
                    _ => None,
                };
                links[i][j] = link;
                links[j][i] = link;
            }
        }
        Ok(Self { links })
    }

    pub fn num_facets(&self) -> usize {
        self.links.len()
    }

    pub fn link(&self, a: usize, b: usize) -> Option<FacetLink> {
        self.links[a][b]
    }

    pub fn neighbours(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.links[a].iter().enumerate().filter(|(_, l)| l.is_some()).map(|(b, _)| b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Circuit {
    /// `[k, l]`.
    #[serde(rename = "type")]
    pub kind: [usize; 2],
    /// Facet indices; the smallest comes first.
    pub facets: Vec<usize>,
    /// `labels[i]` joins `facets[i]` and `facets[i + 1]` (cyclically).
    pub labels: Vec<AdjacencyKind>,
    pub shared_face_ids: Vec<FaceId>,
}

/// All `(k, l)` circuits of `l`, each listed once regardless of starting
/// facet or direction. Sorted by facet sequence.
pub fn find_circuits(lat: &FaceLattice, k: usize, l: usize) -> Result<Vec<Circuit>, CircuitError> {
    let m = k + l;
    if m < 3 {
        return Err(CircuitError::TooShort(m));
    }
    let adj = FacetAdjacency::new(lat)?;
    let facets = lat.facets();
    let mut found: Vec<Circuit> = (0..adj.num_facets())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            let mut path = vec![s];
            extend(&adj, m, &mut path, &mut |cycle| {
                let steps: Vec<FacetLink> =
                    (0..m).map(|i| adj.link(cycle[i], cycle[(i + 1) % m]).expect("cycle step")).collect();
                let ridges = steps.iter().filter(|x| x.kind() == AdjacencyKind::Ridge).count();
                if ridges != k || !no_common_triple(cycle, facets) {
                    return;
                }
                out.push(Circuit {
                    kind: [k, l],
                    facets: cycle.to_vec(),
                    labels: steps.iter().map(|x| x.kind()).collect(),
                    shared_face_ids: steps.iter().map(|x| x.shared()).collect(),
                });
            });
            out
        })
        .collect();
    found.sort();
    Ok(found)
}

// Chordless cycles through path[0], the smallest facet, with path[1] < last.
fn extend(adj: &FacetAdjacency, m: usize, path: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let s = path[0];
    let last = *path.last().unwrap();
    let closing = path.len() + 1 == m;
    let candidates: Vec<usize> = adj.neighbours(last).filter(|&w| w > s && !path.contains(&w)).collect();
    for w in candidates {
        let inner = if path.len() > 1 { &path[1..path.len() - 1] } else { &[][..] };
        if inner.iter().any(|&u| adj.link(u, w).is_some()) {
            continue;
        }
        let touches_start = path.len() > 1 && adj.link(s, w).is_some();
        if touches_start != closing {
            continue;
        }
        path.push(w);
        if closing {
            if path[1] < w {
                emit(path);
            }
        } else {
            extend(adj, m, path, emit);
        }
        path.pop();
    }
}

fn no_common_triple(cycle: &[usize], facets: &[Vec<u32>]) -> bool {
    let m = cycle.len();
    for a in 0..m {
        for b in a + 1..m {
            let ab = intersect(&facets[cycle[a]], &facets[cycle[b]]);
            if ab.is_empty() {
                continue;
            }
            for c in b + 1..m {
                if !intersect(&ab, &facets[cycle[c]]).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

/// The circuit types that cannot occur in an ideal right-angled polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenCircuitReport {
    pub three_zero: Vec<Circuit>,
    pub four_zero: Vec<Circuit>,
    pub two_one: Vec<Circuit>,
}

impl ForbiddenCircuitReport {
    pub fn is_clean(&self) -> bool {
        self.three_zero.is_empty() && self.four_zero.is_empty() && self.two_one.is_empty()
    }
}

/// Searches for `(3, 0)`, `(4, 0)` and `(2, 1)` circuits. The lattice must
/// satisfy the face-count identities first.
pub fn assert_forbidden_circuits(l: &FaceLattice) -> Result<ForbiddenCircuitReport, CircuitError> {
    let ids = check_identities(l)?;
    if !ids.all() {
        return Err(IdentityError::IdentityViolation(format!("{} fail", ids.violations().join(", "))).into());
    }
    Ok(ForbiddenCircuitReport {
        three_zero: find_circuits(l, 3, 0)?,
        four_zero: find_circuits(l, 4, 0)?,
        two_one: find_circuits(l, 2, 1)?,
    })
}

/// Lengths of the common perpendiculars between the two pairs of opposite
/// facets of a `(4, 0)` circuit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramParams {
    rho13: f64,
    rho24: f64,
}

impl GramParams {
    /// Rejects lengths whose hyperbolic cosine rounds to 1, since the
    /// matrix then loses its negative eigenvalues to rounding.
    pub fn new(rho13: f64, rho24: f64) -> Result<Self, CircuitError> {
        let ok = |r: f64| r.is_finite() && r > 0.0 && r.cosh() > 1.0 && r.cosh().is_finite();
        if ok(rho13) && ok(rho24) {
            Ok(Self { rho13, rho24 })
        } else {
            Err(CircuitError::NonPositiveRho(rho13, rho24))
        }
    }

    pub fn rho13(&self) -> f64 {
        self.rho13
    }

    pub fn rho24(&self) -> f64 {
        self.rho24
    }
}

pub type Matrix4 = [[f64; 4]; 4];

/// Unit diagonal, `-cosh rho13` at (1,3), `-cosh rho24` at (2,4), zero
/// elsewhere. Right angles make consecutive normals orthogonal.
pub fn gram_matrix(p: GramParams) -> Matrix4 {
    let mut g = [[0.0; 4]; 4];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    g[0][2] = -p.rho13.cosh();
    g[2][0] = g[0][2];
    g[1][3] = -p.rho24.cosh();
    g[3][1] = g[1][3];
    g
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(m: &Matrix4) -> [f64; 4] {
    let mut a = *m;
    for _sweep in 0..64 {
        let off: f64 = (0..4)
            .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..4).map(|i| a[i][i] * a[i][i]).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= scale * 1e-36 {
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let apq = a[p][q];
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..4 {
                    if r != p && r != q {
                        let (arp, arq) = (a[r][p], a[r][q]);
                        a[r][p] = c * arp - s * arq;
                        a[p][r] = a[r][p];
                        a[r][q] = s * arp + c * arq;
                        a[q][r] = a[r][q];
                    }
                }
            }
        }
    }
    let mut ev = [a[0][0], a[1][1], a[2][2], a[3][3]];
    ev.sort_by(f64::total_cmp);
    ev
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Obstruction {
    /// Closed form `1 +- cosh rho13`, `1 +- cosh rho24`, ascending.
    pub eigenvalues: [f64; 4],
    /// Same spectrum from the Jacobi solver.
    pub numeric_eigenvalues: [f64; 4],
    /// Largest relative disagreement between the two.
    pub max_relative_gap: f64,
    pub negative_count: usize,
    /// Four vectors in a form of signature (4,1) allow at most one
    /// negative Gram eigenvalue.
    pub violates_lorentzian: bool,
}

pub fn closed_form_eigenvalues(p: GramParams) -> [f64; 4] {
    let (a, b) = (p.rho13.cosh(), p.rho24.cosh());
    let mut ev = [1.0 + a, 1.0 - a, 1.0 + b, 1.0 - b];
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn relative_gap(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

pub fn circuit_40_obstruction(p: GramParams) -> Obstruction {
    let eigenvalues = closed_form_eigenvalues(p);
    let numeric_eigenvalues = symmetric_eigenvalues(&gram_matrix(p));
    let max_relative_gap =
        eigenvalues.iter().zip(&numeric_eigenvalues).map(|(&x, &y)| relative_gap(x, y)).fold(0.0, f64::max);
    let negative_count = eigenvalues.iter().filter(|&&x| x < 0.0).count();
    Obstruction {
        eigenvalues,
        numeric_eigenvalues,
        max_relative_gap,
        negative_count,
        violates_lorentzian: negative_count > 1,
    }
}

/// Facet sets of a circuit, independent of facet numbering.
pub fn circuit_signature(l: &FaceLattice, c: &Circuit) -> BTreeSet<Vec<u32>> {
    c.facets.iter().map(|&f| l.facets()[f].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{canonical_24cell, hypercube};

    #[test]
    fn cell24_adjacency_degrees() {
        let c = canonical_24cell();
        let adj = FacetAdjacency::new(&c).unwrap();
        for f in 0..24 {
            let kinds: Vec<AdjacencyKind> = adj.neighbours(f).map(|g| adj.link(f, g).unwrap().kind()).collect();
            assert_eq!(kinds.iter().filter(|&&k| k == AdjacencyKind::Ridge).count(), 8);
            assert_eq!(kinds.iter().filter(|&&k| k == AdjacencyKind::Vertex).count(), 6);
        }
    }

    #[test]
    fn cell24_has_no_forbidden_circuits() {
        assert!(assert_forbidden_circuits(&canonical_24cell()).unwrap().is_clean());
    }

    #[test]
    fn tesseract_has_six_square_circuits() {
        let h = hypercube(4).unwrap();
        let four = find_circuits(&h, 4, 0).unwrap();
        assert_eq!(four.len(), 6);
        for c in &four {
            assert_eq!(c.labels, vec![AdjacencyKind::Ridge; 4]);
            assert!(c.shared_face_ids.iter().all(|f| f.rank == 2));
        }
        assert!(find_circuits(&h, 3, 0).unwrap().is_empty());
    }

    #[test]
    fn gram_examples() {
        let p = GramParams::new(1.0, 2.0).unwrap();
        let g = gram_matrix(p);
        assert!((g[0][2] + 1.5430806348152437).abs() < 1e-15);
        assert!((g[1][3] + 3.7621956910836314).abs() < 1e-15);
        let o = circuit_40_obstruction(p);
        assert_eq!(o.negative_count, 2);
        assert!(o.violates_lorentzian);
        assert!(o.max_relative_gap < 1e-12);
        assert!(GramParams::new(0.0, 1.0).is_err());
        assert!(GramParams::new(1e-9, 1.0).is_err());
        assert!(GramParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn circuit_json_field_names() {
        let h = hypercube(4).unwrap();
        let c = &find_circuits(&h, 4, 0).unwrap()[0];
        let v: serde_json::Value = serde_json::to_value(c).unwrap();
        assert_eq!(v["type"], serde_json::json!([4, 0]));
        assert_eq!(v["labels"][0], "ridge");
        assert!(v["shared_face_ids"].is_array());
    }
}
