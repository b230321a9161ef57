//! Face-count identities and the exact volume of ideal right-angled
//! 4-polytopes.
//!
//! Volumes are reported in units of `pi^2 / 3`, so every value here is an
//! exact rational.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::IdentityError;
use crate::exact::{self, int, Q};
use crate::lattice::{combinatorially_isomorphic, octahedron, FVector, FaceLattice, VertexId};

/// Volume as a multiple of `pi^2 / 3`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VolumeUnits {
    #[serde(with = "exact::text")]
    pub q: Q,
}

impl VolumeUnits {
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.q.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(2) / 3.0
    }
}

/// Number of 2-faces of each polygon size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFaceProfile {
    /// Polygon size to count; sizes with no faces are absent.
    pub f2_of: BTreeMap<usize, u64>,
}

impl TwoFaceProfile {
    pub fn of(l: &FaceLattice) -> Self {
        let mut f2_of = BTreeMap::new();
        for f in l.faces(2) {
            *f2_of.entry(f.len()).or_insert(0) += 1;
        }
        Self { f2_of }
    }

    pub fn from_counts(pairs: &[(usize, u64)]) -> Self {
        let mut f2_of = BTreeMap::new();
        for &(k, c) in pairs {
            if c > 0 {
                *f2_of.entry(k).or_insert(0) += c;
            }
        }
        Self { f2_of }
    }

    pub fn f2(&self) -> u64 {
        self.f2_of.values().sum()
    }

    /// Total vertex-face incidences, `sum_k k f_2(k)`.
    pub fn incidences(&self) -> u64 {
        self.f2_of.iter().map(|(&k, &c)| k as u64 * c).sum()
    }

    /// Largest polygon size present.
    pub fn max_gon(&self) -> usize {
        self.f2_of.keys().next_back().copied().unwrap_or(0)
    }

    pub fn only_triangles(&self) -> bool {
        self.f2_of.keys().all(|&k| k == 3)
    }

    /// `(1/3) sum_{k >= 4} (k - 3) f_2(k)`.
    pub fn excess(&self) -> Q {
        let s: u64 = self.f2_of.iter().filter(|(&k, _)| k > 3).map(|(&k, &c)| (k as u64 - 3) * c).sum();
        Q::new((s as i64).into(), 3.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    /// `f_0 - f_1 + f_2 - f_3 = 0`.
    pub euler: bool,
    /// `f_1 = 4 f_0`: eight edges at every vertex.
    pub edge_vertex: bool,
    /// `12 f_0 = sum_F f_0(F)`: twelve 2-faces at every vertex.
    pub incidence_sum: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.euler && self.edge_vertex && self.incidence_sum
    }

    /// Names of the identities that fail.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.euler {
            v.push("euler");
        }
        if !self.edge_vertex {
            v.push("edge_vertex");
        }
        if !self.incidence_sum {
            v.push("incidence_sum");
        }
        v
    }
}

fn require_dim4(l: &FaceLattice) -> Result<(), IdentityError> {
    if l.dim() == 4 {
        Ok(())
    } else {
        Err(IdentityError::NotFourDimensional(l.dim()))
    }
}

pub fn identities_from_counts(f: &FVector, profile: &TwoFaceProfile) -> IdentityReport {
    IdentityReport {
        euler: f.dim() == 4 && f.euler_sum() == 0,
        edge_vertex: f.get(1) == 4 * f.get(0),
        incidence_sum: profile.f2() == f.get(2) as u64 && profile.incidences() == 12 * f.get(0) as u64,
    }
}

pub fn check_identities(l: &FaceLattice) -> Result<IdentityReport, IdentityError> {
    require_dim4(l)?;
    Ok(identities_from_counts(&l.f_vector(), &TwoFaceProfile::of(l)))
}

/// `q = f_0 - f_3 + 4`. With `strict`, the first two identities must hold.
pub fn volume_units(f: &FVector, strict: bool) -> Result<VolumeUnits, IdentityError> {
    if f.dim() != 4 {
        return Err(IdentityError::NotFourDimensional(f.dim()));
    }
    if strict {
        let mut bad = Vec::new();
        if f.euler_sum() != 0 {
            bad.push("euler");
        }
        if f.get(1) != 4 * f.get(0) {
            bad.push("edge_vertex");
        }
        if !bad.is_empty() {
            return Err(IdentityError::IdentityViolation(format!("{} fail for {f}", bad.join(", "))));
        }
    }
    Ok(VolumeUnits { q: int(f.get(0) as i64 - f.get(3) as i64 + 4) })
}

/// Order of a stabilizer subgroup; ideal vertices have infinite ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabOrder {
    Finite(u64),
    Infinite,
}

impl StabOrder {
    fn reciprocal(self) -> Q {
        match self {
            StabOrder::Finite(k) => Q::new(1.into(), (k as i64).into()),
            StabOrder::Infinite => Q::zero(),
        }
    }
}

/// The covolume formula evaluated from raw terms: `f_0`, `f_2`, the vertex
/// count and stabilizer order of each 2-face, and the vertex stabilizers.
pub fn covolume_from_terms(
    f0: u64,
    two_faces: &[(u64, StabOrder)],
    vertex_stabs: &[StabOrder],
) -> Result<VolumeUnits, IdentityError> {
    let f2 = two_faces.len() as i64;
    let mut kappa = int(4 - 2 * (f0 as i64 + f2));
    let mut face_term = Q::zero();
    for &(n, s) in two_faces {
        match s {
            StabOrder::Finite(k) if k >= 2 => {}
            StabOrder::Finite(k) => return Err(IdentityError::BadStabilizerOrder(k)),
            StabOrder::Infinite => return Err(IdentityError::BadStabilizerOrder(0)),
        }
        kappa += int(n as i64);
        face_term += int(n as i64 - 2) * s.reciprocal();
    }
    let mut vertex_term = Q::zero();
    for &s in vertex_stabs {
        if s == StabOrder::Finite(0) {
            return Err(IdentityError::BadStabilizerOrder(0));
        }
        vertex_term += s.reciprocal();
    }
    Ok(VolumeUnits { q: kappa - int(2) * face_term + int(4) * vertex_term })
}

/// Covolume of the reflection group of `l` with the given stabilizer orders,
/// keyed by sorted vertex set (2-faces) and vertex id.
pub fn reflection_covolume(
    l: &FaceLattice,
    stab2: &BTreeMap<Vec<VertexId>, StabOrder>,
    stab0: &BTreeMap<VertexId, StabOrder>,
) -> Result<VolumeUnits, IdentityError> {
    require_dim4(l)?;
    let faces = l
        .faces(2)
        .iter()
        .map(|f| {
            stab2
                .get(f)
                .map(|&s| (f.len() as u64, s))
                .ok_or_else(|| IdentityError::MissingStabilizer(format!("2-face {f:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let verts = (0..l.num_vertices() as VertexId)
        .map(|v| stab0.get(&v).copied().ok_or_else(|| IdentityError::MissingStabilizer(format!("vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    covolume_from_terms(l.num_vertices() as u64, &faces, &verts)
}

/// Stabilizers of an ideal right-angled polytope: dihedral of order four on
/// every 2-face, infinite at every vertex.
pub fn right_angled_stabilizers(
    l: &FaceLattice,
) -> (BTreeMap<Vec<VertexId>, StabOrder>, BTreeMap<VertexId, StabOrder>) {
    let stab2 = l.faces(2).iter().map(|f| (f.clone(), StabOrder::Finite(4))).collect();
    let stab0 = (0..l.num_vertices() as VertexId).map(|v| (v, StabOrder::Infinite)).collect();
    (stab2, stab0)
}

/// Both sides of `f_0 - f_3 = (1/3) sum_{k >= 4} (k - 3) f_2(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeExcess {
    pub lhs: i64,
    #[serde(with = "exact::text")]
    pub rhs: Q,
}

pub fn volume_excess_from_counts(f: &FVector, profile: &TwoFaceProfile) -> Result<VolumeExcess, IdentityError> {
    let report = identities_from_counts(f, profile);
    if !report.all() {
        return Err(IdentityError::IdentityViolation(format!("{} fail for {f}", report.violations().join(", "))));
    }
    let lhs = f.get(0) as i64 - f.get(3) as i64;
    let rhs = profile.excess();
    if int(lhs) != rhs {
        return Err(IdentityError::IdentityViolation(format!(
            "f0 - f3 = {lhs} but the polygon excess is {}",
            exact::to_text(&rhs)
        )));
    }
    if rhs.is_negative() {
        return Err(IdentityError::IdentityViolation("negative excess".into()));
    }
    Ok(VolumeExcess { lhs, rhs })
}

pub fn volume_excess(l: &FaceLattice) -> Result<VolumeExcess, IdentityError> {
    require_dim4(l)?;
    volume_excess_from_counts(&l.f_vector(), &TwoFaceProfile::of(l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinVolumeCertificate {
    pub f_vector: FVector,
    #[serde(with = "exact::text")]
    pub volume_units_q: Q,
    pub excess: i64,
    pub two_face_profile: TwoFaceProfile,
    pub verdict: String,
}

pub const VERDICT_MINIMAL: &str =
    "minimal volume; combinatorially the 24-cell, hence isometric to the ideal right-angled 24-cell";

/// Minimality from counts alone; facet shapes are the caller's business.
pub fn certify_from_counts(f: &FVector, profile: &TwoFaceProfile) -> Result<MinVolumeCertificate, IdentityError> {
    let excess = volume_excess_from_counts(f, profile)?;
    let q = volume_units(f, true)?.q;
    if excess.lhs > 0 {
        return Err(IdentityError::NotMinimal { q: exact::to_text(&q), excess: excess.lhs });
    }
    debug_assert!(profile.only_triangles());
    Ok(MinVolumeCertificate {
        f_vector: f.clone(),
        volume_units_q: q,
        excess: excess.lhs,
        two_face_profile: profile.clone(),
        verdict: VERDICT_MINIMAL.into(),
    })
}

/// Certifies that `l` has the least possible volume, `4 pi^2 / 3`, and that
/// every facet is an octahedron.
pub fn certify_min_volume(l: &FaceLattice) -> Result<MinVolumeCertificate, IdentityError> {
    require_dim4(l)?;
    let cert = certify_from_counts(&l.f_vector(), &TwoFaceProfile::of(l))?;
    let octa = octahedron();
    for (i, facet) in l.facets().iter().enumerate() {
        let id = l.find(facet).expect("facet is a face");
        let fl = l.face_lattice(id)?;
        if !combinatorially_isomorphic(&fl, &octa)? {
            return Err(IdentityError::IdentityViolation(format!("facet {i} is not an octahedron")));
        }
    }
    Ok(cert)
}

/// Fewest facets of a 4-polytope having a facet with `facet_f2` 2-faces.
/// Meaningful from 4 on; smaller inputs saturate instead of underflowing.
pub fn facet_lower_bound(facet_f2: u64) -> u64 {
    (2 * facet_f2).saturating_sub(1)
}
