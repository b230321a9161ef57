//! Average face counts and the face-count bound for polytopes simple at edges.
//!
//! For a polytope simple at edges the average number of `l`-faces of a
//! `k`-face is strictly below
//! `C(n-l, n-k) * (C(a, l) + C(b, l)) / (C(a, k) + C(b, k))`
//! with `a = floor(n/2)`, `b = floor((n+1)/2)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::BoundsError;
use crate::exact::{self, Q};
use crate::lattice::{FaceId, FaceLattice};

/// Ranks `0 <= l < k <= n - 1` in dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NkQuery {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl NkQuery {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self, BoundsError> {
        if n < 2 || l >= k || k >= n {
            return Err(BoundsError::RankOutOfRange { k, l, max: n.saturating_sub(1) });
        }
        Ok(Self { n, k, l })
    }
}

/// Exact binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Mean number of rank-`l` faces of a rank-`k` face.
pub fn average_face_ratio(lat: &FaceLattice, k: usize, l: usize) -> Result<Q, BoundsError> {
    if l >= k || k >= lat.dim() {
        return Err(BoundsError::RankOutOfRange { k, l, max: lat.dim() - 1 });
    }
    let fk = lat.faces(k).len();
    let total: usize = (0..fk).map(|index| lat.sub_face_count(FaceId { rank: k, index }, l)).sum();
    Ok(Q::new(BigInt::from(total), BigInt::from(fk)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum NkBound {
    Bound {
        #[serde(with = "exact::text")]
        value: Q,
    },
    /// The denominator vanishes; the inequality says nothing.
    Inapplicable,
}

impl NkBound {
    pub fn value(&self) -> Option<&Q> {
        match self {
            NkBound::Bound { value } => Some(value),
            NkBound::Inapplicable => None,
        }
    }
}

pub fn nk_bound(q: NkQuery) -> NkBound {
    let (n, k, l) = (q.n, q.k, q.l);
    let (a, b) = (n / 2, n.div_ceil(2));
    let den = binomial(a, k) + binomial(b, k);
    if den.is_zero() {
        return NkBound::Inapplicable;
    }
    let num = binomial(n - l, n - k) * (binomial(a, l) + binomial(b, l));
    NkBound::Bound { value: Q::new(num, den) }
}

/// Dimensions `4..=n_max` where the bound on facets per 3-face is at most
/// `min_f34`, contradicting an average of at least `min_f34`.
pub fn dimension_exclusion(min_f34: u64, n_max: usize) -> Vec<usize> {
    dimension_table(min_f34, n_max).into_iter().filter(|r| r.excluded).map(|r| r.n).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub n: usize,
    /// `p/q`, absent when inapplicable.
    pub bound: Option<String>,
    pub applicable: bool,
    pub excluded: bool,
}

/// One row per `n` in `4..=n_max`. At `n = 4` and `5` rank 4 is not a
/// proper face rank; the formula is still evaluated and is inapplicable.
pub fn dimension_table(min_f34: u64, n_max: usize) -> Vec<DimensionRow> {
    let floor = Q::from_integer(BigInt::from(min_f34));
    (4..=n_max)
        .map(|n| {
            let b = nk_bound(NkQuery { n, k: 4, l: 3 });
            let excluded = b.value().is_some_and(|v| *v <= floor);
            DimensionRow { n, bound: b.value().map(exact::to_text), applicable: b.value().is_some(), excluded }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Strict,
    Equal,
    Violated,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub k: usize,
    pub l: usize,
    #[serde(with = "exact::text")]
    pub average: Q,
    pub bound: NkBound,
    pub comparison: Comparison,
}

/// Compares every rank pair of `lat` with the bound in its own dimension.
pub fn check_all_pairs(lat: &FaceLattice) -> Vec<PairCheck> {
    let n = lat.dim();
    let mut out = Vec::new();
    for k in 1..n {
        for l in 0..k {
            let average = average_face_ratio(lat, k, l).expect("ranks in range");
            let bound = nk_bound(NkQuery { n, k, l });
            let comparison = match bound.value() {
                None => Comparison::Inapplicable,
                Some(b) if average < *b => Comparison::Strict,
                Some(b) if average == *b => Comparison::Equal,
                Some(_) => Comparison::Violated,
            };
            out.push(PairCheck { k, l, average, bound, comparison });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::lattice::{canonical_24cell, hypercube};

    #[test]
    fn averages() {
        let c = canonical_24cell();
        assert_eq!(average_face_ratio(&c, 3, 2).unwrap(), int(8));
        assert_eq!(average_face_ratio(&c, 3, 0).unwrap(), int(6));
        assert_eq!(average_face_ratio(&hypercube(3).unwrap(), 2, 1).unwrap(), int(4));
        assert!(average_face_ratio(&c, 4, 3).is_err());
        assert!(average_face_ratio(&c, 2, 2).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(nk_bound(NkQuery::new(7, 4, 3).unwrap()), NkBound::Bound { value: int(20) });
        assert_eq!(nk_bound(NkQuery::new(8, 4, 3).unwrap()), NkBound::Bound { value: int(20) });
        assert_eq!(nk_bound(NkQuery::new(9, 4, 3).unwrap()), NkBound::Bound { value: int(14) });
        assert_eq!(nk_bound(NkQuery::new(6, 4, 3).unwrap()), NkBound::Inapplicable);
        assert!(NkQuery::new(4, 4, 3).is_err());
    }

    #[test]
    fn exclusion() {
        assert_eq!(dimension_exclusion(24, 12), (7..=12).collect::<Vec<_>>());
        assert!(dimension_exclusion(24, 6).is_empty());
        assert_eq!(dimension_exclusion(1_000_000, 12), (7..=12).collect::<Vec<_>>());
        assert!(dimension_exclusion(1, 12).is_empty());
    }

    #[test]
    fn cell24_pairs() {
        let checks = check_all_pairs(&canonical_24cell());
        for c in &checks {
            let expected = match (c.k, c.l) {
                (3, _) => Comparison::Inapplicable,
                (1, 0) => Comparison::Equal,
                _ => Comparison::Strict,
            };
            assert_eq!(c.comparison, expected, "pair ({}, {})", c.k, c.l);
        }
    }
}
