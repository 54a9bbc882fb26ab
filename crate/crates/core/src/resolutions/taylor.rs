use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::GroupData;
use crate::linalg::{elementary_divisors, Matrix};
use crate::VertexSet;

use super::{groups_from_divisors, TorTable};

pub const DEFAULT_MAX_MISSING_FACES: usize = 20;

/// A subset `{σ_{k₁} < … < σ_{k_r}}` of the ordered missing faces `ℙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaylorMonomial {
    /// Increasing positions in `ℙ`.
    pub elements: Vec<usize>,
    /// `S_u`, the union of the chosen missing faces.
    pub support: VertexSet,
}

impl TaylorMonomial {
    pub fn new(elements: Vec<usize>, missing: &[VertexSet]) -> Self {
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let support = elements.iter().fold(VertexSet::EMPTY, |acc, &i| acc | missing[i]);
        TaylorMonomial { elements, support }
    }

    /// `(−r, 2|S_u|)`.
    pub fn bidegree(&self) -> (isize, usize) {
        (-(self.elements.len() as isize), 2 * self.support.len())
    }
}

/// `u × v`: zero unless `S_u ∩ S_v = ∅`, otherwise the exterior product with
/// the sign of the permutation sorting `u` followed by `v`.
pub fn taylor_product(u: &TaylorMonomial, v: &TaylorMonomial) -> Option<(i32, TaylorMonomial)> {
    if !u.support.is_disjoint(v.support) {
        return None;
    }
    let mut inversions = 0usize;
    for a in &u.elements {
        for b in &v.elements {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    let mut elements: Vec<usize> = u.elements.iter().chain(&v.elements).copied().collect();
    elements.sort_unstable();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((
        sign,
        TaylorMonomial {
            elements,
            support: u.support | v.support,
        },
    ))
}

/// Taylor groups keyed by `(−r, S)`, nonzero only.
pub type TaylorStrata = BTreeMap<(isize, VertexSet), GroupData>;

/// Cohomology of the Taylor complex, stratum by stratum.
///
/// Basis elements are subsets `u ⊆ ℙ` (bitmasks over positions). The differential
/// `d(u) = Σᵢ (−1)^i ∂ᵢ(u) δᵢ` (positions counted from 1) keeps only the faces
/// whose union is still `S_u`, so it preserves every stratum.
pub fn taylor_strata(k: &SimplicialComplex, max_missing_faces: usize) -> Result<TaylorStrata> {
    let missing = k.missing_faces().into_vec();
    let n = missing.len();
    if n > max_missing_faces {
        return Err(Error::TooManyMissingFaces {
            count: n,
            cap: max_missing_faces,
        });
    }
    let mut strata: HashMap<VertexSet, Vec<Vec<u32>>> = HashMap::new();
    for bits in 0..(1u32 << n) {
        let s = (0..n)
            .filter(|i| bits >> i & 1 == 1)
            .fold(VertexSet::EMPTY, |acc, i| acc | missing[i]);
        let levels = strata.entry(s).or_default();
        let r = bits.count_ones() as usize;
        if levels.len() <= r {
            levels.resize_with(r + 1, Vec::new);
        }
        levels[r].push(bits);
    }
    let mut keys: Vec<VertexSet> = strata.keys().copied().collect();
    keys.sort();
    let results: Vec<Vec<((isize, VertexSet), GroupData)>> = keys
        .par_iter()
        .map(|s| stratum_groups(*s, &strata[s], &missing))
        .collect();
    Ok(results.into_iter().flatten().collect())
}

fn stratum_groups(s: VertexSet, levels: &[Vec<u32>], missing: &[VertexSet]) -> Vec<((isize, VertexSet), GroupData)> {
    // d_r : level r → level r − 1
    let maps: Vec<Option<Matrix<i64>>> = (0..levels.len())
        .map(|r| (r >= 1).then(|| taylor_differential(&levels[r], &levels[r - 1], s, missing)))
        .collect();
    for r in 2..maps.len() {
        let (Some(a), Some(b)) = (&maps[r - 1], &maps[r]) else { continue };
        assert!(
            a.checked_mul(b).map(|p| p.is_zero()).unwrap_or(false),
            "Taylor differential squares to zero"
        );
    }
    let divisors: Vec<Vec<BigInt>> = maps
        .iter()
        .map(|m| m.as_ref().map(elementary_divisors).unwrap_or_default())
        .collect();
    let none = Vec::new();
    (0..levels.len())
        .filter_map(|r| {
            let g = groups_from_divisors(levels[r].len(), &divisors[r], divisors.get(r + 1).unwrap_or(&none));
            (!g.is_zero()).then_some(((-(r as isize), s), g))
        })
        .collect()
}

fn taylor_differential(source: &[u32], target: &[u32], s: VertexSet, missing: &[VertexSet]) -> Matrix<i64> {
    let index: HashMap<u32, usize> = target.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut d = Matrix::zeros(target.len(), source.len());
    for (c, &u) in source.iter().enumerate() {
        let mut position = 0;
        for i in 0..missing.len() {
            if u >> i & 1 == 0 {
                continue;
            }
            position += 1;
            let face = u & !(1 << i);
            let union = (0..missing.len())
                .filter(|j| face >> j & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, j| acc | missing[j]);
            if union != s {
                continue;
            }
            d.set(index[&face], c, if position % 2 == 0 { 1 } else { -1 });
        }
    }
    d
}

/// Taylor cohomology aggregated to bidegrees `(−r, 2|S|)`.
pub fn taylor_cohomology(k: &SimplicialComplex) -> Result<TorTable> {
    taylor_cohomology_with(k, DEFAULT_MAX_MISSING_FACES)
}

pub fn taylor_cohomology_with(k: &SimplicialComplex, max_missing_faces: usize) -> Result<TorTable> {
    let mut out = TorTable::new();
    for ((r, s), g) in taylor_strata(k, max_missing_faces)? {
        out.entry((r, 2 * s.len())).or_default().add(&g);
    }
    Ok(out)
}
