//! Reduced integral (co)homology of simplicial complexes.
//!
//! Faces are oriented by increasing vertex label; the boundary of
//! `(v₀ < … < v_d)` is `Σ (−1)^i (v₀ … v̂ᵢ … v_d)`. Chain complexes are always
//! augmented, so `C₋₁ = Z` is spanned by the empty face.

mod cochains;

pub use cochains::{express_in_basis, reduced_cohomology_basis, ClassCoordinates, CohomologyBasis, TorsionGenerator};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::complex::{FaceTable, SimplicialComplex};
use crate::linalg::{elementary_divisors, Matrix};
use crate::VertexSet;

/// A finitely generated abelian group `Z^rank ⊕ ⊕ Z/tᵢ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GroupData {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl GroupData {
    pub fn free(rank: usize) -> Self {
        GroupData { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum; torsion coefficients are kept sorted.
    pub fn add(&mut self, other: &GroupData) {
        self.rank += other.rank;
        self.torsion.extend_from_slice(&other.torsion);
        self.torsion.sort_unstable();
    }
}

/// Reduced groups indexed by degree `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    groups: Vec<GroupData>,
}

impl HomologySummary {
    /// Group in degree `d`; zero outside the stored range.
    pub fn get(&self, d: isize) -> GroupData {
        if d < -1 {
            return GroupData::default();
        }
        self.groups.get((d + 1) as usize).cloned().unwrap_or_default()
    }

    pub fn rank(&self, d: isize) -> usize {
        self.get(d).rank
    }

    /// Highest stored degree (the complex dimension).
    pub fn top_degree(&self) -> isize {
        self.groups.len() as isize - 2
    }

    /// Nonzero groups as `(degree, group)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, &GroupData)> {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, g)| (i as isize - 1, g))
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(GroupData::is_zero)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// True when the groups are those of `Sⁿ`: `Z` in degree `n`, zero elsewhere.
    pub fn is_sphere_homology(&self, n: isize) -> bool {
        self.nonzero().map(|(d, g)| (d, g.clone())).collect::<Vec<_>>() == vec![(n, GroupData::free(1))]
    }
}

/// The augmented simplicial chain complex of a complex, with `i64` boundary
/// matrices (entries are `0, ±1`).
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    faces: FaceTable,
    /// `boundaries[k]` is `∂_{k}` for `k = 0..=dim`, mapping `C_k → C_{k−1}`.
    boundaries: Vec<Matrix<i64>>,
}

impl ChainComplexZ {
    pub fn of_complex(k: &SimplicialComplex) -> Self {
        Self::from_faces(k.face_table())
    }

    pub fn from_faces(faces: FaceTable) -> Self {
        let dim = faces.dim();
        let boundaries = (0..=dim).map(|d| boundary_matrix(&faces, d)).collect();
        ChainComplexZ { faces, boundaries }
    }

    pub fn faces(&self) -> &FaceTable {
        &self.faces
    }

    pub fn dim(&self) -> isize {
        self.faces.dim()
    }

    /// `∂_d : C_d → C_{d−1}`. Zero matrix of the right shape outside `0..=dim`.
    pub fn boundary(&self, d: isize) -> Matrix<i64> {
        if d >= 0 && (d as usize) < self.boundaries.len() {
            self.boundaries[d as usize].clone()
        } else {
            Matrix::zeros(self.faces.count(d - 1), self.faces.count(d))
        }
    }

    /// `δ_d = ∂_{d+1}ᵀ : C^d → C^{d+1}`.
    pub fn coboundary(&self, d: isize) -> Matrix<i64> {
        self.boundary(d + 1).transpose()
    }

    /// Checks `∂_d ∘ ∂_{d+1} = 0` in every degree.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (0..self.boundaries.len().saturating_sub(1)).all(|d| {
            self.boundaries[d]
                .checked_mul(&self.boundaries[d + 1])
                .map(|m| m.is_zero())
                .unwrap_or(false)
        })
    }

    fn divisors(&self) -> Vec<Vec<BigInt>> {
        self.boundaries.iter().map(elementary_divisors).collect()
    }

    /// Reduced homology and cohomology in one elimination pass.
    pub fn groups(&self) -> (HomologySummary, HomologySummary) {
        let divisors = self.divisors();
        let dim = self.dim();
        let rank_of = |d: isize| -> usize {
            if d >= 0 && (d as usize) < divisors.len() {
                divisors[d as usize].len()
            } else {
                0
            }
        };
        let torsion_of = |d: isize| -> Vec<u64> {
            if d >= 0 && (d as usize) < divisors.len() {
                divisors[d as usize]
                    .iter()
                    .filter(|x| !x.is_one())
                    .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
                    .collect()
            } else {
                Vec::new()
            }
        };
        let mut homology = Vec::new();
        let mut cohomology = Vec::new();
        for d in -1..=dim {
            let rank = self.faces.count(d) - rank_of(d) - rank_of(d + 1);
            homology.push(GroupData {
                rank,
                torsion: torsion_of(d + 1),
            });
            cohomology.push(GroupData {
                rank,
                torsion: torsion_of(d),
            });
        }
        (
            HomologySummary { groups: homology },
            HomologySummary { groups: cohomology },
        )
    }

    pub fn homology(&self) -> HomologySummary {
        self.groups().0
    }

    pub fn cohomology(&self) -> HomologySummary {
        self.groups().1
    }
}

fn boundary_matrix(faces: &FaceTable, d: isize) -> Matrix<i64> {
    let rows = faces.faces(d - 1);
    let cols = faces.faces(d);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (c, &sigma) in cols.iter().enumerate() {
        for (i, v) in sigma.iter().enumerate() {
            let r = faces
                .index_of(sigma.without(v))
                .expect("face table is closed under taking faces");
            m.set(r, c, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Reduced homology `H̃_*(K; Z)`; the complex `{∅}` has `H̃₋₁ = Z`.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologySummary {
    ChainComplexZ::of_complex(k).homology()
}

/// Reduced cohomology groups `H̃^*(K; Z)`.
pub fn reduced_cohomology(k: &SimplicialComplex) -> HomologySummary {
    ChainComplexZ::of_complex(k).cohomology()
}

/// Reduced (co)homology of the full subcomplex spanned by `j`, computed on a
/// restriction of `faces` without relabelling.
pub fn full_subcomplex_groups(faces: &FaceTable, j: VertexSet) -> (HomologySummary, HomologySummary) {
    ChainComplexZ::from_faces(faces.restrict(j)).groups()
}
