use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ChainComplexZ, GroupData};
use crate::complex::{FaceTable, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntegerMatrix};
use crate::VertexSet;

/// Representative cocycle of a cyclic torsion summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGenerator {
    pub order: BigInt,
    pub representative: Vec<BigInt>,
}

/// Coordinates of a cohomology class: integers against the free basis and
/// residues against the torsion generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassCoordinates {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl ClassCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug)]
struct DegreeBasis {
    u: IntegerMatrix,
    coboundary: IntegerMatrix,
    rank: usize,
    /// `(index into y-coordinates, order)` for divisors > 1.
    torsion_slots: Vec<(usize, BigInt)>,
    v2_inv: IntegerMatrix,
    kernel_rank: usize,
    free: Vec<Vec<BigInt>>,
    flipped: Vec<bool>,
    torsion: Vec<TorsionGenerator>,
}

/// Explicit generators of `H̃^d(K; Z)` for every `d`, indexed by the faces of a
/// [`FaceTable`]. Free representatives are normalised so that their first
/// nonzero coordinate is positive.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    faces: FaceTable,
    degrees: Vec<DegreeBasis>,
}

fn columns(m: &IntegerMatrix, from: usize) -> IntegerMatrix {
    let mut out = IntegerMatrix::zeros(m.rows(), m.cols() - from);
    for r in 0..m.rows() {
        for c in from..m.cols() {
            out.set(r, c - from, m.get(r, c).clone());
        }
    }
    out
}

impl CohomologyBasis {
    pub fn new(faces: FaceTable) -> Self {
        let chains = ChainComplexZ::from_faces(faces);
        let dim = chains.dim();
        let degrees = (-1..=dim).map(|d| Self::degree(&chains, d)).collect();
        CohomologyBasis {
            faces: chains.faces,
            degrees,
        }
    }

    fn degree(chains: &ChainComplexZ, d: isize) -> DegreeBasis {
        let a = chains.coboundary(d - 1).to_bigint();
        let b = chains.coboundary(d).to_bigint();
        let snf_a = smith_normal_form(&a);
        let r = snf_a.rank;
        let complement = columns(&snf_a.u_inv, r);
        let b_prime = b.mul(&complement);
        let snf_b = smith_normal_form(&b_prime);
        let s = snf_b.rank;
        let reps = complement.mul(&columns(&snf_b.v, s));
        let mut free = Vec::new();
        let mut flipped = Vec::new();
        for c in 0..reps.cols() {
            let mut v = reps.column(c);
            let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
            if flip {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            free.push(v);
            flipped.push(flip);
        }
        let torsion_slots: Vec<(usize, BigInt)> = snf_a
            .invariant_factors()
            .into_iter()
            .enumerate()
            .filter(|(_, f)| !f.is_one())
            .collect();
        let torsion = torsion_slots
            .iter()
            .map(|(i, order)| TorsionGenerator {
                order: order.clone(),
                representative: snf_a.u_inv.column(*i),
            })
            .collect();
        DegreeBasis {
            u: snf_a.u,
            coboundary: b,
            rank: r,
            torsion_slots,
            v2_inv: snf_b.v_inv,
            kernel_rank: s,
            free,
            flipped,
            torsion,
        }
    }

    pub fn of_complex(k: &SimplicialComplex) -> Self {
        Self::new(k.face_table())
    }

    pub fn faces(&self) -> &FaceTable {
        &self.faces
    }

    pub fn dim(&self) -> isize {
        self.degrees.len() as isize - 2
    }

    fn slot(&self, d: isize) -> Option<&DegreeBasis> {
        if d < -1 {
            None
        } else {
            self.degrees.get((d + 1) as usize)
        }
    }

    /// Cochains representing a basis of the free part of `H̃^d`.
    pub fn free(&self, d: isize) -> &[Vec<BigInt>] {
        self.slot(d).map_or(&[], |b| &b.free)
    }

    pub fn torsion(&self, d: isize) -> &[TorsionGenerator] {
        self.slot(d).map_or(&[], |b| &b.torsion)
    }

    pub fn rank(&self, d: isize) -> usize {
        self.free(d).len()
    }

    pub fn group(&self, d: isize) -> GroupData {
        GroupData {
            rank: self.rank(d),
            torsion: self
                .torsion(d)
                .iter()
                .map(|t| t.order.to_u64().expect("torsion order fits in u64"))
                .collect(),
        }
    }

    /// Faces indexing coordinates of `d`-cochains.
    pub fn cochain_faces(&self, d: isize) -> &[VertexSet] {
        self.faces.faces(d)
    }

    pub fn coboundary(&self, d: isize, c: &[BigInt]) -> Vec<BigInt> {
        match self.slot(d) {
            Some(b) => b.coboundary.mul_vec(c),
            None => Vec::new(),
        }
    }

    pub fn is_cocycle(&self, d: isize, c: &[BigInt]) -> bool {
        self.coboundary(d, c).iter().all(Zero::is_zero)
    }

    /// Coordinates of the class of the cocycle `c ∈ C^d`.
    pub fn express(&self, d: isize, c: &[BigInt]) -> Result<ClassCoordinates> {
        let Some(b) = self.slot(d) else {
            // above the dimension the cochain group, and so the class, is zero
            if d > self.dim() && c.is_empty() {
                return Ok(ClassCoordinates::default());
            }
            return Err(Error::DegreeMismatch(format!("no cochains in degree {d}")));
        };
        if c.len() != self.faces.count(d) {
            return Err(Error::DegreeMismatch(format!(
                "cochain of length {} in degree {d} with {} faces",
                c.len(),
                self.faces.count(d)
            )));
        }
        if !self.is_cocycle(d, c) {
            return Err(Error::NotACocycle);
        }
        let y = b.u.mul_vec(c);
        let torsion = b
            .torsion_slots
            .iter()
            .map(|(i, order)| y[*i].mod_floor(order))
            .collect();
        let w = b.v2_inv.mul_vec(&y[b.rank..]);
        debug_assert!(w[..b.kernel_rank].iter().all(Zero::is_zero));
        let free = w[b.kernel_rank..]
            .iter()
            .zip(&b.flipped)
            .map(|(x, &f)| if f { -x } else { x.clone() })
            .collect();
        Ok(ClassCoordinates { free, torsion })
    }
}

pub fn reduced_cohomology_basis(k: &SimplicialComplex) -> CohomologyBasis {
    CohomologyBasis::of_complex(k)
}

/// Free function form of [`CohomologyBasis::express`].
pub fn express_in_basis(basis: &CohomologyBasis, d: isize, c: &[BigInt]) -> Result<ClassCoordinates> {
    basis.express(d, c)
}
