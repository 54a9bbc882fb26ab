use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::homology::GroupData;
use crate::linalg::{elementary_divisors, Matrix};
use crate::VertexSet;

use super::{groups_from_divisors, TorTable};

/// Basis element `u_σ v_τ` of the Koszul quotient algebra: `σ ∩ τ = ∅`, `τ ∈ K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KoszulMonomial {
    pub sigma: VertexSet,
    pub tau: VertexSet,
}

impl KoszulMonomial {
    /// `(−|σ|, 2|σ| + 2|τ|)`.
    pub fn bidegree(&self) -> (isize, usize) {
        (-(self.sigma.len() as isize), 2 * (self.sigma.len() + self.tau.len()))
    }
}

/// All basis monomials grouped by `(i, j) = (|σ|, |σ| + |τ|)`, each list sorted.
pub fn koszul_basis(k: &SimplicialComplex) -> BTreeMap<(usize, usize), Vec<KoszulMonomial>> {
    let ground = k.ground_set();
    let mut out: BTreeMap<(usize, usize), Vec<KoszulMonomial>> = BTreeMap::new();
    for tau in k.face_table().iter_all() {
        for sigma in (ground - tau).subsets() {
            out.entry((sigma.len(), sigma.len() + tau.len()))
                .or_default()
                .push(KoszulMonomial { sigma, tau });
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// `d(u_σ v_τ) = Σ_{i∈σ} (−1)^{#{s∈σ : s<i}} u_{σ∖i} v_{τ∪i}`, terms with
/// `τ ∪ i ∉ K` dropped. Maps the `(i, j)` block to the `(i − 1, j)` block.
fn differential(
    k: &SimplicialComplex,
    source: &[KoszulMonomial],
    target: &[KoszulMonomial],
) -> Matrix<i64> {
    let index: HashMap<KoszulMonomial, usize> = target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut d = Matrix::zeros(target.len(), source.len());
    for (c, m) in source.iter().enumerate() {
        for i in m.sigma.iter() {
            let tau = m.tau.with(i);
            if !k.contains_face(tau) {
                continue;
            }
            let image = KoszulMonomial { sigma: m.sigma.without(i), tau };
            let r = index[&image];
            d.set(r, c, if m.sigma.count_below(i) % 2 == 0 { 1 } else { -1 });
        }
    }
    d
}

/// `Tor^{−i,2j}` of the face ring through the Koszul quotient algebra, keyed by
/// `(−i, 2j)`, nonzero groups only.
pub fn koszul_cohomology(k: &SimplicialComplex) -> TorTable {
    let basis = koszul_basis(k);
    let empty = Vec::new();
    let block = |i: usize, j: usize| basis.get(&(i, j)).unwrap_or(&empty);
    let keys: Vec<(usize, usize)> = basis.keys().copied().collect();
    // divisors of d : (i, j) → (i − 1, j), for every i ≥ 1
    let divisors: HashMap<(usize, usize), Vec<num_bigint::BigInt>> = keys
        .par_iter()
        .filter(|(i, _)| *i >= 1)
        .map(|&(i, j)| {
            let d = differential(k, block(i, j), block(i - 1, j));
            if let Some(prev) = basis.get(&(i + 1, j)) {
                let next = differential(k, prev, block(i, j));
                assert!(
                    d.checked_mul(&next).map(|p| p.is_zero()).unwrap_or(false),
                    "Koszul differential squares to zero"
                );
            }
            ((i, j), elementary_divisors(&d))
        })
        .collect();
    let none = Vec::new();
    let mut out = TorTable::new();
    for &(i, j) in &keys {
        let outgoing = if i >= 1 { divisors.get(&(i, j)).unwrap_or(&none) } else { &none };
        let incoming = divisors.get(&(i + 1, j)).unwrap_or(&none);
        let g: GroupData = groups_from_divisors(block(i, j).len(), outgoing, incoming);
        if !g.is_zero() {
            out.insert((-(i as isize), 2 * j), g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{p28_8, polygon, two_points};

    #[test]
    fn two_points_is_s3() {
        let k = two_points();
        let total: usize = koszul_basis(&k).values().map(Vec::len).sum();
        assert_eq!(total, 8);
        let t = koszul_cohomology(&k);
        assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![(-1, 4), (0, 0)]);
        assert!(t.values().all(|g| *g == GroupData::free(1)));
    }

    #[test]
    fn quadrilateral() {
        let t = koszul_cohomology(&polygon(4).unwrap());
        let ranks: Vec<((isize, usize), usize)> = t.iter().map(|(k, g)| (*k, g.rank)).collect();
        assert_eq!(ranks, vec![((-2, 8), 1), ((-1, 4), 2), ((0, 0), 1)]);
    }

    #[test]
    fn p28_basis_size() {
        let total: usize = koszul_basis(&p28_8()).values().map(Vec::len).sum();
        assert_eq!(total, 4384);
    }
}
