//! Two further computations of `Tor(Z[K], Z)`: the Koszul quotient algebra and
//! the Taylor complex on the missing faces. Both are compared with the
//! Hochster decomposition by [`cross_check`].

mod koszul;
mod taylor;

pub use koszul::{koszul_basis, koszul_cohomology, KoszulMonomial};
pub use taylor::{
    taylor_cohomology, taylor_cohomology_with, taylor_product, taylor_strata, TaylorMonomial, TaylorStrata,
    DEFAULT_MAX_MISSING_FACES,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::{bigraded_betti_with, HochsterOptions};
use crate::homology::GroupData;

/// Groups keyed by bidegree `(−i, 2j)`.
pub type TorTable = BTreeMap<(isize, usize), GroupData>;

/// Cohomology at a spot with `n` basis elements, given the invariant factors of
/// the outgoing and incoming differentials.
pub(crate) fn groups_from_divisors(n: usize, outgoing: &[BigInt], incoming: &[BigInt]) -> GroupData {
    GroupData {
        rank: n - outgoing.len() - incoming.len(),
        torsion: incoming
            .iter()
            .filter(|x| !x.is_one())
            .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub bidegrees: usize,
    pub taylor_strata: usize,
    pub hochster: Vec<((isize, usize), GroupData)>,
}

fn describe(g: Option<&GroupData>) -> String {
    match g {
        None => "0".into(),
        Some(g) => format!("rank {} torsion {:?}", g.rank, g.torsion),
    }
}

fn compare<K: Ord + Copy + std::fmt::Debug>(
    names: (&str, &str),
    a: &BTreeMap<K, GroupData>,
    b: &BTreeMap<K, GroupData>,
) -> Result<()> {
    let keys: std::collections::BTreeSet<K> = a.keys().chain(b.keys()).copied().collect();
    for key in keys {
        if a.get(&key) != b.get(&key) {
            return Err(Error::MethodDisagreement {
                location: format!("{key:?}"),
                detail: format!(
                    "{}: {}, {}: {}",
                    names.0,
                    describe(a.get(&key)),
                    names.1,
                    describe(b.get(&key))
                ),
            });
        }
    }
    Ok(())
}

/// Compares Hochster, Koszul and Taylor at every bidegree, and every Taylor
/// stratum `(−r, S)` with the Hochster entry `(S, |S| − r − 1)`.
pub fn cross_check(k: &SimplicialComplex) -> Result<CrossCheckReport> {
    cross_check_with(k, &HochsterOptions::default(), DEFAULT_MAX_MISSING_FACES)
}

pub fn cross_check_with(k: &SimplicialComplex, opts: &HochsterOptions, max_missing_faces: usize) -> Result<CrossCheckReport> {
    let hochster = bigraded_betti_with(k, opts)?;
    let by_bidegree = hochster.by_bidegree();
    let koszul = koszul_cohomology(k);
    compare(("hochster", "koszul"), &by_bidegree, &koszul)?;
    let strata = taylor_strata(k, max_missing_faces)?;
    let mut taylor = TorTable::new();
    for ((r, s), g) in &strata {
        taylor.entry((*r, 2 * s.len())).or_default().add(g);
    }
    compare(("hochster", "taylor"), &by_bidegree, &taylor)?;
    let per_j: BTreeMap<(isize, crate::VertexSet), GroupData> = hochster
        .entries()
        .iter()
        .map(|e| ((e.d + 1 - e.j.len() as isize, e.j), e.group.clone()))
        .collect();
    compare(("hochster", "taylor stratum"), &per_j, &strata)?;
    Ok(CrossCheckReport {
        bidegrees: by_bidegree.len(),
        taylor_strata: strata.len(),
        hochster: by_bidegree.into_iter().collect(),
    })
}
