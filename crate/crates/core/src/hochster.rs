//! The Hochster decomposition `H^p(Z_K) ≅ ⊕_{J ⊆ [m]} H̃^{p−|J|−1}(K_J)`.
//!
//! Subsets whose full subcomplex is visibly a cone (the missing faces inside `J`
//! do not cover `J`) are skipped before any linear algebra is done.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{pseudo_sphere_check, FaceTable, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{ChainComplexZ, GroupData, HomologySummary};
use crate::vertex_set::cmp_graded_lex;
use crate::VertexSet;

pub const DEFAULT_MAX_VERTICES: usize = 24;

#[derive(Clone, Debug)]
pub struct HochsterOptions {
    /// Worker threads; `0` uses the global rayon pool, `1` runs sequentially.
    pub threads: usize,
    pub max_vertices: usize,
    pub prune: bool,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions {
            threads: 0,
            max_vertices: DEFAULT_MAX_VERTICES,
            prune: true,
        }
    }
}

/// One nonzero summand `H̃^d(K_J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedEntry {
    pub j: VertexSet,
    pub d: isize,
    pub group: GroupData,
}

impl BigradedEntry {
    /// Total degree `|J| + d + 1` in `H*(Z_K)`.
    pub fn degree(&self) -> usize {
        (self.j.len() as isize + self.d + 1) as usize
    }

    /// Koszul bidegree `(−i, 2|J|)` with `i = |J| − d − 1`.
    pub fn bidegree(&self) -> (isize, usize) {
        let j = self.j.len() as isize;
        (-(j - self.d - 1), 2 * self.j.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedBetti {
    pub m: usize,
    pub dim: isize,
    entries: Vec<BigradedEntry>,
}

#[derive(Serialize)]
struct EntryJson {
    #[serde(rename = "J")]
    j: Vec<usize>,
    d: isize,
    rank: usize,
    torsion: Vec<u64>,
}

#[derive(Serialize)]
struct TotalJson {
    p: usize,
    rank: usize,
    torsion: Vec<u64>,
}

#[derive(Serialize)]
struct ReportJson {
    m: usize,
    dim: isize,
    bigraded: Vec<EntryJson>,
    total: Vec<TotalJson>,
}

impl BigradedBetti {
    /// Nonzero entries ordered by `(|J|, J lexicographic, d)`.
    pub fn entries(&self) -> &[BigradedEntry] {
        &self.entries
    }

    pub fn get(&self, j: VertexSet, d: isize) -> GroupData {
        self.entries
            .iter()
            .find(|e| e.j == j && e.d == d)
            .map(|e| e.group.clone())
            .unwrap_or_default()
    }

    /// Aggregated groups `H^p(Z_K)`, nonzero degrees only.
    pub fn total(&self) -> ZkBetti {
        let mut groups: BTreeMap<usize, GroupData> = BTreeMap::new();
        for e in &self.entries {
            groups.entry(e.degree()).or_default().add(&e.group);
        }
        ZkBetti { groups }
    }

    /// Entries grouped by Koszul bidegree `(−i, 2j)`.
    pub fn by_bidegree(&self) -> BTreeMap<(isize, usize), GroupData> {
        let mut out: BTreeMap<(isize, usize), GroupData> = BTreeMap::new();
        for e in &self.entries {
            out.entry(e.bidegree()).or_default().add(&e.group);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let report = ReportJson {
            m: self.m,
            dim: self.dim,
            bigraded: self
                .entries
                .iter()
                .map(|e| EntryJson {
                    j: e.j.to_vec(),
                    d: e.d,
                    rank: e.group.rank,
                    torsion: e.group.torsion.clone(),
                })
                .collect(),
            total: self
                .total()
                .iter()
                .map(|(p, g)| TotalJson {
                    p,
                    rank: g.rank,
                    torsion: g.torsion.clone(),
                })
                .collect(),
        };
        serde_json::to_value(report).expect("report serialises")
    }
}

/// Integral cohomology of `Z_K` by total degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZkBetti {
    groups: BTreeMap<usize, GroupData>,
}

impl ZkBetti {
    /// Totals a table keyed by bidegree `(−i, 2j)` into degrees `2j − i`.
    pub fn from_bidegrees(table: &BTreeMap<(isize, usize), GroupData>) -> Self {
        let mut groups: BTreeMap<usize, GroupData> = BTreeMap::new();
        for (&(i, j), g) in table {
            if !g.is_zero() {
                groups.entry((j as isize + i) as usize).or_default().add(g);
            }
        }
        ZkBetti { groups }
    }

    pub fn get(&self, p: usize) -> GroupData {
        self.groups.get(&p).cloned().unwrap_or_default()
    }

    pub fn rank(&self, p: usize) -> usize {
        self.groups.get(&p).map_or(0, |g| g.rank)
    }

    /// Nonzero degrees in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &GroupData)> {
        self.groups.iter().map(|(p, g)| (*p, g))
    }

    /// `(p, b_p)` for every degree with nonzero rank.
    pub fn betti_numbers(&self) -> Vec<(usize, usize)> {
        self.groups
            .iter()
            .filter(|(_, g)| g.rank > 0)
            .map(|(p, g)| (*p, g.rank))
            .collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.groups.keys().next_back().copied()
    }
}

fn check_cap(k: &SimplicialComplex, cap: usize) -> Result<()> {
    if k.m() > cap {
        return Err(Error::CapExceeded { m: k.m(), cap });
    }
    Ok(())
}

/// Runs `f` over all subsets of `[m]` (as bitmasks) in order, on the requested
/// number of threads. Output order is independent of the thread count.
fn map_subsets<T, F>(m: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(VertexSet) -> Option<T> + Sync + Send,
{
    let range = 0..(1u64 << m);
    if threads == 1 {
        return range.filter_map(|b| f(VertexSet::from_bits(b))).collect();
    }
    let run = || {
        range
            .into_par_iter()
            .filter_map(|b| f(VertexSet::from_bits(b)))
            .collect()
    };
    if threads == 0 {
        run()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(run),
            Err(e) => {
                log::warn!("could not build a {threads}-thread pool ({e}); using the global pool");
                run()
            }
        }
    }
}

pub fn bigraded_betti(k: &SimplicialComplex) -> Result<BigradedBetti> {
    bigraded_betti_with(k, &HochsterOptions::default())
}

pub fn bigraded_betti_with(k: &SimplicialComplex, opts: &HochsterOptions) -> Result<BigradedBetti> {
    check_cap(k, opts.max_vertices)?;
    let faces = k.face_table();
    let mf = k.missing_faces();
    let mut entries: Vec<BigradedEntry> = map_subsets(k.m(), opts.threads, |j| {
        if opts.prune && mf.cover_within(j) != j {
            return None;
        }
        let cohomology = ChainComplexZ::from_faces(faces.restrict(j)).cohomology();
        let found: Vec<BigradedEntry> = cohomology
            .nonzero()
            .map(|(d, g)| BigradedEntry { j, d, group: g.clone() })
            .collect();
        (!found.is_empty()).then_some(found)
    })
    .into_iter()
    .flatten()
    .collect();
    entries.sort_by(|a, b| cmp_graded_lex(&a.j, &b.j).then(a.d.cmp(&b.d)));
    Ok(BigradedBetti {
        m: k.m(),
        dim: k.dim(),
        entries,
    })
}

/// `H*(Z_K; Z)` by total degree.
pub fn zk_betti(k: &SimplicialComplex) -> Result<ZkBetti> {
    Ok(bigraded_betti(k)?.total())
}

pub fn zk_betti_with(k: &SimplicialComplex, opts: &HochsterOptions) -> Result<ZkBetti> {
    Ok(bigraded_betti_with(k, opts)?.total())
}

fn sphere_dimension(k: &SimplicialComplex) -> Result<isize> {
    let check = pseudo_sphere_check(k).map_err(|e| Error::NotASphereCandidate(e.to_string()))?;
    if !check.passed() {
        return Err(Error::NotASphereCandidate(format!(
            "pseudomanifold={}, strongly connected={}, sphere homology={}",
            check.pseudomanifold, check.strongly_connected, check.sphere_homology
        )));
    }
    Ok(check.dim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityViolation {
    pub subset: Vec<usize>,
    pub degree: isize,
    pub cohomology: GroupData,
    pub dual_homology: GroupData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderReport {
    pub dim: isize,
    pub subsets_checked: usize,
    pub violation: Option<DualityViolation>,
}

impl AlexanderReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `H̃^j(K_I) ≅ H̃_{n−j−1}(K_Î)` for every `I ⊆ [m]`, torsion included.
pub fn alexander_duality_check(k: &SimplicialComplex) -> Result<AlexanderReport> {
    alexander_duality_check_with(k, &HochsterOptions::default())
}

pub fn alexander_duality_check_with(k: &SimplicialComplex, opts: &HochsterOptions) -> Result<AlexanderReport> {
    check_cap(k, opts.max_vertices)?;
    let n = sphere_dimension(k)?;
    let faces = k.face_table();
    let groups: Vec<(HomologySummary, HomologySummary)> = map_subsets(k.m(), opts.threads, |j| {
        Some(ChainComplexZ::from_faces(faces.restrict(j)).groups())
    });
    let full = VertexSet::full(k.m());
    let mut violation = None;
    'outer: for (bits, (_, cohomology)) in groups.iter().enumerate() {
        let i = VertexSet::from_bits(bits as u64);
        let (dual_homology, _) = &groups[(full - i).bits() as usize];
        for j in -1..=n {
            let (a, b) = (cohomology.get(j), dual_homology.get(n - j - 1));
            if a != b {
                violation = Some(DualityViolation {
                    subset: i.to_vec(),
                    degree: j,
                    cohomology: a,
                    dual_homology: b,
                });
                break 'outer;
            }
        }
    }
    Ok(AlexanderReport {
        dim: n,
        subsets_checked: groups.len(),
        violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincarePair {
    pub p: usize,
    pub q: usize,
    pub rank_p: usize,
    pub rank_q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareReport {
    /// Dimension `m + n + 1` of the manifold `Z_K`.
    pub top: usize,
    pub pairs: Vec<PoincarePair>,
    pub ranks_symmetric: bool,
    pub torsion_symmetric: bool,
}

impl PoincareReport {
    pub fn passed(&self) -> bool {
        self.ranks_symmetric && self.torsion_symmetric
    }
}

/// Checks `b_p = b_{N−p}` and `T H^p ≅ T H^{N+1−p}` for `N = m + n + 1`.
pub fn poincare_check(k: &SimplicialComplex) -> Result<PoincareReport> {
    let n = sphere_dimension(k)?;
    let top = (k.m() as isize + n + 1) as usize;
    let betti = zk_betti(k)?;
    let pairs: Vec<PoincarePair> = (0..=top / 2)
        .map(|p| PoincarePair {
            p,
            q: top - p,
            rank_p: betti.rank(p),
            rank_q: betti.rank(top - p),
        })
        .collect();
    let ranks_symmetric = pairs.iter().all(|x| x.rank_p == x.rank_q);
    let torsion_symmetric = (1..=top).all(|p| betti.get(p).torsion == betti.get(top + 1 - p).torsion);
    Ok(PoincareReport {
        top,
        pairs,
        ranks_symmetric,
        torsion_symmetric,
    })
}

/// Reduced cohomology of the full subcomplex on `j` using a prebuilt face table.
pub fn full_subcomplex_cohomology(faces: &FaceTable, j: VertexSet) -> HomologySummary {
    ChainComplexZ::from_faces(faces.restrict(j)).cohomology()
}
