//! Standard complexes and the staged construction of the 8-vertex 3-sphere `P₂₈⁸`.

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// The 18 tetrahedra of the 8-vertex polytopal 3-sphere.
pub const P28_8_FACETS: [[usize; 4]; 18] = [
    [1, 2, 4, 5],
    [1, 2, 4, 6],
    [1, 2, 5, 7],
    [1, 2, 6, 7],
    [1, 3, 5, 7],
    [1, 3, 6, 7],
    [2, 3, 4, 7],
    [2, 3, 6, 7],
    [2, 4, 5, 7],
    [3, 4, 5, 7],
    [1, 4, 5, 8],
    [1, 4, 6, 8],
    [1, 3, 5, 8],
    [1, 3, 6, 8],
    [2, 3, 4, 8],
    [2, 3, 6, 8],
    [2, 4, 6, 8],
    [3, 4, 5, 8],
];

/// Its ten missing faces, in the order they are usually listed.
pub const P28_8_MISSING_FACES: [&[usize]; 10] = [
    &[1, 2, 3],
    &[1, 3, 4],
    &[2, 3, 5],
    &[3, 4, 6],
    &[5, 6],
    &[1, 4, 7],
    &[4, 6, 7],
    &[1, 2, 8],
    &[2, 5, 8],
    &[7, 8],
];

fn sets(lists: &[&[usize]]) -> Vec<VertexSet> {
    lists.iter().map(|l| VertexSet::from_vertices(l.iter().copied())).collect()
}

/// The two-point complex `S⁰`.
pub fn two_points() -> SimplicialComplex {
    boundary_simplex(1).expect("valid")
}

/// Solid simplex `Δᵏ` on `k + 1` vertices.
pub fn simplex(k: usize) -> Result<SimplicialComplex> {
    if k + 1 > MAX_VERTICES {
        return Err(Error::ParameterOutOfRange(format!("simplex dimension {k}")));
    }
    SimplicialComplex::new(k + 1, [VertexSet::full(k + 1)]).map(|c| c.with_name(format!("simplex-{k}")))
}

/// `∂Δᵏ`: all `k`-subsets of `[k + 1]`.
pub fn boundary_simplex(k: usize) -> Result<SimplicialComplex> {
    if k < 1 || k + 1 > MAX_VERTICES {
        return Err(Error::ParameterOutOfRange(format!("boundary of simplex needs 1 <= k <= 63, got {k}")));
    }
    let full = VertexSet::full(k + 1);
    let facets = full.iter().map(|v| full.without(v));
    SimplicialComplex::new(k + 1, facets).map(|c| c.with_name(format!("simplex-boundary-{k}")))
}

/// Boundary of an `m`-gon, vertices in cyclic order `1, 2, ..., m`.
pub fn polygon(m: usize) -> Result<SimplicialComplex> {
    if !(3..=MAX_VERTICES).contains(&m) {
        return Err(Error::ParameterOutOfRange(format!("polygon needs 3 <= m <= 64, got {m}")));
    }
    let facets = (1..=m).map(|i| VertexSet::from_vertices([i, i % m + 1]));
    SimplicialComplex::new(m, facets).map(|c| c.with_name(format!("polygon-{m}")))
}

/// Boundary of the `(n + 1)`-dimensional cross-polytope: the join of `n + 1`
/// copies of `S⁰`, an `n`-sphere whose antipodal pairs are `(1,2), (3,4), ...`.
pub fn cross_polytope(n: usize) -> Result<SimplicialComplex> {
    if n < 1 || 2 * (n + 1) > MAX_VERTICES {
        return Err(Error::ParameterOutOfRange(format!("cross-polytope needs 1 <= n <= 31, got {n}")));
    }
    let s0 = two_points();
    let mut k = s0.clone();
    for _ in 0..n {
        k = k.join(&s0)?;
    }
    Ok(k.with_name(format!("cross-polytope-{n}")))
}

/// `∂Δᵏ` after `l` stellar subdivisions of facets, dual to cutting `l` vertices off
/// the `k`-simplex. Each step subdivides the lexicographically smallest facet that
/// does not contain the most recently added vertex.
pub fn truncated_simplex(k: usize, l: usize) -> Result<SimplicialComplex> {
    if k < 1 || k + 1 + l > MAX_VERTICES {
        return Err(Error::ParameterOutOfRange(format!("truncated simplex ({k}, {l})")));
    }
    let mut cx = boundary_simplex(k)?;
    let mut newest: Option<usize> = None;
    for _ in 0..l {
        let target = cx
            .facets()
            .iter()
            .copied()
            .find(|f| newest.is_none_or(|v| !f.contains(v)))
            .expect("a sphere has a facet avoiding any vertex");
        let label = cx.m() + 1;
        cx = cx.stellar_subdivide_facet(target, label)?;
        newest = Some(label);
    }
    Ok(cx.with_name(format!("truncated-simplex-{k}-{l}")))
}

/// Intermediate complexes of the three-step construction.
///
/// The figures defining `K₁, K₂, K₁', K₂'` are reconstructed from the final facet
/// list: `K₁, K₂` are the links that the cones on 5 and 6 attach along, and
/// `K₁', K₂'` are the links of vertices 7 and 8.
#[derive(Clone, Debug)]
pub struct ConstructionStages {
    pub k0: SimplicialComplex,
    pub k1: SimplicialComplex,
    pub k2: SimplicialComplex,
    pub l1: SimplicialComplex,
    pub l2: SimplicialComplex,
    pub k0_prime: SimplicialComplex,
    pub k1_prime: SimplicialComplex,
    pub k2_prime: SimplicialComplex,
    /// `K₀' ∪ cone(K₂')`, a 3-ball with boundary `K₁'`.
    pub k_prime: SimplicialComplex,
    pub k: SimplicialComplex,
}

/// Runs the staged construction without comparing against the facet list.
pub fn p28_8_stages() -> Result<ConstructionStages> {
    let k0 = SimplicialComplex::new(4, sets(&[&[1, 2, 4], &[2, 3, 4], &[1, 3]]))?;
    let k1 = SimplicialComplex::new(4, sets(&[&[1, 2, 4], &[1, 3], &[3, 4]]))?;
    let k2 = SimplicialComplex::new(4, sets(&[&[1, 2, 4], &[1, 3], &[2, 3]]))?;
    let l1 = k0.union(&k1.cone(5)?)?;
    let l2 = k0.union(&k2.cone(6)?)?;
    let k0_prime = l1.union(&l2)?;
    let k1_prime = SimplicialComplex::new(
        6,
        sets(&[
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 3, 6],
            &[2, 3, 4],
            &[2, 3, 6],
            &[2, 4, 5],
            &[3, 4, 5],
        ]),
    )?;
    let k2_prime = SimplicialComplex::new(
        6,
        sets(&[
            &[1, 4, 5],
            &[1, 4, 6],
            &[1, 3, 5],
            &[1, 3, 6],
            &[2, 3, 4],
            &[2, 3, 6],
            &[2, 4, 6],
            &[3, 4, 5],
        ]),
    )?;
    let k_prime = k0_prime.union(&k2_prime.cone(8)?)?;
    let k = k_prime.union(&k1_prime.cone(7)?)?.with_name("p28-8");
    Ok(ConstructionStages {
        k0,
        k1,
        k2,
        l1,
        l2,
        k0_prime,
        k1_prime,
        k2_prime,
        k_prime,
        k,
    })
}

/// Builds `P₂₈⁸` by the staged construction and checks it against the facet list.
pub fn construct_p28_8() -> Result<SimplicialComplex> {
    let staged = p28_8_stages()?.k;
    let listed = p28_8();
    if staged != listed {
        let extra: Vec<_> = staged.facets().iter().filter(|f| !listed.facets().contains(f)).collect();
        let missing: Vec<_> = listed.facets().iter().filter(|f| !staged.facets().contains(f)).collect();
        return Err(Error::ConstructionMismatch(format!(
            "unexpected facets {extra:?}, absent facets {missing:?}"
        )));
    }
    Ok(staged)
}

/// `P₂₈⁸` from the hard-coded facet list.
pub fn p28_8() -> SimplicialComplex {
    SimplicialComplex::from_lists(8, &P28_8_FACETS)
        .expect("facet list is valid")
        .with_name("p28-8")
}
