//! Finite abstract simplicial complexes on a labelled ground set `[m]`.
//!
//! A complex is stored by its facets (maximal faces). Every constructor reduces the
//! facet list to an antichain, sorts it lexicographically and checks that each
//! vertex of the ground set is covered, unless ghost vertices were explicitly
//! allowed. The void complex is never produced: a complex with no facets is the
//! complex `{∅}` whose only face is the empty simplex.

mod builtins;
mod faces;
pub mod io;
mod iso;
mod sphere;

pub use builtins::{
    boundary_simplex, construct_p28_8, cross_polytope, p28_8, p28_8_stages, polygon, simplex,
    truncated_simplex, two_points, ConstructionStages, P28_8_FACETS, P28_8_MISSING_FACES,
};
pub use faces::FaceTable;
pub use iso::{find_isomorphism, is_isomorphic};
pub use sphere::{pseudo_sphere_check, SphereCheck};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{cmp_graded_lex, VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<VertexSet>,
    name: Option<String>,
    has_ghosts: bool,
}

/// Minimal non-faces, sorted by (cardinality, lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFaceSet(Vec<VertexSet>);

/// A full subcomplex relabelled onto `1..=|I|`.
///
/// `labels[i]` is the parent label of vertex `i + 1`, so classes computed on
/// `complex` can be pushed back to the parent's coordinates.
#[derive(Clone, Debug)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<usize>,
    pub parent_vertices: VertexSet,
}

fn reduce_to_antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from facets; dominated faces are dropped and every vertex
    /// of `[m]` must appear in some facet.
    pub fn new(m: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        Self::build(m, facets.into_iter().collect(), false)
    }

    /// Like [`SimplicialComplex::new`], but vertices of `[m]` may be absent from all
    /// facets. Used for full subcomplexes of complexes that already carry ghosts.
    pub fn with_ghosts(m: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        Self::build(m, facets.into_iter().collect(), true)
    }

    /// Convenience constructor from label lists, mainly for tests and built-ins.
    pub fn from_lists<F: AsRef<[usize]>>(m: usize, facets: &[F]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| {
                VertexSet::try_from_vertices(f.as_ref().iter().copied())
                    .map_err(|vertex| Error::VertexOutOfRange { vertex, m })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, sets)
    }

    /// The complex `{∅}` on `m` (ghost) vertices.
    pub fn empty(m: usize) -> Self {
        assert!(m <= MAX_VERTICES);
        SimplicialComplex {
            m,
            facets: Vec::new(),
            name: None,
            has_ghosts: m > 0,
        }
    }

    fn build(m: usize, facets: Vec<VertexSet>, allow_ghosts: bool) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let ground = VertexSet::full(m);
        for f in &facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            if !f.is_subset(ground) {
                let vertex = (*f - ground).min_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        let facets = reduce_to_antichain(facets);
        let covered = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f);
        if !allow_ghosts {
            if let Some(v) = (ground - covered).min_vertex() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(SimplicialComplex {
            m,
            facets,
            name: None,
            has_ghosts: covered != ground,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Size of the ground set.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    /// Vertices that are faces (differs from the ground set only with ghosts).
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f)
    }

    /// True when some vertex of the ground set is not a face.
    pub fn has_ghosts(&self) -> bool {
        self.has_ghosts
    }

    /// Dimension; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    pub fn contains_face(&self, sigma: VertexSet) -> bool {
        sigma.is_empty() || self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// All faces grouped by dimension.
    pub fn face_table(&self) -> FaceTable {
        FaceTable::of_complex(self)
    }

    /// All `d`-faces in lexicographic order; `d = -1` yields the empty face.
    pub fn faces(&self, d: isize) -> Vec<VertexSet> {
        if d < -1 || d > self.dim() {
            return Vec::new();
        }
        let k = (d + 1) as usize;
        let mut out: BTreeSet<VertexSet> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            for s in f.subsets() {
                if s.len() == k {
                    out.insert(s);
                }
            }
        }
        if k == 0 {
            out.insert(VertexSet::EMPTY);
        }
        out.into_iter().collect()
    }

    /// `f_0, f_1, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_table().f_vector()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Minimal non-faces. A ghost vertex is a missing face of size one.
    pub fn missing_faces(&self) -> MissingFaceSet {
        let faces: HashSet<VertexSet> = self.face_table().iter_all().collect();
        let ground = self.ground_set();
        let mut found: BTreeSet<VertexSet> = BTreeSet::new();
        for &tau in &faces {
            for v in (ground - tau).iter() {
                let sigma = tau.with(v);
                if faces.contains(&sigma) || found.contains(&sigma) {
                    continue;
                }
                if sigma.iter().all(|w| faces.contains(&sigma.without(w))) {
                    found.insert(sigma);
                }
            }
        }
        let mut list: Vec<VertexSet> = found.into_iter().collect();
        list.sort_by(cmp_graded_lex);
        MissingFaceSet(list)
    }

    /// The full subcomplex on `i`, relabelled order-preservingly onto `1..=|I|`.
    pub fn full_subcomplex(&self, i: VertexSet) -> FullSubcomplex {
        let i = i & self.ground_set();
        let labels = i.to_vec();
        let mut relabel = vec![0usize; self.m];
        for (new, &old) in labels.iter().enumerate() {
            relabel[old - 1] = new + 1;
        }
        let restricted: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| *f & i)
            .filter(|f| !f.is_empty())
            .map(|f| f.map_labels(&relabel))
            .collect();
        let ghosts = !i.is_subset(self.vertex_set());
        let complex = if ghosts {
            SimplicialComplex::with_ghosts(labels.len(), restricted)
        } else {
            SimplicialComplex::new(labels.len(), restricted)
        }
        .expect("restriction of a valid complex is valid");
        FullSubcomplex {
            complex,
            labels,
            parent_vertices: i,
        }
    }

    /// Join; `other`'s labels are shifted by `self.m()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let shift: Vec<usize> = (1..=other.m).map(|v| v + self.m).collect();
        let left = if self.facets.is_empty() { vec![VertexSet::EMPTY] } else { self.facets.clone() };
        let right: Vec<VertexSet> = if other.facets.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            other.facets.iter().map(|f| f.map_labels(&shift)).collect()
        };
        let facets: Vec<VertexSet> = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| *a | *b))
            .filter(|f| !f.is_empty())
            .collect();
        Self::build(m, facets, self.has_ghosts || other.has_ghosts)
    }

    /// Cone with apex `apex`; the ground set grows to include the apex.
    pub fn cone(&self, apex: usize) -> Result<SimplicialComplex> {
        if apex == 0 || apex > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: apex, m: MAX_VERTICES });
        }
        if self.vertex_set().contains(apex) {
            return Err(Error::LabelCollision(apex));
        }
        let m = self.m.max(apex);
        let facets: Vec<VertexSet> = if self.facets.is_empty() {
            vec![VertexSet::singleton(apex)]
        } else {
            self.facets.iter().map(|f| f.with(apex)).collect()
        };
        // Subcomplexes used in staged constructions may not cover their ground set.
        Self::build(m, facets, true)
    }

    /// Union of two complexes presented on a common ground set.
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m.max(other.m);
        let facets = self.facets.iter().chain(other.facets.iter()).copied().collect();
        Self::build(m, facets, self.has_ghosts || other.has_ghosts)
    }

    /// Replaces `facet` by the cone from `new_label` over its boundary.
    pub fn stellar_subdivide_facet(&self, facet: VertexSet, new_label: usize) -> Result<SimplicialComplex> {
        if !self.facets.contains(&facet) {
            return Err(Error::NotAFacet(facet));
        }
        if new_label == 0 || new_label > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: new_label, m: MAX_VERTICES });
        }
        if self.vertex_set().contains(new_label) {
            return Err(Error::LabelCollision(new_label));
        }
        let mut facets: Vec<VertexSet> = self.facets.iter().copied().filter(|f| *f != facet).collect();
        facets.extend(facet.iter().map(|v| facet.without(v).with(new_label)));
        Self::build(self.m.max(new_label), facets, self.has_ghosts)
    }

    /// Applies a relabelling: vertex `v` becomes `map[v - 1]` on a ground set of size `new_m`.
    pub fn relabel(&self, map: &[usize], new_m: usize) -> Result<SimplicialComplex> {
        if map.len() != self.m {
            return Err(Error::ParameterOutOfRange(format!(
                "relabelling map has {} entries for {} vertices",
                map.len(),
                self.m
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v == 0 || v > new_m) {
            return Err(Error::VertexOutOfRange { vertex: bad, m: new_m });
        }
        let facets = self.facets.iter().map(|f| f.map_labels(map)).collect();
        Self::build(new_m, facets, self.has_ghosts)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("name", &self.name)
            .field("facets", &self.facets)
            .finish()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name} ")?;
        }
        write!(f, "[m={}]", self.m)?;
        for facet in &self.facets {
            write!(f, " {facet}")?;
        }
        Ok(())
    }
}

impl MissingFaceSet {
    pub fn as_slice(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.0.iter()
    }

    /// Union of all missing faces.
    pub fn support(&self) -> VertexSet {
        self.0.iter().fold(VertexSet::EMPTY, |acc, s| acc | *s)
    }

    /// Union of the missing faces contained in `j`. When this differs from `j`, the
    /// full subcomplex on `j` is a cone and hence contractible.
    pub fn cover_within(&self, j: VertexSet) -> VertexSet {
        self.0
            .iter()
            .filter(|s| s.is_subset(j))
            .fold(VertexSet::EMPTY, |acc, s| acc | *s)
    }

    /// Missing faces of the full subcomplex on `j` (in parent labels).
    pub fn restricted_to(&self, j: VertexSet) -> MissingFaceSet {
        MissingFaceSet(self.0.iter().copied().filter(|s| s.is_subset(j)).collect())
    }

    pub fn into_vec(self) -> Vec<VertexSet> {
        self.0
    }
}

impl<'a> IntoIterator for &'a MissingFaceSet {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
