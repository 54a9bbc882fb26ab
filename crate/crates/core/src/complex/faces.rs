use std::collections::{BTreeSet, HashMap};

use super::SimplicialComplex;
use crate::VertexSet;

/// Every face of a complex, grouped by dimension and sorted lexicographically
/// inside each dimension, with a reverse index.
///
/// Slot `k` holds the faces with `k` vertices, i.e. dimension `k - 1`; slot 0 is
/// the empty face. Labels are whatever the producing complex used, so a table
/// restricted to `J` keeps the parent's labels.
#[derive(Clone, Debug)]
pub struct FaceTable {
    by_size: Vec<Vec<VertexSet>>,
    index: HashMap<VertexSet, usize>,
}

impl FaceTable {
    pub fn of_complex(k: &SimplicialComplex) -> Self {
        let mut all: BTreeSet<VertexSet> = BTreeSet::new();
        all.insert(VertexSet::EMPTY);
        for f in k.facets() {
            all.extend(f.subsets());
        }
        Self::from_faces(all)
    }

    /// Builds a table from a downward-closed family of faces.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(faces: I) -> Self {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for f in faces {
            let k = f.len();
            if by_size.len() <= k {
                by_size.resize_with(k + 1, Vec::new);
            }
            by_size[k].push(f);
        }
        for v in &mut by_size {
            v.sort();
            v.dedup();
        }
        while by_size.len() > 1 && by_size.last().is_some_and(|v| v.is_empty()) {
            by_size.pop();
        }
        let index = by_size
            .iter()
            .flat_map(|v| v.iter().enumerate().map(|(i, f)| (*f, i)))
            .collect();
        FaceTable { by_size, index }
    }

    /// The faces contained in `j`; this is the face table of the full subcomplex on `j`.
    pub fn restrict(&self, j: VertexSet) -> Self {
        let by_size: Vec<Vec<VertexSet>> = self
            .by_size
            .iter()
            .take(j.len() + 1)
            .map(|v| v.iter().copied().filter(|f| f.is_subset(j)).collect())
            .collect();
        let mut t = FaceTable {
            by_size,
            index: HashMap::new(),
        };
        while t.by_size.len() > 1 && t.by_size.last().is_some_and(|v| v.is_empty()) {
            t.by_size.pop();
        }
        t.index = t
            .by_size
            .iter()
            .flat_map(|v| v.iter().enumerate().map(|(i, f)| (*f, i)))
            .collect();
        t
    }

    /// Dimension of the complex (`-1` when only the empty face exists).
    pub fn dim(&self) -> isize {
        self.by_size.len() as isize - 2
    }

    /// Faces of dimension `d` (empty slice when out of range).
    pub fn faces(&self, d: isize) -> &[VertexSet] {
        if d < -1 {
            return &[];
        }
        self.by_size.get((d + 1) as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, d: isize) -> usize {
        self.faces(d).len()
    }

    /// Position of `face` inside its dimension's list.
    pub fn index_of(&self, face: VertexSet) -> Option<usize> {
        self.index.get(&face).copied()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.index.contains_key(&face)
    }

    pub fn iter_all(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.by_size.iter().flatten().copied()
    }

    /// Total number of faces including the empty face.
    pub fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().skip(1).map(Vec::len).collect()
    }
}
