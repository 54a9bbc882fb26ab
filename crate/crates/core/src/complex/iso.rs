use super::SimplicialComplex;
use crate::VertexSet;

/// Searches for a vertex bijection carrying `a` onto `b`.
///
/// Returns `map` with `map[v - 1]` the image of vertex `v`. Plain backtracking with
/// facet-degree and partial-face pruning; intended for the small complexes used in
/// tests and sanity checks.
pub fn find_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<usize>> {
    if a.m() != b.m() || a.facets().len() != b.facets().len() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.facets().iter().map(|f| f.len()).collect();
    let mut sizes_b: Vec<usize> = b.facets().iter().map(|f| f.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let m = a.m();
    let degree = |k: &SimplicialComplex, v: usize| -> Vec<usize> {
        let mut d: Vec<usize> = k.facets().iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
        d.sort_unstable();
        d
    };
    let deg_a: Vec<Vec<usize>> = (1..=m).map(|v| degree(a, v)).collect();
    let deg_b: Vec<Vec<usize>> = (1..=m).map(|v| degree(b, v)).collect();

    let mut map = vec![0usize; m];
    let mut used = VertexSet::EMPTY;
    if search(a, b, &deg_a, &deg_b, 1, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    find_isomorphism(a, b).is_some()
}

fn consistent(a: &SimplicialComplex, b: &SimplicialComplex, map: &[usize], assigned: VertexSet) -> bool {
    let inverse_image = |s: VertexSet| -> VertexSet {
        // labels of `a` mapping into `s`
        assigned.iter().filter(|v| s.contains(map[v - 1])).collect()
    };
    a.facets()
        .iter()
        .all(|f| b.contains_face((*f & assigned).map_labels(map)))
        && b.facets().iter().all(|g| a.contains_face(inverse_image(*g)))
}

fn search(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    deg_a: &[Vec<usize>],
    deg_b: &[Vec<usize>],
    v: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let m = a.m();
    if v > m {
        let mut image: Vec<VertexSet> = a.facets().iter().map(|f| f.map_labels(map)).collect();
        image.sort();
        return image == b.facets();
    }
    let assigned = VertexSet::full(v);
    for w in 1..=m {
        if used.contains(w) || deg_a[v - 1] != deg_b[w - 1] {
            continue;
        }
        map[v - 1] = w;
        *used = used.with(w);
        if consistent(a, b, map, assigned) && search(a, b, deg_a, deg_b, v + 1, map, used) {
            return true;
        }
        *used = used.without(w);
        map[v - 1] = 0;
    }
    false
}
