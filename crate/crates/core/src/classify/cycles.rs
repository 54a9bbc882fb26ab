use serde::Serialize;

use crate::complex::{is_isomorphic, polygon, SimplicialComplex};
use crate::error::{Error, Result};
use crate::VertexSet;

/// A chordless cycle of the 1-skeleton whose full subcomplex is a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedCycle {
    /// Vertices in cyclic order, starting at the smallest, second vertex smaller
    /// than the last.
    pub order: Vec<usize>,
}

impl InducedCycle {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.order.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn adjacency(k: &SimplicialComplex) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; k.m() + 1];
    for e in k.faces(1) {
        let v = e.to_vec();
        adj[v[0]] = adj[v[0]].with(v[1]);
        adj[v[1]] = adj[v[1]].with(v[0]);
    }
    adj
}

/// All induced cycles with `min_len ≤ length ≤ max_len`, found by extending
/// chordless paths from their smallest vertex. Requires `min_len ≥ 4`, where a
/// chordless cycle spans no triangle and its full subcomplex is a polygon.
pub fn induced_cycles(k: &SimplicialComplex, min_len: usize, max_len: usize) -> Result<Vec<InducedCycle>> {
    if min_len < 4 {
        return Err(Error::ParameterOutOfRange(format!("induced cycles need min_len >= 4, got {min_len}")));
    }
    let adj = adjacency(k);
    let mut out = Vec::new();
    for s in 1..=k.m() {
        let mut path = vec![s];
        extend(&adj, s, min_len, max_len, &mut path, &mut out);
    }
    out.sort_by(|a: &InducedCycle, b| a.len().cmp(&b.len()).then_with(|| a.order.cmp(&b.order)));
    Ok(out)
}

fn extend(
    adj: &[VertexSet],
    s: usize,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<InducedCycle>,
) {
    let last = *path.last().expect("nonempty path");
    let interior: VertexSet = if path.len() > 2 {
        path[1..path.len() - 1].iter().copied().collect()
    } else {
        VertexSet::EMPTY
    };
    let on_path: VertexSet = path.iter().copied().collect();
    for v in adj[last].iter() {
        if v <= s || on_path.contains(v) || !adj[v].is_disjoint(interior) {
            continue;
        }
        if path.len() >= 2 && adj[v].contains(s) {
            let len = path.len() + 1;
            if len >= min_len && len <= max_len && path[1] < v {
                let mut order = path.clone();
                order.push(v);
                out.push(InducedCycle { order });
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(v);
            extend(adj, s, min_len, max_len, path, out);
            path.pop();
        }
    }
}

/// Re-verifies a witness: the full subcomplex on its vertices is a polygon.
pub fn is_induced_polygon(k: &SimplicialComplex, cycle: &InducedCycle) -> bool {
    let n = cycle.len();
    if n < 3 {
        return false;
    }
    let full = k.full_subcomplex(cycle.vertex_set()).complex;
    full.dim() == 1 && full.facets().len() == n && polygon(n).is_ok_and(|p| is_isomorphic(&full, &p))
}
