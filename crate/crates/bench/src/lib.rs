//! Fixed inputs shared by the benchmarks in `benches/`.

use zkring_core::complex::{cross_polytope, p28_8, polygon, truncated_simplex};
use zkring_core::SimplicialComplex;

/// Complexes benchmarked by every method, smallest first.
pub fn fixtures() -> Vec<SimplicialComplex> {
    vec![
        polygon(8).expect("octagon"),
        truncated_simplex(3, 2).expect("truncated simplex"),
        cross_polytope(3).expect("cross-polytope"),
        p28_8(),
    ]
}

pub fn label(k: &SimplicialComplex) -> String {
    k.name().map_or_else(|| format!("m{}", k.m()), str::to_owned)
}
