//! Seeded random complexes for property tests and cross-validation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::VertexSet;

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    /// Complexes with more missing faces are rejected (keeps Taylor complexes small).
    pub max_missing_faces: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: 0x5eed,
            count: 120,
            max_vertices: 7,
            max_missing_faces: 10,
        }
    }
}

/// A complex on `m` vertices from a handful of random facets; uncovered
/// vertices become isolated points.
pub fn random_complex<R: Rng>(rng: &mut R, m: usize) -> SimplicialComplex {
    let facets = rng.gen_range(1..=6);
    let mut sets: Vec<VertexSet> = (0..facets)
        .map(|_| {
            let size = rng.gen_range(1..=m.min(4));
            let mut s = VertexSet::EMPTY;
            while s.len() < size {
                s = s.with(rng.gen_range(1..=m));
            }
            s
        })
        .collect();
    let covered = sets.iter().fold(VertexSet::EMPTY, |a, s| a | *s);
    sets.extend((VertexSet::full(m) - covered).iter().map(VertexSet::singleton));
    SimplicialComplex::new(m, sets).expect("random facets cover the ground set")
}

/// `config.count` complexes by rejection sampling; deterministic in the seed.
pub fn random_corpus(config: &CorpusConfig) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.count);
    while out.len() < config.count {
        let m = rng.gen_range(2..=config.max_vertices);
        let k = random_complex(&mut rng, m);
        if k.missing_faces().len() <= config.max_missing_faces {
            out.push(k.with_name(format!("random-{}", out.len())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let cfg = CorpusConfig::default();
        let a = random_corpus(&cfg);
        let b = random_corpus(&cfg);
        assert_eq!(a, b);
        assert_eq!(a.len(), 120);
        assert!(a.iter().all(|k| k.m() <= 7 && k.missing_faces().len() <= 10));
        let distinct: std::collections::HashSet<Vec<VertexSet>> = a.iter().map(|k| k.facets().to_vec()).collect();
        assert!(distinct.len() > 60);
    }
}
