use num_bigint::BigInt;
use num_traits::Zero;
use zkring_core::corpus::{random_corpus, CorpusConfig};
use zkring_core::hochster::{bigraded_betti_with, HochsterOptions};
use zkring_core::homology::{reduced_cohomology_basis, ChainComplexZ};
use zkring_core::resolutions::cross_check;
use zkring_core::ring::{ring_presentation, Element};
use zkring_core::{reduced_homology, VertexSet};

fn corpus() -> Vec<zkring_core::SimplicialComplex> {
    random_corpus(&CorpusConfig::default())
}

#[test]
fn three_methods_agree() {
    for k in corpus() {
        cross_check(&k).unwrap_or_else(|e| panic!("{k}: {e}"));
    }
}

#[test]
fn universal_coefficients() {
    for k in corpus() {
        let (h, c) = ChainComplexZ::of_complex(&k).groups();
        for d in -1..=k.dim() {
            assert_eq!(h.rank(d), c.rank(d), "{k}");
            assert_eq!(c.get(d).torsion, h.get(d - 1).torsion, "{k}");
        }
    }
}

#[test]
fn cones_are_acyclic() {
    for k in corpus() {
        let apex = k.m() + 1;
        assert!(reduced_homology(&k.cone(apex).unwrap()).is_acyclic(), "{k}");
    }
}

#[test]
fn boundaries_square_to_zero() {
    for k in corpus() {
        assert!(ChainComplexZ::of_complex(&k).boundary_squares_to_zero(), "{k}");
    }
}

#[test]
fn uncovered_missing_faces_mean_contractible() {
    for k in corpus() {
        let mf = k.missing_faces();
        for bits in 1..(1u64 << k.m()) {
            let j = VertexSet::from_bits(bits);
            if mf.cover_within(j) != j {
                let sub = k.full_subcomplex(j).complex;
                assert!(reduced_homology(&sub).is_acyclic(), "{k} on {j}");
            }
        }
    }
}

#[test]
fn pruning_and_threads_are_invisible() {
    for k in corpus().into_iter().take(40) {
        let base = bigraded_betti_with(&k, &HochsterOptions { threads: 1, ..Default::default() }).unwrap();
        let unpruned = bigraded_betti_with(&k, &HochsterOptions { prune: false, threads: 4, ..Default::default() }).unwrap();
        assert_eq!(base, unpruned, "{k}");
    }
}

#[test]
fn cohomology_basis_round_trip() {
    for k in corpus().into_iter().take(40) {
        let b = reduced_cohomology_basis(&k);
        for d in -1..=k.dim() {
            for (i, rep) in b.free(d).iter().enumerate() {
                let x = b.express(d, rep).unwrap();
                let expected: Vec<BigInt> = (0..b.rank(d)).map(|j| BigInt::from(i32::from(i == j))).collect();
                assert_eq!(x.free, expected);
                assert!(x.torsion.iter().all(Zero::is_zero));
            }
        }
    }
}

#[test]
fn ring_laws() {
    for k in corpus().into_iter().take(60) {
        let r = ring_presentation(&k).unwrap();
        let n = r.generators.len();
        for g in 0..n {
            for h in 0..n {
                let sign = if r.generator(g).degree() * r.generator(h).degree() % 2 == 1 { -1 } else { 1 };
                let swapped: Element = r.product(h, g).into_iter().map(|(i, v)| (i, v * sign)).collect();
                assert_eq!(r.product(g, h), swapped, "{k}: ({g},{h})");
                for l in 0..n {
                    let (eg, eh, el) = (r.basis_element(g), r.basis_element(h), r.basis_element(l));
                    assert_eq!(
                        r.multiply(&r.multiply(&eg, &eh), &el),
                        r.multiply(&eg, &r.multiply(&eh, &el)),
                        "{k}: ({g},{h},{l})"
                    );
                }
            }
        }
    }
}
