use std::collections::HashMap;

use serde::Serialize;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::reduced_homology;
use crate::VertexSet;

/// Combinatorial and homological necessary conditions for a complex to be a
/// simplicial sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereCheck {
    pub dim: isize,
    /// Every codimension-one face lies in exactly two facets.
    pub pseudomanifold: bool,
    /// The facet graph (adjacent through ridges) is connected.
    pub strongly_connected: bool,
    pub euler_characteristic: i64,
    pub sphere_homology: bool,
}

impl SphereCheck {
    pub fn passed(&self) -> bool {
        self.pseudomanifold && self.strongly_connected && self.sphere_homology
    }
}

/// Runs the checks on a pure complex; impure input is rejected.
pub fn pseudo_sphere_check(k: &SimplicialComplex) -> Result<SphereCheck> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = k.dim();
    let facets = k.facets();
    let mut ridges: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for v in f.iter() {
            ridges.entry(f.without(v)).or_default().push(i);
        }
    }
    let pseudomanifold = !facets.is_empty() && ridges.values().all(|c| c.len() == 2);

    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for owners in ridges.values() {
        for w in owners.windows(2) {
            let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let components = (0..facets.len()).filter(|&i| root(&mut parent, i) == i).count();

    Ok(SphereCheck {
        dim,
        pseudomanifold,
        strongly_connected: components == 1,
        euler_characteristic: k.euler_characteristic(),
        sphere_homology: reduced_homology(k).is_sphere_homology(dim),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_simplex, cross_polytope, p28_8, polygon, simplex, two_points};

    #[test]
    fn spheres_pass() {
        for k in [
            p28_8(),
            two_points(),
            polygon(7).unwrap(),
            boundary_simplex(4).unwrap(),
            cross_polytope(3).unwrap(),
        ] {
            let c = pseudo_sphere_check(&k).unwrap();
            assert!(c.passed(), "{k}");
        }
        assert_eq!(pseudo_sphere_check(&p28_8()).unwrap().euler_characteristic, 0);
    }

    #[test]
    fn non_spheres_fail() {
        assert!(!pseudo_sphere_check(&simplex(2).unwrap()).unwrap().passed());
        let two_circles =
            SimplicialComplex::from_lists(6, &[[1, 2], [1, 3], [2, 3], [4, 5], [4, 6], [5, 6]]).unwrap();
        let c = pseudo_sphere_check(&two_circles).unwrap();
        assert!(c.pseudomanifold && !c.strongly_connected && !c.passed());
        let impure = SimplicialComplex::from_lists(3, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(pseudo_sphere_check(&impure), Err(Error::NotPure));
    }
}
