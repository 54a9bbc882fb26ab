//! The cup product on `H*(Z_K)` through full-subcomplex cochains.
//!
//! For disjoint `I`, `J` the juxtaposition product sends cocycles on `K_I` and
//! `K_J` to a cocycle on `K_{I⊔J}`. Matching it with the cup product on `Z_K`
//! requires a sign depending only on the addresses of the two classes; with it
//! the product is associative and graded-commutative in total degree.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{pseudo_sphere_check, FaceTable, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hochster::{bigraded_betti, BigradedBetti};
use crate::homology::{ChainComplexZ, CohomologyBasis};
use crate::linalg::{IntegerMatrix, RationalSpan};
use crate::vertex_set::cmp_graded_lex;
use crate::VertexSet;

/// A cochain on the full subcomplex `K_J` in reduced degree `d`, indexed by the
/// `d`-faces of `K_J` in lexicographic order (parent labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterClass {
    pub j: VertexSet,
    pub d: isize,
    pub cochain: Vec<BigInt>,
}

impl HochsterClass {
    /// Total degree `|J| + d + 1`.
    pub fn degree(&self) -> usize {
        (self.j.len() as isize + self.d + 1) as usize
    }

    pub fn is_zero_cochain(&self) -> bool {
        self.cochain.iter().all(Zero::is_zero)
    }

    /// The unit: the class of the empty face on `K_∅`.
    pub fn unit() -> Self {
        HochsterClass {
            j: VertexSet::EMPTY,
            d: -1,
            cochain: vec![BigInt::one()],
        }
    }
}

fn check_shape(c: &HochsterClass, faces: &FaceTable) -> Result<FaceTable> {
    let restricted = faces.restrict(c.j);
    if c.cochain.len() != restricted.count(c.d) || c.d < -1 {
        return Err(Error::DegreeMismatch(format!(
            "cochain of length {} is not a degree-{} cochain on K_{}",
            c.cochain.len(),
            c.d,
            c.j
        )));
    }
    Ok(restricted)
}

/// Juxtaposition product of cochains on `K_I` and `K_J`, landing on `K_{I∪J}` in
/// degree `d₁ + d₂ + 1`. Zero when `I ∩ J ≠ ∅`. The value on `ρ = σ ⊔ τ` is
/// `c₁(σ) c₂(τ)` times the sign of the shuffle sorting `σ` followed by `τ`.
pub fn star_product(c1: &HochsterClass, c2: &HochsterClass, faces: &FaceTable) -> Result<HochsterClass> {
    let left = check_shape(c1, faces)?;
    let right = check_shape(c2, faces)?;
    let j = c1.j | c2.j;
    let d = c1.d + c2.d + 1;
    let target = faces.restrict(j);
    let mut cochain = vec![BigInt::zero(); target.count(d)];
    if !c1.j.is_disjoint(c2.j) {
        return Ok(HochsterClass { j, d, cochain });
    }
    for (slot, &rho) in cochain.iter_mut().zip(target.faces(d)) {
        let sigma = rho & c1.j;
        let tau = rho & c2.j;
        if sigma.len() as isize != c1.d + 1 {
            continue;
        }
        let a = &c1.cochain[left.index_of(sigma).expect("face of K_I")];
        let b = &c2.cochain[right.index_of(tau).expect("face of K_J")];
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let v = a * b;
        *slot = if sigma.shuffle_sign(tau) < 0 { -v } else { v };
    }
    let result = HochsterClass { j, d, cochain };
    let delta = ChainComplexZ::from_faces(target).coboundary(d).to_bigint();
    assert!(
        delta.mul_vec(&result.cochain).iter().all(Zero::is_zero),
        "star product of cocycles must be a cocycle"
    );
    Ok(result)
}

/// Sign relating the juxtaposition product to the cup product on `Z_K` for
/// classes at `(J_g, d_g)` and `(J_h, d_h)`.
pub fn product_sign(jg: VertexSet, dg: isize, jh: VertexSet, dh: isize) -> i32 {
    let exponent = (dg + 1) * (jh.len() as isize - dh - 1);
    let parity = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
    jg.shuffle_sign(jh) * parity
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: usize,
    pub class: HochsterClass,
    /// Position inside the basis of `H̃^d(K_J)`.
    pub index: usize,
}

impl Generator {
    pub fn degree(&self) -> usize {
        self.class.degree()
    }
}

/// Sparse integer combination of generators.
pub type Element = BTreeMap<usize, BigInt>;

/// An additive basis of the free part of `H*(Z_K)` with all pairwise products.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub m: usize,
    pub dim: isize,
    /// Ordered by `(degree, J, index)`; id 0 is the unit.
    pub generators: Vec<Generator>,
    /// Nonzero products `g · h`, for all ordered pairs.
    pub products: BTreeMap<(usize, usize), Element>,
    /// Generator spanning the top degree when `K` is a sphere candidate.
    pub fundamental_class: Option<usize>,
    pub warnings: Vec<String>,
}

/// `(g, h, [(k, coefficient)])`; coefficients are decimal strings.
type ProductRow = (usize, usize, Vec<(usize, String)>);

#[derive(Serialize)]
struct GeneratorJson {
    id: usize,
    #[serde(rename = "J")]
    j: Vec<usize>,
    d: isize,
    p: usize,
}

#[derive(Serialize)]
struct RingJson {
    m: usize,
    dim: isize,
    generators: Vec<GeneratorJson>,
    products: Vec<ProductRow>,
    fundamental_class: Option<usize>,
    warnings: Vec<String>,
}

impl RingPresentation {
    pub fn generator(&self, id: usize) -> &Generator {
        &self.generators[id]
    }

    /// Generators at address `(J, d)`.
    pub fn at(&self, j: VertexSet, d: isize) -> Vec<usize> {
        self.generators
            .iter()
            .filter(|g| g.class.j == j && g.class.d == d)
            .map(|g| g.id)
            .collect()
    }

    pub fn in_degree(&self, p: usize) -> Vec<usize> {
        self.generators.iter().filter(|g| g.degree() == p).map(|g| g.id).collect()
    }

    pub fn product(&self, g: usize, h: usize) -> Element {
        self.products.get(&(g, h)).cloned().unwrap_or_default()
    }

    pub fn basis_element(&self, g: usize) -> Element {
        BTreeMap::from([(g, BigInt::one())])
    }

    /// Bilinear extension of the generator products.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::new();
        for (g, x) in a {
            for (h, y) in b {
                for (k, z) in self.products.get(&(*g, *h)).into_iter().flatten() {
                    *out.entry(*k).or_insert_with(BigInt::zero) += x * y * z;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Product of a sequence of generators, left to right.
    pub fn multiply_all(&self, ids: &[usize]) -> Element {
        let mut acc = self.basis_element(0);
        for &g in ids {
            acc = self.multiply(&acc, &self.basis_element(g));
        }
        acc
    }

    pub fn top_degree(&self) -> usize {
        self.generators.iter().map(Generator::degree).max().unwrap_or(0)
    }

    /// Rank of `(I^t)_p` where `I` is the augmentation ideal: products of `t`
    /// positive-degree generators with pairwise disjoint supports span it.
    pub fn power_rank(&self, t: usize, p: usize) -> usize {
        let positive: Vec<usize> = self.generators.iter().filter(|g| g.degree() > 0).map(|g| g.id).collect();
        let mut span = RationalSpan::new(self.generators.len());
        let mut chosen = Vec::new();
        self.collect_products(&positive, 0, t, p, VertexSet::EMPTY, 0, &mut chosen, &mut span);
        span.rank()
    }

    /// Some product of `t` distinct positive-degree generators that is nonzero in
    /// degree `p`, if one exists.
    pub fn nonzero_product(&self, t: usize, p: usize) -> Option<Vec<usize>> {
        fn search(
            r: &RingPresentation,
            start: usize,
            t: usize,
            p: usize,
            used: VertexSet,
            degree: usize,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if chosen.len() == t {
                return degree == p && !r.multiply_all(chosen).is_empty();
            }
            for g in &r.generators[start..] {
                if g.degree() == 0 || degree + g.degree() > p || !g.class.j.is_disjoint(used) {
                    continue;
                }
                chosen.push(g.id);
                if search(r, g.id + 1, t, p, used | g.class.j, degree + g.degree(), chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        search(self, 0, t, p, VertexSet::EMPTY, 0, &mut chosen).then_some(chosen)
    }

    #[allow(clippy::too_many_arguments)]
    fn collect_products(
        &self,
        pool: &[usize],
        start: usize,
        t: usize,
        p: usize,
        used: VertexSet,
        degree: usize,
        chosen: &mut Vec<usize>,
        span: &mut RationalSpan,
    ) {
        if chosen.len() == t {
            if degree == p {
                let e = self.multiply_all(chosen);
                if !e.is_empty() {
                    let mut v = vec![BigInt::zero(); self.generators.len()];
                    for (k, x) in e {
                        v[k] = x;
                    }
                    span.insert(&v);
                }
            }
            return;
        }
        for i in start..pool.len() {
            let g = &self.generators[pool[i]];
            if degree + g.degree() > p || !g.class.j.is_disjoint(used) {
                continue;
            }
            chosen.push(g.id);
            self.collect_products(pool, i + 1, t, p, used | g.class.j, degree + g.degree(), chosen, span);
            chosen.pop();
        }
    }

    /// Determinant of the pairing `H^p × H^{N−p} → H^N ≅ Z` against the
    /// fundamental class.
    pub fn pairing_determinant(&self, p: usize) -> Option<BigInt> {
        let top = self.fundamental_class?;
        let n = self.generator(top).degree();
        if p > n {
            return None;
        }
        let rows = self.in_degree(p);
        let cols = self.in_degree(n - p);
        if rows.len() != cols.len() {
            return Some(BigInt::zero());
        }
        let entries: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&g| {
                cols.iter()
                    .map(|&h| self.product(g, h).get(&top).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        if entries.is_empty() {
            return Some(BigInt::one());
        }
        Some(IntegerMatrix::from_rows(entries).determinant())
    }

    /// `(p, det)` for every `p` in `0..=N`; unimodular means every `|det| = 1`.
    pub fn poincare_pairing(&self) -> Vec<(usize, BigInt)> {
        let Some(top) = self.fundamental_class else { return Vec::new() };
        let n = self.generator(top).degree();
        (0..=n).filter_map(|p| self.pairing_determinant(p).map(|d| (p, d))).collect()
    }

    pub fn pairing_is_unimodular(&self) -> bool {
        let dets = self.poincare_pairing();
        !dets.is_empty() && dets.iter().all(|(_, d)| d.abs().is_one())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let report = RingJson {
            m: self.m,
            dim: self.dim,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    id: g.id,
                    j: g.class.j.to_vec(),
                    d: g.class.d,
                    p: g.degree(),
                })
                .collect(),
            products: self
                .products
                .iter()
                .map(|((g, h), e)| (*g, *h, e.iter().map(|(k, v)| (*k, v.to_string())).collect()))
                .collect(),
            fundamental_class: self.fundamental_class,
            warnings: self.warnings.clone(),
        };
        serde_json::to_value(report).expect("ring report serialises")
    }
}

/// Generators of `H*(Z_K)` from the Hochster decomposition, one per free basis
/// element of each nonzero `H̃^d(K_J)`, together with their full product table.
pub fn ring_presentation(k: &SimplicialComplex) -> Result<RingPresentation> {
    let betti = bigraded_betti(k)?;
    Ok(presentation_from(k, &betti))
}

/// Ring presentation from an already computed bigraded table of `k`.
pub fn presentation_from(k: &SimplicialComplex, betti: &BigradedBetti) -> RingPresentation {
    let faces = k.face_table();
    let mut warnings = Vec::new();
    let mut bases: HashMap<VertexSet, CohomologyBasis> = HashMap::new();
    for e in betti.entries() {
        if !e.group.torsion.is_empty() {
            warnings.push(format!(
                "torsion {:?} in H^{}(K_{}) is left out of the presentation",
                e.group.torsion, e.d, e.j
            ));
        }
        bases
            .entry(e.j)
            .or_insert_with(|| CohomologyBasis::new(faces.restrict(e.j)));
    }
    let mut generators: Vec<Generator> = Vec::new();
    for e in betti.entries() {
        for (index, rep) in bases[&e.j].free(e.d).iter().enumerate() {
            generators.push(Generator {
                id: 0,
                class: HochsterClass {
                    j: e.j,
                    d: e.d,
                    cochain: rep.clone(),
                },
                index,
            });
        }
    }
    generators.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| cmp_graded_lex(&a.class.j, &b.class.j))
            .then(a.class.d.cmp(&b.class.d))
            .then(a.index.cmp(&b.index))
    });
    for (i, g) in generators.iter_mut().enumerate() {
        g.id = i;
    }
    let lookup: HashMap<(VertexSet, isize, usize), usize> = generators
        .iter()
        .map(|g| ((g.class.j, g.class.d, g.index), g.id))
        .collect();

    let rows: Vec<Vec<((usize, usize), Element)>> = generators
        .par_iter()
        .map(|g| {
            let mut row = Vec::new();
            for h in &generators {
                if !g.class.j.is_disjoint(h.class.j) {
                    continue;
                }
                let j = g.class.j | h.class.j;
                let Some(basis) = bases.get(&j) else { continue };
                let c = star_product(&g.class, &h.class, &faces).expect("generators have consistent shapes");
                let coords = basis.express(c.d, &c.cochain).expect("star product is a cocycle");
                let sign = product_sign(g.class.j, g.class.d, h.class.j, h.class.d);
                let element: Element = coords
                    .free
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (lookup[&(j, c.d, i)], if sign < 0 { -x } else { x }))
                    .collect();
                if !element.is_empty() {
                    row.push(((g.id, h.id), element));
                }
            }
            row
        })
        .collect();
    let products = rows.into_iter().flatten().collect();

    let fundamental_class = pseudo_sphere_check(k)
        .ok()
        .filter(|c| c.passed())
        .and_then(|c| lookup.get(&(VertexSet::full(k.m()), c.dim, 0)).copied());

    RingPresentation {
        m: k.m(),
        dim: k.dim(),
        generators,
        products,
        fundamental_class,
        warnings,
    }
}

/// Rank of the span of all products of at least three generators of positive
/// degree landing in `target`.
pub fn triple_product_rank(p: &RingPresentation, target: usize) -> usize {
    let mut span = RationalSpan::new(p.generators.len());
    let positive: Vec<usize> = p.generators.iter().filter(|g| g.degree() > 0).map(|g| g.id).collect();
    // positive degrees are at least 3, so longer products cannot reach `target`
    for t in 3..=(target / 3).min(positive.len()) {
        let mut chosen = Vec::new();
        p.collect_products(&positive, 0, t, target, VertexSet::EMPTY, 0, &mut chosen, &mut span);
    }
    span.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorialityReport {
    pub pairs_checked: usize,
    pub failures: Vec<(usize, usize)>,
    /// Generators of `K` whose restriction to `K′` is nonzero.
    pub surviving_generators: usize,
}

impl FunctorialityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that restriction to a full subcomplex commutes with products.
///
/// `map[v − 1]` is the label in `K` of vertex `v` of `K′`; it must be strictly
/// increasing and `K′` must be the full subcomplex of `K` on its image.
pub fn functoriality_check(k: &SimplicialComplex, sub: &SimplicialComplex, map: &[usize]) -> Result<FunctorialityReport> {
    if map.len() != sub.m() || map.iter().any(|&v| v == 0 || v > k.m()) {
        return Err(Error::NotASubcomplex("vertex map does not fit the ground sets".into()));
    }
    if map.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotASubcomplex("vertex map must be strictly increasing".into()));
    }
    let image = VertexSet::from_vertices(map.iter().copied());
    let full = k.full_subcomplex(image).complex;
    if full.facets() != sub.facets() {
        return Err(Error::NotASubcomplex(format!("K' is not the full subcomplex of K on {image}")));
    }
    let big = ring_presentation(k)?;
    let small = ring_presentation(sub)?;
    let mut inverse = vec![0usize; k.m()];
    for (i, &v) in map.iter().enumerate() {
        inverse[v - 1] = i + 1;
    }
    // Under an increasing map the face tables of K_J and K'_{J'} agree up to
    // relabelling, so both presentations pick the same representatives.
    let small_lookup: HashMap<(VertexSet, isize, usize), usize> = small
        .generators
        .iter()
        .map(|g| ((g.class.j, g.class.d, g.index), g.id))
        .collect();
    let restrict = |g: usize| -> Element {
        let gen = big.generator(g);
        let c = &gen.class;
        if !c.j.is_subset(image) {
            return Element::new();
        }
        let id = small_lookup[&(c.j.map_labels(&inverse), c.d, gen.index)];
        debug_assert_eq!(small.generator(id).class.cochain, c.cochain);
        Element::from([(id, BigInt::one())])
    };
    let restrict_element = |e: &Element| -> Element {
        let mut out = Element::new();
        for (g, x) in e {
            for (h, y) in restrict(*g) {
                *out.entry(h).or_insert_with(BigInt::zero) += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };
    let ids: Vec<usize> = (0..big.generators.len()).collect();
    let surviving_generators = ids.iter().filter(|&&g| !restrict(g).is_empty()).count();
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for &g in &ids {
        for &h in &ids {
            let lhs = small.multiply(&restrict(g), &restrict(h));
            let rhs = restrict_element(&big.product(g, h));
            pairs_checked += 1;
            if lhs != rhs {
                failures.push((g, h));
            }
        }
    }
    Ok(FunctorialityReport {
        pairs_checked,
        failures,
        surviving_generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope, p28_8, polygon};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn one(g: usize, sign_free: &Element) -> bool {
        sign_free.len() == 1 && sign_free.get(&g).is_some_and(|x| x.abs().is_one())
    }

    #[test]
    fn quadrilateral_ring() {
        let k = polygon(4).unwrap();
        let r = ring_presentation(&k).unwrap();
        assert_eq!(r.generators.len(), 4);
        let a = r.at(vs(&[1, 3]), 0)[0];
        let b = r.at(vs(&[2, 4]), 0)[0];
        let top = r.fundamental_class.unwrap();
        assert!(one(top, &r.product(a, b)));
        assert!(r.product(a, a).is_empty());
        assert!(r.product(b, b).is_empty());
        assert!(r.pairing_is_unimodular());
        assert_eq!(triple_product_rank(&r, 6), 0);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn star_product_examples() {
        let k = polygon(4).unwrap();
        let faces = k.face_table();
        let a = HochsterClass { j: vs(&[1, 3]), d: 0, cochain: vec![BigInt::zero(), BigInt::one()] };
        let b = HochsterClass { j: vs(&[2, 4]), d: 0, cochain: vec![BigInt::zero(), BigInt::one()] };
        let c = star_product(&a, &b, &faces).unwrap();
        assert_eq!((c.j, c.d), (VertexSet::full(4), 1));
        let basis = CohomologyBasis::new(faces.restrict(c.j));
        assert!(basis.express(1, &c.cochain).unwrap().free[0].abs().is_one());
        let overlap = star_product(&a, &a, &faces).unwrap();
        assert!(overlap.is_zero_cochain());
        let bad = HochsterClass { j: vs(&[1, 3]), d: 1, cochain: vec![BigInt::one()] };
        assert!(matches!(star_product(&bad, &b, &faces), Err(Error::DegreeMismatch(_))));
    }

    fn graded_commutative_and_associative(r: &RingPresentation) {
        let n = r.generators.len();
        for g in 0..n {
            for h in 0..n {
                let gh = r.product(g, h);
                let hg = r.product(h, g);
                let sign = if (r.generator(g).degree() * r.generator(h).degree()) % 2 == 1 { -1 } else { 1 };
                let expected: Element = hg.iter().map(|(k, v)| (*k, v * sign)).collect();
                assert_eq!(gh, expected, "commutativity for ({g}, {h})");
            }
        }
        for g in 0..n {
            for h in 0..n {
                for l in 0..n {
                    let (eg, eh, el) = (r.basis_element(g), r.basis_element(h), r.basis_element(l));
                    let left = r.multiply(&r.multiply(&eg, &eh), &el);
                    let right = r.multiply(&eg, &r.multiply(&eh, &el));
                    assert_eq!(left, right, "associativity for ({g}, {h}, {l})");
                }
            }
        }
    }

    #[test]
    fn octahedron_ring() {
        let r = ring_presentation(&cross_polytope(2).unwrap()).unwrap();
        assert_eq!(r.in_degree(3).len(), 3);
        assert_eq!(triple_product_rank(&r, 9), 1);
        assert!(r.pairing_is_unimodular());
        graded_commutative_and_associative(&r);
    }

    #[test]
    fn pentagon_ring_laws() {
        let r = ring_presentation(&polygon(5).unwrap()).unwrap();
        graded_commutative_and_associative(&r);
        assert!(r.pairing_is_unimodular());
    }

    #[test]
    fn p28_ring() {
        let r = ring_presentation(&p28_8()).unwrap();
        assert_eq!(r.generators.len(), 40);
        assert!(r.pairing_is_unimodular());
        assert_eq!(triple_product_rank(&r, 12), 1);
        let a1 = r.at(vs(&[5, 6]), 0)[0];
        let a2 = r.at(vs(&[7, 8]), 0)[0];
        let alpha0_prime = r.at(vs(&[5, 6, 7, 8]), 1)[0];
        assert!(one(alpha0_prime, &r.product(a1, a2)));
        assert_eq!(r.power_rank(3, 12), 1);
        assert_eq!(r.power_rank(4, 12), 0);
    }

    #[test]
    fn functoriality() {
        let k = p28_8();
        let sub = k.full_subcomplex(vs(&[5, 6, 7, 8])).complex;
        let rep = functoriality_check(&k, &sub, &[5, 6, 7, 8]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.surviving_generators >= 4);
        let id: Vec<usize> = (1..=8).collect();
        assert!(functoriality_check(&k, &k, &id).unwrap().passed());
        let facet = k.facets()[0];
        let simplex = k.full_subcomplex(facet).complex;
        let rep = functoriality_check(&k, &simplex, &facet.to_vec()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.surviving_generators, 1);
        assert!(matches!(
            functoriality_check(&k, &polygon(4).unwrap(), &[1, 2, 3, 4]),
            Err(Error::NotASubcomplex(_))
        ));
    }
}
