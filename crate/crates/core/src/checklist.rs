//! End-to-end reproduction of the `P₂₈⁸` computation as a pass/fail checklist.

use num_traits::{One, Signed};
use serde::Serialize;

use crate::classify::{csp_obstructions, parse_model, truncation_model, verify_csp_model};
use crate::complex::{construct_p28_8, truncated_simplex, SimplicialComplex, P28_8_MISSING_FACES};
use crate::error::Result;
use crate::hochster::{alexander_duality_check_with, bigraded_betti_with, poincare_check, HochsterOptions};
use crate::resolutions::cross_check_with;
use crate::resolutions::DEFAULT_MAX_MISSING_FACES;
use crate::ring::{presentation_from, Element, RingPresentation};
use crate::vertex_set::cmp_graded_lex;
use crate::VertexSet;

pub const P28_8_BETTI: [(usize, usize); 7] = [(0, 1), (3, 2), (5, 8), (6, 18), (7, 8), (9, 2), (12, 1)];

pub const P28_8_MODEL: &str = "3,3,6;5,7*8;6,6*8";

/// Supports `I` of the degree-6 classes containing vertex 1; the remaining
/// nine live on the complements.
pub const P28_8_ALPHA_SUPPORTS: [[usize; 4]; 9] = [
    [1, 2, 3, 4],
    [1, 2, 3, 5],
    [1, 2, 3, 8],
    [1, 2, 5, 8],
    [1, 2, 7, 8],
    [1, 3, 4, 6],
    [1, 3, 4, 7],
    [1, 4, 6, 7],
    [1, 4, 7, 8],
];

pub const TRUNCATION_FAMILY: [(usize, usize); 5] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChecklistItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checklist {
    pub items: Vec<ChecklistItem>,
}

impl Checklist {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ChecklistItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

fn item(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> ChecklistItem {
    ChecklistItem {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn vs(v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(v.iter().copied())
}

/// True when `e = ±target`.
pub fn is_unit_multiple(e: &Element, target: usize) -> bool {
    e.len() == 1 && e.get(&target).is_some_and(|c| c.abs().is_one())
}

fn show(e: &Element) -> String {
    if e.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = e.iter().map(|(g, c)| format!("{c}*g{g}")).collect();
    terms.join(" + ")
}

/// The unique generator on `(J, d)`.
fn sole(r: &RingPresentation, j: VertexSet, d: isize) -> std::result::Result<usize, String> {
    match r.at(j, d).as_slice() {
        [g] => Ok(*g),
        other => Err(format!("expected one generator at ({j}, {d}), found {}", other.len())),
    }
}

/// Pairings of each generator on `J` with the one on the complement of `J`.
fn pairings(r: &RingPresentation, name: &str, supports: &[(VertexSet, isize)]) -> ChecklistItem {
    let Some(top) = r.fundamental_class else {
        return item(name, false, "no fundamental class");
    };
    let full = VertexSet::full(r.m);
    for &(j, d) in supports {
        let dual = full.difference(j);
        let dual_d = r.dim - 1 - d;
        let pair = sole(r, j, d).and_then(|g| sole(r, dual, dual_d).map(|h| (g, h)));
        let (g, h) = match pair {
            Ok(p) => p,
            Err(e) => return item(name, false, e),
        };
        let p = r.product(g, h);
        if !is_unit_multiple(&p, top) {
            return item(name, false, format!("{j} x {dual} = {}", show(&p)));
        }
    }
    item(name, true, format!("{} pairs hit the fundamental class with coefficient ±1", supports.len()))
}

/// The product relations among the named generators of `H*(Z_K)` for `P₂₈⁸`,
/// all up to sign.
pub fn p28_relations(r: &RingPresentation) -> Vec<ChecklistItem> {
    let mut out = Vec::new();
    let triples: Vec<(VertexSet, isize)> = P28_8_MISSING_FACES
        .iter()
        .filter(|s| s.len() == 3)
        .map(|s| (vs(s), 1))
        .collect();
    let alphas: Vec<(VertexSet, isize)> = P28_8_ALPHA_SUPPORTS.iter().map(|s| (vs(s), 1)).collect();
    out.push(pairings(r, "a_i * lambda_i = ±xi", &[(vs(&[5, 6]), 0), (vs(&[7, 8]), 0)]));
    out.push(pairings(r, "b_i * beta_i = ±xi", &triples));
    out.push(pairings(r, "alpha_i' * alpha_i = ±xi", &alphas));

    let named = (|| -> std::result::Result<_, String> {
        let top = r.fundamental_class.ok_or("no fundamental class")?;
        let a1 = sole(r, vs(&[5, 6]), 0)?;
        let a2 = sole(r, vs(&[7, 8]), 0)?;
        let alpha0 = sole(r, vs(&[1, 2, 3, 4]), 1)?;
        let alpha0p = sole(r, vs(&[5, 6, 7, 8]), 1)?;
        let lambda1 = sole(r, vs(&[1, 2, 3, 4, 7, 8]), 2)?;
        let lambda2 = sole(r, vs(&[1, 2, 3, 4, 5, 6]), 2)?;
        Ok((top, a1, a2, alpha0, alpha0p, lambda1, lambda2))
    })();
    let (top, a1, a2, alpha0, alpha0p, lambda1, lambda2) = match named {
        Ok(x) => x,
        Err(e) => {
            out.push(item("named generators", false, e));
            return out;
        }
    };
    let relation = |name: &str, factors: &[usize], target: usize| {
        let e = r.multiply_all(factors);
        item(name, is_unit_multiple(&e, target), show(&e))
    };
    out.push(relation("a_1 * a_2 = ±alpha_0'", &[a1, a2], alpha0p));
    out.push(relation("a_1 * a_2 * alpha_0 = ±xi", &[a1, a2, alpha0], top));
    out.push(relation("a_2 * alpha_0 = ±lambda_1", &[a2, alpha0], lambda1));
    out.push(relation("a_1 * alpha_0 = ±lambda_2", &[a1, alpha0], lambda2));

    let degree6: Vec<usize> = r.in_degree(6).into_iter().filter(|&g| g != alpha0).collect();
    let nonzero: Vec<String> = [a1, a2]
        .iter()
        .flat_map(|&a| degree6.iter().map(move |&g| (a, g)))
        .filter(|&(a, g)| !r.product(a, g).is_empty())
        .map(|(a, g)| format!("g{a} * g{g}"))
        .collect();
    out.push(item(
        "a_i * alpha_j = a_i * alpha_j' = 0 otherwise",
        nonzero.is_empty(),
        if nonzero.is_empty() {
            format!("{} products vanish", 2 * degree6.len())
        } else {
            format!("nonzero: {}", nonzero.join(", "))
        },
    ));
    out
}

fn missing_face_item(k: &SimplicialComplex) -> ChecklistItem {
    let mut expected: Vec<VertexSet> = P28_8_MISSING_FACES.iter().map(|s| vs(s)).collect();
    expected.sort_by(cmp_graded_lex);
    let got = k.missing_faces();
    item(
        "missing faces",
        got.as_slice() == expected.as_slice(),
        got.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
    )
}

fn truncation_item(k: usize, l: usize, opts: &HochsterOptions) -> Result<ChecklistItem> {
    let t = truncated_simplex(k, l)?;
    let model = truncation_model(k, l)?;
    let expected: Vec<(usize, usize)> = model.betti().into_iter().collect();
    let got = bigraded_betti_with(&t, opts)?.total();
    let passed = got.betti_numbers() == expected && !got.has_torsion();
    Ok(item(
        format!("truncated simplex ({k}, {l}) ~ {model}"),
        passed,
        format!("betti {:?}", got.betti_numbers()),
    ))
}

/// Builds `P₂₈⁸` through the staged construction and checks its missing faces,
/// the cohomology of `Z_K`, both dualities, the three-method agreement, the
/// product relations and the connected-sum model; then checks the Betti numbers
/// of the truncated-simplex family against their predicted models.
pub fn reproduction_checklist(opts: &HochsterOptions) -> Result<Checklist> {
    let mut items = Vec::new();
    let k = match construct_p28_8() {
        Ok(k) => {
            items.push(item("staged construction", true, format!("{} facets", k.facets().len())));
            k
        }
        Err(e) => {
            items.push(item("staged construction", false, e.to_string()));
            return Ok(Checklist { items });
        }
    };
    items.push(missing_face_item(&k));

    let betti = bigraded_betti_with(&k, opts)?;
    let total = betti.total();
    items.push(item(
        "betti table",
        total.betti_numbers() == P28_8_BETTI,
        format!("{:?}", total.betti_numbers()),
    ));
    items.push(item("torsion free", !total.has_torsion(), ""));

    let poincare = poincare_check(&k)?;
    items.push(item("poincare duality (ranks)", poincare.passed(), format!("dimension {}", poincare.top)));
    let alexander = alexander_duality_check_with(&k, opts)?;
    items.push(item(
        "alexander duality",
        alexander.passed(),
        format!("{} subsets", alexander.subsets_checked),
    ));
    let crossed = cross_check_with(&k, opts, DEFAULT_MAX_MISSING_FACES);
    items.push(match crossed {
        Ok(rep) => item(
            "hochster = koszul = taylor",
            true,
            format!("{} bidegrees, {} strata", rep.bidegrees, rep.taylor_strata),
        ),
        Err(e) => item("hochster = koszul = taylor", false, e.to_string()),
    });

    let ring = presentation_from(&k, &betti);
    items.push(item(
        "poincare pairing unimodular",
        ring.pairing_is_unimodular(),
        format!("{} generators", ring.generators.len()),
    ));
    items.extend(p28_relations(&ring));

    let model = parse_model(P28_8_MODEL)?;
    let report = verify_csp_model(&k, &model)?;
    let failing: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    items.push(item(
        format!("csp model {P28_8_MODEL}"),
        report.consistent(),
        if failing.is_empty() { "all checks pass".to_string() } else { format!("failing: {}", failing.join(", ")) },
    ));
    let mut split: Vec<usize> = model.breakdown().get(&6).map_or_else(Vec::new, |rows| rows.iter().map(|c| c.count).collect());
    split.sort_unstable_by(|a, b| b.cmp(a));
    items.push(item(
        "degree 6 = 16 + 1 + 1",
        split == [16, 1, 1] && total.rank(6) == 18,
        format!("{split:?}"),
    ));
    let obstructions = csp_obstructions(&k)?;
    items.push(item(
        "no csp obstruction",
        !obstructions.obstructed(),
        format!("{} degree-0 classes", obstructions.degree_zero_classes),
    ));

    for (kk, l) in TRUNCATION_FAMILY {
        items.push(truncation_item(kk, l, opts)?);
    }
    Ok(Checklist { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::p28_8;
    use crate::ring::ring_presentation;

    #[test]
    fn relations_hold() {
        let r = ring_presentation(&p28_8()).unwrap();
        for i in p28_relations(&r) {
            assert!(i.passed, "{}: {}", i.name, i.detail);
        }
    }

    #[test]
    fn relations_fail_on_other_spheres() {
        let r = ring_presentation(&crate::complex::cross_polytope(3).unwrap()).unwrap();
        assert!(p28_relations(&r).iter().any(|i| !i.passed));
    }

    #[test]
    fn full_checklist_passes() {
        let c = reproduction_checklist(&HochsterOptions::default()).unwrap();
        if let Some(i) = c.failures().next() {
            panic!("{}: {}", i.name, i.detail);
        }
        assert_eq!(c.items.len(), 24);
    }
}
