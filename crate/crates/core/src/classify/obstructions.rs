use serde::Serialize;

use super::cycles::induced_cycles;
use crate::complex::{pseudo_sphere_check, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hochster::bigraded_betti;
use crate::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Obstruction,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub verdict: Verdict,
    pub detail: String,
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub dim: isize,
    pub checks: Vec<CheckOutcome>,
    /// Set when `K` is a join of `n + 1` copies of `S⁰`: `Z_K` is `(S³)^{n+1}`.
    pub sphere_product_factors: Option<usize>,
    /// Number of degree-0 Hochster classes, i.e. classes in `H³(Z_K)`.
    pub degree_zero_classes: usize,
}

impl ObstructionReport {
    pub fn obstructed(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Obstruction)
    }

    pub fn check(&self, id: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn outcome(id: &'static str, verdict: Verdict, detail: impl Into<String>, witnesses: Vec<Vec<usize>>) -> CheckOutcome {
    CheckOutcome {
        id,
        verdict,
        detail: detail.into(),
        witnesses,
    }
}

/// Necessary conditions for `Z_K` to be a connected sum of products of spheres.
///
/// * O1: a proper induced cycle of length at least 5 is an obstruction.
/// * O2: when an induced 4-cycle exists, missing edges must be pairwise disjoint,
///   any two must span an induced 4-cycle, and degree-0 classes live on `|J| = 2`.
/// * O3: missing faces forming `n + 1` disjoint pairs covering `[m]` give `(S³)^{n+1}`.
/// * O4: count of degree-0 classes (informational).
pub fn csp_obstructions(k: &SimplicialComplex) -> Result<ObstructionReport> {
    let sphere = pseudo_sphere_check(k).map_err(|e| Error::NotASphereCandidate(e.to_string()))?;
    if !sphere.passed() {
        return Err(Error::NotASphereCandidate("not a homology sphere pseudomanifold".into()));
    }
    let n = sphere.dim;
    let betti = bigraded_betti(k)?;
    let degree_zero: Vec<VertexSet> = betti.entries().iter().filter(|e| e.d == 0).map(|e| e.j).collect();
    let degree_zero_classes = betti
        .entries()
        .iter()
        .filter(|e| e.d == 0)
        .map(|e| e.group.rank)
        .sum();
    if n < 2 {
        let checks = ["O1", "O2", "O3", "O4"]
            .into_iter()
            .map(|id| outcome(id, Verdict::Inapplicable, "inapplicable (n<2)", Vec::new()))
            .collect();
        return Ok(ObstructionReport {
            dim: n,
            checks,
            sphere_product_factors: None,
            degree_zero_classes,
        });
    }
    let full = VertexSet::full(k.m());
    let mut checks = Vec::new();

    let long: Vec<Vec<usize>> = induced_cycles(k, 5, k.m())?
        .into_iter()
        .filter(|c| c.vertex_set() != full)
        .map(|c| c.order)
        .collect();
    checks.push(if long.is_empty() {
        outcome("O1", Verdict::Pass, "no proper induced cycle of length >= 5", Vec::new())
    } else {
        outcome(
            "O1",
            Verdict::Obstruction,
            format!("{} proper induced cycle(s) of length >= 5", long.len()),
            long.into_iter().take(1).collect(),
        )
    });

    let squares = induced_cycles(k, 4, 4)?;
    let mf = k.missing_faces();
    let edges: Vec<VertexSet> = mf.iter().copied().filter(|s| s.len() == 2).collect();
    if squares.is_empty() {
        checks.push(outcome("O2", Verdict::Inapplicable, "no induced 4-cycle", Vec::new()));
    } else {
        let mut problems = Vec::new();
        let mut witnesses = Vec::new();
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if !a.is_disjoint(*b) {
                    problems.push(format!("missing edges {a} and {b} meet"));
                    continue;
                }
                match squares.iter().find(|c| c.vertex_set() == (*a | *b)) {
                    Some(c) => witnesses.push(c.order.clone()),
                    None => problems.push(format!("{} does not induce a 4-cycle", *a | *b)),
                }
            }
        }
        for j in degree_zero.iter().filter(|j| j.len() > 2) {
            problems.push(format!("degree-0 class on {j} with |J| > 2"));
        }
        checks.push(if problems.is_empty() {
            outcome(
                "O2",
                Verdict::Pass,
                format!("{} missing edge(s), pairwise disjoint, unions induce 4-cycles", edges.len()),
                witnesses,
            )
        } else {
            outcome("O2", Verdict::Obstruction, problems.join("; "), witnesses)
        });
    }

    let pairs = mf.len() as isize == n + 1
        && mf.iter().all(|s| s.len() == 2)
        && mf.support() == full
        && mf.iter().map(|s| s.len()).sum::<usize>() == k.m();
    let sphere_product_factors = pairs.then_some((n + 1) as usize);
    checks.push(match sphere_product_factors {
        Some(f) => outcome(
            "O3",
            Verdict::Pass,
            format!("csp = (S3)^{f}"),
            mf.iter().map(|s| s.to_vec()).collect(),
        ),
        None => outcome("O3", Verdict::Inapplicable, "missing faces are not n+1 disjoint pairs", Vec::new()),
    });

    checks.push(outcome(
        "O4",
        Verdict::Pass,
        format!("{degree_zero_classes} degree-0 class(es), candidates for S3 factors"),
        degree_zero.iter().map(|j| j.to_vec()).collect(),
    ));

    Ok(ObstructionReport {
        dim: n,
        checks,
        sphere_product_factors,
        degree_zero_classes,
    })
}
