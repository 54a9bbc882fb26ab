use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::bigraded_betti;
use crate::ring::presentation_from;

/// A product of spheres `S^{d₁} × ⋯ × S^{d_q}` appearing `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub dims: Vec<usize>,
    pub multiplicity: usize,
}

impl Summand {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A connected sum of products of spheres.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspModel {
    pub summands: Vec<Summand>,
}

/// Parses `3,3,6;5,7*8;6,6*8`: summands separated by `;`, sphere dimensions by
/// `,`, optional multiplicity `*k`.
pub fn parse_model(s: &str) -> Result<CspModel> {
    let grammar = |msg: String| Error::GrammarError(msg);
    let mut summands = Vec::new();
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            return Err(grammar(format!("empty summand in {s:?}")));
        }
        let (dims, multiplicity) = match part.split_once('*') {
            Some((d, k)) => {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| grammar(format!("bad multiplicity {k:?}")))?;
                if k == 0 {
                    return Err(grammar("multiplicity must be positive".into()));
                }
                (d, k)
            }
            None => (part, 1),
        };
        let dims: Vec<usize> = dims
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| grammar(format!("bad sphere dimension {x:?}"))))
            .collect::<Result<_>>()?;
        if let Some(&d) = dims.iter().find(|&&d| d < 3) {
            return Err(Error::SphereDimBelow3(d));
        }
        summands.push(Summand { dims, multiplicity });
    }
    let first = summands[0].total_dim();
    if let Some(other) = summands.iter().find(|x| x.total_dim() != first) {
        return Err(Error::UnequalTotalDimension(first, other.total_dim()));
    }
    Ok(CspModel { summands })
}

/// One row of the additive model: spheres whose product contributes in a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub summand: usize,
    pub spheres: Vec<usize>,
    pub count: usize,
}

impl CspModel {
    pub fn total_dim(&self) -> usize {
        self.summands[0].total_dim()
    }

    pub fn max_factors(&self) -> usize {
        self.summands.iter().map(|s| s.dims.len()).max().unwrap_or(0)
    }

    /// Proper nonempty sub-collections of each summand, grouped by degree and
    /// merged when they have the same sphere dimensions.
    pub fn breakdown(&self) -> BTreeMap<usize, Vec<Contribution>> {
        let mut out: BTreeMap<usize, Vec<Contribution>> = BTreeMap::new();
        for (idx, s) in self.summands.iter().enumerate() {
            let q = s.dims.len();
            let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for mask in 1..(1u32 << q) - 1 {
                let mut spheres: Vec<usize> = (0..q).filter(|i| mask >> i & 1 == 1).map(|i| s.dims[i]).collect();
                spheres.sort_unstable();
                *seen.entry(spheres).or_default() += s.multiplicity;
            }
            for (spheres, count) in seen {
                out.entry(spheres.iter().sum()).or_default().push(Contribution {
                    summand: idx,
                    spheres,
                    count,
                });
            }
        }
        out
    }

    /// Betti numbers of the model, nonzero degrees only.
    pub fn betti(&self) -> BTreeMap<usize, usize> {
        let mut out: BTreeMap<usize, usize> = BTreeMap::new();
        out.insert(0, 1);
        out.insert(self.total_dim(), 1);
        for (p, rows) in self.breakdown() {
            *out.entry(p).or_default() += rows.iter().map(|c| c.count).sum::<usize>();
        }
        out
    }

    /// Rank of `(I^t)_p` in the model ring, where `I` is the augmentation ideal.
    pub fn power_rank(&self, t: usize, p: usize) -> usize {
        if p == self.total_dim() {
            return usize::from(self.summands.iter().any(|s| s.dims.len() >= t));
        }
        self.summands
            .iter()
            .map(|s| {
                let q = s.dims.len();
                let count = (1..(1u32 << q) - 1)
                    .filter(|mask| mask.count_ones() as usize >= t)
                    .filter(|mask| (0..q).filter(|i| mask >> i & 1 == 1).map(|i| s.dims[i]).sum::<usize>() == p)
                    .count();
                count * s.multiplicity
            })
            .sum()
    }
}

impl fmt::Display for CspModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let dims: Vec<String> = s.dims.iter().map(usize::to_string).collect();
                if s.multiplicity == 1 {
                    dims.join(",")
                } else {
                    format!("{}*{}", dims.join(","), s.multiplicity)
                }
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// The model `#_{j=1..l} j·C(l+1, j+1) · S^{j+2} × S^{2k+l−j−1}` predicted for
/// `∂Δᵏ` after `l` stellar subdivisions. Needs `k >= 2` so every sphere has
/// dimension at least 3.
pub fn truncation_model(k: usize, l: usize) -> Result<CspModel> {
    if k < 2 || l < 1 {
        return Err(Error::ParameterOutOfRange(format!("truncation model ({k}, {l})")));
    }
    let summands = (1..=l)
        .map(|j| Summand {
            dims: vec![j + 2, 2 * k + l - j - 1],
            multiplicity: j * binomial(l + 1, j + 1),
        })
        .collect();
    Ok(CspModel { summands })
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti numbers of a model.
pub fn model_betti(m: &CspModel) -> BTreeMap<usize, usize> {
    m.betti()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub model: String,
    pub checks: Vec<ModelCheck>,
    /// Addresses `(J, d)` of generators whose product spans the top degree with
    /// the largest number of factors.
    pub top_witness: Vec<(Vec<usize>, isize)>,
}

impl ModelReport {
    /// "Consistent with the model": every necessary condition holds. This is not
    /// a ring isomorphism certificate.
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Compares the cohomology ring of `Z_K` with a model: Betti numbers, Poincaré
/// pairing, ranks of `t`-fold products in interior degrees, and in the top degree.
pub fn verify_csp_model(k: &SimplicialComplex, model: &CspModel) -> Result<ModelReport> {
    let betti = bigraded_betti(k)?;
    let total = betti.total();
    if total.has_torsion() {
        let degrees: Vec<usize> = total.iter().filter(|(_, g)| !g.torsion.is_empty()).map(|(p, _)| p).collect();
        return Err(Error::TorsionPresent(format!("torsion in degrees {degrees:?}")));
    }
    let ring = presentation_from(k, &betti);
    let mut checks = Vec::new();

    let expected = model.betti();
    let actual: BTreeMap<usize, usize> = total.betti_numbers().into_iter().collect();
    let degrees: std::collections::BTreeSet<usize> = expected.keys().chain(actual.keys()).copied().collect();
    let mismatch = degrees.into_iter().find(|p| expected.get(p) != actual.get(p));
    checks.push(ModelCheck {
        name: "additive".into(),
        passed: mismatch.is_none(),
        detail: match mismatch {
            None => format!("Betti numbers {actual:?}"),
            Some(p) => format!(
                "degree {p}: Z_K has {}, model has {}",
                actual.get(&p).unwrap_or(&0),
                expected.get(&p).unwrap_or(&0)
            ),
        },
    });

    let dets = ring.poincare_pairing();
    let bad: Vec<usize> = dets
        .iter()
        .filter(|(_, d)| !d.abs().is_one())
        .map(|(p, _)| *p)
        .collect();
    checks.push(ModelCheck {
        name: "poincare pairing".into(),
        passed: !dets.is_empty() && bad.is_empty(),
        detail: if dets.is_empty() {
            "no fundamental class".into()
        } else if bad.is_empty() {
            "unimodular in all complementary degrees".into()
        } else {
            format!("not unimodular in degrees {bad:?}")
        },
    });

    let top = model.total_dim();
    let q_max = model.max_factors();
    let mut interior_failures = Vec::new();
    for t in 2..=q_max.max(2) {
        for p in 1..top {
            let (got, want) = (ring.power_rank(t, p), model.power_rank(t, p));
            if got != want {
                interior_failures.push(format!("t={t}, degree {p}: {got} vs model {want}"));
            }
        }
    }
    checks.push(ModelCheck {
        name: "interior products".into(),
        passed: interior_failures.is_empty(),
        detail: if interior_failures.is_empty() {
            format!("ranks of t-fold products agree for 2 <= t <= {}", q_max.max(2))
        } else {
            interior_failures.join("; ")
        },
    });

    let mut top_failures = Vec::new();
    for t in 1..=q_max + 1 {
        let (got, want) = (ring.power_rank(t, top), model.power_rank(t, top));
        if got != want {
            top_failures.push(format!("t={t}: {got} vs model {want}"));
        }
    }
    checks.push(ModelCheck {
        name: "top products".into(),
        passed: top_failures.is_empty(),
        detail: if top_failures.is_empty() {
            format!("top degree {top} is a {q_max}-fold product and no {}-fold product", q_max + 1)
        } else {
            top_failures.join("; ")
        },
    });

    let top_witness = ring
        .nonzero_product(q_max, top)
        .map(|ids| {
            ids.iter()
                .map(|&g| {
                    let c = &ring.generator(g).class;
                    (c.j.to_vec(), c.d)
                })
                .collect()
        })
        .unwrap_or_default();

    Ok(ModelReport {
        model: model.to_string(),
        checks,
        top_witness,
    })
}
