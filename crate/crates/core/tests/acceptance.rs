//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails. Runs without the libtest harness.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use zkring_core::classify::{csp_obstructions, induced_cycles, model_betti, parse_model, truncation_model, verify_csp_model, Verdict};
use zkring_core::complex::{boundary_simplex, construct_p28_8, cross_polytope, p28_8, polygon, truncated_simplex, two_points};
use zkring_core::corpus::{random_corpus, CorpusConfig};
use zkring_core::hochster::{alexander_duality_check, poincare_check, zk_betti_with, HochsterOptions};
use zkring_core::homology::{ChainComplexZ, CohomologyBasis};
use zkring_core::linalg::{smith_normal_form, IntegerMatrix};
use zkring_core::resolutions::cross_check;
use zkring_core::ring::{ring_presentation, star_product, Element, RingPresentation};
use zkring_core::{SimplicialComplex, VertexSet};

const MISSING_FACE_LIMIT: Duration = Duration::from_millis(100);
const BETTI_LIMIT: Duration = Duration::from_secs(5);
const CORPUS_LIMIT: Duration = Duration::from_secs(60);
const TRUNCATION_LIMIT: Duration = Duration::from_secs(30);
const CORPUS_SIZE: usize = 100;
const CORPUS_MAX_VERTICES: usize = 7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn vs(v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(v.iter().copied())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {:.3} s, limit {:.3} s", elapsed.as_secs_f64(), limit.as_secs_f64()))
}

fn sequential() -> HochsterOptions {
    HochsterOptions { threads: 1, ..HochsterOptions::default() }
}

fn corpus() -> Vec<SimplicialComplex> {
    let cfg = CorpusConfig::default();
    assert!(cfg.count >= CORPUS_SIZE && cfg.max_vertices <= CORPUS_MAX_VERTICES);
    random_corpus(&cfg)
}

fn missing_faces() -> Outcome {
    let start = Instant::now();
    let k = construct_p28_8().map_err(|e| e.to_string())?;
    let got: Vec<Vec<usize>> = k.missing_faces().iter().map(|s| s.to_vec()).collect();
    let elapsed = start.elapsed();
    let expected: Vec<Vec<usize>> = vec![
        vec![5, 6],
        vec![7, 8],
        vec![1, 2, 3],
        vec![1, 2, 8],
        vec![1, 3, 4],
        vec![1, 4, 7],
        vec![2, 3, 5],
        vec![2, 5, 8],
        vec![3, 4, 6],
        vec![4, 6, 7],
    ];
    ensure(got == expected, || format!("got {got:?}"))?;
    within(elapsed, MISSING_FACE_LIMIT)?;
    Ok(format!("10 missing faces in {:.4} s", elapsed.as_secs_f64()))
}

fn betti_table() -> Outcome {
    let k = p28_8();
    let start = Instant::now();
    let betti = zk_betti_with(&k, &sequential()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = vec![(0, 1), (3, 2), (5, 8), (6, 18), (7, 8), (9, 2), (12, 1)];
    ensure(betti.betti_numbers() == expected, || format!("got {:?}", betti.betti_numbers()))?;
    ensure(!betti.has_torsion(), || "torsion present".into())?;
    ensure(betti.iter().count() == expected.len(), || "extra nonzero degrees".into())?;
    within(elapsed, BETTI_LIMIT)?;
    Ok(format!("{expected:?} single-threaded in {:.3} s", elapsed.as_secs_f64()))
}

fn unit_multiple(e: &Element, target: usize) -> bool {
    e.len() == 1 && e.get(&target).is_some_and(|c| c.abs().is_one())
}

fn only(r: &RingPresentation, j: VertexSet, d: isize) -> Result<usize, String> {
    match r.at(j, d).as_slice() {
        [g] => Ok(*g),
        other => Err(format!("{} generators at ({j}, {d})", other.len())),
    }
}

fn ring_relations() -> Outcome {
    let k = p28_8();
    let r = ring_presentation(&k).map_err(|e| e.to_string())?;
    let xi = r.fundamental_class.ok_or("no fundamental class")?;
    let full = VertexSet::full(8);
    let mut pairs = 0;
    // every class pairs with the class on the complementary support
    for p in [3, 5, 6] {
        for g in r.in_degree(p) {
            let c = &r.generator(g).class;
            if p == 6 && !c.j.contains(1) {
                continue;
            }
            let h = only(&r, full.difference(c.j), 2 - c.d)?;
            ensure(unit_multiple(&r.product(g, h), xi), || format!("{} x complement: {:?}", c.j, r.product(g, h)))?;
            pairs += 1;
        }
    }
    ensure(pairs == 2 + 8 + 9, || format!("{pairs} pairings"))?;
    let a1 = only(&r, vs(&[5, 6]), 0)?;
    let a2 = only(&r, vs(&[7, 8]), 0)?;
    let alpha0 = only(&r, vs(&[1, 2, 3, 4]), 1)?;
    let lambda1 = only(&r, vs(&[1, 2, 3, 4, 7, 8]), 2)?;
    let triple = r.multiply_all(&[a1, a2, alpha0]);
    ensure(unit_multiple(&triple, xi), || format!("a1 a2 alpha0 = {triple:?}"))?;
    let pair = r.product(a2, alpha0);
    ensure(unit_multiple(&pair, lambda1), || format!("a2 alpha0 = {pair:?}"))?;
    Ok(format!("{pairs} dual pairings, triple product and a2*alpha0 all ±1"))
}

fn csp_model() -> Outcome {
    let k = p28_8();
    let model = parse_model("3,3,6;5,7*8;6,6*8").map_err(|e| e.to_string())?;
    let report = verify_csp_model(&k, &model).map_err(|e| e.to_string())?;
    ensure(report.consistent(), || format!("{:?}", report.checks))?;
    let mut six: Vec<usize> = model.breakdown()[&6].iter().map(|c| c.count).collect();
    six.sort_unstable();
    ensure(six == [1, 1, 16], || format!("degree 6 splits as {six:?}"))?;
    let b6 = zk_betti_with(&k, &sequential()).map_err(|e| e.to_string())?.rank(6);
    ensure(b6 == 18, || format!("b6 = {b6}"))?;
    Ok("consistent; b6 = 16 + 1 + 1".into())
}

fn three_methods() -> Outcome {
    cross_check(&p28_8()).map_err(|e| format!("P28-8: {e}"))?;
    let ks = corpus();
    let start = Instant::now();
    for k in &ks {
        ensure(k.m() <= CORPUS_MAX_VERTICES, || format!("{k} too large"))?;
        cross_check(k).map_err(|e| format!("{k}: {e}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, CORPUS_LIMIT)?;
    Ok(format!("P28-8 and {} random complexes in {:.3} s", ks.len(), elapsed.as_secs_f64()))
}

fn duality() -> Outcome {
    let mut spheres = vec![p28_8(), cross_polytope(2).map_err(|e| e.to_string())?];
    for k in 1..=5 {
        spheres.push(boundary_simplex(k).map_err(|e| e.to_string())?);
    }
    for (k, l) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        spheres.push(truncated_simplex(k, l).map_err(|e| e.to_string())?);
    }
    for k in &spheres {
        let r = ring_presentation(k).map_err(|e| e.to_string())?;
        ensure(r.pairing_is_unimodular(), || format!("{k}: pairing {:?}", r.poincare_pairing()))?;
        let p = poincare_check(k).map_err(|e| e.to_string())?;
        ensure(p.passed(), || format!("{k}: Betti numbers not symmetric"))?;
        let a = alexander_duality_check(k).map_err(|e| e.to_string())?;
        ensure(a.passed(), || format!("{k}: {:?}", a.violation))?;
    }
    Ok(format!("{} spheres", spheres.len()))
}

fn truncation_family() -> Outcome {
    let start = Instant::now();
    for (k, l) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let t = truncated_simplex(k, l).map_err(|e| e.to_string())?;
        let got: BTreeMap<usize, usize> = zk_betti_with(&t, &sequential())
            .map_err(|e| e.to_string())?
            .betti_numbers()
            .into_iter()
            .collect();
        let expected = model_betti(&truncation_model(k, l).map_err(|e| e.to_string())?);
        ensure(got == expected, || format!("({k}, {l}): {got:?} vs {expected:?}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, TRUNCATION_LIMIT)?;
    Ok(format!("5 members in {:.3} s", elapsed.as_secs_f64()))
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn cross_polytopes() -> Outcome {
    for n in [2, 3] {
        let k = cross_polytope(n).map_err(|e| e.to_string())?;
        let report = csp_obstructions(&k).map_err(|e| e.to_string())?;
        let o3 = report.check("O3").ok_or("no O3")?;
        ensure(o3.verdict == Verdict::Pass, || format!("n = {n}: O3 {:?}", o3.verdict))?;
        ensure(report.sphere_product_factors == Some(n + 1), || format!("n = {n}: factors"))?;
        let model = parse_model(&vec!["3"; n + 1].join(",")).map_err(|e| e.to_string())?;
        let v = verify_csp_model(&k, &model).map_err(|e| e.to_string())?;
        ensure(v.consistent(), || format!("n = {n}: {:?}", v.checks))?;
        let betti = zk_betti_with(&k, &sequential()).map_err(|e| e.to_string())?;
        for i in 0..=n + 1 {
            let b = betti.rank(3 * i);
            ensure(b == binomial(n + 1, i), || format!("n = {n}: b{} = {b}", 3 * i))?;
        }
    }
    Ok("(S3)^3 and (S3)^4".into())
}

fn obstruction_sanity() -> Outcome {
    let k = p28_8();
    let long = induced_cycles(&k, 5, 8).map_err(|e| e.to_string())?;
    ensure(long.is_empty(), || format!("induced cycles {long:?}"))?;
    let squares = induced_cycles(&k, 4, 4).map_err(|e| e.to_string())?;
    ensure(squares.iter().any(|c| c.vertex_set() == vs(&[5, 6, 7, 8])), || format!("4-cycles {squares:?}"))?;
    let report = csp_obstructions(&k).map_err(|e| e.to_string())?;
    let o2 = report.check("O2").ok_or("no O2")?;
    ensure(o2.verdict == Verdict::Pass, || format!("O2: {}", o2.detail))?;
    ensure(!report.obstructed(), || "P28-8 obstructed".into())?;
    let bipyramid = polygon(5).and_then(|p| p.join(&two_points())).map_err(|e| e.to_string())?;
    let b = csp_obstructions(&bipyramid).map_err(|e| e.to_string())?;
    let o1 = b.check("O1").ok_or("no O1")?;
    ensure(o1.verdict == Verdict::Obstruction, || format!("bipyramid O1 {:?}", o1.verdict))?;
    Ok("no long induced cycles, (5,7,6,8) found, bipyramid obstructed".into())
}

fn snf_recomposes(m: &IntegerMatrix) -> bool {
    let s = smith_normal_form(m);
    let diagonal = (0..s.d.rows()).all(|i| (0..s.d.cols()).all(|j| i == j || s.d.get(i, j).signum() == 0.into()));
    s.u.mul(m).mul(&s.v) == s.d
        && diagonal
        && s.u.mul(&s.u_inv) == IntegerMatrix::identity(m.rows())
        && s.v.mul(&s.v_inv) == IntegerMatrix::identity(m.cols())
}

fn property_suite() -> Outcome {
    let ks = corpus();
    let mut products = 0usize;
    for k in &ks {
        let chains = ChainComplexZ::of_complex(k);
        ensure(chains.boundary_squares_to_zero(), || format!("{k}: d^2 != 0"))?;
        for d in 0..=k.dim() {
            ensure(snf_recomposes(&chains.boundary(d).to_bigint()), || format!("{k}: SNF of boundary {d}"))?;
        }
        let (h, c) = chains.groups();
        for d in -1..=k.dim() {
            ensure(h.rank(d) == c.rank(d) && c.get(d).torsion == h.get(d - 1).torsion, || {
                format!("{k}: universal coefficients in degree {d}")
            })?;
        }

        let r = ring_presentation(k).map_err(|e| e.to_string())?;
        let faces = k.face_table();
        let n = r.generators.len();
        for g in 0..n {
            for h in 0..n {
                let (cg, ch) = (&r.generator(g).class, &r.generator(h).class);
                let star = star_product(cg, ch, &faces).map_err(|e| format!("{k}: {e}"))?;
                if !cg.j.is_disjoint(ch.j) {
                    ensure(star.is_zero_cochain(), || format!("{k}: overlapping supports ({g},{h})"))?;
                } else if !cg.j.is_empty() && !ch.j.is_empty() {
                    let basis = CohomologyBasis::new(faces.restrict(star.j));
                    ensure(basis.is_cocycle(star.d, &star.cochain), || format!("{k}: ({g},{h}) not a cocycle"))?;
                }
                let sign = if cg.degree() * ch.degree() % 2 == 1 { -1 } else { 1 };
                let swapped: Element = r.product(h, g).into_iter().map(|(i, v)| (i, v * sign)).collect();
                ensure(r.product(g, h) == swapped, || format!("{k}: ({g},{h}) not graded commutative"))?;
                for l in 0..n {
                    let (eg, eh, el) = (r.basis_element(g), r.basis_element(h), r.basis_element(l));
                    ensure(
                        r.multiply(&r.multiply(&eg, &eh), &el) == r.multiply(&eg, &r.multiply(&eh, &el)),
                        || format!("{k}: ({g},{h},{l}) not associative"),
                    )?;
                }
                products += 1;
            }
        }
    }
    Ok(format!("{} complexes, {products} generator pairs", ks.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("missing faces of P28-8", missing_faces),
        ("Betti table of Z_K for P28-8", betti_table),
        ("ring relations up to sign", ring_relations),
        ("csp model verification", csp_model),
        ("Hochster, Koszul and Taylor agree", three_methods),
        ("Poincare and Alexander duality", duality),
        ("truncated-simplex family", truncation_family),
        ("cross-polytopes give (S3)^(n+1)", cross_polytopes),
        ("obstruction sanity", obstruction_sanity),
        ("property suite on the seeded corpus", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
