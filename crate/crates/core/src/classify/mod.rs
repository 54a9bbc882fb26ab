//! Tests of whether `Z_K` can be a connected sum of products of spheres: model
//! verification against the computed ring and combinatorial obstructions.

mod cycles;
mod model;
mod obstructions;

pub use cycles::{induced_cycles, is_induced_polygon, InducedCycle};
pub use model::{model_betti, parse_model, truncation_model, verify_csp_model, Contribution, CspModel, ModelCheck, ModelReport, Summand};
pub use obstructions::{csp_obstructions, CheckOutcome, ObstructionReport, Verdict};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope, p28_8, polygon, two_points};
    use crate::error::Error;

    #[test]
    fn parsing() {
        let m = parse_model("3,3,6;5,7*8;6,6*8").unwrap();
        assert_eq!(m.summands.len(), 3);
        assert_eq!(m.summands[1], Summand { dims: vec![5, 7], multiplicity: 8 });
        assert_eq!(m.to_string(), "3,3,6;5,7*8;6,6*8");
        assert_eq!(parse_model("3,3").unwrap().total_dim(), 6);
        assert_eq!(parse_model("3,4;5,5"), Err(Error::UnequalTotalDimension(7, 10)));
        assert_eq!(parse_model("2,5"), Err(Error::SphereDimBelow3(2)));
        for bad in ["", "3,,3", "3,3*", "3,3*0", "a", "3;"] {
            assert!(matches!(parse_model(bad), Err(Error::GrammarError(_))), "{bad}");
        }
    }

    #[test]
    fn betti_of_models() {
        let m = parse_model("3,3,6;5,7*8;6,6*8").unwrap();
        let b: Vec<(usize, usize)> = m.betti().into_iter().collect();
        assert_eq!(b, vec![(0, 1), (3, 2), (5, 8), (6, 18), (7, 8), (9, 2), (12, 1)]);
        let six: Vec<usize> = m.breakdown()[&6].iter().map(|c| c.count).collect();
        assert_eq!(six, vec![1, 1, 16]);
        assert_eq!(parse_model("3,4*5").unwrap().betti().into_iter().collect::<Vec<_>>(), vec![(0, 1), (3, 5), (4, 5), (7, 1)]);
        for s in ["3,3,6;5,7*8;6,6*8", "3,4*5", "3,3,3,4;5,8*2"] {
            let m = parse_model(s).unwrap();
            let b = m.betti();
            let top = m.total_dim();
            assert!(b.iter().all(|(p, r)| b.get(&(top - p)) == Some(r)));
        }
    }

    #[test]
    fn model_verification() {
        let k = p28_8();
        let r = verify_csp_model(&k, &parse_model("3,3,6;5,7*8;6,6*8").unwrap()).unwrap();
        assert!(r.consistent(), "{:?}", r.checks);
        assert_eq!(r.top_witness.len(), 3);
        let r = verify_csp_model(&k, &parse_model("5,7*9;6,6*9").unwrap()).unwrap();
        assert!(!r.consistent());
        assert!(r.checks[0].detail.starts_with("degree 3"));
        assert!(verify_csp_model(&polygon(4).unwrap(), &parse_model("3,3").unwrap()).unwrap().consistent());
        assert!(verify_csp_model(&polygon(5).unwrap(), &parse_model("3,4*5").unwrap()).unwrap().consistent());
        for n in 1..=3 {
            let model = parse_model(&vec!["3"; n + 1].join(",")).unwrap();
            assert!(verify_csp_model(&cross_polytope(n).unwrap(), &model).unwrap().consistent());
        }
    }

    #[test]
    fn obstructions() {
        let r = csp_obstructions(&p28_8()).unwrap();
        assert!(!r.obstructed());
        assert_eq!(r.check("O2").unwrap().verdict, Verdict::Pass);
        assert_eq!(r.check("O2").unwrap().witnesses, vec![vec![5, 7, 6, 8]]);
        assert_eq!(r.degree_zero_classes, 2);
        let oct = csp_obstructions(&cross_polytope(2).unwrap()).unwrap();
        assert_eq!(oct.sphere_product_factors, Some(3));
        assert_eq!(oct.check("O3").unwrap().detail, "csp = (S3)^3");
        let bipyramid = polygon(5).unwrap().join(&two_points()).unwrap();
        let b = csp_obstructions(&bipyramid).unwrap();
        assert_eq!(b.check("O1").unwrap().verdict, Verdict::Obstruction);
        let hex = csp_obstructions(&polygon(6).unwrap()).unwrap();
        assert!(hex.checks.iter().all(|c| c.verdict == Verdict::Inapplicable));
    }

    #[test]
    fn truncation_models() {
        assert_eq!(truncation_model(2, 1).unwrap().to_string(), "3,3");
        assert_eq!(truncation_model(2, 2).unwrap().to_string(), "3,4*3;4,3*2");
        assert_eq!(truncation_model(3, 3).unwrap().to_string(), "3,7*6;4,6*8;5,5*3");
        let pentagon = truncation_model(2, 2).unwrap().betti();
        assert_eq!(pentagon.get(&3), Some(&5));
        assert_eq!(pentagon.get(&4), Some(&5));
        assert!(truncation_model(1, 2).is_err());
        for (k, l) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let t = crate::complex::truncated_simplex(k, l).unwrap();
            let model = truncation_model(k, l).unwrap();
            let report = verify_csp_model(&t, &model).unwrap();
            assert!(report.consistent(), "({k}, {l}): {:?}", report.checks);
        }
    }
}
