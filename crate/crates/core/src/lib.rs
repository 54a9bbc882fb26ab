//! Integral cohomology of moment-angle complexes `Z_K`.
//!
//! Three independent computations of `H*(Z_K; Z)` are provided: the Hochster
//! decomposition over full subcomplexes, the Koszul quotient of the
//! Stanley–Reisner ring, and the Taylor complex on its missing faces. On top of
//! these sit the ring structure, duality checks and obstruction tests for
//! connected sums of sphere products.

pub mod checklist;
pub mod classify;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod resolutions;
pub mod ring;
pub mod vertex_set;

pub use classify::{csp_obstructions, induced_cycles, parse_model, verify_csp_model, CspModel, ObstructionReport};
pub use complex::{FaceTable, MissingFaceSet, SimplicialComplex};
pub use error::{Error, Result};
pub use hochster::{bigraded_betti, zk_betti, BigradedBetti, HochsterOptions, ZkBetti};
pub use homology::{reduced_cohomology, reduced_homology, CohomologyBasis, GroupData, HomologySummary};
pub use linalg::{smith_normal_form, IntegerMatrix};
pub use resolutions::{cross_check, koszul_cohomology, taylor_cohomology};
pub use ring::{ring_presentation, star_product, HochsterClass, RingPresentation};
pub use vertex_set::VertexSet;
