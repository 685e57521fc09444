//! Exact computations of F-pure thresholds and related invariants of
//! homogeneous ideals in positive characteristic.

pub mod ci_hilbert;
pub mod classify;
pub mod convex;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
mod trunc;

pub use ci_hilbert::{ci_power_hilbert, ci_power_hilbert_stable, ci_series_coeff};
pub use classify::{
    essential_codim, restrict_hyperplane, theorem_a_verdict, theorem_b_check, Conclusion, EssConfig, EssMethod,
    EssResult, TheoremAReport, TheoremBReport, Verdict,
};
pub use convex::{HalfSpace, QPolytope, QVec, Q};
pub use error::{Error, Result};
pub use field::{Fe, FieldCfg};
pub use frobenius::{fpt_bounds, nu, ColonIdeal, FptBounds, Provenance};
pub use groebner::{buchberger, initial_ideal, GroebnerBasis, Ideal};
pub use linalg::Matrix;
pub use monomial::{monomial_fpt, GradedProbe, MonomialIdeal};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{ExpVec, MonomialOrder, OrderKind, Poly, Ring};
