//! Exact computations with Chern-Mather classes of theta divisors.
//!
//! The crate models the theta-subalgebra of the homology of a principally
//! polarized abelian variety under the Pontryagin product, the lambda-ring
//! generating series of exterior powers of Lagrangian cycles, and the class
//! tables and criteria built on top of them: Jacobian reference classes and
//! the Jacobian-detection criterion, the bielliptic Prym census, and the
//! genus-5 hyperelliptic exclusion report.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals).

pub mod combinatorics;
pub mod error;
pub mod genus5;
pub mod jacobian;
pub mod lambda;
pub mod pontryagin;
pub mod prym;
pub mod rational;

pub use combinatorics::{
    binomial, eulerian_defining_check, eulerian_polynomial, factorial, middle_binomial,
    IntPolynomial,
};
pub use error::{Error, Result};
pub use genus5::{divisibility_obstruction, genus5_hyperelliptic_report, ExclusionReport};
pub use jacobian::{
    criterion_check, dim_omega, jacobian_reference_classes, verify_scale_invariance,
    CriterionInput, CriterionVerdict, CurveCase, Reconstruction, VerdictKind,
};
pub use lambda::{
    alt_class, alt_via_newton, c2_gap, e_coefficient, e_lambda, one_plus_x_pow,
    LagrangianChernData, ThetaSeries,
};
pub use pontryagin::{adams, pontryagin_mul, theta_basis, truncate_to, BiThetaClass, ThetaClass};
pub use prym::{
    census_loci, euler_characteristic, matches_jacobian_dimension, prym_chern_mather_t0,
    prym_chern_mather_t_pos, CensusRow, ChiVerdict, PrymLocus,
};
pub use rational::Rational;
