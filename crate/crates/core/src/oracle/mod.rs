//! Representation-theoretic recomputation of the tangent space.
//!
//! Nothing in here looks at the catalog of spherical roots or at the
//! adaptedness criteria; the answer comes from explicit modules and linear
//! algebra only, so it can be compared against [`crate::adapted`].

pub mod chevalley;
pub mod irrep;
pub mod quotient;
pub mod weyl;

use thiserror::Error;

pub use chevalley::ChevalleyAlgebra;
pub use irrep::{IrrepModule, DEFAULT_DIM_CAP};
pub use quotient::{
    codim1_orbit_weights, invariant_quotient_weights, oracle_tangent, oracle_tangent_weights, AmbientModel,
    OracleTangent, QuotientSpace,
};
pub use weyl::{freudenthal, weyl_dimension};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("weight {weight:?} is not a dominant weight of the right length")]
    NotDominant { weight: Vec<i64> },
    #[error("V({weight:?}) has dimension {dimension}, above the cap {cap}")]
    DimensionBudgetExceeded { weight: Vec<i64>, dimension: String, cap: usize },
}

/// `V(lambda)` built with the root vectors of `alg`.
pub fn build_irrep(
    alg: &ChevalleyAlgebra,
    lambda: &crate::rootsys::Weight,
    cap: usize,
) -> Result<IrrepModule, OracleError> {
    IrrepModule::build(alg.root_system(), alg.recipes(), lambda, cap)
}
