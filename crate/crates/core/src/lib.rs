//! Numerical toolkit for discrete Wiener-Hopf (Toeplitz) operators on
//! Orlicz sequence spaces.
//!
//! The crate bundles: N-function generators and their Matuszewska-Orlicz
//! indices, the least-concave-majorant interpolation construction,
//! Luxemburg norms and Calderon-product factorisations, a 2pi-periodic
//! symbol calculus, finite Laurent/Toeplitz/Hankel truncations with their
//! exact algebraic identities, and a localisation pipeline that aggregates
//! per-point Fredholm certificates into a global verdict.

pub mod error;
pub mod grid;
pub mod indices;
pub mod linalg;
pub mod localisation;
pub mod majorant;
pub mod nfunction;
pub mod operators;
pub mod oracle;
pub mod orlicz_space;
pub mod sampling;
pub mod suite;
pub mod symbols;

pub use error::{Error, Result};
pub use indices::{
    dilation, dilation_exponents, dilation_limits, matuszewska_orlicz_indices, DilationProfile,
    IndexGridSpec, IndexReport, InverseFn, LogScaleFn, UGridSpec,
};
pub use localisation::{
    cover_and_partition_check, equivalence_bound, fredholm_certificate, localise, winding_number,
    FredholmCertificate, GlobalVerdict, LocalAssignment, LocalPoint, LocalisationReport,
    LocaliseConfig,
};
pub use majorant::{
    build_phi_theta, exponent_transform_check, least_concave_majorant, psi_theta, theta_range,
    MajorantGridSpec, PhiTheta, PiecewiseConcaveEnvelope, ThetaRange,
};
pub use nfunction::{verify_nfunction, NFunction, NFunctionSpec, ValidationReport, VerifyGridSpec};
pub use operators::{
    build, hankel_fejer_decay, l2_multiplier_consistency, l2_norm, shift_invariance_residual,
    widom_residual, OperatorRole, OperatorTruncation,
};
pub use orlicz_space::{
    calderon_factorize, interpolation_bound_check, luxemburg_norm, modular,
    multiplier_inclusion_check, FiniteSequence, NormSearchConfig,
};
pub use symbols::{local_distance, make_bump, BumpFunction, Expr, Symbol, SymbolSpec, TrigPoly};
