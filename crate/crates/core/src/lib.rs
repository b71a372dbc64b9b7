//! Polynomial lemniscate families, the topology of their level sets, and the
//! torsional rigidity of the bounded region they enclose.
//!
//! The library works with three families of curves in the plane, all of the
//! form `Re[P(z)] - |z|^2 + k = 0` for a low-degree polynomial `P`:
//!
//! * two-term families `C z^n + z^j`,
//! * scaled families `C z^n`,
//! * the scaled pair `C (z^2 + z)`.
//!
//! For each family the crate can decide whether the level set contains a
//! bounded connected component surrounding the origin ([`classify`]), compute
//! the critical coefficient where that component appears ([`thresholds`]),
//! trace the component as a polar curve ([`trace`]), verify the verdicts with
//! a brute-force sign-grid oracle ([`oracle`]), and integrate the torsional
//! rigidity of the enclosed region ([`rigidity`]).

// negated comparisons like `!(k > 0.0)` are deliberate: they reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod family;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod rigidity;
pub mod thresholds;
pub mod trace;

pub use classify::{
    classify, classify_conic, conic_coefficients, Classification, ConicCoefficients,
    ConicConvention, ConicType, Verdict,
};
pub use family::{LemniscateFamily, Variant};
pub use oracle::{
    check_laplacian, grid_report, label_components, sign_grid, GridOracleReport, SignGrid,
};
pub use poly::{PositiveRoot, RadialPolynomial};
pub use rigidity::{
    boundary_residual, projection_polynomial, rigidity_sweep, torsional_rigidity,
    ProjectionPolynomial, RigidityResult, SweepCell, SweepOptions,
};
pub use thresholds::{
    c_star_general, c_star_j1, c_star_numeric, c_star_scaled, k_star, k_star_maximizer,
    ThresholdMethod, ThresholdResult,
};
pub use trace::{alpha_closed_form, trace_component, PolarCurve};

/// Errors shared by all modules.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside the range a formula or theorem covers.
    #[error("domain error: {0}")]
    Domain(String),
    /// Root isolation exhausted its iteration budget.
    #[error("root isolation failed to converge: {0}")]
    NonConvergence(String),
    /// Tracing requested for a family with no bounded component.
    #[error("no bounded component to trace: {0}")]
    NotBounded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
