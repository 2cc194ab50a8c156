//! Generic engine for finite-dimensional associative algebras given by a
//! basis, a distinguished generator alphabet, and sparse right-multiplication
//! rules for each letter. On top of that substrate: exact minimal
//! polynomials (Krylov), generalized eigenprojectors (polynomial CRT),
//! echelonized span closures, nilpotency indices, and truncated Neumann
//! inversion of `c - nilpotent` on an idempotent component.
//!
//! Multiplication never materializes a dense product table: each basis
//! element knows a word in the generator alphabet, and products are computed
//! by streaming the right factor's words through memoized per-letter action
//! rows.

mod element;
mod fpoly;
mod handle;
mod linalg;
mod minpoly;
mod report;
mod table_cache;

pub use element::AlgebraElement;
pub use fpoly::FPoly;
pub use handle::{AlgebraHandle, AlgebraSpec, SparseRow};
pub use linalg::{span_closure, Echelon};
pub use minpoly::{
    generalized_eigenprojectors, invert_unit_plus_nilpotent, minimal_polynomial, nilpotency_index,
};
pub use report::{
    expect_element_zero, expect_elements_equal, CheckResult, CheckStatus, SuiteBuilder,
    SuiteReport, Verdict,
};
pub use table_cache::{load_cached_tables, save_tables};

use ybt_scalar::ScalarError;

/// Errors from the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    /// Elements of two different algebra handles were combined.
    #[error("algebra handles differ: {0} vs {1}")]
    HandleMismatch(String, String),
    /// Scalar contexts differ (propagated from the scalar layer).
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    /// The minimal polynomial does not split over the supplied eigenvalues.
    #[error("minimal polynomial has a factor of degree {residual_degree} with no supplied root")]
    NonSplittingMinPoly { residual_degree: usize },
    /// The constant in `c - nilpotent` must be invertible.
    #[error("the scalar part of the inversion is zero")]
    ZeroScalar,
    /// Neumann inversion was asked for a non-nilpotent perturbation.
    #[error("perturbation is not nilpotent on the idempotent component")]
    NotNilpotent,
    /// Build-time spot checks found the supplied action tables inconsistent.
    #[error("action tables are inconsistent: {0}")]
    InconsistentTables(String),
    /// A serialized table file disagrees with the requesting algebra.
    #[error("cached tables rejected: {0}")]
    CacheRejected(String),
    /// Reading or writing the table cache failed.
    #[error("cache io: {0}")]
    CacheIo(String),
}
