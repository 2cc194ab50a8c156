//! The algebra of braids and ties and its ordered variant, on their
//! orthogonal-idempotent normal forms.
//!
//! Both algebras share one multiplication engine: basis keys pair a
//! permutation with a block structure on the strands, a plain set
//! partition in the unordered case and an ordered one in the ordered
//! case. Products of keys stay delta-sparse because the block idempotents
//! `ebar(A)` are orthogonal, so every structure constant is exact and
//! cheap to compute.
//!
//! On top of the engine the crate provides the change of basis between
//! the orthogonal idempotents `ebar(A)` and the classical tie idempotents
//! `e(A)` (zeta and Moebius transforms over the refinement order), the
//! check suites for the classical and the orthogonal presentations, and
//! the three algebra maps into and between the Yokonuma-Hecke side:
//! `iota` from the unordered algebra, `epsilon` from the ordered algebra,
//! and `epsilon_one` between the two variants.

mod algebra;
mod basis_change;
mod embeddings;
mod family;
mod spec;
mod suite;

pub use algebra::{Bt, BtAlgebra, BtOrdAlgebra};
pub use basis_change::BasisChange;
pub use embeddings::{embedding_suite, Embeddings};
pub use family::{BlockFamily, Ordered, Unordered};
pub use spec::{bt_build, btord_build};
pub use suite::{
    classical_presentation_suite, orthogonal_presentation_suite, presentation_suite,
    PresentationKind,
};

use thiserror::Error;

/// Errors arising while building or querying a bt-algebra.
#[derive(Debug, Error)]
pub enum BtError {
    /// The deformation parameter collapses the quadratic relation, or the
    /// requested size is empty.
    #[error("degenerate parameter: {0}")]
    DegenerateQ(String),

    /// An embedding was requested between algebras whose sizes or scalars
    /// do not line up.
    #[error("incompatible algebras: {0}")]
    HypothesisViolated(String),

    /// A named-element lookup did not match any known element pattern.
    #[error("unknown element name: {0}")]
    UnknownElement(String),

    /// An engine-level failure bubbled up from the shared algebra core.
    #[error(transparent)]
    Algebra(#[from] ybt_algcore::AlgError),

    /// A combinatorial enumeration failed, typically a size cap.
    #[error(transparent)]
    Combinat(#[from] ybt_combinat::CombinatError),

    /// A failure on the Yokonuma-Hecke side of an embedding.
    #[error(transparent)]
    Yokonuma(#[from] ybt_yokonuma::YError),

    /// A scalar operation failed, typically a division by zero.
    #[error(transparent)]
    Scalar(#[from] ybt_scalar::ScalarError),
}
