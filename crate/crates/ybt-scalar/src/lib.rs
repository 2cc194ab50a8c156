//! Exact scalar arithmetic for the algebra suites: prime fields `F_p` and the
//! univariate rational-function field `F_p(qhat)`, together with the probes
//! (quantum characteristic, square roots, primitive roots of unity) that the
//! algebra configurations depend on.
//!
//! All values are immutable and kept in canonical form, so equality is
//! structural everywhere: residues live in `0..p`, rational functions carry a
//! monic denominator coprime to the numerator.

mod field;
mod poly;
mod probes;
mod ratfn;
mod scalar;

pub use field::PrimeFieldCtx;
pub use poly::Poly;
pub use probes::{primitive_root_of_unity, quantum_characteristic, sqrt_in_field};
pub use ratfn::RationalFunction;
pub use scalar::{qhat, rational_poly, FieldCtx, FieldScalar};

/// Errors raised by scalar construction, arithmetic and specialization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// The requested modulus fails the primality check.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    /// Two scalars from different field contexts were combined.
    #[error("field contexts differ: {0} vs {1}")]
    FieldMismatch(String, String),
    /// Inversion or division by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// The deformation parameter is 1, which every construction here excludes.
    #[error("q = 1 is a degenerate deformation parameter")]
    DegenerateQ,
    /// A rational function was evaluated at a root of its denominator. For
    /// integrality checks this outcome is a finding, not a bug: it certifies
    /// that the element lies outside the localization at the point.
    #[error("denominator vanishes at the specialization point")]
    PoleAtSpecialization,
}
