//! The Yokonuma-Hecke algebra on its normal-form basis.
//!
//! An algebra instance is parametrised by the number of strands `n`, the
//! framing order `d`, and two scalars: the deformation parameter `q` and a
//! primitive `d`-th root of unity `xi`. Basis elements are framing
//! monomials times permutation words, `t_1^{c_1} .. t_n^{c_n} g_w`, and all
//! products are rewritten into that form exactly.
//!
//! On top of the generator arithmetic the crate builds the derived
//! elements of interest: framing idempotents attached to index pairs, set
//! partitions and ordered set partitions, Jucys-Murphy elements, the joint
//! eigenvalue decomposition into content idempotents, and the intertwining
//! elements. Dedicated check suites confirm the defining relations and the
//! exchange identities between all of these.

mod algebra;
mod config;
mod idempotents;
mod intertwiners;
mod spec;
mod suite;

pub use algebra::YAlgebra;
pub use config::YConfig;
pub use idempotents::ContentZoo;
pub use spec::y_build;
pub use suite::{core_suite, intertwiner_suite, intertwiner_suite_with};

use thiserror::Error;

/// Errors arising while building or querying a Yokonuma-Hecke algebra.
#[derive(Debug, Error)]
pub enum YError {
    /// The requested parameters do not describe a valid algebra, or a
    /// derived construction needs a property the configuration lacks.
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    /// A named-element lookup did not match any known element pattern.
    #[error("unknown element name: {0}")]
    UnknownElement(String),

    #[error(transparent)]
    Alg(#[from] ybt_algcore::AlgError),

    #[error(transparent)]
    Scalar(#[from] ybt_scalar::ScalarError),

    #[error(transparent)]
    Combinat(#[from] ybt_combinat::CombinatError),
}
