//! Set-partition, tableau and residue combinatorics: enumeration, the
//! refinement lattice with its Moebius function, symmetric-group actions,
//! contents of standard multitableaux, and the row-reading constructions
//! that tie tableaux to (ordered) set partitions.
//!
//! Convention used throughout: for set partitions `A` and `B` of the same
//! ground set, `A <= B` (written `A.refines(&B)`) means every block of `B`
//! is a union of blocks of `A` — the *finer* partition is the smaller one.
//! Some texts orient the containment symbol the other way; every lattice
//! computation here (join, Moebius function, zeta matrix) follows the
//! refinement-is-smaller reading.

mod partition;
mod perm;
mod residues;
mod tableau;

pub use partition::{
    bell, enumerate_ordered_set_partitions, enumerate_set_partitions, fubini, mobius,
    OrderedSetPartition, SetPartition,
};
pub use perm::{enumerate_permutations, Permutation};
pub use residues::{
    equivalence_classes, tableau_residue_data, ClassKind, ResidueSeq, TableauClass,
};
pub use tableau::{
    enumerate_multipartitions, enumerate_std, MultiPartition, StdMultiTableau,
};

/// Errors from combinatorial constructors and enumerations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatError {
    /// The blocks do not partition the ground set.
    #[error("blocks do not partition {{1..{0}}}")]
    NotAPartition(usize),
    /// Two objects over different ground sets were combined.
    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    /// Sizes disagree (permutation length vs object size).
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// Enumeration request beyond the configured cap.
    #[error("enumeration for n = {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    /// The array is not a permutation of 1..=n.
    #[error("not a permutation of {{1..{0}}}")]
    NotAPermutation(usize),
    /// Component lists must be weakly decreasing and positive.
    #[error("component {0} is not a partition")]
    NotAPartitionShape(usize),
    /// Tableau entries must fill the shape bijectively and increase along
    /// rows and columns.
    #[error("entries do not form a standard tableau")]
    NotStandard,
}
