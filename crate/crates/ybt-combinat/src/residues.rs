use crate::{
    enumerate_multipartitions, enumerate_std, CombinatError, OrderedSetPartition, SetPartition,
    StdMultiTableau,
};
use std::fmt;

/// A length-`n` residue vector over `Z/eZ`, optionally paired with a second
/// vector over `Z/dZ` (the block-index part).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSeq {
    e: u64,
    i: Vec<u64>,
    j: Option<(u64, Vec<u64>)>,
}

impl ResidueSeq {
    /// Builds the `i`-part from signed integers, reduced mod `e` (`e >= 1`).
    pub fn new(e: u64, entries: &[i64]) -> Self {
        assert!(e >= 1, "modulus must be positive");
        ResidueSeq {
            e,
            i: entries.iter().map(|&x| x.rem_euclid(e as i64) as u64).collect(),
            j: None,
        }
    }

    /// Attaches a `j`-part over `Z/dZ`.
    pub fn with_j(mut self, d: u64, entries: &[i64]) -> Self {
        assert!(d >= 1, "modulus must be positive");
        assert_eq!(entries.len(), self.i.len(), "parts must share the length");
        self.j = Some((d, entries.iter().map(|&x| x.rem_euclid(d as i64) as u64).collect()));
        self
    }

    pub fn n(&self) -> usize {
        self.i.len()
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn i(&self) -> &[u64] {
        &self.i
    }

    pub fn j(&self) -> Option<(&u64, &[u64])> {
        self.j.as_ref().map(|(d, v)| (d, v.as_slice()))
    }

    /// Entry of the `i`-part at 1-based position `a`.
    pub fn i_at(&self, a: usize) -> u64 {
        self.i[a - 1]
    }

    /// Place permutation through a 1-based image array: the entry at
    /// position `a` moves to position `image[a-1]`.
    pub(crate) fn place_permute(&self, image: &[usize]) -> ResidueSeq {
        let mut i = vec![0u64; self.i.len()];
        for (a, &x) in self.i.iter().enumerate() {
            i[image[a] - 1] = x;
        }
        let j = self.j.as_ref().map(|(d, v)| {
            let mut out = vec![0u64; v.len()];
            for (a, &x) in v.iter().enumerate() {
                out[image[a] - 1] = x;
            }
            (*d, out)
        });
        ResidueSeq { e: self.e, i, j }
    }

    /// The set partition grouping equal positions of the `j`-part.
    pub fn j_level_sets(&self) -> Option<SetPartition> {
        self.j.as_ref().map(|(_, v)| SetPartition::from_level_sets(v))
    }
}

impl fmt::Debug for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, x) in self.i.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        if let Some((_, v)) = &self.j {
            write!(f, ";(")?;
            for (idx, x) in v.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The three ways standard multitableaux are grouped into classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    /// Equal full content vectors: the residue vector mod `e` together with
    /// the component vector.
    Content,
    /// Equal residue vector and equal unordered row set partition.
    ResidueSetPartition,
    /// Equal residue vector and equal ordered row set partition.
    ResidueOrderedSetPartition,
}

/// One class of standard multitableaux, keyed by a printable label.
#[derive(Debug, Clone)]
pub struct TableauClass {
    pub key: String,
    pub members: Vec<StdMultiTableau>,
}

fn residue_vector(t: &StdMultiTableau, e: u64) -> Vec<u64> {
    t.q_exponents()
        .iter()
        .map(|&x| x.rem_euclid(e as i64) as u64)
        .collect()
}

/// Groups all of `Std_{d,n}` into classes of the requested kind, for the
/// residue modulus `e >= 1`. Classes appear in first-seen order over the
/// canonical tableau enumeration.
pub fn equivalence_classes(
    kind: ClassKind,
    d: usize,
    n: usize,
    e: u64,
) -> Result<Vec<TableauClass>, CombinatError> {
    assert!(e >= 1, "modulus must be positive");
    let mut classes: Vec<(String, Vec<StdMultiTableau>)> = vec![];
    for shape in enumerate_multipartitions(d, n) {
        for t in enumerate_std(&shape) {
            let i = residue_vector(&t, e);
            let key = match kind {
                ClassKind::Content => {
                    format!("i={:?};p={:?}", i, t.xi_exponents())
                }
                ClassKind::ResidueSetPartition => {
                    let (_, a, _) = t.row_composition();
                    format!("i={:?};A={}", i, a)
                }
                ClassKind::ResidueOrderedSetPartition => {
                    let (_, _, a_ord) = t.row_composition();
                    format!("i={:?};A={}", i, a_ord)
                }
            };
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.push(t),
                None => classes.push((key, vec![t])),
            }
        }
    }
    Ok(classes
        .into_iter()
        .map(|(key, members)| TableauClass { key, members })
        .collect())
}

/// The pairing of a tableau with its class data, used by callers that need
/// the residue/partition key itself rather than a printable label.
pub fn tableau_residue_data(
    t: &StdMultiTableau,
    e: u64,
) -> (Vec<u64>, SetPartition, OrderedSetPartition) {
    let (_, a, a_ord) = t.row_composition();
    (residue_vector(t, e), a, a_ord)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Permutation;

    #[test]
    fn place_permutation_swaps_adjacent_entries() {
        let r = ResidueSeq::new(3, &[1, 2, 0]);
        let s2 = Permutation::adjacent_transposition(3, 2);
        let moved = s2.act_residues(&r).unwrap();
        assert_eq!(moved.i(), &[1, 0, 2]);
    }

    #[test]
    fn place_permutation_is_an_action() {
        let r = ResidueSeq::new(4, &[0, 1, 2, 3]).with_j(2, &[0, 0, 1, 1]);
        for w in crate::enumerate_permutations(4) {
            let once = w.act_residues(&r).unwrap();
            let back = w.inverse().act_residues(&once).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn j_level_sets_group_equal_entries() {
        let r = ResidueSeq::new(3, &[0, 0, 0]).with_j(3, &[2, 2, 0]);
        assert_eq!(r.j_level_sets().unwrap().to_string(), "{1,2|3}");
    }

    #[test]
    fn classes_for_single_entry_are_singletons() {
        let classes = equivalence_classes(ClassKind::Content, 2, 1, 2).unwrap();
        // Two tableaux (entry 1 in either component), distinct components.
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn frozen_class_counts_d2_n2_e2() {
        // Computed by the pairwise-comparison oracle in the integration
        // tests; totals frozen here.
        assert_eq!(equivalence_classes(ClassKind::Content, 2, 2, 2).unwrap().len(), 4);
        assert_eq!(
            equivalence_classes(ClassKind::ResidueOrderedSetPartition, 2, 2, 2).unwrap().len(),
            3
        );
        assert_eq!(
            equivalence_classes(ClassKind::ResidueSetPartition, 2, 2, 2).unwrap().len(),
            2
        );
    }

    #[test]
    fn refinement_chain_of_class_kinds() {
        // Every content class sits inside one ordered class; every ordered
        // class inside one unordered class.
        for (finer, coarser) in [
            (ClassKind::Content, ClassKind::ResidueOrderedSetPartition),
            (ClassKind::ResidueOrderedSetPartition, ClassKind::ResidueSetPartition),
        ] {
            let fine = equivalence_classes(finer, 3, 3, 3).unwrap();
            let coarse = equivalence_classes(coarser, 3, 3, 3).unwrap();
            for fc in &fine {
                let hosts: Vec<usize> = coarse
                    .iter()
                    .enumerate()
                    .filter(|(_, cc)| fc.members.iter().all(|m| cc.members.contains(m)))
                    .map(|(idx, _)| idx)
                    .collect();
                assert_eq!(hosts.len(), 1, "class split across coarser classes");
            }
        }
    }
}
