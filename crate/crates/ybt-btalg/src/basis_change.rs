use crate::algebra::BtAlgebra;
use std::collections::BTreeMap;
use std::sync::Arc;
use ybt_algcore::{AlgebraElement, AlgebraHandle, SparseRow};
use ybt_combinat::{mobius, SetPartition};
use ybt_scalar::FieldScalar;

/// Mutually inverse coordinate maps between the classical basis
/// `g_w e(A)` and the normal-form basis `g_w ebar(A)`.
///
/// Both maps are block diagonal over the permutation component: the
/// classical idempotent expands as `e(A) = sum of ebar(B) over B
/// coarsening A`, and the inverse direction applies the Moebius function
/// of the refinement order. In matrix terms the two blocks are the zeta
/// matrix of the order and its inverse.
pub struct BasisChange {
    handle: Arc<AlgebraHandle>,
    parts: Vec<SetPartition>,
    /// `zeta[a]` lists the positions `b` with `A_a` refining `A_b`.
    zeta: Vec<Vec<usize>>,
    /// `mu[a]` lists `(b, mobius(A_a, A_b))` over the same positions.
    mu: Vec<Vec<(usize, FieldScalar)>>,
}

impl BasisChange {
    pub fn new(alg: &BtAlgebra) -> Self {
        let parts = alg.parts().to_vec();
        let ctx = alg.ctx();
        let zeta: Vec<Vec<usize>> = parts
            .iter()
            .map(|a| {
                parts
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.refines(b).expect("same ground set"))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mu = parts
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                zeta[ai]
                    .iter()
                    .map(|&bi| {
                        let m = mobius(a, &parts[bi]).expect("same ground set");
                        (bi, ctx.from_int(m))
                    })
                    .collect()
            })
            .collect();
        BasisChange { handle: alg.handle().clone(), parts, zeta, mu }
    }

    pub fn parts(&self) -> &[SetPartition] {
        &self.parts
    }

    /// Builds the element with the given coordinates in the classical
    /// basis, returned in normal form.
    pub fn from_classical(&self, coords: &[(usize, FieldScalar)]) -> AlgebraElement {
        let pcount = self.parts.len();
        let mut rows: SparseRow = vec![];
        for (key, c) in coords {
            let w_base = key / pcount * pcount;
            for &bi in &self.zeta[key % pcount] {
                rows.push((w_base + bi, c.clone()));
            }
        }
        self.handle.element_from_coords(rows)
    }

    /// Reads off the coordinates of an element in the classical basis.
    pub fn to_classical(&self, x: &AlgebraElement) -> Vec<(usize, FieldScalar)> {
        let pcount = self.parts.len();
        let mut acc: BTreeMap<usize, FieldScalar> = BTreeMap::new();
        for (key, c) in x.iter() {
            let w_base = key / pcount * pcount;
            for (bi, m) in &self.mu[key % pcount] {
                let term = c.mul(m);
                let entry = acc.remove(&(w_base + bi)).map_or(term.clone(), |old| old.add(&term));
                if !entry.is_zero() {
                    acc.insert(w_base + bi, entry);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// The classical basis element `g_w e(A)` at a normal-form index, in
    /// normal form.
    pub fn classical_element(&self, key: usize) -> AlgebraElement {
        let one = self.handle.field().one();
        self.from_classical(&[(key, one)])
    }
}
