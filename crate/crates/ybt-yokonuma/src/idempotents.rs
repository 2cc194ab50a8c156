use crate::{YAlgebra, YError};
use ybt_algcore::{generalized_eigenprojectors, AlgebraElement};
use ybt_combinat::{OrderedSetPartition, SetPartition};
use ybt_scalar::FieldScalar;

/// The joint content eigenprojectors: `e(k)` for the pairs `k = (i, j)`
/// actually realized in the regular module (nonzero projectors only), and
/// the marginal `e(i)` family from the Jucys-Murphy refinement alone.
pub struct ContentZoo {
    /// Realized `(i, j, e(k))`, i-major order over the refinement.
    pub(crate) ik: Vec<(Vec<u64>, Vec<u64>, AlgebraElement)>,
    /// Realized `(i, e(i))`.
    pub(crate) ei: Vec<(Vec<u64>, AlgebraElement)>,
}

impl ContentZoo {
    pub fn realized(&self) -> &[(Vec<u64>, Vec<u64>, AlgebraElement)] {
        &self.ik
    }

    pub fn realized_i(&self) -> &[(Vec<u64>, AlgebraElement)] {
        &self.ei
    }

    pub fn lookup(&self, i: &[u64], j: &[u64]) -> Option<&AlgebraElement> {
        self.ik
            .iter()
            .find(|(vi, vj, _)| vi == i && vj == j)
            .map(|(_, _, e)| e)
    }

    pub fn lookup_i(&self, i: &[u64]) -> Option<&AlgebraElement> {
        self.ei.iter().find(|(vi, _)| vi == i).map(|(_, e)| e)
    }
}

impl YAlgebra {
    /// Exact eigenprojectors of each `t_a` at the listed eigenvalue, in
    /// order `xi^0, ..., xi^{d-1}`.
    fn t_projectors(&self, a: usize) -> Result<Vec<AlgebraElement>, YError> {
        let xic: Vec<FieldScalar> =
            (0..self.cfg().d()).map(|m| self.cfg().xi_pow(m as i64)).collect();
        Ok(generalized_eigenprojectors(&self.t(a), &xic)?)
    }

    /// The full framing eigenprojector family: one entry per `j` in
    /// `(Z/dZ)^n`, lexicographic from the last coordinate, zero entries kept.
    pub fn ej_family(&self) -> Result<&[(Vec<u64>, AlgebraElement)], YError> {
        if self.ej.get().is_none() {
            let n = self.cfg().n();
            let mut family = vec![(vec![], self.unit())];
            for a in 1..=n {
                let projs = self.t_projectors(a)?;
                let mut next = Vec::with_capacity(family.len() * projs.len());
                for (j, e) in &family {
                    for (m, p) in projs.iter().enumerate() {
                        let mut j2 = j.clone();
                        j2.push(m as u64);
                        next.push((j2, e.mul(p)?));
                    }
                }
                family = next;
            }
            let _ = self.ej.set(family);
        }
        Ok(self.ej.get().expect("just filled"))
    }

    /// `e(j)` for one residue vector (zero when unrealized).
    pub fn e_j(&self, j: &[u64]) -> Result<AlgebraElement, YError> {
        self.check_size(j.len())?;
        if let Some(x) = j.iter().find(|&&x| x >= self.cfg().d()) {
            return Err(YError::ConfigInvalid(format!("residue {x} exceeds d")));
        }
        Ok(self
            .ej_family()?
            .iter()
            .find(|(v, _)| v == j)
            .map(|(_, e)| e.clone())
            .expect("every vector in range is enumerated"))
    }

    /// `ebar(A^ord)`: the sum of `e(j)` over residue vectors whose level
    /// sets, read in increasing residue order with empties dropped, give
    /// exactly the ordered blocks of `A^ord`.
    pub fn ebar_ord(&self, a_ord: &OrderedSetPartition) -> Result<AlgebraElement, YError> {
        self.check_size(a_ord.n())?;
        let mut acc = self.zero();
        for (j, e) in self.ej_family()? {
            if ordered_level_sets(j, self.cfg().d()) == a_ord.blocks() {
                acc = acc.add(e)?;
            }
        }
        Ok(acc)
    }

    /// The residue vectors backing `ebar(A)`: level sets exactly the blocks
    /// of `A`, in any residue order.
    pub fn ebar_via_level_sets(&self, a: &SetPartition) -> Result<AlgebraElement, YError> {
        self.check_size(a.n())?;
        let mut acc = self.zero();
        for (j, e) in self.ej_family()? {
            if &SetPartition::from_level_sets(j) == a {
                acc = acc.add(e)?;
            }
        }
        Ok(acc)
    }

    /// The joint content family over all Jucys-Murphy elements and framing
    /// generators. Requires `q` of finite multiplicative order; the
    /// refinement multiplies each surviving projector by the generalized
    /// eigenprojectors of the next `X_a`, then by the exact projectors of
    /// the `t_a`, keeping nonzero products only.
    pub fn content_zoo(&self) -> Result<&ContentZoo, YError> {
        if self.zoo.get().is_none() {
            let zoo = self.compute_zoo()?;
            let _ = self.zoo.set(zoo);
        }
        Ok(self.zoo.get().expect("just filled"))
    }

    fn compute_zoo(&self) -> Result<ContentZoo, YError> {
        let e = self.cfg().quantum_char();
        if e == 0 {
            return Err(YError::ConfigInvalid(
                "content eigenprojectors need q of finite multiplicative order".into(),
            ));
        }
        let n = self.cfg().n();
        let qpow: Vec<FieldScalar> = (0..e).map(|k| self.cfg().q_pow(k as i64)).collect();
        let mut ei: Vec<(Vec<u64>, AlgebraElement)> = vec![(vec![], self.unit())];
        for a in 1..=n {
            let projs = generalized_eigenprojectors(&self.x(a), &qpow)?;
            let mut next = vec![];
            for (i, el) in &ei {
                for (k, p) in projs.iter().enumerate() {
                    let prod = el.mul(p)?;
                    if !prod.is_zero() {
                        let mut i2 = i.clone();
                        i2.push(k as u64);
                        next.push((i2, prod));
                    }
                }
            }
            ei = next;
        }
        let mut ik: Vec<(Vec<u64>, Vec<u64>, AlgebraElement)> = vec![];
        for (i, el) in &ei {
            let mut partial: Vec<(Vec<u64>, AlgebraElement)> = vec![(vec![], el.clone())];
            for a in 1..=n {
                let projs = self.t_projectors(a)?;
                let mut next = vec![];
                for (j, ej) in &partial {
                    for (m, p) in projs.iter().enumerate() {
                        let prod = ej.mul(p)?;
                        if !prod.is_zero() {
                            let mut j2 = j.clone();
                            j2.push(m as u64);
                            next.push((j2, prod));
                        }
                    }
                }
                partial = next;
            }
            for (j, ek) in partial {
                ik.push((i.clone(), j, ek));
            }
        }
        Ok(ContentZoo { ik, ei })
    }

    /// `e(k)` for one `(i, j)` pair, zero when unrealized.
    pub fn e_k(&self, i: &[u64], j: &[u64]) -> Result<AlgebraElement, YError> {
        self.check_size(i.len())?;
        self.check_size(j.len())?;
        Ok(self
            .content_zoo()?
            .lookup(i, j)
            .cloned()
            .unwrap_or_else(|| self.zero()))
    }

    /// `e(i)` for one residue vector, zero when unrealized.
    pub fn e_i(&self, i: &[u64]) -> Result<AlgebraElement, YError> {
        self.check_size(i.len())?;
        Ok(self
            .content_zoo()?
            .lookup_i(i)
            .cloned()
            .unwrap_or_else(|| self.zero()))
    }

    /// `ebar(i, A) = e(i) ebar(A)`.
    pub fn ebar_ia(&self, i: &[u64], a: &SetPartition) -> Result<AlgebraElement, YError> {
        Ok(self.e_i(i)?.mul(&self.ebar_set(a)?)?)
    }

    /// `ebar(i, A^ord) = e(i) ebar(A^ord)`.
    pub fn ebar_ia_ord(
        &self,
        i: &[u64],
        a_ord: &OrderedSetPartition,
    ) -> Result<AlgebraElement, YError> {
        Ok(self.e_i(i)?.mul(&self.ebar_ord(a_ord)?)?)
    }
}

/// Level sets of a residue vector in increasing residue order, empties
/// dropped, as 1-based position blocks.
pub(crate) fn ordered_level_sets(j: &[u64], d: u64) -> Vec<Vec<usize>> {
    let mut blocks = vec![];
    for v in 0..d {
        let block: Vec<usize> =
            (1..=j.len()).filter(|&a| j[a - 1] == v).collect();
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    blocks
}
