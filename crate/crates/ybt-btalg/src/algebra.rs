use crate::family::{BlockFamily, Ordered, Unordered};
use crate::spec::{BtSpec, Defect};
use crate::BtError;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};
use ybt_algcore::{AlgebraElement, AlgebraHandle};
use ybt_combinat::Permutation;
use ybt_scalar::{FieldCtx, FieldScalar};

/// A bt-algebra instance over one block family: generator elements,
/// derived idempotents, and key bookkeeping on top of the shared engine.
pub struct Bt<F: BlockFamily> {
    n: usize,
    q: FieldScalar,
    handle: Arc<AlgebraHandle>,
    perms: Vec<Permutation>,
    parts: Vec<F::Part>,
    perm_index: HashMap<Vec<usize>, usize>,
    part_index: HashMap<F::Part, usize>,
    id_idx: usize,
    g_inv: OnceLock<Vec<AlgebraElement>>,
}

/// The algebra on unordered blocks.
pub type BtAlgebra = Bt<Unordered>;

/// The algebra on ordered blocks.
pub type BtOrdAlgebra = Bt<Ordered>;

impl<F: BlockFamily> Bt<F> {
    pub fn new(n: usize, ctx: FieldCtx, q: FieldScalar) -> Result<Self, BtError> {
        Self::build(n, ctx, q, None)
    }

    /// Builds the algebra with one action-table row deliberately scaled by
    /// `factor`. This exists so tests can demonstrate that the presentation
    /// suites catch wrong structure constants; `generator` and `key` use
    /// the raw indexing reported by `ebar_generator_index` and `key_index`.
    pub fn new_with_scaled_row(
        n: usize,
        ctx: FieldCtx,
        q: FieldScalar,
        generator: usize,
        key: usize,
        factor: FieldScalar,
    ) -> Result<Self, BtError> {
        Self::build(n, ctx, q, Some(Defect { generator, key, factor }))
    }

    fn build(
        n: usize,
        ctx: FieldCtx,
        q: FieldScalar,
        defect: Option<Defect>,
    ) -> Result<Self, BtError> {
        let spec = BtSpec::<F>::new(n, ctx, q.clone(), defect)?;
        let perms = spec.perms().to_vec();
        let parts = spec.parts().to_vec();
        let handle = AlgebraHandle::new(Box::new(spec))?;
        let perm_index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.one_line().to_vec(), i))
            .collect();
        let part_index: HashMap<F::Part, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let id_idx = perm_index[Permutation::identity(n).one_line()];
        Ok(Bt {
            n,
            q,
            handle,
            perms,
            parts,
            perm_index,
            part_index,
            id_idx,
            g_inv: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &FieldScalar {
        &self.q
    }

    pub fn ctx(&self) -> FieldCtx {
        self.handle.field()
    }

    pub fn dim(&self) -> usize {
        self.handle.dim()
    }

    pub fn handle(&self) -> &Arc<AlgebraHandle> {
        &self.handle
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn parts(&self) -> &[F::Part] {
        &self.parts
    }

    pub fn unit(&self) -> AlgebraElement {
        self.handle.unit()
    }

    pub fn zero(&self) -> AlgebraElement {
        self.handle.zero()
    }

    /// The braid-type generator, `1 <= a < n`.
    pub fn g(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n, "g index out of range");
        self.handle.generator_element(a - 1)
    }

    /// Inverse of `g_a`, through the quadratic relation.
    pub fn g_inv(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n, "g index out of range");
        self.g_inv
            .get_or_init(|| {
                let q_inv = self.q.inv().expect("q is invertible");
                let correction = q_inv.sub(&self.ctx().one());
                (1..self.n)
                    .map(|b| {
                        self.g(b)
                            .scale(&q_inv)
                            .add(&self.e_adj(b).scale(&correction))
                            .expect("same handle")
                    })
                    .collect()
            })[a - 1]
            .clone()
    }

    /// The orthogonal block idempotent attached to one block structure.
    pub fn ebar(&self, p: &F::Part) -> Result<AlgebraElement, BtError> {
        let idx = self.part_idx(p)?;
        Ok(self.handle.generator_element(self.n - 1 + idx))
    }

    /// The tie generator `e_a`: the sum of the orthogonal idempotents
    /// whose block structure joins `a` and `a + 1`.
    pub fn e_adj(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n, "e index out of range");
        let one = self.ctx().one();
        let coords = self
            .parts
            .iter()
            .enumerate()
            .filter(|(_, p)| F::joined(p, a))
            .map(|(i, _)| (self.id_idx * self.parts.len() + i, one.clone()))
            .collect();
        self.handle.element_from_coords(coords)
    }

    /// The tie idempotent `e(A)`: the sum of the orthogonal idempotents
    /// over all coarsenings of `A`. Only the unordered family carries the
    /// refinement order, so ordered instances reject this.
    pub fn e_set(&self, p: &F::Part) -> Result<AlgebraElement, BtError> {
        self.part_idx(p)?;
        let coarser = F::coarser_than(p, &self.parts).ok_or_else(|| {
            BtError::UnknownElement(format!(
                "no tie idempotent at {p}: ordered blocks carry no refinement order"
            ))
        })?;
        let one = self.ctx().one();
        let coords = coarser
            .into_iter()
            .map(|i| (self.id_idx * self.parts.len() + i, one.clone()))
            .collect();
        Ok(self.handle.element_from_coords(coords))
    }

    /// The basis element `g_w ebar(A)` built multiplicatively from a
    /// reduced word of `w`.
    pub fn g_w(&self, w: &Permutation) -> Result<AlgebraElement, BtError> {
        if w.n() != self.n {
            return Err(BtError::UnknownElement(format!(
                "permutation {w} acts on {} strands, algebra has {}",
                w.n(),
                self.n
            )));
        }
        let mut acc = self.unit();
        for a in w.reduced_word() {
            acc = acc.mul(&self.g(a)).expect("same handle");
        }
        Ok(acc)
    }

    /// Index of the basis key `g_w ebar(A)`.
    pub fn key_index(&self, w: &Permutation, p: &F::Part) -> Result<usize, BtError> {
        let w_idx = self.perm_index.get(w.one_line()).ok_or_else(|| {
            BtError::UnknownElement(format!("permutation {w} does not act on {} strands", self.n))
        })?;
        Ok(w_idx * self.parts.len() + self.part_idx(p)?)
    }

    /// The `(permutation, block structure)` pair behind a basis index.
    pub fn decompose(&self, b: usize) -> (&Permutation, &F::Part) {
        assert!(b < self.dim(), "basis index out of range");
        (&self.perms[b / self.parts.len()], &self.parts[b % self.parts.len()])
    }

    /// Generator-letter index of `ebar(A)`, for fault injection.
    pub fn ebar_generator_index(&self, p: &F::Part) -> Result<usize, BtError> {
        Ok(self.n - 1 + self.part_idx(p)?)
    }

    /// Looks up an element by display name: `1`, `g_2`, `g_2^-1`, `e_1`,
    /// `ebar{1,2|3}`, `e{1,2|3}`, with parenthesised block lists for the
    /// ordered family.
    pub fn element(&self, name: &str) -> Result<AlgebraElement, BtError> {
        let unknown = || BtError::UnknownElement(name.to_string());
        let trimmed = name.trim();
        if trimmed == "1" {
            return Ok(self.unit());
        }
        if let Some(rest) = trimmed.strip_prefix("g_") {
            let (digits, inverse) = match rest.strip_suffix("^-1") {
                Some(head) => (head, true),
                None => (rest, false),
            };
            let a: usize = digits.parse().map_err(|_| unknown())?;
            if a == 0 || a >= self.n {
                return Err(unknown());
            }
            return Ok(if inverse { self.g_inv(a) } else { self.g(a) });
        }
        if let Some(rest) = trimmed.strip_prefix("e_") {
            let a: usize = rest.parse().map_err(|_| unknown())?;
            if a == 0 || a >= self.n {
                return Err(unknown());
            }
            return Ok(self.e_adj(a));
        }
        if let Some(rest) = trimmed.strip_prefix("ebar") {
            let p = F::parse(rest, self.n).ok_or_else(unknown)?;
            return self.ebar(&p);
        }
        if let Some(rest) = trimmed.strip_prefix('e') {
            let p = F::parse(rest, self.n).ok_or_else(unknown)?;
            return self.e_set(&p);
        }
        Err(unknown())
    }

    fn part_idx(&self, p: &F::Part) -> Result<usize, BtError> {
        self.part_index.get(p).copied().ok_or_else(|| {
            BtError::UnknownElement(format!(
                "no block structure {p} on {} points",
                self.n
            ))
        })
    }
}
