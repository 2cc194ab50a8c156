use crate::family::BlockFamily;
use crate::BtError;
use std::collections::HashMap;
use std::sync::Arc;
use ybt_algcore::{AlgebraHandle, AlgebraSpec, SparseRow};
use ybt_combinat::{enumerate_permutations, Permutation};
use ybt_scalar::{FieldCtx, FieldScalar};

/// Normal-form basis `g_w ebar(A)` indexed as `w_idx * (#parts) + p_idx`.
/// The generator alphabet is `g_1 .. g_{n-1}` followed by one letter per
/// block structure `A`, standing for `ebar(A)`.
///
/// Right multiplication needs at most two terms per letter: an `ebar(B)`
/// letter projects by orthogonality, and a `g_a` letter either extends the
/// reduced word or splits through the quadratic relation, whose framing
/// term appears exactly when `a` and `a + 1` share a block.
pub(crate) struct BtSpec<F: BlockFamily> {
    n: usize,
    ctx: FieldCtx,
    q: FieldScalar,
    one: FieldScalar,
    qm1: FieldScalar,
    perms: Vec<Permutation>,
    parts: Vec<F::Part>,
    pcount: usize,
    id_idx: usize,
    /// `sigma_right[a-1][w_idx]`: index of `w * sigma_a`.
    sigma_right: Vec<Vec<usize>>,
    /// `ascent[a-1][w_idx]`: whether `w * sigma_a` is longer than `w`.
    ascent: Vec<Vec<bool>>,
    /// `sigma_part[a-1][p_idx]`: index of `sigma_a(A)`.
    sigma_part: Vec<Vec<usize>>,
    /// `joined[a-1][p_idx]`: whether `a` and `a + 1` share a block of `A`.
    joined: Vec<Vec<bool>>,
    /// Reduced words as generator letters, per permutation.
    words: Vec<Vec<usize>>,
    defect: Option<Defect>,
}

/// A deliberate fault in one action-table row, used to demonstrate that
/// the verification suites notice wrong structure constants.
#[derive(Clone)]
pub(crate) struct Defect {
    pub generator: usize,
    pub key: usize,
    pub factor: FieldScalar,
}

impl<F: BlockFamily> BtSpec<F> {
    pub(crate) fn new(
        n: usize,
        ctx: FieldCtx,
        q: FieldScalar,
        defect: Option<Defect>,
    ) -> Result<Self, BtError> {
        if n == 0 {
            return Err(BtError::DegenerateQ("n must be at least 1".into()));
        }
        if q.same_ctx(&ctx.zero()).is_err() {
            return Err(BtError::DegenerateQ("q lives in a different field".into()));
        }
        if q.is_zero() || q.is_one() {
            return Err(BtError::DegenerateQ(format!(
                "q = {q} makes the quadratic relation collapse"
            )));
        }
        let perms = enumerate_permutations(n);
        let perm_index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.one_line().to_vec(), i))
            .collect();
        let parts = F::enumerate(n)?;
        let part_index: HashMap<F::Part, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let id_idx = perm_index[Permutation::identity(n).one_line()];
        let sigmas: Vec<Permutation> =
            (1..n).map(|a| Permutation::adjacent_transposition(n, a)).collect();
        let sigma_right = sigmas
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|w| perm_index[w.compose(s).expect("same size").one_line()])
                    .collect()
            })
            .collect();
        let ascent = (1..n)
            .map(|a| perms.iter().map(|w| w.apply(a) < w.apply(a + 1)).collect())
            .collect();
        let sigma_part = sigmas
            .iter()
            .map(|s| parts.iter().map(|p| part_index[&F::act(s, p)]).collect())
            .collect();
        let joined = (1..n)
            .map(|a| parts.iter().map(|p| F::joined(p, a)).collect())
            .collect();
        let words = perms
            .iter()
            .map(|w| w.reduced_word().iter().map(|&a| a - 1).collect())
            .collect();
        let one = ctx.one();
        let qm1 = q.sub(&one);
        let pcount = parts.len();
        Ok(BtSpec {
            n,
            ctx,
            q,
            one,
            qm1,
            perms,
            parts,
            pcount,
            id_idx,
            sigma_right,
            ascent,
            sigma_part,
            joined,
            words,
            defect,
        })
    }

    pub(crate) fn parts(&self) -> &[F::Part] {
        &self.parts
    }

    pub(crate) fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

impl<F: BlockFamily> AlgebraSpec for BtSpec<F> {
    fn fingerprint(&self) -> String {
        let defect = match &self.defect {
            None => String::new(),
            Some(d) => format!(";defect={},{},{}", d.generator, d.key, d.factor),
        };
        format!(
            "btalg-{};n={};field={};q={}{}",
            F::KIND,
            self.n,
            self.ctx,
            self.q,
            defect
        )
    }

    fn dim(&self) -> usize {
        self.perms.len() * self.pcount
    }

    fn field(&self) -> FieldCtx {
        self.ctx
    }

    fn unit(&self) -> SparseRow {
        (0..self.pcount)
            .map(|p| (self.id_idx * self.pcount + p, self.one.clone()))
            .collect()
    }

    fn generator_count(&self) -> usize {
        self.n - 1 + self.pcount
    }

    fn generator_name(&self, g: usize) -> String {
        if g < self.n - 1 {
            format!("g_{}", g + 1)
        } else {
            format!("ebar{}", self.parts[g - (self.n - 1)])
        }
    }

    fn right_mul(&self, b: usize, g: usize) -> SparseRow {
        let w_idx = b / self.pcount;
        let p_idx = b % self.pcount;
        let mut row = if g >= self.n - 1 {
            if g - (self.n - 1) == p_idx {
                vec![(b, self.one.clone())]
            } else {
                vec![]
            }
        } else {
            let sp = self.sigma_part[g][p_idx];
            let w2 = self.sigma_right[g][w_idx];
            if self.ascent[g][w_idx] {
                vec![(w2 * self.pcount + sp, self.one.clone())]
            } else {
                let mut r = vec![(w2 * self.pcount + sp, self.q.clone())];
                if self.joined[g][p_idx] {
                    r.push((w_idx * self.pcount + sp, self.qm1.clone()));
                }
                r
            }
        };
        if let Some(d) = &self.defect {
            if d.generator == g && d.key == b {
                for (_, c) in row.iter_mut() {
                    *c = c.mul(&d.factor);
                }
            }
        }
        row
    }

    fn word(&self, b: usize) -> Vec<usize> {
        let w_idx = b / self.pcount;
        let p_idx = b % self.pcount;
        let mut word = self.words[w_idx].clone();
        word.push(self.n - 1 + p_idx);
        word
    }

    fn basis_label(&self, b: usize) -> String {
        let w_idx = b / self.pcount;
        let p_idx = b % self.pcount;
        if w_idx == self.id_idx {
            format!("ebar{}", self.parts[p_idx])
        } else {
            format!("g{}·ebar{}", self.perms[w_idx], self.parts[p_idx])
        }
    }
}

/// Builds the handle for the algebra on unordered blocks.
pub fn bt_build(
    n: usize,
    ctx: FieldCtx,
    q: FieldScalar,
) -> Result<Arc<AlgebraHandle>, BtError> {
    let spec = BtSpec::<crate::family::Unordered>::new(n, ctx, q, None)?;
    Ok(AlgebraHandle::new(Box::new(spec))?)
}

/// Builds the handle for the algebra on ordered blocks.
pub fn btord_build(
    n: usize,
    ctx: FieldCtx,
    q: FieldScalar,
) -> Result<Arc<AlgebraHandle>, BtError> {
    let spec = BtSpec::<crate::family::Ordered>::new(n, ctx, q, None)?;
    Ok(AlgebraHandle::new(Box::new(spec))?)
}
