use crate::{YConfig, YError};
use std::collections::HashMap;
use std::sync::Arc;
use ybt_algcore::{AlgebraHandle, AlgebraSpec, SparseRow};
use ybt_combinat::{enumerate_permutations, Permutation};
use ybt_scalar::{FieldCtx, FieldScalar};

/// Normal-form basis `t_1^{c_1} ... t_n^{c_n} g_w` indexed as
/// `(sum_a c_a d^a) * n! + index(w)`, with permutations in lexicographic
/// one-line order. The generator alphabet is `t_1..t_n` followed by
/// `g_1..g_{n-1}`.
///
/// Right multiplication stays in normal form with one rule per letter:
/// a `t_m` slides left through `g_w` as `t_{w(m)}`, a `g_a` either extends
/// the reduced word (when the length grows) or splits through the quadratic
/// relation, with the framing idempotent `e_a` expanded into its `d` framing
/// monomials conjugated by the shorter word.
pub(crate) struct YSpec {
    cfg: YConfig,
    perms: Vec<Permutation>,
    perm_index: HashMap<Vec<usize>, usize>,
    fact: usize,
    q: FieldScalar,
    one: FieldScalar,
    /// `(q - 1) / d`, the coefficient of each framing monomial in the
    /// length-decreasing product rule.
    lower: FieldScalar,
}

impl YSpec {
    pub(crate) fn new(cfg: YConfig) -> Result<Self, YError> {
        let ctx = cfg.ctx();
        let perms = enumerate_permutations(cfg.n());
        let perm_index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.one_line().to_vec(), i))
            .collect();
        let fact = perms.len();
        let q = cfg.q();
        let d_inv = ctx.from_residue(cfg.d()).inv()?;
        let lower = q.sub(&ctx.one()).mul(&d_inv);
        Ok(YSpec { cfg, perms, perm_index, fact, q, one: ctx.one(), lower })
    }

    fn n(&self) -> usize {
        self.cfg.n()
    }

    fn d(&self) -> u64 {
        self.cfg.d()
    }

    fn index(&self, c: &[u64], w_idx: usize) -> usize {
        let mut c_index = 0usize;
        for &x in c.iter().rev() {
            c_index = c_index * self.d() as usize + x as usize;
        }
        c_index * self.fact + w_idx
    }

    fn decode(&self, b: usize) -> (Vec<u64>, usize) {
        let w_idx = b % self.fact;
        let mut c_index = b / self.fact;
        let mut c = Vec::with_capacity(self.n());
        for _ in 0..self.n() {
            c.push((c_index % self.d() as usize) as u64);
            c_index /= self.d() as usize;
        }
        (c, w_idx)
    }
}

impl AlgebraSpec for YSpec {
    fn fingerprint(&self) -> String {
        format!(
            "yokonuma;n={};d={};field={};q={};xi={}",
            self.cfg.n(),
            self.cfg.d(),
            self.cfg.ctx(),
            self.cfg.q(),
            self.cfg.xi()
        )
    }

    fn dim(&self) -> usize {
        (self.d() as usize).pow(self.n() as u32) * self.fact
    }

    fn field(&self) -> FieldCtx {
        self.cfg.ctx()
    }

    fn unit(&self) -> SparseRow {
        vec![(0, self.one.clone())]
    }

    fn generator_count(&self) -> usize {
        2 * self.n() - 1
    }

    fn generator_name(&self, g: usize) -> String {
        if g < self.n() {
            format!("t_{}", g + 1)
        } else {
            format!("g_{}", g - self.n() + 1)
        }
    }

    fn right_mul(&self, b: usize, g: usize) -> SparseRow {
        let (c, w_idx) = self.decode(b);
        let ol = self.perms[w_idx].one_line();
        if g < self.n() {
            // t^c g_w t_m = t^(c + delta_{w(m)}) g_w.
            let target = ol[g] - 1;
            let mut c2 = c;
            c2[target] = (c2[target] + 1) % self.d();
            return vec![(self.index(&c2, w_idx), self.one.clone())];
        }
        let a = g - self.n() + 1;
        let mut ol2 = ol.to_vec();
        ol2.swap(a - 1, a);
        let swapped_idx = self.perm_index[&ol2];
        if ol[a - 1] < ol[a] {
            // Length grows: the reduced word extends on the right.
            return vec![(self.index(&c, swapped_idx), self.one.clone())];
        }
        // Length drops: with w = w' s_a reduced, the quadratic relation gives
        // t^c g_w g_a = q t^c g_w' + (q-1)/d sum_r t^(c + r delta_{w'(a)} -
        // r delta_{w'(a+1)}) g_w.
        let pa = ol2[a - 1] - 1;
        let pb = ol2[a] - 1;
        let mut row = Vec::with_capacity(1 + self.d() as usize);
        row.push((self.index(&c, swapped_idx), self.q.clone()));
        for r in 0..self.d() {
            let mut c2 = c.clone();
            c2[pa] = (c2[pa] + r) % self.d();
            c2[pb] = (c2[pb] + self.d() - r) % self.d();
            row.push((self.index(&c2, w_idx), self.lower.clone()));
        }
        row
    }

    fn word(&self, b: usize) -> Vec<usize> {
        let (c, w_idx) = self.decode(b);
        let mut word = vec![];
        for (a, &x) in c.iter().enumerate() {
            for _ in 0..x {
                word.push(a);
            }
        }
        for a in self.perms[w_idx].reduced_word() {
            word.push(self.n() + a - 1);
        }
        word
    }

    fn basis_label(&self, b: usize) -> String {
        let (c, w_idx) = self.decode(b);
        let mut parts = vec![];
        for (a, &x) in c.iter().enumerate() {
            if x == 1 {
                parts.push(format!("t_{}", a + 1));
            } else if x > 1 {
                parts.push(format!("t_{}^{}", a + 1, x));
            }
        }
        if self.perms[w_idx] != Permutation::identity(self.n()) {
            parts.push(format!("g{}", self.perms[w_idx]));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }
}

/// Builds the algebra handle for a validated configuration. The engine's
/// build-time spot checks (unit law, associativity samples) run before the
/// handle is returned.
pub fn y_build(cfg: &YConfig) -> Result<Arc<AlgebraHandle>, YError> {
    Ok(AlgebraHandle::new(Box::new(YSpec::new(cfg.clone())?))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ybt_scalar::PrimeFieldCtx;

    #[test]
    fn index_decode_roundtrip() {
        let ctx = FieldCtx::Prime(PrimeFieldCtx::new(7).unwrap());
        let cfg =
            YConfig::new(3, 3, ctx.clone(), ctx.from_int(2), ctx.from_residue(2)).unwrap();
        let spec = YSpec::new(cfg).unwrap();
        let dim = 27 * 6;
        for b in 0..dim {
            let (c, w_idx) = spec.decode(b);
            assert_eq!(c.len(), 3);
            assert!(c.iter().all(|&x| x < 3));
            assert!(w_idx < 6);
            assert_eq!(spec.index(&c, w_idx), b);
        }
    }
}
