use crate::{YAlgebra, YError};
use ybt_algcore::{invert_unit_plus_nilpotent, AlgebraElement};
use ybt_combinat::{enumerate_ordered_set_partitions, enumerate_set_partitions};

impl YAlgebra {
    /// Solves `(1 - X_a X_{a+1}^{-1}) z = loc` on the corner of the
    /// idempotent `loc`, where the ratio has scalar part `q^delta` with
    /// `delta = i_a - i_{a+1} != 0 mod e`. The scalar part of the operator
    /// is then invertible and the rest is nilpotent, so the finite Neumann
    /// series applies.
    pub(crate) fn ratio_resolvent(
        &self,
        a: usize,
        delta: i64,
        loc: &AlgebraElement,
    ) -> Result<AlgebraElement, YError> {
        let one = self.cfg().ctx().one();
        let c = one.sub(&self.cfg().q_pow(delta));
        let ratio_loc = self.x(a).mul(&self.x_inv(a + 1))?.mul(loc)?;
        let applied = loc.sub(&ratio_loc)?;
        let nilp = applied.sub(&loc.scale(&c))?;
        Ok(invert_unit_plus_nilpotent(&c, &nilp, loc)?)
    }

    /// Solves `(X_a - X_b)^2 z = loc` on the corner of `loc`, where the
    /// difference has scalar part `q^ia - q^ib != 0`.
    pub(crate) fn difference_squared_resolvent(
        &self,
        a: usize,
        b: usize,
        ia: i64,
        ib: i64,
        loc: &AlgebraElement,
    ) -> Result<AlgebraElement, YError> {
        let c0 = self.cfg().q_pow(ia).sub(&self.cfg().q_pow(ib));
        let c = c0.mul(&c0);
        let u = self.x(a).sub(&self.x(b))?.mul(loc)?;
        let nilp = u.mul(&u)?.sub(&loc.scale(&c))?;
        Ok(invert_unit_plus_nilpotent(&c, &nilp, loc)?)
    }

    /// The intertwining element of the strand pair `(a, a+1)`, assembled
    /// over the content family and cached.
    pub fn intertwiner(&self, a: usize) -> Result<AlgebraElement, YError> {
        assert!(a >= 1 && a < self.cfg().n(), "intertwiner index out of range");
        if self.phi.get().is_none() {
            let phis: Vec<AlgebraElement> = (1..self.cfg().n())
                .map(|b| self.intertwiner_via_content(b))
                .collect::<Result<_, _>>()?;
            let _ = self.phi.set(phis);
        }
        Ok(self.phi.get().expect("just filled")[a - 1].clone())
    }

    /// All intertwiners `Phi_1 .. Phi_{n-1}`.
    pub fn intertwiners(&self) -> Result<Vec<AlgebraElement>, YError> {
        (1..self.cfg().n()).map(|a| self.intertwiner(a)).collect()
    }

    /// Assembly over the content family:
    /// `g_a + (1-q) sum (1 - X_a X_{a+1}^{-1})^{-1} e(k)` over realized `k`
    /// with distinct adjacent residues and equal adjacent framings, plus
    /// `sum e(k)` over equal adjacent residues and framings.
    pub fn intertwiner_via_content(&self, a: usize) -> Result<AlgebraElement, YError> {
        let zoo = self.content_zoo()?;
        let one_minus_q = self.cfg().ctx().one().sub(&self.cfg().q());
        let mut acc = self.g(a);
        for (i, j, ek) in zoo.realized() {
            if j[a - 1] != j[a] {
                continue;
            }
            if i[a - 1] != i[a] {
                let delta = i[a - 1] as i64 - i[a] as i64;
                let z = self.ratio_resolvent(a, delta, ek)?;
                acc = acc.add(&z.scale(&one_minus_q))?;
            } else {
                acc = acc.add(ek)?;
            }
        }
        Ok(acc)
    }

    /// The same element assembled over `ebar(i, A)` with `A` running
    /// through set partitions relating `a` and `a+1`.
    pub fn intertwiner_via_set_partitions(&self, a: usize) -> Result<AlgebraElement, YError> {
        let zoo = self.content_zoo()?;
        let one_minus_q = self.cfg().ctx().one().sub(&self.cfg().q());
        let partitions = enumerate_set_partitions(self.cfg().n())?;
        let mut acc = self.g(a);
        for (i, _) in zoo.realized_i() {
            for p in &partitions {
                if !p.same_block(a, a + 1) {
                    continue;
                }
                let eia = self.ebar_ia(i, p)?;
                if eia.is_zero() {
                    continue;
                }
                if i[a - 1] != i[a] {
                    let delta = i[a - 1] as i64 - i[a] as i64;
                    let z = self.ratio_resolvent(a, delta, &eia)?;
                    acc = acc.add(&z.scale(&one_minus_q))?;
                } else {
                    acc = acc.add(&eia)?;
                }
            }
        }
        Ok(acc)
    }

    /// The same element assembled over `ebar(i, A^ord)` with ordered set
    /// partitions.
    pub fn intertwiner_via_ordered(&self, a: usize) -> Result<AlgebraElement, YError> {
        let zoo = self.content_zoo()?;
        let one_minus_q = self.cfg().ctx().one().sub(&self.cfg().q());
        let partitions = enumerate_ordered_set_partitions(self.cfg().n())?;
        let mut acc = self.g(a);
        for (i, _) in zoo.realized_i() {
            for p in &partitions {
                if !p.same_block(a, a + 1) {
                    continue;
                }
                let eia = self.ebar_ia_ord(i, p)?;
                if eia.is_zero() {
                    continue;
                }
                if i[a - 1] != i[a] {
                    let delta = i[a - 1] as i64 - i[a] as i64;
                    let z = self.ratio_resolvent(a, delta, &eia)?;
                    acc = acc.add(&z.scale(&one_minus_q))?;
                } else {
                    acc = acc.add(&eia)?;
                }
            }
        }
        Ok(acc)
    }

    /// The rational coefficient of the squared intertwiner on a distinct-
    /// residue block: `(q X_a - X_{a+1})(X_a - q X_{a+1}) / (X_a - X_{a+1})^2`
    /// applied to `loc`.
    pub(crate) fn six_coefficient(
        &self,
        a: usize,
        ia: i64,
        ib: i64,
        loc: &AlgebraElement,
    ) -> Result<AlgebraElement, YError> {
        let q = self.cfg().q();
        let num1 = self.x(a).scale(&q).sub(&self.x(a + 1))?;
        let num2 = self.x(a).sub(&self.x(a + 1).scale(&q))?;
        let z = self.difference_squared_resolvent(a, a + 1, ia, ib, loc)?;
        Ok(num1.mul(&num2)?.mul(&z)?)
    }

    /// The braid-defect term on a block with `i_a = i_{a+2} != i_{a+1}`:
    /// `(1-q)^2 (X_a X_{a+2} - X_{a+1}^2)(X_a X_{a+1} - q X_{a+1} X_{a+2})
    /// / ((X_a - X_{a+1})^2 (X_{a+1} - X_{a+2})^2)` applied to `loc`.
    pub(crate) fn braid_defect(
        &self,
        a: usize,
        i: &[u64],
        loc: &AlgebraElement,
    ) -> Result<AlgebraElement, YError> {
        let q = self.cfg().q();
        let one_minus_q = self.cfg().ctx().one().sub(&q);
        let scale = one_minus_q.mul(&one_minus_q);
        let (ia, ib, ic) = (i[a - 1] as i64, i[a] as i64, i[a + 1] as i64);
        let num1 = self
            .x(a)
            .mul(&self.x(a + 2))?
            .sub(&self.x(a + 1).mul(&self.x(a + 1))?)?;
        let num2 = self
            .x(a)
            .mul(&self.x(a + 1))?
            .sub(&self.x(a + 1).mul(&self.x(a + 2))?.scale(&q))?;
        let za = self.difference_squared_resolvent(a, a + 1, ia, ib, loc)?;
        let zb = self.difference_squared_resolvent(a + 1, a + 2, ib, ic, loc)?;
        Ok(num1.mul(&num2)?.mul(&za)?.mul(&zb)?.scale(&scale))
    }
}
