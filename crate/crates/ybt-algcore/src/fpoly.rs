use crate::{AlgebraElement, AlgError};
use ybt_scalar::{FieldCtx, FieldScalar};

/// A dense univariate polynomial with coefficients in a field context
/// (either a prime field or a rational function field over one). Ascending
/// coefficient order, trailing zeros trimmed, zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct FPoly {
    ctx: FieldCtx,
    coeffs: Vec<FieldScalar>,
}

impl FPoly {
    pub fn zero(ctx: FieldCtx) -> Self {
        FPoly { ctx, coeffs: vec![] }
    }

    pub fn constant(c: FieldScalar) -> Self {
        let ctx = c.ctx();
        FPoly::from_coeffs(ctx, vec![c])
    }

    pub fn one(ctx: FieldCtx) -> Self {
        FPoly::constant(ctx.one())
    }

    /// The monomial `T`.
    pub fn gen(ctx: FieldCtx) -> Self {
        FPoly::from_coeffs(ctx, vec![ctx.zero(), ctx.one()])
    }

    pub fn from_coeffs(ctx: FieldCtx, mut coeffs: Vec<FieldScalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FPoly { ctx, coeffs }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention `deg 0 = 0`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> FieldScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> FieldScalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        FPoly::from_coeffs(self.ctx, coeffs)
    }

    pub fn neg(&self) -> Self {
        FPoly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        if s.is_zero() {
            return FPoly::zero(self.ctx);
        }
        FPoly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        FPoly::from_coeffs(self.ctx, coeffs)
    }

    /// Division with remainder: `self = q * div + r`, `deg r < deg div`.
    pub fn divmod(&self, div: &Self) -> Result<(Self, Self), AlgError> {
        if div.is_zero() {
            return Err(AlgError::ZeroScalar);
        }
        let lead_inv = div.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let dd = div.coeffs.len() - 1;
        if rem.len() <= dd {
            return Ok((FPoly::zero(self.ctx), self.clone()));
        }
        let mut quot = vec![self.ctx.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = rem[k].mul(&lead_inv);
            quot[k - dd] = factor.clone();
            for (j, c) in div.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].sub(&factor.mul(c));
            }
        }
        Ok((
            FPoly::from_coeffs(self.ctx, quot),
            FPoly::from_coeffs(self.ctx, rem),
        ))
    }

    pub fn monic(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.scale(&self.leading().inv()?))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `g = u*self + v*other`
    /// and `g` monic (or zero when both inputs are zero).
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self), AlgError> {
        let ctx = self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (FPoly::one(ctx), FPoly::zero(ctx));
        let (mut v0, mut v1) = (FPoly::zero(ctx), FPoly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return Ok((r0, u0, v0));
        }
        let s = r0.leading().inv()?;
        Ok((r0.scale(&s), u0.scale(&s), v0.scale(&s)))
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &FieldScalar) -> FieldScalar {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation at an algebra element, with the constant term
    /// entering as `c * unit`.
    pub fn eval_at(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgError> {
        let unit = x.handle().unit();
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(&unit.scale(c))?;
        }
        Ok(acc)
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        FPoly { ctx: self.ctx, coeffs }
    }

    /// Number of leading factors of `T`: the valuation at zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl std::fmt::Display for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*T", c)?,
                _ => write!(f, "({})*T^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ybt_scalar::PrimeFieldCtx;

    fn ctx() -> FieldCtx {
        FieldCtx::Prime(PrimeFieldCtx::new(7).unwrap())
    }

    #[test]
    fn divmod_reconstructs() {
        let c = ctx();
        let a = FPoly::from_coeffs(c, vec![c.from_int(1), c.from_int(2), c.from_int(3), c.from_int(1)]);
        let b = FPoly::from_coeffs(c, vec![c.from_int(5), c.from_int(1)]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn xgcd_bezout() {
        let c = ctx();
        // (T-1)(T-2) and (T-1)(T-3) have gcd T-1.
        let t = FPoly::gen(c);
        let f1 = t.sub(&FPoly::constant(c.from_int(1)));
        let f2 = t.sub(&FPoly::constant(c.from_int(2)));
        let f3 = t.sub(&FPoly::constant(c.from_int(3)));
        let a = f1.mul(&f2);
        let b = f1.mul(&f3);
        let (g, u, v) = a.xgcd(&b).unwrap();
        assert_eq!(g, f1);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn eval_matches_expansion() {
        let c = ctx();
        let f = FPoly::from_coeffs(c, vec![c.from_int(3), c.from_int(0), c.from_int(1)]);
        // f(x) = x^2 + 3 at x = 4: 16 + 3 = 19 = 5 mod 7.
        assert_eq!(f.eval(&c.from_int(4)), c.from_int(5));
    }

    #[test]
    fn division_by_zero_rejected() {
        let c = ctx();
        let f = FPoly::one(c);
        assert!(f.divmod(&FPoly::zero(c)).is_err());
    }
}
