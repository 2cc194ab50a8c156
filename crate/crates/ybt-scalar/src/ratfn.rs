use crate::{Poly, PrimeFieldCtx, ScalarError};
use std::fmt;

/// Element of the rational-function field `F_p(qhat)` in canonical form:
/// the denominator is monic and coprime to the numerator, so equality is
/// structural. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds `num/den` and reduces to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let ctx = num.ctx();
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Poly::one(ctx) });
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.divmod(&g)?;
        let (mut den, _) = den.divmod(&g)?;
        let lead_inv = ctx.inv(den.leading_coeff())?;
        num = num.scale(lead_inv);
        den = den.scale(lead_inv);
        Ok(RationalFunction { num, den })
    }

    pub fn zero(ctx: PrimeFieldCtx) -> Self {
        RationalFunction { num: Poly::zero(ctx), den: Poly::one(ctx) }
    }

    pub fn one(ctx: PrimeFieldCtx) -> Self {
        RationalFunction { num: Poly::one(ctx), den: Poly::one(ctx) }
    }

    pub fn constant(ctx: PrimeFieldCtx, c: u64) -> Self {
        RationalFunction { num: Poly::constant(ctx, c), den: Poly::one(ctx) }
    }

    /// The indeterminate `qhat`.
    pub fn gen(ctx: PrimeFieldCtx) -> Self {
        RationalFunction { num: Poly::gen(ctx), den: Poly::one(ctx) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let ctx = p.ctx();
        RationalFunction { num: p, den: Poly::one(ctx) }
    }

    pub fn ctx(&self) -> PrimeFieldCtx {
        self.num.ctx()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `F_p` (denominator 1, numerator constant).
    pub fn as_constant(&self) -> Option<u64> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            None => Some(0),
            Some(0) => Some(self.num.coeffs()[0]),
            Some(_) => None,
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("denominators nonzero")
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("denominators nonzero")
    }

    pub fn inv(&self) -> Result<RationalFunction, ScalarError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Evaluates at `qhat = q0`, failing when the (reduced) denominator
    /// vanishes there: the element lies outside the local ring at `q0`.
    pub fn specialize(&self, q0: u64) -> Result<u64, ScalarError> {
        let ctx = self.ctx();
        let q0 = ctx.reduce(q0);
        let d = self.den.eval(q0);
        if d == 0 {
            return Err(ScalarError::PoleAtSpecialization);
        }
        Ok(ctx.mul(self.num.eval(q0), ctx.inv(d)?))
    }

    /// Total order used only for deterministic tie-breaking: compares the
    /// (numerator, denominator) coefficient lists lexicographically by
    /// degree then value.
    pub fn canonical_cmp(&self, other: &RationalFunction) -> std::cmp::Ordering {
        let key = |r: &RationalFunction| {
            (
                r.num.coeffs().len(),
                r.num.coeffs().to_vec(),
                r.den.coeffs().len(),
                r.den.coeffs().to_vec(),
            )
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({}/{})", self.num, self.den)
    }
}

impl fmt::Display for RationalFunction {
    /// `num/den` with each side an ascending-degree coefficient list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeFieldCtx {
        PrimeFieldCtx::new(7).unwrap()
    }

    #[test]
    fn canonical_form_reduces_common_factors() {
        // (x^2 - 9) / (x - 3) reduces to x + 3 over F_7.
        let num = Poly::from_coeffs(f7(), &[7 - 2, 0, 1]); // x^2 - 9 = x^2 + 5 mod 7
        let den = Poly::from_coeffs(f7(), &[4, 1]); // x - 3 = x + 4 mod 7
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r, RationalFunction::from_poly(Poly::from_coeffs(f7(), &[3, 1])));
        assert!(r.den().is_one());
    }

    #[test]
    fn denominator_made_monic() {
        // 1 / (2x) = 4 / x over F_7 since 2*4 = 1.
        let r = RationalFunction::new(Poly::one(f7()), Poly::from_coeffs(f7(), &[0, 2])).unwrap();
        assert_eq!(r.num(), &Poly::constant(f7(), 4));
        assert_eq!(r.den(), &Poly::gen(f7()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Poly::one(f7()), Poly::zero(f7())),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn inverse_of_zero_rejected() {
        assert_eq!(RationalFunction::zero(f7()).inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn specialize_cancels_before_evaluating() {
        let num = Poly::from_coeffs(f7(), &[7 - 2, 0, 1]); // x^2 - 9
        let den = Poly::from_coeffs(f7(), &[4, 1]); // x - 3
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r.specialize(3), Ok(6)); // (3 + 3) mod 7
    }

    #[test]
    fn specialize_reports_pole() {
        let r = RationalFunction::new(Poly::one(f7()), Poly::from_coeffs(f7(), &[4, 1])).unwrap();
        assert_eq!(r.specialize(3), Err(ScalarError::PoleAtSpecialization));
    }

    #[test]
    fn field_arithmetic_roundtrip() {
        let x = RationalFunction::gen(f7());
        let a = x.add(&RationalFunction::constant(f7(), 3)); // x + 3
        let b = x.sub(&RationalFunction::constant(f7(), 2)); // x - 2
        let prod = a.mul(&b);
        assert_eq!(prod.div(&b).unwrap(), a);
        assert_eq!(a.sub(&a), RationalFunction::zero(f7()));
    }
}
