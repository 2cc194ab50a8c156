use crate::{Poly, PrimeFieldCtx, RationalFunction, ScalarError};
use std::fmt;

/// Which field a scalar lives in: the prime field `F_p` itself, or the
/// rational-function field `F_p(qhat)` over it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Prime(PrimeFieldCtx),
    Rational(PrimeFieldCtx),
}

impl FieldCtx {
    pub fn base(&self) -> PrimeFieldCtx {
        match self {
            FieldCtx::Prime(c) | FieldCtx::Rational(c) => *c,
        }
    }

    pub fn zero(&self) -> FieldScalar {
        match self {
            FieldCtx::Prime(c) => FieldScalar::prime(*c, 0),
            FieldCtx::Rational(c) => FieldScalar::rational(RationalFunction::zero(*c)),
        }
    }

    pub fn one(&self) -> FieldScalar {
        match self {
            FieldCtx::Prime(c) => FieldScalar::prime(*c, 1),
            FieldCtx::Rational(c) => FieldScalar::rational(RationalFunction::one(*c)),
        }
    }

    /// Embeds a base-field residue.
    pub fn from_residue(&self, a: u64) -> FieldScalar {
        match self {
            FieldCtx::Prime(c) => FieldScalar::prime(*c, a),
            FieldCtx::Rational(c) => FieldScalar::rational(RationalFunction::constant(*c, a)),
        }
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, a: i64) -> FieldScalar {
        self.from_residue(self.base().reduce_i64(a))
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Prime(c) => write!(f, "F_{}", c.p()),
            FieldCtx::Rational(c) => write!(f, "F_{}(qhat)", c.p()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Prime(u64),
    Rational(RationalFunction),
}

/// An exact scalar tagged with its field context. Mixing contexts in
/// arithmetic is a bug in the caller and panics; boundary code validates
/// contexts once with [`FieldScalar::same_ctx`] and typed errors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    ctx: FieldCtx,
    repr: Repr,
}

impl FieldScalar {
    pub fn prime(ctx: PrimeFieldCtx, a: u64) -> Self {
        FieldScalar { ctx: FieldCtx::Prime(ctx), repr: Repr::Prime(ctx.reduce(a)) }
    }

    pub fn rational(r: RationalFunction) -> Self {
        FieldScalar { ctx: FieldCtx::Rational(r.ctx()), repr: Repr::Rational(r) }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Checks that two scalars share a context, for boundary validation.
    pub fn same_ctx(&self, other: &FieldScalar) -> Result<(), ScalarError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.ctx.to_string(), other.ctx.to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(a) => *a == 0,
            Repr::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime(a) => *a == 1,
            Repr::Rational(r) => r.is_one(),
        }
    }

    /// The residue when the scalar is (a constant embedded) in `F_p`.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(a) => Some(*a),
            Repr::Rational(r) => r.as_constant(),
        }
    }

    /// The underlying rational function, for rational contexts.
    pub fn as_rational(&self) -> Option<&RationalFunction> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Prime(_) => None,
        }
    }

    fn lift(&self, other: &FieldScalar) -> (FieldCtx, Repr, Repr) {
        assert_eq!(self.ctx, other.ctx, "scalar arithmetic across field contexts");
        (self.ctx, self.repr.clone(), other.repr.clone())
    }

    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        let (ctx, a, b) = self.lift(other);
        let repr = match (a, b) {
            (Repr::Prime(x), Repr::Prime(y)) => Repr::Prime(ctx.base().add(x, y)),
            (Repr::Rational(x), Repr::Rational(y)) => Repr::Rational(x.add(&y)),
            _ => unreachable!("context equality implies matching representations"),
        };
        FieldScalar { ctx, repr }
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldScalar {
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(self.ctx.base().neg(*a)),
            Repr::Rational(r) => Repr::Rational(r.neg()),
        };
        FieldScalar { ctx: self.ctx, repr }
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        let (ctx, a, b) = self.lift(other);
        let repr = match (a, b) {
            (Repr::Prime(x), Repr::Prime(y)) => Repr::Prime(ctx.base().mul(x, y)),
            (Repr::Rational(x), Repr::Rational(y)) => Repr::Rational(x.mul(&y)),
            _ => unreachable!("context equality implies matching representations"),
        };
        FieldScalar { ctx, repr }
    }

    pub fn inv(&self) -> Result<FieldScalar, ScalarError> {
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(self.ctx.base().inv(*a)?),
            Repr::Rational(r) => Repr::Rational(r.inv()?),
        };
        Ok(FieldScalar { ctx: self.ctx, repr })
    }

    pub fn div(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power, negative exponents through the inverse.
    pub fn pow_i64(&self, k: i64) -> Result<FieldScalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.ctx.one();
        let mut b = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b.clone());
            k >>= 1;
        }
        Ok(acc)
    }

    /// Evaluates a rational-context scalar at `qhat = q0`; the identity on
    /// prime-context scalars. A vanishing denominator is reported as
    /// [`ScalarError::PoleAtSpecialization`].
    pub fn specialize(&self, q0: u64) -> Result<FieldScalar, ScalarError> {
        match &self.repr {
            Repr::Prime(a) => Ok(FieldScalar::prime(self.ctx.base(), *a)),
            Repr::Rational(r) => Ok(FieldScalar::prime(r.ctx(), r.specialize(q0)?)),
        }
    }

    /// Deterministic total order for tie-breaking (square-root choices and
    /// report ordering); not a meaningful field order.
    pub fn canonical_cmp(&self, other: &FieldScalar) -> std::cmp::Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => a.cmp(b),
            (Repr::Rational(a), Repr::Rational(b)) => a.canonical_cmp(b),
            (Repr::Prime(_), Repr::Rational(_)) => std::cmp::Ordering::Less,
            (Repr::Rational(_), Repr::Prime(_)) => std::cmp::Ordering::Greater,
        }
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ctx)
    }
}

impl fmt::Display for FieldScalar {
    /// Residues print as decimal integers; rational functions as `num/den`
    /// coefficient lists in ascending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(a) => write!(f, "{a}"),
            Repr::Rational(r) => {
                if let Some(c) = r.as_constant() {
                    write!(f, "{c}")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

/// Convenience: the generator `qhat` of a rational context.
pub fn qhat(ctx: PrimeFieldCtx) -> FieldScalar {
    FieldScalar::rational(RationalFunction::gen(ctx))
}

/// Convenience: a rational scalar from an ascending-degree numerator.
pub fn rational_poly(ctx: PrimeFieldCtx, coeffs: &[u64]) -> FieldScalar {
    FieldScalar::rational(RationalFunction::from_poly(Poly::from_coeffs(ctx, coeffs)))
}
