use crate::{PrimeFieldCtx, ScalarError};
use std::fmt;

/// Dense univariate polynomial over `F_p`, coefficients in ascending degree.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial is
/// the empty list and `deg` is `coeffs.len() - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: PrimeFieldCtx,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero(ctx: PrimeFieldCtx) -> Self {
        Poly { ctx, coeffs: vec![] }
    }

    pub fn constant(ctx: PrimeFieldCtx, c: u64) -> Self {
        let c = ctx.reduce(c);
        if c == 0 {
            Self::zero(ctx)
        } else {
            Poly { ctx, coeffs: vec![c] }
        }
    }

    pub fn one(ctx: PrimeFieldCtx) -> Self {
        Self::constant(ctx, 1)
    }

    /// The indeterminate itself.
    pub fn gen(ctx: PrimeFieldCtx) -> Self {
        Poly { ctx, coeffs: vec![0, 1] }
    }

    /// Builds from ascending-degree coefficients, reducing and trimming.
    pub fn from_coeffs(ctx: PrimeFieldCtx, coeffs: &[u64]) -> Self {
        let mut c: Vec<u64> = coeffs.iter().map(|&x| ctx.reduce(x)).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { ctx, coeffs: c }
    }

    pub fn ctx(&self) -> PrimeFieldCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for (i, item) in c.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *item = self.ctx.add(a, b);
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { ctx: self.ctx, coeffs: c }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ctx);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = self.ctx.add(c[i + j], self.ctx.mul(a, b));
            }
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { ctx: self.ctx, coeffs: c }
    }

    pub fn scale(&self, k: u64) -> Poly {
        let k = self.ctx.reduce(k);
        if k == 0 {
            return Poly::zero(self.ctx);
        }
        Poly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&a| self.ctx.mul(a, k)).collect(),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divmod(&self, div: &Poly) -> Result<(Poly, Poly), ScalarError> {
        if div.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let dlead_inv = self.ctx.inv(div.leading_coeff())?;
        let dd = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return Ok((Poly::zero(self.ctx), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = self.ctx.mul(c, dlead_inv);
            quot[i - dd] = q;
            for (j, &dc) in div.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = self.ctx.sub(rem[idx], self.ctx.mul(q, dc));
            }
        }
        while quot.last() == Some(&0) {
            quot.pop();
        }
        while rem.last() == Some(&0) {
            rem.pop();
        }
        Ok((
            Poly { ctx: self.ctx, coeffs: quot },
            Poly { ctx: self.ctx, coeffs: rem },
        ))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("divisor checked nonzero");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead_inv = self.ctx.inv(a.leading_coeff()).expect("nonzero lead");
            a.scale(lead_inv)
        }
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.ctx.add(self.ctx.mul(acc, x), c);
        }
        acc
    }

    /// Square root of a monic polynomial, when one exists (returned monic).
    ///
    /// For odd characteristic the root is found top-down by matching
    /// coefficients; in characteristic 2 a monic polynomial is a square
    /// exactly when only even-degree terms appear.
    pub fn monic_sqrt(&self) -> Option<Poly> {
        debug_assert!(self.is_monic());
        let n = self.coeffs.len() - 1;
        if n % 2 != 0 {
            return None;
        }
        let h = n / 2;
        if self.ctx.p() == 2 {
            let mut root = vec![0u64; h + 1];
            for (i, &c) in self.coeffs.iter().enumerate() {
                if i % 2 == 1 && c != 0 {
                    return None;
                }
                if i % 2 == 0 {
                    root[i / 2] = c;
                }
            }
            let cand = Poly { ctx: self.ctx, coeffs: root };
            return if cand.mul(&cand) == *self { Some(cand) } else { None };
        }
        let mut root = vec![0u64; h + 1];
        root[h] = 1;
        // Solve for root coefficients from the top: the degree-(h+k) coefficient
        // of root^2 is 2*root[k] plus cross terms root[j]*root[h+k-j] with
        // k < j, h+k-j < h, all already known when k is reached.
        let two_inv = self.ctx.inv(2).expect("odd characteristic");
        for k in (0..h).rev() {
            let mut acc = 0u64;
            for j in k + 1..h {
                let other = h + k - j;
                if other > j {
                    continue;
                }
                let term = self.ctx.mul(root[j], root[other]);
                acc = if other == j {
                    self.ctx.add(acc, term)
                } else {
                    self.ctx.add(acc, self.ctx.add(term, term))
                };
            }
            let target = self.coeffs.get(h + k).copied().unwrap_or(0);
            root[k] = self.ctx.mul(self.ctx.sub(target, acc), two_inv);
        }
        let cand = Poly { ctx: self.ctx, coeffs: root };
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly {
    /// Ascending-degree coefficient list, e.g. `[1,0,3]` for `1 + 3x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "]")
    }
}
