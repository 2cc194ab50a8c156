use crate::YError;
use ybt_scalar::{quantum_characteristic, FieldCtx, FieldScalar};

/// Parameters pinning down one algebra: the strand count `n`, the framing
/// order `d`, the coefficient field, the deformation scalar `q`, and a fixed
/// root of unity `xi` of exact order `d` used by the framing idempotents.
#[derive(Clone)]
pub struct YConfig {
    n: usize,
    d: u64,
    ctx: FieldCtx,
    q: FieldScalar,
    xi: FieldScalar,
}

impl YConfig {
    /// Validates and freezes a parameter set. Requirements: `n >= 1`,
    /// `d >= 1`, `q` not 0 or 1, `d` coprime to the field characteristic,
    /// `xi` a constant of exact multiplicative order `d`, and both scalars
    /// living in `ctx`.
    pub fn new(
        n: usize,
        d: u64,
        ctx: FieldCtx,
        q: FieldScalar,
        xi: FieldScalar,
    ) -> Result<Self, YError> {
        if n == 0 {
            return Err(YError::ConfigInvalid("n must be at least 1".into()));
        }
        if d == 0 {
            return Err(YError::ConfigInvalid("d must be at least 1".into()));
        }
        let p = ctx.base().p();
        if d % p == 0 {
            return Err(YError::ConfigInvalid(format!(
                "d = {d} must be coprime to the characteristic {p}"
            )));
        }
        if q.same_ctx(&ctx.zero()).is_err() {
            return Err(YError::ConfigInvalid("q lives in a different field".into()));
        }
        if xi.same_ctx(&ctx.zero()).is_err() {
            return Err(YError::ConfigInvalid("xi lives in a different field".into()));
        }
        if q.is_zero() || q.is_one() {
            return Err(YError::ConfigInvalid("q must avoid 0 and 1".into()));
        }
        let Some(x) = xi.as_residue() else {
            return Err(YError::ConfigInvalid("xi must be a field constant".into()));
        };
        if x == 0 || ctx.base().order(x)? != d {
            return Err(YError::ConfigInvalid(format!(
                "xi = {xi} must have exact multiplicative order {d}"
            )));
        }
        Ok(YConfig { n, d, ctx, q, xi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx.clone()
    }

    pub fn q(&self) -> FieldScalar {
        self.q.clone()
    }

    pub fn xi(&self) -> FieldScalar {
        self.xi.clone()
    }

    /// The least `e >= 1` with `1 + q + ... + q^{e-1} = 0`, or 0 when `q`
    /// has infinite multiplicative order (the indeterminate case).
    pub fn quantum_char(&self) -> u64 {
        quantum_characteristic(&self.q).expect("q != 1 was validated")
    }

    /// `q^k` for a signed exponent.
    pub fn q_pow(&self, k: i64) -> FieldScalar {
        self.q.pow_i64(k).expect("q != 0 was validated")
    }

    /// `xi^k` for a signed exponent.
    pub fn xi_pow(&self, k: i64) -> FieldScalar {
        self.xi.pow_i64(k).expect("xi != 0 was validated")
    }
}

impl std::fmt::Debug for YConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "YConfig {{ n: {}, d: {}, field: {}, q: {}, xi: {} }}",
            self.n, self.d, self.ctx, self.q, self.xi
        )
    }
}
