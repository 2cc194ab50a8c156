use ybt_scalar::{FieldCtx, PrimeFieldCtx};
use ybt_yokonuma::{YAlgebra, YConfig};

/// Builds the algebra over `F_p` from integer parameters, panicking on any
/// configuration error. `q` is read as an integer residue; `xi` must be a
/// residue of exact multiplicative order `d`.
pub fn algebra(n: usize, d: u64, p: u64, q: i64, xi: u64) -> YAlgebra {
    let ctx = FieldCtx::Prime(PrimeFieldCtx::new(p).unwrap());
    let cfg = YConfig::new(n, d, ctx, ctx.from_int(q), ctx.from_residue(xi)).unwrap();
    YAlgebra::new(cfg).unwrap()
}
