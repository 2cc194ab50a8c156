use ybt_btalg::{BtAlgebra, BtOrdAlgebra};
use ybt_scalar::{FieldCtx, FieldScalar, PrimeFieldCtx};
use ybt_yokonuma::{YAlgebra, YConfig};

pub fn prime_ctx(p: u64) -> FieldCtx {
    FieldCtx::Prime(PrimeFieldCtx::new(p).unwrap())
}

pub fn q_of(ctx: FieldCtx, q: i64) -> FieldScalar {
    ctx.from_int(q)
}

pub fn bt(n: usize, p: u64, q: i64) -> BtAlgebra {
    let ctx = prime_ctx(p);
    BtAlgebra::new(n, ctx, q_of(ctx, q)).unwrap()
}

pub fn btord(n: usize, p: u64, q: i64) -> BtOrdAlgebra {
    let ctx = prime_ctx(p);
    BtOrdAlgebra::new(n, ctx, q_of(ctx, q)).unwrap()
}

#[allow(dead_code)]
pub fn yokonuma(n: usize, d: u64, p: u64, q: i64, xi: u64) -> YAlgebra {
    let ctx = prime_ctx(p);
    let cfg = YConfig::new(n, d, ctx, ctx.from_int(q), ctx.from_residue(xi)).unwrap();
    YAlgebra::new(cfg).unwrap()
}
