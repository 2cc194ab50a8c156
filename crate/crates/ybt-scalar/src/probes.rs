use crate::{FieldCtx, FieldScalar, RationalFunction, ScalarError};

/// The least `e >= 1` with `1 + q + ... + q^(e-1) = 0`, or 0 when no such
/// `e` exists. For `q != 1` this is the multiplicative order of `q`; a
/// non-constant rational function has none.
pub fn quantum_characteristic(q: &FieldScalar) -> Result<u64, ScalarError> {
    if q.is_one() {
        return Err(ScalarError::DegenerateQ);
    }
    if let Some(c) = q.as_residue() {
        let ctx = q.ctx().base();
        if c == 0 {
            // Geometric sums of 0 are all 1; order search below would loop.
            return Ok(0);
        }
        return ctx.order(c);
    }
    Ok(0)
}

/// A square root of `q`, when one exists in the field. When both roots exist
/// the canonically smaller one is returned, so the choice is deterministic
/// across runs.
pub fn sqrt_in_field(q: &FieldScalar) -> Option<FieldScalar> {
    let ctx = q.ctx();
    match ctx {
        FieldCtx::Prime(p) => {
            let c = q.as_residue().expect("prime context");
            (0..p.p()).find(|&r| p.mul(r, r) == c).map(|r| FieldScalar::prime(p, r))
        }
        FieldCtx::Rational(p) => {
            let r = q.as_rational().expect("rational context");
            if r.is_zero() {
                return Some(ctx.zero());
            }
            // num/den is a square iff both the monic parts are squares and
            // the leading coefficient of the numerator is one.
            let lead = r.num().leading_coeff();
            let lead_root = (0..p.p()).find(|&x| p.mul(x, x) == lead)?;
            let num_monic = r.num().scale(p.inv(lead).expect("nonzero lead"));
            let num_root = num_monic.monic_sqrt()?;
            let den_root = r.den().monic_sqrt()?;
            let root = RationalFunction::new(num_root.scale(lead_root), den_root)
                .expect("denominator root nonzero");
            let a = FieldScalar::rational(root);
            let b = a.neg();
            Some(if a.canonical_cmp(&b).is_le() { a } else { b })
        }
    }
}

/// An element of multiplicative order exactly `d`, when the field has one;
/// the smallest representative is returned. Rational contexts look among
/// constants, since every root of unity in `F_p(qhat)` already lies in `F_p`.
pub fn primitive_root_of_unity(ctx: FieldCtx, d: u64) -> Option<FieldScalar> {
    assert!(d >= 1, "order must be positive");
    let p = ctx.base();
    if (p.p() - 1) % d != 0 {
        return None;
    }
    (1..p.p())
        .find(|&x| p.order(x).expect("nonzero") == d)
        .map(|x| ctx.from_residue(x))
}
